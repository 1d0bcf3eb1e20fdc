//! Graded vector spaces, graded subspaces in canonical form, graded linear
//! maps with a degree shift, and tensor-coordinate bookkeeping.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Subspace};
use crate::matrix::MatrixStore;

/// A finitely supported graded vector space: dimension and basis labels per
/// degree. Degrees with dimension zero are not stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GradedVectorSpace {
    dims: BTreeMap<i64, usize>,
    labels: BTreeMap<i64, Vec<String>>,
}

impl GradedVectorSpace {
    pub fn new(labels: BTreeMap<i64, Vec<String>>) -> Self {
        let mut dims = BTreeMap::new();
        let mut kept = BTreeMap::new();
        for (deg, names) in labels {
            if !names.is_empty() {
                dims.insert(deg, names.len());
                kept.insert(deg, names);
            }
        }
        GradedVectorSpace { dims, labels: kept }
    }

    /// Auto-labelled space, used where labels are never shown.
    pub fn from_dims(dims: BTreeMap<i64, usize>) -> Self {
        let labels = dims
            .iter()
            .filter(|(_, &d)| d > 0)
            .map(|(&deg, &d)| (deg, (0..d).map(|i| format!("d{deg}b{i}")).collect()))
            .collect();
        Self::new(labels)
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.dims.keys().copied()
    }

    pub fn dims(&self) -> &BTreeMap<i64, usize> {
        &self.dims
    }

    pub fn labels(&self, degree: i64) -> &[String] {
        self.labels
            .get(&degree)
            .map(|v| v.as_slice())
            .unwrap_or(&[])
    }

    pub fn label(&self, degree: i64, idx: usize) -> String {
        self.labels(degree)
            .get(idx)
            .cloned()
            .unwrap_or_else(|| format!("d{degree}b{idx}"))
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn same_dims(&self, other: &Self) -> bool {
        self.dims == other.dims
    }
}

/// A graded subspace in canonical form: one reduced-column-echelon block per
/// degree, zero blocks omitted. Equality is exact equality of canonical data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedSubspace<F: Field> {
    pub ambient: GradedVectorSpace,
    blocks: BTreeMap<i64, Subspace<F>>,
}

impl<F: Field> GradedSubspace<F> {
    pub fn zero(ambient: GradedVectorSpace) -> Self {
        GradedSubspace {
            ambient,
            blocks: BTreeMap::new(),
        }
    }

    pub fn from_blocks(
        field: &F,
        ambient: GradedVectorSpace,
        raw: BTreeMap<i64, F::Matrix>,
    ) -> Self {
        let mut blocks = BTreeMap::new();
        for (deg, m) in raw {
            assert_eq!(
                m.rows(),
                ambient.dim(deg),
                "generator block height mismatch"
            );
            let sub = Subspace::from_span(field, &m);
            if sub.dim() > 0 {
                blocks.insert(deg, sub);
            }
        }
        GradedSubspace { ambient, blocks }
    }

    pub fn from_generators(
        field: &F,
        ambient: GradedVectorSpace,
        gens: BTreeMap<i64, Vec<Vec<F::Elem>>>,
    ) -> Self {
        let raw = gens
            .into_iter()
            .map(|(deg, cols)| (deg, F::Matrix::from_cols(field, ambient.dim(deg), &cols)))
            .collect();
        Self::from_blocks(field, ambient, raw)
    }

    pub fn full(field: &F, ambient: GradedVectorSpace) -> Self {
        let blocks = ambient
            .dims()
            .iter()
            .map(|(&deg, &d)| (deg, Subspace::full(field, d)))
            .collect();
        GradedSubspace { ambient, blocks }
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.blocks.get(&degree).map(|s| s.dim()).unwrap_or(0)
    }

    pub fn block(&self, degree: i64) -> Option<&Subspace<F>> {
        self.blocks.get(&degree)
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.blocks.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn total_dim(&self) -> usize {
        self.blocks.values().map(|b| b.dim()).sum()
    }

    pub fn contains(&self, field: &F, degree: i64, v: &[F::Elem]) -> Result<bool> {
        if v.len() != self.ambient.dim(degree) {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against ambient dimension {} in degree {degree}",
                v.len(),
                self.ambient.dim(degree)
            )));
        }
        if v.iter().all(|e| field.is_zero(e)) {
            return Ok(true);
        }
        match self.blocks.get(&degree) {
            Some(sub) => Ok(sub.contains(field, v)),
            None => Ok(false),
        }
    }

    pub fn sum(&self, field: &F, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut blocks = self.blocks.clone();
        for (&deg, b) in &other.blocks {
            let merged = match blocks.get(&deg) {
                Some(a) => a.sum(field, b),
                None => b.clone(),
            };
            blocks.insert(deg, merged);
        }
        Ok(GradedSubspace {
            ambient: self.ambient.clone(),
            blocks,
        })
    }

    pub fn intersect(&self, field: &F, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut blocks = BTreeMap::new();
        for (&deg, a) in &self.blocks {
            if let Some(b) = other.blocks.get(&deg) {
                let meet = a.intersect(field, b);
                if meet.dim() > 0 {
                    blocks.insert(deg, meet);
                }
            }
        }
        Ok(GradedSubspace {
            ambient: self.ambient.clone(),
            blocks,
        })
    }

    /// Degreewise containment `self ⊆ other`.
    pub fn subset_of(&self, field: &F, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        for (&deg, a) in &self.blocks {
            for c in 0..a.basis.cols() {
                if !other.contains(field, deg, &a.basis.col(field, c))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if !self.ambient.same_dims(&other.ambient) {
            return Err(Error::AmbientMismatch(format!(
                "{:?} vs {:?}",
                self.ambient.dims(),
                other.ambient.dims()
            )));
        }
        Ok(())
    }
}

/// A graded linear map `source -> target` raising degree by `shift`
/// (the connecting homomorphism uses `shift = -1`). A missing block is zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedLinearMap<F: Field> {
    pub source: GradedVectorSpace,
    pub target: GradedVectorSpace,
    pub shift: i64,
    blocks: BTreeMap<i64, F::Matrix>,
}

impl<F: Field> GradedLinearMap<F> {
    pub fn new(
        source: GradedVectorSpace,
        target: GradedVectorSpace,
        shift: i64,
        blocks: BTreeMap<i64, F::Matrix>,
    ) -> Self {
        for (&deg, m) in &blocks {
            assert_eq!(
                m.cols(),
                source.dim(deg),
                "block width mismatch in degree {deg}"
            );
            assert_eq!(
                m.rows(),
                target.dim(deg + shift),
                "block height mismatch in degree {deg}"
            );
        }
        GradedLinearMap {
            source,
            target,
            shift,
            blocks,
        }
    }

    pub fn zero(source: GradedVectorSpace, target: GradedVectorSpace, shift: i64) -> Self {
        GradedLinearMap {
            source,
            target,
            shift,
            blocks: BTreeMap::new(),
        }
    }

    pub fn identity(field: &F, space: &GradedVectorSpace) -> Self {
        let blocks = space
            .dims()
            .iter()
            .map(|(&deg, &d)| (deg, F::Matrix::identity(field, d)))
            .collect();
        GradedLinearMap {
            source: space.clone(),
            target: space.clone(),
            shift: 0,
            blocks,
        }
    }

    pub fn block(&self, field: &F, degree: i64) -> F::Matrix {
        self.blocks.get(&degree).cloned().unwrap_or_else(|| {
            F::Matrix::zeros(
                field,
                self.target.dim(degree + self.shift),
                self.source.dim(degree),
            )
        })
    }

    pub fn blocks(&self) -> &BTreeMap<i64, F::Matrix> {
        &self.blocks
    }

    pub fn apply(&self, field: &F, degree: i64, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.source.dim(degree));
        self.block(field, degree).mul_vec(field, v)
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, field: &F, other: &Self) -> Self {
        assert!(
            other.target.same_dims(&self.source),
            "composition type mismatch"
        );
        let shift = self.shift + other.shift;
        let mut blocks = BTreeMap::new();
        for &deg in other.source.dims().keys() {
            let mid = deg + other.shift;
            let first = other.block(field, deg);
            let second = self.block(field, mid);
            if second.rows() == 0 || first.cols() == 0 {
                continue;
            }
            let prod = second.mul(field, &first);
            if !prod.is_zero(field) {
                blocks.insert(deg, prod);
            }
        }
        GradedLinearMap::new(other.source.clone(), self.target.clone(), shift, blocks)
    }

    pub fn image(&self, field: &F) -> GradedSubspace<F> {
        let mut raw = BTreeMap::new();
        for (&deg, m) in &self.blocks {
            raw.insert(deg + self.shift, m.clone());
        }
        GradedSubspace::from_blocks(field, self.target.clone(), raw)
    }

    pub fn kernel(&self, field: &F) -> GradedSubspace<F> {
        let mut raw = BTreeMap::new();
        for &deg in self.source.dims().keys() {
            let m = self.block(field, deg);
            let k = linalg::kernel(field, &m);
            if k.cols() > 0 {
                raw.insert(deg, k);
            }
        }
        GradedSubspace::from_blocks(field, self.source.clone(), raw)
    }

    /// Degreewise invertibility: source and target dimensions agree (after
    /// the shift) and every block has full rank.
    pub fn invertible(&self, field: &F) -> bool {
        let shifted: BTreeMap<i64, usize> = self
            .source
            .dims()
            .iter()
            .map(|(&d, &n)| (d + self.shift, n))
            .collect();
        if &shifted != self.target.dims() {
            return false;
        }
        self.source
            .dims()
            .keys()
            .all(|&deg| linalg::inverse(field, &self.block(field, deg)).is_some())
    }
}

/// A block of `(V ⊗ W)_n`: the summand `V_i ⊗ W_j` with `i + j = n` placed at
/// `offset`, laid out row-major in the left index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorBlock {
    pub left_deg: i64,
    pub right_deg: i64,
    pub offset: usize,
    pub left_dim: usize,
    pub right_dim: usize,
}

/// Coordinate layout of `V ⊗ W`. Blocks within one total degree are ordered
/// lexicographically by `(left_deg, right_deg)` and offsets accumulate, so the
/// flat coordinate of a decomposable pair is a pure index computation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorIndexer {
    pub left: GradedVectorSpace,
    pub right: GradedVectorSpace,
    layout: BTreeMap<i64, Vec<TensorBlock>>,
}

impl TensorIndexer {
    pub fn new(left: GradedVectorSpace, right: GradedVectorSpace) -> Self {
        let mut layout: BTreeMap<i64, Vec<TensorBlock>> = BTreeMap::new();
        for (&i, &di) in left.dims() {
            for (&j, &dj) in right.dims() {
                layout.entry(i + j).or_default().push(TensorBlock {
                    left_deg: i,
                    right_deg: j,
                    offset: 0,
                    left_dim: di,
                    right_dim: dj,
                });
            }
        }
        for blocks in layout.values_mut() {
            blocks.sort_by_key(|b| (b.left_deg, b.right_deg));
            let mut off = 0;
            for b in blocks.iter_mut() {
                b.offset = off;
                off += b.left_dim * b.right_dim;
            }
        }
        TensorIndexer {
            left,
            right,
            layout,
        }
    }

    pub fn dim(&self, total_degree: i64) -> usize {
        self.layout
            .get(&total_degree)
            .map(|bs| bs.iter().map(|b| b.left_dim * b.right_dim).sum())
            .unwrap_or(0)
    }

    pub fn blocks(&self, total_degree: i64) -> &[TensorBlock] {
        self.layout
            .get(&total_degree)
            .map(|v| v.as_slice())
            .unwrap_or(&[])
    }

    pub fn block(&self, left_deg: i64, right_deg: i64) -> Option<&TensorBlock> {
        self.layout
            .get(&(left_deg + right_deg))?
            .iter()
            .find(|b| b.left_deg == left_deg && b.right_deg == right_deg)
    }

    /// Flat coordinate of basis pair `(li, ri)` inside `V_i ⊗ W_j`.
    pub fn coord(&self, left_deg: i64, right_deg: i64, li: usize, ri: usize) -> usize {
        let b = self
            .block(left_deg, right_deg)
            .expect("tensor block must exist");
        assert!(li < b.left_dim && ri < b.right_dim);
        b.offset + li * b.right_dim + ri
    }

    /// The tensor space itself, with labels `l*r` built from factor labels.
    pub fn space(&self) -> GradedVectorSpace {
        let mut labels = BTreeMap::new();
        for (&n, blocks) in &self.layout {
            let mut names = Vec::new();
            for b in blocks {
                for li in 0..b.left_dim {
                    for ri in 0..b.right_dim {
                        names.push(format!(
                            "{}*{}",
                            self.left.label(b.left_deg, li),
                            self.right.label(b.right_deg, ri)
                        ));
                    }
                }
            }
            if !names.is_empty() {
                labels.insert(n, names);
            }
        }
        GradedVectorSpace::new(labels)
    }

    /// Coordinates of `v ⊗ w` for homogeneous `v`, `w`.
    pub fn tensor_coords<F: Field>(
        &self,
        field: &F,
        left_deg: i64,
        v: &[F::Elem],
        right_deg: i64,
        w: &[F::Elem],
    ) -> Result<Vec<F::Elem>> {
        if self.left.dim(left_deg) == 0 && !v.is_empty() {
            return Err(Error::DegreeAbsent(left_deg));
        }
        if self.right.dim(right_deg) == 0 && !w.is_empty() {
            return Err(Error::DegreeAbsent(right_deg));
        }
        if v.len() != self.left.dim(left_deg) {
            return Err(Error::DimensionMismatch(format!(
                "left vector length {} in degree {left_deg} (dimension {})",
                v.len(),
                self.left.dim(left_deg)
            )));
        }
        if w.len() != self.right.dim(right_deg) {
            return Err(Error::DimensionMismatch(format!(
                "right vector length {} in degree {right_deg} (dimension {})",
                w.len(),
                self.right.dim(right_deg)
            )));
        }
        let n = left_deg + right_deg;
        let mut out = vec![field.zero(); self.dim(n)];
        if v.is_empty() || w.is_empty() {
            return Ok(out);
        }
        let b = self
            .block(left_deg, right_deg)
            .ok_or(Error::DegreeAbsent(n))?;
        for (li, a) in v.iter().enumerate() {
            if field.is_zero(a) {
                continue;
            }
            for (ri, c) in w.iter().enumerate() {
                if field.is_zero(c) {
                    continue;
                }
                out[b.offset + li * b.right_dim + ri] = field.mul(a, c);
            }
        }
        Ok(out)
    }
}

/// The map `f ⊗ g` between tensor layouts, assembled blockwise.
pub fn tensor_map<F: Field>(
    field: &F,
    f: &GradedLinearMap<F>,
    g: &GradedLinearMap<F>,
    source: &TensorIndexer,
    target: &TensorIndexer,
) -> GradedLinearMap<F> {
    assert!(f.source.same_dims(&source.left) && g.source.same_dims(&source.right));
    assert!(f.target.same_dims(&target.left) && g.target.same_dims(&target.right));
    let shift = f.shift + g.shift;
    let mut blocks = BTreeMap::new();
    let src_space = source.space();
    let tgt_space = target.space();
    for &n in src_space.dims().keys() {
        let rows = tgt_space.dim(n + shift);
        let cols = src_space.dim(n);
        if rows == 0 || cols == 0 {
            continue;
        }
        let mut m = F::Matrix::zeros(field, rows, cols);
        for b in source.blocks(n) {
            let fb = f.block(field, b.left_deg);
            let gb = g.block(field, b.right_deg);
            if fb.rows() == 0 || gb.rows() == 0 {
                continue;
            }
            for li in 0..b.left_dim {
                for ri in 0..b.right_dim {
                    let col = b.offset + li * b.right_dim + ri;
                    for lo in 0..fb.rows() {
                        let a = fb.get(field, lo, li);
                        if field.is_zero(&a) {
                            continue;
                        }
                        for ro in 0..gb.rows() {
                            let c = gb.get(field, ro, ri);
                            if field.is_zero(&c) {
                                continue;
                            }
                            let row =
                                target.coord(b.left_deg + f.shift, b.right_deg + g.shift, lo, ro);
                            m.set(field, row, col, field.mul(&a, &c));
                        }
                    }
                }
            }
        }
        if !m.is_zero(field) {
            blocks.insert(n, m);
        }
    }
    GradedLinearMap::new(src_space, tgt_space, shift, blocks)
}
