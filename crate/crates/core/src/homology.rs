//! Exact homology of finite spaces via order complexes: homology bases with
//! representative cycles and projectors, maps induced by inclusions and
//! monotone continuous maps, the connecting homomorphism, and the shuffle
//! cross product.

use std::collections::BTreeMap;

use crate::complex::{ChainComplex, OrderComplex};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graded::{GradedLinearMap, GradedSubspace, GradedVectorSpace, TensorIndexer};
use crate::linalg::{self, OnlineBasis, Subspace};
use crate::matrix::MatrixStore;
use crate::space::{FinitePreorderedSpace, PointMap, PointSet};

/// A homology basis: dimensions with labels, one representative cycle per
/// class, and a projector taking any cycle to its homology coordinates.
#[derive(Clone, Debug)]
pub struct HomologyBasis<F: Field> {
    pub gvs: GradedVectorSpace,
    /// `cycle_reps[n]`: `dim C_n x dim H_n`, columns are representative cycles.
    pub cycle_reps: BTreeMap<i64, F::Matrix>,
    /// `projector[n]`: `dim H_n x dim C_n`; kills boundaries, inverts reps.
    pub projector: BTreeMap<i64, F::Matrix>,
}

/// Computes homology of a chain complex by pivot-first cycle completion: the
/// canonical kernel basis is filtered against the boundary image, accepted
/// columns become the representative cycles, and the projector is read off
/// the inverse of the assembled basis of the chain group.
pub fn homology<F: Field>(chain: &ChainComplex<F>) -> HomologyBasis<F> {
    let field = &chain.field;
    let mut labels = BTreeMap::new();
    let mut cycle_reps = BTreeMap::new();
    let mut projector = BTreeMap::new();
    for (&deg, list) in &chain.basis {
        let dim_c = list.len();
        let cycles = linalg::kernel(field, &chain.boundary_block(deg));
        let mut basis = OnlineBasis::<F>::new(dim_c);
        let mut boundary_cols = Vec::new();
        if let Some(next) = chain.boundary.get(&(deg + 1)) {
            let b_sub = Subspace::from_span(field, next);
            for c in 0..b_sub.basis.cols() {
                let col = b_sub.basis.col(field, c);
                basis.insert(field, &col);
                boundary_cols.push(col);
            }
        }
        let mut reps = Vec::new();
        for c in 0..cycles.cols() {
            let col = cycles.col(field, c);
            if basis.insert(field, &col) {
                reps.push(col);
            }
        }
        if reps.is_empty() {
            continue;
        }
        // complete to a basis of C_n with standard basis vectors
        let mut completion = Vec::new();
        for i in 0..dim_c {
            let mut e = vec![field.zero(); dim_c];
            e[i] = field.one();
            if basis.insert(field, &e) {
                completion.push(e);
            }
        }
        let b = boundary_cols.len();
        let h = reps.len();
        let mut all = boundary_cols;
        all.extend(reps.iter().cloned());
        all.extend(completion);
        let m = F::Matrix::from_cols(field, dim_c, &all);
        let inv = linalg::inverse(field, &m).expect("chain basis assembly must be invertible");
        let mut proj = F::Matrix::zeros(field, h, dim_c);
        for r in 0..h {
            for c in 0..dim_c {
                proj.set(field, r, c, inv.get(field, b + r, c));
            }
        }
        labels.insert(
            deg,
            (0..h).map(|i| format!("H{deg}[{i}]")).collect::<Vec<_>>(),
        );
        cycle_reps.insert(deg, F::Matrix::from_cols(field, dim_c, &reps));
        projector.insert(deg, proj);
    }
    HomologyBasis {
        gvs: GradedVectorSpace::new(labels),
        cycle_reps,
        projector,
    }
}

impl<F: Field> HomologyBasis<F> {
    pub fn betti(&self, degree: i64) -> usize {
        self.gvs.dim(degree)
    }

    pub fn project(&self, field: &F, degree: i64, chain_vec: &[F::Elem]) -> Vec<F::Elem> {
        match self.projector.get(&degree) {
            Some(p) => p.mul_vec(field, chain_vec),
            None => Vec::new(),
        }
    }

    pub fn rep(&self, field: &F, degree: i64, idx: usize) -> Vec<F::Elem> {
        self.cycle_reps
            .get(&degree)
            .map(|m| m.col(field, idx))
            .expect("representative requested for an empty degree")
    }
}

/// What produced an induced map.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MapOrigin {
    Inclusion,
    Monotone,
    Connecting,
    Cross,
}

#[derive(Clone, Debug)]
pub struct InducedMap<F: Field> {
    pub map: GradedLinearMap<F>,
    pub origin: MapOrigin,
}

/// The full homology computation for a (pair of) preordered space(s): the
/// order complex on a carrier vertex set, its chain complex (relative to the
/// optional subset), and the homology basis. The carrier is kept in the
/// ambient space's point indexing so that inclusions are index lookups.
#[derive(Clone, Debug)]
pub struct SpaceHomology<F: Field> {
    pub field: F,
    pub space: FinitePreorderedSpace,
    pub vertices: PointSet,
    pub subset: Option<PointSet>,
    pub complex: OrderComplex,
    pub chain: ChainComplex<F>,
    pub basis: HomologyBasis<F>,
}

impl<F: Field> SpaceHomology<F> {
    pub fn absolute(field: &F, space: &FinitePreorderedSpace) -> Self {
        Self::build(field, space, PointSet::full(space.len()), None)
    }

    pub fn pair(field: &F, space: &FinitePreorderedSpace, subset: PointSet) -> Self {
        Self::build(field, space, PointSet::full(space.len()), Some(subset))
    }

    fn build(
        field: &F,
        space: &FinitePreorderedSpace,
        vertices: PointSet,
        subset: Option<PointSet>,
    ) -> Self {
        if let Some(a) = &subset {
            assert!(
                a.is_subset(&vertices),
                "pair subset must lie in the carrier"
            );
        }
        let complex = OrderComplex::on_vertices(space, &vertices);
        let chain = ChainComplex::build(field, space, &complex, subset.as_ref());
        let basis = homology(&chain);
        SpaceHomology {
            field: field.clone(),
            space: space.clone(),
            vertices,
            subset,
            complex,
            chain,
            basis,
        }
    }

    /// The sub-pair `(E, E ∩ A)` on the same ambient indexing.
    pub fn sub(&self, e: &PointSet) -> Result<SpaceHomology<F>> {
        if !e.is_subset(&self.vertices) {
            return Err(Error::StrayPoint(format!(
                "subset {} is not contained in the carrier",
                self.space.render_set(e)
            )));
        }
        let sub_a = self.subset.as_ref().map(|a| a.intersection(e));
        Ok(Self::build(&self.field, &self.space, e.clone(), sub_a))
    }

    pub fn h(&self) -> &GradedVectorSpace {
        &self.basis.gvs
    }

    /// Index translation for the chain-level inclusion `sub -> sup`.
    fn inclusion_row_map(&self, sub: &SpaceHomology<F>, degree: i64) -> Vec<Option<usize>> {
        let list = sub
            .chain
            .basis
            .get(&degree)
            .map(|l| l.as_slice())
            .unwrap_or(&[]);
        list.iter().map(|s| self.chain.simplex_index(s)).collect()
    }

    /// Chain-level inclusion matrix at one degree.
    fn inclusion_block(&self, sub: &SpaceHomology<F>, degree: i64) -> F::Matrix {
        let field = &self.field;
        let rows = self.chain.dim(degree);
        let map = self.inclusion_row_map(sub, degree);
        let mut m = F::Matrix::zeros(field, rows, map.len());
        for (c, r) in map.iter().enumerate() {
            if let Some(r) = r {
                m.set(field, *r, c, field.one());
            }
        }
        m
    }

    /// Homology map induced by an inclusion of carriers (and subsets). Both
    /// contexts must index into the same ambient space.
    pub fn induced_between(&self, sub: &SpaceHomology<F>) -> InducedMap<F> {
        let field = &self.field;
        assert!(sub.vertices.is_subset(&self.vertices));
        let mut blocks = BTreeMap::new();
        for &deg in sub.h().dims().keys() {
            if self.h().dim(deg) == 0 {
                continue;
            }
            let incl = self.inclusion_block(sub, deg);
            // chain map commutes with boundaries
            let lhs = incl.mul(field, &sub.chain.boundary_block(deg + 1));
            let rhs = self
                .chain
                .boundary_block(deg + 1)
                .mul(field, &self.inclusion_block(sub, deg + 1));
            assert_eq!(lhs, rhs, "inclusion does not commute with the boundary");
            let reps = &sub.basis.cycle_reps[&deg];
            let proj = &self.basis.projector[&deg];
            let block = proj.mul(field, &incl.mul(field, reps));
            if !block.is_zero(field) {
                blocks.insert(deg, block);
            }
        }
        InducedMap {
            map: GradedLinearMap::new(sub.h().clone(), self.h().clone(), 0, blocks),
            origin: MapOrigin::Inclusion,
        }
    }

    /// Builds the sub-pair on `e` and the induced map into this context.
    pub fn induced_inclusion(&self, e: &PointSet) -> Result<(SpaceHomology<F>, InducedMap<F>)> {
        let sub = self.sub(e)?;
        let map = self.induced_between(&sub);
        Ok((sub, map))
    }

    /// Image of `H(E, E ∩ A) -> H(X, A)` inside this context's homology,
    /// computed without assembling the sub-pair's homology basis: the image is
    /// spanned by the projections of the included sub-cycles.
    pub fn inclusion_image(&self, e: &PointSet) -> GradedSubspace<F> {
        let field = &self.field;
        assert!(e.is_subset(&self.vertices));
        let sub_a = self.subset.as_ref().map(|a| a.intersection(e));
        let complex = OrderComplex::on_vertices(&self.space, e);
        let chain = ChainComplex::build(field, &self.space, &complex, sub_a.as_ref());
        let mut raw = BTreeMap::new();
        for (&deg, proj) in &self.basis.projector {
            if chain.dim(deg) == 0 {
                continue;
            }
            let cycles = linalg::kernel(field, &chain.boundary_block(deg));
            if cycles.cols() == 0 {
                continue;
            }
            // scatter sub-chain coordinates into ambient chain coordinates
            let list = chain.basis.get(&deg).map(|l| l.as_slice()).unwrap_or(&[]);
            let rows = self.chain.dim(deg);
            let mut included = F::Matrix::zeros(field, rows, cycles.cols());
            for (sub_row, s) in list.iter().enumerate() {
                let Some(sup_row) = self.chain.simplex_index(s) else {
                    continue;
                };
                for c in 0..cycles.cols() {
                    let v = cycles.get(field, sub_row, c);
                    if !field.is_zero(&v) {
                        included.set(field, sup_row, c, v);
                    }
                }
            }
            let gens = proj.mul(field, &included);
            if !gens.is_zero(field) {
                raw.insert(deg, gens);
            }
        }
        GradedSubspace::from_blocks(field, self.h().clone(), raw)
    }

    /// Homology map induced by a monotone continuous point map into `target`.
    /// Both contexts must have full carriers; in pair mode the map must send
    /// the source subset into the target subset.
    pub fn induced_point_map(
        &self,
        target: &SpaceHomology<F>,
        f: &PointMap,
    ) -> Result<InducedMap<F>> {
        let field = &self.field;
        assert_eq!(
            self.vertices.count(),
            self.space.len(),
            "source carrier must be full"
        );
        assert_eq!(
            target.vertices.count(),
            target.space.len(),
            "target carrier must be full"
        );
        if !self.space.is_monotone_continuous(f, &target.space) {
            return Err(Error::NotMonotone(
                "point map does not preserve both relations".into(),
            ));
        }
        let src_a = self
            .subset
            .clone()
            .unwrap_or_else(|| PointSet::empty(self.space.len()));
        let tgt_a = target
            .subset
            .clone()
            .unwrap_or_else(|| PointSet::empty(target.space.len()));
        if !f.image_of(&src_a).is_subset(&tgt_a) {
            return Err(Error::HypothesisNotMet(
                "point map does not send the source subset into the target subset".into(),
            ));
        }
        // chain map with degenerate collapse
        let mut chain_blocks: BTreeMap<i64, F::Matrix> = BTreeMap::new();
        for (&deg, list) in &self.chain.basis {
            let rows = target.chain.dim(deg);
            let mut m = F::Matrix::zeros(field, rows, list.len());
            for (c, s) in list.iter().enumerate() {
                let image: Vec<usize> = s.iter().map(|&v| f.apply(v)).collect();
                if image.windows(2).any(|w| w[0] == w[1]) {
                    continue; // degenerate image collapses to zero
                }
                if let Some(r) = target.chain.simplex_index(&image) {
                    m.set(field, r, c, field.one());
                }
            }
            chain_blocks.insert(deg, m);
        }
        // commutation with boundaries
        for &deg in self.chain.basis.keys() {
            if self.chain.dim(deg - 1) == 0 && target.chain.dim(deg - 1) == 0 {
                continue;
            }
            let phi_low = chain_blocks.get(&(deg - 1)).cloned().unwrap_or_else(|| {
                F::Matrix::zeros(field, target.chain.dim(deg - 1), self.chain.dim(deg - 1))
            });
            let lhs = phi_low.mul(field, &self.chain.boundary_block(deg));
            let rhs = target
                .chain
                .boundary_block(deg)
                .mul(field, &chain_blocks[&deg]);
            assert_eq!(
                lhs, rhs,
                "induced chain map does not commute with the boundary"
            );
        }
        let mut blocks = BTreeMap::new();
        for &deg in self.h().dims().keys() {
            if target.h().dim(deg) == 0 {
                continue;
            }
            let reps = &self.basis.cycle_reps[&deg];
            let proj = &target.basis.projector[&deg];
            let block = proj.mul(field, &chain_blocks[&deg].mul(field, reps));
            if !block.is_zero(field) {
                blocks.insert(deg, block);
            }
        }
        Ok(InducedMap {
            map: GradedLinearMap::new(self.h().clone(), target.h().clone(), 0, blocks),
            origin: MapOrigin::Monotone,
        })
    }

    /// Connecting homomorphism of the pair: lifts a relative cycle, takes its
    /// boundary, and reads the result in the subset's homology. Returns the
    /// subset's homology context together with the degree `-1` map.
    pub fn connecting(&self) -> Result<(SpaceHomology<F>, InducedMap<F>)> {
        let field = &self.field;
        let a = self
            .subset
            .clone()
            .ok_or_else(|| Error::HypothesisNotMet("connecting needs a pair".into()))?;
        let a_ctx = Self::build(field, &self.space, a.clone(), None);
        let mut blocks = BTreeMap::new();
        for &deg in self.h().dims().keys() {
            let h_dim = self.h().dim(deg);
            let target_dim = a_ctx.h().dim(deg - 1);
            if target_dim == 0 {
                continue;
            }
            let reps = &self.basis.cycle_reps[&deg];
            let mut cols = Vec::new();
            for idx in 0..h_dim {
                let rep = reps.col(field, idx);
                let list = self
                    .chain
                    .basis
                    .get(&deg)
                    .map(|l| l.as_slice())
                    .unwrap_or(&[]);
                let mut in_a = vec![field.zero(); a_ctx.chain.dim(deg - 1)];
                let mut residual = vec![field.zero(); self.chain.dim(deg - 1)];
                for (i, coeff) in rep.iter().enumerate() {
                    if field.is_zero(coeff) {
                        continue;
                    }
                    let simplex = &list[i];
                    let mut sign = field.one();
                    for drop in 0..simplex.len() {
                        let mut face = simplex.clone();
                        face.remove(drop);
                        let contrib = field.mul(coeff, &sign);
                        if face.iter().all(|&v| a.contains(v)) {
                            if let Some(r) = a_ctx.chain.simplex_index(&face) {
                                in_a[r] = field.add(&in_a[r], &contrib);
                            }
                        } else if let Some(r) = self.chain.simplex_index(&face) {
                            residual[r] = field.add(&residual[r], &contrib);
                        }
                        sign = field.neg(&sign);
                    }
                }
                assert!(
                    residual.iter().all(|e| field.is_zero(e)),
                    "representative is not a relative cycle"
                );
                cols.push(a_ctx.basis.project(field, deg - 1, &in_a));
            }
            let m = F::Matrix::from_cols(field, target_dim, &cols);
            if !m.is_zero(field) {
                blocks.insert(deg, m);
            }
        }
        let map = GradedLinearMap::new(self.h().clone(), a_ctx.h().clone(), -1, blocks);
        Ok((
            a_ctx,
            InducedMap {
                map,
                origin: MapOrigin::Connecting,
            },
        ))
    }
}

/// All `(p, q)`-shuffle interleavings of a `p`-simplex of the left factor and
/// a `q`-simplex of the right factor, as staircase chains in the product with
/// the shuffle parity. `right_len` is the point count of the right factor;
/// the product point `(a, b)` sits at index `a * right_len + b`.
pub fn cross_chain(sigma: &[usize], tau: &[usize], right_len: usize) -> Vec<(Vec<usize>, i64)> {
    let p = sigma.len() - 1;
    let q = tau.len() - 1;
    let total = p + q;
    assert!(total < 32, "simplex dimensions out of range");
    let mut out = Vec::new();
    for mask in 0..(1u32 << total) {
        if mask.count_ones() as usize != p {
            continue;
        }
        let mut inversions = 0usize;
        let mut left_steps = 0usize;
        let mut verts = Vec::with_capacity(total + 1);
        let (mut a, mut b) = (0usize, 0usize);
        verts.push(sigma[a] * right_len + tau[b]);
        for pos in 0..total {
            if (mask >> pos) & 1 == 1 {
                // a left step jumps over every right step taken before it
                inversions += pos - left_steps;
                left_steps += 1;
                a += 1;
            } else {
                b += 1;
            }
            verts.push(sigma[a] * right_len + tau[b]);
        }
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        out.push((verts, sign));
    }
    out
}

/// The homology cross product `H(X) ⊗ H(Y) -> H(X × Y)` via the shuffle chain
/// map, also valid for pairs when the product context is relative to
/// `A × Y ∪ X × B`. `indexer` pairs the two homology spaces.
pub fn cross_map<F: Field>(
    xh: &SpaceHomology<F>,
    yh: &SpaceHomology<F>,
    prod: &SpaceHomology<F>,
    indexer: &TensorIndexer,
) -> Result<InducedMap<F>> {
    let field = &xh.field;
    let right_len = yh.space.len();
    assert_eq!(
        prod.space.len(),
        xh.space.len() * right_len,
        "context is not a product"
    );
    let mut blocks: BTreeMap<i64, F::Matrix> = BTreeMap::new();
    let tensor_space = indexer.space();
    for &n in tensor_space.dims().keys() {
        let rows = prod.h().dim(n);
        let cols = tensor_space.dim(n);
        if cols == 0 {
            continue;
        }
        let mut m = F::Matrix::zeros(field, rows, cols);
        for block in indexer.blocks(n) {
            let (i, j) = (block.left_deg, block.right_deg);
            let x_list = xh.chain.basis.get(&i).map(|l| l.as_slice()).unwrap_or(&[]);
            let y_list = yh.chain.basis.get(&j).map(|l| l.as_slice()).unwrap_or(&[]);
            for u in 0..block.left_dim {
                let rep_u = xh.basis.rep(field, i, u);
                for v in 0..block.right_dim {
                    let rep_v = yh.basis.rep(field, j, v);
                    let mut chain_vec = vec![field.zero(); prod.chain.dim(n)];
                    for (si, a) in rep_u.iter().enumerate() {
                        if field.is_zero(a) {
                            continue;
                        }
                        for (tj, b) in rep_v.iter().enumerate() {
                            if field.is_zero(b) {
                                continue;
                            }
                            let coeff = field.mul(a, b);
                            for (verts, sign) in cross_chain(&x_list[si], &y_list[tj], right_len) {
                                let Some(r) = prod.chain.simplex_index(&verts) else {
                                    continue;
                                };
                                let signed = if sign >= 0 {
                                    coeff.clone()
                                } else {
                                    field.neg(&coeff)
                                };
                                chain_vec[r] = field.add(&chain_vec[r], &signed);
                            }
                        }
                    }
                    let h_coords = prod.basis.project(field, n, &chain_vec);
                    let col = indexer.coord(i, j, u, v);
                    for (r, e) in h_coords.iter().enumerate() {
                        if !field.is_zero(e) {
                            m.set(field, r, col, e.clone());
                        }
                    }
                }
            }
        }
        if !m.is_zero(field) {
            blocks.insert(n, m);
        }
    }
    Ok(InducedMap {
        map: GradedLinearMap::new(tensor_space, prod.h().clone(), 0, blocks),
        origin: MapOrigin::Cross,
    })
}

/// Exactness of `A -> B -> C` at `B`: the image of the incoming map equals
/// the kernel of the outgoing map, degreewise in `B`.
pub fn exact_at<F: Field>(
    field: &F,
    incoming: &GradedLinearMap<F>,
    outgoing: &GradedLinearMap<F>,
) -> bool {
    let im = incoming.image(field);
    let ker = outgoing.kernel(field);
    im == ker
}
