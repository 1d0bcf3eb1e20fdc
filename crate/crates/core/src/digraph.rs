//! The homology digraph of a finite preordered space or pair: homology
//! enriched with the bilinear pointing relation generated by images of
//! subspace-pair inclusions.
//!
//! The generating quantification over arbitrary subspace pairs is reduced to
//! the formal concepts of the direction preorder; soundness rests on
//! monotonicity of inclusion images and is enforced independently by the
//! brute-force oracle over all subset pairs.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::directional::{
    self, dgvs_isomorphic_check, is_morphism, BilinearRelation, DirectionalGvs,
};
use crate::error::{Error, Result};
use crate::exec::{map_collect, Mode};
use crate::field::Field;
use crate::graded::{GradedLinearMap, GradedSubspace, TensorIndexer};
use crate::homology::{cross_map, HomologyBasis, InducedMap, SpaceHomology};
use crate::linalg::OnlineBasis;
use crate::matrix::MatrixStore;
use crate::space::{FinitePreorderedSpace, PointMap, PointSet, Relation};

/// A formal concept of the direction relation: a maximal pair with
/// `extent × intent` contained in the relation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConceptPair {
    pub extent: PointSet,
    pub intent: PointSet,
}

fn up_set(dir: &Relation, e: &PointSet) -> PointSet {
    let mut f = PointSet::full(dir.len());
    for x in e.iter() {
        f.intersect_with(dir.row(x));
    }
    f
}

fn down_set(transpose: &Relation, f: &PointSet) -> PointSet {
    let mut e = PointSet::full(transpose.len());
    for y in f.iter() {
        e.intersect_with(transpose.row(y));
    }
    e
}

/// All formal concepts of the relation, enumerated by next-closure iteration
/// over the extent closure operator. Deterministic output order.
pub fn enumerate_concepts(dir: &Relation) -> Vec<ConceptPair> {
    let n = dir.len();
    let transpose = dir.transpose();
    let close = |e: &PointSet| down_set(&transpose, &up_set(dir, e));
    let mut out = Vec::new();
    let mut a = close(&PointSet::empty(n));
    loop {
        out.push(ConceptPair {
            intent: up_set(dir, &a),
            extent: a.clone(),
        });
        let mut next = None;
        for i in (0..n).rev() {
            if a.contains(i) {
                a.remove(i);
            } else {
                let mut cand = a.clone();
                cand.insert(i);
                let b = close(&cand);
                if b.minus(&a).iter().all(|j| j >= i) {
                    next = Some(b);
                    break;
                }
            }
        }
        match next {
            Some(b) => a = b,
            None => break,
        }
    }
    out
}

/// A concept pair with the homology images of its two inclusions.
#[derive(Clone, Debug)]
pub struct Witness<F: Field> {
    pub pair: ConceptPair,
    pub image_e: GradedSubspace<F>,
    pub image_f: GradedSubspace<F>,
}

/// Homology of a space or pair together with its pointing relation and the
/// witnesses that generated it.
#[derive(Clone, Debug)]
pub struct HomologyDigraph<F: Field> {
    pub ctx: SpaceHomology<F>,
    pub dgvs: DirectionalGvs<F>,
    pub witnesses: Vec<Witness<F>>,
}

impl<F: Field> HomologyDigraph<F> {
    pub fn basis(&self) -> &HomologyBasis<F> {
        &self.ctx.basis
    }

    pub fn points_to(
        &self,
        field: &F,
        vdeg: i64,
        v: &[F::Elem],
        wdeg: i64,
        w: &[F::Elem],
    ) -> Result<bool> {
        self.dgvs.points_to(field, vdeg, v, wdeg, w)
    }

    /// Pointing between two basis classes.
    pub fn basis_points_to(&self, field: &F, src: (i64, usize), dst: (i64, usize)) -> bool {
        let h = self.ctx.h();
        let unit = |deg: i64, idx: usize| {
            let mut v = vec![field.zero(); h.dim(deg)];
            v[idx] = field.one();
            v
        };
        self.points_to(
            field,
            src.0,
            &unit(src.0, src.1),
            dst.0,
            &unit(dst.0, dst.1),
        )
        .expect("basis vectors conform by construction")
    }

    /// Generating pairs read off the witnesses: all basis pairs of the
    /// witness images. These generate the pointing relation.
    pub fn witness_generators(&self, field: &F) -> directional::RelationGenerators<F> {
        let mut gens = directional::RelationGenerators::new();
        for w in &self.witnesses {
            for di in w.image_e.degrees().collect::<Vec<_>>() {
                let be = w.image_e.block(di).unwrap();
                for dj in w.image_f.degrees().collect::<Vec<_>>() {
                    let bf = w.image_f.block(dj).unwrap();
                    for u in 0..be.basis.cols() {
                        for v in 0..bf.basis.cols() {
                            gens.push(di, be.basis.col(field, u), dj, bf.basis.col(field, v));
                        }
                    }
                }
            }
        }
        gens
    }
}

fn digraph_from_ctx<F: Field>(ctx: SpaceHomology<F>, mode: Mode) -> HomologyDigraph<F> {
    let field = ctx.field.clone();
    let concepts = enumerate_concepts(ctx.space.dir());
    let mut subsets: Vec<PointSet> = Vec::new();
    let mut seen = BTreeSet::new();
    for c in &concepts {
        for s in [&c.extent, &c.intent] {
            if seen.insert(s.clone()) {
                subsets.push(s.clone());
            }
        }
    }
    let images = map_collect(mode, &subsets, |s| ctx.inclusion_image(s));
    let lookup: HashMap<&PointSet, &GradedSubspace<F>> =
        subsets.iter().zip(images.iter()).collect();
    let witnesses: Vec<Witness<F>> = concepts
        .into_iter()
        .map(|pair| Witness {
            image_e: lookup[&pair.extent].clone(),
            image_f: lookup[&pair.intent].clone(),
            pair,
        })
        .collect();

    let h = ctx.h().clone();
    let indexer = TensorIndexer::new(h.clone(), h.clone());
    let mut raw: BTreeMap<i64, Vec<Vec<F::Elem>>> = BTreeMap::new();
    for w in &witnesses {
        for di in w.image_e.degrees().collect::<Vec<_>>() {
            let be = w.image_e.block(di).unwrap();
            for dj in w.image_f.degrees().collect::<Vec<_>>() {
                let bf = w.image_f.block(dj).unwrap();
                for u in 0..be.basis.cols() {
                    let uv = be.basis.col(&field, u);
                    for v in 0..bf.basis.cols() {
                        let wv = bf.basis.col(&field, v);
                        let t = indexer
                            .tensor_coords(&field, di, &uv, dj, &wv)
                            .expect("image vectors conform");
                        raw.entry(di + dj).or_default().push(t);
                    }
                }
            }
        }
    }
    let defining = GradedSubspace::from_generators(&field, indexer.space(), raw);
    let pointing = BilinearRelation {
        space: h.clone(),
        indexer,
        defining,
    };
    HomologyDigraph {
        ctx,
        dgvs: DirectionalGvs::new(h, pointing),
        witnesses,
    }
}

/// Homology digraph of a space.
pub fn homology_digraph<F: Field>(
    field: &F,
    space: &FinitePreorderedSpace,
    mode: Mode,
) -> HomologyDigraph<F> {
    digraph_from_ctx(SpaceHomology::absolute(field, space), mode)
}

/// Homology digraph of a pair `(X, A)`: concepts are enumerated over the
/// direction preorder of `X`, images are taken through `(E, E ∩ A)`.
pub fn homology_digraph_pair<F: Field>(
    field: &F,
    space: &FinitePreorderedSpace,
    subset: PointSet,
    mode: Mode,
) -> HomologyDigraph<F> {
    digraph_from_ctx(SpaceHomology::pair(field, space, subset), mode)
}

/// Literal-definition oracle: iterates every subset pair `(E, F)` with
/// `E × F` inside the direction relation and accumulates the image tensor
/// spans. Exponential; refuses spaces above `cap` points. Retained witnesses
/// are the pairs that actually enlarged the defining space.
pub fn brute_force_digraph<F: Field>(
    field: &F,
    space: &FinitePreorderedSpace,
    subset: Option<PointSet>,
    cap: usize,
    mode: Mode,
) -> Result<HomologyDigraph<F>> {
    let n = space.len();
    if n > cap {
        return Err(Error::OracleCapExceeded { points: n, cap });
    }
    let ctx = match subset {
        Some(a) => SpaceHomology::pair(field, space, a),
        None => SpaceHomology::absolute(field, space),
    };
    let masks: Vec<u64> = (0..(1u64 << n)).collect();
    let to_set = |mask: u64| PointSet::from_indices(n, (0..n).filter(|i| (mask >> i) & 1 == 1));
    let images = map_collect(mode, &masks, |&m| ctx.inclusion_image(&to_set(m)));
    let row_masks: Vec<u64> = (0..n)
        .map(|i| {
            let mut m = 0u64;
            for j in space.dir().row(i).iter() {
                m |= 1 << j;
            }
            m
        })
        .collect();

    let h = ctx.h().clone();
    let indexer = TensorIndexer::new(h.clone(), h.clone());
    let mut online: BTreeMap<i64, OnlineBasis<F>> = BTreeMap::new();
    let mut witnesses = Vec::new();
    let full_mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for e_mask in 0..(1u64 << n) {
        if images[e_mask as usize].is_zero() {
            continue;
        }
        let mut up = full_mask;
        for (i, mask) in row_masks.iter().enumerate() {
            if (e_mask >> i) & 1 == 1 {
                up &= mask;
            }
        }
        for f_mask in 0..(1u64 << n) {
            if f_mask & !up != 0 || images[f_mask as usize].is_zero() {
                continue;
            }
            let image_e = &images[e_mask as usize];
            let image_f = &images[f_mask as usize];
            let mut contributed = false;
            for di in image_e.degrees().collect::<Vec<_>>() {
                let be = image_e.block(di).unwrap();
                for dj in image_f.degrees().collect::<Vec<_>>() {
                    let bf = image_f.block(dj).unwrap();
                    for u in 0..be.basis.cols() {
                        let uv = be.basis.col(field, u);
                        for v in 0..bf.basis.cols() {
                            let wv = bf.basis.col(field, v);
                            let t = indexer
                                .tensor_coords(field, di, &uv, dj, &wv)
                                .expect("image vectors conform");
                            let ob = online
                                .entry(di + dj)
                                .or_insert_with(|| OnlineBasis::new(indexer.dim(di + dj)));
                            if ob.insert(field, &t) {
                                contributed = true;
                            }
                        }
                    }
                }
            }
            if contributed {
                witnesses.push(Witness {
                    pair: ConceptPair {
                        extent: to_set(e_mask),
                        intent: to_set(f_mask),
                    },
                    image_e: image_e.clone(),
                    image_f: image_f.clone(),
                });
            }
        }
    }
    let mut raw: BTreeMap<i64, Vec<Vec<F::Elem>>> = BTreeMap::new();
    for (&deg, ob) in &online {
        let sub = ob.to_subspace(field);
        let cols: Vec<Vec<F::Elem>> = (0..sub.basis.cols())
            .map(|c| sub.basis.col(field, c))
            .collect();
        if !cols.is_empty() {
            raw.insert(deg, cols);
        }
    }
    let defining = GradedSubspace::from_generators(field, indexer.space(), raw);
    let pointing = BilinearRelation {
        space: h.clone(),
        indexer,
        defining,
    };
    Ok(HomologyDigraph {
        ctx,
        dgvs: DirectionalGvs::new(h, pointing),
        witnesses,
    })
}

/// Outcome of a structural verification, with printable detail lines.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub details: Vec<(String, String)>,
}

impl CheckReport {
    fn new(name: &str) -> Self {
        CheckReport {
            name: name.into(),
            passed: true,
            details: Vec::new(),
        }
    }

    fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.details.push((key.into(), value.to_string()));
    }

    fn record(&mut self, key: &str, ok: bool) {
        self.passed &= ok;
        self.push(key, if ok { "pass" } else { "FAIL" });
    }
}

fn defining_dims_line<F: Field>(dgvs: &DirectionalGvs<F>) -> String {
    let parts: Vec<String> = dgvs
        .pointing
        .defining
        .degrees()
        .map(|d| format!("{d}:{}", dgvs.pointing.defining.dim(d)))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}

/// Builds the induced map of a monotone continuous point map between two
/// digraphs and verifies the morphism criterion against both pointing
/// relations. A failed check is an error: it would contradict functoriality
/// and indicates an implementation fault.
pub fn induced_digraph_morphism<F: Field>(
    field: &F,
    f: &PointMap,
    source: &HomologyDigraph<F>,
    target: &HomologyDigraph<F>,
) -> Result<InducedMap<F>> {
    let induced = source.ctx.induced_point_map(&target.ctx, f)?;
    if !is_morphism(field, &induced.map, &source.dgvs, &target.dgvs)? {
        return Err(Error::VerificationFailed(
            "induced map does not carry the source pointing relation into the target".into(),
        ));
    }
    // generator route must agree
    let gens = source.witness_generators(field);
    if !directional::is_morphism_from_generators(field, &induced.map, &gens, &target.dgvs)? {
        return Err(Error::VerificationFailed(
            "generator morphism check disagrees with the full check".into(),
        ));
    }
    Ok(induced)
}

/// Coproduct compatibility: the injection-induced map from the direct sum of
/// the component digraphs to the digraph of the disjoint union is an
/// isomorphism of directional graded vector spaces.
pub fn verify_coproduct<F: Field>(
    field: &F,
    spaces: &[&FinitePreorderedSpace],
    mode: Mode,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("coproduct");
    let (cop, injections) = FinitePreorderedSpace::coproduct(spaces);
    let digraphs: Vec<HomologyDigraph<F>> = spaces
        .iter()
        .map(|s| homology_digraph(field, s, mode))
        .collect();
    let dg_cop = homology_digraph(field, &cop, mode);
    let parts: Vec<&DirectionalGvs<F>> = digraphs.iter().map(|d| &d.dgvs).collect();
    let (sum, sum_injections) = directional::direct_sum(field, &parts);

    // assemble the induced map summandwise
    let mut blocks: BTreeMap<i64, F::Matrix> = BTreeMap::new();
    for &deg in sum.space.dims().keys() {
        blocks.insert(
            deg,
            F::Matrix::zeros(field, dg_cop.ctx.h().dim(deg), sum.space.dim(deg)),
        );
    }
    for ((dg, inj), sum_inj) in digraphs.iter().zip(&injections).zip(&sum_injections) {
        let induced = dg.ctx.induced_point_map(&dg_cop.ctx, inj)?;
        for &deg in dg.ctx.h().dims().keys() {
            let comp = induced.map.block(field, deg);
            let emb = sum_inj.block(field, deg);
            // column of the summand basis vector inside the sum
            for i in 0..comp.cols() {
                let col = (0..emb.rows())
                    .find(|&r| !field.is_zero(&emb.get(field, r, i)))
                    .expect("injection column is nonzero");
                let m = blocks.get_mut(&deg).unwrap();
                for r in 0..comp.rows() {
                    let e = comp.get(field, r, i);
                    if !field.is_zero(&e) {
                        m.set(field, r, col, e);
                    }
                }
            }
        }
    }
    blocks.retain(|_, m| !m.is_zero(field));
    let phi = GradedLinearMap::new(sum.space.clone(), dg_cop.ctx.h().clone(), 0, blocks);

    report.push("components", spaces.len());
    for &deg in sum.space.dims().keys() {
        report.push(
            format!("dim degree {deg}"),
            format!(
                "sum {} vs coproduct {}",
                sum.space.dim(deg),
                dg_cop.ctx.h().dim(deg)
            ),
        );
    }
    report.push("defining dims (sum)", defining_dims_line(&sum));
    report.push(
        "defining dims (coproduct)",
        defining_dims_line(&dg_cop.dgvs),
    );
    report.record("injections induce an isomorphism", phi.invertible(field));
    if report.passed {
        report.record(
            "pointing relations agree",
            dgvs_isomorphic_check(field, &phi, &sum, &dg_cop.dgvs)?,
        );
    }
    Ok(report)
}

/// Excision: removing `U` with closure(U) contained in the interior of `A`
/// leaves the digraph of the pair unchanged up to the inclusion-induced
/// isomorphism. Hypothesis violations are reported as errors distinct from
/// verification failures.
pub fn verify_excision<F: Field>(
    field: &F,
    space: &FinitePreorderedSpace,
    subset: &PointSet,
    excised: &PointSet,
    mode: Mode,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("excision");
    if !excised.is_subset(subset) {
        return Err(Error::HypothesisNotMet(format!(
            "excised set {} is not contained in the subset {}",
            space.render_set(excised),
            space.render_set(subset)
        )));
    }
    let closure = space.closure(excised);
    let interior = space.interior(subset);
    if !closure.is_subset(&interior) {
        return Err(Error::HypothesisNotMet(format!(
            "closure {} is not contained in the interior {}",
            space.render_set(&closure),
            space.render_set(&interior)
        )));
    }
    let keep = excised.complement();
    let cut = space.restrict(&keep)?;
    let keep_idx: Vec<usize> = keep.iter().collect();
    let cut_subset = PointSet::from_indices(
        cut.len(),
        keep_idx
            .iter()
            .enumerate()
            .filter(|(_, &old)| subset.contains(old))
            .map(|(new, _)| new),
    );
    let inclusion = PointMap::new(cut.len(), space.len(), keep_idx);

    let dg_cut = homology_digraph_pair(field, &cut, cut_subset, mode);
    let dg_full = homology_digraph_pair(field, space, subset.clone(), mode);
    let induced = dg_cut.ctx.induced_point_map(&dg_full.ctx, &inclusion)?;

    report.push("excised", space.render_set(excised));
    report.push("defining dims (cut pair)", defining_dims_line(&dg_cut.dgvs));
    report.push(
        "defining dims (full pair)",
        defining_dims_line(&dg_full.dgvs),
    );
    report.record(
        "inclusion induces an isomorphism",
        induced.map.invertible(field),
    );
    if report.passed {
        report.record(
            "pointing relations agree",
            dgvs_isomorphic_check(field, &induced.map, &dg_cut.dgvs, &dg_full.dgvs)?,
        );
    }
    Ok(report)
}

/// The connecting homomorphism of a pair is a morphism of directional graded
/// vector spaces from the pair digraph (degree `-1`) to the subset digraph.
pub fn verify_connecting<F: Field>(
    field: &F,
    space: &FinitePreorderedSpace,
    subset: &PointSet,
    mode: Mode,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("connecting");
    let dg_pair = homology_digraph_pair(field, space, subset.clone(), mode);
    let sub_space = space.restrict(subset)?;
    let dg_sub = homology_digraph(field, &sub_space, mode);
    let (_, delta) = dg_pair.ctx.connecting()?;
    report.push("pair defining dims", defining_dims_line(&dg_pair.dgvs));
    report.push("subset defining dims", defining_dims_line(&dg_sub.dgvs));
    report.record(
        "connecting map is a morphism",
        is_morphism(field, &delta.map, &dg_pair.dgvs, &dg_sub.dgvs)?,
    );
    Ok(report)
}

/// The cross product is an isomorphism of directional graded vector spaces
/// from the tensor of the factor digraphs to the digraph of the product.
pub fn verify_kunneth<F: Field>(
    field: &F,
    x: &FinitePreorderedSpace,
    y: &FinitePreorderedSpace,
    mode: Mode,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("kunneth");
    let dgx = homology_digraph(field, x, mode);
    let dgy = homology_digraph(field, y, mode);
    let (tens, pair_ix) = directional::tensor(field, &dgx.dgvs, &dgy.dgvs);
    let prod = x.product(y);
    let dgp = homology_digraph(field, &prod, mode);
    let cross = cross_map(&dgx.ctx, &dgy.ctx, &dgp.ctx, &pair_ix)?;
    for &deg in tens.space.dims().keys() {
        report.push(
            format!("dim degree {deg}"),
            format!(
                "tensor {} vs product {}",
                tens.space.dim(deg),
                dgp.ctx.h().dim(deg)
            ),
        );
    }
    report.push("defining dims (tensor)", defining_dims_line(&tens));
    report.push("defining dims (product)", defining_dims_line(&dgp.dgvs));
    report.record(
        "cross product is an isomorphism",
        cross.map.invertible(field),
    );
    if report.passed {
        report.record(
            "pointing relations agree",
            dgvs_isomorphic_check(field, &cross.map, &tens, &dgp.dgvs)?,
        );
    }
    Ok(report)
}

/// Relative product compatibility for pairs with open subsets: the relative
/// cross product identifies the tensor of the pair digraphs with the digraph
/// of `(X × Y, A × Y ∪ X × B)`.
pub fn relative_kunneth<F: Field>(
    field: &F,
    x: &FinitePreorderedSpace,
    a: &PointSet,
    y: &FinitePreorderedSpace,
    b: &PointSet,
    mode: Mode,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("relative-kunneth");
    if !x.is_open(a) {
        return Err(Error::HypothesisNotMet(format!(
            "subset {} is not open in the left factor",
            x.render_set(a)
        )));
    }
    if !y.is_open(b) {
        return Err(Error::HypothesisNotMet(format!(
            "subset {} is not open in the right factor",
            y.render_set(b)
        )));
    }
    let dgx = homology_digraph_pair(field, x, a.clone(), mode);
    let dgy = homology_digraph_pair(field, y, b.clone(), mode);
    let (tens, pair_ix) = directional::tensor(field, &dgx.dgvs, &dgy.dgvs);
    let prod = x.product(y);
    let ny = y.len();
    let mut union = PointSet::empty(prod.len());
    for i in 0..x.len() {
        for j in 0..ny {
            if a.contains(i) || b.contains(j) {
                union.insert(i * ny + j);
            }
        }
    }
    let dgp = homology_digraph_pair(field, &prod, union, mode);
    let cross = cross_map(&dgx.ctx, &dgy.ctx, &dgp.ctx, &pair_ix)?;
    report.push("defining dims (tensor)", defining_dims_line(&tens));
    report.push(
        "defining dims (product pair)",
        defining_dims_line(&dgp.dgvs),
    );
    report.record(
        "relative cross product is an isomorphism",
        cross.map.invertible(field),
    );
    if report.passed {
        report.record(
            "pointing relations agree",
            dgvs_isomorphic_check(field, &cross.map, &tens, &dgp.dgvs)?,
        );
    }
    Ok(report)
}
