//! Randomized and property-based invariants: canonicality of echelon forms,
//! rank identities, tensor coordinate laws, generator/full morphism
//! agreement, functoriality, exactness, and parallel/sequential agreement.

use std::collections::BTreeMap;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dirhom::digraph::{brute_force_digraph, homology_digraph, induced_digraph_morphism};
use dirhom::directional::{
    dgvs_isomorphic_check, is_morphism, is_morphism_from_generators, BilinearRelation,
    DirectionalGvs, RelationGenerators,
};
use dirhom::field::{Field, Gf2, GfPrime, Rationals};
use dirhom::graded::{GradedLinearMap, GradedVectorSpace, TensorIndexer};
use dirhom::homology::{exact_at, SpaceHomology};
use dirhom::linalg::{echelonize, image, kernel, Subspace};
use dirhom::matrix::{DenseMatrix, MatrixStore};
use dirhom::space::{DirMode, FinitePreorderedSpace, PointMap, PointSet, Relation};
use dirhom::Mode;

type BitMatrix = <Gf2 as Field>::Matrix;

fn gf2_matrix(rows: usize, entries: &[bool]) -> BitMatrix {
    let cols = entries.len().checked_div(rows).unwrap_or(0);
    let mut m = BitMatrix::zeros(&Gf2, rows, cols);
    for c in 0..cols {
        for r in 0..rows {
            if entries[c * rows + r] {
                m.set(&Gf2, r, c, true);
            }
        }
    }
    m
}

proptest! {
    /// Randomized column operations preserve the canonical echelon form.
    #[test]
    fn echelon_form_is_span_canonical(
        rows in 1usize..6,
        cols in 1usize..6,
        bits in proptest::collection::vec(any::<bool>(), 0..36),
        ops in proptest::collection::vec((0usize..6, 0usize..6), 0..12),
    ) {
        let mut entries = vec![false; rows * cols];
        for (i, b) in bits.iter().enumerate() {
            if i < entries.len() {
                entries[i] = *b;
            }
        }
        let m = gf2_matrix(rows, &entries);
        let (canon, _, rank) = echelonize(&Gf2, &m);
        // apply random column additions and swaps
        let mut shuffled = m.clone();
        for (a, b) in ops {
            let (a, b) = (a % cols, b % cols);
            if a != b {
                shuffled.col_addmul(&Gf2, a, b, &true);
                shuffled.col_swap(a, b);
            }
        }
        let (canon2, _, rank2) = echelonize(&Gf2, &shuffled);
        prop_assert_eq!(rank, rank2);
        prop_assert_eq!(canon, canon2);
    }

    /// Rank plus nullity equals the column count.
    #[test]
    fn rank_nullity(
        rows in 1usize..6,
        cols in 1usize..6,
        bits in proptest::collection::vec(any::<bool>(), 36),
    ) {
        let entries: Vec<bool> = bits[..rows * cols].to_vec();
        let m = gf2_matrix(rows, &entries);
        let im = image(&Gf2, &m);
        let ker = kernel(&Gf2, &m);
        prop_assert_eq!(im.dim() + ker.cols(), cols);
        // every column of m lies in the image; m kills every kernel column
        for c in 0..cols {
            prop_assert!(im.contains(&Gf2, &m.col(&Gf2, c)));
        }
        for c in 0..ker.cols() {
            let v = m.mul_vec(&Gf2, &ker.col(&Gf2, c));
            prop_assert!(v.iter().all(|b| !b));
        }
    }

    /// The image contains every product `m v`.
    #[test]
    fn image_membership(
        rows in 1usize..5,
        cols in 1usize..5,
        bits in proptest::collection::vec(any::<bool>(), 25),
        vecbits in proptest::collection::vec(any::<bool>(), 5),
    ) {
        let entries: Vec<bool> = bits[..rows * cols].to_vec();
        let m = gf2_matrix(rows, &entries);
        let v: Vec<bool> = vecbits[..cols].to_vec();
        let im = image(&Gf2, &m);
        prop_assert!(im.contains(&Gf2, &m.mul_vec(&Gf2, &v)));
    }

    /// Grassmann dimension identity over GF(5).
    #[test]
    fn grassmann_over_gf5(
        dim in 1usize..5,
        abits in proptest::collection::vec(0u64..5, 25),
        bbits in proptest::collection::vec(0u64..5, 25),
    ) {
        let f = GfPrime::new(5).unwrap();
        let build = |bits: &[u64]| {
            let mut m = DenseMatrix::<u64>::zeros(&f, dim, dim);
            for c in 0..dim {
                for r in 0..dim {
                    m.set(&f, r, c, bits[c * dim + r]);
                }
            }
            Subspace::from_span(&f, &m)
        };
        let a = build(&abits);
        let b = build(&bbits);
        let s = a.sum(&f, &b);
        let i = a.intersect(&f, &b);
        prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
    }

    /// `v ⊗ w = 0` iff `v = 0` or `w = 0`, over a field.
    #[test]
    fn tensor_zero_iff_factor_zero(
        lv in proptest::collection::vec(0u64..7, 3),
        rv in proptest::collection::vec(0u64..7, 2),
    ) {
        let f = GfPrime::new(7).unwrap();
        let left = GradedVectorSpace::from_dims([(0i64, 3usize)].into_iter().collect());
        let right = GradedVectorSpace::from_dims([(1i64, 2usize)].into_iter().collect());
        let ix = TensorIndexer::new(left, right);
        let t = ix.tensor_coords(&f, 0, &lv, 1, &rv).unwrap();
        let t_zero = t.iter().all(|e| f.is_zero(e));
        let v_zero = lv.iter().all(|e| f.is_zero(e));
        let w_zero = rv.iter().all(|e| f.is_zero(e));
        prop_assert_eq!(t_zero, v_zero || w_zero);
    }

    /// Adding generators can only grow the defining space.
    #[test]
    fn generate_is_monotone(
        base in proptest::collection::vec((0u32..8, 0u32..8), 0..4),
        extra in proptest::collection::vec((0u32..8, 0u32..8), 0..3),
    ) {
        let f = Gf2;
        let space = GradedVectorSpace::from_dims([(0i64, 3usize)].into_iter().collect());
        let vec3 = |m: u32| (0..3).map(|i| (m >> i) & 1 == 1).collect::<Vec<bool>>();
        let mut small = RelationGenerators::<Gf2>::new();
        for (a, b) in &base {
            small.push(0, vec3(*a), 0, vec3(*b));
        }
        let mut big = small.clone();
        for (a, b) in &extra {
            big.push(0, vec3(*a), 0, vec3(*b));
        }
        let rel_small = BilinearRelation::generate(&f, &space, &small).unwrap();
        let rel_big = BilinearRelation::generate(&f, &space, &big).unwrap();
        prop_assert!(rel_small.defining.subset_of(&f, &rel_big.defining).unwrap());
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> num::BigRational {
    let f = Rationals;
    f.embed_int(rng.gen_range(-3i64..=3))
}

/// Generator and full morphism checks agree on seeded random data.
#[test]
fn generator_and_full_morphism_checks_agree() {
    let f = Rationals;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let dims: BTreeMap<i64, usize> = [(0i64, 2usize), (1i64, 2usize)].into_iter().collect();
    let space = GradedVectorSpace::from_dims(dims);
    let mut agreements = 0;
    let mut rejections = 0;
    for _ in 0..100 {
        let mut gens = RelationGenerators::<Rationals>::new();
        let n_pairs = rng.gen_range(0..4);
        for _ in 0..n_pairs {
            let dv = rng.gen_range(0..2) as i64;
            let dw = rng.gen_range(0..2) as i64;
            let v: Vec<_> = (0..2).map(|_| random_rational(&mut rng)).collect();
            let w: Vec<_> = (0..2).map(|_| random_rational(&mut rng)).collect();
            gens.push(dv, v, dw, w);
        }
        let a = DirectionalGvs::new(
            space.clone(),
            BilinearRelation::generate(&f, &space, &gens).unwrap(),
        );
        let b = a.clone();
        let mut blocks = BTreeMap::new();
        for (&deg, &d) in space.dims() {
            let mut m = DenseMatrix::zeros(&f, d, d);
            for r in 0..d {
                for c in 0..d {
                    m.set(&f, r, c, random_rational(&mut rng));
                }
            }
            blocks.insert(deg, m);
        }
        let map = GradedLinearMap::new(space.clone(), space.clone(), 0, blocks);
        let full = is_morphism(&f, &map, &a, &b).unwrap();
        let from_gens = is_morphism_from_generators(&f, &map, &gens, &b).unwrap();
        assert_eq!(full, from_gens, "disagreement on seeded case");
        if full {
            agreements += 1;
        } else {
            rejections += 1;
        }
    }
    // the sample must exercise both outcomes
    assert!(
        agreements > 0 && rejections > 0,
        "{agreements} vs {rejections}"
    );
}

/// Regenerating a relation from sampled pointing pairs reproduces it.
#[test]
fn generate_is_a_closure_operator() {
    let f = Gf2;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let space = GradedVectorSpace::from_dims([(0i64, 3usize)].into_iter().collect());
    let vec3 = |m: u32| (0..3).map(|i| (m >> i) & 1 == 1).collect::<Vec<bool>>();
    for _ in 0..20 {
        let mut gens = RelationGenerators::<Gf2>::new();
        for _ in 0..rng.gen_range(0..5) {
            gens.push(0, vec3(rng.gen_range(0..8)), 0, vec3(rng.gen_range(0..8)));
        }
        let rel = BilinearRelation::generate(&f, &space, &gens).unwrap();
        let mut closure = RelationGenerators::<Gf2>::new();
        for a in 0..8u32 {
            for b in 0..8u32 {
                if rel.points_to(&f, 0, &vec3(a), 0, &vec3(b)).unwrap() {
                    closure.push(0, vec3(a), 0, vec3(b));
                }
            }
        }
        let rel2 = BilinearRelation::generate(&f, &space, &closure).unwrap();
        assert_eq!(rel.defining, rel2.defining);
    }
}

/// Random small preordered space (specialization order plus direction).
fn random_space(rng: &mut ChaCha8Rng, n: usize) -> FinitePreorderedSpace {
    loop {
        let mut topo = Relation::empty(n);
        let mut dir = Relation::empty(n);
        for i in 0..n {
            for j in 0..n {
                if i != j && rng.gen_bool(0.25) {
                    topo.set(i, j);
                }
                if i != j && rng.gen_bool(0.25) {
                    dir.set(i, j);
                }
            }
        }
        topo.reflexive_transitive_close();
        dir.reflexive_transitive_close();
        if topo.antisymmetry_violation().is_some() {
            continue;
        }
        let points: Vec<String> = (0..n).map(|i| format!("q{i}")).collect();
        let point_refs: Vec<&str> = points.iter().map(|s| s.as_str()).collect();
        let mut topo_pairs = Vec::new();
        let mut dir_pairs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && topo.contains(i, j) {
                    topo_pairs.push((point_refs[i], point_refs[j]));
                }
                if i != j && dir.contains(i, j) {
                    dir_pairs.push((point_refs[i], point_refs[j]));
                }
            }
        }
        return FinitePreorderedSpace::validate(
            &point_refs,
            &topo_pairs,
            &dir_pairs,
            DirMode::Explicit,
        )
        .unwrap();
    }
}

/// Random monotone continuous map, by rejection with a constant fallback.
fn random_monotone(
    rng: &mut ChaCha8Rng,
    src: &FinitePreorderedSpace,
    tgt: &FinitePreorderedSpace,
) -> PointMap {
    for _ in 0..50 {
        let map: Vec<usize> = (0..src.len())
            .map(|_| rng.gen_range(0..tgt.len()))
            .collect();
        let f = PointMap::new(src.len(), tgt.len(), map);
        if src.is_monotone_continuous(&f, tgt) {
            return f;
        }
    }
    let c = rng.gen_range(0..tgt.len());
    PointMap::new(src.len(), tgt.len(), vec![c; src.len()])
}

/// Functoriality of induced maps on random monotone maps of small spaces.
#[test]
fn functoriality_on_random_maps() {
    let f = Gf2;
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..15 {
        let x = random_space(&mut rng, 4);
        let y = random_space(&mut rng, 4);
        let z = random_space(&mut rng, 4);
        let hx = SpaceHomology::absolute(&f, &x);
        let hy = SpaceHomology::absolute(&f, &y);
        let hz = SpaceHomology::absolute(&f, &z);
        let g = random_monotone(&mut rng, &x, &y);
        let h = random_monotone(&mut rng, &y, &z);
        let g_star = hx.induced_point_map(&hy, &g).unwrap();
        let h_star = hy.induced_point_map(&hz, &h).unwrap();
        let hg_star = hx.induced_point_map(&hz, &h.compose(&g)).unwrap();
        assert_eq!(h_star.map.compose(&f, &g_star.map), hg_star.map);
        // identity is the identity
        let id = hx
            .induced_point_map(&hx, &PointMap::identity(x.len()))
            .unwrap();
        assert_eq!(id.map, GradedLinearMap::identity(&f, hx.h()));
    }
}

/// Long exact sequence of random small pairs is exact at every joint.
#[test]
fn long_exact_sequence_on_random_pairs() {
    let f = GfPrime::new(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..10 {
        let x = random_space(&mut rng, 5);
        let mut a = PointSet::empty(5);
        for i in 0..5 {
            if rng.gen_bool(0.4) {
                a.insert(i);
            }
        }
        if a.is_empty() {
            a.insert(rng.gen_range(0..5));
        }
        let pair = SpaceHomology::pair(&f, &x, a.clone());
        let x_ctx = SpaceHomology::absolute(&f, &x);
        let (a_ctx, delta) = pair.connecting().unwrap();
        let i_map = x_ctx.induced_between(&a_ctx);
        let j_map = pair.induced_between(&x_ctx);
        assert!(exact_at(&f, &i_map.map, &j_map.map));
        assert!(exact_at(&f, &j_map.map, &delta.map));
        assert!(exact_at(&f, &delta.map, &i_map.map));
    }
}

/// Betti numbers agree across fields on random small spaces (no torsion at
/// this scale in the fixture class we generate).
#[test]
fn betti_numbers_agree_across_fields() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..10 {
        let x = random_space(&mut rng, 5);
        let h2 = SpaceHomology::absolute(&Gf2, &x);
        let h3 = SpaceHomology::absolute(&GfPrime::new(3).unwrap(), &x);
        let hq = SpaceHomology::absolute(&Rationals, &x);
        for deg in 0..5 {
            assert_eq!(
                h2.basis.betti(deg),
                hq.basis.betti(deg),
                "deg {deg} of {x:?}"
            );
            assert_eq!(
                h3.basis.betti(deg),
                hq.basis.betti(deg),
                "deg {deg} of {x:?}"
            );
        }
    }
}

/// The digraph construction is invariant under point relabeling.
#[test]
fn digraph_invariance_under_random_relabeling() {
    let f = Gf2;
    let mut rng = ChaCha8Rng::seed_from_u64(57);
    for _ in 0..8 {
        let x = random_space(&mut rng, 5);
        // random permutation
        let mut perm: Vec<usize> = (0..5).collect();
        for i in (1..5).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let names: Vec<String> = (0..5).map(|i| format!("r{i}")).collect();
        let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let mut topo_pairs = Vec::new();
        let mut dir_pairs = Vec::new();
        for i in 0..5 {
            for j in 0..5 {
                if i != j && x.topo_leq(i, j) {
                    topo_pairs.push((name_refs[perm[i]], name_refs[perm[j]]));
                }
                if i != j && x.dir_leq(i, j) {
                    dir_pairs.push((name_refs[perm[i]], name_refs[perm[j]]));
                }
            }
        }
        let y =
            FinitePreorderedSpace::validate(&name_refs, &topo_pairs, &dir_pairs, DirMode::Explicit)
                .unwrap();
        let dgx = homology_digraph(&f, &x, Mode::Sequential);
        let dgy = homology_digraph(&f, &y, Mode::Sequential);
        let map = PointMap::new(5, 5, perm);
        let induced = induced_digraph_morphism(&f, &map, &dgx, &dgy).unwrap();
        assert!(dgvs_isomorphic_check(&f, &induced.map, &dgx.dgvs, &dgy.dgvs).unwrap());
    }
}

/// Concept-based digraphs agree with the all-pairs oracle on random spaces.
#[test]
fn oracle_agreement_on_random_spaces() {
    let f = Gf2;
    let mut rng = ChaCha8Rng::seed_from_u64(63);
    for _ in 0..10 {
        let x = random_space(&mut rng, 5);
        let dg = homology_digraph(&f, &x, Mode::Sequential);
        let oracle = brute_force_digraph(&f, &x, None, 10, Mode::Sequential).unwrap();
        assert_eq!(
            dg.dgvs.pointing.defining, oracle.dgvs.pointing.defining,
            "{x:?}"
        );
    }
}

/// Parallel and sequential digraph computations produce identical values.
#[cfg(feature = "parallel")]
#[test]
fn parallel_equals_sequential() {
    let f = Gf2;
    let model = dirhom::models::torus();
    let par = homology_digraph(&f, &model.space, Mode::Parallel);
    let seq = homology_digraph(&f, &model.space, Mode::Sequential);
    assert_eq!(par.dgvs.pointing.defining, seq.dgvs.pointing.defining);
    assert_eq!(par.witnesses.len(), seq.witnesses.len());
    for (a, b) in par.witnesses.iter().zip(&seq.witnesses) {
        assert_eq!(a.pair, b.pair);
        assert_eq!(a.image_e, b.image_e);
        assert_eq!(a.image_f, b.image_f);
    }
}
