//! Canonical fixture spaces, each bundled with machine-checkable expected
//! facts. The fixtures double as the regression corpus: a fixture whose facts
//! stop passing indicates an engine fault.

use crate::digraph::{enumerate_concepts, homology_digraph, homology_digraph_pair};
use crate::error::{Error, Result};
use crate::exec::Mode;
use crate::field::Field;
use crate::graded::TensorIndexer;
use crate::homology::cross_map;
use crate::matrix::MatrixStore;
use crate::space::{DirMode, FinitePreorderedSpace, PointSet, Relation};

/// One term of a cross-product class: a pair of factor basis classes,
/// each as `(degree, index)`.
pub type CrossTerm = ((i64, usize), (i64, usize));

/// A machine-checkable expected fact about a model's homology digraph.
#[derive(Clone, Debug)]
pub enum Fact {
    /// Betti numbers per degree (degrees not listed must be zero).
    Betti(Vec<(i64, usize)>),
    /// Pointing between two basis classes.
    PointsBasis {
        src: (i64, usize),
        dst: (i64, usize),
        expect: bool,
    },
    /// Pointing between sums of cross products of factor basis classes;
    /// requires the model to carry product factors.
    PointsCross {
        src: Vec<CrossTerm>,
        dst: Vec<CrossTerm>,
        expect: bool,
    },
    /// Dimension of the defining space in one total degree.
    DefiningDim { total_degree: i64, dim: usize },
    /// Every class points to every class: the defining space is full.
    FullPointing,
    /// Nonzero classes point iff both have degree zero.
    PointsOnlyInDegreeZero,
    /// Pointing between the one-dimensional degree-`degree` inclusion images
    /// of two named subsets.
    PointsImages {
        src: Vec<String>,
        dst: Vec<String>,
        degree: i64,
        expect: bool,
    },
    /// Number of formal concepts of the direction relation.
    ConceptCount(usize),
}

/// A fixture space with its expected digraph facts.
#[derive(Clone, Debug)]
pub struct NamedModel {
    pub name: String,
    pub space: FinitePreorderedSpace,
    pub subset: Option<PointSet>,
    pub factors: Option<Box<(NamedModel, NamedModel)>>,
    pub expected: Vec<Fact>,
}

#[derive(Clone, Debug)]
pub struct FactResult {
    pub description: String,
    pub passed: bool,
}

pub fn point() -> NamedModel {
    let space = FinitePreorderedSpace::validate(&["*"], &[], &[], DirMode::Discrete).unwrap();
    NamedModel {
        name: "point".into(),
        space,
        subset: None,
        factors: None,
        expected: vec![
            Fact::Betti(vec![(0, 1)]),
            Fact::FullPointing,
            Fact::PointsBasis {
                src: (0, 0),
                dst: (0, 0),
                expect: true,
            },
            Fact::ConceptCount(1),
        ],
    }
}

/// Two-point connected space with the discrete direction.
pub fn interval() -> NamedModel {
    let space = FinitePreorderedSpace::validate(&["a", "b"], &[("a", "b")], &[], DirMode::Discrete)
        .unwrap();
    NamedModel {
        name: "interval".into(),
        space,
        subset: None,
        factors: None,
        expected: vec![Fact::Betti(vec![(0, 1)]), Fact::PointsOnlyInDegreeZero],
    }
}

pub fn discrete_set(n: usize) -> NamedModel {
    let ids: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let refs: Vec<&str> = ids.iter().map(|s| s.as_str()).collect();
    let space = FinitePreorderedSpace::validate(&refs, &[], &[], DirMode::Discrete).unwrap();
    NamedModel {
        name: format!("discrete_set_{n}"),
        space,
        subset: None,
        factors: None,
        expected: vec![
            Fact::Betti(vec![(0, n)]),
            Fact::DefiningDim {
                total_degree: 0,
                dim: n,
            },
        ],
    }
}

/// The same underlying topology with the indiscrete direction; every class
/// points to every class.
pub fn indiscrete_on(model: &NamedModel) -> NamedModel {
    let n = model.space.len();
    let space = FinitePreorderedSpace::from_relations(
        model.space.point_ids().to_vec(),
        model.space.topo().clone(),
        Relation::full(n),
    );
    let betti = model
        .expected
        .iter()
        .find_map(|f| match f {
            Fact::Betti(b) => Some(Fact::Betti(b.clone())),
            _ => None,
        })
        .into_iter()
        .collect::<Vec<_>>();
    let mut expected = betti;
    expected.push(Fact::FullPointing);
    expected.push(Fact::ConceptCount(1));
    NamedModel {
        name: format!("indiscrete_{}", model.name),
        space,
        subset: None,
        factors: None,
        expected,
    }
}

fn circle_topology() -> (Vec<&'static str>, Vec<(&'static str, &'static str)>) {
    (
        vec!["m", "l", "r", "t"],
        vec![("m", "l"), ("m", "r"), ("t", "l"), ("t", "r")],
    )
}

/// The circle with both semicircles ordered from the minimum `m` to the
/// maximum `t`.
pub fn ordered_circle() -> NamedModel {
    let (points, topo) = circle_topology();
    let space = FinitePreorderedSpace::validate(
        &points,
        &topo,
        &[("m", "l"), ("m", "r"), ("l", "t"), ("r", "t")],
        DirMode::Explicit,
    )
    .unwrap();
    NamedModel {
        name: "ordered_circle".into(),
        space,
        subset: None,
        factors: None,
        expected: vec![
            Fact::Betti(vec![(0, 1), (1, 1)]),
            Fact::PointsBasis {
                src: (0, 0),
                dst: (0, 0),
                expect: true,
            },
            Fact::PointsBasis {
                src: (0, 0),
                dst: (1, 0),
                expect: true,
            },
            Fact::PointsBasis {
                src: (1, 0),
                dst: (0, 0),
                expect: true,
            },
            Fact::PointsBasis {
                src: (1, 0),
                dst: (1, 0),
                expect: false,
            },
            Fact::DefiningDim {
                total_degree: 2,
                dim: 0,
            },
            Fact::ConceptCount(4),
        ],
    }
}

/// The circle with the indiscrete direction.
pub fn directed_circle() -> NamedModel {
    let (points, topo) = circle_topology();
    let space = FinitePreorderedSpace::validate(&points, &topo, &[], DirMode::Indiscrete).unwrap();
    NamedModel {
        name: "directed_circle".into(),
        space,
        subset: None,
        factors: None,
        expected: vec![
            Fact::Betti(vec![(0, 1), (1, 1)]),
            Fact::FullPointing,
            Fact::ConceptCount(1),
        ],
    }
}

/// The circle with the discrete direction: a connected space whose nonzero
/// classes point only in degree zero.
pub fn discrete_circle() -> NamedModel {
    let (points, topo) = circle_topology();
    let space = FinitePreorderedSpace::validate(&points, &topo, &[], DirMode::Discrete).unwrap();
    NamedModel {
        name: "discrete_circle".into(),
        space,
        subset: None,
        factors: None,
        expected: vec![
            Fact::Betti(vec![(0, 1), (1, 1)]),
            Fact::PointsOnlyInDegreeZero,
        ],
    }
}

/// Wedge of two ordered circles at their minima.
pub fn circle_wedge() -> NamedModel {
    let a = ordered_circle().space;
    let b = ordered_circle().space;
    let m = a.index_of("m").unwrap();
    let (space, _, _) = a.wedge(m, &b, m).unwrap();
    NamedModel {
        name: "circle_wedge".into(),
        space,
        subset: None,
        factors: None,
        expected: vec![
            Fact::Betti(vec![(0, 1), (1, 2)]),
            Fact::DefiningDim {
                total_degree: 2,
                dim: 0,
            },
            Fact::PointsBasis {
                src: (0, 0),
                dst: (1, 0),
                expect: true,
            },
            Fact::PointsBasis {
                src: (0, 0),
                dst: (1, 1),
                expect: true,
            },
            Fact::PointsBasis {
                src: (1, 0),
                dst: (0, 0),
                expect: true,
            },
            Fact::PointsBasis {
                src: (1, 1),
                dst: (0, 0),
                expect: true,
            },
        ],
    }
}

/// Product of the directed circle and the ordered circle, with the pointing
/// table of its five nonzero classes over GF(2).
pub fn torus() -> NamedModel {
    let dir_circle = directed_circle();
    let ord_circle = ordered_circle();
    let space = dir_circle.space.product(&ord_circle.space);
    // factor classes: a = H0(dir), b = H1(dir), c = H0(ord), d = H1(ord)
    let a = (0i64, 0usize);
    let b = (1i64, 0usize);
    let c = (0i64, 0usize);
    let d = (1i64, 0usize);
    let ac = vec![(a, c)];
    let ad = vec![(a, d)];
    let bc = vec![(b, c)];
    let adbc = vec![(a, d), (b, c)];
    let bd = vec![(b, d)];
    let mut expected = vec![Fact::Betti(vec![(0, 1), (1, 2), (2, 1)])];
    let all = [ac.clone(), ad.clone(), bc.clone(), adbc.clone(), bd.clone()];
    // a x c and b x c point to every nonzero class
    for src in [ac.clone(), bc.clone()] {
        for dst in &all {
            expected.push(Fact::PointsCross {
                src: src.clone(),
                dst: dst.clone(),
                expect: true,
            });
        }
    }
    // a x d, a x d + b x c, and b x d point exactly to a x c and b x c
    for src in [ad.clone(), adbc.clone(), bd.clone()] {
        for dst in [ac.clone(), bc.clone()] {
            expected.push(Fact::PointsCross {
                src: src.clone(),
                dst,
                expect: true,
            });
        }
        for dst in [ad.clone(), adbc.clone(), bd.clone()] {
            expected.push(Fact::PointsCross {
                src: src.clone(),
                dst,
                expect: false,
            });
        }
    }
    NamedModel {
        name: "torus".into(),
        space,
        subset: None,
        factors: Some(Box::new((dir_circle, ord_circle))),
        expected,
    }
}

/// Cell kinds of the planar grid complex, ordered: squares, horizontal
/// edges, vertical edges, vertices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum GridCell {
    Square(usize, usize),
    HEdge(usize, usize),
    VEdge(usize, usize),
    Vertex(usize, usize),
}

impl GridCell {
    fn id(&self) -> String {
        match self {
            GridCell::Square(i, j) => format!("s{i}_{j}"),
            GridCell::HEdge(i, j) => format!("h{i}_{j}"),
            GridCell::VEdge(i, j) => format!("v{i}_{j}"),
            GridCell::Vertex(i, j) => format!("p{i}_{j}"),
        }
    }

    fn min_corner(&self) -> (usize, usize) {
        match *self {
            GridCell::Square(i, j)
            | GridCell::HEdge(i, j)
            | GridCell::VEdge(i, j)
            | GridCell::Vertex(i, j) => (i, j),
        }
    }

    fn max_corner(&self) -> (usize, usize) {
        match *self {
            GridCell::Square(i, j) => (i + 1, j + 1),
            GridCell::HEdge(i, j) => (i + 1, j),
            GridCell::VEdge(i, j) => (i, j + 1),
            GridCell::Vertex(i, j) => (i, j),
        }
    }

    fn faces(&self) -> Vec<GridCell> {
        match *self {
            GridCell::Square(i, j) => vec![
                GridCell::HEdge(i, j),
                GridCell::HEdge(i, j + 1),
                GridCell::VEdge(i, j),
                GridCell::VEdge(i + 1, j),
                GridCell::Vertex(i, j),
                GridCell::Vertex(i + 1, j),
                GridCell::Vertex(i, j + 1),
                GridCell::Vertex(i + 1, j + 1),
            ],
            GridCell::HEdge(i, j) => {
                vec![GridCell::Vertex(i, j), GridCell::Vertex(i + 1, j)]
            }
            GridCell::VEdge(i, j) => {
                vec![GridCell::Vertex(i, j), GridCell::Vertex(i, j + 1)]
            }
            GridCell::Vertex(_, _) => vec![],
        }
    }
}

const HOLE_SIZE: usize = 2;

/// Face poset of the n x n unit grid minus two square holes, with direction
/// given by corner dominance between distinct cells. Returns the space and
/// the cell-id annuli around each hole (hole order as passed).
fn grid_space(
    n: usize,
    holes: [(usize, usize); 2],
) -> (FinitePreorderedSpace, Vec<String>, Vec<String>) {
    let in_hole = |i: usize, j: usize| {
        holes
            .iter()
            .any(|&(hx, hy)| i >= hx && i < hx + HOLE_SIZE && j >= hy && j < hy + HOLE_SIZE)
    };
    let mut cells = std::collections::BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if in_hole(i, j) {
                continue;
            }
            let sq = GridCell::Square(i, j);
            for f in sq.faces() {
                cells.insert(f);
            }
            cells.insert(sq);
        }
    }
    let cells: Vec<GridCell> = cells.into_iter().collect();
    let index: std::collections::BTreeMap<GridCell, usize> =
        cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let m = cells.len();
    let mut topo = Relation::empty(m);
    for (k, c) in cells.iter().enumerate() {
        for f in c.faces() {
            if let Some(&fk) = index.get(&f) {
                topo.set(fk, k);
            }
        }
    }
    topo.reflexive_transitive_close();
    let mut dir = Relation::empty(m);
    for (k, c) in cells.iter().enumerate() {
        for (k2, d) in cells.iter().enumerate() {
            if k == k2 {
                continue;
            }
            let (mx, my) = c.max_corner();
            let (nx2, ny2) = d.min_corner();
            if mx <= nx2 && my <= ny2 {
                dir.set(k, k2);
            }
        }
    }
    dir.reflexive_transitive_close();
    let points: Vec<String> = cells.iter().map(|c| c.id()).collect();
    let space = FinitePreorderedSpace::from_relations(points, topo, dir);

    let ring = |(hx, hy): (usize, usize)| -> Vec<String> {
        let (x0, y0) = (hx - 1, hy - 1);
        let (x1, y1) = (hx + HOLE_SIZE + 1, hy + HOLE_SIZE + 1);
        cells
            .iter()
            .filter(|c| {
                let (ax, ay) = c.min_corner();
                let (bx, by) = c.max_corner();
                ax >= x0 && ay >= y0 && bx <= x1 && by <= y1
            })
            .map(|c| c.id())
            .collect()
    };
    (space, ring(holes[0]), ring(holes[1]))
}

fn two_holes(n: usize, comparable: bool) -> Result<NamedModel> {
    // holes must be strictly separated and stay off the outer boundary
    if n < 2 * HOLE_SIZE + 3 {
        return Err(Error::HypothesisNotMet(format!(
            "resolution {n} is too small to separate the two holes"
        )));
    }
    let far = n - HOLE_SIZE - 1;
    let (holes, name) = if comparable {
        ([(1, 1), (far, far)], format!("two_holes_comparable_{n}"))
    } else {
        ([(1, far), (far, 1)], format!("two_holes_incomparable_{n}"))
    };
    let (space, ring_a, ring_b) = grid_space(n, holes);
    let expected = if comparable {
        vec![
            Fact::Betti(vec![(0, 1), (1, 2)]),
            // the class around the first hole points to the class around the second
            Fact::PointsImages {
                src: ring_a.clone(),
                dst: ring_b.clone(),
                degree: 1,
                expect: true,
            },
            Fact::PointsImages {
                src: ring_b.clone(),
                dst: ring_a.clone(),
                degree: 1,
                expect: false,
            },
            Fact::DefiningDim {
                total_degree: 2,
                dim: 1,
            },
        ]
    } else {
        vec![
            Fact::Betti(vec![(0, 1), (1, 2)]),
            Fact::PointsImages {
                src: ring_a.clone(),
                dst: ring_b.clone(),
                degree: 1,
                expect: false,
            },
            Fact::PointsImages {
                src: ring_b.clone(),
                dst: ring_a.clone(),
                degree: 1,
                expect: false,
            },
            Fact::DefiningDim {
                total_degree: 2,
                dim: 0,
            },
        ]
    };
    Ok(NamedModel {
        name,
        space,
        subset: None,
        factors: None,
        expected,
    })
}

/// Square with two holes on the main diagonal: the lower hole's bounding box
/// sits below the upper hole's, so the hole classes are related.
pub fn two_holes_comparable(resolution: usize) -> Result<NamedModel> {
    two_holes(resolution, true)
}

/// Square with two holes on the anti-diagonal: no pointing between the
/// degree-one classes.
pub fn two_holes_incomparable(resolution: usize) -> Result<NamedModel> {
    two_holes(resolution, false)
}

/// The fixture corpus. Grid models use resolution 7.
pub fn all_models() -> Vec<NamedModel> {
    vec![
        point(),
        interval(),
        indiscrete_on(&interval()),
        discrete_set(2),
        ordered_circle(),
        directed_circle(),
        discrete_circle(),
        circle_wedge(),
        torus(),
        two_holes_comparable(7).unwrap(),
        two_holes_incomparable(7).unwrap(),
    ]
}

/// Fixtures small enough for the brute-force oracle.
pub fn oracle_models() -> Vec<NamedModel> {
    all_models()
        .into_iter()
        .filter(|m| m.space.len() <= 8)
        .collect()
}

fn unit_vector<F: Field>(field: &F, n: usize, i: usize) -> Vec<F::Elem> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// Evaluates every expected fact of a model over the given field.
pub fn evaluate<F: Field>(model: &NamedModel, field: &F, mode: Mode) -> Result<Vec<FactResult>> {
    let digraph = match &model.subset {
        Some(a) => homology_digraph_pair(field, &model.space, a.clone(), mode),
        None => homology_digraph(field, &model.space, mode),
    };
    struct CrossData<F: Field> {
        ix: TensorIndexer,
        cross: crate::homology::InducedMap<F>,
    }
    let mut cross_data: Option<CrossData<F>> = None;
    if model
        .expected
        .iter()
        .any(|f| matches!(f, Fact::PointsCross { .. }))
    {
        let (left, right) = model
            .factors
            .as_deref()
            .ok_or_else(|| Error::VerificationFailed("cross facts need product factors".into()))?;
        let dgx = homology_digraph(field, &left.space, mode);
        let dgy = homology_digraph(field, &right.space, mode);
        let ix = TensorIndexer::new(dgx.ctx.h().clone(), dgy.ctx.h().clone());
        let cross = cross_map(&dgx.ctx, &dgy.ctx, &digraph.ctx, &ix)?;
        cross_data = Some(CrossData { ix, cross });
    }

    let mut out = Vec::new();
    for fact in &model.expected {
        let (description, passed) = match fact {
            Fact::Betti(expected) => {
                let ok = expected
                    .iter()
                    .all(|&(deg, dim)| digraph.ctx.h().dim(deg) == dim)
                    && digraph.ctx.h().dims().iter().all(|(&deg, &dim)| {
                        expected.iter().any(|&(d, n)| d == deg && n == dim) || dim == 0
                    });
                (format!("betti numbers {expected:?}"), ok)
            }
            Fact::PointsBasis { src, dst, expect } => {
                let actual = digraph.basis_points_to(field, *src, *dst);
                (
                    format!(
                        "H{}[{}] {} H{}[{}]",
                        src.0,
                        src.1,
                        if *expect {
                            "points to"
                        } else {
                            "does not point to"
                        },
                        dst.0,
                        dst.1
                    ),
                    actual == *expect,
                )
            }
            Fact::PointsCross { src, dst, expect } => {
                let CrossData { ix, cross } = cross_data.as_ref().unwrap();
                let build = |terms: &[CrossTerm]| -> (i64, Vec<F::Elem>) {
                    let total = terms[0].0 .0 + terms[0].1 .0;
                    let mut v = vec![field.zero(); digraph.ctx.h().dim(total)];
                    for ((di, ui), (dj, vj)) in terms {
                        assert_eq!(di + dj, total, "mixed-degree cross class");
                        let col = ix.coord(*di, *dj, *ui, *vj);
                        let block = cross.map.block(field, total);
                        for (r, slot) in v.iter_mut().enumerate() {
                            *slot = field.add(slot, &block.get(field, r, col));
                        }
                    }
                    (total, v)
                };
                let (sdeg, sv) = build(src);
                let (ddeg, dv) = build(dst);
                let actual = digraph.points_to(field, sdeg, &sv, ddeg, &dv)?;
                (
                    format!(
                        "cross class {src:?} {} {dst:?}",
                        if *expect {
                            "points to"
                        } else {
                            "does not point to"
                        }
                    ),
                    actual == *expect,
                )
            }
            Fact::DefiningDim { total_degree, dim } => {
                let actual = digraph.dgvs.pointing.defining.dim(*total_degree);
                (
                    format!("defining space dimension {dim} in total degree {total_degree}"),
                    actual == *dim,
                )
            }
            Fact::FullPointing => {
                let ix = &digraph.dgvs.pointing.indexer;
                let tensor_space = ix.space();
                let ok = tensor_space
                    .dims()
                    .iter()
                    .all(|(&deg, &dim)| digraph.dgvs.pointing.defining.dim(deg) == dim);
                ("every class points to every class".into(), ok)
            }
            Fact::PointsOnlyInDegreeZero => {
                let h0 = digraph.ctx.h().dim(0);
                let defining = &digraph.dgvs.pointing.defining;
                let ok = defining.dim(0) == h0 * h0 && defining.degrees().all(|d| d == 0) && h0 > 0;
                ("pointing only between degree-zero classes".into(), ok)
            }
            Fact::PointsImages {
                src,
                dst,
                degree,
                expect,
            } => {
                let to_set = |ids: &[String]| -> Result<PointSet> {
                    let refs: Vec<&str> = ids.iter().map(|s| s.as_str()).collect();
                    model.space.point_set(&refs)
                };
                let im_src = digraph.ctx.inclusion_image(&to_set(src)?);
                let im_dst = digraph.ctx.inclusion_image(&to_set(dst)?);
                let located = im_src.dim(*degree) == 1 && im_dst.dim(*degree) == 1;
                let ok = if !located {
                    false
                } else {
                    let sv = im_src.block(*degree).unwrap().basis.col(field, 0);
                    let dv = im_dst.block(*degree).unwrap().basis.col(field, 0);
                    digraph.points_to(field, *degree, &sv, *degree, &dv)? == *expect
                };
                (
                    format!(
                        "located degree-{degree} class {} the other hole class",
                        if *expect {
                            "points to"
                        } else {
                            "does not point to"
                        }
                    ),
                    ok,
                )
            }
            Fact::ConceptCount(expected) => {
                let actual = enumerate_concepts(model.space.dir()).len();
                (format!("{expected} formal concepts"), actual == *expected)
            }
        };
        out.push(FactResult {
            description,
            passed,
        });
    }
    // basis classes always point to themselves through the zero-class law
    let h = digraph.ctx.h().clone();
    for &deg in h.dims().keys() {
        let zero = vec![field.zero(); h.dim(deg)];
        let one = unit_vector(field, h.dim(deg), 0);
        debug_assert!(digraph.points_to(field, deg, &zero, deg, &one)?);
    }
    Ok(out)
}
