//! Order complexes of finite spaces and their chain complexes, absolute or
//! relative to a subset. Simplices are strictly increasing chains of the
//! specialization order; the relative complex keeps the simplices with at
//! least one vertex outside the subset.

use std::collections::{BTreeMap, HashMap};

use crate::field::Field;
use crate::graded::GradedVectorSpace;
use crate::matrix::MatrixStore;
use crate::space::{FinitePreorderedSpace, PointSet};

/// All nonempty chains of the specialization order on a vertex set, grouped by
/// dimension, in deterministic (lexicographic by vertex index) order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderComplex {
    pub simplices: BTreeMap<usize, Vec<Vec<usize>>>,
}

impl OrderComplex {
    pub fn new(space: &FinitePreorderedSpace) -> Self {
        Self::on_vertices(space, &PointSet::full(space.len()))
    }

    pub fn on_vertices(space: &FinitePreorderedSpace, vertices: &PointSet) -> Self {
        let mut simplices: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
        let verts: Vec<usize> = vertices.iter().collect();
        let mut stack: Vec<Vec<usize>> = verts.iter().map(|&v| vec![v]).collect();
        stack.reverse();
        while let Some(chain) = stack.pop() {
            let last = *chain.last().unwrap();
            simplices
                .entry(chain.len() - 1)
                .or_default()
                .push(chain.clone());
            for &v in &verts {
                if v != last && space.topo_leq(last, v) {
                    let mut longer = chain.clone();
                    longer.push(v);
                    stack.push(longer);
                }
            }
        }
        for chains in simplices.values_mut() {
            chains.sort();
        }
        OrderComplex { simplices }
    }

    pub fn dim_count(&self, dim: usize) -> usize {
        self.simplices.get(&dim).map(|v| v.len()).unwrap_or(0)
    }

    pub fn max_dim(&self) -> Option<usize> {
        self.simplices.keys().next_back().copied()
    }

    pub fn label(&self, space: &FinitePreorderedSpace, simplex: &[usize]) -> String {
        let ids: Vec<&str> = simplex.iter().map(|&v| space.id(v)).collect();
        ids.join("<")
    }
}

/// Chain complex of an order complex over an exact field, absolute or
/// relative to a vertex subset.
#[derive(Clone, Debug)]
pub struct ChainComplex<F: Field> {
    pub field: F,
    /// Retained simplices per degree.
    pub basis: BTreeMap<i64, Vec<Vec<usize>>>,
    /// Lookup from simplex to its column index within its degree.
    index: HashMap<Vec<usize>, usize>,
    /// Boundary matrices, `boundary[n]: C_n -> C_{n-1}`.
    pub boundary: BTreeMap<i64, F::Matrix>,
    pub gvs: GradedVectorSpace,
}

impl<F: Field> ChainComplex<F> {
    /// Builds the chain complex. `relative_to = Some(A)` quotients by the
    /// subcomplex spanned inside `A`. The boundary-squares-to-zero identity is
    /// asserted at build time.
    pub fn build(
        field: &F,
        space: &FinitePreorderedSpace,
        complex: &OrderComplex,
        relative_to: Option<&PointSet>,
    ) -> Self {
        let retained = |simplex: &[usize]| -> bool {
            match relative_to {
                None => true,
                Some(a) => simplex.iter().any(|&v| !a.contains(v)),
            }
        };
        let mut basis: BTreeMap<i64, Vec<Vec<usize>>> = BTreeMap::new();
        let mut index = HashMap::new();
        for (&dim, chains) in &complex.simplices {
            for s in chains {
                if retained(s) {
                    let list = basis.entry(dim as i64).or_default();
                    index.insert(s.clone(), list.len());
                    list.push(s.clone());
                }
            }
        }
        let mut labels = BTreeMap::new();
        for (&deg, list) in &basis {
            labels.insert(
                deg,
                list.iter()
                    .map(|s| complex.label(space, s))
                    .collect::<Vec<_>>(),
            );
        }
        let gvs = GradedVectorSpace::new(labels);

        let mut boundary = BTreeMap::new();
        for (&deg, list) in &basis {
            if deg == 0 {
                continue;
            }
            let rows = basis.get(&(deg - 1)).map(|l| l.len()).unwrap_or(0);
            let mut m = F::Matrix::zeros(field, rows, list.len());
            for (c, simplex) in list.iter().enumerate() {
                let mut sign = field.one();
                for drop in 0..simplex.len() {
                    let mut face = simplex.clone();
                    face.remove(drop);
                    if let Some(&r) = index.get(&face) {
                        let prev = m.get(field, r, c);
                        m.set(field, r, c, field.add(&prev, &sign));
                    }
                    sign = field.neg(&sign);
                }
            }
            boundary.insert(deg, m);
        }

        let cc = ChainComplex {
            field: field.clone(),
            basis,
            index,
            boundary,
            gvs,
        };
        cc.assert_boundary_squares_to_zero();
        cc
    }

    fn assert_boundary_squares_to_zero(&self) {
        for (&deg, m) in &self.boundary {
            if let Some(next) = self.boundary.get(&(deg + 1)) {
                let prod = m.mul(&self.field, next);
                assert!(
                    prod.is_zero(&self.field),
                    "boundary squared nonzero in degree {deg}"
                );
            }
        }
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.basis.get(&degree).map(|l| l.len()).unwrap_or(0)
    }

    pub fn simplex_index(&self, simplex: &[usize]) -> Option<usize> {
        self.index.get(simplex).copied()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.basis
            .iter()
            .map(|(&deg, list)| {
                if deg % 2 == 0 {
                    list.len() as i64
                } else {
                    -(list.len() as i64)
                }
            })
            .sum()
    }

    /// Boundary block `C_n -> C_{n-1}`, materializing zeros when absent.
    pub fn boundary_block(&self, degree: i64) -> F::Matrix {
        self.boundary.get(&degree).cloned().unwrap_or_else(|| {
            F::Matrix::zeros(&self.field, self.dim(degree - 1), self.dim(degree))
        })
    }
}
