//! Finite preordered spaces: a finite T0 topology encoded as its
//! specialization order, together with an independent direction preorder.
//!
//! Convention, fixed once for the whole crate: a set is open iff it is an
//! up-set of the specialization order `topo`, so the closure of a set is its
//! down-set.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// A set of point indices, packed into words.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PointSet {
    len: usize,
    words: Vec<u64>,
}

impl PointSet {
    pub fn empty(len: usize) -> Self {
        PointSet {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn singleton(len: usize, i: usize) -> Self {
        let mut s = Self::empty(len);
        s.insert(i);
        s
    }

    pub fn from_indices(len: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(len);
        for i in idx {
            s.insert(i);
        }
        s
    }

    pub fn universe_len(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &Self) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn minus(&self, other: &Self) -> Self {
        assert_eq!(self.len, other.len);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & !b)
            .collect();
        PointSet {
            len: self.len,
            words,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn complement(&self) -> Self {
        PointSet::full(self.len).minus(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }
}

/// A binary relation on `0..n`, stored as successor bitsets per point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    n: usize,
    rows: Vec<PointSet>,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Relation {
            n,
            rows: vec![PointSet::empty(n); n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut r = Self::empty(n);
        for i in 0..n {
            r.set(i, i);
        }
        r
    }

    pub fn full(n: usize) -> Self {
        Relation {
            n,
            rows: vec![PointSet::full(n); n],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn set(&mut self, i: usize, j: usize) {
        self.rows[i].insert(j);
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    /// Successors of `i`: `{ j : i R j }`.
    pub fn row(&self, i: usize) -> &PointSet {
        &self.rows[i]
    }

    pub fn transpose(&self) -> Relation {
        let mut t = Relation::empty(self.n);
        for i in 0..self.n {
            for j in self.rows[i].iter() {
                t.set(j, i);
            }
        }
        t
    }

    pub fn reflexive_transitive_close(&mut self) {
        for i in 0..self.n {
            self.rows[i].insert(i);
        }
        for k in 0..self.n {
            let row_k = self.rows[k].clone();
            for i in 0..self.n {
                if self.rows[i].contains(k) {
                    self.rows[i].union_with(&row_k);
                }
            }
        }
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|i| self.contains(i, i))
    }

    pub fn is_transitive(&self) -> bool {
        for i in 0..self.n {
            for k in self.rows[i].iter() {
                if !self.rows[k].is_subset(&self.rows[i]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn antisymmetry_violation(&self) -> Option<(usize, usize)> {
        for i in 0..self.n {
            for j in self.rows[i].iter() {
                if j != i && self.contains(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Restriction to `keep`, re-indexed by the order of `keep`.
    pub fn restrict(&self, keep: &[usize]) -> Relation {
        let mut r = Relation::empty(keep.len());
        for (new_i, &old_i) in keep.iter().enumerate() {
            for (new_j, &old_j) in keep.iter().enumerate() {
                if self.contains(old_i, old_j) {
                    r.set(new_i, new_j);
                }
            }
        }
        r
    }
}

/// How the direction preorder of a raw description is to be read.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DirMode {
    /// Reflexive-transitive closure of the supplied pairs.
    Explicit,
    /// Every point related only to itself.
    Discrete,
    /// Any two points related.
    Indiscrete,
}

/// A finite T0 topological space with a direction preorder. `topo` is the
/// specialization partial order; `dir` is reflexive and transitive but not
/// required to be antisymmetric.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinitePreorderedSpace {
    points: Vec<String>,
    topo: Relation,
    dir: Relation,
}

/// A space together with a distinguished subset, for relative homology.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairSpace {
    pub space: FinitePreorderedSpace,
    pub subset: PointSet,
}

impl PairSpace {
    pub fn new(space: FinitePreorderedSpace, subset: PointSet) -> Self {
        assert_eq!(subset.universe_len(), space.len());
        PairSpace { space, subset }
    }
}

/// A point map between two spaces, by index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointMap {
    pub source_len: usize,
    pub target_len: usize,
    map: Vec<usize>,
}

impl PointMap {
    pub fn new(source_len: usize, target_len: usize, map: Vec<usize>) -> Self {
        assert_eq!(map.len(), source_len);
        assert!(map.iter().all(|&j| j < target_len));
        PointMap {
            source_len,
            target_len,
            map,
        }
    }

    pub fn identity(n: usize) -> Self {
        PointMap::new(n, n, (0..n).collect())
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn compose(&self, inner: &PointMap) -> PointMap {
        assert_eq!(inner.target_len, self.source_len);
        PointMap::new(
            inner.source_len,
            self.target_len,
            inner.map.iter().map(|&i| self.map[i]).collect(),
        )
    }

    pub fn image_of(&self, s: &PointSet) -> PointSet {
        PointSet::from_indices(self.target_len, s.iter().map(|i| self.map[i]))
    }
}

impl FinitePreorderedSpace {
    /// Validates a raw description: closes the topology generators reflexively
    /// and transitively and rejects non-antisymmetric results; builds the
    /// direction preorder according to `mode`.
    pub fn validate(
        points: &[&str],
        topo_pairs: &[(&str, &str)],
        dir_pairs: &[(&str, &str)],
        mode: DirMode,
    ) -> Result<Self> {
        let mut index = BTreeMap::new();
        for (i, p) in points.iter().enumerate() {
            if index.insert(p.to_string(), i).is_some() {
                return Err(Error::DuplicatePoint(p.to_string()));
            }
        }
        let n = points.len();
        let look = |id: &str| -> Result<usize> {
            index
                .get(id)
                .copied()
                .ok_or_else(|| Error::UnknownPoint(id.to_string()))
        };

        let mut topo = Relation::empty(n);
        for (a, b) in topo_pairs {
            topo.set(look(a)?, look(b)?);
        }
        topo.reflexive_transitive_close();
        if let Some((i, j)) = topo.antisymmetry_violation() {
            return Err(Error::NotT0(points[i].to_string(), points[j].to_string()));
        }

        let dir = match mode {
            DirMode::Explicit => {
                let mut dir = Relation::empty(n);
                for (a, b) in dir_pairs {
                    dir.set(look(a)?, look(b)?);
                }
                dir.reflexive_transitive_close();
                dir
            }
            DirMode::Discrete => Relation::identity(n),
            DirMode::Indiscrete => Relation::full(n),
        };

        let space = FinitePreorderedSpace {
            points: points.iter().map(|p| p.to_string()).collect(),
            topo,
            dir,
        };
        space.verify_invariants();
        Ok(space)
    }

    /// Internal constructor for relations built programmatically. Closures are
    /// the caller's responsibility; the invariants are still checked.
    pub(crate) fn from_relations(points: Vec<String>, topo: Relation, dir: Relation) -> Self {
        let space = FinitePreorderedSpace { points, topo, dir };
        space.verify_invariants();
        space
    }

    fn verify_invariants(&self) {
        assert!(self.topo.is_reflexive() && self.topo.is_transitive());
        assert!(
            self.topo.antisymmetry_violation().is_none(),
            "topology must be T0"
        );
        assert!(self.dir.is_reflexive() && self.dir.is_transitive());
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point_ids(&self) -> &[String] {
        &self.points
    }

    pub fn id(&self, i: usize) -> &str {
        &self.points[i]
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.points
            .iter()
            .position(|p| p == id)
            .ok_or_else(|| Error::UnknownPoint(id.to_string()))
    }

    pub fn point_set(&self, ids: &[&str]) -> Result<PointSet> {
        let mut s = PointSet::empty(self.len());
        for id in ids {
            s.insert(self.index_of(id)?);
        }
        Ok(s)
    }

    /// `a <= b` in the specialization order.
    pub fn topo_leq(&self, a: usize, b: usize) -> bool {
        self.topo.contains(a, b)
    }

    /// `a ⪯ b` in the direction preorder.
    pub fn dir_leq(&self, a: usize, b: usize) -> bool {
        self.dir.contains(a, b)
    }

    pub fn topo(&self) -> &Relation {
        &self.topo
    }

    pub fn dir(&self) -> &Relation {
        &self.dir
    }

    /// Preordered subspace on `keep`, re-indexed in increasing point order.
    pub fn restrict(&self, keep: &PointSet) -> Result<FinitePreorderedSpace> {
        if keep.universe_len() != self.len() {
            return Err(Error::StrayPoint(format!(
                "subset over universe of {} points against space of {}",
                keep.universe_len(),
                self.len()
            )));
        }
        let idx: Vec<usize> = keep.iter().collect();
        let points = idx.iter().map(|&i| self.points[i].clone()).collect();
        Ok(FinitePreorderedSpace::from_relations(
            points,
            self.topo.restrict(&idx),
            self.dir.restrict(&idx),
        ))
    }

    /// Product space: cartesian points with both relations componentwise.
    /// The point `(a, b)` sits at index `a * other.len() + b`.
    pub fn product(&self, other: &FinitePreorderedSpace) -> FinitePreorderedSpace {
        let (nx, ny) = (self.len(), other.len());
        let n = nx * ny;
        let mut points = Vec::with_capacity(n);
        for a in 0..nx {
            for b in 0..ny {
                points.push(format!("({},{})", self.points[a], other.points[b]));
            }
        }
        let mut topo = Relation::empty(n);
        let mut dir = Relation::empty(n);
        for a in 0..nx {
            for b in 0..ny {
                let i = a * ny + b;
                for a2 in 0..nx {
                    for b2 in 0..ny {
                        let j = a2 * ny + b2;
                        if self.topo.contains(a, a2) && other.topo.contains(b, b2) {
                            topo.set(i, j);
                        }
                        if self.dir.contains(a, a2) && other.dir.contains(b, b2) {
                            dir.set(i, j);
                        }
                    }
                }
            }
        }
        FinitePreorderedSpace::from_relations(points, topo, dir)
    }

    /// Disjoint union; point ids are tagged `"{component}:{id}"`. Returns the
    /// space together with the injection of each component.
    pub fn coproduct(spaces: &[&FinitePreorderedSpace]) -> (FinitePreorderedSpace, Vec<PointMap>) {
        let n: usize = spaces.iter().map(|s| s.len()).sum();
        let mut points = Vec::with_capacity(n);
        let mut topo = Relation::empty(n);
        let mut dir = Relation::empty(n);
        let mut injections = Vec::new();
        let mut base = 0;
        for (k, s) in spaces.iter().enumerate() {
            for p in &s.points {
                points.push(format!("{k}:{p}"));
            }
            for i in 0..s.len() {
                for j in 0..s.len() {
                    if s.topo.contains(i, j) {
                        topo.set(base + i, base + j);
                    }
                    if s.dir.contains(i, j) {
                        dir.set(base + i, base + j);
                    }
                }
            }
            injections.push(PointMap::new(s.len(), n, (base..base + s.len()).collect()));
            base += s.len();
        }
        (
            FinitePreorderedSpace::from_relations(points, topo, dir),
            injections,
        )
    }

    /// Is `x0` minimal for the direction preorder (nothing else sits below it)?
    pub fn dir_minimal(&self, x0: usize) -> bool {
        (0..self.len()).all(|i| i == x0 || !self.dir.contains(i, x0))
    }

    /// Wedge of two based spaces at direction-minimal basepoints. The glued
    /// point keeps the left tag. The direction relation relates two points iff
    /// they lie in a common wedge summand and are related there; minimality of
    /// the basepoints makes this a preorder.
    pub fn wedge(
        &self,
        x0: usize,
        other: &FinitePreorderedSpace,
        y0: usize,
    ) -> Result<(FinitePreorderedSpace, PointMap, PointMap)> {
        if !self.dir_minimal(x0) {
            return Err(Error::BasepointNotMinimal(self.points[x0].clone()));
        }
        if !other.dir_minimal(y0) {
            return Err(Error::BasepointNotMinimal(other.points[y0].clone()));
        }
        let n = self.len() + other.len() - 1;
        // left points keep their indices; right points shift, with y0 glued to x0
        let right_index = |j: usize| -> usize {
            use std::cmp::Ordering::*;
            match j.cmp(&y0) {
                Equal => x0,
                Less => self.len() + j,
                Greater => self.len() + j - 1,
            }
        };
        let mut points: Vec<String> = self.points.iter().map(|p| format!("0:{p}")).collect();
        for (j, p) in other.points.iter().enumerate() {
            if j != y0 {
                points.push(format!("1:{p}"));
            }
        }
        let mut topo = Relation::empty(n);
        let mut dir = Relation::empty(n);
        for i in 0..self.len() {
            for j in 0..self.len() {
                if self.topo.contains(i, j) {
                    topo.set(i, j);
                }
                if self.dir.contains(i, j) {
                    dir.set(i, j);
                }
            }
        }
        for i in 0..other.len() {
            for j in 0..other.len() {
                if other.topo.contains(i, j) {
                    topo.set(right_index(i), right_index(j));
                }
                if other.dir.contains(i, j) {
                    dir.set(right_index(i), right_index(j));
                }
            }
        }
        // the quotient topology needs re-closure through the glued point
        topo.reflexive_transitive_close();
        if let Some((i, j)) = topo.antisymmetry_violation() {
            return Err(Error::NotT0(points[i].clone(), points[j].clone()));
        }
        let left = PointMap::new(self.len(), n, (0..self.len()).collect());
        let right = PointMap::new(other.len(), n, (0..other.len()).map(right_index).collect());
        Ok((
            FinitePreorderedSpace::from_relations(points, topo, dir),
            left,
            right,
        ))
    }

    /// Continuity for finite spaces is preservation of the specialization
    /// order; monotonicity is preservation of the direction preorder.
    pub fn is_monotone_continuous(&self, f: &PointMap, target: &FinitePreorderedSpace) -> bool {
        assert_eq!(f.source_len, self.len());
        assert_eq!(f.target_len, target.len());
        for i in 0..self.len() {
            for j in self.topo.row(i).iter() {
                if !target.topo.contains(f.apply(i), f.apply(j)) {
                    return false;
                }
            }
            for j in self.dir.row(i).iter() {
                if !target.dir.contains(f.apply(i), f.apply(j)) {
                    return false;
                }
            }
        }
        true
    }

    /// Closure: the down-set of `s` under the specialization order.
    pub fn closure(&self, s: &PointSet) -> PointSet {
        let mut out = PointSet::empty(self.len());
        for p in 0..self.len() {
            if self.topo.row(p).intersects(s) {
                out.insert(p);
            }
        }
        out
    }

    /// Interior: the largest open (up-)set contained in `s`.
    pub fn interior(&self, s: &PointSet) -> PointSet {
        let mut out = PointSet::empty(self.len());
        for p in s.iter() {
            if self.topo.row(p).is_subset(s) {
                out.insert(p);
            }
        }
        out
    }

    pub fn is_open(&self, s: &PointSet) -> bool {
        self.interior(s) == *s
    }

    /// Render a point set as its sorted id list.
    pub fn render_set(&self, s: &PointSet) -> String {
        let ids: Vec<&str> = s.iter().map(|i| self.points[i].as_str()).collect();
        format!("{{{}}}", ids.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn ordered_circle() -> FinitePreorderedSpace {
        FinitePreorderedSpace::validate(
            &["m", "l", "r", "t"],
            &[("m", "l"), ("m", "r"), ("t", "l"), ("t", "r")],
            &[("m", "l"), ("m", "r"), ("l", "t"), ("r", "t")],
            DirMode::Explicit,
        )
        .unwrap()
    }

    #[test]
    fn validate_single_point() {
        let s = FinitePreorderedSpace::validate(&["p"], &[], &[], DirMode::Discrete).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s.topo_leq(0, 0));
        assert!(s.dir_leq(0, 0));
    }

    #[test]
    fn validate_rejects_non_t0() {
        let err = FinitePreorderedSpace::validate(
            &["a", "b"],
            &[("a", "b"), ("b", "a")],
            &[],
            DirMode::Discrete,
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotT0(_, _)));
    }

    #[test]
    fn validate_rejects_unknown_and_duplicate() {
        assert!(matches!(
            FinitePreorderedSpace::validate(&["a"], &[("a", "z")], &[], DirMode::Discrete),
            Err(Error::UnknownPoint(_))
        ));
        assert!(matches!(
            FinitePreorderedSpace::validate(&["a", "a"], &[], &[], DirMode::Discrete),
            Err(Error::DuplicatePoint(_))
        ));
    }

    #[test]
    fn ordered_circle_direction_closure() {
        let s = ordered_circle();
        let (m, t) = (s.index_of("m").unwrap(), s.index_of("t").unwrap());
        assert!(s.dir_leq(m, t), "transitive closure must add (m,t)");
        assert!(!s.dir_leq(t, m));
        assert!(!s.topo_leq(m, t));
    }

    #[test]
    fn restriction_examples() {
        let s = ordered_circle();
        let all = PointSet::full(4);
        assert_eq!(s.restrict(&all).unwrap(), s);
        let none = PointSet::empty(4);
        assert_eq!(s.restrict(&none).unwrap().len(), 0);
        let sub = s.point_set(&["m", "l", "t"]).unwrap();
        let r = s.restrict(&sub).unwrap();
        assert_eq!(r.len(), 3);
        let (m, l, t) = (
            r.index_of("m").unwrap(),
            r.index_of("l").unwrap(),
            r.index_of("t").unwrap(),
        );
        assert!(r.topo_leq(m, l) && r.topo_leq(t, l) && !r.topo_leq(m, t));
        // direction restricts to a 3-chain
        assert!(r.dir_leq(m, l) && r.dir_leq(l, t) && r.dir_leq(m, t));
        assert!(!r.dir_leq(t, m));
    }

    #[test]
    fn product_with_point_is_isomorphic() {
        let s = ordered_circle();
        let p = FinitePreorderedSpace::validate(&["*"], &[], &[], DirMode::Discrete).unwrap();
        let prod = s.product(&p);
        assert_eq!(prod.len(), s.len());
        for i in 0..s.len() {
            for j in 0..s.len() {
                assert_eq!(prod.topo_leq(i, j), s.topo_leq(i, j));
                assert_eq!(prod.dir_leq(i, j), s.dir_leq(i, j));
            }
        }
        let empty = FinitePreorderedSpace::validate(&[], &[], &[], DirMode::Discrete).unwrap();
        assert!(s.product(&empty).is_empty());
    }

    #[test]
    fn coproduct_has_no_cross_relations() {
        let s = ordered_circle();
        let p = FinitePreorderedSpace::validate(&["*"], &[], &[], DirMode::Discrete).unwrap();
        let (cop, inj) = FinitePreorderedSpace::coproduct(&[&s, &p]);
        assert_eq!(cop.len(), 5);
        assert_eq!(inj.len(), 2);
        for i in 0..s.len() {
            let a = inj[0].apply(i);
            let b = inj[1].apply(0);
            assert!(!cop.dir_leq(a, b) && !cop.dir_leq(b, a));
            assert!(!cop.topo_leq(a, b) && !cop.topo_leq(b, a));
        }
        // injections are monotone continuous
        assert!(s.is_monotone_continuous(&inj[0], &cop));
        assert!(p.is_monotone_continuous(&inj[1], &cop));
    }

    #[test]
    fn product_projections_are_monotone_continuous() {
        let x = ordered_circle();
        let y = FinitePreorderedSpace::validate(
            &["a", "b"],
            &[("a", "b")],
            &[("a", "b")],
            DirMode::Explicit,
        )
        .unwrap();
        let prod = x.product(&y);
        let ny = y.len();
        let pr_x = PointMap::new(
            prod.len(),
            x.len(),
            (0..prod.len()).map(|i| i / ny).collect(),
        );
        let pr_y = PointMap::new(
            prod.len(),
            y.len(),
            (0..prod.len()).map(|i| i % ny).collect(),
        );
        assert!(prod.is_monotone_continuous(&pr_x, &x));
        assert!(prod.is_monotone_continuous(&pr_y, &y));
    }

    #[test]
    fn wedge_of_circles() {
        let a = ordered_circle();
        let b = ordered_circle();
        let m = a.index_of("m").unwrap();
        let (w, li, ri) = a.wedge(m, &b, m).unwrap();
        assert_eq!(w.len(), 7);
        assert_eq!(li.apply(m), ri.apply(m));
        assert!(w.dir().is_transitive());
        // no direction between the two circles except through equality at the base
        let t_left = li.apply(a.index_of("t").unwrap());
        let t_right = ri.apply(b.index_of("t").unwrap());
        assert!(!w.dir_leq(t_left, t_right) && !w.dir_leq(t_right, t_left));
    }

    #[test]
    fn wedge_of_two_points_is_a_point() {
        let p = FinitePreorderedSpace::validate(&["x"], &[], &[], DirMode::Discrete).unwrap();
        let q = FinitePreorderedSpace::validate(&["y"], &[], &[], DirMode::Discrete).unwrap();
        let (w, _, _) = p.wedge(0, &q, 0).unwrap();
        assert_eq!(w.len(), 1);
    }

    #[test]
    fn wedge_rejects_non_minimal_basepoint() {
        let a = ordered_circle();
        let t = a.index_of("t").unwrap();
        let err = a.wedge(t, &ordered_circle(), 0).unwrap_err();
        assert!(matches!(err, Error::BasepointNotMinimal(_)));
    }

    #[test]
    fn monotone_continuous_checks() {
        let s = ordered_circle();
        let id = PointMap::identity(4);
        assert!(s.is_monotone_continuous(&id, &s));
        let p = FinitePreorderedSpace::validate(&["*"], &[], &[], DirMode::Discrete).unwrap();
        let cst = PointMap::new(4, 1, vec![0; 4]);
        assert!(s.is_monotone_continuous(&cst, &p));
        // swapping m and t preserves the topology but reverses direction
        let (m, l, r, t) = (0usize, 1usize, 2usize, 3usize);
        let mut swap = vec![0; 4];
        swap[m] = t;
        swap[t] = m;
        swap[l] = l;
        swap[r] = r;
        let f = PointMap::new(4, 4, swap);
        let topo_ok =
            (0..4).all(|i| (0..4).all(|j| !s.topo_leq(i, j) || s.topo_leq(f.apply(i), f.apply(j))));
        assert!(topo_ok);
        assert!(!s.is_monotone_continuous(&f, &s));
    }

    #[test]
    fn closure_interior_examples() {
        let s = ordered_circle();
        let empty = PointSet::empty(4);
        assert_eq!(s.closure(&empty), empty);
        let full = PointSet::full(4);
        assert_eq!(s.interior(&full), full);
        let l = s.point_set(&["l"]).unwrap();
        assert_eq!(s.closure(&l), s.point_set(&["m", "l", "t"]).unwrap());
        let m = s.point_set(&["m"]).unwrap();
        assert!(s.interior(&m).is_empty());
        // duality: interior(s) = complement(closure(complement(s)))
        for mask in 0..16u32 {
            let set = PointSet::from_indices(4, (0..4).filter(|i| (mask >> i) & 1 == 1));
            let dual = s.closure(&set.complement()).complement();
            assert_eq!(s.interior(&set), dual);
            assert_eq!(s.closure(&s.closure(&set)), s.closure(&set));
            assert_eq!(s.interior(&s.interior(&set)), s.interior(&set));
        }
    }

    #[test]
    fn restrict_of_product_is_product_of_restrictions() {
        let x = ordered_circle();
        let y = FinitePreorderedSpace::validate(
            &["a", "b"],
            &[("a", "b")],
            &[("a", "b")],
            DirMode::Explicit,
        )
        .unwrap();
        let prod = x.product(&y);
        let ex = x.point_set(&["m", "l"]).unwrap();
        let fy = y.point_set(&["b"]).unwrap();
        let mut ef = PointSet::empty(prod.len());
        for a in ex.iter() {
            for b in fy.iter() {
                ef.insert(a * y.len() + b);
            }
        }
        let lhs = prod.restrict(&ef).unwrap();
        let rhs = x.restrict(&ex).unwrap().product(&y.restrict(&fy).unwrap());
        assert_eq!(lhs, rhs);
    }
}
