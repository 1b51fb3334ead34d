//! Partial bijections of a finite ground set.
//!
//! A [`PartialBijection`] is an injective map between two subsets of a
//! ground set `{0, …, size−1}`.  Under composition-where-defined these form
//! the symmetric inverse semigroup `I_T`, the generic inverse semigroup:
//! every abstract inverse semigroup in this crate is eventually realized as
//! a table of partial bijections, so element equality is always equality of
//! canonical pair sets.
//!
//! Conventions fixed here and used everywhere else:
//!
//! * composition is `(f·g)(t) = f(g(t))` — the right factor acts first;
//! * pairs are stored sorted by source, so equality and hashing are `O(n)`
//!   and element orderings are reproducible across runs;
//! * points are dense integer ids; display labels live on [`GroundSet`]
//!   and never influence algebra.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// A point of the ground set, a dense id in `0..size`.
pub type Point = usize;

/// Errors from constructing or combining partial bijections.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PbijError {
    #[error("ground set must have at least one point")]
    EmptyGround,
    #[error("ground set has {size} points but {count} labels")]
    LabelCount { size: usize, count: usize },
    #[error("point {point} is outside the ground set of size {size}")]
    PointOutOfRange { point: Point, size: usize },
    #[error("duplicate source point {0}")]
    DuplicateSource(Point),
    #[error("duplicate target point {0}")]
    DuplicateTarget(Point),
    #[error("ground sets differ: {left} vs {right} points")]
    GroundMismatch { left: usize, right: usize },
}

/// A finite ground set: a size plus optional display labels.
///
/// Labels are presentation-only; two ground sets of equal size are equal.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroundSet {
    size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size
    }
}
impl Eq for GroundSet {}

impl GroundSet {
    pub fn new(size: usize) -> Result<Self, PbijError> {
        if size == 0 {
            return Err(PbijError::EmptyGround);
        }
        Ok(GroundSet { size, labels: None })
    }

    pub fn with_labels(size: usize, labels: Vec<String>) -> Result<Self, PbijError> {
        if size == 0 {
            return Err(PbijError::EmptyGround);
        }
        if labels.len() != size {
            return Err(PbijError::LabelCount {
                size,
                count: labels.len(),
            });
        }
        Ok(GroundSet {
            size,
            labels: Some(labels),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn label(&self, p: Point) -> String {
        match &self.labels {
            Some(ls) if p < ls.len() => ls[p].clone(),
            _ => p.to_string(),
        }
    }
}

/// An injective partial self-map of a finite ground set, in canonical form.
///
/// The empty pair set is the void map `θ`; the full identity pair set is
/// the unit `ε`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialBijection {
    ground_size: usize,
    /// Sorted by source; sources and targets are each pairwise distinct.
    pairs: Vec<(Point, Point)>,
}

impl PartialBijection {
    /// Builds from an arbitrary pair list, sorting and validating.
    pub fn from_pairs(
        ground: &GroundSet,
        pairs: impl IntoIterator<Item = (Point, Point)>,
    ) -> Result<Self, PbijError> {
        let size = ground.size();
        let mut pairs: Vec<(Point, Point)> = pairs.into_iter().collect();
        pairs.sort_unstable();
        for &(s, t) in &pairs {
            if s >= size {
                return Err(PbijError::PointOutOfRange { point: s, size });
            }
            if t >= size {
                return Err(PbijError::PointOutOfRange { point: t, size });
            }
        }
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(PbijError::DuplicateSource(w[0].0));
            }
        }
        let mut targets: Vec<Point> = pairs.iter().map(|&(_, t)| t).collect();
        targets.sort_unstable();
        for w in targets.windows(2) {
            if w[0] == w[1] {
                return Err(PbijError::DuplicateTarget(w[0]));
            }
        }
        Ok(PartialBijection {
            ground_size: size,
            pairs,
        })
    }

    /// The void map `θ`.
    pub fn void(ground: &GroundSet) -> Self {
        PartialBijection {
            ground_size: ground.size(),
            pairs: Vec::new(),
        }
    }

    /// The identity `ε` on the whole ground set.
    pub fn identity(ground: &GroundSet) -> Self {
        PartialBijection {
            ground_size: ground.size(),
            pairs: (0..ground.size()).map(|p| (p, p)).collect(),
        }
    }

    /// The identity on a subset of points.
    pub fn partial_identity(
        ground: &GroundSet,
        points: impl IntoIterator<Item = Point>,
    ) -> Result<Self, PbijError> {
        Self::from_pairs(ground, points.into_iter().map(|p| (p, p)))
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn pairs(&self) -> &[(Point, Point)] {
        &self.pairs
    }

    pub fn is_void(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.pairs.len() == self.ground_size && self.pairs.iter().all(|&(s, t)| s == t)
    }

    pub fn is_partial_identity(&self) -> bool {
        self.pairs.iter().all(|&(s, t)| s == t)
    }

    pub fn is_idempotent(&self) -> bool {
        // In an inverse semigroup of partial bijections, α² = α exactly for
        // partial identities.
        self.is_partial_identity()
    }

    /// Image of a point, if the point is in the domain.
    pub fn image(&self, p: Point) -> Option<Point> {
        self.pairs
            .binary_search_by_key(&p, |&(s, _)| s)
            .ok()
            .map(|i| self.pairs[i].1)
    }

    /// Preimage of a point, if the point is in the range.
    pub fn preimage(&self, p: Point) -> Option<Point> {
        self.pairs.iter().find(|&&(_, t)| t == p).map(|&(s, _)| s)
    }

    pub fn domain(&self) -> impl Iterator<Item = Point> + '_ {
        self.pairs.iter().map(|&(s, _)| s)
    }

    pub fn range(&self) -> impl Iterator<Item = Point> + '_ {
        self.pairs.iter().map(|&(_, t)| t)
    }

    fn check_ground(&self, other: &Self) -> Result<(), PbijError> {
        if self.ground_size != other.ground_size {
            return Err(PbijError::GroundMismatch {
                left: self.ground_size,
                right: other.ground_size,
            });
        }
        Ok(())
    }

    /// Composition `(self·g)(t) = self(g(t))`, defined where it makes sense.
    ///
    /// Returns the void map when the domains do not meet.
    pub fn compose(&self, g: &Self) -> Result<Self, PbijError> {
        self.check_ground(g)?;
        let mut pairs = Vec::new();
        for &(s, mid) in &g.pairs {
            if let Some(t) = self.image(mid) {
                pairs.push((s, t));
            }
        }
        Ok(PartialBijection {
            ground_size: self.ground_size,
            pairs,
        })
    }

    /// The unique generalized inverse: pairs reversed.
    pub fn star(&self) -> Self {
        let mut pairs: Vec<(Point, Point)> = self.pairs.iter().map(|&(s, t)| (t, s)).collect();
        pairs.sort_unstable();
        PartialBijection {
            ground_size: self.ground_size,
            pairs,
        }
    }

    /// The natural partial order: `self ≤ g` iff `self` is a restriction
    /// of `g`.
    ///
    /// Equivalent to the algebraic test `g*·self = self*·self`
    /// (see [`Self::natural_leq_algebraic`]).
    pub fn natural_leq(&self, g: &Self) -> Result<bool, PbijError> {
        self.check_ground(g)?;
        Ok(self.pairs.iter().all(|&(s, t)| g.image(s) == Some(t)))
    }

    /// The order test in its algebraic form, kept as an independent route.
    pub fn natural_leq_algebraic(&self, g: &Self) -> Result<bool, PbijError> {
        let lhs = g.star().compose(self)?;
        let rhs = self.star().compose(self)?;
        Ok(lhs == rhs)
    }

    /// Restriction of the map to the points of `keep` that lie in the domain.
    pub fn restrict(&self, keep: &[Point]) -> Self {
        let pairs = self
            .pairs
            .iter()
            .filter(|&&(s, _)| keep.contains(&s))
            .copied()
            .collect();
        PartialBijection {
            ground_size: self.ground_size,
            pairs,
        }
    }

    /// Signed power: `power(n)` is the `n`-th compositional power, with
    /// `power(-n) = star().power(n)` and `power(0) = ε`.
    pub fn power(&self, n: i64) -> Self {
        let ground = GroundSet {
            size: self.ground_size,
            labels: None,
        };
        let base = if n < 0 { self.star() } else { self.clone() };
        let mut acc = PartialBijection::identity(&ground);
        for _ in 0..n.unsigned_abs() {
            acc = acc.compose(&base).expect("same ground");
        }
        acc
    }

    /// Orbit decomposition of the points under iteration of the map.
    ///
    /// The core is the set of points lying on cycles (equivalently, in the
    /// domain of every signed power); the transient part is its complement.
    pub fn classify_point_dynamics(&self) -> DynamicsReport {
        let n = self.ground_size;
        // A point is in the core iff iterating forward from it returns to it.
        let mut core = vec![false; n];
        for start in 0..n {
            let mut p = start;
            let mut steps = 0;
            loop {
                match self.image(p) {
                    None => break,
                    Some(q) => {
                        p = q;
                        steps += 1;
                        if p == start {
                            core[start] = true;
                            break;
                        }
                        if steps > n {
                            break;
                        }
                    }
                }
            }
        }
        let core_points: Vec<Point> = (0..n).filter(|&p| core[p]).collect();
        let transient_points: Vec<Point> = (0..n).filter(|&p| !core[p]).collect();

        // Cycle lengths on the core.
        let mut cycle_lengths = Vec::new();
        let mut seen = vec![false; n];
        for &start in &core_points {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            loop {
                seen[p] = true;
                len += 1;
                p = self.image(p).expect("core point stays in core");
                if p == start {
                    break;
                }
            }
            cycle_lengths.push(len);
        }
        let core_period = if cycle_lengths.is_empty() {
            None
        } else {
            Some(cycle_lengths.iter().copied().fold(1usize, lcm))
        };

        // Nilpotency index of the transient restriction: the least ν ≥ 1
        // with (f|transient)^ν void.  Transient chains cannot enter the
        // core (injectivity), so this is the longest chain length + 1 …
        // computed directly by iterating.
        let nilpotency_index = if transient_points.is_empty() {
            None
        } else {
            let restricted = self.restrict(&transient_points);
            let mut power = restricted.clone();
            let mut nu = 1usize;
            while !power.is_void() {
                power = power.compose(&restricted).expect("same ground");
                nu += 1;
            }
            Some(nu)
        };

        DynamicsReport {
            core: core_points,
            transient: transient_points,
            cycle_lengths,
            core_period,
            nilpotency_index,
        }
    }

    /// All partial bijections on a ground set of the given size, in
    /// canonical order.  Counts grow as `Σ_k C(n,k)² k!`; intended for
    /// exhaustive checks on small sizes.
    pub fn enumerate_all(ground: &GroundSet) -> Vec<PartialBijection> {
        let n = ground.size();
        let mut out = Vec::new();
        // Enumerate by domain subset, then by injection into targets.
        for dom_mask in 0u32..(1 << n) {
            let dom: Vec<Point> = (0..n).filter(|&p| dom_mask >> p & 1 == 1).collect();
            let mut targets: Vec<Point> = Vec::new();
            let mut used = vec![false; n];
            fn rec(
                dom: &[Point],
                i: usize,
                n: usize,
                used: &mut Vec<bool>,
                targets: &mut Vec<Point>,
                out: &mut Vec<PartialBijection>,
                ground_size: usize,
            ) {
                if i == dom.len() {
                    let pairs: Vec<(Point, Point)> =
                        dom.iter().copied().zip(targets.iter().copied()).collect();
                    out.push(PartialBijection {
                        ground_size,
                        pairs,
                    });
                    return;
                }
                for t in 0..n {
                    if !used[t] {
                        used[t] = true;
                        targets.push(t);
                        rec(dom, i + 1, n, used, targets, out, ground_size);
                        targets.pop();
                        used[t] = false;
                    }
                }
            }
            rec(&dom, 0, n, &mut used, &mut targets, &mut out, n);
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// JSON form: an array of `[source, target]` pairs.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.pairs
                .iter()
                .map(|&(s, t)| serde_json::json!([s, t]))
                .collect(),
        )
    }

    /// Parses the JSON pair-array form against a ground set.
    pub fn from_json(ground: &GroundSet, v: &serde_json::Value) -> Result<Self, String> {
        let arr = v.as_array().ok_or("expected an array of [source, target] pairs")?;
        let mut pairs = Vec::with_capacity(arr.len());
        for item in arr {
            let pair = item
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or("each pair must be a two-element array")?;
            let s = pair[0].as_u64().ok_or("source must be a nonnegative integer")? as usize;
            let t = pair[1].as_u64().ok_or("target must be a nonnegative integer")? as usize;
            pairs.push((s, t));
        }
        Self::from_pairs(ground, pairs).map_err(|e| e.to_string())
    }
}

impl fmt::Debug for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "θ/{}", self.ground_size);
        }
        if self.is_identity() {
            return write!(f, "ε/{}", self.ground_size);
        }
        let body: Vec<String> = self
            .pairs
            .iter()
            .map(|&(s, t)| format!("{s}→{t}"))
            .collect();
        write!(f, "{{{}}}/{}", body.join(","), self.ground_size)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Orbit structure of a single partial bijection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynamicsReport {
    /// Points on cycles: the intersection of the domains of all signed
    /// powers.  Invariant under the map.
    pub core: Vec<Point>,
    /// The remaining points.  Invariant under the map; chains here die out.
    pub transient: Vec<Point>,
    /// Lengths of the cycles making up the core.
    pub cycle_lengths: Vec<usize>,
    /// Order of the core restriction (lcm of cycle lengths); `None` when
    /// the core is empty.
    pub core_period: Option<usize>,
    /// Least `ν ≥ 1` with the transient restriction's `ν`-th power void;
    /// `None` when there are no transient points.
    pub nilpotency_index: Option<usize>,
}

impl DynamicsReport {
    /// Whether the core restriction is a periodic, non-identity bijection.
    pub fn core_periodic_nonconstant(&self) -> bool {
        matches!(self.core_period, Some(k) if k >= 2)
    }

    /// Whether the transient restriction is nilpotent (always true on a
    /// finite ground set when the transient part is nonempty).
    pub fn transient_nilpotent(&self) -> bool {
        self.nilpotency_index.is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gs(n: usize) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    fn pb(n: usize, pairs: &[(usize, usize)]) -> PartialBijection {
        PartialBijection::from_pairs(&gs(n), pairs.iter().copied()).unwrap()
    }

    #[test]
    fn compose_basics() {
        // f={1→2}, g={0→1} on 3 points → {0→2}
        let f = pb(3, &[(1, 2)]);
        let g = pb(3, &[(0, 1)]);
        assert_eq!(f.compose(&g).unwrap(), pb(3, &[(0, 2)]));
        // identity case
        let e = PartialBijection::identity(&gs(3));
        assert_eq!(e.compose(&g).unwrap(), g);
        assert_eq!(g.compose(&e).unwrap(), g);
        // disjoint domain/range → void
        let h = pb(3, &[(0, 2)]);
        assert!(f.compose(&h).unwrap().is_void());
    }

    #[test]
    fn compose_ground_mismatch() {
        let f = pb(3, &[(1, 2)]);
        let g = pb(2, &[(0, 1)]);
        assert_eq!(
            f.compose(&g),
            Err(PbijError::GroundMismatch { left: 3, right: 2 })
        );
    }

    #[test]
    fn star_basics() {
        let f = pb(3, &[(0, 1), (1, 2)]);
        assert_eq!(f.star(), pb(3, &[(1, 0), (2, 1)]));
        assert_eq!(f.star().star(), f);
        let e = PartialBijection::identity(&gs(3));
        assert_eq!(e.star(), e);
        let v = PartialBijection::void(&gs(3));
        assert_eq!(v.star(), v);
        // f·f* = identity on Ran(f)
        let id_ran = PartialBijection::partial_identity(&gs(3), [1, 2]).unwrap();
        assert_eq!(f.compose(&f.star()).unwrap(), id_ran);
    }

    #[test]
    fn natural_leq_examples() {
        let f = pb(3, &[(0, 1)]);
        let g = pb(3, &[(0, 1), (2, 0)]);
        assert!(f.natural_leq(&g).unwrap());
        assert!(!g.natural_leq(&f).unwrap());
        let e = PartialBijection::identity(&gs(3));
        assert!(!f.natural_leq(&e).unwrap());
        let v = PartialBijection::void(&gs(3));
        assert!(v.natural_leq(&f).unwrap());
        assert!(v.natural_leq(&e).unwrap());
    }

    #[test]
    fn invalid_constructions_rejected() {
        assert!(GroundSet::new(0).is_err());
        assert!(PartialBijection::from_pairs(&gs(2), [(0, 0), (0, 1)]).is_err());
        assert!(PartialBijection::from_pairs(&gs(2), [(0, 1), (1, 1)]).is_err());
        assert!(PartialBijection::from_pairs(&gs(2), [(0, 2)]).is_err());
    }

    #[test]
    fn exhaustive_inverse_semigroup_axioms_size_up_to_4() {
        for n in 1..=4 {
            let all = PartialBijection::enumerate_all(&gs(n));
            for f in &all {
                let fs = f.star();
                // α·α*·α = α and α*·α·α* = α*
                assert_eq!(&f.compose(&fs).unwrap().compose(f).unwrap(), f);
                assert_eq!(fs.compose(f).unwrap().compose(&fs).unwrap(), fs);
            }
        }
    }

    #[test]
    fn exhaustive_associativity_size_3() {
        // Full triple loop is feasible at size 3 (34³ triples); size 4 is
        // covered by the sampled property test below.
        let all = PartialBijection::enumerate_all(&gs(3));
        assert_eq!(all.len(), 34);
        for f in &all {
            for g in &all {
                let fg = f.compose(g).unwrap();
                for h in &all {
                    let gh = g.compose(h).unwrap();
                    assert_eq!(fg.compose(h).unwrap(), f.compose(&gh).unwrap());
                }
            }
        }
    }

    #[test]
    fn exhaustive_order_agreement_size_up_to_4() {
        // Restriction test vs the algebraic test, all pairs.
        for n in 1..=4 {
            let all = PartialBijection::enumerate_all(&gs(n));
            for f in &all {
                for g in &all {
                    assert_eq!(
                        f.natural_leq(g).unwrap(),
                        f.natural_leq_algebraic(g).unwrap(),
                        "order tests disagree for {f:?} ≤ {g:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn star_antihomomorphism_exhaustive_size_3() {
        let all = PartialBijection::enumerate_all(&gs(3));
        for f in &all {
            for g in &all {
                assert_eq!(
                    f.compose(g).unwrap().star(),
                    g.star().compose(&f.star()).unwrap()
                );
            }
        }
    }

    #[test]
    fn enumerate_counts() {
        // Σ_k C(n,k)² k! for n = 1..4.
        assert_eq!(PartialBijection::enumerate_all(&gs(1)).len(), 2);
        assert_eq!(PartialBijection::enumerate_all(&gs(2)).len(), 7);
        assert_eq!(PartialBijection::enumerate_all(&gs(3)).len(), 34);
        assert_eq!(PartialBijection::enumerate_all(&gs(4)).len(), 209);
    }

    #[test]
    fn dynamics_swap_plus_chain() {
        // {a→b, b→a, c→d} on 4 points: core {a,b} with period 2, transient
        // {c,d} with nilpotency index 2.
        let f = pb(4, &[(0, 1), (1, 0), (2, 3)]);
        let rep = f.classify_point_dynamics();
        assert_eq!(rep.core, vec![0, 1]);
        assert_eq!(rep.transient, vec![2, 3]);
        assert_eq!(rep.core_period, Some(2));
        assert!(rep.core_periodic_nonconstant());
        assert_eq!(rep.nilpotency_index, Some(2));
    }

    #[test]
    fn dynamics_identity_and_nilpotent() {
        let e = PartialBijection::identity(&gs(3));
        let rep = e.classify_point_dynamics();
        assert_eq!(rep.core, vec![0, 1, 2]);
        assert!(rep.transient.is_empty());
        assert_eq!(rep.core_period, Some(1));
        assert!(!rep.core_periodic_nonconstant());
        assert_eq!(rep.nilpotency_index, None);

        // {0→1} on 2 points: f² = θ.
        let f = pb(2, &[(0, 1)]);
        let rep = f.classify_point_dynamics();
        assert!(rep.core.is_empty());
        assert_eq!(rep.transient, vec![0, 1]);
        assert_eq!(rep.nilpotency_index, Some(2));
        assert!(f.power(2).is_void());
    }

    #[test]
    fn dynamics_invariance_exhaustive_size_4() {
        // Core and transient are each invariant under the map.
        let all = PartialBijection::enumerate_all(&gs(4));
        for f in &all {
            let rep = f.classify_point_dynamics();
            for &p in &rep.core {
                let q = f.image(p).expect("core point has image");
                assert!(rep.core.contains(&q));
            }
            for &p in &rep.transient {
                if let Some(q) = f.image(p) {
                    assert!(rep.transient.contains(&q));
                }
            }
            // Core = ∩_{n∈ℤ} Dom(fⁿ), checked against explicit powers.
            let bound = 2 * 4i64;
            for p in 0..4 {
                let in_all = (-bound..=bound).all(|n| f.power(n).image(p).is_some());
                assert_eq!(rep.core.contains(&p), in_all);
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let f = pb(3, &[(0, 1), (2, 0)]);
        let v = f.to_json();
        assert_eq!(v, serde_json::json!([[0, 1], [2, 0]]));
        let back = PartialBijection::from_json(&gs(3), &v).unwrap();
        assert_eq!(back, f);
        let g = GroundSet::with_labels(2, vec!["a".into(), "b".into()]).unwrap();
        let gv = serde_json::to_value(&g).unwrap();
        assert_eq!(gv, serde_json::json!({"size": 2, "labels": ["a", "b"]}));
    }
}

#[cfg(test)]
mod prop_tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_pbij(n: usize) -> impl Strategy<Value = PartialBijection> {
        // A random injection: permute targets, keep a random subset.
        (Just(n), proptest::collection::vec(0..1000u32, n), proptest::collection::vec(any::<bool>(), n))
            .prop_map(|(n, keys, keep)| {
                let ground = GroundSet::new(n).unwrap();
                let mut targets: Vec<usize> = (0..n).collect();
                targets.sort_by_key(|&i| keys[i]);
                let pairs = (0..n)
                    .zip(targets)
                    .filter(|&(s, _)| keep[s])
                    .collect::<Vec<_>>();
                PartialBijection::from_pairs(&ground, pairs).unwrap()
            })
    }

    proptest! {
        #[test]
        fn associativity_size_6(f in arb_pbij(6), g in arb_pbij(6), h in arb_pbij(6)) {
            let lhs = f.compose(&g).unwrap().compose(&h).unwrap();
            let rhs = f.compose(&g.compose(&h).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn star_is_anti_involution(f in arb_pbij(6), g in arb_pbij(6)) {
            prop_assert_eq!(f.star().star(), f.clone());
            prop_assert_eq!(
                f.compose(&g).unwrap().star(),
                g.star().compose(&f.star()).unwrap()
            );
        }

        #[test]
        fn inverse_axiom(f in arb_pbij(7)) {
            let fs = f.star();
            prop_assert_eq!(&f.compose(&fs).unwrap().compose(&f).unwrap(), &f);
        }
    }
}
