//! Finite inverse semigroups as closed element tables.
//!
//! Elements are always concrete partial bijections of a fixed ground set
//! (abstract families are embedded first, see [`crate::zoo`]), so element
//! equality is canonical-form equality and the natural partial order is
//! the restriction order of [`crate::pbij`].
//!
//! The central classification implemented here: a unital inverse semigroup
//! in which every element that is not the zero is majorized by a *unique*
//! maximal element.  For such semigroups the maximal elements carry a
//! partially defined product — `x·y` is the unique maximal element above
//! `β_x β_y`, defined when that product is not the zero — which behaves
//! like a group multiplication: partially associative, unital, with
//! involutive inverses and cancellation.  [`classify_f_tilde`] decides the
//! property and builds the structure; [`MaximalStructure::verify_laws`]
//! checks the laws exhaustively.

use crate::pbij::{GroundSet, PartialBijection, PbijError};
use serde_json::json;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsgError {
    #[error("closure exceeded the cap of {cap} elements (reached {reached})")]
    ClosureCapExceeded { cap: usize, reached: usize },
    #[error("generators live on different ground sets")]
    MixedGroundSets,
    #[error("element table is not closed: product of #{left} and #{right} is missing")]
    NotClosed { left: usize, right: usize },
    #[error("element table does not contain the identity")]
    MissingUnit,
    #[error("duplicate element #{0} in table")]
    DuplicateElement(usize),
    #[error("not a semilattice: element #{0} is not idempotent")]
    NotASemilattice(usize),
    #[error(transparent)]
    Pbij(#[from] PbijError),
}

/// A finite inverse semigroup, faithfully represented: a deduplicated,
/// closed table of partial bijections with precomputed multiplication and
/// star tables.
#[derive(Clone, Debug)]
pub struct InverseSemigroup {
    ground: GroundSet,
    elements: Vec<PartialBijection>,
    index: HashMap<PartialBijection, usize>,
    mult: Vec<usize>,
    star: Vec<usize>,
    unit: usize,
    zero: Option<usize>,
}

impl InverseSemigroup {
    /// Smallest ⋆-closed semigroup containing the generators and the
    /// identity.
    ///
    /// Element order is deterministic: the identity first, then the
    /// deduplicated generators in canonical order, then breadth-first
    /// layers of new products and stars, each layer sorted canonically.
    /// The void map appears only if some product reaches it.
    pub fn generate_closure(
        generators: &[PartialBijection],
        cap: usize,
    ) -> Result<Self, IsgError> {
        let ground_size = match generators.first() {
            Some(g) => g.ground_size(),
            None => 1,
        };
        if generators.iter().any(|g| g.ground_size() != ground_size) {
            return Err(IsgError::MixedGroundSets);
        }
        let ground = GroundSet::new(ground_size).expect("positive size");

        let mut elements = vec![PartialBijection::identity(&ground)];
        let mut sorted_gens: Vec<PartialBijection> = generators.to_vec();
        sorted_gens.sort();
        sorted_gens.dedup();
        for g in sorted_gens {
            if !elements.contains(&g) {
                elements.push(g);
            }
        }
        let mut index: HashMap<PartialBijection, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();

        loop {
            let mut layer: Vec<PartialBijection> = Vec::new();
            for a in &elements {
                let s = a.star();
                if !index.contains_key(&s) && !layer.contains(&s) {
                    layer.push(s);
                }
                for b in &elements {
                    let p = a.compose(b)?;
                    if !index.contains_key(&p) && !layer.contains(&p) {
                        layer.push(p);
                    }
                }
            }
            if layer.is_empty() {
                break;
            }
            layer.sort();
            for e in layer {
                index.insert(e.clone(), elements.len());
                elements.push(e);
            }
            if elements.len() > cap {
                return Err(IsgError::ClosureCapExceeded {
                    cap,
                    reached: elements.len(),
                });
            }
        }

        Self::from_closed_elements(ground, elements)
    }

    /// Builds the table from an explicitly closed element list (identity
    /// included).  Fails if the list is not closed or has duplicates.
    pub fn from_elements(
        ground: GroundSet,
        elements: Vec<PartialBijection>,
    ) -> Result<Self, IsgError> {
        Self::from_closed_elements(ground, elements)
    }

    fn from_closed_elements(
        ground: GroundSet,
        elements: Vec<PartialBijection>,
    ) -> Result<Self, IsgError> {
        let n = elements.len();
        let mut index = HashMap::with_capacity(n);
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(IsgError::DuplicateElement(i));
            }
        }
        let unit = *index
            .get(&PartialBijection::identity(&ground))
            .ok_or(IsgError::MissingUnit)?;
        let zero = index.get(&PartialBijection::void(&ground)).copied();

        let mut mult = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                let p = elements[i].compose(&elements[j])?;
                mult[i * n + j] = *index
                    .get(&p)
                    .ok_or(IsgError::NotClosed { left: i, right: j })?;
            }
        }
        let mut star = vec![0usize; n];
        for (i, e) in elements.iter().enumerate() {
            star[i] = *index
                .get(&e.star())
                .ok_or(IsgError::NotClosed { left: i, right: i })?;
        }
        Ok(InverseSemigroup {
            ground,
            elements,
            index,
            mult,
            star,
            unit,
            zero,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn element(&self, i: usize) -> &PartialBijection {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[PartialBijection] {
        &self.elements
    }

    pub fn index_of(&self, e: &PartialBijection) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn is_zero(&self, i: usize) -> bool {
        self.zero == Some(i)
    }

    pub fn mult(&self, i: usize, j: usize) -> usize {
        self.mult[i * self.elements.len() + j]
    }

    pub fn star_of(&self, i: usize) -> usize {
        self.star[i]
    }

    pub fn is_idempotent(&self, i: usize) -> bool {
        self.mult(i, i) == i
    }

    /// Element ids that are not below any strictly larger element.
    pub fn maximal_elements(&self) -> Vec<usize> {
        let n = self.len();
        (0..n)
            .filter(|&i| {
                (0..n)
                    .all(|j| i == j || !self.elements[i].natural_leq(&self.elements[j]).unwrap())
            })
            .collect()
    }

    /// The sub-semilattice of idempotents, as its own table.
    ///
    /// Contains the unit, the zero if present, and is commutative — all of
    /// which hold automatically for partial-identity elements.
    pub fn idempotent_semilattice(&self) -> InverseSemigroup {
        let idem: Vec<PartialBijection> = (0..self.len())
            .filter(|&i| self.is_idempotent(i))
            .map(|i| self.elements[i].clone())
            .collect();
        Self::from_closed_elements(self.ground.clone(), idem)
            .expect("idempotents are closed under product and star")
    }

    /// JSON dump: element pair arrays, multiplication and star tables,
    /// unit and zero indices.
    pub fn to_json(&self) -> serde_json::Value {
        let n = self.len();
        json!({
            "ground": self.ground,
            "elements": self.elements.iter().map(|e| e.to_json()).collect::<Vec<_>>(),
            "mult": (0..n).map(|i| (0..n).map(|j| self.mult(i, j)).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "star": self.star,
            "unit": self.unit,
            "zero": self.zero,
        })
    }
}

/// The set `M` of maximal elements together with its partially defined
/// product: `x·y` is the unique maximal element above `β_x β_y`, defined
/// when that product is not the zero.
#[derive(Clone, Debug)]
pub struct MaximalStructure {
    /// Element ids of the maximal elements, ascending.
    m: Vec<usize>,
    /// Position of the unit inside `m`.
    e: usize,
    /// For each element id: position in `m` of its unique maximal
    /// majorant (`None` exactly for the zero element).
    majorant: Vec<Option<usize>>,
    /// Partial product table over positions in `m`.
    pmul: Vec<Option<usize>>,
    /// Involution over positions in `m`.
    pinv: Vec<usize>,
}

impl MaximalStructure {
    pub fn maximal_ids(&self) -> &[usize] {
        &self.m
    }

    pub fn len(&self) -> usize {
        self.m.len()
    }

    pub fn is_empty(&self) -> bool {
        self.m.is_empty()
    }

    /// Position of the unit label.
    pub fn unit_pos(&self) -> usize {
        self.e
    }

    /// Element id of the maximal element at position `x`.
    pub fn element_id(&self, x: usize) -> usize {
        self.m[x]
    }

    /// Position in `M` of the unique maximal majorant of element `id`,
    /// `None` for the zero element.
    pub fn majorant_of(&self, id: usize) -> Option<usize> {
        self.majorant[id]
    }

    /// The partial product on `M`; `None` means undefined
    /// (`β_x β_y` is the zero).
    pub fn partial_product(&self, x: usize, y: usize) -> Option<usize> {
        self.pmul[x * self.m.len() + y]
    }

    /// Whether the partial product is everywhere defined.
    pub fn is_total(&self) -> bool {
        self.pmul.iter().all(|p| p.is_some())
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.pinv[x]
    }

    /// Exhaustively verifies the partial-group laws; returns one
    /// description per violated instance (empty = all laws hold).
    ///
    /// Laws: partial associativity on triples with `β_x β_y β_z` nonzero;
    /// `e` a two-sided unit; the involution with `x⁻¹·x = x·x⁻¹ = e`;
    /// `x·y = z ⇒ x⁻¹·z = y ∧ z·y⁻¹ = x`; and cancellation.
    pub fn verify_laws(&self, semigroup: &InverseSemigroup) -> Vec<String> {
        let mut bad = Vec::new();
        let k = self.m.len();
        let prod = |x: usize, y: usize| self.partial_product(x, y);

        for x in 0..k {
            if prod(self.e, x) != Some(x) || prod(x, self.e) != Some(x) {
                bad.push(format!("unit law fails at position {x}"));
            }
            let xi = self.pinv[x];
            if self.pinv[xi] != x {
                bad.push(format!("involution not self-inverse at {x}"));
            }
            if prod(xi, x) != Some(self.e) || prod(x, xi) != Some(self.e) {
                bad.push(format!("x⁻¹·x = x·x⁻¹ = e fails at {x}"));
            }
        }

        // Pair laws.
        for x in 0..k {
            for y in 0..k {
                let Some(z) = prod(x, y) else { continue };
                if prod(self.pinv[x], z) != Some(y) {
                    bad.push(format!("x⁻¹·(x·y) = y fails at ({x},{y})"));
                }
                if prod(z, self.pinv[y]) != Some(x) {
                    bad.push(format!("(x·y)·y⁻¹ = x fails at ({x},{y})"));
                }
                if prod(self.pinv[y], self.pinv[x]) != Some(self.pinv[z]) {
                    bad.push(format!("y⁻¹·x⁻¹ = (x·y)⁻¹ fails at ({x},{y})"));
                }
            }
        }

        // Cancellation.
        for x in 0..k {
            for y in 0..k {
                for z in 0..k {
                    if y == z {
                        continue;
                    }
                    if let (Some(a), Some(b)) = (prod(x, y), prod(x, z)) {
                        if a == b {
                            bad.push(format!("left cancellation fails at ({x},{y},{z})"));
                        }
                    }
                    if let (Some(a), Some(b)) = (prod(y, x), prod(z, x)) {
                        if a == b {
                            bad.push(format!("right cancellation fails at ({x},{y},{z})"));
                        }
                    }
                }
            }
        }

        // Partial associativity on triples with nonzero triple product.
        for x in 0..k {
            for y in 0..k {
                let xy_elem = semigroup.mult(self.m[x], self.m[y]);
                for z in 0..k {
                    let xyz_elem = semigroup.mult(xy_elem, self.m[z]);
                    if semigroup.is_zero(xyz_elem) {
                        continue;
                    }
                    let left = prod(x, y).and_then(|w| prod(w, z));
                    let right = prod(y, z).and_then(|w| prod(x, w));
                    if left.is_none() || left != right {
                        bad.push(format!(
                            "partial associativity fails at ({x},{y},{z}): {left:?} vs {right:?}"
                        ));
                    }
                }
            }
        }
        bad
    }

    /// Checks that the majorant map is multiplicative wherever products
    /// are nonzero.  With no zero in the semigroup this says the majorant
    /// map is a semigroup homomorphism onto the group `(M, ·)`.
    pub fn verify_majorant_homomorphism(&self, semigroup: &InverseSemigroup) -> Vec<String> {
        let mut bad = Vec::new();
        for a in 0..semigroup.len() {
            for b in 0..semigroup.len() {
                let ab = semigroup.mult(a, b);
                if semigroup.is_zero(ab) || semigroup.is_zero(a) || semigroup.is_zero(b) {
                    continue;
                }
                let (Some(xa), Some(xb), Some(xab)) =
                    (self.majorant[a], self.majorant[b], self.majorant[ab])
                else {
                    continue;
                };
                match self.partial_product(xa, xb) {
                    Some(p) if p == xab => {}
                    other => bad.push(format!(
                        "majorant({a})·majorant({b}) = {other:?} but majorant of product is {xab}"
                    )),
                }
            }
        }
        bad
    }
}

/// Outcome of the unique-maximal-majorant classification.
#[derive(Clone, Debug)]
pub enum FTildeVerdict {
    /// Every nonzero element has a unique maximal majorant; the partial
    /// group structure on the maximal set is attached.
    FTilde(MaximalStructure),
    /// Concrete witness: a nonzero element below two distinct maximal
    /// elements.
    NotFTilde {
        witness: usize,
        majorants: (usize, usize),
    },
}

impl FTildeVerdict {
    pub fn is_f_tilde(&self) -> bool {
        matches!(self, FTildeVerdict::FTilde(_))
    }

    pub fn structure(&self) -> Option<&MaximalStructure> {
        match self {
            FTildeVerdict::FTilde(ms) => Some(ms),
            FTildeVerdict::NotFTilde { .. } => None,
        }
    }
}

/// Decides whether every nonzero element of `s` has a unique maximal
/// majorant, returning either the [`MaximalStructure`] or a witness.
pub fn classify_f_tilde(s: &InverseSemigroup) -> FTildeVerdict {
    let n = s.len();
    let maximal = s.maximal_elements();
    let mut majorant: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        if s.is_zero(i) {
            continue;
        }
        let mut found: Option<usize> = None;
        for (pos, &mid) in maximal.iter().enumerate() {
            if s.element(i).natural_leq(s.element(mid)).unwrap() {
                if let Some(prev) = found {
                    return FTildeVerdict::NotFTilde {
                        witness: i,
                        majorants: (maximal[prev], mid),
                    };
                }
                found = Some(pos);
            }
        }
        majorant[i] = Some(found.expect("finite poset: every element has a maximal majorant"));
    }

    let k = maximal.len();
    let e = maximal
        .iter()
        .position(|&id| id == s.unit())
        .expect("identity is maximal");
    let mut pmul = vec![None; k * k];
    for x in 0..k {
        for y in 0..k {
            let p = s.mult(maximal[x], maximal[y]);
            if !s.is_zero(p) {
                pmul[x * k + y] = Some(majorant[p].expect("nonzero product has a majorant"));
            }
        }
    }
    let pinv: Vec<usize> = (0..k)
        .map(|x| {
            maximal
                .iter()
                .position(|&id| id == s.star_of(maximal[x]))
                .expect("star of a maximal element is maximal")
        })
        .collect();

    FTildeVerdict::FTilde(MaximalStructure {
        m: maximal,
        e,
        majorant,
        pmul,
        pinv,
    })
}

/// Predicts, from the orbit structure of the single generator alone,
/// whether its closure has unique maximal majorants.
///
/// The closure fails exactly when the generator has both a nonempty cycle
/// part and a nonempty transient part, and the cycle order `k` satisfies
/// `k ≤ 2(ν−1)` for the transient nilpotency index `ν`: two distinct
/// powers `βⁿ` with exponents congruent mod `k` are then both maximal and
/// sit above the same pure-cycle element.  A transient part with no
/// arrows (`ν = 1`) never creates a collision, and neither does a cycle
/// part alone (a group) or a transient part alone (distinct powers meet
/// only in the void map).
pub fn predicts_f_tilde(beta: &PartialBijection) -> bool {
    let rep = beta.classify_point_dynamics();
    match (rep.core_period, rep.nilpotency_index) {
        (Some(k), Some(nu)) => k > 2 * (nu - 1),
        _ => true,
    }
}

/// A multiplicative `{0,1}`-valued function on a finite semilattice,
/// normalized to `1` at the unit and `0` at the zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    /// Element id of the principal generator: the least element mapped
    /// to 1.
    pub base: usize,
    /// Value at each element id.
    pub values: Vec<bool>,
}

impl Character {
    pub fn eval(&self, element: usize) -> bool {
        self.values[element]
    }
}

/// All characters of a finite semilattice: the principal character at
/// each nonzero element (`ζ_γ(γ′) = 1` iff `γ′ ≥ γ`), deduplicated.
///
/// For finite semilattices these are exactly the multiplicative
/// `{0,1}`-functions with `ζ(ε) = 1`, `ζ(θ) = 0`: the set where a
/// character equals 1 is a filter, and every filter of a finite
/// meet-semilattice is principal.
pub fn semilattice_characters(e: &InverseSemigroup) -> Result<Vec<Character>, IsgError> {
    for i in 0..e.len() {
        if !e.is_idempotent(i) {
            return Err(IsgError::NotASemilattice(i));
        }
    }
    let mut chars = Vec::new();
    for gamma in 0..e.len() {
        if e.is_zero(gamma) {
            continue;
        }
        let values: Vec<bool> = (0..e.len())
            .map(|g| e.element(gamma).natural_leq(e.element(g)).unwrap())
            .collect();
        let ch = Character {
            base: gamma,
            values,
        };
        if !chars.iter().any(|c: &Character| c.values == ch.values) {
            chars.push(ch);
        }
    }
    Ok(chars)
}
