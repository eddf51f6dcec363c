//! Weight multisets with multiplicities: the computational stand-in for a
//! finite-dimensional representation restricted to the maximal torus.
//!
//! A `WeightRep` is a canonical merged multiset of integer covectors. The
//! builders below produce the multisets of the usual constructions; whether a
//! multiset is Weyl-invariant (i.e. could come from an actual representation)
//! is checked against a `RootDatum` at the point of use.

use super::{pairing, LieError, Preset, RootDatum};
use std::collections::BTreeMap;
use std::fmt;

/// Weyl-invariant weight multiset with multiplicities, in canonical merged
/// form: distinct weights, each with a positive multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightRep {
    entries: BTreeMap<Vec<i64>, u64>,
    rank: usize,
}

impl WeightRep {
    pub fn empty(rank: usize) -> Self {
        WeightRep {
            entries: BTreeMap::new(),
            rank,
        }
    }

    /// Builds the canonical merged form from (weight, multiplicity) pairs.
    /// Pairs with zero multiplicity are dropped; repeated weights merge.
    pub fn from_pairs(rank: usize, pairs: impl IntoIterator<Item = (Vec<i64>, u64)>) -> Result<Self, LieError> {
        let mut entries: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
        for (w, m) in pairs {
            if w.len() != rank {
                return Err(LieError::RankMismatch {
                    expected: rank,
                    got: w.len(),
                });
            }
            if m > 0 {
                *entries.entry(w).or_insert(0) += m;
            }
        }
        Ok(WeightRep { entries, rank })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<i64>, u64)> {
        self.entries.iter().map(|(w, &m)| (w, m))
    }

    pub fn multiplicity(&self, weight: &[i64]) -> u64 {
        self.entries.get(weight).copied().unwrap_or(0)
    }

    pub fn dim(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn num_distinct_weights(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// True when the multiset is fixed by every simple reflection of `d`.
    pub fn is_weyl_invariant(&self, d: &RootDatum) -> bool {
        if d.rank() != self.rank {
            return false;
        }
        d.simple_reflections().iter().all(|s| {
            self.entries
                .iter()
                .all(|(w, &m)| self.multiplicity(&s.apply_weight_involutive(w)) == m)
        })
    }

    /// Embeds a rep on a rank-`self.rank` lattice into a larger product
    /// lattice, placing the coordinates at `offset`.
    pub fn embed(&self, offset: usize, total_rank: usize) -> Self {
        assert!(offset + self.rank <= total_rank, "embed out of range");
        let entries = self
            .entries
            .iter()
            .map(|(w, &m)| {
                let mut v = vec![0; total_rank];
                v[offset..offset + self.rank].copy_from_slice(w);
                (v, m)
            })
            .collect();
        WeightRep {
            entries,
            rank: total_rank,
        }
    }
}

impl fmt::Display for WeightRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, m) in &self.entries {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{m}·{w:?}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Negates every weight.
pub fn dual(r: &WeightRep) -> WeightRep {
    WeightRep {
        entries: r
            .entries
            .iter()
            .map(|(w, &m)| (w.iter().map(|x| -x).collect(), m))
            .collect(),
        rank: r.rank,
    }
}

/// Disjoint union of multisets.
pub fn direct_sum(a: &WeightRep, b: &WeightRep) -> Result<WeightRep, LieError> {
    if a.rank != b.rank {
        return Err(LieError::RankMismatch {
            expected: a.rank,
            got: b.rank,
        });
    }
    let mut entries = a.entries.clone();
    for (w, &m) in &b.entries {
        *entries.entry(w.clone()).or_insert(0) += m;
    }
    Ok(WeightRep { entries, rank: a.rank })
}

/// Tensor product: weights add, multiplicities multiply.
pub fn tensor(a: &WeightRep, b: &WeightRep) -> Result<WeightRep, LieError> {
    if a.rank != b.rank {
        return Err(LieError::RankMismatch {
            expected: a.rank,
            got: b.rank,
        });
    }
    let mut entries: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for (w1, &m1) in &a.entries {
        for (w2, &m2) in &b.entries {
            let w: Vec<i64> = w1.iter().zip(w2).map(|(x, y)| x + y).collect();
            *entries.entry(w).or_insert(0) += m1 * m2;
        }
    }
    Ok(WeightRep { entries, rank: a.rank })
}

/// `N ⊕ N*`: always symplectic at the weight level.
pub fn cotangent(n: &WeightRep) -> WeightRep {
    direct_sum(n, &dual(n)).expect("same rank by construction")
}

/// Irreducible string of highest weight `(k/2)·α` on a rank-1 datum with one
/// simple root: weights `(k/2)α, (k/2 − 1)α, …, −(k/2)α`.
pub fn sl2_irrep(d: &RootDatum, k: u64) -> Result<WeightRep, LieError> {
    if d.rank() != 1 || d.num_simple_roots() != 1 {
        return Err(LieError::InvalidRep(format!(
            "sl2_irrep needs a rank-1 datum with one simple root, got {}",
            d.name()
        )));
    }
    let alpha = d.simple_roots()[0][0];
    if (k as i64 * alpha) % 2 != 0 {
        return Err(LieError::InvalidRep(format!(
            "the irrep of highest weight {k} has no integral weights on the lattice of {}",
            d.name()
        )));
    }
    let top = (k as i64 * alpha) / 2;
    let pairs = (0..=k).map(|j| (vec![top - j as i64 * alpha], 1));
    WeightRep::from_pairs(1, pairs)
}

/// Weight multiset of the tautological representation of a preset group.
pub fn defining_rep(p: Preset) -> Result<WeightRep, LieError> {
    match p {
        Preset::Sl(2) => WeightRep::from_pairs(1, [(vec![1], 1), (vec![-1], 1)]),
        Preset::Pgl(2) => {
            // PGL(2) has no 2-dimensional representation; the smallest
            // faithful one is the adjoint.
            WeightRep::from_pairs(1, [(vec![1], 1), (vec![0], 1), (vec![-1], 1)])
        }
        Preset::Sp(m) if m > 0 && m % 2 == 0 => {
            let n = m / 2;
            WeightRep::from_pairs(n, (0..n).flat_map(|i| plus_minus_basis(n, i)))
        }
        Preset::So(m) if m >= 2 => {
            if m == 2 {
                return WeightRep::from_pairs(1, [(vec![1], 1), (vec![-1], 1)]);
            }
            let n = m / 2;
            let mut pairs: Vec<(Vec<i64>, u64)> =
                (0..n).flat_map(|i| plus_minus_basis(n, i)).collect();
            if m % 2 == 1 {
                pairs.push((vec![0; n], 1));
            }
            WeightRep::from_pairs(n, pairs)
        }
        Preset::Gl(n) => WeightRep::from_pairs(
            n,
            (0..n).map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                (v, 1)
            }),
        ),
        _ => Err(LieError::UnsupportedPreset(format!(
            "{p} has no defining representation here"
        ))),
    }
}

fn plus_minus_basis(rank: usize, i: usize) -> [(Vec<i64>, u64); 2] {
    let mut plus = vec![0; rank];
    plus[i] = 1;
    let mut minus = vec![0; rank];
    minus[i] = -1;
    [(plus, 1), (minus, 1)]
}

/// Random Weyl-invariant weight multiset: a few random weight orbits with
/// random multiplicities. Useful for seeded closure properties (everything
/// of the form `N ⊕ N*` with Weyl-invariant `N` passes the anomaly check).
pub fn random_weyl_invariant_rep(d: &RootDatum, rng: &mut impl rand::Rng) -> WeightRep {
    let rank = d.rank();
    let orbits = rng.gen_range(1..=3);
    let mut pairs: Vec<(Vec<i64>, u64)> = Vec::new();
    for _ in 0..orbits {
        let seedw: Vec<i64> = (0..rank).map(|_| rng.gen_range(-2i64..=2)).collect();
        let mult = rng.gen_range(1u64..=2);
        for w in d.weight_orbit(&seedw) {
            pairs.push((w, mult));
        }
    }
    WeightRep::from_pairs(rank, pairs).expect("orbit weights have the right rank")
}

/// One reason a weight multiset fails to look symplectic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymplecticViolation {
    /// `m_χ ≠ m_{−χ}` for the recorded weight.
    NotNegationSymmetric(Vec<i64>),
    OddDimension(u64),
    OddZeroWeightMultiplicity(u64),
    NotWeylInvariant,
    RankMismatch,
}

impl fmt::Display for SymplecticViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymplecticViolation::NotNegationSymmetric(w) => {
                write!(f, "multiplicities of {w:?} and its negation differ")
            }
            SymplecticViolation::OddDimension(d) => write!(f, "total dimension {d} is odd"),
            SymplecticViolation::OddZeroWeightMultiplicity(m) => {
                write!(f, "zero weight has odd multiplicity {m}")
            }
            SymplecticViolation::NotWeylInvariant => {
                write!(f, "weight multiset is not Weyl-invariant")
            }
            SymplecticViolation::RankMismatch => write!(f, "rep rank does not match the datum"),
        }
    }
}

/// Outcome of the weight-level symplectic test, with diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticCheck {
    pub violations: Vec<SymplecticViolation>,
}

impl SymplecticCheck {
    pub fn is_symplectic(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Necessary weight-level conditions for a multiset to underlie a symplectic
/// representation: negation symmetry, even total dimension, even zero-weight
/// multiplicity, Weyl invariance.
pub fn is_symplectic_weights(d: &RootDatum, r: &WeightRep) -> SymplecticCheck {
    let mut violations = Vec::new();
    if d.rank() != r.rank() {
        return SymplecticCheck {
            violations: vec![SymplecticViolation::RankMismatch],
        };
    }
    for (w, m) in r.entries() {
        let neg: Vec<i64> = w.iter().map(|x| -x).collect();
        if r.multiplicity(&neg) != m {
            violations.push(SymplecticViolation::NotNegationSymmetric(w.clone()));
            break;
        }
    }
    if !r.dim().is_multiple_of(2) {
        violations.push(SymplecticViolation::OddDimension(r.dim()));
    }
    let zero_mult = r.multiplicity(&vec![0; r.rank()]);
    if !zero_mult.is_multiple_of(2) {
        violations.push(SymplecticViolation::OddZeroWeightMultiplicity(zero_mult));
    }
    if !r.is_weyl_invariant(d) {
        violations.push(SymplecticViolation::NotWeylInvariant);
    }
    SymplecticCheck { violations }
}

/// Decomposes a rank-1 weight multiset into irreducible strings, returning
/// the map `k ↦ multiplicity of the string of highest weight k` (the pairing
/// value with the coroot). Fails when the multiset is not a sum of strings.
pub fn sl2_isotypic_decomposition(
    d: &RootDatum,
    r: &WeightRep,
) -> Result<BTreeMap<u64, u64>, LieError> {
    if d.rank() != 1 || d.num_simple_roots() != 1 {
        return Err(LieError::InvalidRep(
            "isotypic decomposition needs a rank-1 datum with one simple root".into(),
        ));
    }
    if r.rank() != 1 {
        return Err(LieError::RankMismatch {
            expected: 1,
            got: r.rank(),
        });
    }
    let coroot = &d.simple_coroots()[0];
    // Weight ↦ pairing with the coroot; injective on a rank-1 lattice.
    let mut levels: BTreeMap<i64, u64> = BTreeMap::new();
    for (w, m) in r.entries() {
        *levels.entry(pairing(w, coroot)).or_insert(0) += m;
    }
    let mut decomp: BTreeMap<u64, u64> = BTreeMap::new();
    while let Some((&top, &mult)) = levels.iter().next_back() {
        if top < 0 {
            return Err(LieError::InvalidRep(
                "weight multiset is not negation-symmetric, cannot peel strings".into(),
            ));
        }
        if mult == 0 {
            levels.remove(&top);
            continue;
        }
        let mut level = top;
        loop {
            let entry = levels.entry(level).or_insert(0);
            if *entry < mult {
                return Err(LieError::InvalidRep(format!(
                    "multiset is not a sum of weight strings: level {level} underflows while peeling the string of highest weight {top}"
                )));
            }
            *entry -= mult;
            if *entry == 0 {
                levels.remove(&level);
            }
            if level == -top {
                break;
            }
            level -= 2;
        }
        *decomp.entry(top as u64).or_insert(0) += mult;
    }
    Ok(decomp)
}

/// Rebuilds the weight multiset of `⊕_k V^k ⊗ C^{m_k}` on the given datum.
pub fn rebuild_from_isotypic(
    d: &RootDatum,
    decomp: &BTreeMap<u64, u64>,
) -> Result<WeightRep, LieError> {
    let mut acc = WeightRep::empty(1);
    for (&k, &m) in decomp {
        if m == 0 {
            continue;
        }
        let string = sl2_irrep(d, k)?;
        for _ in 0..m {
            acc = direct_sum(&acc, &string)?;
        }
    }
    Ok(acc)
}

/// Halves a negation-symmetric multiset: returns `N` with `R = N ⊕ N*` as
/// multisets, or `None` when no such split exists.
pub fn weight_level_cotangent_split(r: &WeightRep) -> Option<WeightRep> {
    let mut entries: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for (w, m) in r.entries() {
        let neg: Vec<i64> = w.iter().map(|x| -x).collect();
        if r.multiplicity(&neg) != m {
            return None;
        }
        if w.iter().all(|&x| x == 0) {
            if m % 2 != 0 {
                return None;
            }
            if m > 0 {
                entries.insert(w.clone(), m / 2);
            }
        } else if *w > neg {
            // One representative per ± pair, full multiplicity.
            entries.insert(w.clone(), m);
        }
    }
    Some(WeightRep {
        entries,
        rank: r.rank(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2_rep(pairs: &[(i64, u64)]) -> WeightRep {
        WeightRep::from_pairs(1, pairs.iter().map(|&(w, m)| (vec![w], m))).unwrap()
    }

    #[test]
    fn sl2_irrep_weight_strings() {
        let d = RootDatum::sl2();
        let v2 = sl2_irrep(&d, 2).unwrap();
        assert_eq!(v2, sl2_rep(&[(2, 1), (0, 1), (-2, 1)]));
        let v1 = sl2_irrep(&d, 1).unwrap();
        assert_eq!(v1, sl2_rep(&[(1, 1), (-1, 1)]));
    }

    #[test]
    fn pgl2_irreps_need_even_highest_weight() {
        let d = RootDatum::pgl2();
        let v2 = sl2_irrep(&d, 2).unwrap();
        assert_eq!(v2, sl2_rep(&[(1, 1), (0, 1), (-1, 1)]));
        assert!(sl2_irrep(&d, 3).is_err());
    }

    #[test]
    fn cotangent_of_single_weight() {
        let n = sl2_rep(&[(1, 1)]);
        assert_eq!(cotangent(&n), sl2_rep(&[(1, 1), (-1, 1)]));
    }

    #[test]
    fn defining_reps() {
        let sp4 = defining_rep(Preset::Sp(4)).unwrap();
        assert_eq!(
            sp4,
            WeightRep::from_pairs(
                2,
                [
                    (vec![1, 0], 1),
                    (vec![-1, 0], 1),
                    (vec![0, 1], 1),
                    (vec![0, -1], 1)
                ]
            )
            .unwrap()
        );
        let d = RootDatum::preset(Preset::Sp(4)).unwrap();
        assert!(sp4.is_weyl_invariant(&d));

        let so5 = defining_rep(Preset::So(5)).unwrap();
        assert_eq!(so5.dim(), 5);
        assert!(so5.is_weyl_invariant(&RootDatum::preset(Preset::So(5)).unwrap()));
    }

    #[test]
    fn dual_is_an_involution() {
        let r = sl2_rep(&[(3, 2), (1, 1), (-1, 1), (-3, 2)]);
        assert_eq!(dual(&dual(&r)), r);
    }

    #[test]
    fn tensor_multiplies_multiplicities_over_sums() {
        let a = sl2_rep(&[(1, 1), (-1, 1)]);
        let sq = tensor(&a, &a).unwrap();
        assert_eq!(sq, sl2_rep(&[(2, 1), (0, 2), (-2, 1)]));
    }

    #[test]
    fn symplectic_check_examples() {
        let d = RootDatum::sl2();
        let v1 = sl2_irrep(&d, 1).unwrap();
        assert!(is_symplectic_weights(&d, &v1).is_symplectic());

        // A single V^2 has a single zero weight: not symplectic.
        let v2 = sl2_irrep(&d, 2).unwrap();
        let check = is_symplectic_weights(&d, &v2);
        assert!(!check.is_symplectic());
        assert!(check
            .violations
            .contains(&SymplecticViolation::OddZeroWeightMultiplicity(1)));

        assert!(is_symplectic_weights(&d, &WeightRep::empty(1)).is_symplectic());

        // Weyl invariance is part of the check.
        let skew = sl2_rep(&[(2, 1), (-2, 1), (1, 1), (-1, 1), (0, 2)]);
        assert!(is_symplectic_weights(&d, &skew).is_symplectic());
        let not_inv = sl2_rep(&[(2, 2), (-2, 2), (0, 1), (0, 1)]);
        // {±2 with mult 2, 0 with mult 2} is Weyl-invariant; make one that is not.
        assert!(is_symplectic_weights(&d, &not_inv).is_symplectic());
    }

    #[test]
    fn isotypic_peeling() {
        let d = RootDatum::sl2();
        let r = sl2_rep(&[(1, 1), (-1, 1)]);
        assert_eq!(
            sl2_isotypic_decomposition(&d, &r).unwrap(),
            BTreeMap::from([(1, 1)])
        );

        let r = sl2_rep(&[(3, 1), (1, 1), (-1, 1), (-3, 1)]);
        assert_eq!(
            sl2_isotypic_decomposition(&d, &r).unwrap(),
            BTreeMap::from([(3, 1)])
        );

        let r = sl2_rep(&[(2, 1), (1, 2), (0, 1), (-1, 2), (-2, 1)]);
        assert_eq!(
            sl2_isotypic_decomposition(&d, &r).unwrap(),
            BTreeMap::from([(1, 2), (2, 1)])
        );
        // An extra zero weight peels off as a trivial string.
        let r = sl2_rep(&[(2, 1), (1, 2), (0, 2), (-1, 2), (-2, 1)]);
        assert_eq!(
            sl2_isotypic_decomposition(&d, &r).unwrap(),
            BTreeMap::from([(0, 1), (1, 2), (2, 1)])
        );

        // {±1} ∪ {±3} without the middle of the 3-string is fine (V^3 ⊕ V^1
        // minus nothing), but {3, -3} alone is not a sum of strings.
        let bad = sl2_rep(&[(3, 1), (-3, 1)]);
        assert!(sl2_isotypic_decomposition(&d, &bad).is_err());
    }

    #[test]
    fn isotypic_round_trip() {
        let d = RootDatum::sl2();
        let r = sl2_rep(&[(4, 1), (2, 3), (0, 4), (-2, 3), (-4, 1)]);
        let decomp = sl2_isotypic_decomposition(&d, &r).unwrap();
        assert_eq!(rebuild_from_isotypic(&d, &decomp).unwrap(), r);
    }

    #[test]
    fn cotangent_split_examples() {
        let r = sl2_rep(&[(1, 1), (-1, 1)]);
        assert_eq!(weight_level_cotangent_split(&r).unwrap(), sl2_rep(&[(1, 1)]));

        let zeros = sl2_rep(&[(0, 2)]);
        assert_eq!(
            weight_level_cotangent_split(&zeros).unwrap(),
            sl2_rep(&[(0, 1)])
        );

        let sp4 = defining_rep(Preset::Sp(4)).unwrap();
        let n = weight_level_cotangent_split(&sp4).unwrap();
        assert_eq!(
            n,
            WeightRep::from_pairs(2, [(vec![1, 0], 1), (vec![0, 1], 1)]).unwrap()
        );
        assert_eq!(direct_sum(&n, &dual(&n)).unwrap(), sp4);

        let odd_zero = sl2_rep(&[(0, 3)]);
        assert!(weight_level_cotangent_split(&odd_zero).is_none());
    }

    #[test]
    fn embed_pads_coordinates() {
        let r = sl2_rep(&[(1, 1), (-1, 1)]);
        let e = r.embed(1, 3);
        assert_eq!(e.multiplicity(&[0, 1, 0]), 1);
        assert_eq!(e.multiplicity(&[0, -1, 0]), 1);
        assert_eq!(e.rank(), 3);
    }
}
