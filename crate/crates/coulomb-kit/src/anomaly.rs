//! The trace form of a representation and the anomaly-cancellation verdict.
//!
//! For a weight multiset `R` on a datum with coweight lattice `Z^r`, the
//! trace form is the symmetric integer matrix
//! `B(λ, μ) = Σ_χ ⟨χ, λ⟩⟨χ, μ⟩ m_χ` in the lattice basis: the pullback of the
//! trace form of the defining representation of the ambient symplectic group.
//! The anomaly cancellation condition is that `B/2` is an integral bilinear
//! form taking even values on all coroots. Both parts reduce to finite
//! integer checks:
//!
//! * `B/2` integral ⟺ every Gram entry `B(e_i, e_j)` is even (bilinearity);
//! * `B/2` even on all coroots ⟺ `B(α∨, α∨) ≡ 0 (mod 4)` for the *simple*
//!   coroots — every coroot is Weyl-conjugate to a simple one and `B` is
//!   Weyl-invariant.

use crate::lie::{is_symplectic_weights, RootDatum, SymplecticCheck, WeightRep};
use crate::rat::{ratio, Rat};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnomalyError {
    #[error("representation is not symplectic at the weight level ({details}); run is_symplectic_weights for diagnostics")]
    NotSymplectic { details: String },
    #[error("rank mismatch between datum and representation")]
    RankMismatch,
}

/// Symmetric integer Gram matrix of the trace form on the coweight lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceForm {
    gram: Vec<Vec<i64>>,
}

impl TraceForm {
    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.gram[i][j]
    }

    /// Evaluates `B(λ, μ)` on arbitrary coweights.
    pub fn eval(&self, lambda: &[i64], mu: &[i64]) -> i64 {
        assert_eq!(lambda.len(), self.rank());
        assert_eq!(mu.len(), self.rank());
        let mut acc = 0;
        for (i, &a) in lambda.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in mu.iter().enumerate() {
                acc += a * self.gram[i][j] * b;
            }
        }
        acc
    }
}

/// `B(λ_i, λ_j) = Σ_χ ⟨χ, λ_i⟩⟨χ, λ_j⟩ m_χ` in the coweight basis.
pub fn trace_form(d: &RootDatum, r: &WeightRep) -> Result<TraceForm, AnomalyError> {
    if d.rank() != r.rank() {
        return Err(AnomalyError::RankMismatch);
    }
    let n = d.rank();
    let mut gram = vec![vec![0i64; n]; n];
    for (w, m) in r.entries() {
        for i in 0..n {
            if w[i] == 0 {
                continue;
            }
            for j in 0..n {
                gram[i][j] += w[i] * w[j] * m as i64;
            }
        }
    }
    Ok(TraceForm { gram })
}

/// Outcome of the anomaly check, with witnesses for every failure mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnomalyVerdict {
    /// Is `B/2` an integral bilinear form on the lattice?
    pub half_integral: bool,
    /// Basis coweights `(e_i, e_j)` with an odd Gram entry, when any.
    pub witness: Option<(Vec<i64>, Vec<i64>)>,
    /// Simple coroots `α∨` with `B(α∨, α∨) ≢ 0 (mod 4)`.
    pub coroot_failures: Vec<Vec<i64>>,
}

impl AnomalyVerdict {
    pub fn pass(&self) -> bool {
        self.half_integral && self.coroot_failures.is_empty()
    }
}

/// Decides the anomaly cancellation condition for a symplectic weight
/// multiset. Non-symplectic input is rejected: the criterion presupposes a
/// symplectic representation.
pub fn anomaly_check(d: &RootDatum, r: &WeightRep) -> Result<AnomalyVerdict, AnomalyError> {
    let check: SymplecticCheck = is_symplectic_weights(d, r);
    if !check.is_symplectic() {
        let details = check
            .violations
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("; ");
        return Err(AnomalyError::NotSymplectic { details });
    }
    let form = trace_form(d, r)?;
    let n = d.rank();
    let mut witness = None;
    'outer: for i in 0..n {
        for j in 0..n {
            if form.entry(i, j) % 2 != 0 {
                let mut ei = vec![0; n];
                ei[i] = 1;
                let mut ej = vec![0; n];
                ej[j] = 1;
                witness = Some((ei, ej));
                break 'outer;
            }
        }
    }
    let coroot_failures = d
        .simple_coroots()
        .iter()
        .filter(|cv| form.eval(cv, cv).rem_euclid(4) != 0)
        .cloned()
        .collect();
    Ok(AnomalyVerdict {
        half_integral: witness.is_none(),
        witness,
        coroot_failures,
    })
}

/// `N = Σ_χ |χ| m_χ / 4` for a rank-1 weight multiset (coordinates taken in
/// the lattice basis). Integrality of `N` is the rank-1 anomaly condition.
pub fn sl2_monopole_number(r: &WeightRep) -> Result<Rat, AnomalyError> {
    if r.rank() != 1 {
        return Err(AnomalyError::RankMismatch);
    }
    let mut total: i64 = 0;
    for (w, m) in r.entries() {
        total += w[0].abs() * m as i64;
    }
    Ok(ratio(total, 4))
}

/// The parity criterion on an isotypic decomposition: `Σ_ℓ dim M^{4ℓ+1}`
/// must be even.
pub fn sl2_parity_criterion(decomp: &BTreeMap<u64, u64>) -> bool {
    let sum: u64 = decomp
        .iter()
        .filter(|(&k, _)| k % 4 == 1)
        .map(|(_, &m)| m)
        .sum();
    sum.is_multiple_of(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{cotangent, defining_rep, sl2_irrep, Preset, WeightRep};
    use crate::rat::rat;

    #[test]
    fn trace_form_sl2_defining() {
        let d = RootDatum::sl2();
        let v1 = sl2_irrep(&d, 1).unwrap();
        let b = trace_form(&d, &v1).unwrap();
        assert_eq!(b.gram(), &[vec![2]]);
    }

    #[test]
    fn trace_form_empty_rep_is_zero() {
        let d = RootDatum::preset(Preset::Sp(4)).unwrap();
        let b = trace_form(&d, &WeightRep::empty(2)).unwrap();
        assert_eq!(b.gram(), &[vec![0, 0], vec![0, 0]]);
    }

    #[test]
    fn trace_form_sp4_defining_is_twice_identity() {
        let d = RootDatum::preset(Preset::Sp(4)).unwrap();
        let r = defining_rep(Preset::Sp(4)).unwrap();
        let b = trace_form(&d, &r).unwrap();
        assert_eq!(b.gram(), &[vec![2, 0], vec![0, 2]]);
    }

    #[test]
    fn sl2_v1_fails_on_the_coroot() {
        let d = RootDatum::sl2();
        let v1 = sl2_irrep(&d, 1).unwrap();
        let verdict = anomaly_check(&d, &v1).unwrap();
        assert!(!verdict.pass());
        assert!(verdict.half_integral);
        assert_eq!(verdict.coroot_failures, vec![vec![1]]);
    }

    #[test]
    fn sl2_cotangent_of_v1_passes() {
        let d = RootDatum::sl2();
        let v1 = sl2_irrep(&d, 1).unwrap();
        let verdict = anomaly_check(&d, &cotangent(&v1)).unwrap();
        assert!(verdict.pass());
    }

    #[test]
    fn sp_defining_fails_for_all_small_n() {
        for m in [2usize, 4, 6] {
            let d = RootDatum::preset(Preset::Sp(m)).unwrap();
            let r = defining_rep(Preset::Sp(m)).unwrap();
            let verdict = anomaly_check(&d, &r).unwrap();
            assert!(!verdict.pass(), "Sp({m}) defining should fail");
            assert!(verdict.half_integral);
            // The long coroot ε_n∨ carries B = 2 ≢ 0 (mod 4).
            let mut long = vec![0i64; m / 2];
            long[m / 2 - 1] = 1;
            assert!(verdict.coroot_failures.contains(&long));
        }
    }

    #[test]
    fn non_symplectic_input_is_rejected() {
        let d = RootDatum::sl2();
        let v2 = sl2_irrep(&d, 2).unwrap();
        assert!(matches!(
            anomaly_check(&d, &v2),
            Err(AnomalyError::NotSymplectic { .. })
        ));
    }

    #[test]
    fn monopole_numbers() {
        let d = RootDatum::sl2();
        let v1 = sl2_irrep(&d, 1).unwrap();
        assert_eq!(sl2_monopole_number(&v1).unwrap(), ratio(1, 2));

        let v3 = sl2_irrep(&d, 3).unwrap();
        assert_eq!(sl2_monopole_number(&v3).unwrap(), rat(2));

        let doubled = cotangent(&sl2_irrep(&d, 1).unwrap());
        assert_eq!(sl2_monopole_number(&doubled).unwrap(), rat(1));
    }

    #[test]
    fn symplectic_torus_reps_always_pass() {
        // With no coroots the condition is just that B/2 is integral, and
        // for ± paired weights every Gram entry is a doubled sum.
        let d = RootDatum::torus(2);
        for pairs in [
            vec![(vec![1, 0], 3), (vec![-1, 0], 3)],
            vec![(vec![2, -1], 1), (vec![-2, 1], 1), (vec![0, 0], 2)],
            vec![(vec![1, 1], 2), (vec![-1, -1], 2), (vec![3, 0], 1), (vec![-3, 0], 1)],
        ] {
            let r = WeightRep::from_pairs(2, pairs).unwrap();
            assert!(anomaly_check(&d, &r).unwrap().pass(), "{r}");
        }
    }

    #[test]
    fn parity_criterion_cases() {
        assert!(!sl2_parity_criterion(&BTreeMap::from([(1, 1)])));
        assert!(sl2_parity_criterion(&BTreeMap::from([(1, 2)])));
        assert!(sl2_parity_criterion(&BTreeMap::from([(3, 5)])));
        assert!(!sl2_parity_criterion(&BTreeMap::from([(5, 1), (4, 2)])));
    }

    #[test]
    fn trace_form_is_weyl_invariant_matrix_exactly() {
        for p in [Preset::Sp(4), Preset::So(5), Preset::So(4)] {
            let d = RootDatum::preset(p).unwrap();
            let r = cotangent(&defining_rep(p).unwrap());
            let b = trace_form(&d, &r).unwrap();
            for w in d.simple_reflections() {
                let n = d.rank();
                for i in 0..n {
                    for j in 0..n {
                        let mut ei = vec![0; n];
                        ei[i] = 1;
                        let mut ej = vec![0; n];
                        ej[j] = 1;
                        let wei = w.apply_coweight(&ei);
                        let wej = w.apply_coweight(&ej);
                        assert_eq!(b.eval(&wei, &wej), b.entry(i, j));
                    }
                }
            }
        }
    }
}
