//! Explicit rank-1 Coulomb-branch presentations and their graded counts.
//!
//! A good rank-1 theory with monopole number `N` is presented by three
//! generators `δ, η, ξ` of degrees `(2, N−2, N−1)` and a single relation:
//! `ξ² = δη² − δ^{N−1}` for `N > 0`, and `ξ² = δη² + η` for `N = 0`. The
//! degrees are the unique assignment with `deg δ = 2` making the relation
//! homogeneous. Since the relation is monic in `ξ`, the quotient has the
//! monomial basis `δ^a η^b ξ^ε`, so for `N ≥ 3` the graded count is
//! `(1 + q^{N−1}) / ((1−q²)(1−q^{N−2}))`.

use super::MonopoleError;
use crate::anomaly::{anomaly_check, sl2_monopole_number};
use crate::lie::{RootDatum, WeightRep};
use crate::rat::{format_rat, is_integer};
use crate::series::HilbertSeries;
use num_traits::{Signed, ToPrimitive};
use std::fmt;

/// Which branch of the relation applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationKind {
    /// `ξ² = δη² + η` (N = 0).
    NZero,
    /// `ξ² = δη² − δ^{N−1}` (N > 0).
    NPositive,
}

/// Three-generator presentation of a rank-1 Coulomb branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Presentation {
    pub monopole_number: u64,
    pub kind: RelationKind,
    /// Degrees of (δ, η, ξ); negative for N < 2.
    pub degrees: (i64, i64, i64),
    pub relation: String,
}

impl Sl2Presentation {
    pub fn for_monopole_number(n: u64) -> Self {
        let kind = if n == 0 {
            RelationKind::NZero
        } else {
            RelationKind::NPositive
        };
        let relation = match n {
            0 => "xi^2 = delta*eta^2 + eta".to_string(),
            1 => "xi^2 = delta*eta^2 - 1".to_string(),
            2 => "xi^2 = delta*eta^2 - delta".to_string(),
            _ => format!("xi^2 = delta*eta^2 - delta^{}", n - 1),
        };
        Sl2Presentation {
            monopole_number: n,
            kind,
            degrees: (2, n as i64 - 2, n as i64 - 1),
            relation,
        }
    }

    /// The relation is homogeneous: `2·deg ξ = deg δ + 2·deg η`, and equals
    /// `(N−1)·deg δ` for `N > 0` or `deg η` for `N = 0`.
    pub fn is_homogeneous(&self) -> bool {
        let (d, e, x) = self.degrees;
        let lhs = 2 * x;
        if lhs != d + 2 * e {
            return false;
        }
        match self.kind {
            RelationKind::NZero => lhs == e,
            RelationKind::NPositive => lhs == (self.monopole_number as i64 - 1) * d,
        }
    }
}

impl fmt::Display for Sl2Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "C[delta, eta, xi] / ({}), deg(delta, eta, xi) = {:?}",
            self.relation, self.degrees
        )
    }
}

/// Builds the presentation for a symplectic, anomaly-free rank-1 multiset.
/// A non-integral monopole number is rejected with the integrality
/// requirement spelled out.
pub fn sl2_presentation(d: &RootDatum, r: &WeightRep) -> Result<Sl2Presentation, MonopoleError> {
    let n = sl2_monopole_number(r)?;
    if !is_integer(&n) || n.is_negative() {
        return Err(MonopoleError::NonIntegralMonopoleNumber(format_rat(&n)));
    }
    let verdict = anomaly_check(d, r)?;
    if !verdict.pass() {
        // For rank-1 data the two criteria agree; surface the N-form.
        return Err(MonopoleError::NonIntegralMonopoleNumber(format_rat(&n)));
    }
    let n = n.to_integer().to_u64().expect("non-negative integer N");
    Ok(Sl2Presentation::for_monopole_number(n))
}

/// Graded monomial count `(1 + q^{N−1}) / ((1−q²)(1−q^{N−2}))` of the
/// presentation, defined for `N ≥ 3` (positive grading).
pub fn presentation_hilbert_series(
    p: &Sl2Presentation,
    order: i64,
) -> Result<HilbertSeries, MonopoleError> {
    let n = p.monopole_number;
    if n < 3 {
        return Err(MonopoleError::NonPositiveGrading(n));
    }
    let order2 = 2 * order;
    Ok(HilbertSeries::rational_function(
        &[(0, crate::rat::rat(1)), (n as i64 - 1, crate::rat::rat(1))],
        &[2, n as i64 - 2],
        order2,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{cotangent, sl2_irrep, WeightRep};
    use crate::rat::rat;

    #[test]
    fn relation_strings() {
        assert_eq!(
            Sl2Presentation::for_monopole_number(0).relation,
            "xi^2 = delta*eta^2 + eta"
        );
        assert_eq!(
            Sl2Presentation::for_monopole_number(3).relation,
            "xi^2 = delta*eta^2 - delta^2"
        );
        assert_eq!(
            Sl2Presentation::for_monopole_number(1).relation,
            "xi^2 = delta*eta^2 - 1"
        );
    }

    #[test]
    fn degrees_are_homogeneous() {
        for n in 0..10 {
            let p = Sl2Presentation::for_monopole_number(n);
            assert!(p.is_homogeneous(), "N = {n}");
            assert_eq!(p.degrees.0, 2);
        }
    }

    #[test]
    fn presentation_from_reps() {
        let d = RootDatum::sl2();
        // V^1 ⊗ C^6: N = 3.
        let r = WeightRep::from_pairs(1, [(vec![1], 6), (vec![-1], 6)]).unwrap();
        let p = sl2_presentation(&d, &r).unwrap();
        assert_eq!(p.monopole_number, 3);

        // cotangent(V^1): N = 1.
        let c = cotangent(&sl2_irrep(&d, 1).unwrap());
        let p = sl2_presentation(&d, &c).unwrap();
        assert_eq!(p.monopole_number, 1);
        assert_eq!(p.degrees, (2, -1, 0));

        // Single V^1: N = 1/2 is rejected.
        let v1 = sl2_irrep(&d, 1).unwrap();
        let err = sl2_presentation(&d, &v1).unwrap_err();
        assert!(matches!(err, MonopoleError::NonIntegralMonopoleNumber(ref s) if s == "1/2"));
    }

    #[test]
    fn series_for_n3_and_n4() {
        let p3 = Sl2Presentation::for_monopole_number(3);
        let s3 = presentation_hilbert_series(&p3, 6).unwrap();
        let expected = [1i64, 1, 3, 3, 5, 5, 7];
        for (k, &c) in expected.iter().enumerate() {
            assert_eq!(s3.coeff(k as i64), rat(c));
        }

        // N = 4: (1+q^3)/(1-q^2)^2. Degree 2 already has two monomials
        // (delta and eta both have degree 2).
        let p4 = Sl2Presentation::for_monopole_number(4);
        let s4 = presentation_hilbert_series(&p4, 6).unwrap();
        let expected = [1i64, 0, 2, 1, 3, 2, 4];
        for (k, &c) in expected.iter().enumerate() {
            assert_eq!(s4.coeff(k as i64), rat(c), "q^{k}");
        }
    }

    #[test]
    fn low_monopole_numbers_have_no_power_series() {
        for n in 0..3 {
            let p = Sl2Presentation::for_monopole_number(n);
            assert!(matches!(
                presentation_hilbert_series(&p, 10),
                Err(MonopoleError::NonPositiveGrading(_))
            ));
        }
    }
}
