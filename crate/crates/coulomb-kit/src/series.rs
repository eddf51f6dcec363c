//! Truncated formal series with exact rational coefficients and exponents in
//! `(1/2)Z`.
//!
//! Exponents are stored as *twice* their value (`exp2`), so an integral
//! exponent `k` is the key `2k` and a half-integral exponent `k/2` is the key
//! `k`. Every series carries an explicit completeness bound `order2`
//! (also doubled): all contributions with exponent ≤ `order2 / 2` are
//! present, nothing is claimed beyond it. Arithmetic propagates the bound
//! conservatively.

use crate::rat::{format_rat, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Truncated series `Σ c_e q^e`, `e ∈ (1/2)Z`, complete through `order()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    /// exponent*2 ↦ coefficient; zero coefficients are never stored.
    coeffs: BTreeMap<i64, Rat>,
    /// Completeness bound, doubled.
    order2: i64,
}

impl HilbertSeries {
    pub fn zero(order2: i64) -> Self {
        HilbertSeries {
            coeffs: BTreeMap::new(),
            order2,
        }
    }

    pub fn one(order2: i64) -> Self {
        Self::monomial(0, Rat::one(), order2)
    }

    /// `c · q^(exp2/2)`.
    pub fn monomial(exp2: i64, c: Rat, order2: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() && exp2 <= order2 {
            coeffs.insert(exp2, c);
        }
        HilbertSeries { coeffs, order2 }
    }

    /// Completeness bound, doubled. All terms with `exp2 ≤ order2` are exact.
    pub fn order2(&self) -> i64 {
        self.order2
    }

    pub fn coeff2(&self, exp2: i64) -> Rat {
        self.coeffs.get(&exp2).cloned().unwrap_or_else(Rat::zero)
    }

    /// Coefficient at an integral exponent.
    pub fn coeff(&self, exp: i64) -> Rat {
        self.coeff2(2 * exp)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp2(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// True when every exponent is integral.
    pub fn integral_exponents(&self) -> bool {
        self.coeffs.keys().all(|e| e % 2 == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order2 = self.order2.min(other.order2);
        let mut coeffs = BTreeMap::new();
        for (&e, c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if e <= order2 {
                *coeffs.entry(e).or_insert_with(Rat::zero) += c;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        HilbertSeries { coeffs, order2 }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::zero(self.order2);
        }
        HilbertSeries {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, c * s)).collect(),
            order2: self.order2,
        }
    }

    /// Product of two series with non-negative supports; the completeness
    /// bound of the result is the min of the inputs' bounds.
    pub fn mul(&self, other: &Self) -> Self {
        assert!(
            self.min_exp2().unwrap_or(0) >= 0 && other.min_exp2().unwrap_or(0) >= 0,
            "mul expects non-negative exponents; shift afterwards instead"
        );
        let order2 = self.order2.min(other.order2);
        let mut coeffs: BTreeMap<i64, Rat> = BTreeMap::new();
        for (&ea, ca) in &self.coeffs {
            if ea > order2 {
                break;
            }
            for (&eb, cb) in &other.coeffs {
                let e = ea + eb;
                if e > order2 {
                    break;
                }
                *coeffs.entry(e).or_insert_with(Rat::zero) += ca * cb;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        HilbertSeries { coeffs, order2 }
    }

    /// Multiplies by `q^(exp2/2)`, shifting the completeness bound along.
    pub fn shift(&self, exp2: i64) -> Self {
        HilbertSeries {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + exp2, c.clone())).collect(),
            order2: self.order2 + exp2,
        }
    }

    /// Truncates the completeness bound downwards.
    pub fn truncated(&self, order2: i64) -> Self {
        assert!(order2 <= self.order2, "cannot raise a completeness bound");
        let mut coeffs = self.coeffs.clone();
        coeffs.retain(|&e, _| e <= order2);
        HilbertSeries { coeffs, order2 }
    }

    /// Multiplicative inverse of a series with integral non-negative support
    /// and nonzero constant term.
    pub fn invert(&self) -> Self {
        assert!(self.integral_exponents(), "invert expects integral exponents");
        assert!(self.min_exp2().unwrap_or(0) >= 0, "invert expects support ≥ 0");
        let a0 = self.coeff2(0);
        assert!(!a0.is_zero(), "cannot invert a series with zero constant term");
        let order = self.order2 / 2;
        let inv_a0 = Rat::one() / a0.clone();
        let mut out: Vec<Rat> = Vec::with_capacity(order.max(0) as usize + 1);
        out.push(inv_a0.clone());
        for n in 1..=order.max(0) {
            // c_n = -1/a_0 · Σ_{k=1..n} a_k c_{n-k}
            let mut sum = Rat::zero();
            for k in 1..=n {
                let a_k = self.coeff2(2 * k);
                if !a_k.is_zero() {
                    sum += a_k * &out[(n - k) as usize];
                }
            }
            out.push(-(&inv_a0) * sum);
        }
        let coeffs = out
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| (2 * n as i64, c))
            .collect();
        HilbertSeries {
            coeffs,
            order2: self.order2,
        }
    }

    /// Geometric series `1/(1 - q^d)` complete through `order2/2`, `d ≥ 1`.
    pub fn geometric(d: i64, order2: i64) -> Self {
        assert!(d >= 1, "geometric needs a positive degree");
        let mut coeffs = BTreeMap::new();
        let mut e = 0;
        while e <= order2 {
            coeffs.insert(e, Rat::one());
            e += 2 * d;
        }
        HilbertSeries { coeffs, order2 }
    }

    /// Expands `(Σ numerator) / Π (1 - q^{d_i})` with integral numerator
    /// exponents given undoubled.
    pub fn rational_function(numerator: &[(i64, Rat)], denominator_degrees: &[i64], order2: i64) -> Self {
        let mut num = Self::zero(order2);
        for (e, c) in numerator {
            num = num.add(&Self::monomial(2 * e, c.clone(), order2));
        }
        denominator_degrees
            .iter()
            .fold(num, |acc, &d| acc.mul(&Self::geometric(d, order2)))
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&e, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let c = format_rat(c);
            match e {
                0 => write!(f, "{c}")?,
                2 => {
                    if c == "1" {
                        write!(f, "q")?
                    } else {
                        write!(f, "{c}*q")?
                    }
                }
                _ if e % 2 == 0 => {
                    if c == "1" {
                        write!(f, "q^{}", e / 2)?
                    } else {
                        write!(f, "{c}*q^{}", e / 2)?
                    }
                }
                _ => {
                    if c == "1" {
                        write!(f, "q^({e}/2)")?
                    } else {
                        write!(f, "{c}*q^({e}/2)")?
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        if self.order2 % 2 == 0 {
            write!(f, " (complete through q^{})", self.order2 / 2)
        } else {
            write!(f, " (complete through q^({}/2))", self.order2)
        }
    }
}

/// Result of an exact coefficient-wise comparison through the smaller
/// completeness bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesComparison {
    Equal {
        through2: i64,
    },
    Mismatch {
        exp2: i64,
        lhs: Rat,
        rhs: Rat,
    },
}

impl SeriesComparison {
    pub fn is_equal(&self) -> bool {
        matches!(self, SeriesComparison::Equal { .. })
    }
}

impl fmt::Display for SeriesComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesComparison::Equal { through2 } if through2 % 2 == 0 => {
                write!(f, "MATCH through q^{}", through2 / 2)
            }
            SeriesComparison::Equal { through2 } => {
                write!(f, "MATCH through q^({through2}/2)")
            }
            SeriesComparison::Mismatch { exp2, lhs, rhs } => {
                let e = if exp2 % 2 == 0 {
                    format!("q^{}", exp2 / 2)
                } else {
                    format!("q^({exp2}/2)")
                };
                write!(f, "MISMATCH at {e}: {} vs {}", format_rat(lhs), format_rat(rhs))
            }
        }
    }
}

/// Compares two series coefficient-exactly through the common bound, and
/// reports the first mismatching exponent otherwise.
pub fn compare_series(a: &HilbertSeries, b: &HilbertSeries) -> SeriesComparison {
    let through2 = a.order2().min(b.order2());
    let mut exps: Vec<i64> = a
        .terms()
        .map(|(e, _)| e)
        .chain(b.terms().map(|(e, _)| e))
        .filter(|&e| e <= through2)
        .collect();
    exps.sort_unstable();
    exps.dedup();
    for e in exps {
        let (lhs, rhs) = (a.coeff2(e), b.coeff2(e));
        if lhs != rhs {
            return SeriesComparison::Mismatch { exp2: e, lhs, rhs };
        }
    }
    SeriesComparison::Equal { through2 }
}
