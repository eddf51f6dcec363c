//! Monopole-formula Hilbert series over dominant coweights.
//!
//! The series of a datum `G` with symplectic weight multiset `M` is
//!
//! ```text
//! H(q) = Σ_{λ dominant} q^{Δ(λ)} · P(q; λ),
//! Δ(λ) = −Σ_{α>0} |⟨α, λ⟩| + (1/4) Σ_χ |⟨χ, λ⟩| m_χ,
//! ```
//!
//! where `P(q; λ)` is the Molien series of the subgroup of the Weyl group
//! fixing `λ`, acting on the rationalized coweight lattice. The normalization
//! is pinned by `deg δ = 2` for the rank-1 Casimir and `deg [R_λ] = Δ(λ)`,
//! which makes the rank-1 cross-check against the explicit three-generator
//! presentations a genuine two-sided verification.
//!
//! Dominant coweights are enumerated on growing box shells. The sum stops
//! once a full shell contributes no `λ` with `Δ(λ) ≤ order`. Divergence is
//! detected two ways: a nonzero dominant `λ` with `Δ(λ) ≤ 0` certifies it
//! outright (homogeneity puts the whole ray below any order), and
//! contributors persisting up to the shell cap report the enumeration as
//! uncertified. Both carry a witness coweight.

mod presentation;

pub use crate::series::{compare_series, SeriesComparison};
pub use presentation::{presentation_hilbert_series, sl2_presentation, RelationKind, Sl2Presentation};

use crate::anomaly::{anomaly_check, AnomalyError};
use crate::lie::{is_symplectic_weights, pairing, RootDatum, WeightRep, WeylElement};
use crate::matrix::RatMatrix;
use crate::rat::{format_rat, rat, ratio, Rat};
use crate::series::HilbertSeries;
use num_traits::{Signed, Zero};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MonopoleError {
    #[error("representation is not symplectic at the weight level: {0}")]
    NotSymplectic(String),
    #[error(transparent)]
    Anomaly(#[from] AnomalyError),
    #[error("monopole sum does not converge: λ = {witness:?} is a nonzero dominant coweight with Δ = {delta} ≤ 0, so the ray through it contributes without bound; the theory is not good in this direction")]
    NotGood {
        witness: Vec<i64>,
        delta: String,
    },
    #[error("monopole sum not certified: shell cap {cap} reached while λ = {witness:?} still has Δ = {delta} ≤ order; raise the shell cap (COULOMB_KIT_SHELL_CAP) for deeper enumeration")]
    ShellCapExceeded {
        cap: i64,
        witness: Vec<i64>,
        delta: String,
    },
    #[error("Weyl elements do not form a group: {0}")]
    NotAGroup(String),
    #[error("Δ(λ) = {0} has denominator larger than 2 at λ = {1:?}")]
    UnrepresentableExponent(String, Vec<i64>),
    #[error("monopole number N = {0} is not integral; the relation template requires N ∈ Z (\"must be integral\")")]
    NonIntegralMonopoleNumber(String),
    #[error("grading not positive for N = {0}; Hilbert series undefined as a power series")]
    NonPositiveGrading(u64),
}

/// `Δ(λ) = −Σ_{α>0} |⟨α, λ⟩| + (1/4) Σ_χ |⟨χ, λ⟩| m_χ`, computed over all
/// roots as `−(1/2) Σ_α |⟨α, λ⟩|`.
pub fn delta(d: &RootDatum, r: &WeightRep, coweight: &[i64]) -> Rat {
    delta_with_roots(&d.all_roots(), r, coweight)
}

/// `delta` with the root set supplied by the caller; the enumeration loops
/// compute the roots once instead of per lattice point.
pub fn delta_with_roots(roots: &[Vec<i64>], r: &WeightRep, coweight: &[i64]) -> Rat {
    let mut root_part: i64 = 0;
    for alpha in roots {
        root_part += pairing(alpha, coweight).abs();
    }
    let mut matter_part: i64 = 0;
    for (w, m) in r.entries() {
        matter_part += pairing(w, coweight).abs() * m as i64;
    }
    ratio(-root_part, 2) + ratio(matter_part, 4)
}

/// The subgroup of Weyl elements fixing a coweight.
pub fn stabilizer_weyl(elements: &[WeylElement], coweight: &[i64]) -> Vec<WeylElement> {
    elements
        .iter()
        .filter(|w| w.apply_coweight(coweight) == coweight)
        .cloned()
        .collect()
}

/// Molien series `(1/|W|) Σ_w det(1 − q·w)^{-1}` of a finite matrix group,
/// complete through `order2/2`. The element list must be closed under
/// composition and contain the identity.
pub fn molien_series(elements: &[WeylElement], order2: i64) -> Result<HilbertSeries, MonopoleError> {
    if elements.is_empty() {
        return Err(MonopoleError::NotAGroup("empty element list".into()));
    }
    let rank = elements[0].rank();
    let id = WeylElement::identity(rank);
    if !elements.contains(&id) {
        return Err(MonopoleError::NotAGroup("missing identity".into()));
    }
    for a in elements {
        for b in elements {
            if !elements.contains(&a.compose(b)) {
                return Err(MonopoleError::NotAGroup(
                    "element set is not closed under composition".into(),
                ));
            }
        }
    }
    let mut sum = HilbertSeries::zero(order2);
    for w in elements {
        sum = sum.add(&det_one_minus_qw(w, order2).invert());
    }
    Ok(sum.scale(&ratio(1, elements.len() as i64)))
}

/// `det(1 − q·w)` as a polynomial series: the reversed characteristic
/// polynomial of `w`.
fn det_one_minus_qw(w: &WeylElement, order2: i64) -> HilbertSeries {
    let rank = w.rank();
    let rows: Vec<Vec<i64>> = (0..rank)
        .map(|i| (0..rank).map(|j| w.entry(i, j)).collect())
        .collect();
    let cp = RatMatrix::from_int_rows(&rows).char_poly();
    // det(λI − w) = Σ p_j λ^j  ⇒  det(1 − q·w) = Σ p_j q^{r−j}.
    let mut out = HilbertSeries::zero(order2);
    for (j, c) in cp.iter().enumerate() {
        if !c.is_zero() {
            out = out.add(&HilbertSeries::monomial(
                2 * (rank - j) as i64,
                c.clone(),
                order2,
            ));
        }
    }
    out
}

/// Options controlling the monopole sum.
#[derive(Debug, Clone)]
pub struct MonopoleOptions {
    /// Completeness bound of the output (integral exponent).
    pub order: i64,
    /// Largest box shell enumerated before declaring non-convergence.
    pub shell_cap: i64,
    /// Worker threads for the λ-sum; the result is bit-identical for any
    /// thread count (exact rational addition commutes).
    pub threads: usize,
}

impl MonopoleOptions {
    pub fn new(order: i64) -> Self {
        assert!(order >= 0, "series order must be non-negative");
        MonopoleOptions {
            order,
            shell_cap: 64,
            threads: 1,
        }
    }

    pub fn with_shell_cap(mut self, cap: i64) -> Self {
        self.shell_cap = cap;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }
}

/// Monopole Hilbert series together with attached warnings.
#[derive(Debug, Clone)]
pub struct MonopoleSeries {
    pub series: HilbertSeries,
    pub warnings: Vec<String>,
    /// Number of dominant coweights that contributed.
    pub contributing: usize,
}

/// Computes the monopole-formula Hilbert series.
///
/// Requires a symplectic weight multiset. When the anomaly check fails a
/// warning is attached and exponents may land in `(1/2)Z`; they are kept
/// exactly, never rounded.
pub fn monopole_hilbert_series(
    d: &RootDatum,
    r: &WeightRep,
    opts: &MonopoleOptions,
) -> Result<MonopoleSeries, MonopoleError> {
    let check = is_symplectic_weights(d, r);
    if !check.is_symplectic() {
        let details = check
            .violations
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("; ");
        return Err(MonopoleError::NotSymplectic(details));
    }
    let mut warnings = Vec::new();
    match anomaly_check(d, r) {
        Ok(v) if v.pass() => {}
        Ok(_) => warnings.push("anomalous; exponents may lie in (1/2)Z".to_string()),
        Err(e) => return Err(MonopoleError::Anomaly(e)),
    }

    let order2 = 2 * opts.order;
    let elements = d
        .weyl_elements()
        .map_err(|e| MonopoleError::NotAGroup(e.to_string()))?;

    // Collect contributing coweights shell by shell; a full shell without a
    // contributor ends the enumeration.
    let roots = d.all_roots();
    let mut contributors: Vec<(Vec<i64>, Rat)> = Vec::new();
    let mut radius: i64 = 0;
    loop {
        let shell = d.dominant_shell(radius);
        let mut shell_hit = false;
        for cw in shell {
            let dl = delta_with_roots(&roots, r, &cw);
            let dl2 = &dl * rat(2);
            if !crate::rat::is_integer(&dl2) {
                return Err(MonopoleError::UnrepresentableExponent(format_rat(&dl), cw));
            }
            // Δ is homogeneous of degree 1, so a nonzero dominant coweight
            // with Δ ≤ 0 puts a whole ray of contributions below any order:
            // certain divergence, reported immediately.
            if radius > 0 && dl <= Rat::zero() {
                return Err(MonopoleError::NotGood {
                    witness: cw,
                    delta: format_rat(&dl),
                });
            }
            if dl <= rat(opts.order) {
                shell_hit = true;
                contributors.push((cw, dl));
            }
        }
        if d.rank() == 0 || (!shell_hit && radius > 0) {
            break;
        }
        if radius >= opts.shell_cap {
            let witness = contributors
                .iter()
                .rev()
                .find(|(cw, _)| cw.iter().map(|x| x.abs()).max().unwrap_or(0) == radius)
                .expect("cap exceeded implies a contributor on the cap shell");
            return Err(MonopoleError::ShellCapExceeded {
                cap: opts.shell_cap,
                witness: witness.0.clone(),
                delta: format_rat(&witness.1),
            });
        }
        radius += 1;
    }

    if !contributors.iter().all(|(_, dl)| crate::rat::is_integer(dl)) {
        warnings.push("half-integral Δ values occur among the contributing coweights".to_string());
    }

    // Molien factors depend only on the stabilizer and the remaining order;
    // cache them per stabilizer signature.
    let mut cache: HashMap<(Vec<WeylElement>, i64), HilbertSeries> = HashMap::new();
    let mut term = |cw: &[i64], dl: &Rat| -> Result<HilbertSeries, MonopoleError> {
        let two_dl = dl * rat(2);
        let dl2: i64 = two_dl.to_integer().try_into().expect("Δ fits in i64");
        let stab = stabilizer_weyl(&elements, cw);
        let remaining = order2 - dl2;
        let molien = match cache.entry((stab, remaining)) {
            std::collections::hash_map::Entry::Occupied(e) => e.get().clone(),
            std::collections::hash_map::Entry::Vacant(e) => {
                let s = molien_series_unchecked(e.key().0.as_slice(), remaining);
                e.insert(s).clone()
            }
        };
        Ok(molien.shift(dl2))
    };

    let contributing = contributors.len();
    let series = if opts.threads <= 1 || contributors.len() < 2 {
        let mut acc = HilbertSeries::zero(order2);
        for (cw, dl) in &contributors {
            acc = acc.add(&term(cw, dl)?);
        }
        acc
    } else {
        // Evaluate λ-terms concurrently; exact rational addition is
        // order-independent so any chunking yields identical output.
        let chunk_size = contributors.len().div_ceil(opts.threads);
        let chunks: Vec<&[(Vec<i64>, Rat)]> = contributors.chunks(chunk_size).collect();
        let partials: Vec<HilbertSeries> = std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .into_iter()
                .map(|chunk| {
                    let elements = &elements;
                    scope.spawn(move || {
                        let mut acc = HilbertSeries::zero(order2);
                        for (cw, dl) in chunk {
                            let two_dl = dl * rat(2);
                            let dl2: i64 =
                                two_dl.to_integer().try_into().expect("Δ fits in i64");
                            let stab = stabilizer_weyl(elements, cw);
                            let molien = molien_series_unchecked(&stab, order2 - dl2);
                            acc = acc.add(&molien.shift(dl2));
                        }
                        acc
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        });
        partials
            .into_iter()
            .fold(HilbertSeries::zero(order2), |a, b| a.add(&b))
    };

    Ok(MonopoleSeries {
        series: series.truncated(order2),
        warnings,
        contributing,
    })
}

/// Molien sum without the group-closure check, for internal use on
/// stabilizers of an enumerated Weyl group (closed by construction).
fn molien_series_unchecked(elements: &[WeylElement], order2: i64) -> HilbertSeries {
    let mut sum = HilbertSeries::zero(order2);
    for w in elements {
        sum = sum.add(&det_one_minus_qw(w, order2).invert());
    }
    sum.scale(&ratio(1, elements.len() as i64))
}
