//! Seeded property suite over the moment-map constructions: every identity
//! is checked with exact rational arithmetic (zero tolerance), and the run
//! is a deterministic function of `(n, samples, seed)`.

use super::sample::{
    random_invertible, random_matrix, random_so_element, random_sp_element, random_y_point,
    split_pair, MAX_SEEDED_N,
};
use super::{
    adjoint, eta, gl_moment, in_x, in_z, is_so_member, is_sp_member, kostant_coords, moment_so,
    moment_sp, transport, xi, KostantError,
};
use crate::matrix::RatMatrix;
use crate::rat::Rat;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Outcome of one named property over all samples.
#[derive(Debug, Clone, Serialize)]
pub struct PropertyResult {
    pub name: String,
    pub samples: usize,
    pub failures: usize,
    /// Sample index of the first failure, if any.
    pub first_counterexample: Option<usize>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Full report of a suite run.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub properties: Vec<PropertyResult>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.properties.iter().all(PropertyResult::passed)
    }
}

fn run_property(
    name: &str,
    samples: usize,
    mut check: impl FnMut(usize) -> Result<bool, KostantError>,
) -> PropertyResult {
    let mut failures = 0;
    let mut first = None;
    for i in 0..samples {
        let ok = check(i).unwrap_or(false);
        if !ok {
            failures += 1;
            first.get_or_insert(i);
        }
    }
    PropertyResult {
        name: name.to_string(),
        samples,
        failures,
        first_counterexample: first,
    }
}

/// Runs the whole suite for spaces of size `(2n, 2n+1)`.
pub fn run_suite(n: usize, samples: usize, seed: u64) -> Result<SuiteReport, KostantError> {
    if n == 0 || n > MAX_SEEDED_N {
        return Err(KostantError::UnsupportedRank(n, MAX_SEEDED_N));
    }
    let (m, mp) = split_pair(n);
    let dim_m = m.dim();
    let dim_mp = mp.dim();
    let mut properties = Vec::new();

    // Each property gets its own deterministic stream so that property
    // order never perturbs the samples of another property.
    let stream = |tag: u64| ChaCha8Rng::seed_from_u64(seed.wrapping_add(tag.wrapping_mul(0x9e3779b97f4a7c15)));

    let basis = |dim: usize, i: usize| {
        let mut v = vec![Rat::zero(); dim];
        v[i] = Rat::one();
        v
    };

    let mut rng = stream(1);
    properties.push(run_property("adjoint_identity_on_basis_pairs", samples, |_| {
        let a = random_matrix(dim_m, dim_mp, &mut rng);
        let at = adjoint(&a, &m, &mp)?;
        for i in 0..dim_mp {
            for j in 0..dim_m {
                let lhs = m.pair(&a.apply(&basis(dim_mp, i)), &basis(dim_m, j));
                let rhs = mp.pair(&basis(dim_mp, i), &at.apply(&basis(dim_m, j)));
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }));

    let mut rng = stream(2);
    properties.push(run_property("double_adjoint_is_minus_a", samples, |_| {
        let a = random_matrix(dim_m, dim_mp, &mut rng);
        let at = adjoint(&a, &m, &mp)?;
        let att = m.form().inverse()?.mul(&at.transpose()).mul(mp.form());
        Ok(att == a.neg())
    }));

    let mut rng = stream(3);
    properties.push(run_property("moment_maps_in_sp_and_so", samples, |_| {
        let a = random_matrix(dim_m, dim_mp, &mut rng);
        Ok(is_sp_member(&moment_sp(&a, &m, &mp)?, &m)
            && is_so_member(&moment_so(&a, &m, &mp)?, &mp))
    }));

    let mut rng = stream(4);
    properties.push(run_property("moment_map_equivariance", samples, |_| {
        let a = random_matrix(dim_m, dim_mp, &mut rng);
        let g = random_sp_element(&m, &mut rng);
        let h = random_so_element(&mp, &mut rng);
        let moved = g.mul(&a).mul(&h.inverse()?);
        let lhs_sp = moment_sp(&moved, &m, &mp)?;
        let rhs_sp = g.mul(&moment_sp(&a, &m, &mp)?).mul(&g.inverse()?);
        let lhs_so = moment_so(&moved, &m, &mp)?;
        let rhs_so = h.mul(&moment_so(&a, &m, &mp)?).mul(&h.inverse()?);
        Ok(lhs_sp == rhs_sp && lhs_so == rhs_so)
    }));

    let mut rng = stream(5);
    properties.push(run_property("xi_lands_in_x", samples, |_| {
        let (v, a) = random_y_point(n, &mut rng)?;
        let (u, x) = xi(&v, &a, &m, &mp)?;
        in_x(&u, &x, &m)
    }));

    let mut rng = stream(6);
    properties.push(run_property("spectral_transfer_char_polys", samples, |_| {
        let a = random_matrix(dim_m, dim_mp, &mut rng);
        let c = moment_so(&a, &m, &mp)?;
        let x = moment_sp(&a, &m, &mp)?;
        // det(λ − A^tA) = λ · det(λ − AA^t)
        let cp_c = c.char_poly();
        let cp_x = x.char_poly();
        let mut shifted = vec![Rat::zero(); cp_x.len() + 1];
        shifted[1..].clone_from_slice(&cp_x);
        Ok(cp_c == shifted)
    }));

    let mut rng = stream(7);
    properties.push(run_property("eta_is_exactly_symplectic", samples, |_| {
        let (v, a) = random_y_point(n, &mut rng)?;
        let (u, x) = xi(&v, &a, &m, &mp)?;
        let (g, _) = eta(&u, &x, &m)?;
        // Postcondition is internally verified; confirm independently and
        // check the seed columns x^k u verbatim.
        if !m.preserves(&g) {
            return Ok(false);
        }
        let mut power = u.clone();
        for k in 0..=n {
            for r in 0..dim_m {
                if *g.get(r, k) != power[r] {
                    return Ok(false);
                }
            }
            power = x.apply(&power);
        }
        Ok(true)
    }));

    let mut rng = stream(8);
    properties.push(run_property("eta_transport_compatibility", samples, |_| {
        let (v, a) = random_y_point(n, &mut rng)?;
        let (u, x) = xi(&v, &a, &m, &mp)?;
        let (g0, sigma0) = eta(&u, &x, &m)?;
        let t = random_sp_element(&m, &mut rng);
        let moved_u = t.apply(&u);
        let moved_x = t.mul(&x).mul(&t.inverse()?);
        let (g1, sigma1) = eta(&moved_u, &moved_x, &m)?;
        Ok(g1 == t.mul(&g0) && sigma0 == sigma1)
    }));

    let mut rng = stream(9);
    properties.push(run_property("sp_char_poly_is_even", samples, |_| {
        let a = random_matrix(dim_m, dim_mp, &mut rng);
        let x = moment_sp(&a, &m, &mp)?;
        // kostant_coords errors if an odd coefficient survives; the stored
        // coordinates must also rebuild the characteristic polynomial.
        let sigma = kostant_coords(&x, &m)?;
        Ok(sigma.char_poly() == x.char_poly())
    }));

    let mut rng = stream(10);
    properties.push(run_property("gl_moment_trace_and_char_poly", samples, |_| {
        let a = random_matrix(n, n, &mut rng);
        let b = random_matrix(n, n, &mut rng);
        let (ab, ba) = gl_moment(&a, &b)?;
        Ok(ab.trace() == ba.trace() && ab.char_poly() == ba.char_poly())
    }));

    let mut rng = stream(11);
    properties.push(run_property("transported_y_points_stay_in_y", samples, |_| {
        let (v, a) = random_y_point(n, &mut rng)?;
        let g = random_sp_element(&m, &mut rng);
        let h = random_so_element(&mp, &mut rng);
        let (v2, a2) = transport(&v, &a, &g, &h)?;
        super::in_y(&v2, &a2, &m, &mp)
    }));

    let mut rng = stream(12);
    properties.push(run_property("cyclic_vectors_for_companion_ba", samples, |_| {
        let dim = dim_mp;
        let inv = random_invertible(dim, &mut rng);
        // Companion matrix of a random monic polynomial.
        let mut comp = RatMatrix::zeros(dim, dim);
        for i in 1..dim {
            comp.set(i, i - 1, Rat::one());
        }
        for i in 0..dim {
            comp.set(i, dim - 1, super::sample::random_rational(&mut rng));
        }
        // BA = companion exactly when B = companion·A^{-1}.
        let b = comp.mul(&inv.inverse()?);
        let e0 = basis(dim, 0);
        in_z(&e0, &inv, &b)
    }));

    Ok(SuiteReport {
        n,
        samples,
        seed,
        properties,
    })
}
