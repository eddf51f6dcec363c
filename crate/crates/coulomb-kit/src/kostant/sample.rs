//! Seeded, deterministic sampling of exactly form-preserving matrices and
//! points of the cyclic-vector varieties.
//!
//! Group elements are built from symplectic transvections
//! `m ↦ m + c⟨m, v⟩v` and pairs of orthogonal reflections
//! `m ↦ m − 2(m, v)/(v, v)·v`, so they preserve the forms exactly, entry by
//! entry. `Y`-points come from one closed-form seed per `n` transported by
//! random group elements.
//!
//! The seed: take `C` the signed shift `C e_j = c_j e_{j+1}` on `M'` with
//! `c_j = 1` for `j < n`, the remaining signs forced by antisymmetry of
//! `SC`; then `v = e_0` satisfies the orthogonality tower with
//! `(v, C^{2n} v) = Π c_j = 1`, and `C = A^tA` for the column-selector
//! matrix `A = [t_0 e_{2n-1} | t_1 e_{2n-2} | … | t_{2n-1} e_0 | 0]` with
//! `t_j = 1` except `t_n = −1`.

use super::{BilinearSpace, KostantError};
use crate::matrix::RatMatrix;
use crate::rat::{rat, ratio, Rat};
use num_traits::Zero;
use rand::Rng;

/// Largest `n` for which `random_y_point` hands out points by default.
pub const MAX_SEEDED_N: usize = 2;

fn basis_vec(dim: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    v[i] = rat(1);
    v
}

/// Small random rational with numerator in `[-2, 2]` and denominator 1 or 2.
pub fn random_rational(rng: &mut impl Rng) -> Rat {
    let num = rng.gen_range(-2i64..=2);
    let den = rng.gen_range(1i64..=2);
    ratio(num, den)
}

fn random_int_vec(dim: usize, rng: &mut impl Rng) -> Vec<Rat> {
    loop {
        let v: Vec<Rat> = (0..dim).map(|_| rat(rng.gen_range(-2i64..=2))).collect();
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

/// Random rational matrix with small entries.
pub fn random_matrix(rows: usize, cols: usize, rng: &mut impl Rng) -> RatMatrix {
    let mut m = RatMatrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m.set(r, c, random_rational(rng));
        }
    }
    m
}

/// Random invertible square matrix with small integer entries.
pub fn random_invertible(dim: usize, rng: &mut impl Rng) -> RatMatrix {
    loop {
        let mut m = RatMatrix::zeros(dim, dim);
        for r in 0..dim {
            for c in 0..dim {
                m.set(r, c, rat(rng.gen_range(-2i64..=2)));
            }
        }
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// Symplectic transvection `m ↦ m + c·⟨m, v⟩·v`, i.e. `I + c·v·(Ωv)ᵀ`,
/// exactly form-preserving.
pub fn symplectic_transvection(m: &BilinearSpace, v: &[Rat], c: &Rat) -> RatMatrix {
    let dim = m.dim();
    let omega_v_row = m.form().apply(v); // (Ωv) as the row factor
    let mut t = RatMatrix::identity(dim);
    for r in 0..dim {
        for col in 0..dim {
            let add = c * &v[r] * &omega_v_row[col];
            if !add.is_zero() {
                let val = t.get(r, col) + add;
                t.set(r, col, val);
            }
        }
    }
    t
}

/// Random element of `Sp(M)` as a product of transvections.
pub fn random_sp_element(m: &BilinearSpace, rng: &mut impl Rng) -> RatMatrix {
    let mut g = RatMatrix::identity(m.dim());
    for _ in 0..3 {
        let v = random_int_vec(m.dim(), rng);
        let c = random_rational(rng);
        g = g.mul(&symplectic_transvection(m, &v, &c));
    }
    debug_assert!(m.preserves(&g));
    g
}

/// Orthogonal reflection in a non-isotropic vector.
pub fn orthogonal_reflection(mp: &BilinearSpace, v: &[Rat]) -> RatMatrix {
    let norm = mp.pair(v, v);
    assert!(!norm.is_zero(), "reflection vector must be non-isotropic");
    let dim = mp.dim();
    let sv = mp.form().apply(v); // (vᵀS) as a vector, S symmetric
    let factor = rat(2) / norm;
    let mut t = RatMatrix::identity(dim);
    for r in 0..dim {
        for col in 0..dim {
            let sub = &factor * &v[r] * &sv[col];
            if !sub.is_zero() {
                let val = t.get(r, col) - sub;
                t.set(r, col, val);
            }
        }
    }
    t
}

/// Random element of `SO(M')`: a product of two reflections.
pub fn random_so_element(mp: &BilinearSpace, rng: &mut impl Rng) -> RatMatrix {
    let mut h = RatMatrix::identity(mp.dim());
    for _ in 0..2 {
        let v = loop {
            let v = random_int_vec(mp.dim(), rng);
            if !mp.pair(&v, &v).is_zero() {
                break v;
            }
        };
        h = h.mul(&orthogonal_reflection(mp, &v));
    }
    debug_assert!(mp.preserves(&h));
    h
}

/// Closed-form point of `Y` for any `n ≥ 1` (see module docs).
pub fn seed_y_point(n: usize) -> (Vec<Rat>, RatMatrix) {
    assert!(n >= 1);
    let dim_m = 2 * n;
    let dim_mp = 2 * n + 1;
    let v = basis_vec(dim_mp, 0);
    let mut a = RatMatrix::zeros(dim_m, dim_mp);
    for j in 0..dim_m {
        let sign = if j == n { rat(-1) } else { rat(1) };
        a.set(dim_m - 1 - j, j, sign);
    }
    (v, a)
}

/// The pair of split spaces `(M, M')` for a given `n`.
pub fn split_pair(n: usize) -> (BilinearSpace, BilinearSpace) {
    (
        BilinearSpace::split_symplectic(2 * n),
        BilinearSpace::split_symmetric(2 * n + 1),
    )
}

/// Random `Y`-point: the seed transported by random `(h, g)`.
/// `n > MAX_SEEDED_N` is rejected; call `seed_y_point` + `transport`
/// directly to go beyond.
pub fn random_y_point(
    n: usize,
    rng: &mut impl Rng,
) -> Result<(Vec<Rat>, RatMatrix), KostantError> {
    if n == 0 || n > MAX_SEEDED_N {
        return Err(KostantError::UnsupportedRank(n, MAX_SEEDED_N));
    }
    let (m, mp) = split_pair(n);
    let (v, a) = seed_y_point(n);
    let g = random_sp_element(&m, rng);
    let h = random_so_element(&mp, rng);
    super::transport(&v, &a, &g, &h)
}

/// Random element of the Lie algebra `sp(M)`: `Ω^{-1} K` with `K` symmetric.
pub fn random_sp_algebra_element(m: &BilinearSpace, rng: &mut impl Rng) -> RatMatrix {
    let dim = m.dim();
    let mut k = RatMatrix::zeros(dim, dim);
    for r in 0..dim {
        for c in r..dim {
            let x = random_rational(rng);
            k.set(r, c, x.clone());
            k.set(c, r, x);
        }
    }
    m.form().inverse().expect("split form is invertible").mul(&k)
}
