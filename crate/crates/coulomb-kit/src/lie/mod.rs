//! Root data and Weyl groups on an explicit coweight lattice.
//!
//! The coweight lattice is always `Z^r` with a fixed basis. Coweights are
//! integer column vectors; weights and roots are integer covectors, and the
//! pairing `⟨χ, λ⟩` is the dot product in these bases. Simple reflections act
//! on coweights by `s_i(λ) = λ − ⟨α_i, λ⟩ α_i∨`, and the full Weyl group is
//! enumerated by closure under the simple reflections.

mod rep;

pub use rep::{
    cotangent, defining_rep, direct_sum, dual, is_symplectic_weights, random_weyl_invariant_rep,
    rebuild_from_isotypic, sl2_irrep, sl2_isotypic_decomposition, tensor,
    weight_level_cotangent_split, SymplecticCheck, SymplecticViolation, WeightRep,
};

use std::collections::HashSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LieError {
    #[error("invalid root datum: {0}")]
    InvalidDatum(String),
    #[error("Weyl enumeration exceeded the cap of {0} elements; datum is not of finite type or the cap is too small")]
    WeylCapExceeded(usize),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("unsupported preset: {0}")]
    UnsupportedPreset(String),
    #[error("{0}")]
    InvalidRep(String),
}

/// Named constructions with fixed lattice conventions.
///
/// `Sl(2)`: lattice `Z·α∨` with `⟨α, α∨⟩ = 2` and the defining weight pairing
/// to 1 with `α∨`. `Pgl(2)`: lattice `Z·λ₀` with `α∨ = 2λ₀`. `Sp(2n)` /
/// `So(m)` / `Gl(n)`: the standard `ε`-coordinates on the torus of the
/// matrix group. `Torus(r)`: no roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// SL(n); only n = 2 is supported.
    Sl(usize),
    /// PGL(n); only n = 2 is supported.
    Pgl(usize),
    /// Sp(2n), argument is the matrix size 2n.
    Sp(usize),
    /// SO(m), argument is the matrix size m ≥ 2.
    So(usize),
    /// GL(n).
    Gl(usize),
    /// Split torus of the given rank.
    Torus(usize),
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Preset::Sl(n) => write!(f, "SL({n})"),
            Preset::Pgl(n) => write!(f, "PGL({n})"),
            Preset::Sp(n) => write!(f, "Sp({n})"),
            Preset::So(n) => write!(f, "SO({n})"),
            Preset::Gl(n) => write!(f, "GL({n})"),
            Preset::Torus(r) => write!(f, "T^{r}"),
        }
    }
}

/// An element of the Weyl group, stored as its integer matrix on the
/// coweight lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    rank: usize,
    /// Row-major r×r integer matrix.
    mat: Vec<i64>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut mat = vec![0; rank * rank];
        for i in 0..rank {
            mat[i * rank + i] = 1;
        }
        WeylElement { rank, mat }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, r: usize, c: usize) -> i64 {
        self.mat[r * self.rank + c]
    }

    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank);
        let r = self.rank;
        let mut mat = vec![0; r * r];
        for i in 0..r {
            for k in 0..r {
                let a = self.mat[i * r + k];
                if a == 0 {
                    continue;
                }
                for j in 0..r {
                    mat[i * r + j] += a * other.mat[k * r + j];
                }
            }
        }
        WeylElement { rank: r, mat }
    }

    /// Action on a coweight (column vector): `w · λ`.
    pub fn apply_coweight(&self, cw: &[i64]) -> Vec<i64> {
        assert_eq!(cw.len(), self.rank);
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.entry(i, j) * cw[j]).sum())
            .collect()
    }

    /// Action of an *involution* on a weight (covector): `χ ∘ w`.
    ///
    /// For a simple reflection this is the reflected weight; for general
    /// elements the weight action would need `w^{-1}`, which this crate never
    /// requires.
    pub fn apply_weight_involutive(&self, w: &[i64]) -> Vec<i64> {
        assert_eq!(w.len(), self.rank);
        (0..self.rank)
            .map(|j| (0..self.rank).map(|i| w[i] * self.entry(i, j)).sum())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank)
    }
}

/// Root datum: the coweight lattice `Z^r` together with simple roots
/// (covectors) and simple coroots (vectors).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    rank: usize,
    simple_roots: Vec<Vec<i64>>,
    simple_coroots: Vec<Vec<i64>>,
    name: String,
}

pub const DEFAULT_WEYL_CAP: usize = 1_000_000;

pub fn pairing(weight: &[i64], coweight: &[i64]) -> i64 {
    assert_eq!(weight.len(), coweight.len(), "pairing rank mismatch");
    weight.iter().zip(coweight).map(|(a, b)| a * b).sum()
}

impl RootDatum {
    /// Builds a root datum from explicit simple roots/coroots, validating the
    /// generalized-Cartan-matrix conditions.
    pub fn new(
        rank: usize,
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
        name: impl Into<String>,
    ) -> Result<Self, LieError> {
        if simple_roots.len() != simple_coroots.len() {
            return Err(LieError::InvalidDatum(format!(
                "{} simple roots but {} simple coroots",
                simple_roots.len(),
                simple_coroots.len()
            )));
        }
        for (i, v) in simple_roots.iter().chain(simple_coroots.iter()).enumerate() {
            if v.len() != rank {
                return Err(LieError::InvalidDatum(format!(
                    "entry {i} has length {} but the rank is {rank}",
                    v.len()
                )));
            }
        }
        let n = simple_roots.len();
        for i in 0..n {
            for j in 0..n {
                let a = pairing(&simple_roots[i], &simple_coroots[j]);
                if i == j && a != 2 {
                    return Err(LieError::InvalidDatum(format!(
                        "⟨α_{i}, α_{i}∨⟩ = {a}, violating the diagonal condition ⟨α_i, α_i∨⟩ = 2"
                    )));
                }
                if i != j && a > 0 {
                    return Err(LieError::InvalidDatum(format!(
                        "⟨α_{i}, α_{j}∨⟩ = {a} > 0, violating the off-diagonal condition ⟨α_i, α_j∨⟩ ≤ 0"
                    )));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let a = pairing(&simple_roots[i], &simple_coroots[j]);
                let b = pairing(&simple_roots[j], &simple_coroots[i]);
                if (a == 0) != (b == 0) {
                    return Err(LieError::InvalidDatum(format!(
                        "⟨α_{i}, α_{j}∨⟩ = {a} but ⟨α_{j}, α_{i}∨⟩ = {b}; zeros must be symmetric"
                    )));
                }
            }
        }
        let datum = RootDatum {
            rank,
            simple_roots,
            simple_coroots,
            name: name.into(),
        };
        for (i, s) in datum.simple_reflections().iter().enumerate() {
            if !s.compose(s).is_identity() {
                return Err(LieError::InvalidDatum(format!(
                    "simple reflection s_{i} does not square to the identity"
                )));
            }
        }
        Ok(datum)
    }

    pub fn preset(p: Preset) -> Result<Self, LieError> {
        match p {
            Preset::Sl(2) => Self::new(1, vec![vec![2]], vec![vec![1]], "SL(2)"),
            Preset::Sl(n) => Err(LieError::UnsupportedPreset(format!(
                "SL({n}): only SL(2) is provided; use an explicit datum for other ranks"
            ))),
            Preset::Pgl(2) => Self::new(1, vec![vec![1]], vec![vec![2]], "PGL(2)"),
            Preset::Pgl(n) => Err(LieError::UnsupportedPreset(format!(
                "PGL({n}): only PGL(2) is provided; use an explicit datum for other ranks"
            ))),
            Preset::Sp(m) => {
                if m == 0 || m % 2 != 0 {
                    return Err(LieError::UnsupportedPreset(format!(
                        "Sp({m}): the size must be a positive even integer"
                    )));
                }
                let n = m / 2;
                let mut roots = Vec::new();
                let mut coroots = Vec::new();
                for i in 0..n.saturating_sub(1) {
                    roots.push(basis_diff(n, i, i + 1));
                    coroots.push(basis_diff(n, i, i + 1));
                }
                // Long simple root 2ε_n with coroot ε_n∨.
                roots.push(scaled_basis(n, n - 1, 2));
                coroots.push(scaled_basis(n, n - 1, 1));
                Self::new(n, roots, coroots, format!("Sp({m})"))
            }
            Preset::So(m) => {
                if m < 2 {
                    return Err(LieError::UnsupportedPreset(format!(
                        "SO({m}): the size must be at least 2"
                    )));
                }
                if m == 2 {
                    // SO(2) is a one-dimensional torus.
                    return Self::new(1, vec![], vec![], "SO(2)");
                }
                let n = m / 2;
                let mut roots = Vec::new();
                let mut coroots = Vec::new();
                for i in 0..n - 1 {
                    roots.push(basis_diff(n, i, i + 1));
                    coroots.push(basis_diff(n, i, i + 1));
                }
                if m % 2 == 1 {
                    // Short simple root ε_n with coroot 2ε_n∨.
                    roots.push(scaled_basis(n, n - 1, 1));
                    coroots.push(scaled_basis(n, n - 1, 2));
                } else {
                    // ε_{n−1} + ε_n, self-paired coroot.
                    if n >= 2 {
                        roots.push(basis_sum(n, n - 2, n - 1));
                        coroots.push(basis_sum(n, n - 2, n - 1));
                    }
                }
                Self::new(n, roots, coroots, format!("SO({m})"))
            }
            Preset::Gl(n) => {
                let mut roots = Vec::new();
                let mut coroots = Vec::new();
                for i in 0..n.saturating_sub(1) {
                    roots.push(basis_diff(n, i, i + 1));
                    coroots.push(basis_diff(n, i, i + 1));
                }
                Self::new(n, roots, coroots, format!("GL({n})"))
            }
            Preset::Torus(r) => Self::new(r, vec![], vec![], format!("T^{r}")),
        }
    }

    pub fn sl2() -> Self {
        Self::preset(Preset::Sl(2)).unwrap()
    }

    pub fn pgl2() -> Self {
        Self::preset(Preset::Pgl(2)).unwrap()
    }

    pub fn torus(rank: usize) -> Self {
        Self::preset(Preset::Torus(rank)).unwrap()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Vec<i64>] {
        &self.simple_coroots
    }

    pub fn num_simple_roots(&self) -> usize {
        self.simple_roots.len()
    }

    /// Cartan matrix `⟨α_i, α_j∨⟩`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.simple_roots
            .iter()
            .map(|a| self.simple_coroots.iter().map(|b| pairing(a, b)).collect())
            .collect()
    }

    /// The matrices of the simple reflections on the coweight lattice.
    pub fn simple_reflections(&self) -> Vec<WeylElement> {
        let r = self.rank;
        self.simple_roots
            .iter()
            .zip(&self.simple_coroots)
            .map(|(alpha, alpha_v)| {
                let mut mat = vec![0; r * r];
                for j in 0..r {
                    for i in 0..r {
                        let mut v = if i == j { 1 } else { 0 };
                        v -= alpha[j] * alpha_v[i];
                        mat[i * r + j] = v;
                    }
                }
                WeylElement { rank: r, mat }
            })
            .collect()
    }

    /// Direct product: block-sum lattice, concatenated roots.
    pub fn product(&self, other: &Self) -> Self {
        let rank = self.rank + other.rank;
        let pad_left = |v: &[i64]| {
            let mut out = v.to_vec();
            out.extend(std::iter::repeat_n(0, other.rank));
            out
        };
        let pad_right = |v: &[i64]| {
            let mut out = vec![0; self.rank];
            out.extend_from_slice(v);
            out
        };
        let simple_roots = self
            .simple_roots
            .iter()
            .map(|v| pad_left(v))
            .chain(other.simple_roots.iter().map(|v| pad_right(v)))
            .collect();
        let simple_coroots = self
            .simple_coroots
            .iter()
            .map(|v| pad_left(v))
            .chain(other.simple_coroots.iter().map(|v| pad_right(v)))
            .collect();
        let name = match (self.rank, other.rank) {
            (0, _) => other.name.clone(),
            (_, 0) => self.name.clone(),
            _ => format!("{} x {}", self.name, other.name),
        };
        RootDatum {
            rank,
            simple_roots,
            simple_coroots,
            name,
        }
    }

    /// Enumerates the full Weyl group by closure under simple reflections.
    pub fn weyl_elements(&self) -> Result<Vec<WeylElement>, LieError> {
        self.weyl_elements_capped(DEFAULT_WEYL_CAP)
    }

    pub fn weyl_elements_capped(&self, cap: usize) -> Result<Vec<WeylElement>, LieError> {
        let gens = self.simple_reflections();
        let id = WeylElement::identity(self.rank);
        let mut seen: HashSet<WeylElement> = HashSet::new();
        seen.insert(id.clone());
        let mut order = vec![id];
        let mut frontier = 0;
        while frontier < order.len() {
            let current = order[frontier].clone();
            frontier += 1;
            for g in &gens {
                let next = g.compose(&current);
                if seen.insert(next.clone()) {
                    if order.len() + 1 > cap {
                        return Err(LieError::WeylCapExceeded(cap));
                    }
                    order.push(next);
                }
            }
        }
        Ok(order)
    }

    /// Closure of a set of covectors under the simple reflections.
    fn weight_closure(&self, seeds: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
        let gens = self.simple_reflections();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut order = Vec::new();
        for s in seeds {
            if seen.insert(s.clone()) {
                order.push(s);
            }
        }
        let mut frontier = 0;
        while frontier < order.len() {
            let current = order[frontier].clone();
            frontier += 1;
            for g in &gens {
                let next = g.apply_weight_involutive(&current);
                if seen.insert(next.clone()) {
                    order.push(next);
                }
            }
        }
        order.sort();
        order
    }

    /// All roots: the closure of the simple roots under the simple
    /// reflections (acting on covectors).
    pub fn all_roots(&self) -> Vec<Vec<i64>> {
        self.weight_closure(self.simple_roots.clone())
    }

    /// Orbit of a weight under the Weyl group, as the closure under simple
    /// reflections.
    pub fn weight_orbit(&self, weight: &[i64]) -> Vec<Vec<i64>> {
        assert_eq!(weight.len(), self.rank, "weight rank mismatch");
        self.weight_closure(vec![weight.to_vec()])
    }

    /// True when `⟨α_i, λ⟩ ≥ 0` for every simple root.
    pub fn is_dominant(&self, coweight: &[i64]) -> bool {
        self.simple_roots.iter().all(|a| pairing(a, coweight) >= 0)
    }

    /// Dominant coweights with all coordinates in `[-bound, bound]`.
    /// Torus directions (unconstrained by any root) range over the full box.
    pub fn dominant_coweights(&self, bound: i64) -> Vec<Vec<i64>> {
        assert!(bound >= 0, "bound must be non-negative");
        let mut out = Vec::new();
        let mut current = vec![-bound; self.rank];
        if self.rank == 0 {
            return vec![vec![]];
        }
        loop {
            if self.is_dominant(&current) {
                out.push(current.clone());
            }
            // Odometer increment over the box.
            let mut i = 0;
            loop {
                if i == self.rank {
                    out.sort();
                    return out;
                }
                if current[i] < bound {
                    current[i] += 1;
                    break;
                }
                current[i] = -bound;
                i += 1;
            }
        }
    }

    /// Coweights on the box shell `max|coord| = radius` that are dominant.
    /// Shell points are generated directly, without touching the box
    /// interior, so scanning shells 0..B costs little more than one box scan.
    pub fn dominant_shell(&self, radius: i64) -> Vec<Vec<i64>> {
        assert!(radius >= 0);
        if self.rank == 0 {
            return if radius == 0 { vec![vec![]] } else { vec![] };
        }
        if radius == 0 {
            return vec![vec![0; self.rank]];
        }
        let mut out = Vec::new();
        let mut current = vec![0i64; self.rank];
        self.shell_points(radius, 0, false, &mut current, &mut out);
        out.sort();
        out
    }

    fn shell_points(
        &self,
        radius: i64,
        position: usize,
        hit_boundary: bool,
        current: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if position == self.rank {
            if hit_boundary && self.is_dominant(current) {
                out.push(current.clone());
            }
            return;
        }
        // The last coordinate must reach the boundary if nothing has yet.
        if position + 1 == self.rank && !hit_boundary {
            for c in [-radius, radius] {
                current[position] = c;
                self.shell_points(radius, position + 1, true, current, out);
            }
        } else {
            for c in -radius..=radius {
                current[position] = c;
                self.shell_points(radius, position + 1, hit_boundary || c.abs() == radius, current, out);
            }
        }
        current[position] = 0;
    }
}

fn basis_diff(rank: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; rank];
    v[i] = 1;
    v[j] = -1;
    v
}

fn basis_sum(rank: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; rank];
    v[i] = 1;
    v[j] += 1;
    v
}

fn scaled_basis(rank: usize, i: usize, s: i64) -> Vec<i64> {
    let mut v = vec![0; rank];
    v[i] = s;
    v
}
