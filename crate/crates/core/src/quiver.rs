//! Combinatorics of the translation quiver `ZA_{m-1}` and its quotient by `<tau^n>`.
//!
//! A vertex `(x, t)` stands for the uniserial module with top `S_{x mod n}` and
//! length `t`. Layer `t = m` holds the projective-injectives and layer `t = 0` is
//! a virtual zero layer; only layers `1..m` take part in stable computations.
//! Vertices live on the universal cover (unbounded `x`) and are reduced modulo `n`
//! only when they are compared as modules.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::dim::Dim;
use crate::error::{Error, Result};

/// The self-injective Nakayama algebra with `n` simples and Loewy length `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraParams {
    n: u32,
    m: u32,
}

impl AlgebraParams {
    pub fn new(n: u32, m: u32) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidParams(format!(
                "n and m must be positive (got n = {n}, m = {m})"
            )));
        }
        Ok(AlgebraParams { n, m })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Fails unless `m >= n`, the range covered by the closed forms.
    pub fn require_m_ge_n(&self) -> Result<()> {
        if self.m < self.n {
            Err(Error::Unsupported {
                n: self.n as u64,
                m: self.m as u64,
            })
        } else {
            Ok(())
        }
    }

    /// Number of stable vertices in the quotient, `n (m - 1)`.
    pub fn stable_count(&self) -> usize {
        self.n as usize * (self.m as usize).saturating_sub(1)
    }

    /// Order bound of the syzygy automorphism on the stable quotient.
    pub fn omega_period(&self) -> u64 {
        let n = self.n as u64;
        2 * n / n.gcd(&(self.m as u64))
    }

    /// Canonical stable vertices in index order.
    pub fn stable_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        let (n, m) = (self.n as i64, self.m as i64);
        (0..n).flat_map(move |x| (1..m).map(move |t| Vertex::new(x, t)))
    }

    /// Position of a canonical stable vertex in [`Self::stable_vertices`].
    pub fn index_of(&self, v: Vertex) -> usize {
        debug_assert!(self.is_stable(v));
        let x = v.x.rem_euclid(self.n as i64) as usize;
        x * (self.m as usize - 1) + (v.t as usize - 1)
    }

    pub fn vertex_at(&self, index: usize) -> Vertex {
        let width = self.m as usize - 1;
        Vertex::new((index / width) as i64, (index % width) as i64 + 1)
    }

    pub fn is_stable(&self, v: Vertex) -> bool {
        v.t >= 1 && v.t < self.m as i64
    }

    fn check_stable(&self, v: Vertex) -> Result<()> {
        if self.is_stable(v) {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "{v} is not a stable vertex (layers 1..{} only)",
                self.m as i64 - 1
            )))
        }
    }
}

impl fmt::Display for AlgebraParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A({},{})", self.n, self.m)
    }
}

/// A vertex `(x, t)` of the extended quiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex {
    pub x: i64,
    pub t: i64,
}

impl Vertex {
    pub const fn new(x: i64, t: i64) -> Self {
        Vertex { x, t }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.t)
    }
}

/// Reduces the column coordinate into `[0, n)`.
pub fn canonicalize(v: Vertex, a: AlgebraParams) -> Result<Vertex> {
    if v.t < 0 || v.t > a.m as i64 {
        return Err(Error::Domain(format!(
            "layer {} of {v} outside [0, {}]",
            v.t, a.m
        )));
    }
    Ok(canon(v, a))
}

/// Unchecked [`canonicalize`] for vertices already known to be in range.
#[inline]
pub(crate) fn canon(v: Vertex, a: AlgebraParams) -> Vertex {
    Vertex::new(v.x.rem_euclid(a.n as i64), v.t)
}

/// `tau^k` on the cover; `tau (x, t) = (x + 1, t)`.
pub fn tau(v: Vertex, k: i64, a: AlgebraParams) -> Result<Vertex> {
    a.check_stable(v)?;
    Ok(Vertex::new(v.x + k, v.t))
}

/// `omega^k` on the cover for any integer `k`, where `omega (x, t) = (x + t, m - t)`.
pub fn omega(v: Vertex, k: i64, a: AlgebraParams) -> Result<Vertex> {
    a.check_stable(v)?;
    Ok(omega_unchecked(v, k, a.m as i64))
}

#[inline]
pub(crate) fn omega_unchecked(v: Vertex, k: i64, m: i64) -> Vertex {
    let (half, odd) = (k.div_euclid(2), k.rem_euclid(2) == 1);
    if odd {
        Vertex::new(v.x + half * m + v.t, m - v.t)
    } else {
        Vertex::new(v.x + half * m, v.t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegionKind {
    /// Vertices with a nonzero stable map into the anchor.
    HMinus,
    /// Vertices receiving a nonzero stable map from the anchor.
    HPlus,
}

/// A hammock region anchored at a stable vertex of the cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Region {
    pub anchor: Vertex,
    pub kind: RegionKind,
}

impl Region {
    pub fn h_minus(anchor: Vertex) -> Self {
        Region {
            anchor,
            kind: RegionKind::HMinus,
        }
    }

    pub fn h_plus(anchor: Vertex) -> Self {
        Region {
            anchor,
            kind: RegionKind::HPlus,
        }
    }
}

/// Membership of `w` in a hammock region, both taken on the cover.
///
/// `H^-(x,t)`: `x <= w.x <= x+t-1` and `x+t <= w.x+w.t <= x+m-1`.
/// `H^+(x,t)`: `x-(m-t)+1 <= w.x <= x` and `x+1 <= w.x+w.t <= x+t`.
pub fn region_contains(r: Region, w: Vertex, a: AlgebraParams) -> Result<bool> {
    a.check_stable(r.anchor)?;
    a.check_stable(w)?;
    Ok(region_contains_unchecked(r, w, a.m as i64))
}

#[inline]
pub(crate) fn region_contains_unchecked(r: Region, w: Vertex, m: i64) -> bool {
    let Vertex { x, t } = r.anchor;
    let diag = w.x + w.t;
    match r.kind {
        RegionKind::HMinus => x <= w.x && w.x < x + t && x + t <= diag && diag < x + m,
        RegionKind::HPlus => x - (m - t) < w.x && w.x <= x && x < diag && diag <= x + t,
    }
}

/// `Ext^i(x, y) != 0` for canonical stable vertices, `i >= 1`.
///
/// Tests whether some `tau^n`-translate of `omega^i(x)` lies in `H^-(y)`.
#[inline]
pub(crate) fn ext_pair(i: u64, x: Vertex, y: Vertex, a: AlgebraParams) -> bool {
    let (n, m) = (a.n as i64, a.m as i64);
    let w = omega_unchecked(x, i as i64, m);
    // translates w + (jn, 0) whose column falls in [y.x, y.x + y.t - 1]
    let mut col = w.x + (y.x - w.x).div_euclid(n) * n;
    if col < y.x {
        col += n;
    }
    let region = Region::h_minus(y);
    while col < y.x + y.t {
        if region_contains_unchecked(region, Vertex::new(col, w.t), m) {
            return true;
        }
        col += n;
    }
    false
}

fn check_vertex_set(set: &[Vertex], a: AlgebraParams) -> Result<()> {
    if set.is_empty() {
        return Err(Error::Domain("vertex set must be nonempty".into()));
    }
    set.iter().try_for_each(|&v| a.check_stable(v))
}

/// `Ext^i(pi X, pi Y) != 0` for sets of stable vertices.
pub fn ext_nonzero(i: u64, xs: &[Vertex], ys: &[Vertex], a: AlgebraParams) -> Result<bool> {
    if i < 1 {
        return Err(Error::Domain("Ext degree must be at least 1".into()));
    }
    check_vertex_set(xs, a)?;
    check_vertex_set(ys, a)?;
    Ok(xs
        .iter()
        .any(|&x| ys.iter().any(|&y| ext_pair(i, canon(x, a), canon(y, a), a))))
}

/// Pairwise rigidity degree: first `i` with `Ext^i` nonzero in either direction, minus one.
///
/// `Ext^i` is periodic in `i` with period dividing [`AlgebraParams::omega_period`],
/// so no hit within one period means every `Ext` vanishes.
pub fn rd_pair(xs: &[Vertex], ys: &[Vertex], a: AlgebraParams) -> Result<Dim> {
    check_vertex_set(xs, a)?;
    check_vertex_set(ys, a)?;
    let xs: Vec<_> = xs.iter().map(|&v| canon(v, a)).collect();
    let ys: Vec<_> = ys.iter().map(|&v| canon(v, a)).collect();
    for i in 1..=a.omega_period() {
        let hit = xs.iter().any(|&x| {
            ys.iter()
                .any(|&y| ext_pair(i, x, y, a) || ext_pair(i, y, x, a))
        });
        if hit {
            return Ok(Dim::Finite(i - 1));
        }
    }
    Ok(Dim::Infinite)
}

/// First `i` in one period with `Ext^i(x, y) != 0` or `Ext^i(y, x) != 0`.
pub(crate) fn first_ext(x: Vertex, y: Vertex, a: AlgebraParams) -> Option<u64> {
    (1..=a.omega_period()).find(|&i| ext_pair(i, x, y, a) || ext_pair(i, y, x, a))
}
