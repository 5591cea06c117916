//! Euclidean chains of `(m, n)`, weighted Fibonacci numbers, and the closed
//! forms for rigidity degrees and rigidity dimensions built on them.

use std::fmt;

use num_integer::Integer;
use num_traits::PrimInt;
use serde::{Deserialize, Serialize};

use crate::dim::Dim;
use crate::error::{Error, Result};
use crate::quiver::AlgebraParams;

/// Integer types the chain arithmetic runs over.
pub trait ChainInt: PrimInt + Integer + fmt::Debug + fmt::Display + Send + Sync {}

impl<T> ChainInt for T where T: PrimInt + Integer + fmt::Debug + fmt::Display + Send + Sync {}

/// Quotients `k_0..=k_{d+1}`, remainders `s_0 = n, .., s_{d+2} = 0` and the
/// weighted Fibonacci values `F_{-1}..=F_{d+1}` of the Euclidean algorithm on `(m, n)`.
///
/// When `n | m` the chain stops after `k_0`, `d = -1`, `s = (n, 0)` and `F = (0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EuclidChain<T> {
    n: T,
    m: T,
    k: Vec<T>,
    s: Vec<T>,
    f: Vec<T>,
}

impl<T: ChainInt> EuclidChain<T> {
    pub fn new(n: T, m: T) -> Result<Self> {
        if n < T::one() {
            return Err(Error::InvalidParams(format!(
                "n must be positive (got {n})"
            )));
        }
        if m < n {
            return Err(Error::Unsupported {
                n: n.to_u64().unwrap_or(u64::MAX),
                m: m.to_u64().unwrap_or(u64::MAX),
            });
        }
        let (k0, s1) = m.div_rem(&n);
        let mut k = vec![k0];
        let mut s = vec![n, s1];
        while *s.last().unwrap() != T::zero() {
            let len = s.len();
            let (q, r) = s[len - 2].div_rem(&s[len - 1]);
            k.push(q);
            s.push(r);
        }
        let mut f = vec![T::zero(), T::one()];
        for &kl in &k[1..] {
            let len = f.len();
            f.push(kl * f[len - 1] + f[len - 2]);
        }
        Ok(EuclidChain { n, m, k, s, f })
    }

    pub fn n(&self) -> T {
        self.n
    }

    pub fn m(&self) -> T {
        self.m
    }

    /// `d`, so that the last nonzero remainder is `s_{d+1}`.
    pub fn d(&self) -> i64 {
        self.k.len() as i64 - 2
    }

    pub fn quotients(&self) -> &[T] {
        &self.k
    }

    pub fn remainders(&self) -> &[T] {
        &self.s
    }

    /// `F_{-1}, F_0, .., F_{d+1}`.
    pub fn weighted_fibonacci(&self) -> &[T] {
        &self.f
    }

    pub fn k(&self, i: usize) -> T {
        self.k[i]
    }

    pub fn s(&self, i: usize) -> T {
        self.s[i]
    }

    /// `F_l` for `-1 <= l <= d + 1`.
    pub fn fib(&self, l: i64) -> T {
        self.f[(l + 1) as usize]
    }

    /// The last nonzero remainder, i.e. `gcd(m, n)`.
    pub fn gcd(&self) -> T {
        self.s[self.s.len() - 2]
    }

    /// Rigidity degree of an indecomposable of length `t`, `1 <= t <= m - 1`.
    pub fn rd(&self, t: T) -> Result<T> {
        if t < T::one() || t >= self.m {
            return Err(Error::Domain(format!(
                "length {t} outside [1, {}]",
                self.m - T::one()
            )));
        }
        let t = t.min(self.m - t);
        let two = T::one() + T::one();
        if t >= self.n {
            return Ok(T::zero());
        }
        let top = self.k.len() - 1; // d + 1
        let d = self.d();

        for l in (1..top).step_by(2) {
            if self.s[l + 1] <= t && t <= self.s[l] {
                return Ok(two * self.f[l + 1]);
            }
        }
        if d >= 0 && d % 2 == 0 && t == self.s[top] {
            return Ok(two * (self.f[top + 1] - self.f[top]));
        }
        for l in 0..=top {
            if (l % 2 == 0 || l == top) && self.s[l + 1] < t && t < self.s[l] {
                return Ok(two * self.f[l + 1] - T::one());
            }
        }
        Err(Error::Domain(format!(
            "no closed-form branch for t = {t} with n = {}, m = {}",
            self.n, self.m
        )))
    }

    /// Tabulated rigidity dimension; `None` stands for infinity.
    pub fn rigdim(&self) -> Option<T> {
        let (one, two) = (T::one(), T::one() + T::one());
        let three = two + one;
        if self.n == one {
            return if self.m == one { None } else { Some(two) };
        }
        if self.m == self.n {
            return Some(three);
        }
        let d = self.d();
        let k0 = self.k[0];
        let value = if k0 == one {
            let k1 = self.k[1];
            if d == 0 && self.s[1] == one {
                two * k1
            } else if d == 0 {
                two * k1 + one
            } else if self.k[2] == one && self.s[3] + two <= self.s[2] {
                two * k1 + three
            } else {
                two * k1 + two
            }
        } else if k0 == two {
            if self.s[1] + one == self.n {
                two
            } else {
                three
            }
        } else {
            two
        };
        Some(value)
    }
}

/// Euclidean chain of the algebra's parameters.
pub fn euclid_chain(a: AlgebraParams) -> Result<EuclidChain<u64>> {
    a.require_m_ge_n()?;
    EuclidChain::new(a.n() as u64, a.m() as u64)
}

/// Closed-form rigidity degree of the indecomposables of length `t`.
pub fn rd_closed_form(t: u32, a: AlgebraParams) -> Result<u64> {
    euclid_chain(a)?.rd(t as u64)
}

/// Closed-form rigidity dimension of `A(n, m)`, `m >= n`.
pub fn rigdim_formula(a: AlgebraParams) -> Result<Dim> {
    Ok(euclid_chain(a)?.rigdim().map_or(Dim::Infinite, Dim::Finite))
}

/// Recipe of a generator-cogenerator that attains the rigidity dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum Witness {
    S {
        t: u32,
        delta: u32,
    },
    N {
        t: u32,
        delta: u32,
    },
    /// Every indecomposable; its endomorphism ring is the Auslander algebra.
    Auslander,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::S { t, delta } => write!(f, "S(t={t}, delta={delta})"),
            Witness::N { t, delta } => write!(f, "N(t={t}, delta={delta})"),
            Witness::Auslander => f.write_str("Auslander generator"),
        }
    }
}

pub fn witness_params(a: AlgebraParams) -> Result<Witness> {
    a.require_m_ge_n()?;
    if a.n() == 1 {
        return Err(Error::Unsupported {
            n: 1,
            m: a.m() as u64,
        });
    }
    let chain = euclid_chain(a)?;
    let n = a.n();
    if a.m() == n {
        return Ok(Witness::S { t: n - 1, delta: 0 });
    }
    let s = |i: usize| chain.s(i) as u32;
    let witness = match chain.k(0) {
        1 if chain.d() == 0 => Witness::N {
            t: if s(1) > 1 { s(1) - 1 } else { 1 },
            delta: n,
        },
        1 if chain.k(2) == 1 && s(3) + 2 <= s(2) => Witness::N {
            t: s(3) + 1,
            delta: n,
        },
        1 => Witness::N {
            t: s(1) - 1,
            delta: n,
        },
        2 if s(1) + 1 < n => Witness::N { t: n - 1, delta: n },
        _ => Witness::Auslander,
    };
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u32, m: u32) -> AlgebraParams {
        AlgebraParams::new(n, m).unwrap()
    }

    #[test]
    fn chain_examples() {
        let c = euclid_chain(p(2, 3)).unwrap();
        assert_eq!(
            (c.quotients(), c.remainders(), c.weighted_fibonacci(), c.d()),
            (&[1, 2][..], &[2, 1, 0][..], &[0, 1, 2][..], 0)
        );
        let c = euclid_chain(p(4, 7)).unwrap();
        assert_eq!(
            (c.quotients(), c.remainders(), c.weighted_fibonacci(), c.d()),
            (&[1, 1, 3][..], &[4, 3, 1, 0][..], &[0, 1, 1, 4][..], 1)
        );
        let c = euclid_chain(p(3, 3)).unwrap();
        assert_eq!(
            (c.quotients(), c.remainders(), c.weighted_fibonacci(), c.d()),
            (&[1][..], &[3, 0][..], &[0, 1][..], -1)
        );
        assert_eq!(
            euclid_chain(p(3, 2)),
            Err(Error::Unsupported { n: 3, m: 2 })
        );
    }

    #[test]
    fn chain_over_other_integer_types() {
        let c = EuclidChain::<u8>::new(4, 7).unwrap();
        assert_eq!(c.weighted_fibonacci(), &[0, 1, 1, 4]);
        let c = EuclidChain::<i32>::new(4, 7).unwrap();
        assert_eq!(c.rd(2).unwrap(), 2);
        let wide = EuclidChain::<u128>::new(89, 144).unwrap();
        // consecutive Fibonacci numbers give an all-ones weight sequence
        assert!(wide.quotients()[1..wide.quotients().len() - 1]
            .iter()
            .all(|&k| k == 1));
        assert_eq!(wide.gcd(), 1);
        assert!(EuclidChain::<i64>::new(0, 5).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(rd_closed_form(1, p(3, 3)).unwrap(), 1);
        assert_eq!(rd_closed_form(1, p(3, 4)).unwrap(), 4);
        assert_eq!(rd_closed_form(2, p(4, 7)).unwrap(), 2);
        assert_eq!(rd_closed_form(5, p(4, 7)).unwrap(), 2);
        assert!(rd_closed_form(0, p(4, 7)).is_err());
        assert!(rd_closed_form(7, p(4, 7)).is_err());
        assert!(rd_closed_form(1, p(4, 3)).is_err());
    }

    #[test]
    fn table_examples() {
        assert_eq!(rigdim_formula(p(2, 3)).unwrap(), Dim::Finite(4));
        assert_eq!(rigdim_formula(p(3, 3)).unwrap(), Dim::Finite(3));
        assert_eq!(rigdim_formula(p(2, 7)).unwrap(), Dim::Finite(2));
        assert_eq!(rigdim_formula(p(1, 1)).unwrap(), Dim::Infinite);
        assert_eq!(rigdim_formula(p(1, 6)).unwrap(), Dim::Finite(2));
        // 11 = 7 + 4, 7 = 4 + 3, 4 = 3 + 1: k_2 = 1 and s_3 = 1 <= s_2 - 2
        assert_eq!(rigdim_formula(p(7, 11)).unwrap(), Dim::Finite(5));
        // 8 = 5 + 3, 5 = 3 + 2, 3 = 2 + 1: k_2 = 1 but s_3 = 1 > s_2 - 2
        assert_eq!(rigdim_formula(p(5, 8)).unwrap(), Dim::Finite(4));
        // k_0 = 2 rows
        assert_eq!(rigdim_formula(p(4, 11)).unwrap(), Dim::Finite(2));
        assert_eq!(rigdim_formula(p(4, 9)).unwrap(), Dim::Finite(3));
    }

    #[test]
    fn witness_examples() {
        assert_eq!(
            witness_params(p(3, 3)).unwrap(),
            Witness::S { t: 2, delta: 0 }
        );
        assert_eq!(
            witness_params(p(4, 7)).unwrap(),
            Witness::N { t: 2, delta: 4 }
        );
        assert_eq!(witness_params(p(2, 7)).unwrap(), Witness::Auslander);
        assert_eq!(
            witness_params(p(2, 3)).unwrap(),
            Witness::N { t: 1, delta: 2 }
        );
        assert!(witness_params(p(1, 4)).is_err());
        assert!(witness_params(p(3, 2)).is_err());
    }

    #[test]
    fn chain_reconstructs_parameters() {
        for n in 1..=200u64 {
            for m in n..=200 {
                let c = EuclidChain::new(n, m).unwrap();
                let k = c.quotients();
                let s = c.remainders();
                assert_eq!(k[0] * n + s[1], m);
                for i in 1..k.len() {
                    assert_eq!(k[i] * s[i] + s[i + 1], s[i - 1]);
                    assert!(s[i + 1] < s[i]);
                }
                assert_eq!(*s.last().unwrap(), 0);
                assert_eq!(c.gcd(), n.gcd(&m));
                // F_{d+1} * gcd recovers n
                assert_eq!(c.fib(c.d() + 1) * c.gcd(), n);
            }
        }
    }

    #[test]
    fn closed_form_is_symmetric_and_table_is_at_least_two() {
        for n in 2..=40u32 {
            for m in n..=60 {
                let a = p(n, m);
                for t in 1..m {
                    assert_eq!(
                        rd_closed_form(t, a).unwrap(),
                        rd_closed_form(m - t, a).unwrap()
                    );
                }
                assert!(rigdim_formula(a).unwrap() >= Dim::Finite(2));
            }
        }
    }
}
