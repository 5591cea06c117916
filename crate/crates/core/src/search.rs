//! Rigidity degrees of whole generator-cogenerators and the exhaustive searches
//! that check the closed forms.
//!
//! The brute force ranks every `Λ ⊕ π(S)` by its rigidity degree, then walks the
//! degrees downward and stops at the first level holding a set with finite
//! `gldim End(M)`. The rigidity dimension is that degree plus two.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::arith::{euclid_chain, rigdim_formula, witness_params, Witness};
use crate::dim::Dim;
use crate::error::{Error, Result};
use crate::quiver::{first_ext, AlgebraParams, Vertex};
use crate::resolution::{
    delta_free, family_n, family_s, gldim_end, syzygy_shift, GenCogenSet, GlobalDim,
};

/// Dominant dimension of `End(M)` is not computed; `rd(M) + 2` stands in for it.
pub const DOMDIM_NOTE: &str =
    "dominant dimension of End(M) is taken to be rd(M) + 2; End(M) itself is never built";

/// Rigidity degree of `M`; projective summands never contribute.
pub fn rd_of_set(set: &GenCogenSet) -> Dim {
    let a = set.params();
    let members = set.members();
    let mut best: Option<u64> = None;
    for (i, &x) in members.iter().enumerate() {
        for &y in &members[i..] {
            if let Some(e) = first_ext(x, y, a) {
                best = Some(best.map_or(e, |b| b.min(e)));
            }
        }
    }
    best.map_or(Dim::Infinite, |e| Dim::Finite(e - 1))
}

/// First nonvanishing `Ext` degree for every pair of stable vertices.
struct PairTable {
    size: usize,
    first: Vec<Option<u64>>,
}

impl PairTable {
    fn new(a: AlgebraParams, vertices: &[Vertex]) -> Self {
        let size = vertices.len();
        let mut first = vec![None; size * size];
        for i in 0..size {
            for j in i..size {
                let e = first_ext(vertices[i], vertices[j], a);
                first[i * size + j] = e;
                first[j * size + i] = e;
            }
        }
        PairTable { size, first }
    }

    /// `rd` of the subset selected by `mask` (bits index the table's vertices).
    fn rd(&self, mask: u64) -> Dim {
        let mut best = u64::MAX;
        let mut rest = mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            let mut others = rest;
            while others != 0 {
                let j = others.trailing_zeros() as usize;
                if let Some(e) = self.first[i * self.size + j] {
                    best = best.min(e);
                }
                others &= others - 1;
            }
            rest &= rest - 1;
        }
        if best == u64::MAX {
            Dim::Infinite
        } else {
            Dim::Finite(best - 1)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Refuse parameters with more stable vertices than this.
    pub max_bits: usize,
    /// Enumerate one representative per orbit of `(x, t) -> (x + 1, t)`.
    pub prune_rotation: bool,
    /// Worker count; `None` uses rayon's global pool.
    pub threads: Option<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_bits: 20,
            prune_rotation: false,
            threads: None,
        }
    }
}

fn run_pool<T: Send>(threads: Option<usize>, job: impl FnOnce() -> T + Send) -> T {
    match threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .expect("thread pool")
            .install(job),
        None => job(),
    }
}

fn check_budget(bits: usize, max_bits: usize) -> Result<()> {
    if bits > max_bits || bits > 63 {
        Err(Error::Budget {
            bits,
            max_bits: max_bits.min(63),
        })
    } else {
        Ok(())
    }
}

/// The `n` column shifts of a mask, identity first.
fn rotations(a: AlgebraParams, mask: u64) -> impl Iterator<Item = u64> {
    let width = a.m() as usize - 1;
    let total = a.stable_count();
    let full = if total == 64 {
        u64::MAX
    } else {
        (1u64 << total) - 1
    };
    (0..a.n() as usize).map(move |k| {
        let shift = k * width;
        if shift == 0 {
            mask
        } else {
            ((mask << shift) | (mask >> (total - shift))) & full
        }
    })
}

fn is_orbit_representative(a: AlgebraParams, mask: u64) -> bool {
    rotations(a, mask).all(|r| r >= mask)
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessSummary {
    pub set: GenCogenSet,
    pub rd: Dim,
    pub gldim: GlobalDim,
}

#[derive(Debug, Clone, Serialize)]
pub struct RigdimReport {
    pub params: AlgebraParams,
    /// Tabulated value; absent when `m < n`.
    pub formula_value: Option<Dim>,
    pub brute_value: Option<Dim>,
    pub best_witness: Option<WitnessSummary>,
    pub subsets_examined: u64,
    #[serde(serialize_with = "millis", rename = "elapsed_ms")]
    pub elapsed: Duration,
    pub note: &'static str,
}

impl RigdimReport {
    /// Brute force and formula agree (vacuously false when either is missing).
    pub fn agrees(&self) -> bool {
        matches!((self.brute_value, self.formula_value), (Some(b), Some(f)) if b == f)
    }
}

fn millis<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

/// Exhaustive rigidity dimension over every `Λ ⊕ π(S)`.
pub fn brute_force_rigdim(a: AlgebraParams, cfg: &SearchConfig) -> Result<RigdimReport> {
    let start = Instant::now();
    let bits = a.stable_count();
    check_budget(bits, cfg.max_bits)?;
    let vertices: Vec<Vertex> = a.stable_vertices().collect();

    let (examined, witness) = run_pool(cfg.threads, || {
        let table = PairTable::new(a, &vertices);
        // Gray-code order; consecutive subsets differ in one vertex.
        let mut ranked: Vec<(Dim, u64)> = (0..1u64 << bits)
            .into_par_iter()
            .map(|i| i ^ (i >> 1))
            .filter(|&mask| !cfg.prune_rotation || is_orbit_representative(a, mask))
            .map(|mask| (table.rd(mask), mask))
            .collect();
        let examined = ranked.len() as u64;
        ranked.par_sort_unstable_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));

        let mut witness = None;
        for level in ranked.chunk_by(|x, y| x.0 == y.0) {
            let rd = level[0].0;
            let finite: Vec<u64> = level
                .par_iter()
                .map(|&(_, mask)| mask)
                .filter(|&mask| gldim_end(&GenCogenSet::from_mask(a, mask)).is_finite())
                .collect();
            let best = finite
                .iter()
                .flat_map(|&mask| {
                    let orbit: Vec<u64> = if cfg.prune_rotation {
                        rotations(a, mask).collect()
                    } else {
                        vec![mask]
                    };
                    orbit
                })
                .map(|mask| GenCogenSet::from_mask(a, mask))
                .min_by_key(|set| set.members());
            if let Some(set) = best {
                let gldim = gldim_end(&set);
                witness = Some(WitnessSummary { set, rd, gldim });
                break;
            }
        }
        (examined, witness)
    });

    let brute_value = witness.as_ref().map(|w| w.rd.plus(2));
    Ok(RigdimReport {
        params: a,
        formula_value: rigdim_formula(a).ok(),
        brute_value,
        best_witness: witness,
        subsets_examined: examined,
        elapsed: start.elapsed(),
        note: DOMDIM_NOTE,
    })
}

/// Materializes a witness recipe.
pub fn witness_set(w: Witness, a: AlgebraParams) -> Result<GenCogenSet> {
    match w {
        Witness::S { t, delta } => family_s(t, delta, a),
        Witness::N { t, delta } => family_n(t, delta, a),
        Witness::Auslander => Ok(GenCogenSet::auslander(a)),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub params: AlgebraParams,
    pub witness: Witness,
    pub set: GenCogenSet,
    pub gldim: GlobalDim,
    pub rd: Dim,
    pub formula: Dim,
    pub pass: bool,
}

/// Builds the tabulated witness and checks finite `gldim` and `rd = rigdim - 2`.
pub fn verify_witness(a: AlgebraParams) -> Result<WitnessReport> {
    let witness = witness_params(a)?;
    let set = witness_set(witness, a)?;
    let gldim = gldim_end(&set);
    let rd = rd_of_set(&set);
    let formula = rigdim_formula(a)?;
    let pass = gldim.is_finite() && rd.plus(2) == formula;
    Ok(WitnessReport {
        params: a,
        witness,
        set,
        gldim,
        rd,
        formula,
        pass,
    })
}

/// Which side of the δ-freeness dichotomy a scan tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanRule {
    /// `M` and `Λ ⊕ Ω(N)` both δ-free.
    BothDeltaFree,
    /// `M` or `Λ ⊕ Ω(N)` fails to be δ-free.
    NotDeltaFree,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanConfig {
    pub rule: ScanRule,
    /// Only sets with `rd(M) >= threshold` are tested.
    pub threshold: u64,
    pub max_bits: usize,
}

/// Scans whose hypothesis is expected to force infinite global dimension.
///
/// For `k_0 >= 3` both rules apply from `rd >= 1`. Otherwise one
/// [`ScanRule::BothDeltaFree`] scan per odd `l < d + 1` with
/// `0 < s_{l+1} < m/2`, from `rd >= 2 F_l + 1`.
pub fn default_scans(a: AlgebraParams, max_bits: usize) -> Result<Vec<ScanConfig>> {
    let chain = euclid_chain(a)?;
    if chain.k(0) >= 3 {
        return Ok([ScanRule::NotDeltaFree, ScanRule::BothDeltaFree]
            .into_iter()
            .map(|rule| ScanConfig {
                rule,
                threshold: 1,
                max_bits,
            })
            .collect());
    }
    let top = chain.d() + 1;
    let m = a.m() as u64;
    Ok((1..top)
        .step_by(2)
        .filter(|&l| {
            let s = chain.s(l as usize + 1);
            s > 0 && 2 * s < m
        })
        .map(|l| ScanConfig {
            rule: ScanRule::BothDeltaFree,
            threshold: 2 * chain.fib(l) + 1,
            max_bits,
        })
        .collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct DeltaScanReport {
    pub params: AlgebraParams,
    pub config: ScanConfig,
    /// Stable vertices whose own rigidity degree reaches the threshold.
    pub admissible_vertices: usize,
    pub subsets_examined: u64,
    pub above_threshold: u64,
    pub hypothesis_held: u64,
    /// Sets with `rd >= threshold` and finite `gldim`, whatever the hypothesis.
    pub finite_above_threshold: u64,
    pub counterexample_count: u64,
    /// Up to ten sets meeting the hypothesis with finite `gldim`.
    pub counterexamples: Vec<GenCogenSet>,
}

impl DeltaScanReport {
    pub fn clean(&self) -> bool {
        self.counterexample_count == 0
    }
}

/// Checks that every set meeting the scan's hypothesis has infinite `gldim End(M)`.
///
/// `rd(M)` is bounded by the degree of each member, so only subsets of the
/// admissible vertices are enumerated; the scan stays exact.
pub fn delta_free_scan(a: AlgebraParams, cfg: &ScanConfig) -> Result<DeltaScanReport> {
    a.require_m_ge_n()?;
    let admissible: Vec<Vertex> = a
        .stable_vertices()
        .filter(|&v| first_ext(v, v, a).is_none_or(|e| e > cfg.threshold))
        .collect();
    check_budget(admissible.len(), cfg.max_bits)?;
    let table = PairTable::new(a, &admissible);

    struct Tally {
        examined: u64,
        above: u64,
        held: u64,
        finite: u64,
        bad: Vec<u64>,
    }

    let tally = (0..1u64 << admissible.len())
        .into_par_iter()
        .map(|mask| -> Result<Tally> {
            let mut t = Tally {
                examined: 1,
                above: 0,
                held: 0,
                finite: 0,
                bad: Vec::new(),
            };
            if table.rd(mask) < Dim::Finite(cfg.threshold) {
                return Ok(t);
            }
            t.above = 1;
            let set = GenCogenSet::from_vertices(
                a,
                (0..admissible.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| admissible[i]),
            )?;
            let finite = gldim_end(&set).is_finite();
            t.finite = finite as u64;
            let free = delta_free(&set)?;
            let shifted_free = delta_free(&syzygy_shift(&set))?;
            let held = match cfg.rule {
                ScanRule::BothDeltaFree => free && shifted_free,
                ScanRule::NotDeltaFree => !free || !shifted_free,
            };
            if held {
                t.held = 1;
                if finite {
                    t.bad.push(mask);
                }
            }
            Ok(t)
        })
        .try_reduce(
            || Tally {
                examined: 0,
                above: 0,
                held: 0,
                finite: 0,
                bad: Vec::new(),
            },
            |mut x, y| {
                x.examined += y.examined;
                x.above += y.above;
                x.held += y.held;
                x.finite += y.finite;
                x.bad.extend(y.bad);
                Ok(x)
            },
        )?;

    let mut bad: Vec<GenCogenSet> = tally
        .bad
        .iter()
        .map(|&mask| {
            GenCogenSet::from_vertices(
                a,
                (0..admissible.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| admissible[i]),
            )
        })
        .collect::<Result<_>>()?;
    bad.sort_by_key(|s| s.members());
    let count = bad.len() as u64;
    bad.truncate(10);

    Ok(DeltaScanReport {
        params: a,
        config: cfg.clone(),
        admissible_vertices: admissible.len(),
        subsets_examined: tally.examined,
        above_threshold: tally.above,
        hypothesis_held: tally.held,
        finite_above_threshold: tally.finite,
        counterexample_count: count,
        counterexamples: bad,
    })
}

/// Checks the finiteness claim for one `S`/`N` family member.
pub fn family_gldim(
    family: char,
    t: u32,
    delta: u32,
    a: AlgebraParams,
) -> Result<(GenCogenSet, GlobalDim)> {
    let set = match family {
        'S' | 's' => family_s(t, delta, a)?,
        'N' | 'n' => family_n(t, delta, a)?,
        other => return Err(Error::Domain(format!("unknown family {other:?}"))),
    };
    let g = gldim_end(&set);
    Ok((set, g))
}
