//! The acceptance suites, shared by `nakarig verify` and the test harness.
//!
//! Every check is exact: values are compared with `==`, and a suite passes
//! only if every case does.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{euclid_chain, rd_closed_form, rigdim_formula};
use crate::dim::Dim;
use crate::error::Result;
use crate::quiver::{rd_pair, AlgebraParams, Vertex};
use crate::resolution::{
    ar_sequence, contains_complete_slice, delta, family_n, family_s, gldim_end, syzygy_shift,
    GenCogenSet, GlobalDim, MdimOutcome, MdimTable,
};
use crate::search::{
    brute_force_rigdim, delta_free_scan, rd_of_set, verify_witness, ScanConfig, ScanRule,
    SearchConfig,
};

pub const CRITERIA: [(u8, &str); 10] = [
    (
        1,
        "closed-form rd(t) equals region-based rd, 1 < n <= m <= 60",
    ),
    (2, "exhaustive rigdim equals the table, n(m-1) <= 16"),
    (
        3,
        "tabulated witnesses have finite gldim and rd = rigdim - 2, n + m <= 30",
    ),
    (
        4,
        "rd(N_t^delta) = rd(t) with delta = max{n, (k_0 - 1) n}, n < m <= 20",
    ),
    (5, "S_t^delta and N_t^delta have finite gldim, n <= m <= 12"),
    (6, "gldim End(M) = gldim End(syzygy shift of M)"),
    (
        7,
        "adjoining one end of an AR sequence lowers gldim by 0 or 1",
    ),
    (8, "a complete slice forces finite gldim"),
    (
        9,
        "delta-free scans on A(2,7), A(2,8) find no finite gldim with rd >= 1",
    ),
    (
        10,
        "the Auslander generator has Mdim 0 everywhere and gldim <= 2",
    ),
];

#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub pass: bool,
    /// Number of individual cases compared.
    pub cases: u64,
    pub detail: String,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub threads: Option<usize>,
    /// Seed for the random subsets of criterion 6.
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            threads: None,
            seed: 0x5eed,
        }
    }
}

/// Cases checked and the first failure, if any.
type Tally = (u64, Option<String>);

fn merge(x: Tally, y: Tally) -> Tally {
    (x.0 + y.0, x.1.or(y.1))
}

fn params(n: u32, m: u32) -> AlgebraParams {
    AlgebraParams::new(n, m).expect("positive parameters")
}

fn grid(top: u32) -> Vec<AlgebraParams> {
    (2..=top)
        .flat_map(|n| (n..=top).map(move |m| (n, m)))
        .map(|(n, m)| params(n, m))
        .collect()
}

fn all_subsets(a: AlgebraParams) -> impl ParallelIterator<Item = GenCogenSet> {
    (0..1u64 << a.stable_count())
        .into_par_iter()
        .map(move |mask| GenCogenSet::from_mask(a, mask))
}

fn closed_vs_direct() -> Result<Tally> {
    grid(60)
        .into_par_iter()
        .map(|a| -> Result<Tally> {
            let mut tally: Tally = (0, None);
            for t in 1..a.m() {
                let v = [Vertex::new(0, t as i64)];
                let closed = Dim::Finite(rd_closed_form(t, a)?);
                let direct = rd_pair(&v, &v, a)?;
                tally.0 += 1;
                if closed != direct && tally.1.is_none() {
                    tally.1 = Some(format!("{a} t={t}: closed {closed}, direct {direct}"));
                }
            }
            Ok(tally)
        })
        .try_reduce(|| (0, None), |x, y| Ok(merge(x, y)))
}

fn table_by_brute_force(cfg: &VerifyConfig) -> Result<Tally> {
    let search = SearchConfig {
        threads: cfg.threads,
        ..SearchConfig::default()
    };
    let mut tally: Tally = (0, None);
    for a in grid(17).into_iter().filter(|a| a.stable_count() <= 16) {
        let report = brute_force_rigdim(a, &search)?;
        tally.0 += 1;
        if !report.agrees() && tally.1.is_none() {
            tally.1 = Some(format!(
                "{a}: brute {:?}, table {:?}",
                report.brute_value, report.formula_value
            ));
        }
    }
    Ok(tally)
}

fn witnesses() -> Result<Tally> {
    grid(28)
        .into_iter()
        .filter(|a| a.n() + a.m() <= 30)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|a| -> Result<Tally> {
            let r = verify_witness(a)?;
            let fail = (!r.pass).then(|| {
                format!(
                    "{a}: {} gives rd {} gldim {} (table {})",
                    r.witness, r.rd, r.gldim, r.formula
                )
            });
            Ok((1, fail))
        })
        .try_reduce(|| (0, None), |x, y| Ok(merge(x, y)))
}

fn family_n_degrees() -> Result<Tally> {
    let mut tally: Tally = (0, None);
    for a in grid(20).into_iter().filter(|a| a.m() > a.n()) {
        let d = delta(a)?;
        // 0 <= m - δ - t <= t <= m / 2
        for t in (1..a.m()).filter(|&t| t + d <= a.m() && a.m() <= 2 * t + d && 2 * t <= a.m()) {
            let got = rd_of_set(&family_n(t, d, a)?);
            let want = Dim::Finite(rd_closed_form(t, a)?);
            tally.0 += 1;
            if got != want && tally.1.is_none() {
                tally.1 = Some(format!("{a} t={t} delta={d}: rd {got}, expected {want}"));
            }
        }
    }
    Ok(tally)
}

fn families_finite() -> Result<Tally> {
    let mut tally: Tally = (0, None);
    for a in grid(12) {
        let deltas = if a.m() == a.n() { 0..=1 } else { 0..=a.n() };
        for d in deltas {
            for t in (1..a.m()).filter(|t| t + d <= a.m()) {
                for (name, set) in [("S", family_s(t, d, a)?), ("N", family_n(t, d, a)?)] {
                    tally.0 += 1;
                    if !gldim_end(&set).is_finite() && tally.1.is_none() {
                        tally.1 = Some(format!("{a}: {name}_{t}^{d} has infinite gldim"));
                    }
                }
            }
        }
    }
    Ok(tally)
}

fn syzygy_invariance(cfg: &VerifyConfig) -> Tally {
    let check = |set: GenCogenSet| -> Tally {
        let (before, after) = (gldim_end(&set), gldim_end(&syzygy_shift(&set)));
        let fail = (before.as_dim() != after.as_dim())
            .then(|| format!("{}: {before} vs {after}", set.to_json()));
        (1, fail)
    };
    let exhaustive = [params(2, 4), params(3, 4)]
        .into_iter()
        .map(|a| all_subsets(a).map(check).reduce(|| (0, None), merge))
        .fold((0, None), merge);
    let a = params(3, 6);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let masks: Vec<u64> = (0..1000)
        .map(|_| rng.gen_range(0..1u64 << a.stable_count()))
        .collect();
    let sampled = masks
        .into_par_iter()
        .map(|mask| check(GenCogenSet::from_mask(a, mask)))
        .reduce(|| (0, None), merge);
    merge(exhaustive, sampled)
}

fn knitting(a: AlgebraParams) -> Result<Tally> {
    let sequences = a
        .stable_vertices()
        .map(|z| ar_sequence(z, a))
        .collect::<Result<Vec<_>>>()?;
    Ok(all_subsets(a)
        .map(|set| {
            let mut tally: Tally = (0, None);
            let g_m = gldim_end(&set).as_dim();
            for seq in &sequences {
                let ends = (set.contains(seq.start), set.contains(seq.end));
                if !seq.middle.iter().all(|&v| set.contains(v)) || ends.0 == ends.1 {
                    continue;
                }
                let mut bigger = set.clone();
                bigger.insert(seq.start);
                bigger.insert(seq.end);
                let g_n = gldim_end(&bigger).as_dim();
                let ok = match (g_m, g_n) {
                    (Dim::Finite(x), Dim::Finite(y)) => x >= y && x - y <= 1,
                    (Dim::Infinite, Dim::Infinite) => true,
                    _ => false,
                };
                tally.0 += 1;
                if !ok && tally.1.is_none() {
                    tally.1 = Some(format!(
                        "{} adjoining {} / {}: {g_m} vs {g_n}",
                        set.to_json(),
                        seq.start,
                        seq.end
                    ));
                }
            }
            tally
        })
        .reduce(|| (0, None), merge))
}

fn slices() -> Tally {
    [params(2, 4), params(3, 4), params(2, 5)]
        .into_iter()
        .map(|a| {
            all_subsets(a)
                .filter(contains_complete_slice)
                .map(|set| {
                    let fail = (!gldim_end(&set).is_finite())
                        .then(|| format!("{} has a slice but infinite gldim", set.to_json()));
                    (1, fail)
                })
                .reduce(|| (0, None), merge)
        })
        .fold((0, None), merge)
}

fn delta_scans() -> Result<Tally> {
    let mut tally: Tally = (0, None);
    for a in [params(2, 7), params(2, 8)] {
        debug_assert!(euclid_chain(a)?.k(0) >= 3);
        for rule in [ScanRule::BothDeltaFree, ScanRule::NotDeltaFree] {
            let r = delta_free_scan(
                a,
                &ScanConfig {
                    rule,
                    threshold: 1,
                    max_bits: 20,
                },
            )?;
            tally.0 += r.above_threshold;
            if (r.finite_above_threshold > 0 || !r.clean()) && tally.1.is_none() {
                tally.1 = Some(format!(
                    "{a} {rule:?}: {} finite-gldim set(s) with rd >= 1",
                    r.finite_above_threshold
                ));
            }
            if rigdim_formula(a)? != Dim::Finite(2) && tally.1.is_none() {
                tally.1 = Some(format!("{a}: table value is not 2"));
            }
        }
    }
    Ok(tally)
}

fn auslander_baseline() -> Result<Tally> {
    let mut tally: Tally = (0, None);
    for a in grid(12) {
        let set = GenCogenSet::auslander(a);
        let mut table = MdimTable::new(&set);
        for v in a.stable_vertices() {
            tally.0 += 1;
            if table.get(v)? != (MdimOutcome::Finite { value: 0 }) && tally.1.is_none() {
                tally.1 = Some(format!("{a}: Mdim{v} is not 0"));
            }
        }
        tally.0 += 1;
        if gldim_end(&set) != GlobalDim::AtMostTwo && tally.1.is_none() {
            tally.1 = Some(format!("{a}: gldim is {}", gldim_end(&set)));
        }
    }
    Ok(tally)
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

/// Runs one criterion. Unknown ids are a domain error.
pub fn run_criterion(id: u8, cfg: &VerifyConfig) -> Result<Outcome> {
    let title = CRITERIA
        .iter()
        .find(|c| c.0 == id)
        .map(|c| c.1)
        .ok_or_else(|| crate::Error::Domain(format!("no criterion {id}")))?;
    let start = Instant::now();
    let (cases, failure) = run_pool(cfg.threads, || -> Result<Tally> {
        Ok(match id {
            1 => closed_vs_direct()?,
            2 => table_by_brute_force(cfg)?,
            3 => witnesses()?,
            4 => family_n_degrees()?,
            5 => families_finite()?,
            6 => syzygy_invariance(cfg),
            7 => merge(knitting(params(2, 4))?, knitting(params(3, 4))?),
            8 => slices(),
            9 => delta_scans()?,
            _ => auslander_baseline()?,
        })
    })?;
    let pass = failure.is_none() && cases > 0;
    let detail = failure.unwrap_or_else(|| {
        if cases == 0 {
            "no cases were checked".into()
        } else {
            format!("{cases} case(s) agree")
        }
    });
    Ok(Outcome {
        id,
        title,
        pass,
        cases,
        detail,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

pub fn run_all(cfg: &VerifyConfig) -> Result<Vec<Outcome>> {
    CRITERIA
        .iter()
        .map(|&(id, _)| run_criterion(id, cfg))
        .collect()
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{verdict}] {:>2} {} ({}; {} ms)",
            self.id, self.title, self.detail, self.elapsed_ms
        )
    }
}
