use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use nakarig::render::{ascii_grid, svg};
use nakarig::resolution::MdimTable;
use nakarig::search::{witness_set, DOMDIM_NOTE};
use nakarig::verify::{run_all, run_criterion, VerifyConfig};
use nakarig::{
    brute_force_rigdim, euclid_chain, family_n, family_s, gldim_end, min_approximation,
    rd_closed_form, rd_pair, rigdim_formula, verify_witness, witness_params, AlgebraParams, Error,
    GenCogenSet, SearchConfig, Vertex,
};

/// Rigidity degrees and rigidity dimensions of self-injective Nakayama algebras A(n, m).
#[derive(Parser)]
#[command(name = "nakarig", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rigidity degree of L_0^t: closed form next to the region computation.
    Rd {
        #[command(flatten)]
        alg: Alg,
        /// Layer; every t in 1..m-1 when omitted.
        #[arg(long)]
        t: Option<u32>,
        #[command(flatten)]
        out: Output,
    },
    /// Tabulated rigidity dimension with its Euclidean chain.
    Rigdim {
        #[command(flatten)]
        alg: Alg,
        #[command(flatten)]
        out: Output,
    },
    /// Relative dimension Mdim of every stable vertex.
    Mdim {
        #[command(flatten)]
        set: SetArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Global dimension of End(M).
    Gldim {
        #[command(flatten)]
        set: SetArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Minimal approximations of non-member vertices, as JSON.
    Resolve {
        #[command(flatten)]
        set: SetArgs,
        /// Only this vertex, written x:t.
        #[arg(long)]
        vertex: Option<VertexArg>,
        /// Also write an SVG with the rectangles of --vertex overlaid.
        #[arg(long, value_name = "FILE", requires = "vertex")]
        render: Option<PathBuf>,
    },
    /// Exhaustive rigidity dimension.
    Brute {
        #[command(flatten)]
        alg: Alg,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Builds the tabulated witness and checks it.
    Witness {
        #[command(flatten)]
        alg: Alg,
        #[command(flatten)]
        out: Output,
    },
    /// Runs the acceptance suites.
    Verify {
        /// Only these criteria (1-10).
        #[arg(long = "criterion", value_parser = clap::value_parser!(u8).range(1..=10))]
        criteria: Vec<u8>,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Formula against brute force over a parameter rectangle.
    Sweep {
        /// Range `a..b` (inclusive) or a single value.
        #[arg(long)]
        n: Span,
        #[arg(long)]
        m: Span,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Draws the quiver with the members of M highlighted.
    Render {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Alg {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    m: u32,
}

impl Alg {
    fn params(&self) -> nakarig::Result<AlgebraParams> {
        AlgebraParams::new(self.n, self.m)
    }
}

#[derive(Args)]
struct Output {
    #[arg(long, conflicts_with = "tsv")]
    json: bool,
    #[arg(long)]
    tsv: bool,
}

#[derive(Args)]
struct SetArgs {
    #[command(flatten)]
    alg: Alg,
    /// Stable members, e.g. "0:1,2:3".
    #[arg(long, conflicts_with = "family")]
    members: Option<String>,
    #[arg(long, value_enum, requires_all = ["t", "delta"])]
    family: Option<Family>,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    delta: Option<u32>,
}

impl SetArgs {
    fn build(&self) -> anyhow::Result<GenCogenSet> {
        let a = self.alg.params()?;
        if let Some(family) = self.family {
            let (t, delta) = (self.t.unwrap_or(0), self.delta.unwrap_or(0));
            return Ok(match family {
                Family::S => family_s(t, delta, a)?,
                Family::N => family_n(t, delta, a)?,
            });
        }
        let members = match &self.members {
            Some(text) => parse_members(text)?,
            None => Vec::new(),
        };
        Ok(GenCogenSet::from_vertices(a, members)?)
    }
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, default_value_t = 20)]
    max_bits: usize,
    #[arg(long)]
    prune_rotation: bool,
}

impl SearchArgs {
    fn config(&self) -> anyhow::Result<SearchConfig> {
        Ok(SearchConfig {
            max_bits: self.max_bits,
            prune_rotation: self.prune_rotation,
            threads: threads()?,
        })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "S")]
    S,
    #[value(name = "N")]
    N,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Svg,
    Ascii,
}

#[derive(Clone)]
struct VertexArg(Vertex);

impl FromStr for VertexArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        parse_vertex(s).map(VertexArg)
    }
}

#[derive(Clone)]
struct Span(RangeInclusive<u32>);

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |p: &str| p.trim().parse::<u32>().map_err(|e| format!("{p:?}: {e}"));
        match s.split_once("..") {
            Some((lo, hi)) => Ok(Span(num(lo)?..=num(hi.trim_start_matches('='))?)),
            None => num(s).map(|v| Span(v..=v)),
        }
    }
}

fn parse_vertex(s: &str) -> Result<Vertex, String> {
    let (x, t) = s
        .split_once(':')
        .ok_or_else(|| format!("expected x:t, got {s:?}"))?;
    let x = x.trim().parse::<i64>().map_err(|e| format!("{s:?}: {e}"))?;
    let t = t.trim().parse::<i64>().map_err(|e| format!("{s:?}: {e}"))?;
    Ok(Vertex::new(x, t))
}

fn parse_members(text: &str) -> anyhow::Result<Vec<Vertex>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_vertex(s).map_err(|e| anyhow::Error::new(Error::Parse(e))))
        .collect()
}

fn threads() -> anyhow::Result<Option<usize>> {
    match std::env::var("NAKARIG_THREADS") {
        Ok(v) if !v.trim().is_empty() => {
            let k = v
                .trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("NAKARIG_THREADS={v:?}: {e}")))?;
            Ok(Some(k))
        }
        _ => Ok(None),
    }
}

/// A check ran to completion and found a mismatch.
#[derive(Debug)]
struct Mismatch;

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("verification failed")
    }
}

impl std::error::Error for Mismatch {}

fn print_json(value: &impl serde::Serialize) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn rd(alg: &Alg, t: Option<u32>, out: &Output) -> anyhow::Result<()> {
    let a = alg.params()?;
    let layers: Vec<u32> = match t {
        Some(t) => vec![t],
        None => (1..a.m()).collect(),
    };
    let mut rows = Vec::new();
    for t in layers {
        let v = [Vertex::new(0, t as i64)];
        let direct = rd_pair(&v, &v, a)?;
        // the closed form needs m >= n; the region computation does not
        let closed = match rd_closed_form(t, a) {
            Ok(r) => Some(r),
            Err(Error::Unsupported { .. }) => None,
            Err(e) => return Err(e.into()),
        };
        rows.push((t, closed, direct));
    }
    if out.json {
        let doc: Vec<_> = rows
            .iter()
            .map(|(t, c, d)| json!({"n": a.n(), "m": a.m(), "t": t, "closed": c, "direct": d}))
            .collect();
        return print_json(&if doc.len() == 1 {
            doc[0].clone()
        } else {
            json!(doc)
        });
    }
    if out.tsv {
        println!("n\tm\tt\tclosed\tdirect");
    }
    let single = rows.len() == 1;
    for (t, closed, direct) in rows {
        let closed = closed.map_or("n/a".to_string(), |c| c.to_string());
        if out.tsv {
            println!("{}\t{}\t{t}\t{closed}\t{direct}", a.n(), a.m());
        } else if single {
            println!("{closed} (closed) / {direct} (direct)");
        } else {
            println!("t={t}: {closed} (closed) / {direct} (direct)");
        }
    }
    Ok(())
}

fn rigdim(alg: &Alg, out: &Output) -> anyhow::Result<()> {
    let a = alg.params()?;
    let value = rigdim_formula(a)?;
    let chain = euclid_chain(a)?;
    if out.json {
        return print_json(&json!({
            "n": a.n(),
            "m": a.m(),
            "rigdim": value,
            "d": chain.d(),
            "k": chain.quotients(),
            "s": chain.remainders(),
            "F": chain.weighted_fibonacci(),
        }));
    }
    if out.tsv {
        println!("n\tm\trigdim\td");
        println!("{}\t{}\t{value}\t{}", a.n(), a.m(), chain.d());
        return Ok(());
    }
    println!("{value}");
    println!(
        "chain: d={} k={:?} s={:?} F={:?}",
        chain.d(),
        chain.quotients(),
        chain.remainders(),
        chain.weighted_fibonacci()
    );
    Ok(())
}

fn mdim(args: &SetArgs, out: &Output) -> anyhow::Result<()> {
    let set = args.build()?;
    let a = set.params();
    let mut table = MdimTable::new(&set);
    let mut rows = Vec::new();
    for v in a.stable_vertices() {
        rows.push((v, table.get(v)?));
    }
    if out.json {
        let doc: Vec<_> = rows
            .iter()
            .map(|(v, o)| json!({"vertex": v, "mdim": o.as_dim(), "outcome": o}))
            .collect();
        return print_json(&json!({"set": set, "mdim": doc}));
    }
    if out.tsv {
        println!("x\tt\tmdim");
    }
    for (v, o) in rows {
        if out.tsv {
            println!("{}\t{}\t{}", v.x, v.t, o.as_dim());
        } else {
            println!("{v}\t{}", o.as_dim());
        }
    }
    Ok(())
}

fn gldim(args: &SetArgs, out: &Output) -> anyhow::Result<()> {
    let set = args.build()?;
    let g = gldim_end(&set);
    if out.json {
        print_json(&json!({"set": set, "gldim": g}))
    } else {
        println!("{}", g.as_dim());
        Ok(())
    }
}

fn resolve(args: &SetArgs, vertex: Option<Vertex>, render: Option<&PathBuf>) -> anyhow::Result<()> {
    let set = args.build()?;
    let a = set.params();
    let targets: Vec<Vertex> = match vertex {
        Some(v) => vec![v],
        None => a.stable_vertices().filter(|&v| !set.contains(v)).collect(),
    };
    let mut table = MdimTable::new(&set);
    let mut doc = Vec::new();
    for v in targets {
        let approx = min_approximation(v, &set)?;
        if let Some(path) = render {
            std::fs::write(path, svg(&set, &approx.rectangles))
                .with_context(|| format!("writing {}", path.display()))?;
        }
        doc.push(json!({"approximation": approx, "mdim": table.get(v)?.as_dim()}));
    }
    print_json(&json!({"set": set, "resolutions": doc}))
}

fn brute(alg: &Alg, search: &SearchArgs, out: &Output) -> anyhow::Result<()> {
    let a = alg.params()?;
    let report = brute_force_rigdim(a, &search.config()?)?;
    let mismatch = report.formula_value.is_some() && !report.agrees();
    if out.json {
        print_json(&report)?;
    } else {
        let show = |d: Option<nakarig::Dim>| d.map_or("n/a".to_string(), |d| d.to_string());
        if out.tsv {
            println!("n\tm\tbrute\tformula\tsubsets\tmillis");
            println!(
                "{}\t{}\t{}\t{}\t{}\t{}",
                a.n(),
                a.m(),
                show(report.brute_value),
                show(report.formula_value),
                report.subsets_examined,
                report.elapsed.as_millis()
            );
        } else {
            println!("{}", show(report.brute_value));
            println!("table: {}", show(report.formula_value));
            if let Some(w) = &report.best_witness {
                println!("witness: {} (rd {}, gldim {})", w.set, w.rd, w.gldim);
            }
            println!(
                "subsets examined: {} in {} ms",
                report.subsets_examined,
                report.elapsed.as_millis()
            );
            println!("note: {DOMDIM_NOTE}");
        }
    }
    if mismatch {
        return Err(Mismatch.into());
    }
    Ok(())
}

fn witness(alg: &Alg, out: &Output) -> anyhow::Result<()> {
    let a = alg.params()?;
    let report = verify_witness(a)?;
    if out.json {
        print_json(&report)?;
    } else {
        println!("{}", if report.pass { "pass" } else { "FAIL" });
        println!("witness: {} = {}", report.witness, report.set);
        println!(
            "rd {}, gldim {}, table {}",
            report.rd, report.gldim, report.formula
        );
    }
    if !report.pass {
        return Err(Mismatch.into());
    }
    Ok(())
}

fn verify(criteria: &[u8], seed: u64, out: &Output) -> anyhow::Result<()> {
    let cfg = VerifyConfig {
        threads: threads()?,
        seed,
    };
    let outcomes = if criteria.is_empty() {
        run_all(&cfg)?
    } else {
        criteria
            .iter()
            .map(|&id| run_criterion(id, &cfg))
            .collect::<nakarig::Result<_>>()?
    };
    if out.json {
        print_json(&outcomes)?;
    } else {
        for o in &outcomes {
            println!("{o}");
        }
    }
    if outcomes.iter().any(|o| !o.pass) {
        return Err(Mismatch.into());
    }
    Ok(())
}

fn sweep(n: &Span, m: &Span, search: &SearchArgs, out: &Output) -> anyhow::Result<()> {
    let cfg = search.config()?;
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut mismatch = false;
    if !out.json {
        text.push_str("n\tm\tk_0\td\tformula\tbrute\twitness_rd\tsubsets\tmillis\n");
    }
    for n in n.0.clone() {
        for m in m.0.clone().filter(|&m| m >= n) {
            let a = AlgebraParams::new(n, m)?;
            let chain = euclid_chain(a)?;
            let formula = rigdim_formula(a)?;
            let witness_rd = match witness_params(a) {
                Ok(w) => Some(nakarig::rd_of_set(&witness_set(w, a)?)),
                Err(Error::Unsupported { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            // over budget: leave the brute-force columns empty instead of refusing
            let report = match brute_force_rigdim(a, &cfg) {
                Ok(r) => Some(r),
                Err(Error::Budget { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            if let Some(r) = &report {
                mismatch |= !r.agrees();
            }
            let brute = report.as_ref().and_then(|r| r.brute_value);
            let subsets = report.as_ref().map(|r| r.subsets_examined);
            let millis = report.as_ref().map(|r| r.elapsed.as_millis() as u64);
            if out.json {
                rows.push(json!({
                    "n": n, "m": m, "k_0": chain.k(0), "d": chain.d(), "formula": formula,
                    "brute": brute, "witness_rd": witness_rd, "subsets": subsets, "millis": millis,
                }));
            } else {
                let cell = |v: Option<String>| v.unwrap_or_else(|| "-".into());
                let _ = writeln!(
                    text,
                    "{n}\t{m}\t{}\t{}\t{formula}\t{}\t{}\t{}\t{}",
                    chain.k(0),
                    chain.d(),
                    cell(brute.map(|b| b.to_string())),
                    cell(witness_rd.map(|w| w.to_string())),
                    cell(subsets.map(|s| s.to_string())),
                    cell(millis.map(|s| s.to_string())),
                );
            }
        }
    }
    if out.json {
        print_json(&rows)?;
    } else {
        print!("{text}");
    }
    if mismatch {
        return Err(Mismatch.into());
    }
    Ok(())
}

fn render(args: &SetArgs, format: Format, out: Option<&PathBuf>) -> anyhow::Result<()> {
    let set = args.build()?;
    let doc = match format {
        Format::Ascii => ascii_grid(&set),
        Format::Svg => svg(&set, &[]),
    };
    match out {
        Some(path) => {
            std::fs::write(path, doc).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{doc}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match &cli.command {
        Command::Rd { alg, t, out } => rd(alg, *t, out),
        Command::Rigdim { alg, out } => rigdim(alg, out),
        Command::Mdim { set, out } => mdim(set, out),
        Command::Gldim { set, out } => gldim(set, out),
        Command::Resolve {
            set,
            vertex,
            render,
        } => resolve(set, vertex.as_ref().map(|v| v.0), render.as_ref()),
        Command::Brute { alg, search, out } => brute(alg, search, out),
        Command::Witness { alg, out } => witness(alg, out),
        Command::Verify {
            criteria,
            seed,
            out,
        } => verify(criteria, *seed, out),
        Command::Sweep { n, m, search, out } => sweep(n, m, search, out),
        Command::Render { set, format, out } => render(set, *format, out.as_ref()),
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.is::<Mismatch>() {
        return 3;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::Budget { .. }) => 1,
        Some(_) => 2,
        None => 1,
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
