//! `kahler`: build Kähler-module presentations from ring files, run the
//! canonical maps and checks, and verify the bundled corpus.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kahler_core::diffmod::{
    iota_sym_to_omega2, jq_presentation, omega_presentation_with, ring_as_module, theta_second_to_first,
    theta_to_jets, DeltaBasis,
};
use kahler_core::parse::{parse_monomial_list, parse_ringspec};
use kahler_core::presentation::{check_exact, verify_splitting};
use kahler_core::resolution::{free_resolution, jacobian_regular, minimalize, projective_dimension, ResolutionReport};
use kahler_core::structured::{map_to_json, presentation_to_json, resolution_to_json, to_string};
use kahler_core::suite::{run_suite, Corpus, SuiteOptions};
use kahler_core::symderiv::{splitting_t, symmetric_derivation_solve, SymDerivVerdict, SymmetricFrame};
use kahler_core::{ModuleMap, Presentation, Rational, RingSpec};

#[derive(Parser, Debug)]
#[command(name = "kahler", version, about = "Higher-order Kähler modules over affine algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Ring file.
    #[arg(long, global = true)]
    ring: Option<PathBuf>,

    /// Order q.
    #[arg(short = 'q', long = "order", global = true, default_value_t = 1)]
    q: u32,

    /// Resolution cutoff.
    #[arg(long, global = true, default_value_t = 6)]
    cutoff: usize,

    /// Basis order for Ω^(q), e.g. "x^2,y^2,x*y,x,y".
    #[arg(long, global = true)]
    basis: Option<String>,

    /// Module selector: omega, ring, jets:omega, sym2:omega, ...
    #[arg(long, global = true, default_value = "omega")]
    module: String,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
enum Command {
    /// Presentation of Ω^(q).
    Omega,
    /// Presentation of J_q(Ω^(q)).
    Jets,
    /// Presentation of S²(Ω^(q)).
    Sym2,
    /// θ: Ω² → Ω¹, or Ω^(2q) → J_q(Ω^(q)) with --jets.
    Theta {
        #[arg(long)]
        jets: bool,
    },
    /// ι: S²(Ω¹) → Ω².
    Iota,
    /// Split 0 → S²(Ω¹) → Ω² → Ω¹ → 0 with a symmetric derivation.
    Split,
    /// Decide whether a symmetric derivation of order q exists.
    Symderiv,
    /// Free resolution of the selected module.
    Resolve {
        /// Skip minimalization.
        #[arg(long)]
        raw: bool,
    },
    /// Projective dimension of the selected module.
    Pd,
    /// Rank of the selected module.
    Rank,
    /// Jacobian regularity test.
    Regular,
    /// Run the verification suite over a corpus of ring files.
    VerifyPaper {
        #[arg(long, default_value = "corpus")]
        corpus: PathBuf,
        /// Randomized cases per property.
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

/// Bad input (exit 2) versus a failed mathematical check (exit 1).
enum Failure {
    Input(anyhow::Error),
    Check(String),
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.into())
    }
}

struct Output {
    text: String,
    payload: Value,
    /// Set when a check did not hold; the report is still printed.
    failed: Option<String>,
}

impl Output {
    fn ok(text: String, payload: Value) -> Output {
        Output {
            text,
            payload,
            failed: None,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli);
    eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    match result {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text),
                Format::Structured => {
                    let report = json!({
                        "request": request_echo(&cli),
                        "seed": 0,
                        "result": out.payload,
                    });
                    print!("{}", to_string(&report));
                }
            }
            match out.failed {
                Some(msg) => {
                    eprintln!("check failed: {msg}");
                    ExitCode::from(1)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn request_echo(cli: &Cli) -> Value {
    let command = match &cli.command {
        Command::Omega => "omega",
        Command::Jets => "jets",
        Command::Sym2 => "sym2",
        Command::Theta { .. } => "theta",
        Command::Iota => "iota",
        Command::Split => "split",
        Command::Symderiv => "symderiv",
        Command::Resolve { .. } => "resolve",
        Command::Pd => "pd",
        Command::Rank => "rank",
        Command::Regular => "regular",
        Command::VerifyPaper { .. } => "verify-paper",
    };
    json!({
        "command": command,
        "ring": cli.ring.as_ref().map(|p| p.display().to_string()),
        "q": cli.q,
        "cutoff": cli.cutoff,
        "basis": cli.basis,
        "module": cli.module,
    })
}

fn load_ring(cli: &Cli) -> Result<RingSpec, Failure> {
    let path = cli.ring.as_ref().ok_or_else(|| anyhow!("--ring is required"))?;
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read ring file {}", path.display()))?;
    Ok(parse_ringspec(&text).with_context(|| format!("in {}", path.display()))?)
}

fn order(cli: &Cli) -> Result<u32, Failure> {
    if cli.q == 0 {
        return Err(anyhow!("-q must be at least 1").into());
    }
    Ok(cli.q)
}

fn basis(cli: &Cli, ring: &RingSpec, q: u32) -> Result<DeltaBasis, Failure> {
    Ok(match &cli.basis {
        Some(text) => DeltaBasis::with_monomials(ring, q, parse_monomial_list(text, ring)?)?,
        None => DeltaBasis::new(ring, q),
    })
}

/// Builds the module named by a selector such as `sym2:jets:omega`.
fn select_module(cli: &Cli, ring: &RingSpec, q: u32) -> Result<Presentation, Failure> {
    let mut parts: Vec<&str> = cli.module.split(':').map(str::trim).collect();
    let base = parts.pop().unwrap_or_default();
    let mut m = match base {
        "omega" => omega_presentation_with(ring, &basis(cli, ring, q)?),
        "ring" => ring_as_module(ring),
        other => return Err(anyhow!("unknown module `{other}`; expected omega or ring").into()),
    };
    for op in parts.iter().rev() {
        m = match *op {
            "jets" => jq_presentation(&m, q),
            "sym2" => m.symmetric_square(),
            other => return Err(anyhow!("unknown module operation `{other}`; expected jets or sym2").into()),
        };
    }
    Ok(m)
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    if let Command::VerifyPaper { corpus, cases } = &cli.command {
        return verify(corpus, *cases, cli.format);
    }
    if cli.cutoff == 0 {
        return Err(anyhow!("--cutoff must be at least 1").into());
    }
    let ring = load_ring(cli)?;
    match &cli.command {
        Command::Omega => {
            let q = order(cli)?;
            Ok(presentation_output(omega_presentation_with(&ring, &basis(cli, &ring, q)?)))
        }
        Command::Jets => {
            let q = order(cli)?;
            let omega = omega_presentation_with(&ring, &basis(cli, &ring, q)?);
            Ok(presentation_output(jq_presentation(&omega, q)))
        }
        Command::Sym2 => {
            let q = order(cli)?;
            Ok(presentation_output(
                omega_presentation_with(&ring, &basis(cli, &ring, q)?).symmetric_square(),
            ))
        }
        Command::Theta { jets } => {
            let map = if *jets {
                theta_to_jets(&ring, order(cli)?)?
            } else {
                theta_second_to_first(&ring)?
            };
            map_output(&map, true)
        }
        Command::Iota => map_output(&iota_sym_to_omega2(&ring)?, true),
        Command::Split => split(&ring),
        Command::Symderiv => symderiv(&ring, order(cli)?),
        Command::Resolve { raw } => {
            let m = select_module(cli, &ring, order(cli)?)?;
            let mut res = free_resolution(&m, cli.cutoff)?;
            if !raw {
                res = minimalize(&res)?;
            }
            Ok(resolution_output(&res))
        }
        Command::Pd => {
            let m = select_module(cli, &ring, order(cli)?)?;
            let pd = projective_dimension(&m, cli.cutoff)?;
            Ok(Output::ok(format!("{pd}\n"), json!({ "kind": "pd", "pd": pd.to_string() })))
        }
        Command::Rank => {
            let m = select_module(cli, &ring, order(cli)?)?;
            let rank = m.rank()?;
            Ok(Output::ok(format!("{rank}\n"), json!({ "kind": "rank", "rank": rank })))
        }
        Command::Regular => {
            let regular = jacobian_regular(&ring);
            let caveat = "the Jacobian criterion over Q certifies smoothness; a false answer does not rule out regularity over a non-perfect field";
            Ok(Output::ok(
                format!("{regular}\nnote: {caveat}\n"),
                json!({ "kind": "regular", "regular": regular, "caveat": caveat }),
            ))
        }
        Command::VerifyPaper { .. } => unreachable!("handled above"),
    }
}

fn presentation_output(p: Presentation) -> Output {
    Output::ok(p.render_text(), presentation_to_json(&p))
}

fn map_text(map: &ModuleMap) -> String {
    let src: Vec<String> = map.source().generators().iter().map(|g| g.to_string()).collect();
    let mut out = String::new();
    for (label, col) in src.iter().zip(map.columns()) {
        let terms: Vec<String> = col
            .coords()
            .iter()
            .zip(map.target().generators())
            .filter(|(p, _)| !p.is_zero())
            .map(|(p, g)| format!("({p})*{g}"))
            .collect();
        let image = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        out.push_str(&format!("{label} -> {image}\n"));
    }
    out
}

fn map_output(map: &ModuleMap, summary: bool) -> Result<Output, Failure> {
    let mut text = map_text(map);
    let mut payload = map_to_json(map);
    if summary {
        let injective = map.is_injective()?;
        let surjective = map.is_surjective();
        text.push_str(&format!("injective: {injective}\nsurjective: {surjective}\n"));
        payload["injective"] = json!(injective);
        payload["surjective"] = json!(surjective);
    }
    Ok(Output::ok(text, payload))
}

fn resolution_output(res: &ResolutionReport) -> Output {
    let mut text = format!("betti: {:?}\nterminated: {}\n", res.betti, res.terminated);
    if res.minimal {
        text.push_str(&format!("pd: {}\n", kahler_core::resolution::verdict(res)));
    }
    if let Some(note) = res.growth_note() {
        text.push_str(&format!("note: {note}\n"));
    }
    for (i, m) in res.steps.iter().enumerate() {
        text.push_str(&format!("step {i} ({} x {}):\n", m.nrows(), m.ncols()));
        for r in 0..m.nrows() {
            let row: Vec<String> = m.row(r).coords().iter().map(|p| p.to_string()).collect();
            text.push_str(&format!("  [{}]\n", row.join(", ")));
        }
    }
    Output::ok(text, resolution_to_json(res))
}

fn symderiv(ring: &RingSpec, q: u32) -> Result<Output, Failure> {
    match symmetric_derivation_solve(ring, q)? {
        SymDerivVerdict::Found(d) => {
            let frame = SymmetricFrame::new(ring, q);
            let gens = frame.omega().generators();
            let sym_gens = frame.sym().generators();
            let mut text = String::from("Found\n");
            let mut values = Vec::new();
            for (g, v) in gens.iter().zip(d.values()) {
                let terms: Vec<String> = v
                    .coords()
                    .iter()
                    .zip(sym_gens)
                    .filter(|(p, _)| !p.is_zero())
                    .map(|(p, s)| format!("({p})*{s}"))
                    .collect();
                let shown = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
                text.push_str(&format!("D({g}) = {shown}\n"));
                let coords: Vec<String> = v.coords().iter().map(|p| p.to_string()).collect();
                values.push(json!({ "generator": g.to_string(), "value": coords }));
            }
            Ok(Output::ok(
                text,
                json!({
                    "kind": "symderiv",
                    "verdict": "Found",
                    "sym_generators": sym_gens.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                    "values": values,
                }),
            ))
        }
        SymDerivVerdict::NotFound(o) => {
            let residue: Vec<String> = o.residue.coords().iter().map(|p| p.to_string()).collect();
            let text = format!(
                "NotFound\nobstruction: relation {} times {}\nresidue: [{}]\n",
                o.relation,
                o.multiplier,
                residue.join(", ")
            );
            Ok(Output::ok(
                text,
                json!({
                    "kind": "symderiv",
                    "verdict": "NotFound",
                    "relation": o.relation,
                    "multiplier": o.multiplier,
                    "residue": residue,
                }),
            ))
        }
    }
}

fn split(ring: &RingSpec) -> Result<Output, Failure> {
    let d = match symmetric_derivation_solve(ring, 1)? {
        SymDerivVerdict::Found(d) => d,
        SymDerivVerdict::NotFound(o) => {
            return Err(Failure::Check(format!(
                "no symmetric derivation exists (relation {} times {} is obstructed)",
                o.relation, o.multiplier
            )))
        }
    };
    let iota = iota_sym_to_omega2(ring)?;
    let theta = theta_second_to_first(ring)?;
    let t = splitting_t(&d, ring)?;
    let zero = Presentation::zero(ring);
    let exact = check_exact(&[
        ModuleMap::zero(&zero, iota.source())?,
        iota.clone(),
        theta.clone(),
        ModuleMap::zero(theta.target(), &zero)?,
    ])?;
    let half = Rational::new(1.into(), 2.into());
    let splits = verify_splitting(&iota, &t, &half)?;
    let mut text = map_text(&t);
    text.push_str(&format!("exact: {}\nsplits: {splits}\n", exact.iter().all(|&e| e)));
    let mut payload = map_to_json(&t);
    payload["exact"] = json!(exact);
    payload["splits"] = json!(splits);
    let mut out = Output::ok(text, payload);
    if !splits || exact.iter().any(|&e| !e) {
        out.failed = Some("the sequence is not split exact".into());
    }
    Ok(out)
}

fn verify(dir: &Path, cases: usize, format: Format) -> Result<Output, Failure> {
    if !dir.is_dir() {
        return Err(anyhow!("corpus directory {} not found", dir.display()).into());
    }
    let corpus = Corpus::load(dir)?;
    let opts = SuiteOptions {
        property_cases: cases,
        ..Default::default()
    };
    let report = run_suite(&corpus, &opts);
    for item in &report.items {
        eprintln!("item {:>2}: {:.3}s", item.id, item.elapsed.as_secs_f64());
    }
    let mut out = Output::ok(report.to_text(), report.to_json());
    if let Some(f) = report.first_failure() {
        let diff = f.details.join("\n  ");
        out.failed = Some(format!("item {} ({}):\n  {diff}", f.id, f.title));
    }
    if format == Format::Text && report.warnings.iter().any(|w| w.contains("empty")) {
        eprintln!("warning: empty corpus, nothing to verify");
    }
    Ok(out)
}
