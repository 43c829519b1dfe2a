//! Command-line front end: invariants of user-supplied surgery diagrams,
//! tight-structure counts, the Hopf link atlas, family builders, and the
//! grid verification suite.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 mathematical
//! precondition failure, 3 verification mismatch.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use hopflink::atlas::{self, CaseTag, Realization};
use hopflink::families::{self, C2Variant, FamilyDiagram};
use hopflink::linalg::Rat;
use hopflink::slopes;
use hopflink::surgery::{D3Breakdown, DiagramFile};
use hopflink::verify::{self, GridSpec};
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "hopflink",
    version,
    about = "Exact invariants of Legendrian links from contact (+1)/(-1)-surgery \
             presentations, with tight-structure counts and the Legendrian Hopf link \
             atlas for L(p,1)",
    after_help = "Negative numbers are accepted directly by the value options \
                  (e.g. --t0 -2); positional arguments starting with '-' need the \
                  usual '--' sentinel, as in: hopflink ncf -- -5/2"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Cmd {
    /// Compute tb_Q, rot_Q and the ambient d3 for a diagram file
    Invariants {
        /// Path to a JSON diagram file
        path: PathBuf,
        /// Emit machine-readable JSON
        #[arg(long)]
        json: bool,
    },
    /// Count tight minimally twisting structures on the separating torus
    Count {
        /// Lens space order p >= 2
        #[arg(short)]
        p: i64,
        /// Framing of the first component
        #[arg(long, allow_negative_numbers = true)]
        t0: i64,
        /// Framing of the second component
        #[arg(long, allow_negative_numbers = true)]
        t1: i64,
        /// Show the normalization and continued-fraction derivation
        #[arg(long)]
        trace: bool,
    },
    /// List all Legendrian realizations of the Hopf link for (p, t0, t1)
    Classify {
        #[arg(short)]
        p: i64,
        #[arg(long, allow_negative_numbers = true)]
        t0: i64,
        #[arg(long, allow_negative_numbers = true)]
        t1: i64,
        /// Emit machine-readable JSON
        #[arg(long)]
        json: bool,
    },
    /// Build one family diagram and print its computed invariants
    Family {
        /// Case tag: a, b, c2, c3, d1, d2, d3, e1, e2
        case: String,
        #[arg(short)]
        p: i64,
        #[arg(long, allow_negative_numbers = true)]
        t0: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        t1: Option<i64>,
        /// Cusp or stabilization count, cases a and b
        #[arg(long, allow_negative_numbers = true)]
        k: Option<i64>,
        /// Cusp or stabilization count, cases a and b
        #[arg(long, allow_negative_numbers = true)]
        l: Option<i64>,
        /// Cusp counts of L0 and L1, case a
        #[arg(long)]
        k0: Option<i64>,
        #[arg(long)]
        l0: Option<i64>,
        #[arg(long)]
        k1: Option<i64>,
        #[arg(long)]
        l1: Option<i64>,
        /// Rotation parameter, cases d1, d2, d3, e1, e2
        #[arg(long, allow_negative_numbers = true)]
        r: Option<i64>,
        /// Rotation parameter of L0, cases e1 and e2
        #[arg(long, allow_negative_numbers = true)]
        r0: Option<i64>,
        /// Atlas row, cases c3 and d3
        #[arg(long)]
        row: Option<u8>,
        /// Overall sign +1 or -1, cases c3, d2, d3, e2
        #[arg(long, allow_negative_numbers = true)]
        sign: Option<i64>,
        /// Variant for case c2: left+, left- or right
        #[arg(long)]
        variant: Option<String>,
        /// Write the diagram as a JSON file loadable by `invariants`
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Run the cross-check suite over a parameter grid
    Verify {
        #[arg(long, default_value_t = 2)]
        p_min: i64,
        #[arg(long, default_value_t = 6)]
        p_max: i64,
        #[arg(long, default_value_t = 3)]
        t_max: i64,
        /// Restrict to one case tag
        #[arg(long)]
        case: Option<String>,
        /// Emit machine-readable JSON
        #[arg(long)]
        json: bool,
    },
    /// Expand a rational q <= -1 as a negative continued fraction
    Ncf {
        /// The rational, as 'a' or 'a/b'
        q: String,
    },
}

struct CliError {
    code: u8,
    message: String,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError {
        code: 1,
        message: msg.into(),
    }
}

fn math(err: impl std::fmt::Display) -> CliError {
    CliError {
        code: 2,
        message: err.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0u8,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.cmd {
        Cmd::Invariants { path, json } => cmd_invariants(&path, json),
        Cmd::Count { p, t0, t1, trace } => cmd_count(p, t0, t1, trace),
        Cmd::Classify { p, t0, t1, json } => cmd_classify(p, t0, t1, json),
        Cmd::Family {
            case,
            p,
            t0,
            t1,
            k,
            l,
            k0,
            l0,
            k1,
            l1,
            r,
            r0,
            row,
            sign,
            variant,
            emit,
        } => cmd_family(FamilyArgs {
            case,
            p,
            t0,
            t1,
            k,
            l,
            k0,
            l0,
            k1,
            l1,
            r,
            r0,
            row,
            sign,
            variant,
            emit,
        }),
        Cmd::Verify {
            p_min,
            p_max,
            t_max,
            case,
            json,
        } => cmd_verify(p_min, p_max, t_max, case, json),
        Cmd::Ncf { q } => cmd_ncf(&q),
    }
}

fn rat_json(r: &Rat) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

const D3_NOTE: &str = "note: d3 is computed from the presentation data alone; for \
arbitrary user diagrams its interpretation as the homotopy invariant of the surgered \
structure rests on the diagram being a valid contact surgery presentation.";

fn cmd_invariants(path: &PathBuf, as_json: bool) -> Result<ExitCode, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let file = DiagramFile::from_json(&text).map_err(usage)?;
    let diagram = file.diagram().map_err(math)?;
    let breakdown = diagram.d3_invariant().map_err(math)?;
    let homology = diagram.homology_order().map_err(math)?;
    let mut rows = Vec::new();
    for (i, comp) in file.components.iter().enumerate() {
        let name = comp
            .name
            .clone()
            .unwrap_or_else(|| format!("component {i}"));
        let tbq = diagram.tb_rational(comp).map_err(math)?;
        let rotq = diagram.rot_rational(comp).map_err(math)?;
        rows.push((name, tbq, rotq));
    }
    if as_json {
        let components: Vec<Value> = rows
            .iter()
            .map(|(name, tbq, rotq)| {
                json!({ "name": name, "tb_q": rat_json(tbq), "rot_q": rat_json(rotq) })
            })
            .collect();
        let out = json!({
            "components": components,
            "d3": d3_json(&breakdown),
            "homology_order": homology.to_string(),
            "warning": D3_NOTE,
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        for (name, tbq, rotq) in &rows {
            println!("{name}: tb_Q = {tbq}, rot_Q = {rotq}");
        }
        println!("{}", d3_line(&breakdown));
        println!("homology order = {homology}");
        println!("{D3_NOTE}");
    }
    Ok(ExitCode::SUCCESS)
}

fn d3_line(b: &D3Breakdown) -> String {
    format!(
        "d3 = {} (c^2 = {}, sigma = {}, chi = {}, q = {})",
        b.d3, b.c_squared, b.sigma, b.chi, b.q
    )
}

fn d3_json(b: &D3Breakdown) -> Value {
    json!({
        "value": rat_json(&b.d3),
        "c_squared": rat_json(&b.c_squared),
        "sigma": b.sigma,
        "chi": b.chi,
        "q": b.q,
    })
}

fn cmd_count(p: i64, t0: i64, t1: i64, trace: bool) -> Result<ExitCode, CliError> {
    let record = slopes::count_tight_trace(p, t0, t1).map_err(math)?;
    if trace {
        println!("s0 = (t0, 1) = {}", record.s0);
        println!("s1 = (-t1, p*t1 + 1) = {}", record.s1);
        match (&record.normalization, &record.normalized_slope) {
            (Some(a), Some(value)) => {
                println!("normalization A = {a} with A(s0) = (-1, 1), s1' = {value}");
                let coeffs: Vec<String> =
                    record.expansion.iter().map(|c| c.to_string()).collect();
                println!("expansion of s1' = [{}]", coeffs.join(","));
            }
            _ => println!("boundary slopes coincide; only the product layer remains"),
        }
    }
    println!("N = {}", record.count);
    Ok(ExitCode::SUCCESS)
}

fn realization_json(r: &Realization) -> Value {
    json!({
        "case": r.case_tag.as_str(),
        "p": r.p,
        "t0": r.t0,
        "t1": r.t1,
        "tb_q0": rat_json(&r.tbq0),
        "rot_q0": rat_json(&r.rotq0),
        "tb_q1": rat_json(&r.tbq1),
        "rot_q1": rat_json(&r.rotq1),
        "d3": rat_json(&r.d3),
        "ambient": r.ambient.to_string(),
        "loose0": r.loose0,
        "loose1": r.loose1,
        "r": r.r,
        "r0": r.r0,
        "r1": r.r1,
    })
}

fn realization_params(r: &Realization) -> String {
    let mut parts = Vec::new();
    if let Some(v) = r.r {
        parts.push(format!("r = {v}"));
    }
    if let Some(v) = r.r0 {
        parts.push(format!("r0 = {v}"));
    }
    if let Some(v) = r.r1 {
        parts.push(format!("r1 = {v}"));
    }
    if parts.is_empty() {
        String::new()
    } else {
        format!(", {}", parts.join(", "))
    }
}

fn cmd_classify(p: i64, t0: i64, t1: i64, as_json: bool) -> Result<ExitCode, CliError> {
    let list = atlas::classify(p, t0, t1).map_err(math)?;
    if as_json {
        let realizations: Vec<Value> = list.iter().map(realization_json).collect();
        let out = json!({
            "p": p,
            "t0": t0,
            "t1": t1,
            "count": list.len(),
            "realizations": realizations,
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
        return Ok(ExitCode::SUCCESS);
    }
    let case = list
        .first()
        .map(|r| r.case_tag.as_str())
        .unwrap_or("none");
    println!(
        "{} realization(s) for p = {p}, (t0, t1) = ({t0}, {t1}), case {case}",
        list.len()
    );
    if let Some(first) = list.first() {
        println!("tb_Q = ({}, {})", first.tbq0, first.tbq1);
    }
    for r in &list {
        println!(
            "  rot_Q = ({}, {}), d3 = {}, ambient {}, loose = ({}, {}){}",
            r.rotq0,
            r.rotq1,
            r.d3,
            r.ambient,
            if r.loose0 { "yes" } else { "no" },
            if r.loose1 { "yes" } else { "no" },
            realization_params(r)
        );
    }
    Ok(ExitCode::SUCCESS)
}

struct FamilyArgs {
    case: String,
    p: i64,
    t0: Option<i64>,
    t1: Option<i64>,
    k: Option<i64>,
    l: Option<i64>,
    k0: Option<i64>,
    l0: Option<i64>,
    k1: Option<i64>,
    l1: Option<i64>,
    r: Option<i64>,
    r0: Option<i64>,
    row: Option<u8>,
    sign: Option<i64>,
    variant: Option<String>,
    emit: Option<PathBuf>,
}

fn req<T>(opt: Option<T>, case: &str, name: &str) -> Result<T, CliError> {
    opt.ok_or_else(|| usage(format!("case {case} requires --{name}")))
}

fn cmd_family(args: FamilyArgs) -> Result<ExitCode, CliError> {
    let tag = CaseTag::from_str(&args.case).map_err(usage)?;
    let c = args.case.as_str();
    let fam = match tag {
        CaseTag::A => families::build_case_a(
            args.p,
            req(args.k, c, "k")?,
            req(args.l, c, "l")?,
            req(args.k0, c, "k0")?,
            req(args.l0, c, "l0")?,
            req(args.k1, c, "k1")?,
            req(args.l1, c, "l1")?,
        ),
        CaseTag::B => families::build_case_b(args.p, req(args.k, c, "k")?, req(args.l, c, "l")?),
        CaseTag::C1 => Err(families::FamilyError::NoConstructor(CaseTag::C1)),
        CaseTag::C2 => {
            let variant =
                C2Variant::from_str(&req(args.variant, c, "variant")?).map_err(usage)?;
            families::build_case_c2(args.p, variant)
        }
        CaseTag::C3 => families::build_case_c3(
            args.p,
            req(args.t1, c, "t1")?,
            req(args.row, c, "row")?,
            req(args.sign, c, "sign")?,
        ),
        CaseTag::D1 => families::build_case_d1(args.p, req(args.r, c, "r")?),
        CaseTag::D2 => families::build_case_d2(
            args.p,
            req(args.t1, c, "t1")?,
            req(args.r, c, "r")?,
            req(args.sign, c, "sign")?,
        ),
        CaseTag::D3 => families::build_case_d3(
            args.p,
            req(args.t0, c, "t0")?,
            req(args.t1, c, "t1")?,
            req(args.row, c, "row")?,
            req(args.r, c, "r")?,
            req(args.sign, c, "sign")?,
        ),
        CaseTag::ET1Eq1 => families::build_case_e1(
            args.p,
            req(args.t0, c, "t0")?,
            req(args.r, c, "r")?,
            req(args.r0, c, "r0")?,
        ),
        CaseTag::ET1Gt1 => families::build_case_e2(
            args.p,
            req(args.t0, c, "t0")?,
            req(args.t1, c, "t1")?,
            req(args.r, c, "r")?,
            req(args.r0, c, "r0")?,
            req(args.sign, c, "sign")?,
        ),
    }
    .map_err(math)?;
    print_family(&fam)?;
    if let Some(path) = args.emit {
        let file = DiagramFile {
            knots: fam.diagram.knots().to_vec(),
            offdiag: fam.diagram.offdiag().to_vec(),
            components: fam.components.to_vec(),
        };
        std::fs::write(&path, file.to_json())
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
        println!("wrote {}", path.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn print_family(fam: &FamilyDiagram) -> Result<(), CliError> {
    let params = fam
        .params
        .iter()
        .map(|(k, v)| format!("{k} = {v}"))
        .collect::<Vec<_>>()
        .join(", ");
    println!(
        "case {}: p = {}, (t0, t1) = ({}, {}), {}",
        fam.case_tag, fam.p, fam.t0, fam.t1, params
    );
    println!("surgery knots (tb, rot, sign):");
    for (i, knot) in fam.diagram.knots().iter().enumerate() {
        println!(
            "  K{i}: ({}, {}, {})",
            knot.tb,
            knot.rot,
            if knot.sign > 0 { "+1" } else { "-1" }
        );
    }
    let mut links = String::new();
    for i in 0..fam.diagram.len() {
        for j in i + 1..fam.diagram.len() {
            let v = fam.diagram.offdiag()[i][j];
            if v != 0 {
                let _ = write!(links, " K{i}-K{j}={v}");
            }
        }
    }
    println!("nonzero links:{}", if links.is_empty() { " none" } else { &links });
    println!("components (tb, rot; links to K0..):");
    for comp in &fam.components {
        let name = comp.name.as_deref().unwrap_or("?");
        println!("  {name}: ({}, {}; {:?})", comp.tb, comp.rot, comp.links);
    }
    let inv = fam.invariants().map_err(math)?;
    println!("computed invariants:");
    println!("  tb_Q(L0) = {}, rot_Q(L0) = {}", inv.tbq0, inv.rotq0);
    println!("  tb_Q(L1) = {}, rot_Q(L1) = {}", inv.tbq1, inv.rotq1);
    println!("  {}", d3_line(&inv.d3));
    println!("  homology order = {}", inv.homology_order);
    Ok(())
}

fn cmd_verify(
    p_min: i64,
    p_max: i64,
    t_max: i64,
    case: Option<String>,
    as_json: bool,
) -> Result<ExitCode, CliError> {
    if p_min < 2 || p_max < p_min || t_max < 0 {
        return Err(usage(format!(
            "grid must satisfy 2 <= p_min <= p_max and t_max >= 0, \
             got p in [{p_min}, {p_max}], t_max = {t_max}"
        )));
    }
    let case_filter = match case {
        None => None,
        Some(s) => Some(CaseTag::from_str(&s).map_err(usage)?),
    };
    let grid = GridSpec {
        p_min,
        p_max,
        t_max,
        case_filter,
    };
    let report = verify::run(&grid);
    if as_json {
        let checks: Vec<Value> = report
            .checks
            .iter()
            .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
            .collect();
        let out = json!({
            "grid": {
                "p_min": grid.p_min,
                "p_max": grid.p_max,
                "t_max": grid.t_max,
                "case": grid.case_filter.map(|t| t.as_str()),
            },
            "notes": report.notes,
            "checks": checks,
            "summary": { "passed": report.passed(), "failed": report.failed() },
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!(
            "verification over p in [{}, {}], |t0|, |t1| <= {}{}",
            grid.p_min,
            grid.p_max,
            grid.t_max,
            grid.case_filter
                .map(|t| format!(", case {t}"))
                .unwrap_or_default()
        );
        for note in &report.notes {
            println!("note: {note}");
        }
        for check in &report.checks {
            let status = if check.passed { "ok  " } else { "FAIL" };
            println!("{status} {} ({})", check.name, check.detail);
        }
        println!(
            "summary: {} passed, {} failed",
            report.passed(),
            report.failed()
        );
    }
    if report.all_passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(3))
    }
}

fn cmd_ncf(q: &str) -> Result<ExitCode, CliError> {
    let q: Rat = q
        .parse()
        .map_err(|e| usage(format!("cannot parse '{q}' as a rational: {e}")))?;
    let coeffs = slopes::ncf_expand(&q).map_err(math)?;
    let n = slopes::honda_count(&coeffs);
    let parts: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    println!("[{}], N={n}", parts.join(","));
    Ok(ExitCode::SUCCESS)
}
