//! Command-line frontend. Exit codes: 0 property holds / success, 1
//! property fails, 2 usage or parse error, 3 undecided under the search
//! budget.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use facetdecomp::bounds::{self, TheoremId, VerificationReport};
use facetdecomp::classify;
use facetdecomp::decomp::{self, Certificate, Decision};
use facetdecomp::homology;
use facetdecomp::io as fio;
use facetdecomp::{Complex, Error};

const EXIT_HOLDS: u8 = 0;
const EXIT_FAILS: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_UNDECIDED: u8 = 3;

/// Decide structural properties of finite simplicial complexes and verify
/// facet-count threshold results exhaustively at small vertex counts.
#[derive(Parser)]
#[command(name = "facetdecomp", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonFlags {
    /// Field characteristic for homology-based checks
    #[arg(long = "char", default_value_t = 2)]
    characteristic: u64,
    /// Node budget for the exponential searches (overrides FACETDECOMP_BUDGET)
    #[arg(long)]
    budget: Option<u64>,
    /// Machine-readable JSON output
    #[arg(long)]
    json: bool,
    /// Do not require every vertex 1..=n to be covered for purity
    #[arg(long)]
    no_cover_check: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print structural invariants of a complex; --deep adds the decision
    /// procedures
    Analyze {
        file: PathBuf,
        /// Also run the vertex-decomposability, Cohen-Macaulay,
        /// shellability and classification checks
        #[arg(long)]
        deep: bool,
        #[command(flatten)]
        flags: CommonFlags,
    },
    /// Decide one property; exit 0 if it holds, 1 if not, 3 if undecided
    Check {
        /// One of: vd, cm, shellable, completable, matroid, shifted,
        /// extremal, pure
        property: String,
        file: PathBuf,
        /// Write the witness (certificate or shelling order) as JSON
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[command(flatten)]
        flags: CommonFlags,
    },
    /// Generate a named complex: tight <n> <c>, skeleton <n> <d>,
    /// colex <r> <t> <n>
    Gen {
        kind: String,
        params: Vec<u64>,
        /// Output file (stdout when omitted)
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Alexander dual of a complex, in the facet file format
    Dual {
        file: PathBuf,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Stanley-Reisner generators (minimal nonfaces) as monomials
    Export {
        file: PathBuf,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Exhaustively verify a theorem over an n-range, e.g.
    /// `verify thm1.1 4..6`
    Verify {
        /// One of: thm1.1, lemma3.1, lemma3.3, cor3.4, lemma3.6, lemma4.5,
        /// cor4.6
        theorem: String,
        /// Inclusive range of vertex counts, e.g. 4..6
        range: String,
        /// Worker threads (output is identical for every value)
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the JSON report here as well
        #[arg(long, short)]
        out: Option<PathBuf>,
        #[command(flatten)]
        flags: CommonFlags,
    },
    /// Replay a decomposition certificate against a complex
    Certify {
        file: PathBuf,
        certificate: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn default_budget(flags: &CommonFlags) -> Option<u64> {
    flags.budget.or_else(|| {
        std::env::var("FACETDECOMP_BUDGET")
            .ok()
            .and_then(|s| s.parse().ok())
    })
}

fn load(path: &Path) -> Result<Complex, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        col: 0,
        msg: format!("{}: {e}", path.display()),
    })?;
    fio::parse_complex(&text)
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, content).map_err(|e| Error::Parse {
            line: 0,
            col: 0,
            msg: format!("{}: {e}", path.display()),
        }),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Analyze { file, deep, flags } => analyze(&file, deep, &flags),
        Command::Check { property, file, certificate, flags } => {
            check(&property, &file, certificate.as_deref(), &flags)
        }
        Command::Gen { kind, params, out } => gen(&kind, &params, &out),
        Command::Dual { file, out } => {
            let c = load(&file)?;
            emit(&out, &fio::write_text(&c.alexander_dual()?))?;
            Ok(EXIT_HOLDS)
        }
        Command::Export { file, out } => {
            let c = load(&file)?;
            emit(&out, &bounds::sr_export(&c)?)?;
            Ok(EXIT_HOLDS)
        }
        Command::Verify { theorem, range, jobs, out, flags } => {
            verify(&theorem, &range, jobs, &out, &flags)
        }
        Command::Certify { file, certificate } => {
            let c = load(&file)?;
            let text = std::fs::read_to_string(&certificate).map_err(|e| Error::Parse {
                line: 0,
                col: 0,
                msg: format!("{}: {e}", certificate.display()),
            })?;
            let cert: Certificate = serde_json::from_str(&text)
                .map_err(|e| Error::BadCertificate(e.to_string()))?;
            if decomp::verify_certificate(&c, &cert)? {
                println!("certificate verifies");
                Ok(EXIT_HOLDS)
            } else {
                println!("certificate does NOT verify");
                Ok(EXIT_FAILS)
            }
        }
    }
}

fn decision_word<W>(d: &Decision<W>) -> &'static str {
    match d {
        Decision::Yes(_) => "true",
        Decision::No => "false",
        Decision::Undecided => "undecided",
    }
}

fn analyze(file: &Path, deep: bool, flags: &CommonFlags) -> Result<u8, Error> {
    let c = load(file)?;
    let budget = default_budget(flags);
    let p = flags.characteristic;
    let mut fields: Vec<(String, serde_json::Value)> = Vec::new();
    let mut push = |k: &str, v: serde_json::Value| fields.push((k.into(), v));

    push("n", c.n().into());
    match c.dimension() {
        Some(d) => push("dimension", d.into()),
        None => push("dimension", serde_json::Value::Null),
    }
    let pure = c.is_pure_with(!flags.no_cover_check);
    push("pure", pure.into());
    if !c.is_void() {
        let codim = c.codimension()?;
        push("codimension", codim.into());
        push("facets", c.facet_count().into());
        if pure && c.is_pure() {
            push("antifacets", c.antifacet_count()?.into());
        }
        push("f_vector", serde_json::json!(c.f_vector()?.0));
        if let Ok(t) = bounds::vd_threshold(c.n(), codim) {
            push("vd_threshold", t.into());
            push("meets_vd_threshold", bounds::meets_main_theorem(&c).into());
        }
        if let Ok(t) = bounds::purity_threshold(c.n(), codim) {
            push("purity_threshold", t.into());
            push(
                "meets_purity_threshold",
                (c.facet_count() as i64 >= t).into(),
            );
        }
        if !pure {
            push("note", "complex is not pure; codimension uses c = n - dim - 1".into());
        }
    }

    if deep {
        let vd = decomp::is_vertex_decomposable(&c, budget);
        push("vertex_decomposable", decision_word(&vd).into());
        if let Decision::Yes(cert) = &vd {
            push("vd_certificate", serde_json::to_value(cert).unwrap());
        }
        if !c.is_void() {
            push("cohen_macaulay", homology::is_cohen_macaulay(&c, p)?.into());
            push("field", p.into());
        }
        match decomp::is_shellable(&c, budget) {
            Ok(d) => {
                push("shellable", decision_word(&d).into());
                if let Decision::Yes(w) = &d {
                    push("shelling", w.to_json());
                }
            }
            Err(Error::NotPure) => push("shellable", "not-pure".into()),
            Err(e) => return Err(e),
        }
        match classify::is_matroid(&c) {
            Ok(b) => push("matroid", b.into()),
            Err(_) => push("matroid", "not-pure".into()),
        }
        push("shifted", classify::is_shifted(&c)?.into());
        match classify::is_extremal(&c) {
            Ok(b) => push("extremal", b.into()),
            Err(_) => push("extremal", "not-pure".into()),
        }
    }

    if flags.json {
        let map: serde_json::Map<String, serde_json::Value> =
            fields.into_iter().collect();
        println!("{}", serde_json::to_string_pretty(&serde_json::Value::Object(map)).unwrap());
    } else {
        for (k, v) in fields {
            match v {
                serde_json::Value::String(s) => println!("{k}: {s}"),
                other => println!("{k}: {other}"),
            }
        }
    }
    Ok(EXIT_HOLDS)
}

fn check(
    property: &str,
    file: &Path,
    cert_out: Option<&Path>,
    flags: &CommonFlags,
) -> Result<u8, Error> {
    let c = load(file)?;
    let budget = default_budget(flags);
    let p = flags.characteristic;
    let (verdict, witness): (Decision<()>, Option<serde_json::Value>) = match property {
        "vd" => match decomp::is_vertex_decomposable(&c, budget) {
            Decision::Yes(cert) => {
                (Decision::Yes(()), Some(serde_json::to_value(&cert).unwrap()))
            }
            Decision::No => (Decision::No, None),
            Decision::Undecided => (Decision::Undecided, None),
        },
        "cm" => {
            if homology::is_cohen_macaulay(&c, p)? {
                (Decision::Yes(()), None)
            } else {
                (Decision::No, None)
            }
        }
        "shellable" | "completable" => {
            let r = if property == "shellable" {
                decomp::is_shellable(&c, budget)?
            } else {
                decomp::is_shelling_completable(&c, budget)?
            };
            match r {
                Decision::Yes(w) => (Decision::Yes(()), Some(w.to_json())),
                Decision::No => (Decision::No, None),
                Decision::Undecided => (Decision::Undecided, None),
            }
        }
        "matroid" => {
            if classify::is_matroid(&c)? {
                (Decision::Yes(()), None)
            } else {
                (Decision::No, None)
            }
        }
        "shifted" => {
            if classify::is_shifted(&c)? {
                (Decision::Yes(()), None)
            } else {
                (Decision::No, None)
            }
        }
        "extremal" => {
            if classify::is_extremal(&c)? {
                (Decision::Yes(()), None)
            } else {
                (Decision::No, None)
            }
        }
        "pure" => {
            if c.is_pure_with(!flags.no_cover_check) {
                (Decision::Yes(()), None)
            } else {
                (Decision::No, None)
            }
        }
        other => {
            eprintln!("error: unknown property {other:?}");
            return Ok(EXIT_USAGE);
        }
    };
    if let (Some(path), Some(w)) = (cert_out, &witness) {
        std::fs::write(path, serde_json::to_string_pretty(w).unwrap()).map_err(|e| {
            Error::Parse { line: 0, col: 0, msg: format!("{}: {e}", path.display()) }
        })?;
    }
    let word = decision_word(&verdict);
    if flags.json {
        println!(
            "{}",
            serde_json::json!({ "property": property, "verdict": word })
        );
    } else {
        println!("{property}: {word}");
    }
    Ok(match verdict {
        Decision::Yes(()) => EXIT_HOLDS,
        Decision::No => EXIT_FAILS,
        Decision::Undecided => EXIT_UNDECIDED,
    })
}

fn gen(kind: &str, params: &[u64], out: &Option<PathBuf>) -> Result<u8, Error> {
    let complex = match (kind, params) {
        ("tight", [n, c]) => bounds::generate_tight_example(*n as usize, *c as usize)?,
        ("skeleton", [n, d]) => Complex::simplex_skeleton(*n as usize, *d as i64)?,
        ("colex", [r, t, n]) => {
            let facets = classify::colex_initial_family(*r, *t, *n as usize)?;
            Complex::from_faces(*n as usize, facets)
        }
        _ => {
            eprintln!(
                "error: expected `gen tight <n> <c>`, `gen skeleton <n> <d>` or `gen colex <r> <t> <n>`"
            );
            return Ok(EXIT_USAGE);
        }
    };
    emit(out, &fio::write_text(&complex))?;
    Ok(EXIT_HOLDS)
}

fn parse_range(s: &str) -> Option<(usize, usize)> {
    if let Some((a, b)) = s.split_once("..") {
        let lo = a.parse().ok()?;
        let hi = b.strip_prefix('=').unwrap_or(b).parse().ok()?;
        Some((lo, hi))
    } else {
        let x = s.parse().ok()?;
        Some((x, x))
    }
}

/// Enumeration beyond this many vertices is out of the supported budget.
const VERIFY_MAX_N: usize = 8;

fn verify(
    theorem: &str,
    range: &str,
    jobs: usize,
    out: &Option<PathBuf>,
    flags: &CommonFlags,
) -> Result<u8, Error> {
    let Some(id) = TheoremId::parse(theorem) else {
        eprintln!("error: unknown theorem id {theorem:?}");
        return Ok(EXIT_USAGE);
    };
    let Some((lo, hi)) = parse_range(range) else {
        eprintln!("error: invalid range {range:?}, expected e.g. 4..6");
        return Ok(EXIT_USAGE);
    };
    if lo == 0 || lo > hi {
        eprintln!("error: invalid range {range:?}");
        return Ok(EXIT_USAGE);
    }
    if hi > VERIFY_MAX_N {
        eprintln!(
            "verification budget covers n <= {VERIFY_MAX_N}; n = {hi} requested — refusing"
        );
        return Ok(EXIT_UNDECIDED);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::BadParameters(e.to_string()))?;
    let budget = default_budget(flags);
    let mut reports: Vec<VerificationReport> = Vec::new();
    for n in lo..=hi {
        for c in 0..n {
            reports.push(pool.install(|| bounds::verify(n, c, id, budget))?);
        }
    }
    let all_pass = reports.iter().all(|r| r.failures == 0 && r.complete);
    let complete = reports.iter().all(|r| r.complete);
    // elapsed times vary run to run; zero them in the written report so
    // reruns with different --jobs are byte-identical
    let mut stable = reports.clone();
    for r in &mut stable {
        r.elapsed_ms = 0;
    }
    let json = serde_json::to_string_pretty(&stable).unwrap();
    if let Some(path) = out {
        std::fs::write(path, &json).map_err(|e| Error::Parse {
            line: 0,
            col: 0,
            msg: format!("{}: {e}", path.display()),
        })?;
    }
    if flags.json {
        println!("{json}");
    } else {
        for r in &reports {
            println!(
                "{} n={} c={}: enumerated={} passes={} failures={} complete={} ({} ms)",
                r.params.theorem,
                r.params.n,
                r.params.c,
                r.enumerated,
                r.passes,
                r.failures,
                r.complete,
                r.elapsed_ms
            );
        }
    }
    Ok(if !complete {
        EXIT_UNDECIDED
    } else if all_pass {
        EXIT_HOLDS
    } else {
        EXIT_FAILS
    })
}
