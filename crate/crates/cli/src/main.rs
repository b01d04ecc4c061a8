use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use salemforge::construct::{
    pisot_cc, pisot_cc_product, pisot_ss, salem_cc, salem_cc_product, salem_cs, salem_ss, ConstructionResult,
    LimitFunctionSpec, ProductVariant,
};
use salemforge::golden::run_golden_suite;
use salemforge::interlace::{classify_quotient, CircleRoot, InterlacingClassification, UPosition};
use salemforge::poly::{classify_poly, PolyKind};
use salemforge::rootloc::{isolate_real_roots, refine_root, IsolatingInterval, RootCensus};
use salemforge::sequences::{boyd_solve, pk_sequence, recover_pisot, salem_type, small_salem_check};
use salemforge::{Error, IntPolynomial};

#[derive(Parser)]
#[command(name = "salemforge", version, about = "Salem and Pisot numbers from interlacing quotients")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Decimal digits shown in root enclosures.
    #[arg(long, global = true, default_value_t = 12)]
    precision: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a polynomial as Salem, Pisot, cyclotomic or other.
    Classify {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Operations on quotients Q/P.
    #[command(subcommand)]
    Quotient(QuotientCmd),
    /// Salem constructions.
    #[command(subcommand)]
    Salem(SalemCmd),
    /// Pisot constructions.
    #[command(subcommand)]
    Pisot(PisotCmd),
    /// Polynomial sequences.
    #[command(subcommand)]
    Seq(SeqCmd),
    /// Recover a Pisot polynomial A from the quotient (z-1)P_k / P_{k+1}.
    Recover {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        k: usize,
    },
    /// Solve S R = z A + eps A* for Pisot A with bounded coefficients.
    Boyd {
        #[arg(allow_hyphen_values = true)]
        r: String,
        #[arg(long, allow_hyphen_values = true)]
        eps: i64,
        #[arg(long)]
        bound: u32,
    },
    /// Type I-IV of the Salem number of R with Boyd witness A.
    Type {
        #[arg(allow_hyphen_values = true)]
        r: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Check the real-root statement for a small Salem number.
    Smallsalem {
        #[arg(allow_hyphen_values = true)]
        r: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Angle/radius data for the circle roots of P and Q.
    Rootplot {
        #[arg(allow_hyphen_values = true)]
        q: String,
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    /// Run the reference cases and property suites.
    Golden,
}

#[derive(Subcommand)]
enum QuotientCmd {
    /// CC/CS/SS1/SS2/NONE classification of Q/P.
    Classify {
        #[arg(allow_hyphen_values = true)]
        q: String,
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
}

#[derive(Args)]
struct Pair {
    #[arg(allow_hyphen_values = true)]
    q: String,
    #[arg(allow_hyphen_values = true)]
    p: String,
}

#[derive(Args)]
struct TwoPairs {
    #[arg(allow_hyphen_values = true)]
    q1: String,
    #[arg(allow_hyphen_values = true)]
    p1: String,
    #[arg(allow_hyphen_values = true)]
    q2: String,
    #[arg(allow_hyphen_values = true)]
    p2: String,
    #[arg(long, value_parser = parse_variant)]
    variant: ProductVariant,
}

#[derive(Subcommand)]
enum SalemCmd {
    Cc(Pair),
    Cs(Pair),
    Ss(Pair),
    Product(TwoPairs),
}

#[derive(Subcommand)]
enum PisotCmd {
    Cc {
        #[command(flatten)]
        pair: Pair,
        /// Limit function as JSON, e.g. '{"Bi": [[1, 7]]}', or a path to one.
        #[arg(long)]
        spec: String,
    },
    Ss {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        spec: String,
    },
    Product {
        #[command(flatten)]
        pairs: TwoPairs,
        #[arg(long)]
        spec: String,
        /// Limit function of the second factor.
        #[arg(long)]
        spec2: Option<String>,
    },
}

#[derive(Subcommand)]
enum SeqCmd {
    /// P_k for k = 1..kmax and the classification of each quotient.
    Pk {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        kmax: usize,
    },
}

fn parse_variant(s: &str) -> Result<ProductVariant, String> {
    s.parse::<ProductVariant>().map_err(|e| e.to_string())
}

/// Failure of a command: typed library errors keep their class.
enum Failure {
    Input(String),
    Lib(Error),
    Suite(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<Report, Failure>;

/// The same content in both output formats.
struct Report {
    json: Value,
    text: String,
}

fn poly(arg: &str, what: &str) -> Result<IntPolynomial, Failure> {
    arg.parse::<IntPolynomial>().map_err(|e| match e {
        Error::Parse { line, column, message } => {
            Failure::Input(format!("{what}: parse error at line {line}, column {column}: {message}"))
        }
        other => Failure::Lib(other),
    })
}

fn spec(arg: &str) -> Result<LimitFunctionSpec, Failure> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| Failure::Input(format!("spec file {arg}: {e}")))?
    };
    text.parse::<LimitFunctionSpec>().map_err(|e| match e {
        Error::Parse { line, column, message } => {
            Failure::Input(format!("spec: parse error at line {line}, column {column}: {message}"))
        }
        other => Failure::Lib(other),
    })
}

fn big(c: &BigInt) -> Value {
    use num_traits::ToPrimitive;
    c.to_i64().map_or_else(|| Value::String(c.to_string()), Value::from)
}

fn coeffs(p: &IntPolynomial) -> Value {
    Value::Array(p.coeffs().iter().map(big).collect())
}

fn coeff_list(p: &IntPolynomial) -> String {
    let items: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    format!("[{}]", items.join(", "))
}

/// Refines `iv` until `precision` digits are meaningful.
fn enclose(f: &IntPolynomial, iv: &IsolatingInterval, precision: usize) -> Result<IsolatingInterval, Failure> {
    let width = BigRational::new(BigInt::from(1), BigInt::from(10).pow(precision as u32 + 1));
    if iv.multiplicity != 1 || iv.width() <= width {
        return Ok(iv.clone());
    }
    Ok(refine_root(f, iv, &width)?)
}

fn root_json(iv: &IsolatingInterval, precision: usize) -> Value {
    let (lo, hi) = iv.to_decimal(precision);
    json!({ "lo": lo, "hi": hi })
}

fn root_text(iv: &IsolatingInterval, precision: usize) -> String {
    let (lo, hi) = iv.to_decimal(precision);
    format!("[{lo}, {hi}]")
}

fn census_line(c: &RootCensus) -> String {
    format!("census: {} inside, {} on the circle, {} outside", c.inside, c.on_circle, c.outside)
}

fn construction(r: &ConstructionResult, precision: usize) -> Outcome {
    let root = enclose(&r.core, &r.root, precision)?;
    let mut diagnostics = vec![census_line(&r.census)];
    diagnostics.extend(r.notes.iter().cloned());
    let kind = serde_json::to_value(r.kind).expect("kind serializes");
    let json = json!({
        "kind": kind,
        "core": coeffs(&r.core),
        "cofactor": coeffs(&r.cofactor),
        "z_power": r.z_power,
        "root": root_json(&root, precision),
        "trace": big(&r.trace),
        "diagnostics": diagnostics,
    });
    let mut text = String::new();
    let _ = writeln!(text, "kind      {}", kind.as_str().unwrap_or_default());
    let _ = writeln!(text, "core      {}  {}", r.core, coeff_list(&r.core));
    let _ = writeln!(text, "cofactor  {}  {}", r.cofactor, coeff_list(&r.cofactor));
    let _ = writeln!(text, "z_power   {}", r.z_power);
    let _ = writeln!(text, "root      {}", root_text(&root, precision));
    let _ = writeln!(text, "trace     {}", r.trace);
    for d in &diagnostics {
        let _ = writeln!(text, "note      {d}");
    }
    Ok(Report { json, text })
}

fn classify(f: &IntPolynomial, precision: usize) -> Outcome {
    let c = classify_poly(f)?;
    let root = match c.kind {
        PolyKind::Salem | PolyKind::Pisot | PolyKind::RecipQuadPisot => {
            let top = isolate_real_roots(&c.core, &BigRational::from_integer(BigInt::from(1)))
                .pop()
                .expect("Salem and Pisot polynomials have a real root");
            Some(enclose(&c.core, &top, precision)?)
        }
        _ => None,
    };
    let diagnostics = vec![census_line(&c.census)];
    let json = json!({
        "kind": c.kind.tag(),
        "core": coeffs(&c.core),
        "cofactor": coeffs(&c.cofactor),
        "z_power": c.z_power,
        "root": root.as_ref().map(|iv| root_json(iv, precision)),
        "trace": big(&c.trace),
        "diagnostics": diagnostics,
    });
    let mut text = String::new();
    let _ = writeln!(text, "kind      {}", c.kind.tag());
    let _ = writeln!(text, "core      {}  {}", c.core, coeff_list(&c.core));
    let _ = writeln!(text, "cofactor  {}  {}", c.cofactor, coeff_list(&c.cofactor));
    let _ = writeln!(text, "z_power   {}", c.z_power);
    if let Some(iv) = &root {
        let _ = writeln!(text, "root      {}", root_text(iv, precision));
    }
    let _ = writeln!(text, "trace     {}", c.trace);
    let _ = writeln!(text, "note      {}", diagnostics[0]);
    Ok(Report { json, text })
}

fn u_text(u: &UPosition, precision: usize) -> String {
    match u {
        UPosition::Exact(v) => v.to_string(),
        UPosition::Interval(iv) => root_text(iv, precision),
    }
}

fn u_json(u: &UPosition, precision: usize) -> Value {
    match u {
        UPosition::Exact(v) => json!({ "lo": v.to_string(), "hi": v.to_string() }),
        UPosition::Interval(iv) => root_json(iv, precision),
    }
}

fn quotient(c: &InterlacingClassification, precision: usize) -> Report {
    let roots_json = |rs: &[CircleRoot]| -> Value {
        rs.iter()
            .map(|r| json!({ "u": u_json(&r.u, precision), "multiplicity": r.multiplicity }))
            .collect()
    };
    let census = |c: &Option<RootCensus>| c.as_ref().map(|c| json!({
        "inside": c.inside, "on_circle": c.on_circle, "outside": c.outside,
    }));
    let json = json!({
        "kind": c.kind.to_string(),
        "circle_roots_p": roots_json(&c.circle_roots_p),
        "circle_roots_q": roots_json(&c.circle_roots_q),
        "census_p": census(&c.census_p),
        "census_q": census(&c.census_q),
        "diagnostics": c.failure_reason.iter().collect::<Vec<_>>(),
    });
    let mut text = String::new();
    let _ = writeln!(text, "kind      {}", c.kind);
    for (name, census) in [("P", &c.census_p), ("Q", &c.census_q)] {
        if let Some(cc) = census {
            let _ = writeln!(text, "{name}         {}", census_line(cc));
        }
    }
    for (name, rs) in [("P", &c.circle_roots_p), ("Q", &c.circle_roots_q)] {
        for r in rs {
            let _ = writeln!(text, "{name} root    u = {}  multiplicity {}", u_text(&r.u, precision), r.multiplicity);
        }
    }
    if let Some(reason) = &c.failure_reason {
        let _ = writeln!(text, "note      {reason}");
    }
    Report { json, text }
}

fn rootplot(c: &InterlacingClassification) -> Report {
    let mut points = Vec::new();
    for (name, rs) in [("P", &c.circle_roots_p), ("Q", &c.circle_roots_q)] {
        for r in rs {
            let theta = r.angle();
            let angles = if matches!(r.u, UPosition::Exact(_)) { vec![theta] } else { vec![theta, -theta] };
            for a in angles {
                points.push((name, a, r.multiplicity));
            }
        }
    }
    points.sort_by(|x, y| x.1.total_cmp(&y.1));
    let json = json!({
        "kind": c.kind.to_string(),
        "points": points
            .iter()
            .map(|(n, a, m)| json!({ "poly": n, "angle": a, "radius": 1.0, "multiplicity": m }))
            .collect::<Vec<_>>(),
    });
    let mut text = format!("# kind {}\n# poly angle radius multiplicity\n", c.kind);
    for (n, a, m) in &points {
        let _ = writeln!(text, "{n} {a:.12} 1 {m}");
    }
    Report { json, text }
}

fn run(cli: &Cli) -> Outcome {
    let prec = cli.precision;
    match &cli.command {
        Command::Classify { poly: f } => classify(&poly(f, "polynomial")?, prec),
        Command::Quotient(QuotientCmd::Classify { q, p }) => {
            Ok(quotient(&classify_quotient(&poly(q, "Q")?, &poly(p, "P")?), prec))
        }
        Command::Salem(cmd) => {
            let r = match cmd {
                SalemCmd::Cc(x) => salem_cc(&poly(&x.q, "Q")?, &poly(&x.p, "P")?)?,
                SalemCmd::Cs(x) => salem_cs(&poly(&x.q, "Q")?, &poly(&x.p, "P")?)?,
                SalemCmd::Ss(x) => salem_ss(&poly(&x.q, "Q")?, &poly(&x.p, "P")?)?,
                SalemCmd::Product(x) => salem_cc_product(
                    &poly(&x.q1, "Q1")?,
                    &poly(&x.p1, "P1")?,
                    &poly(&x.q2, "Q2")?,
                    &poly(&x.p2, "P2")?,
                    x.variant,
                )?,
            };
            construction(&r, prec)
        }
        Command::Pisot(cmd) => {
            let r = match cmd {
                PisotCmd::Cc { pair, spec: s } => pisot_cc(&poly(&pair.q, "Q")?, &poly(&pair.p, "P")?, &spec(s)?)?,
                PisotCmd::Ss { pair, spec: s } => pisot_ss(&poly(&pair.q, "Q")?, &poly(&pair.p, "P")?, &spec(s)?)?,
                PisotCmd::Product { pairs, spec: s, spec2 } => {
                    let s2 = spec2.as_deref().map(spec).transpose()?;
                    pisot_cc_product(
                        &poly(&pairs.q1, "Q1")?,
                        &poly(&pairs.p1, "P1")?,
                        &spec(s)?,
                        &poly(&pairs.q2, "Q2")?,
                        &poly(&pairs.p2, "P2")?,
                        s2.as_ref(),
                        pairs.variant,
                    )?
                }
            };
            construction(&r, prec)
        }
        Command::Seq(SeqCmd::Pk { a, kmax }) => {
            let seq = pk_sequence(&poly(a, "A")?, *kmax)?;
            let json = json!({
                "a": coeffs(&seq.a),
                "onset_k0": seq.onset_k0,
                "reciprocal_quadratic": seq.reciprocal_quadratic,
                "entries": seq.entries.iter().map(|e| json!({
                    "k": e.k,
                    "pk": coeffs(&e.pk),
                    "value_at_one": big(&e.value_at_one),
                    "kind": e.kind().to_string(),
                })).collect::<Vec<_>>(),
            });
            let mut text = format!("A         {}\nonset_k0  {}\n", seq.a, seq.onset_k0);
            if seq.reciprocal_quadratic {
                text.push_str("note      reciprocal quadratic source\n");
            }
            text.push_str("k   P_k(1)  kind  P_k\n");
            for e in &seq.entries {
                let _ = writeln!(text, "{:<3} {:<7} {:<5} {}", e.k, e.value_at_one, e.kind(), coeff_list(&e.pk));
            }
            Ok(Report { json, text })
        }
        Command::Recover { a, k } => construction(&recover_pisot(&poly(a, "A")?, *k)?, prec),
        Command::Boyd { r, eps, bound } => {
            let rp = poly(r, "R")?;
            let sols = boyd_solve(&rp, *eps, *bound)?;
            let json = json!({
                "r": coeffs(&rp),
                "epsilon": eps,
                "bound": bound,
                "solutions": sols.iter().map(|s| json!({
                    "a": coeffs(&s.a),
                    "s": coeffs(&s.s),
                    "free_params": s.free_params,
                })).collect::<Vec<_>>(),
            });
            let mut text = format!("{} solutions for R = {}, eps = {eps}, bound {bound}\n", sols.len(), rp);
            for s in &sols {
                let _ = writeln!(text, "A = {}  {}  free {:?}", s.a, coeff_list(&s.a), s.free_params);
            }
            Ok(Report { json, text })
        }
        Command::Type { r, a } => {
            let t = salem_type(&poly(r, "R")?, &poly(a, "A")?)?;
            let name = format!("{t:?}");
            Ok(Report {
                json: json!({ "type": name }),
                text: format!("type      {name}\n"),
            })
        }
        Command::Smallsalem { r, a } => {
            let (rp, ap) = (poly(r, "R")?, poly(a, "A")?);
            let rep = small_salem_check(&rp, &ap)?;
            let tau_poly = classify_poly(&rp)?.core;
            let tau = enclose(&tau_poly, &rep.tau, prec)?;
            let roots = rep
                .real_roots
                .iter()
                .map(|iv| enclose(&ap, iv, prec))
                .collect::<Result<Vec<_>, _>>()?;
            let json = json!({
                "tau": root_json(&tau, prec),
                "plastic": root_json(&rep.plastic, prec),
                "real_roots": roots.iter().map(|iv| root_json(iv, prec)).collect::<Vec<_>>(),
                "witness": rep.witness,
            });
            let mut text = format!("tau       {}\nplastic   {}\n", root_text(&tau, prec), root_text(&rep.plastic, prec));
            for (i, iv) in roots.iter().enumerate() {
                let mark = if i == rep.witness { "  in (1/tau, 1)" } else { "" };
                let _ = writeln!(text, "real root {}{mark}", root_text(iv, prec));
            }
            Ok(Report { json, text })
        }
        Command::Rootplot { q, p } => Ok(rootplot(&classify_quotient(&poly(q, "Q")?, &poly(p, "P")?))),
        Command::Golden => {
            let rep = run_golden_suite();
            let mut text = String::new();
            for c in &rep.cases {
                let status = if c.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(text, "{status} {:<4} {:<24} {:>9.1} ms  {}", c.id, c.name, c.elapsed_ms, c.detail);
            }
            let json = serde_json::to_value(&rep).expect("report serializes");
            if rep.passed {
                Ok(Report { json, text })
            } else {
                let names: Vec<&str> = rep.failures().map(|c| c.name).collect();
                print_report(cli.format, &Report { json, text });
                Err(Failure::Suite(format!("failing cases: {}", names.join(", "))))
            }
        }
    }
}

fn print_report(format: Format, r: &Report) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&r.json).expect("json")),
        Format::Text => print!("{}", r.text),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(r) => {
            print_report(cli.format, &r);
            ExitCode::SUCCESS
        }
        Err(f) => {
            let (code, tag, msg) = match f {
                Failure::Input(m) => (2, "PARSE_ERROR", m),
                Failure::Lib(e) => (if e.is_internal() { 1 } else { 2 }, e.code(), e.to_string()),
                Failure::Suite(m) => (1, "GOLDEN_FAILURE", m),
            };
            match cli.format {
                Format::Json => println!("{}", json!({ "error": tag, "message": msg })),
                Format::Text => eprintln!("error [{tag}]: {msg}"),
            }
            ExitCode::from(code)
        }
    }
}
