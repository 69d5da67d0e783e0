//! Command-line front end: single computations, theorem sweeps, equivalence
//! audits, and machine-readable reports.
//!
//! Exit status: 0 on success or PASS, 1 when an asserted sweep finds a
//! failure, 2 on usage errors or violated computational preconditions.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Write;

use crate::arith::{legendre, OddPrime};
use crate::charsums::{char_sum, interval_sum, legendre_product_interval, Fraction, ProperInterval, ShiftList};
use crate::classnum::{class_number, h_neg_4p, h_neg_p, mordell_parity, Discriminant};
use crate::error::Error;
use crate::regions::{
    product_linear_square, product_linear_square_fast, product_square, product_square_grouped,
    product_triangle, product_triangle_grouped, LinearForm, QuadraticForm, Region,
    RegionProductResult,
};
use crate::registry::{self, VerificationReport, VerifyOptions};

/// Environment variable overriding the default worker count.
pub const JOBS_ENV: &str = "LEGPROD_JOBS";

#[derive(Parser, Debug)]
#[command(
    name = "legprod",
    about = "Legendre-symbol products over lattice regions, character sums, class numbers, and identity sweeps",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RegionArg {
    Triangle,
    Square,
}

impl From<RegionArg> for Region {
    fn from(r: RegionArg) -> Region {
        match r {
            RegionArg::Triangle => Region::Triangle,
            RegionArg::Square => Region::Square,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Naive,
    Grouped,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write output to a file instead of standard output
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Legendre symbol (a/p)
    Legendre {
        /// Integer a (any sign)
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long)]
        prime: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Product of Legendre symbols of a form over a lattice region
    Product {
        /// Quadratic form coefficients a,b,c of a*i^2 + b*ij + c*j^2
        #[arg(long, allow_hyphen_values = true, conflicts_with = "linear")]
        form: Option<String>,
        /// Linear form s,eps for s*i + eps*j over the square (eps = 1 or -1)
        #[arg(long, allow_hyphen_values = true)]
        linear: Option<String>,
        /// Region (default: triangle for quadratic forms; linear forms are
        /// always over the square)
        #[arg(long, value_enum)]
        region: Option<RegionArg>,
        /// Multiply the form values instead of their Legendre symbols
        #[arg(long)]
        values: bool,
        /// Evaluation path (both must agree; grouped is the sweep fast path)
        #[arg(long, value_enum, default_value = "naive")]
        method: Method,
        #[arg(long)]
        prime: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Complete character sum F_p(a_1,...,a_r)
    Charsum {
        /// Comma-separated shifts, e.g. 0,1,2
        #[arg(long, allow_hyphen_values = true)]
        shifts: String,
        #[arg(long)]
        prime: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Interval sums S_r^n and interval products of Legendre symbols
    Intervals {
        /// Subdivision count n (prints S_r^n for the chosen r, or all r)
        #[arg(long)]
        n: Option<u64>,
        /// Interval index r in [1, n]
        #[arg(long)]
        r: Option<u64>,
        /// Lower endpoint of a product interval, as a fraction of p (e.g. 1/4)
        #[arg(long)]
        lo: Option<String>,
        /// Upper endpoint of a product interval, as a fraction of p (e.g. 1/2)
        #[arg(long)]
        hi: Option<String>,
        #[arg(long)]
        prime: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Class numbers h(D) of imaginary quadratic orders
    Classnum {
        /// Discriminant D < 0 with D = 0 or 1 (mod 4)
        #[arg(long, allow_hyphen_values = true, conflicts_with = "prime")]
        d: Option<i64>,
        /// Prime p: prints h(-p) or h(-4p) by the class of p mod 4
        #[arg(long)]
        prime: Option<u64>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Sweep one cataloged identity over a prime range
    Verify {
        /// Catalog id, e.g. T4.3 (see `list`)
        #[arg(long)]
        theorem: String,
        /// Inclusive prime range lo..hi
        #[arg(long)]
        primes: String,
        /// Override the s parameter range, e.g. 2..10
        #[arg(long)]
        s_range: Option<String>,
        /// Override the t numerator/denominator bound
        #[arg(long)]
        t_bound: Option<i64>,
        /// Worker threads (default: available parallelism, or $LEGPROD_JOBS)
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Partition primes by (p mod M, F_p(0,1,k) mod 16) and report classes
    /// with mixed region products
    Audit {
        /// Quadratic form coefficients a,b,c
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        #[arg(long, value_enum, default_value = "triangle")]
        region: RegionArg,
        /// Class modulus M (default: 8|disc*4c*sigma| or 8|disc*4ac|)
        #[arg(long)]
        modulus: Option<u64>,
        /// Sweep primes in (3, hi]
        #[arg(long)]
        prime_hi: u64,
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// List the identity catalog
    List {
        #[command(flatten)]
        out: OutputArgs,
    },
}

/// Run the CLI on the given arguments (excluding the program name), writing
/// to the given sink. Returns the process exit status.
pub fn run<W: Write>(args: &[String], out: &mut W) -> i32 {
    let mut argv = vec!["legprod".to_string()];
    argv.extend_from_slice(args);
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            // clap renders its own message; --help/--version exit cleanly
            let rendered = e.render().to_string();
            let _ = write!(out, "{rendered}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            2
        }
    }
}

fn parse_prime(p: u64) -> Result<OddPrime, Error> {
    OddPrime::new(p)
}

fn parse_form(s: &str) -> Result<QuadraticForm, Error> {
    let parts: Vec<&str> = s.split(',').collect();
    let bad = || Error::Usage(format!("malformed form '{s}' (expected a,b,c)"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let nums: Vec<i64> = parts
        .iter()
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    QuadraticForm::new(nums[0], nums[1], nums[2])
}

fn parse_linear(s: &str) -> Result<LinearForm, Error> {
    let bad = || Error::Usage(format!("malformed linear form '{s}' (expected s,eps)"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    let s_coef: i64 = a.trim().parse().map_err(|_| bad())?;
    let eps: i64 = b.trim().parse().map_err(|_| bad())?;
    LinearForm::new(s_coef, eps)
}

fn parse_range(s: &str) -> Result<(u64, u64), Error> {
    let bad = || Error::Usage(format!("malformed range '{s}' (expected lo..hi)"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
    Ok((lo, hi))
}

fn parse_srange(s: &str) -> Result<(i64, i64), Error> {
    let bad = || Error::Usage(format!("malformed range '{s}' (expected lo..hi)"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    Ok((
        lo.trim().parse().map_err(|_| bad())?,
        hi.trim().parse().map_err(|_| bad())?,
    ))
}

fn default_jobs() -> usize {
    std::env::var(JOBS_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&n| n >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
        })
}

fn in_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Error> {
    let n = jobs.unwrap_or_else(default_jobs).max(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build()
        .map_err(|e| Error::Usage(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

/// A single scalar result, rendered per the requested format.
fn emit_scalar<W: Write>(
    out: &mut OutputSink<W>,
    format: Format,
    command: &str,
    fields: &[(&str, String)],
) -> std::io::Result<()> {
    match format {
        Format::Text => {
            let body: Vec<String> = fields.iter().map(|(k, v)| format!("{k} = {v}")).collect();
            writeln!(out, "{}", body.join(", "))
        }
        Format::Json => {
            let mut map = serde_json::Map::new();
            map.insert("command".into(), serde_json::Value::String(command.into()));
            for (k, v) in fields {
                map.insert((*k).into(), serde_json::Value::String(v.clone()));
            }
            writeln!(out, "{}", serde_json::Value::Object(map))
        }
        Format::Csv => {
            let header: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
            let row: Vec<String> = fields.iter().map(|(_, v)| v.clone()).collect();
            writeln!(out, "{}\n{}", header.join(","), row.join(","))
        }
    }
}

enum OutputSink<'a, W: Write> {
    Stdout(&'a mut W),
    File(std::fs::File),
}

impl<W: Write> Write for OutputSink<'_, W> {
    fn write(&mut self, buf: &[u8]) -> std::io::Result<usize> {
        match self {
            OutputSink::Stdout(w) => w.write(buf),
            OutputSink::File(f) => f.write(buf),
        }
    }
    fn flush(&mut self) -> std::io::Result<()> {
        match self {
            OutputSink::Stdout(w) => w.flush(),
            OutputSink::File(f) => f.flush(),
        }
    }
}

fn sink<'a, W: Write>(out: &'a mut W, path: &Option<std::path::PathBuf>) -> Result<OutputSink<'a, W>, Error> {
    match path {
        None => Ok(OutputSink::Stdout(out)),
        Some(p) => std::fs::File::create(p)
            .map(OutputSink::File)
            .map_err(|e| Error::Usage(format!("cannot open {}: {e}", p.display()))),
    }
}

fn emit_report<W: Write>(
    report: &VerificationReport,
    out: &mut OutputSink<W>,
    format: Format,
) -> std::io::Result<()> {
    match format {
        Format::Text => write!(out, "{}", report.render_text()),
        Format::Json => writeln!(out, "{}", report.to_json()),
        Format::Csv => write!(out, "{}", report.to_csv()),
    }
}

fn region_product_fields(r: &RegionProductResult) -> Vec<(&'static str, String)> {
    vec![
        ("value", r.value.to_string()),
        ("skipped", r.terms_skipped.to_string()),
    ]
}

fn dispatch<W: Write>(cli: Cli, out: &mut W) -> Result<i32, Error> {
    let io_err = |e: std::io::Error| Error::Usage(format!("write failed: {e}"));
    match cli.command {
        Command::Legendre { a, prime, out: o } => {
            let p = parse_prime(prime)?;
            let v = legendre(a, p);
            let mut w = sink(out, &o.output)?;
            emit_scalar(&mut w, o.format, "legendre", &[
                ("a", a.to_string()),
                ("p", prime.to_string()),
                ("symbol", v.to_string()),
            ])
            .map_err(io_err)?;
            Ok(0)
        }
        Command::Product { form, linear, region, values, method, prime, out: o } => {
            let p = parse_prime(prime)?;
            let mut w = sink(out, &o.output)?;
            if let Some(lin) = linear {
                let l = parse_linear(&lin)?;
                if matches!(region, Some(RegionArg::Triangle)) {
                    return Err(Error::Usage(
                        "linear products are defined over the square region".into(),
                    ));
                }
                if values {
                    return Err(Error::Usage(
                        "--values applies to quadratic forms".into(),
                    ));
                }
                let r = match method {
                    Method::Naive => product_linear_square(&l, p),
                    Method::Grouped => product_linear_square_fast(&l, p),
                };
                emit_scalar(&mut w, o.format, "product", &region_product_fields(&r)).map_err(io_err)?;
                return Ok(0);
            }
            let f = parse_form(&form.ok_or_else(|| Error::Usage("provide --form a,b,c or --linear s,eps".into()))?)?;
            let region = Region::from(region.unwrap_or(RegionArg::Triangle));
            if values {
                let v = match region {
                    Region::Triangle => crate::regions::value_product_triangle(&f, p),
                    Region::Square => crate::regions::value_product_square(&f, p),
                };
                emit_scalar(&mut w, o.format, "product", &[("value", v.to_string())]).map_err(io_err)?;
                return Ok(0);
            }
            let r = match (region, method) {
                (Region::Triangle, Method::Naive) => product_triangle(&f, p),
                (Region::Triangle, Method::Grouped) => product_triangle_grouped(&f, p)?,
                (Region::Square, Method::Naive) => product_square(&f, p),
                (Region::Square, Method::Grouped) => product_square_grouped(&f, p)?,
            };
            emit_scalar(&mut w, o.format, "product", &region_product_fields(&r)).map_err(io_err)?;
            Ok(0)
        }
        Command::Charsum { shifts, prime, out: o } => {
            let p = parse_prime(prime)?;
            let list: Vec<i64> = shifts
                .split(',')
                .map(|t| t.trim().parse::<i64>())
                .collect::<Result<_, _>>()
                .map_err(|_| Error::Usage(format!("malformed shifts '{shifts}'")))?;
            let sl = ShiftList::new(list)?;
            let v = char_sum(&sl, p)?;
            let mut w = sink(out, &o.output)?;
            emit_scalar(&mut w, o.format, "charsum", &[
                ("shifts", sl.to_string()),
                ("p", prime.to_string()),
                ("sum", v.to_string()),
            ])
            .map_err(io_err)?;
            Ok(0)
        }
        Command::Intervals { n, r, lo, hi, prime, out: o } => {
            let p = parse_prime(prime)?;
            let mut w = sink(out, &o.output)?;
            match (n, lo, hi) {
                (Some(n), None, None) => {
                    let rs: Vec<u64> = match r {
                        Some(r) => vec![r],
                        None => (1..=n).collect(),
                    };
                    let mut fields = Vec::new();
                    for r in rs {
                        let s = interval_sum(ProperInterval::new(r, n)?, p)?;
                        fields.push((format!("S_{r}^{n}"), s.to_string()));
                    }
                    let borrowed: Vec<(&str, String)> =
                        fields.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();
                    emit_scalar(&mut w, o.format, "intervals", &borrowed).map_err(io_err)?;
                    Ok(0)
                }
                (None, Some(lo), Some(hi)) => {
                    let lo: Fraction = lo.parse()?;
                    let hi: Fraction = hi.parse()?;
                    let v = legendre_product_interval(lo, hi, p)?;
                    emit_scalar(&mut w, o.format, "intervals", &[
                        ("interval", format!("({lo},{hi}) of p")),
                        ("product", v.to_string()),
                    ])
                    .map_err(io_err)?;
                    Ok(0)
                }
                _ => Err(Error::Usage(
                    "use --n [--r] for sums, or --lo and --hi for products".into(),
                )),
            }
        }
        Command::Classnum { d, prime, out: o } => {
            let mut w = sink(out, &o.output)?;
            if let Some(d) = d {
                let disc = Discriminant::new(d)?;
                let h = class_number(disc);
                emit_scalar(&mut w, o.format, "classnum", &[
                    ("D", d.to_string()),
                    ("h", h.to_string()),
                ])
                .map_err(io_err)?;
                return Ok(0);
            }
            let p = parse_prime(prime.ok_or_else(|| Error::Usage("provide --d or --prime".into()))?)?;
            let mut fields = vec![("p", p.to_string())];
            if p.value() % 4 == 3 {
                fields.push(("h(-p)", h_neg_p(p)?.to_string()));
                fields.push(("mordell_parity", mordell_parity(p)?.to_string()));
            } else {
                fields.push(("h(-4p)", h_neg_4p(p)?.to_string()));
            }
            let borrowed: Vec<(&str, String)> =
                fields.iter().map(|(k, v)| (*k, v.clone())).collect();
            emit_scalar(&mut w, o.format, "classnum", &borrowed).map_err(io_err)?;
            Ok(0)
        }
        Command::Verify { theorem, primes, s_range, t_bound, jobs, out: o } => {
            let (lo, hi) = parse_range(&primes)?;
            let mut opts = VerifyOptions::default();
            if let Some(s) = s_range {
                opts.s_range = Some(parse_srange(&s)?);
            }
            opts.t_bound = t_bound;
            let report = in_pool(jobs, || registry::verify(&theorem, lo, hi, &opts))??;
            let mut w = sink(out, &o.output)?;
            emit_report(&report, &mut w, o.format).map_err(io_err)?;
            Ok(if report.fatal() { 1 } else { 0 })
        }
        Command::Audit { form, region, modulus, prime_hi, jobs, out: o } => {
            let f = parse_form(&form)?;
            let report = in_pool(jobs, || {
                registry::equivalence_audit(&f, region.into(), modulus, prime_hi)
            })??;
            let mut w = sink(out, &o.output)?;
            emit_report(&report, &mut w, o.format).map_err(io_err)?;
            Ok(if report.fatal() { 1 } else { 0 })
        }
        Command::List { out: o } => {
            let mut w = sink(out, &o.output)?;
            match o.format {
                Format::Json => {
                    let rows: Vec<serde_json::Value> = registry::catalog()
                        .iter()
                        .map(|e| {
                            serde_json::json!({
                                "id": e.id,
                                "description": e.description,
                                "location": e.location,
                                "class": match e.class {
                                    registry::EntryClass::Asserted => "asserted",
                                    registry::EntryClass::Audit => "audit",
                                },
                            })
                        })
                        .collect();
                    writeln!(w, "{}", serde_json::Value::Array(rows)).map_err(io_err)?;
                }
                Format::Csv => {
                    writeln!(w, "id,class,location,description").map_err(io_err)?;
                    for e in registry::catalog() {
                        let class = match e.class {
                            registry::EntryClass::Asserted => "asserted",
                            registry::EntryClass::Audit => "audit",
                        };
                        writeln!(w, "{},{},{},\"{}\"", e.id, class, e.location, e.description)
                            .map_err(io_err)?;
                    }
                }
                Format::Text => {
                    for e in registry::catalog() {
                        let class = match e.class {
                            registry::EntryClass::Asserted => "asserted",
                            registry::EntryClass::Audit => "audit  ",
                        };
                        writeln!(w, "{:14} [{class}] {:16} {}", e.id, e.location, e.description)
                            .map_err(io_err)?;
                    }
                }
            }
            Ok(0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String) {
        let argv: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        let mut buf = Vec::new();
        let code = run(&argv, &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn product_example() {
        let (code, out) = run_str(&["product", "--form", "1,0,1", "--region", "triangle", "--prime", "7"]);
        assert_eq!(code, 0);
        assert!(out.contains("value = -1"), "{out}");
        assert!(out.contains("skipped = 0"), "{out}");
    }

    #[test]
    fn charsum_example() {
        let (code, out) = run_str(&["charsum", "--shifts", "0,1,2", "--prime", "5"]);
        assert_eq!(code, 0);
        assert!(out.contains("sum = 2"), "{out}");
    }

    #[test]
    fn verify_json_example() {
        let (code, out) = run_str(&[
            "verify", "--theorem", "T4.3", "--primes", "5..200", "--format", "json", "--jobs", "2",
        ]);
        assert_eq!(code, 0, "{out}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["status"], "PASS");
        assert_eq!(v["theorem"], "T4.3");
    }

    #[test]
    fn usage_errors_exit_2() {
        let (code, _) = run_str(&["product", "--prime", "7"]);
        assert_eq!(code, 2);
        let (code, out) = run_str(&["verify", "--theorem", "nope", "--primes", "5..10"]);
        assert_eq!(code, 2);
        assert!(out.contains("unknown theorem"), "{out}");
        let (code, out) = run_str(&["legendre", "--a", "2", "--prime", "9"]);
        assert_eq!(code, 2);
        assert!(out.contains("not prime"), "{out}");
        // violated computational precondition surfaces as a structured message
        let (code, out) = run_str(&["charsum", "--shifts", "0,5", "--prime", "5"]);
        assert_eq!(code, 2);
        assert!(out.contains("congruent"), "{out}");
    }

    #[test]
    fn audit_failures_do_not_fail_exit() {
        let (code, out) = run_str(&[
            "verify", "--theorem", "R2.4-conj71", "--primes", "5..60", "--format", "json",
        ]);
        assert_eq!(code, 0, "{out}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["status"], "FAIL");
        assert!(!v["failures"].as_array().unwrap().is_empty());
    }

    #[test]
    fn list_contains_all_ids() {
        let (code, out) = run_str(&["list"]);
        assert_eq!(code, 0);
        for e in registry::catalog() {
            assert!(out.contains(e.id), "missing {}", e.id);
        }
    }

    #[test]
    fn jobs_determinism_small() {
        let (c1, out1) = run_str(&[
            "verify", "--theorem", "T4.2-plus", "--primes", "5..300", "--format", "json", "--jobs", "1",
        ]);
        let (c8, out8) = run_str(&[
            "verify", "--theorem", "T4.2-plus", "--primes", "5..300", "--format", "json", "--jobs", "8",
        ]);
        assert_eq!(c1, 0);
        assert_eq!(c8, 0);
        assert_eq!(out1, out8);
    }
}
