mod config;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use etaineq::etapoly::{eval_sequence, gen_table};
use etaineq::inequality::{
    assumption1_certificate, assumption2_certificate, delta, main_term, scan_cft, scan_delta_sign,
    smallest_x0,
};
use etaineq::rational::Rational;
use etaineq::report::ScanReport;
use etaineq::roots::{complex_roots_named, isolate_real_roots, largest_real_root, refine, ROOT_CSV_HEADER};
use etaineq::verify::{figure_dataset_with, reproduce, TableId};

use config::{Config, Format, Overrides, OUTPUT_DIR_ENV};

#[derive(Parser, Debug)]
#[command(name = "etaineq", version, about = "Exact checks of inequalities for the polynomials P_n(x)")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// key = value settings file, overridden by flags
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// directory for output files (default from $ETAINEQ_OUTPUT_DIR)
    #[arg(long, global = true)]
    output_dir: Option<PathBuf>,
    /// worker threads for grid scans (0 = one per core)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true)]
    precision_bits: Option<u32>,
    #[arg(long, global = true)]
    float_bits: Option<u32>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit P_0 .. P_N as JSON
    Gen {
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// P_0(x) .. P_N(x) at one rational point
    Eval {
        #[arg(long, value_parser = parse_rational)]
        x: Rational,
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// Delta_{a,b}, optionally evaluated at a point
    Delta {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, value_parser = parse_rational)]
        at: Option<Rational>,
    },
    /// p_{-k}(n-1) p_{-k}(m+1) >= p_{-k}(n) p_{-k}(m) over a grid
    ScanCft {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        k_max: usize,
    },
    /// Sign of Delta_{a,b} on a grid of points
    ScanDelta {
        #[arg(long)]
        b: usize,
        #[arg(long)]
        a_max: usize,
        #[arg(long)]
        a_min: Option<usize>,
        #[arg(long, value_delimiter = ',', value_parser = parse_rational, required = true)]
        x: Vec<Rational>,
    },
    /// Monotonicity certificates for P_{b+1}/P_b - x/(b+1)
    Assumptions {
        #[arg(long)]
        b: usize,
        #[arg(long, value_parser = parse_rational)]
        x0: Rational,
    },
    /// Smallest start point for the quotient comparison
    SmallestX0 {
        #[arg(long)]
        b: usize,
        #[arg(long)]
        bits: Option<u32>,
    },
    /// Real (and optionally complex) roots of Delta_{a,b}
    Roots {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        complex: bool,
    },
    /// Reproduce the reference tables
    Tables {
        #[arg(long)]
        only: Option<String>,
    },
    /// Root datasets for the figure families
    Figures {
        #[arg(long, value_parser = ["fig1", "fig2"])]
        which: String,
        #[arg(long)]
        a_max: usize,
    },
    /// Asymptotic main term against the exact Delta_{a,b}(x)
    MainTerm {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, value_parser = parse_rational)]
        x: Rational,
    },
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| format!("not a rational number: {e}"))
}

/// What a subcommand produced: text for stdout, an optional file, and
/// whether its check passed.
struct Outcome {
    stdout: String,
    file: Option<(String, String)>,
    passed: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, file: None, passed: true }
    }

    fn report(name: &str, report: &ScanReport) -> Self {
        let json = report.to_json();
        Outcome {
            stdout: json.clone() + "\n",
            file: Some((format!("{name}.json"), json + "\n")),
            passed: report.passed(),
        }
    }

    fn with_file(mut self, name: String, body: String) -> Self {
        self.file = Some((name, body));
        self
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let flags = Overrides {
        n_max: None,
        precision_bits: cli.global.precision_bits,
        float_bits: cli.global.float_bits,
        threads: cli.global.threads,
        output_dir: cli.global.output_dir.clone(),
        format: cli.global.format,
    };
    let env_dir = std::env::var_os(OUTPUT_DIR_ENV).map(PathBuf::from);
    let cfg = match Config::resolve(env_dir, cli.global.config.as_deref(), &flags) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cfg.threads).build_global() {
        eprintln!("warning: thread pool already set up: {e}");
    }
    match run(&cli.command, &cfg) {
        Ok(out) => {
            print!("{}", out.stdout);
            if let (Some(dir), Some((name, body))) = (&cfg.output_dir, &out.file) {
                if let Err(e) = write_file(dir, name, body) {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn write_file(dir: &Path, name: &str, body: &str) -> Result<(), String> {
    fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    let path = dir.join(name);
    fs::write(&path, body).map_err(|e| format!("{}: {e}", path.display()))
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn run(cmd: &Command, cfg: &Config) -> Result<Outcome, String> {
    let err = |e: etaineq::Error| e.to_string();
    match cmd {
        Command::Gen { n_max } => {
            let n = n_max.unwrap_or(cfg.n_max);
            let json = gen_table(n).to_json() + "\n";
            Ok(Outcome::ok(json.clone()).with_file(format!("eta_table_{n}.json"), json))
        }
        Command::Eval { x, n_max } => {
            let n = n_max.unwrap_or(cfg.n_max);
            let seq = eval_sequence(x, n);
            let body = match cfg.format {
                Format::Csv => seq.to_csv(),
                Format::Json => to_json(&seq),
            };
            let ext = if cfg.format == Format::Csv { "csv" } else { "json" };
            Ok(Outcome::ok(body.clone()).with_file(format!("eval_n{n}.{ext}"), body))
        }
        Command::Delta { a, b, at } => {
            let table = gen_table(*a.max(&(b + 1)));
            let d = delta(*a, *b, &table).map_err(err)?;
            let value = at.as_ref().map(|x| d.eval(x));
            let body = match (cfg.format, &value) {
                (Format::Json, _) => to_json(&serde_json::json!({
                    "a": a,
                    "b": b,
                    "poly": d.poly.to_string(),
                    "at": at.as_ref().map(|x| x.to_string()),
                    "value": value.as_ref().map(|v| v.to_string()),
                })),
                (Format::Csv, Some(v)) => format!("{v}\n"),
                (Format::Csv, None) => format!("{}\n", d.poly),
            };
            Ok(Outcome::ok(body.clone()).with_file(format!("delta_{a}_{b}.{}", ext(cfg)), body))
        }
        Command::ScanCft { n_max, k_max } => {
            if *n_max < 2 || *k_max < 2 {
                return Err("scan-cft needs --n-max >= 2 and --k-max >= 2".into());
            }
            Ok(Outcome::report("scan_cft", &scan_cft(*n_max, *k_max)))
        }
        Command::ScanDelta { b, a_max, a_min, x } => {
            let table = gen_table(*a_max.max(&(b + 1)));
            let lo = a_min.unwrap_or(b + 1);
            let r = scan_delta_sign(*b, lo..=*a_max, x, &table).map_err(err)?;
            Ok(Outcome::report("scan_delta", &r))
        }
        Command::Assumptions { b, x0 } => {
            let table = gen_table(b + 1);
            let mut r = assumption1_certificate(*b, x0, &table).map_err(err)?;
            if *b >= 1 {
                r.absorb(assumption2_certificate(*b, x0, &table).map_err(err)?);
            }
            r.check = "assumptions".into();
            Ok(Outcome::report(&format!("assumptions_b{b}"), &r))
        }
        Command::SmallestX0 { b, bits } => {
            let bits = bits.unwrap_or(cfg.precision_bits);
            let table = gen_table(b + 1);
            let iv = smallest_x0(*b, bits, &table).map_err(err)?;
            let digits = (bits as f64 * std::f64::consts::LOG10_2).floor() as usize;
            let body = to_json(&serde_json::json!({
                "b": b,
                "bits": bits,
                "lo": iv.lo.to_string(),
                "hi": iv.hi.to_string(),
                "decimal": iv.lo.to_decimal(digits),
            }));
            Ok(Outcome::ok(body.clone()).with_file(format!("smallest_x0_b{b}.json"), body))
        }
        Command::Roots { a, b, complex } => {
            let table = gen_table(*a.max(&(b + 1)));
            let d = delta(*a, *b, &table).map_err(err)?.poly;
            if d.is_zero() {
                return Err(format!("Delta_{{{a},{b}}} is the zero polynomial"));
            }
            let id = format!("delta_{a}_{b}");
            if *complex {
                let set = complex_roots_named(&d, cfg.float_bits, &id).map_err(err)?;
                let mut csv = format!("{ROOT_CSV_HEADER}\n");
                for row in set.csv_rows(&id, Some(*a), Some(*b), false) {
                    csv.push_str(&row);
                    csv.push('\n');
                }
                let passed = set.all_converged();
                let mut out = Outcome::ok(csv.clone()).with_file(format!("{id}_roots.csv"), csv);
                out.passed = passed;
                Ok(out)
            } else {
                let bits = cfg.precision_bits;
                let ivs = isolate_real_roots(&d).map_err(err)?;
                let refined = ivs
                    .iter()
                    .map(|iv| if iv.is_point() { Ok(iv.clone()) } else { refine(&d, iv, bits) })
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(err)?;
                let largest = largest_real_root(&d, bits).map_err(err)?;
                let body = to_json(&serde_json::json!({
                    "poly_id": id,
                    "bits": bits,
                    "real_roots": refined.iter().map(|iv| serde_json::json!({
                        "lo": iv.lo.to_string(),
                        "hi": iv.hi.to_string(),
                        "approx": iv.lo.to_decimal(12),
                    })).collect::<Vec<_>>(),
                    "largest": largest.map(|iv| iv.lo.to_decimal(12)),
                }));
                Ok(Outcome::ok(body.clone()).with_file(format!("{id}_real_roots.json"), body))
            }
        }
        Command::Tables { only } => {
            let ids: Vec<TableId> = match only {
                Some(s) => vec![s.parse().map_err(err)?],
                None => TableId::ALL.to_vec(),
            };
            let depth = ids.iter().map(|&id| etaineq::verify::required_depth(id)).max().unwrap_or(0);
            let table = gen_table(depth.max(cfg.n_max).max(2));
            let mut text = String::new();
            let mut passed = true;
            let mut reports = Vec::new();
            for id in ids {
                let r = reproduce(id, &table).map_err(err)?;
                text.push_str(&r.to_text());
                passed &= r.passed();
                reports.push(serde_json::from_str::<serde_json::Value>(&r.to_json()).expect("valid json"));
            }
            let json = to_json(&reports);
            let mut out = Outcome::ok(text).with_file("tables.json".into(), json);
            out.passed = passed;
            Ok(out)
        }
        Command::Figures { which, a_max } => {
            let id: TableId = which.parse().map_err(err)?;
            let b_max = if id == TableId::Fig1 { 2 } else { 28 };
            let table = gen_table(*a_max.max(&(b_max + 1)));
            let dir = cfg.output_dir.clone().unwrap_or_else(|| PathBuf::from("."));
            let path = figure_dataset_with(id, *a_max, cfg.float_bits, &table, &dir).map_err(err)?;
            Ok(Outcome::ok(format!("{}\n", path.display())))
        }
        Command::MainTerm { a, b, x } => {
            let r = main_term(*a, *b, x, cfg.precision_bits as usize).map_err(err)?;
            let body = to_json(&r);
            let mut out = Outcome::ok(body.clone()).with_file(format!("main_term_{a}_{b}.json"), body);
            out.passed = r.in_window;
            Ok(out)
        }
    }
}

fn ext(cfg: &Config) -> &'static str {
    match cfg.format {
        Format::Json => "json",
        Format::Csv => "csv",
    }
}
