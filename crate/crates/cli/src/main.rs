//! `raag`: command-line access to growth series, excursion statistics,
//! word computations and the census oracle.

mod format;

// stdout closed early (e.g. piped into `head`) ends the run quietly
macro_rules! println {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if let Err(e) = writeln!(std::io::stdout(), $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            panic!("failed printing to stdout: {e}");
        }
    }};
}

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use raag_growth::census::{sphere_census, verify_series_vs_census, Witness};
use raag_growth::engine::{
    bounded_excursion_series, classify, excursion_distribution, graph_product_series, lambda_gap_scan,
    threshold_scan,
};
use raag_growth::series::json::{coefficient_to_json, series_to_json};
use raag_growth::series::{pole_analysis, taylor_coefficients, CoefficientMode, SeriesError};
use raag_growth::words::{
    flat_excursion, normal_form_rel_vertex, reduce_word, vertex_excursion, FlatExcursion, FlatMode, Word,
};
use raag_growth::{Clique, DefiningGraph, Series};

use format::{exact_or_float, float, poly_list, rational_float};

#[derive(Parser)]
#[command(name = "raag", version, about = "Growth series and excursion statistics for RAAGs and graph products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args)]
struct Common {
    /// Graph description (JSON)
    graph: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Growth series, growth rate and asymptotic constant
    Growth {
        #[command(flatten)]
        common: Common,
        /// Also print the exact enclosure of the dominant root
        #[arg(long)]
        exact: bool,
    },
    /// Growth series of the elements with excursion at most E at vertex V
    ExcursionSeries {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'v', long = "vertex")]
        vertex: String,
        #[arg(short = 'E', long = "bound")]
        bound: usize,
    },
    /// Coefficients a_n (or a_{n,E} with -v and -E) as CSV
    Coeffs {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'v', long = "vertex", requires = "bound")]
        vertex: Option<String>,
        #[arg(short = 'E', long = "bound", requires = "vertex")]
        bound: Option<usize>,
        #[arg(long)]
        nmax: usize,
    },
    /// Exact law of the excursion at vertex V on the sphere of radius n
    Distribution {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'v', long = "vertex")]
        vertex: String,
        #[arg(short = 'n')]
        n: usize,
        /// Print probabilities as p/q
        #[arg(long)]
        exact: bool,
    },
    /// Irreducible factors, growth rates and predicted excursion regimes
    Classify {
        #[command(flatten)]
        common: Common,
    },
    /// Growth rates lambda_E of the bounded groups and the decay of lambda - lambda_E
    ScanLambda {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'v', long = "vertex")]
        vertex: String,
        #[arg(long)]
        emin: usize,
        #[arg(long)]
        emax: usize,
    },
    /// P_n(E_v <= floor(c ln n)) for each c and n (natural logarithm)
    ScanThreshold {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'v', long = "vertex")]
        vertex: String,
        /// Comma-separated constants c
        #[arg(long = "c", value_delimiter = ',', required = true)]
        c: Vec<f64>,
        /// Comma-separated radii n
        #[arg(long = "n", value_delimiter = ',', required = true)]
        n: Vec<usize>,
        /// Print probabilities as p/q
        #[arg(long)]
        exact: bool,
    },
    /// Word computations
    Word {
        #[command(subcommand)]
        action: WordAction,
    },
    /// Enumerate spheres by brute force
    Census {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        nmax: usize,
        /// Add excursion histogram columns for this vertex
        #[arg(short = 'v', long = "vertex")]
        vertex: Option<String>,
        /// Compare every growth and bounded series with the census
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 4)]
        emax: usize,
    },
}

#[derive(Subcommand)]
enum WordAction {
    /// Canonical geodesic form
    Reduce {
        #[command(flatten)]
        common: Common,
        word: String,
    },
    /// Excursion in the vertex group of V, with the normal form
    Excursion {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'v', long = "vertex")]
        vertex: String,
        word: String,
    },
    /// Excursion in the flats of a clique
    FlatExcursion {
        #[command(flatten)]
        common: Common,
        /// Comma-separated clique vertices
        #[arg(long, value_delimiter = ',', required = true)]
        clique: Vec<String>,
        #[arg(long, value_enum, default_value = "exact")]
        mode: Mode,
        word: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Bounds,
}

type Outcome = Result<(), String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn configure_threads() -> Outcome {
    let Ok(value) = std::env::var("RAAG_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("RAAG_THREADS must be a positive integer, got {value:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn load(path: &Path) -> Result<DefiningGraph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    DefiningGraph::from_json_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn vertex(g: &DefiningGraph, name: &str) -> Result<usize, String> {
    g.vertex(name).map_err(|e| e.to_string())
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Growth { common, exact } => growth(&common, exact),
        Command::ExcursionSeries { common, vertex: v, bound } => {
            let g = load(&common.graph)?;
            let f = bounded_excursion_series(&g, vertex(&g, &v)?, bound).map_err(err)?.series;
            print_series(&f, common.format, false)
        }
        Command::Coeffs {
            common,
            vertex: v,
            bound,
            nmax,
        } => {
            let g = load(&common.graph)?;
            let f = match (v, bound) {
                (Some(v), Some(e)) => bounded_excursion_series(&g, vertex(&g, &v)?, e).map_err(err)?.series,
                _ => graph_product_series(&g).map_err(err)?,
            };
            let table = taylor_coefficients(&f, nmax, CoefficientMode::Exact).map_err(err)?;
            let coeffs = table.exact().expect("exact mode");
            if common.format == Format::Json {
                let list: Vec<_> = coeffs.iter().map(coefficient_to_json).collect();
                println!("{}", json!({ "coefficients": list }));
            } else {
                println!("n,a_n");
                for (n, c) in coeffs.iter().enumerate() {
                    println!("{n},{c}");
                }
            }
            Ok(())
        }
        Command::Distribution {
            common,
            vertex: v,
            n,
            exact,
        } => {
            let g = load(&common.graph)?;
            let d = excursion_distribution(&g, vertex(&g, &v)?, n).map_err(err)?;
            if common.format == Format::Json {
                let probs: Vec<_> = d.probabilities.iter().map(|p| exact_or_float(p, exact)).collect();
                let out = json!({
                    "n": n,
                    "sphere_size": coefficient_to_json(&d.sphere_size),
                    "probabilities": probs,
                    "mean": exact_or_float(&d.mean, exact),
                    "median": d.median,
                });
                println!("{out}");
            } else {
                println!("k,probability");
                for (k, p) in d.probabilities.iter().enumerate() {
                    println!("{k},{}", rational_float(p, exact));
                }
                println!("# mean={}", rational_float(&d.mean, exact));
                println!("# median={}", d.median);
            }
            Ok(())
        }
        Command::Classify { common } => classify_command(&common),
        Command::ScanLambda {
            common,
            vertex: v,
            emin,
            emax,
        } => {
            let g = load(&common.graph)?;
            let scan = lambda_gap_scan(&g, vertex(&g, &v)?, emin, emax).map_err(err)?;
            if common.format == Format::Json {
                println!("{}", serde_json::to_string(&scan).map_err(err)?);
                return Ok(());
            }
            println!("E,lambda_E,gap");
            for row in &scan.rows {
                println!("{},{},{}", row.bound, float(row.lambda_e), float(row.gap));
            }
            for e in &scan.skipped {
                println!("# E={e}: no exponential pole");
            }
            match scan.slope {
                Some(s) => println!("# slope={} expected={}", float(s), float(-scan.lambda.ln())),
                None => println!("# slope=none"),
            }
            Ok(())
        }
        Command::ScanThreshold {
            common,
            vertex: v,
            c,
            n,
            exact,
        } => {
            let g = load(&common.graph)?;
            let scan = threshold_scan(&g, vertex(&g, &v)?, &n, &c).map_err(err)?;
            if common.format == Format::Json {
                let rows: Vec<_> = scan
                    .rows
                    .iter()
                    .map(|r| {
                        json!({"n": r.n, "c": r.c, "E_used": r.bound,
                               "probability": exact_or_float(&r.exact, exact)})
                    })
                    .collect();
                println!("{}", json!({ "threshold": scan.threshold, "rows": rows }));
                return Ok(());
            }
            println!("n,c,E_used,probability");
            for r in &scan.rows {
                println!("{},{},{},{}", r.n, r.c, r.bound, rational_float(&r.exact, exact));
            }
            match scan.threshold {
                Some(t) => println!("# threshold=1/ln(lambda)={}", float(t)),
                None => println!("# threshold=none (no exponential growth)"),
            }
            Ok(())
        }
        Command::Word { action } => word_command(action),
        Command::Census {
            common,
            nmax,
            vertex: v,
            verify,
            emax,
        } => census_command(&common, nmax, v.as_deref(), verify, emax),
    }
}

fn print_series(f: &Series, format: Format, exact: bool) -> Outcome {
    let pole = match pole_analysis(f) {
        Ok(p) => Some(p),
        Err(SeriesError::NoExponentialPole) => None,
        Err(e) => return Err(e.to_string()),
    };
    if format == Format::Json {
        let mut out = series_to_json(f);
        if let Some(p) = &pole {
            out["lambda"] = json!(p.lambda);
            out["asymptotic_constant"] = json!(p.asymptotic_constant);
            if exact {
                out["root_enclosure"] = json!([p.root.lo.to_string(), p.root.hi.to_string()]);
            }
        }
        println!("{out}");
        return Ok(());
    }
    println!("num={}", poly_list(f.num()));
    println!("den={}", poly_list(f.den()));
    match &pole {
        Some(p) => {
            println!("lambda={}", float(p.lambda));
            println!("c={}", float(p.asymptotic_constant));
            if exact {
                println!("root_enclosure=[{},{}]", p.root.lo, p.root.hi);
            }
        }
        None => println!("lambda=1 (no exponential growth)"),
    }
    Ok(())
}

fn growth(common: &Common, exact: bool) -> Outcome {
    let g = load(&common.graph)?;
    let f = graph_product_series(&g).map_err(err)?;
    print_series(&f, common.format, exact)
}

fn vertex_set(g: &DefiningGraph, vs: &[usize]) -> String {
    let names: Vec<&str> = vs.iter().map(|&v| g.name(v)).collect();
    format!("{{{}}}", names.join(","))
}

fn classify_command(common: &Common) -> Outcome {
    let g = load(&common.graph)?;
    let c = classify(&g).map_err(err)?;
    if common.format == Format::Json {
        let comps: Vec<_> = c
            .components
            .iter()
            .map(|x| json!({"vertices": x.vertices.iter().map(|&v| g.name(v)).collect::<Vec<_>>(), "lambda": x.lambda}))
            .collect();
        let regimes = c.regimes.as_ref().map(|r| {
            (0..g.len())
                .map(|v| (g.name(v).to_string(), json!(r[v].to_string())))
                .collect::<serde_json::Map<_, _>>()
        });
        let out = json!({
            "irreducible": c.irreducible,
            "abelian": c.abelian,
            "components": comps,
            "lambda": c.lambda,
            "s": c.s,
            "pure_exponential": c.pure_exponential,
            "regimes": regimes,
        });
        println!("{out}");
        return Ok(());
    }
    let comps: Vec<String> = c
        .components
        .iter()
        .map(|x| format!("{}:λ={}", vertex_set(&g, &x.vertices), float(x.lambda)))
        .collect();
    let kind = if c.abelian {
        "abelian"
    } else if c.irreducible {
        "irreducible"
    } else {
        "reducible"
    };
    println!("{kind}; components {}", comps.join(", "));
    println!("lambda={}", float(c.lambda));
    println!("s={}", c.s);
    println!("pure_exponential={}", c.pure_exponential);
    match &c.regimes {
        Some(r) => {
            for (v, regime) in r.iter().enumerate() {
                println!("vertex {}: {}", g.name(v), regime);
            }
        }
        None => println!("regimes: only predicted for right-angled Artin groups"),
    }
    Ok(())
}

fn word_command(action: WordAction) -> Outcome {
    match action {
        WordAction::Reduce { common, word } => {
            let g = load(&common.graph)?;
            let w = Word::parse(&g, &word).map_err(err)?;
            let r = reduce_word(&w);
            if common.format == Format::Json {
                println!("{}", json!({"reduced": r.to_string(), "length": r.len()}));
            } else {
                println!("reduced={r}");
                println!("length={}", r.len());
            }
            Ok(())
        }
        WordAction::Excursion { common, vertex: v, word } => {
            let g = load(&common.graph)?;
            let v = vertex(&g, &v)?;
            let w = Word::parse(&g, &word).map_err(err)?;
            let r = reduce_word(&w);
            let d = normal_form_rel_vertex(&r, v);
            let e = vertex_excursion(&w, v);
            let syl = |s: &[raag_growth::words::Syllable]| {
                let w = Word::new(&g, s.iter().flat_map(|x| x.letters()).collect()).expect("valid letters");
                w.to_string()
            };
            let blocks: Vec<String> = d
                .blocks
                .iter()
                .map(|(a, t)| format!("{}^{a} | {}", g.name(v), syl(t)))
                .collect();
            if common.format == Format::Json {
                println!(
                    "{}",
                    json!({"reduced": r.to_string(), "excursion": e, "prefix": syl(&d.prefix), "blocks": blocks})
                );
            } else {
                println!("reduced={r}");
                println!("prefix={}", syl(&d.prefix));
                for (i, b) in blocks.iter().enumerate() {
                    println!("block{}={b}", i + 1);
                }
                println!("excursion={e}");
            }
            Ok(())
        }
        WordAction::FlatExcursion {
            common,
            clique,
            mode,
            word,
        } => {
            let g = load(&common.graph)?;
            let vs = clique.iter().map(|n| vertex(&g, n)).collect::<Result<Vec<_>, _>>()?;
            let clique = Clique::new(&g, vs).map_err(err)?;
            let w = Word::parse(&g, &word).map_err(err)?;
            let mode = match mode {
                Mode::Exact => FlatMode::Exact,
                Mode::Bounds => FlatMode::Bounds,
            };
            match flat_excursion(&w, &clique, mode).map_err(err)? {
                FlatExcursion::Exact(k) => println!("flat_excursion={k}"),
                FlatExcursion::Bounds { lower, upper } => println!("bounds=[{lower},{upper}]"),
            }
            Ok(())
        }
    }
}

fn census_command(common: &Common, nmax: usize, v: Option<&str>, verify: bool, emax: usize) -> Outcome {
    let g = load(&common.graph)?;
    if verify {
        let report = verify_series_vs_census(&g, nmax, emax).map_err(err)?;
        if common.format == Format::Json {
            println!("{}", serde_json::to_string(&report).map_err(err)?);
        } else {
            println!("checked={} mismatches={}", report.checked, report.mismatches.len());
            for m in &report.mismatches {
                println!("mismatch {}: series={} census={}", witness(&g, &m.witness), m.series, m.census);
            }
        }
        return if report.is_ok() {
            Ok(())
        } else {
            let first = &report.mismatches[0];
            Err(format!("series and census disagree at {}", witness(&g, &first.witness)))
        };
    }
    let tracked: Vec<usize> = v.map(|name| vertex(&g, name)).transpose()?.into_iter().collect();
    let census = sphere_census(&g, nmax, &tracked, None).map_err(err)?;
    if common.format == Format::Json {
        println!("{}", serde_json::to_string(&census).map_err(err)?);
        return Ok(());
    }
    let mut header = String::from("n,a_n");
    for k in 0..=nmax {
        if !tracked.is_empty() {
            header.push_str(&format!(",count_E{k}"));
        }
    }
    println!("{header}");
    for n in 0..=nmax {
        let mut line = format!("{n},{}", census.sizes[n]);
        if let Some((_, h)) = census.vertex_histograms.first() {
            for k in 0..=nmax {
                line.push_str(&format!(",{}", h[n].get(k).copied().unwrap_or(0)));
            }
        }
        println!("{line}");
    }
    Ok(())
}

fn witness(g: &DefiningGraph, w: &Witness) -> String {
    match w {
        Witness::Sphere { n } => format!("n={n}"),
        Witness::Bounded { n, vertex, bound } => format!("n={n} v={} E={bound}", g.name(*vertex)),
    }
}
