mod alcoves;

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{error::ErrorKind, Parser, Subcommand, ValueEnum};
use peterson_core::affine_weyl::{AffinePermutation, Word};
use peterson_core::nilcoxeter;
use peterson_core::peterson::PetersonContext;
use peterson_core::quantum::{Grassmannian, QClass};
use peterson_core::rootsys::is_in_parabolic;
use peterson_core::shapes::{self, Core, Partition};
use peterson_core::verify::{run_criterion, Limits, CRITERIA};

const EXIT_USAGE: u8 = 1;
const EXIT_MISMATCH: u8 = 2;

#[derive(Parser)]
#[command(name = "peterson", version, about = "Quantum cohomology of Grassmannians via the affine nilCoxeter algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two Schubert classes in QH*(Gr(m,n)).
    Qprod {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Comma list, "0" or "empty" for the empty shape.
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
        #[arg(long, value_enum, default_value_t = Route::Pieri)]
        route: Route,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Print the affine pipeline stages as JSON lines on stderr.
        #[arg(long)]
        trace: bool,
    },
    /// Full multiplication table of Schubert classes.
    Table {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// k-Schur function of a bounded partition as a polynomial in h's.
    Kschur {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        shape: String,
        /// Also print the noncommutative k-Schur function.
        #[arg(long)]
        noncommutative: bool,
    },
    /// Bounded partition, core and Grassmannian word of one element.
    Bij {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        from: BijFrom,
        #[arg(long)]
        value: String,
    },
    /// Membership of an element in S~_n^P.
    Jp {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// A word such as "1,0" or a window such as "[-2,2,6]".
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Apply a duality to a Schubert class.
    Duality {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum)]
        map: DualityMap,
    },
    /// Run the acceptance suite.
    Verify {
        /// Largest rank of the exhaustive sweeps; PETERSON_VERIFY_DEPTH also works.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Draw the alcoves of S~_3 as an SVG file.
    Alcoves {
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Largest length of the elements drawn.
        #[arg(long, default_value_t = 6)]
        radius: usize,
        #[arg(long, value_enum, default_value_t = Highlight::Jp)]
        highlight: Highlight,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Pieri,
    Affine,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum BijFrom {
    Kbounded,
    Core,
    Word,
}

#[derive(Clone, Copy, ValueEnum)]
enum DualityMap {
    Transpose,
    Complement,
    Strange,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Highlight {
    Jp,
    Grassmannian,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Qprod { m, n, lhs, rhs, route, format, trace } => qprod(m, n, &lhs, &rhs, route, format, trace),
        Command::Table { m, n, format } => table(m, n, format),
        Command::Kschur { n, shape, noncommutative } => kschur(n, &shape, noncommutative),
        Command::Bij { n, from, value } => bij(n, from, &value),
        Command::Jp { m, n, word } => jp(m, n, &word),
        Command::Duality { m, n, shape, map } => duality(m, n, &shape, map),
        Command::Verify { max_n } => verify(max_n),
        Command::Alcoves { n, radius, highlight, m, out } => {
            let svg = alcoves::render(n, radius, highlight, m)?;
            fs::write(&out, svg).with_context(|| format!("writing {}", out.display()))?;
            println!("wrote {}", out.display());
            Ok(0)
        }
    }
}

fn shape(s: &str) -> Result<Partition> {
    Partition::parse(s).with_context(|| format!("bad shape {s:?}"))
}

fn qprod(m: usize, n: usize, lhs: &str, rhs: &str, route: Route, format: Format, trace: bool) -> Result<u8> {
    let ctx = PetersonContext::new(m, n)?;
    let (a, b) = (shape(lhs)?, shape(rhs)?);
    let pieri = match route {
        Route::Affine => None,
        _ => Some(ctx.ring().schubert_product(&a, &b)?),
    };
    let affine = match route {
        Route::Pieri => None,
        _ if trace => {
            let (result, events) = ctx.peterson_product_traced(&a, &b)?;
            for e in events {
                eprintln!("{}", serde_json::to_string(&e)?);
            }
            Some(result)
        }
        _ => Some(ctx.peterson_product(&a, &b)?),
    };
    if trace && route == Route::Pieri {
        eprintln!("note: --trace only applies to the affine route");
    }
    match (pieri, affine) {
        (Some(x), None) | (None, Some(x)) => {
            match format {
                Format::Text => println!("{x}"),
                Format::Json => println!("{}", x.to_json()),
                Format::Csv => print!("{}", terms_csv(&[(&a, &b, &x)])?),
            }
            Ok(0)
        }
        (Some(p), Some(q)) => {
            let same = p == q;
            match format {
                Format::Text if same => println!("{p}  MATCH"),
                Format::Text => println!("pieri: {p}\naffine: {q}\nMISMATCH"),
                Format::Json => println!(
                    "{}",
                    serde_json::json!({ "pieri": p.to_terms(), "affine": q.to_terms(), "match": same })
                ),
                Format::Csv => bail!("csv output needs a single route"),
            }
            Ok(if same { 0 } else { EXIT_MISMATCH })
        }
        (None, None) => unreachable!("every route computes something"),
    }
}

fn terms_csv(rows: &[(&Partition, &Partition, &QClass)]) -> Result<String> {
    let mut out = csv::Writer::from_writer(Vec::new());
    out.write_record(["lhs", "rhs", "shape", "qdeg", "coeff"])?;
    for (a, b, x) in rows {
        for ((d, s), c) in x.terms() {
            out.write_record([a.to_string(), b.to_string(), s.to_string(), d.to_string(), c.to_string()])?;
        }
    }
    Ok(String::from_utf8(out.into_inner()?)?)
}

fn table(m: usize, n: usize, format: Format) -> Result<u8> {
    let g = Grassmannian::new(m, n)?;
    let shapes = g.shapes();
    let mut rows = Vec::new();
    for (i, a) in shapes.iter().enumerate() {
        for b in &shapes[i..] {
            rows.push((a, b, g.schubert_product(a, b)?));
        }
    }
    match format {
        Format::Text => {
            for (a, b, x) in &rows {
                println!("{} * {} = {x}", g.schubert(a)?, g.schubert(b)?);
            }
        }
        Format::Json => {
            let entries: Vec<_> = rows
                .iter()
                .map(|(a, b, x)| serde_json::json!({ "lhs": a.parts(), "rhs": b.parts(), "product": x.to_terms() }))
                .collect();
            println!("{}", serde_json::to_string_pretty(&entries)?);
        }
        Format::Csv => {
            let refs: Vec<_> = rows.iter().map(|(a, b, x)| (*a, *b, x)).collect();
            print!("{}", terms_csv(&refs)?);
        }
    }
    Ok(0)
}

fn kschur(n: usize, s: &str, noncommutative: bool) -> Result<u8> {
    let lam = shape(s)?;
    println!("{}", nilcoxeter::kschur_h_poly(n, &lam)?);
    if noncommutative {
        println!("{}", nilcoxeter::noncomm_kschur(n, &lam)?);
    }
    Ok(0)
}

fn bij(n: usize, from: BijFrom, value: &str) -> Result<u8> {
    let core = match from {
        BijFrom::Kbounded => shapes::kbounded_to_core(n, &shape(value)?)?,
        BijFrom::Core => Core::new(n, shape(value)?)?,
        BijFrom::Word => shapes::word_to_core(&Word::parse(n, value)?)?,
    };
    let word = shapes::core_to_word(&core);
    let w = AffinePermutation::from_word(&word)?;
    println!("kbounded: {}", shapes::core_to_kbounded(&core));
    println!("core: {}", core.shape());
    println!("word: s_{{{}}}", word.subscript());
    println!("window: {w}");
    Ok(0)
}

fn element(n: usize, s: &str) -> Result<AffinePermutation> {
    let s = s.trim();
    let w = if s.starts_with('[') {
        AffinePermutation::parse_window(s)?
    } else {
        let word = Word::parse(n, s)?;
        let w = AffinePermutation::from_word(&word)?;
        if w.length() as usize != word.len() {
            bail!("word {word} is not reduced");
        }
        w
    };
    if w.rank() != n {
        bail!("window has rank {}, expected {n}", w.rank());
    }
    Ok(w)
}

fn jp(m: usize, n: usize, s: &str) -> Result<u8> {
    PetersonContext::new(m, n)?;
    let w = element(n, s)?;
    println!("{}", if is_in_parabolic(&w, m) { "in S~_n^P" } else { "NOT in S~_n^P" });
    Ok(0)
}

fn duality(m: usize, n: usize, s: &str, map: DualityMap) -> Result<u8> {
    let x = Grassmannian::new(m, n)?.schubert(&shape(s)?)?;
    let y = match map {
        DualityMap::Transpose => x.dual_transpose(),
        DualityMap::Complement => x.dual_complement(),
        DualityMap::Strange => x.strange_duality(),
    };
    let ring = y.ring();
    println!("{y} in Gr({},{})", ring.m(), ring.n());
    Ok(0)
}

fn verify(max_n: Option<usize>) -> Result<u8> {
    let depth = match (max_n, std::env::var("PETERSON_VERIFY_DEPTH")) {
        (Some(d), _) => Some(d),
        (None, Ok(v)) => Some(v.parse().with_context(|| format!("PETERSON_VERIFY_DEPTH={v:?}"))?),
        (None, Err(_)) => None,
    };
    let limits = depth.map(Limits::depth).unwrap_or_default();
    let mut failed = BTreeMap::new();
    for (id, name) in CRITERIA {
        let r = run_criterion(id, &limits);
        println!("{r}");
        if !r.passed {
            failed.insert(id, name);
        }
    }
    if failed.is_empty() {
        println!("all criteria passed");
        Ok(0)
    } else {
        println!("failed: {:?}", failed.keys().collect::<Vec<_>>());
        Ok(EXIT_MISMATCH)
    }
}
