use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use dualis::dualize::{check_diagram, double_dual_check, dualize};
use dualis::groebner::normal_form;
use dualis::io::{parse_ideal, parse_polynomial, parse_rational, print_document, print_ideal, IdealDocument};
use dualis::plane_curves::{dual_via_pedal, invert_implicit, pedal_implicit, InversionRadiusSquared, Pedal, PlaneCurve};
use dualis::plot::{plot_implicit, PlotSpec};
use dualis::poly::BlockKind;
use dualis::{Engine, Error, Ideal, MonomialOrder, Rational};

const STEP_LIMIT_VAR: &str = "DUALIS_STEP_LIMIT";

#[derive(Parser)]
#[command(name = "dualis", version, about = "Dual varieties of projective ideals by elimination")]
struct Cli {
    /// Prefix ideal output with its ring declaration
    #[arg(long, global = true)]
    with_ring: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Io {
    /// Ideal file, or `-` for stdin
    #[arg(short = 'i', long = "input", default_value = "-")]
    input: String,
    /// Write to this file instead of stdout
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Dual ideal of a homogeneous ideal
    Dual {
        #[command(flatten)]
        io: Io,
        /// Also print the dualization system
        #[arg(long)]
        show_system: bool,
        /// Also print the Gröbner basis of the system under the elimination order
        #[arg(long)]
        show_gb: bool,
    },
    /// Dual, dual of the dual, and whether the latter equals the input
    Bidual {
        #[command(flatten)]
        io: Io,
    },
    /// Reduced Gröbner basis
    Gb {
        #[command(flatten)]
        io: Io,
        /// lex, degrevlex, or block:K (eliminate the first K variables)
        #[arg(long, default_value = "degrevlex")]
        order: String,
    },
    /// Normal form of a polynomial modulo the ideal
    Nf {
        #[command(flatten)]
        io: Io,
        #[arg(short = 'p', long = "poly")]
        poly: String,
        #[arg(long, default_value = "degrevlex")]
        order: String,
    },
    /// Eliminate the first K variables
    Eliminate {
        #[command(flatten)]
        io: Io,
        #[arg(short = 'k')]
        k: usize,
    },
    /// Ideal membership of a polynomial (exit 1 when not a member)
    Member {
        #[command(flatten)]
        io: Io,
        #[arg(short = 'p', long = "poly")]
        poly: String,
    },
    /// Radical membership of a polynomial (exit 1 when not a member)
    Radmember {
        #[command(flatten)]
        io: Io,
        #[arg(short = 'p', long = "poly")]
        poly: String,
    },
    /// Ideal equality with a second file (exit 1 when different)
    Equal {
        #[command(flatten)]
        io: Io,
        #[arg(short = 'j')]
        other: String,
    },
    /// Whether the ideal contains the ideal of a second file (exit 1 when not)
    Contains {
        #[command(flatten)]
        io: Io,
        #[arg(short = 'j')]
        other: String,
    },
    /// Inclusions between the ideal, its radical and their duals
    Diagram {
        #[command(flatten)]
        io: Io,
        /// File holding the radical of the input (or any ideal between the two)
        #[arg(long)]
        radical: Option<String>,
    },
    /// Homogenize with a new variable
    Homogenize {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        var: String,
        /// Position of the new variable in the ring
        #[arg(long, default_value_t = 0)]
        position: usize,
    },
    /// Set a variable to 1 and drop it from the ring
    Dehomogenize {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        var: String,
    },
    /// Pedal curve with respect to the origin
    Pedal {
        #[command(flatten)]
        io: Io,
    },
    /// Inversion in the circle of squared radius r2
    Invert {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        r2: String,
    },
    /// Affine dual as inversion of the pedal
    Dualpedal {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        r2: String,
    },
    /// SVG plot of plane curves; every generator of every input is drawn
    Plot {
        #[arg(short = 'i', long = "input", required = true)]
        inputs: Vec<String>,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        /// XMIN,XMAX,YMIN,YMAX
        #[arg(long, default_value = "-2,2,-2,2", allow_hyphen_values = true)]
        window: String,
        /// Grid cells per axis
        #[arg(long, default_value_t = 256)]
        res: usize,
        /// Dehomogenize projective input at this variable first
        #[arg(long)]
        chart: Option<String>,
    },
}

/// A failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Parse { .. } | Error::UnknownVariable { .. } | Error::ReservedName { .. } => 2,
            Error::StepLimit(_) => 4,
            _ => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

type CliResult<T> = std::result::Result<T, Failure>;

struct Outcome {
    text: String,
    /// Predicate answer; `Some(false)` exits with 1.
    verdict: Option<bool>,
}

impl Outcome {
    fn text(text: String) -> Outcome {
        Outcome { text, verdict: None }
    }

    fn verdict(v: bool) -> Outcome {
        Outcome { text: format!("{v}\n"), verdict: Some(v) }
    }
}

fn read_source(path: &str) -> CliResult<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| fail(3, format!("cannot read stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| fail(3, format!("cannot read {path}: {e}")))
    }
}

fn load(path: &str) -> CliResult<IdealDocument> {
    let text = read_source(path)?;
    parse_ideal(&text).map_err(|e| {
        let f = Failure::from(e);
        fail(f.code, format!("{path}: {}", f.message))
    })
}

fn engine() -> CliResult<Engine> {
    let limit = match std::env::var(STEP_LIMIT_VAR) {
        Ok(v) => match v.trim().parse::<u64>() {
            Ok(n) if n > 0 => Some(n),
            _ => return Err(fail(3, format!("{STEP_LIMIT_VAR} must be a positive integer"))),
        },
        Err(_) => None,
    };
    Ok(Engine::default().with_step_limit(limit))
}

fn parse_order(spec: &str, nvars: usize) -> CliResult<MonomialOrder> {
    match spec {
        "lex" => Ok(MonomialOrder::Lex),
        "degrevlex" => Ok(MonomialOrder::DegRevLex),
        _ => {
            let k = spec
                .strip_prefix("block:")
                .and_then(|k| k.parse::<usize>().ok())
                .ok_or_else(|| fail(2, format!("unknown order `{spec}`; expected lex, degrevlex or block:K")))?;
            if k == 0 || k >= nvars {
                return Err(fail(3, format!("block size {k} must be between 1 and {}", nvars.saturating_sub(1))));
            }
            Ok(MonomialOrder::elimination(k, nvars, BlockKind::DegRevLex))
        }
    }
}

/// `[-]int[.digits]` or `[-]nat/nat`.
fn parse_number(text: &str) -> CliResult<Rational> {
    let t = text.trim();
    if let Some((whole, frac)) = t.split_once('.') {
        let digits = format!("{whole}{frac}");
        let numer: num_bigint::BigInt = digits.parse().map_err(|_| fail(2, format!("invalid number `{t}`")))?;
        let denom = num_bigint::BigInt::from(10u32).pow(frac.len() as u32);
        return Ok(Rational::new(numer, denom));
    }
    parse_rational(t).ok_or_else(|| fail(2, format!("invalid number `{t}`")))
}

fn render(ideal: &Ideal, with_ring: bool) -> String {
    if with_ring {
        print_document(ideal)
    } else {
        format!("{}\n", print_ideal(ideal))
    }
}

fn curves_of(doc: &IdealDocument) -> CliResult<Vec<PlaneCurve>> {
    doc.generators.iter().map(|g| PlaneCurve::new(g.clone()).map_err(Failure::from)).collect()
}

fn single_curve(doc: &IdealDocument) -> CliResult<PlaneCurve> {
    match curves_of(doc)?.as_slice() {
        [c] => Ok(c.clone()),
        _ => Err(fail(3, "expected a single plane curve")),
    }
}

fn warn(message: &str) {
    eprintln!("warning: {message}");
}

fn run(cli: Cli) -> CliResult<(Outcome, Option<PathBuf>)> {
    let with_ring = cli.with_ring;
    let engine = engine()?;
    let (outcome, output) = match cli.command {
        Command::Dual { io, show_system, show_gb } => {
            let doc = load(&io.input)?;
            let d = dualize(&engine, &doc.ideal())?;
            let mut text = String::new();
            if show_system {
                text.push_str("// system\n");
                text.push_str(&print_document(&d.system.system));
            }
            if show_gb {
                text.push_str("// elimination basis\n");
                text.push_str(&print_document(&d.basis.to_ideal()));
            }
            if show_system || show_gb {
                text.push_str("// dual\n");
            }
            if d.degenerate {
                warn("elimination ideal is zero; the dual is reported as the zero ideal");
            }
            text.push_str(&render(&d.ideal, with_ring));
            (Outcome::text(text), io.output)
        }
        Command::Bidual { io } => {
            let doc = load(&io.input)?;
            let r = double_dual_check(&engine, &doc.ideal())?;
            let text = format!("dual: {}\nbidual: {}\nequal: {}\n", print_ideal(&r.dual), print_ideal(&r.bidual), r.equal);
            (Outcome::text(text), io.output)
        }
        Command::Gb { io, order } => {
            let doc = load(&io.input)?;
            let order = parse_order(&order, doc.ring.len())?;
            let gb = engine.groebner(&doc.ideal(), &order)?;
            (Outcome::text(render(&gb.to_ideal(), with_ring)), io.output)
        }
        Command::Nf { io, poly, order } => {
            let doc = load(&io.input)?;
            let order = parse_order(&order, doc.ring.len())?;
            let p = parse_polynomial(&poly, &doc.ring)?;
            let gb = engine.groebner(&doc.ideal(), &order)?;
            let r = normal_form(&p, gb.basis(), gb.order())?;
            (Outcome::text(format!("{r}\n")), io.output)
        }
        Command::Eliminate { io, k } => {
            let doc = load(&io.input)?;
            let e = engine.elimination_ideal(&doc.ideal(), k)?;
            (Outcome::text(print_document(&e)), io.output)
        }
        Command::Member { io, poly } => {
            let doc = load(&io.input)?;
            let p = parse_polynomial(&poly, &doc.ring)?;
            (Outcome::verdict(engine.ideal_membership(&p, &doc.ideal())?), io.output)
        }
        Command::Radmember { io, poly } => {
            let doc = load(&io.input)?;
            let p = parse_polynomial(&poly, &doc.ring)?;
            (Outcome::verdict(engine.radical_membership(&p, &doc.ideal())?), io.output)
        }
        Command::Equal { io, other } => {
            let (a, b) = (load(&io.input)?, load(&other)?);
            (Outcome::verdict(engine.ideal_equal(&a.ideal(), &b.ideal())?), io.output)
        }
        Command::Contains { io, other } => {
            let (a, b) = (load(&io.input)?, load(&other)?);
            (Outcome::verdict(engine.ideal_contains(&a.ideal(), &b.ideal())?), io.output)
        }
        Command::Diagram { io, radical } => {
            let doc = load(&io.input)?;
            let radical = radical.map(|r| load(&r)).transpose()?;
            let rep = check_diagram(&engine, &doc.ideal(), radical.as_ref().map(|r| r.ideal()).as_ref())?;
            let mut text = format!("D(I): {}\n", print_ideal(&rep.dual));
            if let Some(dr) = &rep.radical_dual {
                text.push_str(&format!("D(rad I): {}\n", print_ideal(dr)));
            }
            for (name, value, empirical) in rep.inclusions() {
                if let Some(v) = value {
                    let note = if empirical { " (empirical)" } else { "" };
                    text.push_str(&format!("{name}: {v}{note}\n"));
                }
            }
            (Outcome::text(text), io.output)
        }
        Command::Homogenize { io, var, position } => {
            let doc = load(&io.input)?;
            let ring = doc.ring.with_variable_at(&var, position)?;
            let gens = doc.generators.iter().map(|g| g.homogenize_into(&ring, position)).collect::<Result<_, _>>()?;
            (Outcome::text(print_document(&Ideal::new(&ring, gens)?)), io.output)
        }
        Command::Dehomogenize { io, var } => {
            let doc = load(&io.input)?;
            let index = doc.ring.index_of(&var).ok_or_else(|| fail(3, format!("no variable `{var}` in the ring")))?;
            let ring = doc.ring.without(index)?;
            let gens = doc.generators.iter().map(|g| g.dehomogenize_into(&ring, index)).collect::<Result<_, _>>()?;
            (Outcome::text(print_document(&Ideal::new(&ring, gens)?)), io.output)
        }
        Command::Pedal { io } => {
            let doc = load(&io.input)?;
            let ideal = match pedal_implicit(&engine, &single_curve(&doc)?)? {
                Pedal::Curve(c) => Ideal::new(c.ring(), vec![c.polynomial().clone()])?,
                Pedal::Locus(i) => {
                    warn("pedal locus is not a curve; printing the full elimination ideal");
                    i
                }
            };
            (Outcome::text(render(&ideal, with_ring)), io.output)
        }
        Command::Invert { io, r2 } => {
            let doc = load(&io.input)?;
            let r2 = InversionRadiusSquared::new(parse_number(&r2)?)?;
            let c = single_curve(&doc)?;
            if c.passes_through_origin() {
                warn("curve passes through the origin");
            }
            let inv = invert_implicit(&c, &r2)?;
            (Outcome::text(render(&Ideal::new(inv.ring(), vec![inv.polynomial().clone()])?, with_ring)), io.output)
        }
        Command::Dualpedal { io, r2 } => {
            let doc = load(&io.input)?;
            let r2 = InversionRadiusSquared::new(parse_number(&r2)?)?;
            let d = dual_via_pedal(&engine, &single_curve(&doc)?, &r2)?;
            (Outcome::text(render(&Ideal::new(d.ring(), vec![d.polynomial().clone()])?, with_ring)), io.output)
        }
        Command::Plot { inputs, output, window, res, chart } => {
            let bounds: Vec<Rational> = window.split(',').map(parse_number).collect::<CliResult<_>>()?;
            let bounds: [Rational; 4] =
                bounds.try_into().map_err(|_| fail(2, "window must be XMIN,XMAX,YMIN,YMAX"))?;
            let spec = PlotSpec::new(bounds, res)?;
            let mut curves = Vec::new();
            for path in &inputs {
                let mut doc = load(path)?;
                if let Some(var) = &chart {
                    let index = doc.ring.index_of(var).ok_or_else(|| fail(3, format!("{path}: no variable `{var}`")))?;
                    let ring = doc.ring.without(index)?;
                    doc.generators =
                        doc.generators.iter().map(|g| g.dehomogenize_into(&ring, index)).collect::<Result<_, _>>()?;
                    doc.ring = ring;
                }
                curves.extend(curves_of(&doc)?);
            }
            (Outcome::text(plot_implicit(&curves, &spec)?), output)
        }
    };
    Ok((outcome, output))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((outcome, output)) => {
            let written = match output {
                Some(path) => fs::write(&path, &outcome.text).map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => io::stdout().write_all(outcome.text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(3);
            }
            match outcome.verdict {
                Some(false) => ExitCode::from(1),
                _ => ExitCode::SUCCESS,
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
