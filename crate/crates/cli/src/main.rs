//! `toric`: command-line front end for toric-core.
//!
//! Exit codes: 0 success, 1 malformed input or usage, 2 violated
//! precondition, 3 `verify` ran but the interpolation property failed.

mod doc;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::Value;

use doc::{Doc, Field};
use toric_core::binomials::{binomial_generators, hypersurface_equation};
use toric_core::exact::is_positroid;
use toric_core::invariants::{dual_degree_normal, dual_degree_projected, surface_report};
use toric_core::osculation::{build_ak, build_ak_tilde, jet_matrix, verify_interpolant};
use toric_core::polygon::{
    canonical_form_fan, cyclic_count, cyclic_volume, euler_obstruction_vertex, p_polygon,
    parse_points, vertex_multiplicity, LatticePolygon,
};
use toric_core::toric::{Configuration, TorusPoint};
use toric_core::{Error, Int, IntMatrix, Matrix};

#[derive(Parser)]
#[command(
    name = "toric",
    version,
    about = "Exact toric interpolants and polygon invariants"
)]
struct Cli {
    /// Output form.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct MatrixInput {
    /// Matrix file: `rows cols` header, then whitespace-separated rows.
    #[arg(long)]
    matrix: Option<PathBuf>,
    /// Inline matrix, rows separated by `;`: `1,1,1,1;0,1,2,3`.
    #[arg(long, allow_hyphen_values = true)]
    rows: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct PolygonInput {
    /// Polygon file: one `x y` pair per line, counterclockwise.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Inline points `x,y;x,y;...`; their convex hull is used.
    #[arg(long, allow_hyphen_values = true)]
    points: Option<String>,
    /// The polygon P(d).
    #[arg(long)]
    pd: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Print A^(k) (or Ã^(k) with --tilde).
    Interpolant {
        #[command(flatten)]
        input: MatrixInput,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        tilde: bool,
    },
    /// Print the jet matrix A^(k)(t).
    Jet {
        #[command(flatten)]
        input: MatrixInput,
        #[arg(long)]
        k: usize,
        /// Torus point `t1,t2,...`; rationals like `1/2` allowed. Default: all ones.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Check that A^(k) is a k-th interpolant at the given and sampled points.
    Verify {
        #[command(flatten)]
        input: MatrixInput,
        #[arg(long)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        /// Extra random points, coordinates p/q with p, q in [1, 100].
        #[arg(long, default_value_t = 0)]
        samples: usize,
        /// Seed for the ChaCha8 generator used by --samples.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Binomials from the kernel lattice.
    Binomials {
        #[command(flatten)]
        input: MatrixInput,
        /// Require corank 1 and report the hypersurface equation.
        #[arg(long)]
        hypersurface: bool,
    },
    /// Curve A_{l,d}: interpolants, cyclic polygon data, positroid checks.
    Curve {
        /// Strictly increasing exponents starting at 0: `0,1,4,6`.
        #[arg(long)]
        ell: String,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Area, boundary and lattice points of a polygon.
    Polygon {
        #[command(flatten)]
        input: PolygonInput,
        /// Also report per-vertex multiplicities and Euler obstructions.
        #[arg(long)]
        all: bool,
    },
    /// Canonical form of a polygon.
    CanonicalForm {
        #[command(flatten)]
        input: PolygonInput,
        /// Fan anchor vertex index.
        #[arg(long, default_value_t = 0)]
        anchor: usize,
    },
    /// Dual degree of the normal toric surface, and with --projected of X_{A_d^(2)}.
    DualDegree {
        #[command(flatten)]
        input: PolygonInput,
        #[arg(long)]
        projected: bool,
    },
    /// Surface reports for an inclusive range `a..b` of d.
    Report {
        #[arg(long)]
        d_range: String,
    },
    /// Rebase a configuration to have (1, ..., 1) as its first row.
    Normalize {
        #[command(flatten)]
        input: MatrixInput,
    },
}

enum Failure {
    Usage(String),
    Core(Error),
    /// The report is still printed; the exit code carries the verdict.
    VerifyFailed(Output),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = Result<Output, Failure>;

enum Output {
    /// Text printed verbatim in text mode.
    Raw {
        text: String,
        json: Doc,
    },
    Doc(Doc),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let format = cli.format;
    match run(cli.command) {
        Ok(out) => {
            emit(&out, format);
            ExitCode::SUCCESS
        }
        Err(Failure::VerifyFailed(out)) => {
            emit(&out, format);
            ExitCode::from(3)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_malformed_input() { 1 } else { 2 })
        }
    }
}

fn emit(out: &Output, format: Format) {
    let text = match (out, format) {
        (Output::Raw { text, .. }, Format::Text) => text.clone(),
        (Output::Doc(d), Format::Text) => d.to_text(),
        (Output::Raw { json, .. } | Output::Doc(json), Format::Json) => {
            serde_json::to_string_pretty(&json.to_json()).expect("serializable") + "\n"
        }
    };
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Interpolant { input, k, tilde } => {
            let a = load_config(&input)?;
            let m = if tilde {
                build_ak_tilde(&a, k)?
            } else {
                build_ak(&a, k)?
            };
            let mut json = Doc::new();
            json.scalar("k", k)
                .scalar("tilde", tilde)
                .push("matrix", int_matrix_field(&m));
            Ok(Output::Raw {
                text: m.to_text(),
                json,
            })
        }
        Command::Jet { input, k, point } => {
            let a = load_config(&input)?;
            let t = parse_point(point.as_deref(), a.matrix().nrows() - 1)?;
            let jet = jet_matrix(a.matrix(), k, &t)?;
            let mut json = Doc::new();
            json.scalar("k", k)
                .scalar("point", t.to_string())
                .push("matrix", rat_matrix_field(&jet.entries));
            Ok(Output::Raw {
                text: jet.entries.to_text(),
                json,
            })
        }
        Command::Verify {
            input,
            k,
            point,
            samples,
            seed,
        } => verify(&input, k, point, samples, seed),
        Command::Binomials {
            input,
            hypersurface,
        } => {
            let a = load_config(&input)?;
            let mut d = Doc::new();
            if hypersurface {
                let h = hypersurface_equation(&a)?;
                d.scalar("binomial", h.binomial.to_string())
                    .scalar("equation_degree", h.degree);
            } else {
                let sys = binomial_generators(&a)?;
                let list: Vec<Value> = sys.binomials.iter().map(|b| b.to_string().into()).collect();
                d.scalar("binomials", list)
                    .scalar("torus_only", sys.torus_only);
            }
            Ok(Output::Doc(d))
        }
        Command::Curve { ell, k } => curve(&ell, k),
        Command::Polygon { input, all } => polygon(&input, all),
        Command::CanonicalForm { input, anchor } => {
            let p = load_polygon(&input)?;
            let form = canonical_form_fan(&p, anchor)?;
            let mut json = Doc::new();
            let edges: Vec<Value> = form
                .edges()
                .iter()
                .map(|l| {
                    toric_core::Poly2::linear(rat(&l.a), rat(&l.b), rat(&l.c))
                        .to_string()
                        .into()
                })
                .collect();
            json.scalar("form", form.to_string())
                .scalar("numerator", form.numerator().to_string())
                .scalar("edges", edges);
            Ok(Output::Raw {
                text: format!("{form}\n"),
                json,
            })
        }
        Command::DualDegree { input, projected } => {
            let p = load_polygon(&input)?;
            let mut d = Doc::new();
            d.scalar("dual_degree_normal", int_value(&dual_degree_normal(&p)?));
            if projected {
                let pd = input.pd.ok_or_else(|| {
                    Failure::Usage("--projected needs the polygon given as --pd".into())
                })?;
                d.scalar(
                    "dual_degree_projected",
                    int_value(&dual_degree_projected(pd)?),
                );
            }
            Ok(Output::Doc(d))
        }
        Command::Report { d_range } => report(&d_range),
        Command::Normalize { input } => {
            let a = load_config(&input)?.normalize()?;
            let mut json = Doc::new();
            json.push("matrix", int_matrix_field(a.matrix()));
            Ok(Output::Raw {
                text: a.matrix().to_text(),
                json,
            })
        }
    }
}

fn verify(
    input: &MatrixInput,
    k: usize,
    point: Option<String>,
    samples: usize,
    seed: u64,
) -> Outcome {
    let a = load_config(input)?;
    let dim = a.matrix().nrows() - 1;
    let mut points = vec![parse_point(point.as_deref(), dim)?];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let coords = (0..dim)
            .map(|_| {
                let p: i64 = rng.gen_range(1..=100);
                let q: i64 = rng.gen_range(1..=100);
                BigRational::new(p.into(), q.into())
            })
            .collect();
        points.push(TorusPoint::new(coords)?);
    }
    let mut all_hold = true;
    let mut checks = Vec::new();
    let mut matrix = None;
    for t in &points {
        let r = verify_interpolant(&a, k, t)?;
        all_hold &= r.holds();
        let mut d = Doc::new();
        d.scalar("point", t.to_string())
            .scalar("contains", r.contains)
            .scalar("tangent_equals_osculating", r.tangent_equals_osculating)
            .scalar("osculating_dim", r.osculating_dim);
        checks.push(d);
        matrix.get_or_insert(r.interpolant_matrix);
    }
    let mut d = Doc::new();
    d.scalar("k", k)
        .push(
            "interpolant_matrix",
            int_matrix_field(&matrix.expect("at least one point")),
        )
        .push("checks", Field::List(checks))
        .scalar("holds", all_hold);
    if all_hold {
        Ok(Output::Doc(d))
    } else {
        Err(Failure::VerifyFailed(Output::Doc(d)))
    }
}

fn curve(ell: &str, k: usize) -> Outcome {
    let ell: Vec<i64> = ell
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Failure::Usage(format!("bad exponent `{s}`")))
        })
        .collect::<Result<_, _>>()?;
    let a = Configuration::curve(&ell)?;
    let ak = build_ak(&a, k)?;
    let akt = build_ak_tilde(&a, k)?;
    let mut d = Doc::new();
    let ell_values: Vec<Value> = ell.iter().map(|&l| l.into()).collect();
    d.scalar("ell", ell_values)
        .scalar("k", k)
        .scalar("degree", int_value(&a.degree()?))
        .push("interpolant", int_matrix_field(&ak))
        .push("interpolant_tilde", int_matrix_field(&akt));
    if ell.len() >= 3 {
        d.scalar("cyclic_volume", int_value(&cyclic_volume(&ell)?))
            .scalar("cyclic_count", int_value(&cyclic_count(&ell)?));
    }
    d.scalar("interpolant_positroid", is_positroid(&ak)?)
        .scalar("interpolant_tilde_positroid", is_positroid(&akt)?);
    Ok(Output::Doc(d))
}

fn polygon(input: &PolygonInput, all: bool) -> Outcome {
    let p = load_polygon(input)?;
    let mut d = Doc::new();
    d.push(
        "vertices",
        Field::Block {
            text: p.to_text(),
            json: Value::Array(
                p.vertices()
                    .iter()
                    .map(|v| vec![int_value(&v.x), int_value(&v.y)].into())
                    .collect(),
            ),
        },
    )
    .scalar("normalized_area", int_value(&p.normalized_area()))
    .scalar("boundary_length", int_value(&p.boundary_length()))
    .scalar("lattice_points", int_value(&p.lattice_point_count()))
    .scalar("interior_points", int_value(&p.interior_point_count()));
    if all {
        let mut list = Vec::new();
        for v in p.vertices() {
            let mut vd = Doc::new();
            vd.scalar("vertex", vec![int_value(&v.x), int_value(&v.y)])
                .scalar("multiplicity", int_value(&vertex_multiplicity(&p, v)?))
                .scalar(
                    "euler_obstruction",
                    int_value(&euler_obstruction_vertex(&p, v)?),
                );
            list.push(vd);
        }
        d.push("vertex_data", Field::List(list));
    }
    Ok(Output::Doc(d))
}

fn report(range: &str) -> Outcome {
    let bad = || Failure::Usage(format!("bad range `{range}`, expected `a..b`"));
    let (a, b) = range.split_once("..").ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    let reports = (a..=b)
        .into_par_iter()
        .map(surface_report)
        .collect::<Result<Vec<_>, _>>()?;
    let docs = reports
        .iter()
        .map(|r| value_doc(&serde_json::to_value(r).expect("serializable")))
        .collect();
    let mut d = Doc::new();
    d.push("reports", Field::List(docs));
    Ok(Output::Doc(d))
}

/// Converts a JSON object into a document, keeping field order.
fn value_doc(v: &Value) -> Doc {
    let mut d = Doc::new();
    if let Value::Object(map) = v {
        for (k, x) in map {
            match x {
                Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => {
                    d.push(k, Field::List(items.iter().map(value_doc).collect()));
                }
                Value::Object(_) => {
                    d.push(k, Field::Doc(value_doc(x)));
                }
                other => {
                    d.scalar(k, other.clone());
                }
            }
        }
    }
    d
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_matrix(input: &MatrixInput) -> Result<IntMatrix, Failure> {
    if let Some(path) = &input.matrix {
        return Ok(Matrix::parse_text(&read_file(path)?)?);
    }
    let inline = input.rows.as_deref().expect("clap enforces one input");
    let rows = inline
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|s| {
                    s.trim()
                        .parse::<Int>()
                        .map_err(|_| Error::Parse(format!("bad matrix entry `{s}`")))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let width = rows[0].len();
    if rows.iter().any(|r| r.len() != width) {
        return Err(Error::Parse("inline rows have different lengths".into()).into());
    }
    Ok(Matrix::from_rows(rows)?)
}

fn load_config(input: &MatrixInput) -> Result<Configuration, Failure> {
    Ok(Configuration::validate(load_matrix(input)?)?)
}

fn load_polygon(input: &PolygonInput) -> Result<LatticePolygon, Failure> {
    if let Some(d) = input.pd {
        return Ok(p_polygon(d)?);
    }
    if let Some(path) = &input.file {
        return Ok(LatticePolygon::parse_text(&read_file(path)?)?);
    }
    let text = input
        .points
        .as_deref()
        .expect("clap enforces one input")
        .replace(',', " ")
        .replace(';', "\n");
    Ok(toric_core::polygon::convex_hull(&parse_points(&text)?)?)
}

fn parse_point(point: Option<&str>, dim: usize) -> Result<TorusPoint, Failure> {
    let t = match point {
        Some(s) => TorusPoint::parse(s)?,
        None => TorusPoint::identity(dim),
    };
    if t.dim() != dim {
        return Err(Error::DimensionMismatch(format!(
            "point has {} coordinates, need {dim}",
            t.dim()
        ))
        .into());
    }
    Ok(t)
}

fn rat(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

/// JSON number when it fits in `i64`, decimal string otherwise.
fn int_value(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => v.into(),
        None => x.to_string().into(),
    }
}

fn int_matrix_field(m: &IntMatrix) -> Field {
    let json = Value::Array(
        m.row_iter()
            .map(|r| Value::Array(r.iter().map(int_value).collect()))
            .collect(),
    );
    Field::Block {
        text: m.to_text(),
        json,
    }
}

fn rat_matrix_field(m: &Matrix<BigRational>) -> Field {
    let json = Value::Array(
        m.row_iter()
            .map(|r| Value::Array(r.iter().map(|x| x.to_string().into()).collect()))
            .collect(),
    );
    Field::Block {
        text: m.to_text(),
        json,
    }
}
