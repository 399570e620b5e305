use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use fpkz::acceptance::run_all;
use fpkz::analysis::{leading_prediction, verify_determinant};
use fpkz::construct::hypergeometric_solution;
use fpkz::fp::gamma_fp;
use fpkz::oracle::{reduce_to_hypergeometric, solve_homogeneous_with, Reduction, DEFAULT_CAP};
use fpkz::report::{self, Document, ReduceBody};
use fpkz::{Error, Exec, KzInstance, Permutation, Poly, PrimeField, VecPoly};

#[derive(Parser)]
#[command(name = "fpkz", version, about = "Polynomial solutions of KZ equations over F_p")]
struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct InstanceArgs {
    /// Odd prime p.
    #[arg(short = 'p')]
    p: u64,
    /// Denominator q, coprime to p.
    #[arg(short = 'q')]
    q: u64,
    /// Comma-separated weights m_1,...,m_n.
    #[arg(short = 'm', value_delimiter = ',', num_args = 1..)]
    m: Vec<u32>,
}

impl InstanceArgs {
    fn instance(&self) -> Result<KzInstance, Error> {
        KzInstance::new(self.p, self.q, &self.m)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Derived data: M, r, ampleness, i(l) and degrees.
    Info(InstanceArgs),
    /// The hypergeometric solution I^[l].
    Solve {
        #[command(flatten)]
        inst: InstanceArgs,
        #[arg(long)]
        l: usize,
    },
    /// Check a polynomial vector against the system.
    Verify {
        #[command(flatten)]
        inst: InstanceArgs,
        #[arg(long = "in")]
        input: String,
    },
    /// Leading term of I^[l] under a variable ordering.
    Leading {
        #[command(flatten)]
        inst: InstanceArgs,
        #[arg(long)]
        l: usize,
        /// One-based ordering, most significant first; identity by default.
        #[arg(long, value_delimiter = ',')]
        sigma: Option<Vec<usize>>,
    },
    /// Determinant of the coordinate matrix against its closed form.
    Det(InstanceArgs),
    /// Basis of all homogeneous solutions of one degree.
    Search {
        #[command(flatten)]
        inst: InstanceArgs,
        #[arg(long)]
        degree: u32,
        /// Maximum number of unknowns.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Express a solution through the hypergeometric solutions.
    Reduce {
        #[command(flatten)]
        inst: InstanceArgs,
        #[arg(long = "in")]
        input: String,
    },
    /// Gamma_{F_p}(x).
    Gamma {
        #[arg(short = 'p')]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        x: i64,
    },
    /// Run the full acceptance grid.
    Selftest {
        /// Run every sweep on the calling thread.
        #[arg(long)]
        sequential: bool,
    },
}

/// Outcome of a command: its output and whether every check held.
struct Outcome {
    text: String,
    json: String,
    passed: bool,
}

impl Outcome {
    fn new<T: Serialize>(kind: &str, body: T, text: String, passed: bool) -> Self {
        Outcome {
            text,
            json: Document::new(kind, body).to_string_pretty(),
            passed,
        }
    }
}

fn tuple(v: &[u32]) -> String {
    let parts: Vec<String> = v.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

fn rows(pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs
        .iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

fn vec_lines(v: &VecPoly) -> String {
    v.coords()
        .iter()
        .enumerate()
        .map(|(i, c)| format!("  f{}: {c}\n", i + 1))
        .collect()
}

fn read_input(path: &str) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Format(format!("{path}: {e}")))
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Info(a) => {
            let inst = a.instance()?;
            let body = report::info(&inst);
            let mut pairs = vec![
                ("M", tuple(&body.big_m)),
                ("sum M", body.sum_big_m.to_string()),
                ("r", body.r.to_string()),
                ("ample", body.ample.to_string()),
            ];
            let labels: Vec<String> = (1..=body.r).map(|l| format!("i({l})")).collect();
            for (label, i) in labels.iter().zip(&body.i_of_l) {
                pairs.push((label, i.to_string()));
            }
            let degree_labels: Vec<String> = (1..=body.r).map(|l| format!("deg I^[{l}]")).collect();
            for (label, d) in degree_labels.iter().zip(&body.degrees) {
                pairs.push((label, d.to_string()));
            }
            Ok(Outcome::new("info", body, rows(&pairs), true))
        }
        Command::Solve { inst, l } => {
            let inst = inst.instance()?;
            let s = hypergeometric_solution(&inst, *l)?;
            let text = format!("I^[{l}], degree {}\n{}", s.degree, vec_lines(&s.poly));
            Ok(Outcome::new("solution", report::solution(&inst, &s), text, true))
        }
        Command::Verify { inst, input } => {
            let inst = inst.instance()?;
            let sol = report::parse_vecpoly(&read_input(input)?)?;
            if sol.field() != inst.field() || sol.len() != inst.n() || sol.arity() != inst.n() {
                return Err(Error::Format("vector does not match the instance".into()));
            }
            let rep = inst.verify_solution(&sol);
            let body = report::verification(&inst, &rep);
            let mut pairs = vec![("algebraic", ok_word(body.algebraic_holds))];
            let labels: Vec<String> = body.equations.iter().map(|e| format!("equation {}", e.j)).collect();
            for (label, e) in labels.iter().zip(&body.equations) {
                pairs.push((label, ok_word(e.holds)));
            }
            pairs.push(("result", verdict(body.passed)));
            let passed = body.passed;
            Ok(Outcome::new("verification", body, rows(&pairs), passed))
        }
        Command::Leading { inst, l, sigma } => {
            let inst = inst.instance()?;
            let sigma = match sigma {
                Some(s) => Permutation::from_one_based(s)?,
                None => Permutation::identity(inst.n()),
            };
            let s = hypergeometric_solution(&inst, *l)?;
            let lt = s.poly.leading_term(&sigma)?;
            let pred = leading_prediction(&inst, *l, &sigma)?;
            let body = report::leading(&inst, &lt, &pred);
            let mono = Poly::monomial(inst.field(), inst.n(), lt.monomial, 1);
            let pairs = vec![
                ("sigma", tuple(&body.sigma.iter().map(|&x| x as u32).collect::<Vec<_>>())),
                ("coefficient", tuple(&body.coeff)),
                ("monomial", mono.to_string()),
                ("i(l) position", body.i_of_l.to_string()),
                ("closed form", verdict(body.prediction_matches)),
            ];
            let passed = body.prediction_matches;
            Ok(Outcome::new("leading", body, rows(&pairs), passed))
        }
        Command::Det(a) => {
            let inst = a.instance()?;
            let rep = verify_determinant(&inst)?;
            let offset = rep.gamma_form_sign_offset.map_or("none".to_string(), |e| e.to_string());
            let pairs = vec![
                ("det", rep.det.to_string()),
                ("closed form", rep.closed_form.to_string()),
                ("equal", rep.equal.to_string()),
                ("ode", ok_word(rep.ode_ok)),
                (
                    "degree",
                    format!(
                        "{} (expected {})",
                        rep.degree.map_or("none".to_string(), |d| d.to_string()),
                        rep.expected_degree
                    ),
                ),
                ("gamma-form offset", offset),
            ];
            let passed = rep.passed();
            Ok(Outcome::new("determinant", report::determinant(&inst, &rep), rows(&pairs), passed))
        }
        Command::Search { inst, degree, cap } => {
            let inst = inst.instance()?;
            let basis = solve_homogeneous_with(&inst, *degree, *cap, |_| true)?;
            let mut text = format!("degree {degree}: dimension {}\n", basis.len());
            for (i, b) in basis.iter().enumerate() {
                text.push_str(&format!("basis vector {}\n{}", i + 1, vec_lines(b)));
            }
            Ok(Outcome::new("search", report::search(&inst, *degree, &basis), text, true))
        }
        Command::Reduce { inst, input } => {
            let inst = inst.instance()?;
            let sol = report::parse_vecpoly(&read_input(input)?)?;
            if sol.field() != inst.field() || sol.len() != inst.n() || sol.arity() != inst.n() {
                return Err(Error::Format("vector does not match the instance".into()));
            }
            let r = reduce_to_hypergeometric(&inst, &sol)?;
            let passed = r.is_reduced();
            let text = match &r {
                Reduction::Reduced(cert) => {
                    let mut t = String::from("reduced\n");
                    for e in cert {
                        t.push_str(&format!("  c_{}: {}\n", e.l, e.coeff));
                    }
                    t
                }
                Reduction::Irreducible { blocking, .. } => {
                    let mono = Poly::monomial(inst.field(), inst.n(), blocking.monomial, 1);
                    format!("irreducible\n  blocking term: {} {mono}\n", tuple(&blocking.coeff_values()))
                }
            };
            let body: ReduceBody = report::reduction(&inst, &r);
            Ok(Outcome::new("reduction", body, text, passed))
        }
        Command::Gamma { p, x } => {
            let f = PrimeField::new(*p)?;
            let value = gamma_fp(*x, f).value();
            let body = report::GammaBody {
                p: f.modulus(),
                x: *x,
                value,
            };
            Ok(Outcome::new("gamma", body, format!("{value}\n"), true))
        }
        Command::Selftest { sequential } => {
            let exec = if *sequential { Exec::Sequential } else { Exec::default() };
            let reports = run_all(exec);
            let mut text = String::new();
            for r in &reports {
                text.push_str(&format!("{r}\n"));
                for f in &r.failures {
                    text.push_str(&format!("      failure: {f}\n"));
                }
            }
            let body = report::selftest(&reports);
            let passed = body.passed;
            Ok(Outcome::new("selftest", body, text, passed))
        }
    }
}

fn ok_word(b: bool) -> String {
    if b { "holds" } else { "fails" }.to_string()
}

fn verdict(b: bool) -> String {
    if b { "pass" } else { "fail" }.to_string()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                print!("{}", out.text);
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
