use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use ccmap::character::{cc_value, verify_triangle};
use ccmap::cluster::{explore, mutate_sequence, ExchangeMatrix, Seed};
use ccmap::forms::{antisym_form_matrix, coindex, index};
use ccmap::grassmannian::{euler_char_with, submodule_classes_with, GrassmannianOptions};
use ccmap::laurent::default_names;
use ccmap::modules::DimVector;
use ccmap::polygon::{verify_an_with, AnOptions};
use ccmap::quiver::{injective, projective};
use ccmap::{Algebra, CCObject, Error, ErrorKind, Representation};

/// Cluster characters from quiver-with-relations data.
#[derive(Parser, Debug)]
#[command(name = "ccmap", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Inspect an algebra file.
    Algebra {
        #[command(subcommand)]
        action: AlgebraAction,
    },
    /// Cluster character of a module, optionally plus shifted projectives.
    Xvalue {
        algebra: PathBuf,
        module: PathBuf,
        /// Vertex labels i of summands ΣT_i; repeat a label for multiplicity.
        #[arg(long, value_delimiter = ',')]
        shifts: Vec<String>,
    },
    /// The antisymmetrized Euler form on simples.
    FormMatrix { algebra: PathBuf },
    /// Index and coindex of a module.
    Index { algebra: PathBuf, module: PathBuf },
    /// Point counts and Euler characteristic of a quiver Grassmannian.
    Grassmannian {
        algebra: PathBuf,
        module: PathBuf,
        /// Dimension vector of the subrepresentations; omit to list every
        /// class with nonzero Euler characteristic.
        #[arg(long, value_delimiter = ',')]
        dim: Vec<usize>,
        /// Primes used for point counting.
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
    },
    /// Apply a sequence of seed mutations (1-based directions).
    Mutate {
        matrix: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        seq: Vec<usize>,
    },
    /// Enumerate cluster variables by breadth-first mutation.
    Enumerate {
        matrix: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        max_seeds: usize,
    },
    /// Check X_L X_M = X_B + X_B' for caller-supplied objects.
    ///
    /// A module argument of `0` stands for the zero module.
    VerifyTriangle {
        algebra: PathBuf,
        l: PathBuf,
        m: PathBuf,
        b: PathBuf,
        b_prime: PathBuf,
        #[arg(long, value_delimiter = ',')]
        shifts_l: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        shifts_m: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        shifts_b: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        shifts_b_prime: Vec<String>,
    },
    /// Exhaustive checks in the polygon model of type A_n.
    VerifyAn {
        #[arg(long)]
        n: usize,
        /// Verify only the first K crossing pairs.
        #[arg(long)]
        max_pairs: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum AlgebraAction {
    /// Dimensions of the algebra and of its indecomposable projectives and injectives.
    Check { algebra: PathBuf },
}

struct Outcome {
    text: String,
    passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e.kind() {
                ErrorKind::Input => 2,
                ErrorKind::Resource | ErrorKind::Consistency => 3,
            })
        }
    }
}

fn run(cmd: Command) -> Result<Outcome, Error> {
    match cmd {
        Command::Algebra {
            action: AlgebraAction::Check { algebra },
        } => algebra_check(&algebra),
        Command::Xvalue {
            algebra,
            module,
            shifts,
        } => {
            let a = Algebra::load(&algebra)?;
            let obj = object(&a, &module, &shifts)?;
            let x = cc_value(&obj)?;
            let names = a.variable_names();
            Ok(Outcome::ok(format!(
                "fraction: {}\nlaurent: {}\n",
                x.render_fraction(&names),
                x.render_with(&names)
            )))
        }
        Command::FormMatrix { algebra } => {
            let a = Algebra::load(&algebra)?;
            Ok(Outcome::ok(antisym_form_matrix(&a)?.to_string()))
        }
        Command::Index { algebra, module } => {
            let a = Algebra::load(&algebra)?;
            let m = Representation::load_with(&module, a.clone())?;
            let labels = a.quiver().vertices().to_vec();
            Ok(Outcome::ok(format!(
                "index: {}\ncoindex: {}\n",
                index(&m)?.render("P", &labels),
                coindex(&m)?.render("P", &labels)
            )))
        }
        Command::Grassmannian {
            algebra,
            module,
            dim,
            primes,
        } => {
            let a = Algebra::load(&algebra)?;
            let m = Representation::load_with(&module, a)?;
            let opts = if primes.is_empty() {
                GrassmannianOptions::default()
            } else {
                GrassmannianOptions::with_primes(primes)?
            };
            if dim.is_empty() {
                let mut text = String::new();
                for (e, chi) in submodule_classes_with(&m, &opts)? {
                    writeln!(text, "e = {e}: chi {chi}").unwrap();
                }
                return Ok(Outcome::ok(text));
            }
            let r = euler_char_with(&m, &DimVector(dim.clone()), &opts)?;
            let mut text = format!("e = {}\n", DimVector(dim));
            for (p, c) in &r.counts {
                writeln!(text, "#Gr_e(F_{p}) = {c}").unwrap();
            }
            writeln!(text, "counting polynomial: {}", r.polynomial).unwrap();
            writeln!(text, "chi: {}", r.chi).unwrap();
            Ok(Outcome::ok(text))
        }
        Command::Mutate { matrix, seq } => {
            let b = ExchangeMatrix::load(&matrix)?;
            let n = b.size();
            let zero_based = seq
                .iter()
                .map(|&k| {
                    if k == 0 || k > n {
                        Err(Error::InvalidArgument(format!("direction {k} out of range 1..={n}")))
                    } else {
                        Ok(k - 1)
                    }
                })
                .collect::<Result<Vec<_>, _>>()?;
            let s = mutate_sequence(&Seed::initial(b), &zero_based)?;
            let names = default_names(n);
            let mut text = String::from("matrix:\n");
            text.push_str(&s.matrix.to_string());
            text.push_str("cluster:\n");
            for (name, v) in names.iter().zip(&s.variables) {
                writeln!(text, "{name}' = {}", v.render_fraction(&names)).unwrap();
            }
            Ok(Outcome::ok(text))
        }
        Command::Enumerate { matrix, max_seeds } => {
            let b = ExchangeMatrix::load(&matrix)?;
            let ex = explore(&b, max_seeds)?;
            let names = default_names(b.size());
            let mut text = format!("{} seeds, {} cluster variables\n", ex.seeds, ex.variables.len());
            for v in &ex.variables {
                writeln!(text, "{}", v.render_fraction(&names)).unwrap();
            }
            Ok(Outcome::ok(text))
        }
        Command::VerifyTriangle {
            algebra,
            l,
            m,
            b,
            b_prime,
            shifts_l,
            shifts_m,
            shifts_b,
            shifts_b_prime,
        } => {
            let a = Algebra::load(&algebra)?;
            let report = verify_triangle(
                &object(&a, &l, &shifts_l)?,
                &object(&a, &m, &shifts_m)?,
                &object(&a, &b, &shifts_b)?,
                &object(&a, &b_prime, &shifts_b_prime)?,
            )?;
            Ok(Outcome {
                text: report.render(&a.variable_names()) + "\n",
                passed: report.holds,
            })
        }
        Command::VerifyAn { n, max_pairs } => {
            let opts = AnOptions {
                max_pairs,
                ..AnOptions::default()
            };
            let report = verify_an_with(n, &opts)?;
            Ok(Outcome {
                text: report.to_string(),
                passed: report.passed(),
            })
        }
    }
}

fn algebra_check(path: &Path) -> Result<Outcome, Error> {
    let a = Algebra::load(path)?;
    let q = a.quiver();
    let mut text = format!(
        "{} vertices, {} arrows, {} relations\ndim B = {}\n",
        q.vertex_count(),
        q.arrows().len(),
        a.relations().len(),
        a.dimension()
    );
    for (i, label) in q.vertices().iter().enumerate() {
        writeln!(text, "P_{label}: {}", projective(&a, i).dim_vector()).unwrap();
    }
    for (i, label) in q.vertices().iter().enumerate() {
        writeln!(text, "I_{label}: {}", injective(&a, i).dim_vector()).unwrap();
    }
    Ok(Outcome::ok(text))
}

fn object(a: &Arc<Algebra>, module: &Path, shifts: &[String]) -> Result<CCObject, Error> {
    let rep = if module.as_os_str() == "0" {
        Representation::zero(a.clone())
    } else {
        Representation::load_with(module, a.clone())?
    };
    let mut mult = vec![0u32; a.vertex_count()];
    for label in shifts {
        let i = a
            .quiver()
            .vertex_index(label)
            .ok_or_else(|| Error::UnknownVertex(label.clone()))?;
        mult[i] += 1;
    }
    CCObject::new(rep, mult)
}
