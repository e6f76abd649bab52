//! Command-line front end: check identities, run constructions, verify
//! representations and operators, explore deformations, and emit the
//! built-in corpus.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check or a
//! report-carrying precondition fails (the report is still emitted), and
//! 2 for malformed input or usage errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use homalg::algebra::{Element, HomAlgebra};
use homalg::construct::{
    commutator_algebra, derived_algebra, prealt_sum, prealt_to_premalcev, untwist_regular,
    yau_twist,
};
use homalg::corpus::{entries, load_example};
use homalg::deform::{check_deformation, find_nijenhuis_elements, trivial_deformation};
use homalg::error::Error;
use homalg::identity::{check_structure, IdentityKind};
use homalg::json::{
    algebra_to_value, corpus_object_to_value, matrix_to_value, read_algebra, read_matrix,
    read_module_input, read_operator, read_representation, representation_to_value,
    to_canonical_string, ModuleInput,
};
use homalg::op::{
    check_kupershmidt, check_nijenhuis, check_rota_baxter, graph_is_subalgebra, kupershmidt_split,
    rota_baxter_split, symplectic_to_premalcev, NijenhuisFlavor, OperatorContext, SplitFlavor,
};
use homalg::rep::{
    check_bimodule, check_representation, coadjoint_rep, dual_representation, semidirect_bimodule,
    semidirect_rep, twist_rep, TwistMode,
};
use homalg::report::CheckReport;
use homalg::scalar::Scalar;

#[derive(Parser)]
#[command(
    name = "homalg",
    version,
    about = "Exact verification of Hom-algebra identities from structure constants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a defining identity of an algebra file.
    Check {
        /// Algebra file.
        algebra: PathBuf,
        /// Identity to check.
        #[arg(long = "as", value_enum)]
        kind: CheckKind,
        /// Report destination; - means stdout.
        #[arg(long, default_value = "-")]
        report: String,
    },
    /// Build a new algebra from an existing one.
    Construct {
        /// Construction to run.
        #[arg(value_enum)]
        what: Construction,
        /// Input algebra file.
        algebra: PathBuf,
        /// Twisting morphism file (yau-twist only).
        #[arg(long)]
        gamma: Option<PathBuf>,
        /// Iteration count for the derived algebra (derived only).
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// Output destination; - means stdout.
        #[arg(short, long, default_value = "-")]
        output: String,
        /// Report destination for failed preconditions; - means stdout.
        #[arg(long, default_value = "-")]
        report: String,
    },
    /// Representation and bimodule commands.
    Rep {
        #[command(subcommand)]
        action: RepCommand,
    },
    /// Operator commands.
    Op {
        #[command(subcommand)]
        action: OpCommand,
    },
    /// One-parameter deformation commands.
    Deform {
        #[command(subcommand)]
        action: DeformCommand,
    },
    /// The built-in example corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusCommand,
    },
}

#[derive(ValueEnum, Clone, Copy)]
enum CheckKind {
    /// Four-variable Hom-Malcev identity (plus antisymmetry).
    Malcev,
    /// Hom-Malcev identity in Jacobian form.
    MalcevJacobian,
    /// Hom-pre-Malcev identity.
    PreMalcev,
    /// Hom-alternative (left and right) identities.
    Alternative,
    /// Hom-pre-alternative identities.
    PreAlternative,
    /// Hom-pre-Lie identity.
    PreLie,
    /// Malcev-admissibility of the commutator.
    MalcevAdmissible,
}

impl CheckKind {
    fn identity(self) -> IdentityKind {
        match self {
            CheckKind::Malcev => IdentityKind::HomMalcevFourVar,
            CheckKind::MalcevJacobian => IdentityKind::HomMalcevJacobianForm,
            CheckKind::PreMalcev => IdentityKind::HomPreMalcev,
            CheckKind::Alternative => IdentityKind::HomAlternative,
            CheckKind::PreAlternative => IdentityKind::HomPreAlternative,
            CheckKind::PreLie => IdentityKind::HomPreLie,
            CheckKind::MalcevAdmissible => IdentityKind::HomMalcevAdmissible,
        }
    }
}

#[derive(ValueEnum, Clone, Copy)]
enum Construction {
    /// Commutator bracket [x, y] = x∘y − y∘x.
    Commutator,
    /// Twist the product and the twist map along a morphism.
    YauTwist,
    /// Invert a regular twist back to the untwisted algebra.
    Untwist,
    /// n-th derived algebra.
    Derived,
    /// Sum ≺ + ≻ of a product pair.
    PrealtSum,
    /// Companion product x·y = x≻y − y≺x of a product pair.
    PrealtSplit,
}

#[derive(Subcommand)]
enum RepCommand {
    /// Verify the representation or bimodule axioms.
    Check {
        /// Representation or bimodule file.
        file: PathBuf,
        /// Report destination; - means stdout.
        #[arg(long, default_value = "-")]
        report: String,
    },
    /// Dual representation on the dual space.
    Dual {
        /// Representation file.
        file: PathBuf,
        /// Output destination; - means stdout.
        #[arg(short, long, default_value = "-")]
        output: String,
        /// Report destination for failed preconditions; - means stdout.
        #[arg(long, default_value = "-")]
        report: String,
    },
    /// Coadjoint representation of an algebra (dual of the adjoint).
    Coadjoint {
        /// Algebra file.
        file: PathBuf,
        /// Output destination; - means stdout.
        #[arg(short, long, default_value = "-")]
        output: String,
        /// Report destination for failed preconditions; - means stdout.
        #[arg(long, default_value = "-")]
        report: String,
    },
    /// Semidirect-product algebra on A ⊕ V.
    Semidirect {
        /// Representation or bimodule file.
        file: PathBuf,
        /// Output destination; - means stdout.
        #[arg(short, long, default_value = "-")]
        output: String,
        /// Report destination for failed preconditions; - means stdout.
        #[arg(long, default_value = "-")]
        report: String,
    },
    /// Twist a representation along the algebra's twist map.
    Twist {
        /// Representation file.
        file: PathBuf,
        /// Twisting recipe.
        #[arg(long, value_enum, default_value_t = Mode::Yau)]
        mode: Mode,
        /// Output destination; - means stdout.
        #[arg(short, long, default_value = "-")]
        output: String,
        /// Report destination for failed preconditions; - means stdout.
        #[arg(long, default_value = "-")]
        report: String,
    },
}

#[derive(ValueEnum, Clone, Copy)]
enum Mode {
    /// ρ̃(x) = ρ(α(x))β over the twisted algebra.
    Yau,
    /// ρ'(x) = ρ(α²(x)) over the unchanged algebra.
    AlphaPower,
}

#[derive(Subcommand)]
enum OpCommand {
    /// Verify an operator condition.
    Check {
        /// Operator file.
        op: PathBuf,
        /// Condition to check.
        #[arg(long = "as", value_enum)]
        kind: OpKind,
        /// Product family for the nijenhuis condition.
        #[arg(long, value_enum, default_value_t = NijFlavor::Malcev)]
        flavor: NijFlavor,
        /// Report destination; - means stdout.
        #[arg(long, default_value = "-")]
        report: String,
    },
    /// Split an operator into its induced pre-algebra.
    Split {
        /// Operator file.
        op: PathBuf,
        /// Bracket family for algebra-source operators.
        #[arg(long, value_enum)]
        flavor: Option<SplitKind>,
        /// Output destination; - means stdout.
        #[arg(short, long, default_value = "-")]
        output: String,
        /// Report destination for failed preconditions; - means stdout.
        #[arg(long, default_value = "-")]
        report: String,
    },
    /// Check that the operator's graph is a subalgebra of the semidirect
    /// product (equivalent to the kupershmidt condition).
    GraphTest {
        /// Operator file (representation context).
        op: PathBuf,
        /// Report destination; - means stdout.
        #[arg(long, default_value = "-")]
        report: String,
    },
    /// Build the pre-Malcev product induced by a symplectic form.
    Symplectic {
        /// Symplectic form as a matrix file.
        omega: PathBuf,
        /// Algebra file.
        algebra: PathBuf,
        /// Output destination; - means stdout.
        #[arg(short, long, default_value = "-")]
        output: String,
        /// Report destination for failed preconditions; - means stdout.
        #[arg(long, default_value = "-")]
        report: String,
    },
}

#[derive(ValueEnum, Clone, Copy)]
enum OpKind {
    /// Kupershmidt condition relative to a module context.
    Kupershmidt,
    /// Rota-Baxter (weight 0) condition on an algebra.
    RotaBaxter,
    /// Nijenhuis condition on an algebra.
    Nijenhuis,
}

#[derive(ValueEnum, Clone, Copy)]
enum NijFlavor {
    /// Bracket family.
    Malcev,
    /// Pre-Malcev family.
    PreMalcev,
}

#[derive(ValueEnum, Clone, Copy)]
enum SplitKind {
    /// x·y = [R(x), y] (pre-Malcev output).
    Malcev,
    /// x≺R(y), R(x)≻y (pre-alternative output).
    Alternative,
}

#[derive(Subcommand)]
enum DeformCommand {
    /// Verify the one-parameter deformation equations for a generator.
    Check {
        /// Base operator as a matrix file.
        t: PathBuf,
        /// Deformation generator as a matrix file.
        gen: PathBuf,
        /// Representation file the operator acts against.
        #[arg(long)]
        context: PathBuf,
        /// Report destination; - means stdout.
        #[arg(long, default_value = "-")]
        report: String,
    },
    /// Search a bounded integer lattice for Nijenhuis elements.
    NijenhuisElements {
        /// Base operator as a matrix file.
        t: PathBuf,
        /// Representation file the operator acts against.
        #[arg(long)]
        context: PathBuf,
        /// Lattice bound: coordinates range over [-bound, bound].
        #[arg(long, default_value_t = 1)]
        bound: i64,
        /// Output destination; - means stdout.
        #[arg(short, long, default_value = "-")]
        output: String,
        /// Report destination for failed preconditions; - means stdout.
        #[arg(long, default_value = "-")]
        report: String,
    },
    /// Generator of the trivial deformation attached to a Nijenhuis element.
    Trivialize {
        /// Base operator as a matrix file.
        t: PathBuf,
        /// Element coordinates, comma- or space-separated (e.g. "0,1,0,0,0").
        #[arg(long)]
        element: String,
        /// Representation file the operator acts against.
        #[arg(long)]
        context: PathBuf,
        /// Output destination; - means stdout.
        #[arg(short, long, default_value = "-")]
        output: String,
        /// Report destination for failed preconditions; - means stdout.
        #[arg(long, default_value = "-")]
        report: String,
    },
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// List the catalogue of built-in entries.
    List,
    /// Emit an entry, optionally at non-default parameters.
    Show {
        /// Entry name (see `corpus list`).
        name: String,
        /// Parameter override, repeatable (e.g. --set a4=2).
        #[arg(long = "set", value_name = "P=V")]
        set: Vec<String>,
        /// Output destination; - means stdout.
        #[arg(short, long, default_value = "-")]
        output: String,
    },
}

fn write_text(dest: &str, text: &str) -> Result<(), Error> {
    if dest == "-" {
        print!("{text}");
        Ok(())
    } else {
        std::fs::write(dest, text).map_err(|e| Error::Io {
            path: dest.to_string(),
            source: e,
        })
    }
}

fn emit_report(report: &CheckReport, dest: &str) -> Result<(), Error> {
    write_text(dest, &report.to_json())
}

fn emit_value(value: &Value, dest: &str) -> Result<(), Error> {
    write_text(dest, &to_canonical_string(value))
}

/// Emits a finished check and turns its verdict into an exit code.
fn finish_check(report: &CheckReport, dest: &str) -> Result<ExitCode, Error> {
    emit_report(report, dest)?;
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn emit_algebra(alg: &HomAlgebra, dest: &str) -> Result<ExitCode, Error> {
    emit_value(&algebra_to_value(alg), dest)?;
    Ok(ExitCode::SUCCESS)
}

fn parse_overrides(pairs: &[String]) -> Result<Vec<(String, Scalar)>, Error> {
    pairs
        .iter()
        .map(|pair| {
            let (name, value) = pair.split_once('=').ok_or_else(|| {
                Error::Input(format!("--set takes name=value pairs, got {pair:?}"))
            })?;
            let scalar = Scalar::parse(value.trim())
                .map_err(|e| Error::Input(format!("--set {name}: {e}")))?;
            Ok((name.trim().to_string(), scalar))
        })
        .collect()
}

fn parse_element(coords: &str) -> Result<Element, Error> {
    let parts: Vec<&str> = coords
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .collect();
    if parts.is_empty() {
        return Err(Error::Input(
            "--element needs comma- or space-separated coordinates".into(),
        ));
    }
    let values = parts
        .iter()
        .map(|p| Scalar::parse(p).map_err(|e| Error::Input(format!("--element: {e}"))))
        .collect::<Result<Vec<Scalar>, Error>>()?;
    Ok(Element(values))
}

fn run_check(algebra: &PathBuf, kind: CheckKind, report_dest: &str) -> Result<ExitCode, Error> {
    let alg = read_algebra(algebra)?;
    let report = check_structure(&alg, kind.identity())?;
    finish_check(&report, report_dest)
}

fn run_construct(
    what: Construction,
    algebra: &PathBuf,
    gamma: Option<&PathBuf>,
    n: u32,
    output: &str,
) -> Result<ExitCode, Error> {
    let alg = read_algebra(algebra)?;
    let built = match what {
        Construction::Commutator => commutator_algebra(&alg)?,
        Construction::YauTwist => {
            let gamma_path = gamma.ok_or_else(|| {
                Error::Input("yau-twist needs --gamma <morphism.json>".into())
            })?;
            yau_twist(&alg, &read_matrix(gamma_path)?)?
        }
        Construction::Untwist => untwist_regular(&alg)?,
        Construction::Derived => derived_algebra(&alg, n)?,
        Construction::PrealtSum => prealt_sum(&alg)?,
        Construction::PrealtSplit => prealt_to_premalcev(&alg)?,
    };
    emit_algebra(&built, output)
}

fn run_rep(action: &RepCommand) -> (String, Result<ExitCode, Error>) {
    match action {
        RepCommand::Check { file, report } => {
            let result = (|| {
                let report_value = match read_module_input(file)? {
                    ModuleInput::Representation(rep) => check_representation(&rep)?,
                    ModuleInput::Bimodule(bm) => check_bimodule(&bm)?,
                };
                finish_check(&report_value, report)
            })();
            (report.clone(), result)
        }
        RepCommand::Dual {
            file,
            output,
            report,
        } => {
            let result = (|| {
                let rep = read_representation(file)?;
                let dual = dual_representation(&rep)?;
                emit_value(&representation_to_value(&dual), output)?;
                Ok(ExitCode::SUCCESS)
            })();
            (report.clone(), result)
        }
        RepCommand::Coadjoint {
            file,
            output,
            report,
        } => {
            let result = (|| {
                let alg = read_algebra(file)?;
                let coadjoint = coadjoint_rep(&alg)?;
                emit_value(&representation_to_value(&coadjoint), output)?;
                Ok(ExitCode::SUCCESS)
            })();
            (report.clone(), result)
        }
        RepCommand::Semidirect {
            file,
            output,
            report,
        } => {
            let result = (|| {
                let built = match read_module_input(file)? {
                    ModuleInput::Representation(rep) => semidirect_rep(&rep)?,
                    ModuleInput::Bimodule(bm) => semidirect_bimodule(&bm)?,
                };
                emit_algebra(&built, output)
            })();
            (report.clone(), result)
        }
        RepCommand::Twist {
            file,
            mode,
            output,
            report,
        } => {
            let result = (|| {
                let rep = read_representation(file)?;
                let mode = match mode {
                    Mode::Yau => TwistMode::Yau,
                    Mode::AlphaPower => TwistMode::AlphaPower,
                };
                let twisted = twist_rep(&rep, mode)?;
                emit_value(&representation_to_value(&twisted), output)?;
                Ok(ExitCode::SUCCESS)
            })();
            (report.clone(), result)
        }
    }
}

fn algebra_context(context: OperatorContext, needed_by: &str) -> Result<HomAlgebra, Error> {
    match context {
        OperatorContext::Algebra(alg) => Ok(alg),
        _ => Err(Error::Input(format!(
            "{needed_by} needs an operator file with \"source\": \"algebra\""
        ))),
    }
}

fn run_op(action: &OpCommand) -> (String, Result<ExitCode, Error>) {
    match action {
        OpCommand::Check {
            op,
            kind,
            flavor,
            report,
        } => {
            let result = (|| {
                let (matrix, context) = read_operator(op)?;
                let report_value = match kind {
                    OpKind::Kupershmidt => check_kupershmidt(&matrix, &context)?,
                    OpKind::RotaBaxter => {
                        let alg = algebra_context(context, "the rota-baxter check")?;
                        check_rota_baxter(&matrix, &alg)?
                    }
                    OpKind::Nijenhuis => {
                        let alg = algebra_context(context, "the nijenhuis check")?;
                        let flavor = match flavor {
                            NijFlavor::Malcev => NijenhuisFlavor::Malcev,
                            NijFlavor::PreMalcev => NijenhuisFlavor::PreMalcev,
                        };
                        check_nijenhuis(&matrix, &alg, flavor)?
                    }
                };
                finish_check(&report_value, report)
            })();
            (report.clone(), result)
        }
        OpCommand::Split {
            op,
            flavor,
            output,
            report,
        } => {
            let result = (|| {
                let (matrix, context) = read_operator(op)?;
                let built = match &context {
                    OperatorContext::Algebra(alg) => {
                        let flavor = match flavor.unwrap_or(SplitKind::Malcev) {
                            SplitKind::Malcev => SplitFlavor::Malcev,
                            SplitKind::Alternative => SplitFlavor::Alternative,
                        };
                        rota_baxter_split(&matrix, alg, flavor)?
                    }
                    _ => {
                        if flavor.is_some() {
                            return Err(Error::Input(
                                "--flavor applies only to algebra-source operators; \
                                 module-source splits are determined by their context"
                                    .into(),
                            ));
                        }
                        kupershmidt_split(&matrix, &context)?
                    }
                };
                emit_algebra(&built, output)
            })();
            (report.clone(), result)
        }
        OpCommand::GraphTest { op, report } => {
            let result = (|| {
                let (matrix, context) = read_operator(op)?;
                let OperatorContext::Representation(rep) = context else {
                    return Err(Error::Input(
                        "the graph test needs an operator file with a representation context"
                            .into(),
                    ));
                };
                let report_value = graph_is_subalgebra(&matrix, &rep)?;
                finish_check(&report_value, report)
            })();
            (report.clone(), result)
        }
        OpCommand::Symplectic {
            omega,
            algebra,
            output,
            report,
        } => {
            let result = (|| {
                let form = read_matrix(omega)?;
                let alg = read_algebra(algebra)?;
                let built = symplectic_to_premalcev(&form, &alg)?;
                emit_algebra(&built, output)
            })();
            (report.clone(), result)
        }
    }
}

fn run_deform(action: &DeformCommand) -> (String, Result<ExitCode, Error>) {
    match action {
        DeformCommand::Check {
            t,
            gen,
            context,
            report,
        } => {
            let result = (|| {
                let base = read_matrix(t)?;
                let generator = read_matrix(gen)?;
                let rep = read_representation(context)?;
                let report_value = check_deformation(&base, &generator, &rep)?;
                finish_check(&report_value, report)
            })();
            (report.clone(), result)
        }
        DeformCommand::NijenhuisElements {
            t,
            context,
            bound,
            output,
            report,
        } => {
            let result = (|| {
                let base = read_matrix(t)?;
                let rep = read_representation(context)?;
                let elements = find_nijenhuis_elements(&base, &rep, *bound)?;
                let listing = Value::Array(
                    elements
                        .iter()
                        .map(|e| {
                            Value::Array(
                                e.as_slice()
                                    .iter()
                                    .map(|c| Value::String(c.to_string()))
                                    .collect(),
                            )
                        })
                        .collect(),
                );
                emit_value(&listing, output)?;
                Ok(ExitCode::SUCCESS)
            })();
            (report.clone(), result)
        }
        DeformCommand::Trivialize {
            t,
            element,
            context,
            output,
            report,
        } => {
            let result = (|| {
                let base = read_matrix(t)?;
                let rep = read_representation(context)?;
                let x = parse_element(element)?;
                let generator = trivial_deformation(&x, &base, &rep)?;
                emit_value(&matrix_to_value(&generator), output)?;
                Ok(ExitCode::SUCCESS)
            })();
            (report.clone(), result)
        }
    }
}

fn run_corpus(action: &CorpusCommand) -> Result<ExitCode, Error> {
    match action {
        CorpusCommand::List => {
            let mut listing = format!(
                "{:<26} {:<16} {:<24} {}\n",
                "NAME", "OBJECT", "PARAMS", "SUMMARY"
            );
            for entry in entries() {
                let params = if entry.params.is_empty() {
                    "-".to_string()
                } else {
                    entry
                        .params
                        .iter()
                        .map(|p| format!("{}={}", p.name, p.default))
                        .collect::<Vec<_>>()
                        .join(", ")
                };
                listing.push_str(&format!(
                    "{:<26} {:<16} {:<24} {}\n",
                    entry.name, entry.object, params, entry.summary
                ));
            }
            write_text("-", &listing)?;
            Ok(ExitCode::SUCCESS)
        }
        CorpusCommand::Show { name, set, output } => {
            let overrides = parse_overrides(set)?;
            let object = load_example(name, &overrides)?;
            emit_value(&corpus_object_to_value(&object), output)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Maps a command result onto the exit-code contract, emitting the carried
/// report when a precondition failed.
fn conclude(report_dest: &str, result: Result<ExitCode, Error>) -> ExitCode {
    match result {
        Ok(code) => code,
        Err(Error::Precondition { name, report }) => {
            eprintln!("error: precondition failed: {name}");
            match emit_report(&report, report_dest) {
                Ok(()) => ExitCode::from(1),
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Check {
            algebra,
            kind,
            report,
        } => conclude(&report, run_check(&algebra, kind, &report)),
        Command::Construct {
            what,
            algebra,
            gamma,
            n,
            output,
            report,
        } => conclude(
            &report,
            run_construct(what, &algebra, gamma.as_ref(), n, &output),
        ),
        Command::Rep { action } => {
            let (report, result) = run_rep(&action);
            conclude(&report, result)
        }
        Command::Op { action } => {
            let (report, result) = run_op(&action);
            conclude(&report, result)
        }
        Command::Deform { action } => {
            let (report, result) = run_deform(&action);
            conclude(&report, result)
        }
        Command::Corpus { action } => conclude("-", run_corpus(&action)),
    }
}
