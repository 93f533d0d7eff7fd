//! Command-line front end: structure, spectrum and verify subcommands.
//!
//! Exit codes: 0 success (including documented-degenerate parameters),
//! 1 genuine mismatch on a verified range, 2 invalid parameters or usage,
//! 3 group-order budget exceeded.

use centspec::closed_forms::family_spectrum;
use centspec::graph::{
    centralizer_graph, clique_decomposition, cocentralizer_graph, claimed_structure, GraphVariant,
};
use centspec::group::{build_group, GroupSpec};
use centspec::matrix::{IntMatrix, MatrixKind};
use centspec::output::{
    spectrum_doc, structure_doc, OutputDocument, Payload, ReportDoc, SweepDoc,
};
use centspec::spectrum::extract_spectrum_bounded;
use centspec::verify::{
    is_degenerate_parameter, sweep, VerifyError, DEFAULT_BUDGET,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_MISMATCH: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "centspec",
    about = "Exact spectra of centralizer and co-centralizer graphs of finite non-abelian groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Computed vs claimed clique structure of the centralizer graph
    Structure {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, value_enum, default_value_t = VariantArg::Centralizer)]
        variant: VariantArg,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Exact spectrum of one (graph, matrix) choice
    Spectrum {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, value_enum, default_value_t = VariantArg::Centralizer)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = KindArg::Adjacency)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = SourceArg::Oracle)]
        source: SourceArg,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Full verification of one instance or of parameter ranges (a..b inclusive)
    Verify {
        #[command(flatten)]
        target: TargetArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Args)]
struct TargetArgs {
    /// Group family
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Parameter n (quaternion, dihedral, quasidihedral); verify accepts a..b
    #[arg(long)]
    n: Option<String>,
    /// Parameter p (metacyclic); verify accepts a..b
    #[arg(long)]
    p: Option<String>,
    /// Parameter q (metacyclic); verify accepts a..b
    #[arg(long)]
    q: Option<String>,
    /// Parameter k (psl); verify accepts a..b
    #[arg(long)]
    k: Option<String>,
}

#[derive(Args)]
struct CommonArgs {
    /// Maximum group order (overrides SPECTRA_BUDGET, default 100000)
    #[arg(long)]
    budget: Option<u128>,
    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Annotate residual factors with approximate real roots
    #[arg(long)]
    approx: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Quaternion,
    Dihedral,
    Quasidihedral,
    Metacyclic,
    Psl,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Centralizer,
    Cocentralizer,
}

impl From<VariantArg> for GraphVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Centralizer => GraphVariant::Centralizer,
            VariantArg::Cocentralizer => GraphVariant::CoCentralizer,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Adjacency,
    Laplacian,
    #[value(name = "signless-laplacian", alias = "signless")]
    SignlessLaplacian,
}

impl From<KindArg> for MatrixKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Adjacency => MatrixKind::Adjacency,
            KindArg::Laplacian => MatrixKind::Laplacian,
            KindArg::SignlessLaplacian => MatrixKind::SignlessLaplacian,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SourceArg {
    Oracle,
    #[value(name = "closed-form", alias = "closed")]
    ClosedForm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

struct UsageError(String);

/// Inclusive range "a..b" or single value "a".
fn parse_range(text: &str, name: &str) -> Result<Vec<u64>, UsageError> {
    let parse_one = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| UsageError(format!("--{name}: cannot parse {s:?} as an integer")))
    };
    let values = if let Some((lo, hi)) = text.split_once("..") {
        let lo = parse_one(lo)?;
        let hi = parse_one(hi)?;
        if lo > hi {
            return Err(UsageError(format!("--{name}: empty range {text:?}")));
        }
        (lo..=hi).collect()
    } else {
        vec![parse_one(text)?]
    };
    if values.iter().any(|&v| v > u32::MAX as u64) {
        return Err(UsageError(format!("--{name}: value out of range")));
    }
    Ok(values)
}

impl TargetArgs {
    fn expand(&self) -> Result<Vec<GroupSpec>, UsageError> {
        let need = |opt: &Option<String>, name: &str| -> Result<Vec<u64>, UsageError> {
            match opt {
                Some(text) => parse_range(text, name),
                None => Err(UsageError(format!(
                    "--{name} is required for --family {}",
                    family_name(self.family)
                ))),
            }
        };
        let reject = |opt: &Option<String>, name: &str| -> Result<(), UsageError> {
            if opt.is_some() {
                return Err(UsageError(format!(
                    "--{name} does not apply to --family {}",
                    family_name(self.family)
                )));
            }
            Ok(())
        };
        match self.family {
            FamilyArg::Quaternion | FamilyArg::Dihedral | FamilyArg::Quasidihedral => {
                reject(&self.p, "p")?;
                reject(&self.q, "q")?;
                reject(&self.k, "k")?;
                let ns = need(&self.n, "n")?;
                Ok(ns
                    .into_iter()
                    .map(|n| match self.family {
                        FamilyArg::Quaternion => GroupSpec::GeneralizedQuaternion { n },
                        FamilyArg::Dihedral => GroupSpec::Dihedral { n },
                        FamilyArg::Quasidihedral => GroupSpec::Quasidihedral { n: n as u32 },
                        _ => unreachable!(),
                    })
                    .collect())
            }
            FamilyArg::Metacyclic => {
                reject(&self.n, "n")?;
                reject(&self.k, "k")?;
                let ps = need(&self.p, "p")?;
                let qs = need(&self.q, "q")?;
                Ok(ps
                    .iter()
                    .flat_map(|&p| qs.iter().map(move |&q| GroupSpec::Metacyclic { p, q }))
                    .collect())
            }
            FamilyArg::Psl => {
                reject(&self.n, "n")?;
                reject(&self.p, "p")?;
                reject(&self.q, "q")?;
                let ks = need(&self.k, "k")?;
                Ok(ks
                    .into_iter()
                    .map(|k| GroupSpec::ProjectiveSpecialLinear { k: k as u32 })
                    .collect())
            }
        }
    }

    fn single(&self) -> Result<GroupSpec, UsageError> {
        let specs = self.expand()?;
        if specs.len() != 1 {
            return Err(UsageError(
                "this command takes single parameter values, not ranges".to_string(),
            ));
        }
        Ok(specs[0])
    }
}

fn family_name(f: FamilyArg) -> &'static str {
    match f {
        FamilyArg::Quaternion => "quaternion",
        FamilyArg::Dihedral => "dihedral",
        FamilyArg::Quasidihedral => "quasidihedral",
        FamilyArg::Metacyclic => "metacyclic",
        FamilyArg::Psl => "psl",
    }
}

fn resolve_budget(flag: Option<u128>) -> u128 {
    if let Some(b) = flag {
        return b;
    }
    if let Ok(text) = std::env::var("SPECTRA_BUDGET") {
        if let Ok(b) = text.parse::<u128>() {
            return b;
        }
        eprintln!("warning: ignoring unparsable SPECTRA_BUDGET={text:?}");
    }
    DEFAULT_BUDGET
}

fn command_echo() -> String {
    std::env::args().skip(1).collect::<Vec<_>>().join(" ")
}

fn exit_code_for(err: &VerifyError) -> u8 {
    match err {
        VerifyError::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_INVALID,
    }
}

fn check_budget(spec: GroupSpec, budget: u128) -> Result<(), VerifyError> {
    spec.validate()?;
    if spec.order() > budget {
        return Err(VerifyError::BudgetExceeded {
            order: spec.order(),
            budget,
        });
    }
    Ok(())
}

fn run_structure(
    target: &TargetArgs,
    variant: VariantArg,
    common: &CommonArgs,
) -> Result<(OutputDocument, u8), (String, u8)> {
    if common.format == FormatArg::Csv {
        return Err(("csv output is only available for verify sweeps".into(), EXIT_INVALID));
    }
    let spec = target.single().map_err(|e| (e.0, EXIT_INVALID))?;
    let budget = resolve_budget(common.budget);
    check_budget(spec, budget).map_err(|e| (e.to_string(), exit_code_for(&e)))?;
    let variant: GraphVariant = variant.into();
    let group = build_group(spec).map_err(|e| (e.to_string(), EXIT_INVALID))?;
    let graph = match variant {
        GraphVariant::Centralizer => centralizer_graph(&group),
        GraphVariant::CoCentralizer => cocentralizer_graph(&group),
    }
    .map_err(|e| (e.to_string(), EXIT_INVALID))?;
    // the co-centralizer graph is described by the same part sizes, read as
    // complete-multipartite parts, so the decomposition always runs on the
    // centralizer graph
    let cent = match variant {
        GraphVariant::Centralizer => graph,
        GraphVariant::CoCentralizer => graph.complement(),
    };
    let computed = clique_decomposition(&cent).map_err(|e| (e.to_string(), EXIT_INVALID))?;
    let claimed = claimed_structure(spec, variant).map_err(|e| (e.to_string(), EXIT_INVALID))?;
    let doc = structure_doc(
        spec,
        variant,
        computed.parts(),
        claimed.parts(),
        is_degenerate_parameter(spec),
    );
    Ok((
        OutputDocument::new(command_echo(), Payload::Structure(doc)),
        EXIT_OK,
    ))
}

fn run_spectrum(
    target: &TargetArgs,
    variant: VariantArg,
    kind: KindArg,
    source: SourceArg,
    common: &CommonArgs,
) -> Result<(OutputDocument, u8), (String, u8)> {
    if common.format == FormatArg::Csv {
        return Err(("csv output is only available for verify sweeps".into(), EXIT_INVALID));
    }
    let spec = target.single().map_err(|e| (e.0, EXIT_INVALID))?;
    let variant: GraphVariant = variant.into();
    let kind: MatrixKind = kind.into();
    let spectrum = match source {
        SourceArg::ClosedForm => {
            family_spectrum(spec, variant, kind).map_err(|e| (e.to_string(), EXIT_INVALID))?
        }
        SourceArg::Oracle => {
            let budget = resolve_budget(common.budget);
            check_budget(spec, budget).map_err(|e| (e.to_string(), exit_code_for(&e)))?;
            let group = build_group(spec).map_err(|e| (e.to_string(), EXIT_INVALID))?;
            let graph = match variant {
                GraphVariant::Centralizer => centralizer_graph(&group),
                GraphVariant::CoCentralizer => cocentralizer_graph(&group),
            }
            .map_err(|e| (e.to_string(), EXIT_INVALID))?;
            let m = IntMatrix::of_graph(&graph, kind);
            extract_spectrum_bounded(&m.char_poly(), m.inf_norm())
        }
    };
    let source_name = match source {
        SourceArg::Oracle => "oracle",
        SourceArg::ClosedForm => "closed_form",
    };
    let doc = spectrum_doc(spec, variant, kind, source_name, &spectrum, common.approx);
    Ok((
        OutputDocument::new(command_echo(), Payload::Spectrum(doc)),
        EXIT_OK,
    ))
}

fn run_verify(target: &TargetArgs, common: &CommonArgs) -> Result<(String, u8), (String, u8)> {
    let specs = target.expand().map_err(|e| (e.0, EXIT_INVALID))?;
    let budget = resolve_budget(common.budget);
    let results = sweep(&specs, budget);

    let mut code = EXIT_OK;
    for (_, res) in &results {
        match res {
            Ok(report) if !report.is_expected() => {
                code = EXIT_MISMATCH;
                break;
            }
            _ => {}
        }
    }
    if code == EXIT_OK {
        for (_, res) in &results {
            if let Err(e) = res {
                code = code.max(match e {
                    VerifyError::BudgetExceeded { .. } => EXIT_BUDGET,
                    _ => EXIT_INVALID,
                });
            }
        }
    }

    let rendered = if specs.len() == 1 && common.format == FormatArg::Json {
        match &results[0].1 {
            Ok(report) => OutputDocument::new(
                command_echo(),
                Payload::Report(ReportDoc::from_report(report, common.approx)),
            )
            .to_json(),
            Err(e) => return Err((e.to_string(), exit_code_for(e))),
        }
    } else {
        let doc = SweepDoc::from_results(&results, common.approx);
        match common.format {
            FormatArg::Json => {
                OutputDocument::new(command_echo(), Payload::Sweep(doc)).to_json()
            }
            FormatArg::Csv => doc.to_csv(),
        }
    };
    Ok((rendered, code))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Structure {
            target,
            variant,
            common,
        } => run_structure(target, *variant, common).map(|(doc, code)| (doc.to_json(), code)),
        Command::Spectrum {
            target,
            variant,
            kind,
            source,
            common,
        } => run_spectrum(target, *variant, *kind, *source, common)
            .map(|(doc, code)| (doc.to_json(), code)),
        Command::Verify { target, common } => run_verify(target, common),
    };
    match outcome {
        Ok((text, code)) => {
            if text.ends_with('\n') {
                print!("{text}");
            } else {
                println!("{text}");
            }
            ExitCode::from(code)
        }
        Err((msg, code)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
