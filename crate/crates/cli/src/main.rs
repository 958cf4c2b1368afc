use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use pregerst_core::eval::{eval_expr, parse_view, Op};
use pregerst_core::{
    run_suite, AlgebraModel, FormalModel, FormsModel, GeneratorRegistry, ModelKind, Mutation,
    ReportFormat, SuiteConfig, SuiteId,
};

#[derive(Parser)]
#[command(name = "pregerst", version, about = "Exact checks of pre-Gerstenhaber homotopy identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print its report.
    Verify(VerifyArgs),
    /// Apply one operation to an element and print the normalized result.
    Eval(EvalArgs),
    /// List suites, operations and mutations.
    List,
}

#[derive(Args)]
struct ModelArgs {
    /// forms | formal (default: forms when the suite needs products).
    #[arg(long)]
    model: Option<ModelKind>,
    #[arg(long)]
    n_coords: Option<usize>,
    #[arg(long)]
    max_poly_degree: Option<u32>,
    /// Use d = 0 in the forms model instead of the exterior derivative.
    #[arg(long)]
    no_differential: bool,
    /// Formal generator `name=degree` (repeatable).
    #[arg(long = "gen", value_parser = parse_gen)]
    generators: Vec<(String, i32)>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: SuiteId,
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long)]
    max_tensor_len: Option<usize>,
    #[arg(long)]
    max_tail_factors: Option<usize>,
    #[arg(long)]
    max_factor_len: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Cap on the terms of any intermediate; exceeding it aborts the check.
    #[arg(long)]
    max_terms: Option<usize>,
    /// Run with one deliberate breakage switched on.
    #[arg(long)]
    mutation: Option<Mutation>,
    /// text | structured
    #[arg(long, default_value = "text")]
    report: ReportFormat,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long)]
    op: Op,
    #[arg(long)]
    expr: String,
    #[arg(long)]
    expr2: Option<String>,
    /// base | shift1 | shift2 (default: the op's own grading).
    #[arg(long)]
    view: Option<String>,
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_gen(s: &str) -> Result<(String, i32), String> {
    let (name, deg) = s.split_once('=').ok_or_else(|| format!("expected name=degree, got `{s}`"))?;
    let deg = deg.trim().parse().map_err(|_| format!("bad degree in `{s}`"))?;
    Ok((name.trim().to_string(), deg))
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verify(a: VerifyArgs) -> Result<u8> {
    let mut cfg = SuiteConfig::new(a.suite);
    let m = a.model;
    if let Some(v) = m.model {
        cfg.model = v;
    }
    macro_rules! set {
        ($($field:ident <- $val:expr),*) => { $(if let Some(v) = $val { cfg.$field = v; })* };
    }
    set!(n_coords <- m.n_coords, max_poly_degree <- m.max_poly_degree,
         max_tensor_len <- a.max_tensor_len, max_tail_factors <- a.max_tail_factors,
         max_factor_len <- a.max_factor_len, samples <- a.samples, seed <- a.seed,
         max_terms <- a.max_terms);
    cfg.differential = !m.no_differential;
    cfg.generators = m.generators;
    cfg.mutation = a.mutation;
    cfg.report_format = a.report;
    let report = run_suite(&cfg)?;
    emit(&report.render(), a.out.as_ref())?;
    Ok(report.exit_code() as u8)
}

fn model_for_eval(m: &ModelArgs) -> Result<Box<dyn AlgebraModel>> {
    let kind = m
        .model
        .unwrap_or(if m.generators.is_empty() { ModelKind::Forms } else { ModelKind::Formal });
    Ok(match kind {
        ModelKind::Forms => {
            if !m.generators.is_empty() {
                bail!("--gen only applies to the formal model");
            }
            Box::new(
                FormsModel::new(m.n_coords.unwrap_or(3), m.max_poly_degree.unwrap_or(3))?
                    .with_differential(!m.no_differential),
            )
        }
        ModelKind::Formal => {
            let mut r = GeneratorRegistry::new();
            for (name, d) in &m.generators {
                r.insert(name, *d)?;
            }
            Box::new(FormalModel::new(r))
        }
    })
}

fn eval(a: EvalArgs) -> Result<u8> {
    let model = model_for_eval(&a.model)?;
    let view = a.view.as_deref().map(parse_view).transpose()?;
    let out = eval_expr(model.as_ref(), a.op, &a.expr, a.expr2.as_deref(), view)?;
    emit(&format!("{out}\n"), a.out.as_ref())?;
    Ok(0)
}

fn list() -> Result<u8> {
    println!("suites:");
    for s in SuiteId::ALL {
        let m = if s.needs_products() { "forms" } else { "formal|forms" };
        println!("  {:<18} {m}", s.name());
    }
    println!("ops:");
    for o in Op::NAMES {
        println!("  {o}");
    }
    println!("mutations:");
    for m in Mutation::ALL {
        println!("  {m}");
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(a) => verify(a),
        Command::Eval(a) => eval(a),
        Command::List => list(),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
