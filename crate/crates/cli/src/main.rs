//! `verify`: run the identity registry, print a fixed-width table, and
//! optionally write a JSON report.
//!
//! Exit codes: 0 when every selected check passes, 1 on any failure,
//! 2 on usage errors (unknown flags or ids).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use loggamma::identities::{registry, run_all, select, IdentitySpec, RunParams};

#[derive(Parser, Debug)]
#[command(
    name = "verify",
    about = "Verify closed-form identities of the log-gamma Fourier expansion",
    version
)]
struct Args {
    /// Run only these identity ids (comma separated, e.g. L1,T3,P1)
    #[arg(long, value_delimiter = ',', value_name = "ID[,ID...]")]
    only: Option<Vec<String>>,

    /// List registry ids with their statements and exit
    #[arg(long)]
    list: bool,

    /// Override every identity's tolerance
    #[arg(long, value_name = "X")]
    tolerance: Option<f64>,

    /// Term budget for summation engines
    #[arg(long, value_name = "N", default_value_t = loggamma::series::DEFAULT_MAX_TERMS)]
    max_terms: u64,

    /// Evaluation budget for quadrature engines
    #[arg(long, value_name = "N", default_value_t = loggamma::quadrature::DEFAULT_MAX_EVALS)]
    max_evals: u64,

    /// Write the machine-readable report to this path
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

/// 15 significant digits; scientific notation below 1e-3.
fn fmt_value(v: f64) -> String {
    if v.is_nan() {
        return "NaN".to_string();
    }
    let mag = v.abs();
    if mag == 0.0 {
        return "0.00000000000000".to_string();
    }
    if mag < 1e-3 || mag >= 1e15 {
        return format!("{v:.14e}");
    }
    let digits_before = mag.log10().floor() as i32 + 1;
    let decimals = (15 - digits_before).clamp(0, 17) as usize;
    format!("{v:.decimals$}")
}

fn print_list(specs: &[IdentitySpec]) {
    println!("{:<6} {}", "ID", "STATEMENT");
    for spec in specs {
        println!("{:<6} {}", spec.id, spec.statement);
    }
}

fn print_table(report: &loggamma::identities::Report, specs: &[IdentitySpec]) {
    println!(
        "{:<6} {:<46} {:>22} {:>22} {:>12} {:>5}",
        "ID", "DESCRIPTION", "LHS", "RHS", "ABS_ERR", "PASS"
    );
    for r in &report.results {
        let description = specs
            .iter()
            .find(|s| s.id == r.id)
            .map(|s| s.description)
            .unwrap_or("");
        let mut desc = description.to_string();
        if desc.len() > 46 {
            desc.truncate(43);
            desc.push_str("...");
        }
        println!(
            "{:<6} {:<46} {:>22} {:>22} {:>12} {:>5}",
            r.id,
            desc,
            fmt_value(r.lhs_value),
            fmt_value(r.rhs_value),
            format!("{:.3e}", r.abs_err),
            if r.pass { "ok" } else { "FAIL" }
        );
        if let Some(note) = &r.error {
            println!("       note: {note}");
        }
    }
    println!(
        "\n{} of {} identities pass",
        report.results.iter().filter(|r| r.pass).count(),
        report.results.len()
    );
}

fn main() -> ExitCode {
    let args = Args::parse();
    let specs = registry();

    if args.list {
        print_list(&specs);
        return ExitCode::SUCCESS;
    }

    if args.max_terms == 0 || args.max_evals == 0 {
        eprintln!("error: budgets must be positive");
        return ExitCode::from(2);
    }
    if let Some(t) = args.tolerance {
        if !(t > 0.0) {
            eprintln!("error: --tolerance must be positive, got {t}");
            return ExitCode::from(2);
        }
    }

    let selected: Vec<&IdentitySpec> = match &args.only {
        None => specs.iter().collect(),
        Some(ids) => match select(&specs, ids) {
            Ok(list) => list,
            Err(unknown) => {
                eprintln!("error: unknown identity id(s): {}", unknown.join(", "));
                eprintln!("hint: `verify --list` prints the registry");
                return ExitCode::from(2);
            }
        },
    };

    let params = RunParams {
        tolerance_override: args.tolerance,
        max_terms: args.max_terms,
        max_evals: args.max_evals,
    };

    // run_all wants a slice of owned specs; rebuild the selected subset
    let subset: Vec<IdentitySpec> = {
        let wanted: Vec<&str> = selected.iter().map(|s| s.id).collect();
        registry()
            .into_iter()
            .filter(|s| wanted.contains(&s.id))
            .collect()
    };
    let report = run_all(&subset, &params);

    print_table(&report, &specs);

    if let Some(path) = &args.json {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }

    if report.all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
