//! `llt`: LLT coefficients, their Schur expansions, plethysm multiplicities
//! and the verification suites, from the command line.

mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use llt_core::llt::{class_poly, component_split, llt_coefficient, LLTInstance};
use llt_core::partition::{partitions_up_to, Partition};
use llt_core::symfun::{
    a_q_plethysm, csv_table, negativity_scan, plethysm_multiplicity, q_lr_components_table,
    q_lr_table, revalidate_finding, NegativityReport,
};
use llt_core::tableau::StandardTableau;
use llt_core::verify::{run_suite, Bounds, Suite};
use llt_core::{Error, WeightIndexedPoly};

use output::{csv_rows, envelope, poly_json};

/// Largest shape and copy count accepted without `--force`.
const MAX_CELLS: usize = 4;
const MAX_COPIES: usize = 5;

#[derive(Parser)]
#[command(
    name = "llt",
    version,
    about = "Exact LLT coefficients and their q-multinomial expansions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Allow sizes above the default caps (|μ| <= 4, n <= 5).
    #[arg(long)]
    force: bool,
}

#[derive(Subcommand)]
enum Command {
    /// The LLT coefficient G_{μ^n,ν}(q), or one residue component of it.
    Coeff {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        copies: usize,
        #[arg(long)]
        weight: Partition,
        #[arg(long)]
        component: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// q-Littlewood–Richardson coefficients for every ν.
    Schur {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        copies: usize,
        #[arg(long)]
        component: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Plethysm multiplicity for an outer shape, or its q-analogue for a standard tableau.
    Plethysm {
        #[arg(long, conflicts_with = "tableau", required_unless_present = "tableau")]
        outer: Option<Partition>,
        #[arg(long)]
        tableau: Option<StandardTableau>,
        #[arg(long)]
        inner: Partition,
        #[arg(long)]
        weight: Partition,
        #[command(flatten)]
        common: Common,
    },
    /// Run an identity suite over a bounded grid.
    Verify {
        /// theorem-a, theorem-b, foata, h-family, dmu, positivity, components, rs-split, kw or all.
        suite: String,
        #[arg(long)]
        max_cells: Option<usize>,
        #[arg(long)]
        max_copies: Option<usize>,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Search for q-plethysm polynomials with negative coefficients.
    ScanNegative {
        /// Scan one shape instead of the grid.
        #[arg(long, requires = "copies")]
        shape: Option<Partition>,
        #[arg(long)]
        copies: Option<usize>,
        #[arg(long, default_value_t = 2)]
        max_cells: usize,
        #[arg(long, default_value_t = 4)]
        max_copies: usize,
        /// Only weights with at most this many parts.
        #[arg(long)]
        max_len: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

/// Failure modes mapped to exit codes.
enum Failure {
    Usage(String),
    Identity,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Identity) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn check_caps(cells: usize, copies: usize, force: bool) -> Result<(), Failure> {
    if cells <= MAX_CELLS && copies <= MAX_COPIES {
        return Ok(());
    }
    if force {
        eprintln!("warning: |μ| = {cells}, n = {copies} exceeds the default caps; this may take very long");
        return Ok(());
    }
    Err(Failure::Usage(format!(
        "|μ| = {cells}, n = {copies} exceeds the caps |μ| <= {MAX_CELLS}, n <= {MAX_COPIES}; pass --force to override"
    )))
}

fn instance(shape: &Partition, copies: usize, force: bool) -> Result<LLTInstance, Failure> {
    check_caps(shape.size(), copies, force)?;
    Ok(LLTInstance::new(shape.clone(), copies)?)
}

fn check_component(component: Option<usize>, n: usize) -> Result<(), Failure> {
    match component {
        Some(i) if i >= n => Err(Error::Residue {
            residue: i,
            modulus: n,
        }
        .into()),
        _ => Ok(()),
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Coeff {
            shape,
            copies,
            weight,
            component,
            common,
        } => {
            let inst = instance(&shape, copies, common.force)?;
            check_component(component, copies)?;
            let p = match component {
                None => llt_coefficient(&inst, &weight)?,
                Some(i) => component_split(&inst, &weight)?.swap_remove(i),
            };
            let input = json!({"mu": shape, "n": copies, "nu": weight, "component": component});
            let label = component.map_or("G".to_string(), |i| format!("G^({i})"));
            match common.format.unwrap_or_default() {
                Format::Text => println!("{p}"),
                Format::Json => println!("{}", envelope("coeff", input, poly_json(&p))),
                Format::Csv => {
                    let mut t = WeightIndexedPoly::new();
                    t.insert(weight, p)?;
                    print!("{}", csv_table(&[(label, &t)])?);
                }
            }
            Ok(())
        }
        Command::Schur {
            shape,
            copies,
            component,
            common,
        } => {
            let inst = instance(&shape, copies, common.force)?;
            check_component(component, copies)?;
            let table = match component {
                None => q_lr_table(&inst),
                Some(i) => q_lr_components_table(&inst).swap_remove(i),
            };
            let label = component.map_or("LR".to_string(), |i| format!("LR^({i})"));
            let input = json!({"mu": shape, "n": copies, "component": component});
            match common.format.unwrap_or_default() {
                Format::Text => {
                    for (nu, p) in table.iter() {
                        println!("{nu}: {p}");
                    }
                }
                Format::Json => {
                    let rows: Vec<Value> = table
                        .iter()
                        .map(|(nu, p)| json!({"nu": nu, "poly": poly_json(p)}))
                        .collect();
                    println!("{}", envelope("schur", input, Value::Array(rows)));
                }
                Format::Csv => print!("{}", csv_table(&[(label, &table)])?),
            }
            Ok(())
        }
        Command::Plethysm {
            outer,
            tableau,
            inner,
            weight,
            common,
        } => plethysm(outer, tableau, inner, weight, common),
        Command::Verify {
            suite,
            max_cells,
            max_copies,
            max_len,
            max_n,
            common,
        } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse().map_err(Failure::Usage)?]
            };
            let mut reports = Vec::new();
            for s in suites {
                let d = s.default_bounds();
                let bounds = Bounds {
                    max_cells: max_cells.unwrap_or(d.max_cells),
                    max_copies: max_copies.unwrap_or(d.max_copies),
                    max_len: max_len.unwrap_or(d.max_len),
                    max_n: max_n.unwrap_or(d.max_n),
                };
                check_caps(bounds.max_cells, bounds.max_copies, common.force)?;
                reports.push((bounds, run_suite(s, &bounds)));
            }
            let all_passed = reports.iter().all(|(_, r)| r.passed());
            match common.format.unwrap_or_default() {
                Format::Text => {
                    for (_, r) in &reports {
                        println!("{r}");
                    }
                }
                Format::Json => {
                    let result: Vec<Value> = reports
                        .iter()
                        .map(|(b, r)| json!({"bounds": b, "report": r, "passed": r.passed()}))
                        .collect();
                    println!(
                        "{}",
                        envelope("verify", json!({"suite": suite}), Value::Array(result))
                    );
                }
                Format::Csv => {
                    let rows = reports.iter().map(|(_, r)| {
                        vec![
                            r.suite.clone(),
                            r.cases.to_string(),
                            r.failed.to_string(),
                            r.passed().to_string(),
                        ]
                    });
                    print!(
                        "{}",
                        csv_rows(&["suite", "cases", "failed", "passed"], rows)?
                    );
                }
            }
            if all_passed {
                Ok(())
            } else {
                Err(Failure::Identity)
            }
        }
        Command::ScanNegative {
            shape,
            copies,
            max_cells,
            max_copies,
            max_len,
            common,
        } => {
            let instances: Vec<LLTInstance> = match (shape, copies) {
                (Some(mu), Some(n)) => vec![instance(&mu, n, common.force)?],
                _ => {
                    check_caps(max_cells, max_copies, common.force)?;
                    partitions_up_to(max_cells)
                        .into_iter()
                        .flat_map(|mu| {
                            (1..=max_copies).map(move |n| LLTInstance::new(mu.clone(), n))
                        })
                        .collect::<Result<_, _>>()?
                }
            };
            scan(&instances, max_len, common.format.unwrap_or(Format::Json))
        }
    }
}

fn plethysm(
    outer: Option<Partition>,
    tableau: Option<StandardTableau>,
    inner: Partition,
    weight: Partition,
    common: Common,
) -> Result<(), Failure> {
    let format = common.format.unwrap_or_default();
    match (outer, tableau) {
        (Some(lambda), _) => {
            check_caps(inner.size(), lambda.size(), common.force)?;
            let a = plethysm_multiplicity(&lambda, &inner, &weight)?;
            let input = json!({"outer": lambda, "inner": inner, "nu": weight});
            match format {
                Format::Text => println!("{a}"),
                Format::Json => println!(
                    "{}",
                    envelope("plethysm", input, json!({"multiplicity": a}))
                ),
                Format::Csv => print!(
                    "{}",
                    csv_rows(
                        &["outer", "inner", "nu", "multiplicity"],
                        [vec![
                            lambda.to_string(),
                            inner.to_string(),
                            weight.to_string(),
                            a.to_string(),
                        ]]
                    )?
                ),
            }
        }
        (None, Some(s)) => {
            let inst = instance(&inner, s.size(), common.force)?;
            let a = a_q_plethysm(&s, &inst, &weight)?;
            let g = class_poly(&s, &inst, &weight)?;
            let input = json!({"tableau": s.to_string(), "inner": inner, "nu": weight});
            match format {
                Format::Text => {
                    println!("a(q) = {a}");
                    println!("a(1) = {}", a.eval_one());
                    println!("class G(q) = {g}");
                    println!("class G(1) = {}", g.eval_one());
                }
                Format::Json => {
                    let result = json!({
                        "a": poly_json(&a),
                        "a_at_1": a.eval_one().to_string(),
                        "class": poly_json(&g),
                        "class_at_1": g.eval_one().to_string(),
                    });
                    println!("{}", envelope("plethysm", input, result));
                }
                Format::Csv => {
                    let mut ta = WeightIndexedPoly::new();
                    ta.insert(weight.clone(), a)?;
                    let mut tg = WeightIndexedPoly::new();
                    tg.insert(weight, g)?;
                    print!(
                        "{}",
                        csv_table(&[("a".to_string(), &ta), ("class".to_string(), &tg)])?
                    );
                }
            }
        }
        (None, None) => return Err(Failure::Usage("give --outer or --tableau".into())),
    }
    Ok(())
}

fn scan(instances: &[LLTInstance], max_len: Option<usize>, format: Format) -> Result<(), Failure> {
    let mut reports: Vec<(NegativityReport, bool)> = Vec::new();
    for inst in instances {
        let report = negativity_scan(inst, max_len);
        let mut valid = true;
        for f in &report.findings {
            valid &= revalidate_finding(inst, f)?;
        }
        reports.push((report, valid));
    }
    let consistent = reports
        .iter()
        .all(|(r, valid)| *valid && r.aggregates_nonnegative());
    match format {
        Format::Json => {
            let result: Vec<Value> = reports
                .iter()
                .map(|(r, valid)| {
                    json!({
                        "mu": r.mu,
                        "n": r.n,
                        "checked": r.checked,
                        "findings": r.findings.iter().map(|f| json!({
                            "tableau": f.tableau.to_string(),
                            "nu": f.nu,
                            "poly": poly_json(&f.poly),
                        })).collect::<Vec<_>>(),
                        "findings_revalidated": valid,
                        "aggregates_nonnegative": r.aggregates_nonnegative(),
                        "aggregates": r.aggregates.iter().map(|a| json!({
                            "nu": a.nu,
                            "residue": a.residue,
                            "poly": poly_json(&a.poly),
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let input = json!({"max_len": max_len});
            println!("{}", envelope("scan-negative", input, Value::Array(result)));
        }
        Format::Text => {
            for (r, valid) in &reports {
                println!(
                    "({})^{}: {} checked, {} with negative coefficients, revalidated: {valid}, residue sums non-negative: {}",
                    r.mu,
                    r.n,
                    r.checked,
                    r.findings.len(),
                    r.aggregates_nonnegative()
                );
                for f in &r.findings {
                    println!("  S={} ν={}: {}", f.tableau, f.nu, f.poly);
                }
            }
        }
        Format::Csv => {
            let rows = reports.iter().flat_map(|(r, _)| {
                r.findings.iter().map(move |f| {
                    vec![
                        r.mu.to_string(),
                        r.n.to_string(),
                        f.tableau.to_string(),
                        f.nu.to_string(),
                        f.poly.to_string(),
                    ]
                })
            });
            print!("{}", csv_rows(&["mu", "n", "tableau", "nu", "poly"], rows)?);
        }
    }
    if consistent {
        Ok(())
    } else {
        Err(Failure::Identity)
    }
}
