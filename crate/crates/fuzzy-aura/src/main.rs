use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fuzzy_aura::aura::Iterations;
use fuzzy_aura::io::{self, FuzzySetDoc, SpaceDoc, TopologyDoc};
use fuzzy_aura::lattice::FuzzySet;
use fuzzy_aura::{mcdm, morphisms, openness, repro, rough, separation, Error};

#[derive(Parser)]
#[command(name = "fuzzy-aura", version, about = "Fuzzy aura topological spaces and FA-MCDM")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Validate scope rows against the ambient topology.
    #[arg(long, global = true)]
    strict: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a space document: topology axioms, scope diagonal, mode.
    CheckSpace {
        #[arg(long)]
        space: PathBuf,
    },
    /// Aura closure of a fuzzy set.
    Closure {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        set: PathBuf,
    },
    /// Aura interior of a fuzzy set.
    Interior {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        set: PathBuf,
    },
    /// Iterate the closure to a fixpoint (or a fixed number of steps).
    Iterate {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        set: PathBuf,
        /// Number of closure applications; omit to run to the fixpoint.
        #[arg(long)]
        steps: Option<usize>,
    },
    /// Members of the induced aura topology.
    AuraTopology {
        #[arg(long)]
        space: PathBuf,
    },
    /// Openness profile of a fuzzy set: open, a-open, semi, pre, alpha, beta, b.
    ClassifyOpenness {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        set: PathBuf,
    },
    /// Continuity profile of a point map between two spaces.
    Continuity {
        #[arg(long)]
        map: PathBuf,
        /// Source space.
        #[arg(long)]
        space: PathBuf,
        /// Target space.
        #[arg(long)]
        target: PathBuf,
    },
    /// Separation profile (T0, T1, T2, regular) with witnesses.
    Separation {
        #[arg(long)]
        space: PathBuf,
    },
    /// Rough approximation of a fuzzy set: lower, upper, boundary, accuracy.
    Rough {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        set: PathBuf,
    },
    /// Run the decision pipeline on a problem document.
    McdmRun {
        #[arg(long)]
        problem: PathBuf,
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
    },
    /// Sensitivity analysis: caution sweep, or weight scenarios if given.
    McdmSensitivity {
        #[arg(long)]
        problem: PathBuf,
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
        /// JSON file with [{"label": ..., "weights": [...]}, ...].
        #[arg(long)]
        weights: Option<PathBuf>,
        /// Comma-separated caution values for the sweep.
        #[arg(long, default_value = "0,0.3,0.5,0.7,1")]
        alphas: String,
    },
    /// Recompute the bundled case study and compare with the stored tables.
    ReproducePaper {
        /// Tolerance for the 2-decimal matrix tables.
        #[arg(long, default_value_t = 0.005)]
        tolerance: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn emit<T: Serialize>(format: Format, value: &T, table: String, csv: String) {
    match format {
        Format::Json => println!("{}", io::to_json(value)),
        Format::Csv => print!("{csv}"),
        Format::Table => print!("{table}"),
    }
}

fn set_table(set: &FuzzySet) -> String {
    let mut out = String::new();
    for (p, g) in set.universe().points().iter().zip(set.grades()) {
        out.push_str(&format!("{p:<12} {g:.2}\n"));
    }
    out
}

fn set_csv(set: &FuzzySet) -> String {
    let mut out = String::from("point,grade\n");
    for (p, g) in set.universe().points().iter().zip(set.grades()) {
        out.push_str(&format!("{p},{g}\n"));
    }
    out
}

fn matrix_table(row_names: &[String], col_names: &[String], rows: &[Vec<f64>], dp: usize) -> String {
    let mut out = String::from("            ");
    for c in col_names {
        out.push_str(&format!("{c:>10}"));
    }
    out.push('\n');
    for (name, row) in row_names.iter().zip(rows) {
        out.push_str(&format!("{name:<12}"));
        for v in row {
            out.push_str(&format!("{v:>10.dp$}"));
        }
        out.push('\n');
    }
    out
}

fn matrix_csv(row_names: &[String], col_names: &[String], rows: &[Vec<f64>]) -> String {
    let mut out = String::new();
    out.push_str(&format!(",{}\n", col_names.join(",")));
    for (name, row) in row_names.iter().zip(rows) {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("{name},{}\n", cells.join(",")));
    }
    out
}

fn emit_set(format: Format, set: &FuzzySet) {
    emit(format, &FuzzySetDoc::from_set(set), set_table(set), set_csv(set));
}

fn run(cli: &Cli) -> fuzzy_aura::Result<ExitCode> {
    let format = cli.format;
    match &cli.command {
        Command::CheckSpace { space } => {
            match io::load_space(space, cli.strict) {
                Ok(s) => {
                    let doc = SpaceDoc::from_space(&s);
                    let table = format!(
                        "valid: {} points, {} scope rows\n",
                        s.universe().size(),
                        s.scope().rows().len()
                    );
                    emit(format, &doc, table, "valid\ntrue\n".into());
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("invalid space: {e}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Closure { space, set } => {
            let s = io::load_space(space, cli.strict)?;
            let mu = io::load_set(set)?;
            emit_set(format, &s.aura_closure(&mu)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Interior { space, set } => {
            let s = io::load_space(space, cli.strict)?;
            let mu = io::load_set(set)?;
            emit_set(format, &s.aura_interior(&mu)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Iterate { space, set, steps } => {
            let s = io::load_space(space, cli.strict)?;
            let mu = io::load_set(set)?;
            let n = match steps {
                Some(n) => Iterations::Finite(*n),
                None => Iterations::Fixpoint,
            };
            emit_set(format, &s.iterated_closure(&mu, n)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::AuraTopology { space } => {
            let s = io::load_space(space, cli.strict)?;
            let topo = s.aura_topology()?;
            let doc = TopologyDoc {
                universe: s.universe().points().to_vec(),
                members: Some(topo.members().iter().map(|m| m.grades().to_vec()).collect()),
                discrete: false,
            };
            let mut table = String::new();
            for m in topo.members() {
                table.push_str(&format!("{m}\n"));
            }
            let mut csv = String::from(s.universe().points().join(","));
            csv.push('\n');
            for m in topo.members() {
                let cells: Vec<String> = m.grades().iter().map(|g| g.to_string()).collect();
                csv.push_str(&format!("{}\n", cells.join(",")));
            }
            emit(format, &doc, table, csv);
            Ok(ExitCode::SUCCESS)
        }
        Command::ClassifyOpenness { space, set } => {
            let s = io::load_space(space, cli.strict)?;
            let mu = io::load_set(set)?;
            let profile = openness::openness_profile(&s, &mu)?;
            let table = format!(
                "open: {}\na_open: {}\nsemi: {}\npre: {}\nalpha: {}\nbeta: {}\nb: {}\n",
                profile.open, profile.a_open, profile.semi, profile.pre, profile.alpha,
                profile.beta, profile.b
            );
            let csv = format!(
                "flag,value\nopen,{}\na_open,{}\nsemi,{}\npre,{}\nalpha,{}\nbeta,{}\nb,{}\n",
                profile.open, profile.a_open, profile.semi, profile.pre, profile.alpha,
                profile.beta, profile.b
            );
            emit(format, &profile, table, csv);
            Ok(ExitCode::SUCCESS)
        }
        Command::Continuity { map, space, target } => {
            let f = io::load_map(map)?;
            let src = io::load_space(space, cli.strict)?;
            let dst = io::load_space(target, cli.strict)?;
            let profile = morphisms::continuity_profile(&f, &src, &dst)?;
            let table = format!(
                "a_continuous: {}\nsemi: {}\npre: {}\nalpha: {}\nbeta: {}\n",
                profile.a_continuous, profile.semi, profile.pre, profile.alpha, profile.beta
            );
            let csv = format!(
                "flag,value\na_continuous,{}\nsemi,{}\npre,{}\nalpha,{}\nbeta,{}\n",
                profile.a_continuous, profile.semi, profile.pre, profile.alpha, profile.beta
            );
            emit(format, &profile, table, csv);
            Ok(ExitCode::SUCCESS)
        }
        Command::Separation { space } => {
            let s = io::load_space(space, cli.strict)?;
            let profile = separation::separation_profile(&s)?;
            let table = format!(
                "t0: {}\nt1: {}\nt2: {}\nregular: {}\n",
                profile.t0, profile.t1, profile.t2, profile.regular
            );
            let csv = format!(
                "axiom,value\nt0,{}\nt1,{}\nt2,{}\nregular,{}\n",
                profile.t0, profile.t1, profile.t2, profile.regular
            );
            emit(format, &profile, table, csv);
            Ok(ExitCode::SUCCESS)
        }
        Command::Rough { space, set } => {
            let s = io::load_space(space, cli.strict)?;
            let mu = io::load_set(set)?;
            let pair = rough::approximate(&s, &mu)?;
            let (rho, sigma) = rough::accuracy(&s, &mu)?;
            #[derive(Serialize)]
            struct RoughOut {
                lower: Vec<f64>,
                upper: Vec<f64>,
                boundary: Vec<f64>,
                rho: f64,
                sigma: f64,
            }
            let out = RoughOut {
                lower: pair.lower.grades().to_vec(),
                upper: pair.upper.grades().to_vec(),
                boundary: pair.boundary.grades().to_vec(),
                rho,
                sigma,
            };
            let names = s.universe().points().to_vec();
            let labels = ["lower", "upper", "boundary"].map(String::from).to_vec();
            let rows = vec![out.lower.clone(), out.upper.clone(), out.boundary.clone()];
            let mut table = matrix_table(&labels, &names, &rows, 2);
            table.push_str(&format!("rho: {rho:.3}\nsigma: {sigma:.3}\n"));
            let mut csv = matrix_csv(&labels, &names, &rows);
            csv.push_str(&format!("rho,{rho}\nsigma,{sigma}\n"));
            emit(format, &out, table, csv);
            Ok(ExitCode::SUCCESS)
        }
        Command::McdmRun { problem, alpha } => {
            let p = io::load_problem(problem)?;
            let result = mcdm::run(&p, *alpha)?;
            let alts = p.alternatives.points().to_vec();
            let classes: Vec<String> = p.classes.iter().map(|c| c.name.clone()).collect();
            #[derive(Serialize)]
            struct RunOut {
                aura: Vec<Vec<f64>>,
                lower: Vec<Vec<f64>>,
                upper: Vec<Vec<f64>>,
                scores: Vec<Vec<f64>>,
                classifications: Vec<mcdm::Classification>,
                global_accuracy: f64,
            }
            let n = alts.len();
            let aura: Vec<Vec<f64>> = (0..n)
                .map(|i| (0..n).map(|j| result.aura.grade(i, j)).collect())
                .collect();
            let lower: Vec<Vec<f64>> = (0..n)
                .map(|i| result.pairs.iter().map(|(_, pr)| pr.lower.grade(i)).collect())
                .collect();
            let upper: Vec<Vec<f64>> = (0..n)
                .map(|i| result.pairs.iter().map(|(_, pr)| pr.upper.grade(i)).collect())
                .collect();
            let out = RunOut {
                aura: aura.clone(),
                lower: lower.clone(),
                upper: upper.clone(),
                scores: result.scores.clone(),
                classifications: result.classifications.clone(),
                global_accuracy: result.global_accuracy,
            };
            let mut table = String::from("similarity matrix\n");
            table.push_str(&matrix_table(&alts, &alts, &aura, 2));
            table.push_str("\nlower approximations\n");
            table.push_str(&matrix_table(&alts, &classes, &lower, 2));
            table.push_str("\nupper approximations\n");
            table.push_str(&matrix_table(&alts, &classes, &upper, 2));
            table.push_str(&format!("\nscores (alpha = {alpha})\n"));
            table.push_str(&matrix_table(&alts, &classes, &result.scores, 3));
            table.push_str("\nclassification\n");
            for c in &result.classifications {
                let label = c.class.clone().unwrap_or_else(|| "Undetermined".into());
                let tie = if c.tie { " (tie)" } else { "" };
                table.push_str(&format!("{:<12} {label}{tie}\n", c.alternative));
            }
            table.push_str(&format!("\nglobal accuracy: {:.3}\n", result.global_accuracy));
            let mut csv = matrix_csv(&alts, &classes, &result.scores);
            csv.push_str("alternative,class\n");
            for c in &result.classifications {
                let label = c.class.clone().unwrap_or_else(|| "Undetermined".into());
                csv.push_str(&format!("{},{label}\n", c.alternative));
            }
            emit(format, &out, table, csv);
            Ok(ExitCode::SUCCESS)
        }
        Command::McdmSensitivity { problem, alpha, weights, alphas } => {
            let p = io::load_problem(problem)?;
            let report = match weights {
                Some(path) => {
                    let text = std::fs::read_to_string(path)?;
                    let scenarios: Vec<repro::WeightScenario> = serde_json::from_str(&text)?;
                    let scenarios: Vec<(String, Vec<f64>)> =
                        scenarios.into_iter().map(|s| (s.label, s.weights)).collect();
                    mcdm::weight_sensitivity(&p, &scenarios, *alpha)?
                }
                None => {
                    let values: Vec<f64> = alphas
                        .split(',')
                        .map(|s| s.trim().parse::<f64>().map_err(|e| Error::Parse(e.to_string())))
                        .collect::<fuzzy_aura::Result<_>>()?;
                    mcdm::alpha_sweep(&p, &values)?
                }
            };
            let mut table = String::new();
            for s in &report.scenarios {
                table.push_str(&format!("{}\n", s.label));
                for (alt, class) in &s.classifications {
                    let label = class.clone().unwrap_or_else(|| "Undetermined".into());
                    table.push_str(&format!("  {alt:<10} {label}\n"));
                }
            }
            if report.unstable.is_empty() {
                table.push_str("stable: all classifications agree across scenarios\n");
            } else {
                table.push_str(&format!("unstable: {}\n", report.unstable.join(", ")));
            }
            let mut csv = String::from("scenario,alternative,class\n");
            for s in &report.scenarios {
                for (alt, class) in &s.classifications {
                    let label = class.clone().unwrap_or_else(|| "Undetermined".into());
                    csv.push_str(&format!("{},{alt},{label}\n", s.label));
                }
            }
            emit(format, &report, table, csv);
            Ok(ExitCode::SUCCESS)
        }
        Command::ReproducePaper { tolerance } => {
            let report = repro::reproduce_bundled(*tolerance, 0.001)?;
            let mut table = String::new();
            let mut csv = String::from("table,pass,max_deviation,tolerance\n");
            for t in &report.tables {
                let verdict = if t.pass { "PASS" } else { "FAIL" };
                table.push_str(&format!(
                    "{verdict} {} (max deviation {:.6}, tolerance {}) {}\n",
                    t.table, t.max_deviation, t.tolerance, t.detail
                ));
                csv.push_str(&format!(
                    "{},{},{},{}\n",
                    t.table, t.pass, t.max_deviation, t.tolerance
                ));
            }
            table.push_str(if report.pass { "overall: PASS\n" } else { "overall: FAIL\n" });
            emit(format, &report, table, csv);
            Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}
