use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use rue_core::chartab::{character_table, VerdictWitness};
use rue_core::grp::{enumeration_bound, GroupTable};
use rue_core::harness::{build_catalog, parse_group_spec, run_suite_with, SuiteOptions};
use rue_core::structure::{theorem_b_classify, Verdict};
use rue_core::symchar::{find_witness, lemma33_witness, mn_value, partitions, Partition};
use rue_core::ExactCharacterTable;

/// Character tables, root-of-unity elements and the structural criterion
/// for small finite groups.
#[derive(Parser)]
#[command(name = "rue", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact character table of a group.
    Table {
        /// Group spec such as `gamma:5`, `dicyclic:12`, `symmetric:4*cyclic:2`
        /// or `@path/to/file.grp`.
        spec: String,
    },
    /// Root-of-unity elements from the character table and from structure.
    Rue { spec: String },
    /// Run the structural classification.
    Classify {
        spec: String,
        /// Print the result as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Symmetric group character value by the Murnaghan-Nakayama rule.
    Mn {
        /// Partition indexing the character, e.g. `5,2`.
        #[arg(long)]
        lambda: String,
        /// Cycle type of the class, e.g. `4,3`.
        #[arg(long)]
        mu: String,
    },
    /// Non-self-conjugate characters with value outside {-1, 1}.
    Lemma33 {
        /// Every even cycle type of this size.
        #[arg(long, conflicts_with = "alpha", required_unless_present = "alpha")]
        n: Option<usize>,
        /// A single cycle type; odd types use the unrestricted search.
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Run a verification suite over the catalog.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 120)]
        max_order: usize,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Include wall time in the report.
        #[arg(long)]
        timings: bool,
    },
}

fn load(spec: &str) -> Result<GroupTable> {
    let construction = parse_group_spec(spec)?;
    let g = construction
        .build(enumeration_bound())
        .with_context(|| format!("building {}", spec))?;
    Ok(g)
}

fn table_for(spec: &str) -> Result<(GroupTable, ExactCharacterTable)> {
    let g = load(spec)?;
    let t = character_table(&g)?;
    Ok((g, t))
}

fn cmd_table(spec: &str) -> Result<ExitCode> {
    let (g, t) = table_for(spec)?;
    let classes = t.classes();
    println!("group {}  order {}  classes {}  exponent {}", spec, g.order(), classes.len(), t.exponent());
    println!("values in Z[zeta_e] as e:[c_0,..] on the power basis");
    let header: Vec<String> = (0..classes.len())
        .map(|c| {
            let rep = classes.class(c).representative;
            format!("c{}(o{},s{})", c, g.element_order(rep), classes.class(c).size())
        })
        .collect();
    println!("      {}", header.join("  "));
    for chi in 0..t.k_of_group() {
        let row: Vec<String> = (0..classes.len()).map(|c| t.value(chi, c).to_string()).collect();
        println!("chi{:<3} {}", chi, row.join("  "));
    }
    Ok(ExitCode::SUCCESS)
}

fn format_set(xs: &[usize]) -> String {
    let shown: Vec<String> = xs.iter().map(usize::to_string).collect();
    format!("{} {{{}}}", xs.len(), shown.join(", "))
}

fn cmd_rue(spec: &str) -> Result<ExitCode> {
    let (g, t) = table_for(spec)?;
    let certified = t.rue_elements();
    let result = theorem_b_classify(&g);
    let summary = result.summary();
    println!("group {}  order {}  k(G) {}  cp(G) {}", spec, g.order(), t.k_of_group(), t.commuting_probability());
    println!("certified root-of-unity elements: {}", format_set(&certified));
    let verdicts = t.rue_verdicts();
    for c in 0..t.classes().len() {
        let rep = t.classes().class(c).representative;
        let verdict = &verdicts[rep];
        let reason = match verdict.witness {
            None => "root of unity".to_string(),
            Some(VerdictWitness::Vanishes(chi)) => format!("chi{} vanishes", chi),
            Some(VerdictWitness::NotUnitModulus(chi)) => format!("|chi{}| != 1", chi),
        };
        println!("  class {} (rep {}, order {}): {}", c, rep, g.element_order(rep), reason);
    }
    println!("structural verdict: {:?}", summary.verdict);
    if let Some(f) = summary.failure {
        println!("first failed condition: {:?}", f);
    }
    println!("predicted elements: {}", format_set(&summary.predicted));
    let agreement = certified.is_empty() == (summary.verdict == Verdict::NoRueElement);
    let equal = summary.predicted == certified;
    println!("agreement: {}", agreement);
    if summary.verdict != Verdict::NoRueElement {
        println!("predicted equals certified: {}", equal);
    }
    Ok(if agreement { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn cmd_classify(spec: &str, json: bool) -> Result<ExitCode> {
    let g = load(spec)?;
    let summary = theorem_b_classify(&g).summary();
    if json {
        println!("{}", serde_json::to_string_pretty(&summary)?);
        return Ok(ExitCode::SUCCESS);
    }
    let qs: Vec<String> = summary.q_multiset.iter().map(u64::to_string).collect();
    println!("group {}  order {}", spec, g.order());
    println!("verdict: {:?}", summary.verdict);
    if let Some(f) = summary.failure {
        println!("first failed condition: {:?}", f);
    }
    println!("q multiset: {{{}}}", qs.join(", "));
    println!("|Z|: {}", summary.center_order);
    println!("predicted root-of-unity elements: {}", summary.predicted_size);
    Ok(ExitCode::SUCCESS)
}

fn cmd_mn(lambda: &str, mu: &str) -> Result<ExitCode> {
    let lambda = Partition::parse(lambda)?;
    let mu = Partition::parse(mu)?;
    println!("chi^{}{} = {}", lambda, mu, mn_value(&lambda, &mu)?);
    Ok(ExitCode::SUCCESS)
}

fn print_witness(alpha: &Partition, lambda: &Partition) -> Result<()> {
    println!("alpha {}  witness {}  value {}", alpha, lambda, mn_value(lambda, alpha)?);
    Ok(())
}

fn cmd_lemma33(n: Option<usize>, alpha: Option<String>) -> Result<ExitCode> {
    if let Some(alpha) = alpha {
        let alpha = Partition::parse(&alpha)?;
        let lambda = if alpha.is_even_cycle_type() {
            lemma33_witness(&alpha)?
        } else {
            println!("note: {} is an odd cycle type; searching without that restriction", alpha);
            find_witness(&alpha)?
        };
        print_witness(&alpha, &lambda)?;
        return Ok(ExitCode::SUCCESS);
    }
    let n = n.expect("clap requires n or alpha");
    if n < 6 {
        bail!("n must be at least 6, got {}", n);
    }
    for alpha in partitions(n).into_iter().filter(Partition::is_even_cycle_type) {
        print_witness(&alpha, &lemma33_witness(&alpha)?)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(suite: &str, max_order: usize, json: Option<PathBuf>, timings: bool) -> Result<ExitCode> {
    if max_order == 0 {
        bail!("--max-order must be at least 1");
    }
    let catalog = build_catalog(max_order);
    let options = SuiteOptions {
        timings,
        ..SuiteOptions::default()
    };
    let report = run_suite_with(suite, &catalog, &options)?;
    if let Some(path) = json {
        std::fs::write(&path, report.to_json() + "\n")
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let s = &report.summary;
    println!(
        "suite {}  groups {}  checks {}  assertions {}  failures {}",
        report.suite, s.groups, s.checks, s.assertions, s.failures
    );
    println!("structural and character-side verdicts disagree on {} groups", s.disagreements.len());
    println!(
        "predicted set equals certified set on every positive group: {}",
        s.predicted_equals_certified_everywhere
    );
    for g in &report.groups {
        for b in &g.boundary {
            println!(
                "{}: class {} (order {}) has |C(x)| = k = {} without being root-of-unity; resolved as {}",
                g.name, b.class, b.element_order, b.class_count, b.resolution
            );
        }
        if let Some(e) = &g.error {
            println!("{}: error: {}", g.name, e);
        }
    }
    for (group, c) in report.failed_checks() {
        println!(
            "FAIL {} [{}] {}: {}",
            group,
            c.suite,
            c.anchor,
            c.witness.as_deref().unwrap_or("")
        );
    }
    if let Some(t) = s.wall_time_seconds {
        println!("wall time {:.2}s", t);
    }
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Table { spec } => cmd_table(&spec),
        Command::Rue { spec } => cmd_rue(&spec),
        Command::Classify { spec, json } => cmd_classify(&spec, json),
        Command::Mn { lambda, mu } => cmd_mn(&lambda, &mu),
        Command::Lemma33 { n, alpha } => cmd_lemma33(n, alpha),
        Command::Verify {
            suite,
            max_order,
            json,
            timings,
        } => cmd_verify(&suite, max_order, json, timings),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}
