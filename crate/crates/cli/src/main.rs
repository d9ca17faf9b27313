use std::fmt::Write as _;
use std::io::{self, Write as _};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gfqm_core::chsh::{maximize_chsh, ObservableSet, StateSet};
use gfqm_core::entanglement::{all_states, correlation_table, count_states, standard_singlet};
use gfqm_core::nogo::singlet_argument;
use gfqm_core::two_level::{dual_covector, spin_labels, state_vector};
use gfqm_core::{field_of_order, make_field, Field, Rational};

/// Exit status for errors raised by the computation rather than by argument parsing.
const DOMAIN_ERROR: u8 = 1;

#[derive(Parser)]
#[command(name = "gfqm", version, about = "Exact discrete quantum mechanics over GF(q)")]
struct Cli {
    /// Field order, a prime power.
    #[arg(long, global = true, conflicts_with_all = ["p", "n"])]
    q: Option<u64>,
    /// Field characteristic; use together with --n.
    #[arg(long, global = true, requires = "n")]
    p: Option<u64>,
    /// Extension degree; use together with --p.
    #[arg(long, global = true, requires = "p")]
    n: Option<u32>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Addition and multiplication tables, modulus and generator.
    FieldTable,
    /// Single-spin states and duals, or two-spin counts with --bipartite.
    States {
        #[arg(long)]
        bipartite: bool,
    },
    /// Joint distributions of the spin observable patterns on the singlet.
    Correlations,
    /// Exhaustive CHSH maximization, over the singlet unless told otherwise.
    ChshScan {
        /// Scan every two-spin state, product states included.
        #[arg(long, conflicts_with = "entangled")]
        all_states: bool,
        /// Scan every entangled state.
        #[arg(long)]
        entangled: bool,
        /// Allow A_rs with r > s.
        #[arg(long)]
        unrestricted: bool,
    },
    /// Deterministic hidden-variable test on the singlet.
    HvCheck,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::FieldTable => "field-table",
            Command::States { .. } => "states",
            Command::Correlations => "correlations",
            Command::ChshScan { .. } => "chsh-scan",
            Command::HvCheck => "hv-check",
        }
    }
}

struct Report {
    human: String,
    results: Value,
}

fn rat(x: Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

fn field_table(f: Field) -> Report {
    let elems = f.elements();
    let names: Vec<String> = elems.iter().map(ToString::to_string).collect();
    let add: Vec<Vec<String>> = elems.iter().map(|&a| elems.iter().map(|&b| (a + b).to_string()).collect()).collect();
    let mul: Vec<Vec<String>> = elems.iter().map(|&a| elems.iter().map(|&b| (a * b).to_string()).collect()).collect();

    let width = names.iter().map(String::len).max().unwrap_or(1);
    let mut human = format!(
        "GF({}) = GF({}^{})\nmodulus: {}\ngenerator: {}\n",
        f.order(),
        f.characteristic(),
        f.degree(),
        f.modulus_string(),
        f.generator()
    );
    for (op, table) in [("+", &add), ("*", &mul)] {
        let _ = write!(human, "\n{op:>width$} |");
        for name in &names {
            let _ = write!(human, " {name:>width$}");
        }
        let _ = writeln!(human, "\n{}", "-".repeat((width + 1) * (names.len() + 1) + 1));
        for (name, row) in names.iter().zip(table.iter()) {
            let _ = write!(human, "{name:>width$} |");
            for cell in row {
                let _ = write!(human, " {cell:>width$}");
            }
            human.push('\n');
        }
    }

    let results = json!({
        "p": f.characteristic(),
        "n": f.degree(),
        "modulus": f.modulus(),
        "modulus_string": f.modulus_string(),
        "generator": f.generator().to_string(),
        "elements": names,
        "addition": add,
        "multiplication": mul,
    });
    Report { human, results }
}

fn states(f: Field, bipartite: bool) -> gfqm_core::Result<Report> {
    if bipartite {
        let counts = count_states(f);
        let listed: Vec<(String, String)> = all_states(f)
            .iter()
            .map(|s| (s.to_string(), s.classify().to_string()))
            .collect();
        let mut human = format!(
            "two-spin states over GF({}): total {}, product {}, entangled {}\n\n",
            f.order(),
            counts.total,
            counts.product,
            counts.entangled
        );
        for (state, class) in &listed {
            let _ = writeln!(human, "{state}  {class}");
        }
        let results = json!({
            "total": counts.total,
            "product": counts.product,
            "entangled": counts.entangled,
            "states": listed
                .iter()
                .map(|(s, c)| json!({"state": s, "classification": c}))
                .collect::<Vec<_>>(),
        });
        return Ok(Report { human, results });
    }

    let mut human = format!("{} spin states over GF({})\n\n", f.order() + 1, f.order());
    let mut rows = Vec::new();
    for label in spin_labels(f) {
        let ket = state_vector(f, label)?;
        let bra = dual_covector(f, label)?;
        let _ = writeln!(human, "{label}  state {ket}  dual {bra}");
        rows.push(json!({"label": label.index(), "state": ket.to_string(), "dual": bra.to_string()}));
    }
    Ok(Report { human, results: json!({ "states": rows }) })
}

fn correlations(f: Field) -> gfqm_core::Result<Report> {
    let table = correlation_table(f, &standard_singlet(f))?;
    let mut human = format!(
        "singlet {} over GF({})\n\n{:<12} {:<18} {:>5} {:>5} {:>5} {:>5} {:>5}\n",
        standard_singlet(f),
        f.order(),
        "pattern",
        "observable",
        "++",
        "+-",
        "-+",
        "--",
        "E.V."
    );
    let mut rows = Vec::new();
    for row in &table.rows {
        let _ = write!(human, "{:<12} {:<18}", row.pattern.name(), row.observable.to_string());
        for p in row.probabilities {
            let _ = write!(human, " {:>5}", p.to_string());
        }
        let _ = writeln!(human, " {:>5}", row.expectation.to_string());
        rows.push(json!({
            "pattern": row.pattern.name(),
            "observable": row.observable.to_string(),
            "probabilities": {
                "++": rat(row.probabilities[0]),
                "+-": rat(row.probabilities[1]),
                "-+": rat(row.probabilities[2]),
                "--": rat(row.probabilities[3]),
            },
            "expectation": rat(row.expectation),
        }));
    }
    for pattern in &table.not_applicable {
        let _ = writeln!(human, "{:<12} not applicable: needs {} distinct labels", pattern.name(), pattern.distinct_labels());
    }
    let not_applicable: Vec<&str> = table.not_applicable.iter().map(|p| p.name()).collect();
    Ok(Report { human, results: json!({ "rows": rows, "not_applicable": not_applicable }) })
}

fn chsh_scan(f: Field, state_set: StateSet, unrestricted: bool) -> gfqm_core::Result<Report> {
    let obs_set = if unrestricted { ObservableSet::Unrestricted } else { ObservableSet::Increasing };
    let scan = maximize_chsh(f, state_set, obs_set)?;
    let attained: Vec<String> = scan.attained.iter().map(|&v| rat(v)).collect();
    let human = format!(
        "max |CHSH| over GF({}): {}\nwitness: {} on {} = {}\nscanned {} quadruples x {} states\nattained values: {}\n",
        f.order(),
        scan.max_abs,
        scan.best.quadruple,
        scan.best.state,
        scan.best.value,
        scan.quadruples,
        scan.states,
        scan.attained.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
    );
    let q = scan.best.quadruple;
    let results = json!({
        "states": match state_set {
            StateSet::Singlet => "singlet",
            StateSet::Entangled => "entangled",
            StateSet::All => "all",
        },
        "observables": if unrestricted { "unrestricted" } else { "increasing" },
        "max_abs": rat(scan.max_abs),
        "witness": {
            "A": q.big_a.to_string(),
            "a": q.small_a.to_string(),
            "B": q.big_b.to_string(),
            "b": q.small_b.to_string(),
            "state": scan.best.state.to_string(),
            "value": rat(scan.best.value),
        },
        "quadruples": scan.quadruples,
        "state_count": scan.states,
        "attained": attained,
    });
    Ok(Report { human, results })
}

fn hv_check(f: Field) -> gfqm_core::Result<Report> {
    let arg = singlet_argument(f)?;
    let mut human = format!("X = {}, Y = {} on the singlet over GF({})\n\nzero-probability events:\n", arg.x, arg.y, f.order());
    for c in &arg.constraints {
        let _ = writeln!(human, "  {c}");
    }
    let _ = writeln!(human, "\nrequired events:");
    for ((event, p), (_, witness)) in arg.targets.iter().zip(&arg.report.witnesses) {
        let by = witness.map_or_else(|| "no surviving assignment".to_string(), |w| w.to_string());
        let _ = writeln!(human, "  {event}  probability {p}  realized by: {by}");
    }
    let _ = writeln!(human, "\nsurviving assignments ({}):", arg.report.survivors.len());
    for s in &arg.report.survivors {
        let _ = writeln!(human, "  {s}");
    }
    let _ = writeln!(human, "\nverdict: {}", arg.report.verdict);

    let results = json!({
        "x": arg.x.to_string(),
        "y": arg.y.to_string(),
        "constraints": arg.constraints.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "targets": arg
            .targets
            .iter()
            .zip(&arg.report.witnesses)
            .map(|((e, p), (_, w))| json!({
                "event": e.to_string(),
                "probability": rat(*p),
                "witness": w.map(|a| a.to_string()),
            }))
            .collect::<Vec<_>>(),
        "survivors": arg.report.survivors.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "verdict": arg.report.verdict.to_string(),
    });
    Ok(Report { human, results })
}

fn resolve_field(cli: &Cli) -> gfqm_core::Result<Field> {
    match (cli.q, cli.p, cli.n) {
        (Some(q), _, _) => field_of_order(q),
        (None, Some(p), Some(n)) => make_field(p, n),
        _ => Cli::command()
            .error(ErrorKind::MissingRequiredArgument, "give the field as --q <q> or as --p <p> --n <n>")
            .exit(),
    }
}

fn run(cli: &Cli) -> gfqm_core::Result<()> {
    let f = resolve_field(cli)?;
    let report = match cli.command {
        Command::FieldTable => field_table(f),
        Command::States { bipartite } => states(f, bipartite)?,
        Command::Correlations => correlations(f)?,
        Command::ChshScan { all_states, entangled, unrestricted } => {
            let set = match (all_states, entangled) {
                (true, _) => StateSet::All,
                (_, true) => StateSet::Entangled,
                _ => StateSet::Singlet,
            };
            chsh_scan(f, set, unrestricted)?
        }
        Command::HvCheck => hv_check(f)?,
    };
    let text = match cli.format {
        Format::Human => report.human,
        Format::Json => {
            let out = json!({ "command": cli.command.name(), "q": f.order(), "results": report.results });
            serde_json::to_string_pretty(&out).expect("values are plain JSON") + "\n"
        }
    };
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = io::stdout().lock().write_all(text.as_bytes());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(DOMAIN_ERROR)
        }
    }
}
