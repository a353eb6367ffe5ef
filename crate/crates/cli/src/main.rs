use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use margulis::casefile::{self, ExtremalRecord, Record};
use margulis::cases::{self, CaseSpec, CASE_TOLERANCE};
use margulis::constants::{self, hp, Order};
use margulis::extremal::{self, ExtremalConfig, EQUALITY_TOL};
use margulis::halfspace::{displacement, HPoint};
use margulis::mobius::{classify, ElementClass, Matrix2};
use margulis::report::{num, num_c, Report};
use margulis::verify::{self, Suite};
use margulis::{GroupParams, MoebiusMap};

#[derive(Parser)]
#[command(name = "margulis", version, about = "Displacement bounds for two-generator Kleinian groups")]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Table of c, d, psi, b and t for each order.
    Constants {
        /// Orders n >= 3 or `inf`; repeat or separate by commas.
        #[arg(long = "n", value_delimiter = ',', default_values_t = default_orders())]
        n: Vec<Order>,
        /// Also print c(n) and t(n) to 50 significant digits.
        #[arg(long)]
        precise: bool,
    },
    /// Classify a pair, evaluate its parameters and displacements, and test
    /// the applicable lower bound.
    Pair {
        /// Matrix of f as 8 reals, row-major `re(a) im(a) re(b) ...`.
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        /// Matrix of g, same layout.
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        /// Witness point `x,y,t` (the point x + iy + tj); defaults to j.
        #[arg(long, allow_hyphen_values = true)]
        witness: Option<String>,
        /// Slack allowed below the bound.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Solve case bounds, from the built-in table or a case file.
    Case {
        /// Plain-text case records.
        #[arg(long)]
        case_file: Option<PathBuf>,
        /// Only cases whose name contains this text.
        #[arg(long)]
        name: Option<String>,
        /// Tolerance against the printed bound.
        #[arg(long, default_value_t = CASE_TOLERANCE)]
        tol: f64,
        /// Print the selected cases as records instead of solving them.
        #[arg(long)]
        export: bool,
    },
    /// Run a check suite.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// Build and check configurations attaining the bounds.
    Extremal {
        /// Elliptic orders for the sharp configurations.
        #[arg(long = "n", value_delimiter = ',')]
        n: Vec<Order>,
        /// Include the orders 6 and 3 pair.
        #[arg(long)]
        orders_6_3: bool,
        /// Include the modular pair.
        #[arg(long)]
        modular: bool,
        /// Check the `[extremal]` records of a file instead.
        #[arg(long)]
        case_file: Option<PathBuf>,
        /// Print the configurations as records instead of checking them.
        #[arg(long)]
        export: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Identities,
    Constants,
    Cases,
    Extremal,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Identities => Suite::Identities,
            SuiteArg::Constants => Suite::Constants,
            SuiteArg::Cases => Suite::Cases,
            SuiteArg::Extremal => Suite::Extremal,
            SuiteArg::All => Suite::All,
        }
    }
}

fn default_orders() -> Vec<Order> {
    vec![Order::Finite(3), Order::Finite(4), Order::Finite(5), Order::Finite(6), Order::Finite(7), Order::Infinite]
}

/// Bad input: reported and mapped to exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

enum Output {
    Report(Report),
    Text(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Output::Report(r)) => {
            if cli.json {
                println!("{}", r.to_json());
            } else {
                print!("{}", r.to_text());
            }
            if r.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Ok(Output::Text(s)) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<Output, UsageError> {
    Ok(match cmd {
        Command::Constants { n, precise } => Output::Report(cmd_constants(&n, precise)?),
        Command::Pair { f, g, witness, tol } => Output::Report(cmd_pair(&f, &g, witness.as_deref(), tol)?),
        Command::Case { case_file, name, tol, export } => {
            let mut specs = match case_file {
                Some(p) => casefile::parse_cases(&read(&p)?).map_err(|e| UsageError(format!("{}: {e}", p.display())))?,
                None => cases::builtin_cases(),
            };
            if let Some(pat) = name {
                specs.retain(|s| s.name.contains(&pat));
                if specs.is_empty() {
                    return Err(UsageError(format!("no case matches {pat:?}")));
                }
            }
            if export {
                Output::Text(casefile::write_cases(&specs))
            } else {
                Output::Report(cmd_case(&specs, tol)?)
            }
        }
        Command::Verify { suite } => {
            let seed = verify::seed_from_env()?;
            Output::Report(verify::run(suite.into(), seed))
        }
        Command::Extremal { n, orders_6_3, modular, case_file, export } => {
            let records = match case_file {
                Some(p) => casefile::parse(&read(&p)?)
                    .map_err(|e| UsageError(format!("{}: {e}", p.display())))?
                    .into_iter()
                    .filter_map(|r| match r {
                        Record::Extremal(e) => Some(e),
                        Record::Case(_) => None,
                    })
                    .collect(),
                None => builtin_extremal(&n, orders_6_3, modular)?,
            };
            if export {
                Output::Text(casefile::write(&records.into_iter().map(Record::Extremal).collect::<Vec<_>>()))
            } else {
                Output::Report(cmd_extremal(&records))
            }
        }
    })
}

fn read(p: &PathBuf) -> Result<String, UsageError> {
    std::fs::read_to_string(p).map_err(|e| UsageError(format!("{}: {e}", p.display())))
}

fn cmd_constants(orders: &[Order], precise: bool) -> Result<Report, UsageError> {
    let mut r = Report::new("constants");
    r.input("n", orders.iter().map(Order::to_string).collect::<Vec<_>>().join(","));
    for &o in orders {
        let row = constants::constant_table(o)?;
        let mut v = json!({
            "c": num(row.c_n),
            "d": num(row.d_n),
            "psi": num(row.psi_n),
            "b": num(row.b_n),
            "t": num(row.t_n),
        });
        if let (true, Order::Finite(n)) = (precise, o) {
            v["c_50"] = json!(hp::c(n)?.digits);
            v["t_50"] = json!(hp::solve_t(n)?.digits);
        }
        r.result(&format!("n={o}"), v);
    }
    Ok(r)
}

fn parse_map(s: &str, which: &str) -> Result<MoebiusMap, UsageError> {
    let v = casefile::parse_reals8(s).map_err(|e| UsageError(format!("--{which}: {e}")))?;
    MoebiusMap::normalize(Matrix2::from_reals(v)).map_err(|e| UsageError(format!("--{which}: {e}")))
}

fn parse_witness(s: &str) -> Result<HPoint, UsageError> {
    let parts: Vec<&str> = s.split(',').collect();
    let [x, y, t] = parts[..] else {
        return Err(UsageError(format!("--witness: expected x,y,t, found {s:?}")));
    };
    let re = |p: &str| casefile::parse_real(p).map_err(|e| UsageError(format!("--witness: {e}")));
    Ok(HPoint::new(margulis::Complex::new(re(x)?, re(y)?), re(t)?)?)
}

fn class_value(c: &ElementClass) -> Value {
    match c {
        ElementClass::Elliptic { theta, order } => json!({
            "kind": "elliptic",
            "theta": num(*theta),
            "order": order.map_or("none".to_string(), |n| n.to_string()),
        }),
        ElementClass::Loxodromic { tau, theta } => json!({
            "kind": "loxodromic",
            "tau": num(*tau),
            "theta": num(*theta),
        }),
        other => json!({ "kind": other.name() }),
    }
}

fn cmd_pair(f: &str, g: &str, witness: Option<&str>, tol: f64) -> Result<Report, UsageError> {
    let (f, g) = (parse_map(f, "f")?, parse_map(g, "g")?);
    let x = match witness {
        Some(w) => parse_witness(w)?,
        None => HPoint::j(),
    };
    let mut r = Report::new("pair");
    r.input("f", f.matrix().to_reals().iter().map(|v| num(*v)).collect::<Vec<_>>().join(" "));
    r.input("g", g.matrix().to_reals().iter().map(|v| num(*v)).collect::<Vec<_>>().join(" "));
    r.input("witness", format!("{},{}", num_c(x.horizontal), num(x.height)));
    let (cf, cg) = (classify(&f), classify(&g));
    r.result("class_f", class_value(&cf));
    r.result("class_g", class_value(&cg));
    let p = GroupParams::of(&f, &g);
    r.result(
        "params",
        json!({ "gamma": num_c(p.gamma), "beta_f": num_c(p.beta_f), "beta_g": num_c(p.beta_g) }),
    );
    let (hf, hg) = (displacement(&f, &x), displacement(&g, &x));
    let m = hf.max(hg);
    r.result(
        "displacement",
        json!({ "f": num(hf), "g": num(hg), "max": num(m) }),
    );
    if cf == ElementClass::Identity || cg == ElementClass::Identity {
        r.result("bound", json!("elementary/degenerate, no bound applies"));
        return Ok(r);
    }
    if !matches!(cf, ElementClass::Loxodromic { .. }) || !matches!(cg, ElementClass::Loxodromic { .. }) {
        r.result("joint_lower", json!(num(verify::joint_bound(&f, &g))));
    }
    match verify::applicable_bound(&f, &g) {
        None => {
            r.result("bound", json!("elementary/degenerate, no bound applies"));
        }
        Some((order, c)) => {
            r.result("bound", json!(format!("c({order})")));
            r.check(
                &format!("max displacement >= c({order})"),
                &format!(">= {}", num(c)),
                &num(m),
                &num(tol),
                m >= c - tol,
            );
        }
    }
    Ok(r)
}

fn cmd_case(specs: &[CaseSpec], tol: f64) -> Result<Report, UsageError> {
    let mut r = Report::new("case");
    r.input("cases", specs.len().to_string());
    r.input("tol", num(tol));
    for spec in specs {
        let rep = cases::min_t_feasible(spec);
        let mut v = json!({
            "solved": num(rep.solved_bound),
            "argmin": num_c(rep.argmin_beta),
            "oracle": num(rep.oracle_bound),
            "printed": num(rep.expected_bound),
            "compare": num(rep.compare_value),
            "feasible": rep.feasible.to_string(),
        });
        let within = r.check_close(&spec.name, rep.expected_bound, rep.solved_bound, tol);
        r.check(
            &format!("{} > {}c({})", spec.name, if spec.power == 1 { String::new() } else { spec.power.to_string() }, spec.compare_to),
            &format!("> {}", num(rep.compare_value)),
            &num(rep.solved_bound),
            "strict",
            rep.solved_bound > rep.compare_value,
        );
        if !within {
            v["region"] = json!(rep.region);
        }
        r.result(&spec.name, v);
    }
    Ok(r)
}

fn builtin_extremal(orders: &[Order], orders_6_3: bool, modular: bool) -> Result<Vec<ExtremalRecord>, UsageError> {
    let mut out = Vec::new();
    let all = orders.is_empty() && !orders_6_3 && !modular;
    let ns: Vec<u32> = if all {
        (3..=12).collect()
    } else {
        orders
            .iter()
            .map(|o| o.finite().ok_or_else(|| UsageError("--n: use --modular for the parabolic pair".into())))
            .collect::<Result<_, _>>()?
    };
    for n in ns {
        out.push(ExtremalRecord { name: format!("sharp n={n}"), config: extremal::extremal_elliptic_config(n)? });
    }
    if all || orders_6_3 {
        out.push(ExtremalRecord { name: "orders 6 and 3".into(), config: extremal::orders_6_3_config() });
    }
    if all || modular {
        out.push(ExtremalRecord { name: "modular".into(), config: extremal::modular_pair() });
    }
    Ok(out)
}

fn cmd_extremal(records: &[ExtremalRecord]) -> Report {
    let mut r = Report::new("extremal");
    let seed = 0;
    for rec in records {
        let ExtremalConfig { witness, claimed, .. } = rec.config;
        let chk = extremal::equality_check(&rec.config, seed);
        r.result(
            &rec.name,
            json!({
                "rho_f": num(chk.rho_f),
                "rho_g": num(chk.rho_g),
                "claimed": num(claimed),
                "probe_min": num(chk.probe_min),
                "witness": format!("{},{}", num_c(witness.horizontal), num(witness.height)),
            }),
        );
        r.check(
            &format!("{}: equality at the witness", rec.name),
            &num(claimed),
            &format!("{} / {}", num(chk.rho_f), num(chk.rho_g)),
            &num(EQUALITY_TOL),
            chk.passes,
        );
    }
    r
}
