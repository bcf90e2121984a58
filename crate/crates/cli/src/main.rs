//! Command-line front end: classification, exact series and sums, verdicts,
//! residue tables, violation and witness scans, sweeps, and the two
//! verification oracles.
//!
//! Exit codes: 0 success, 1 usage error, 2 mathematically invalid input
//! (Hasse violation, inadmissible pair, unsupported order).

mod output;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use mertens_ff::{
    admissible_traces, classify, conjecture_scan, mertens_sums, mobius_coefficients,
    parse_decimal, product_oracle, residue_table, sweep, trace_census_opts, verdict,
    witness_search, Error, IsogenyClass, PrimePower,
};
use output::{fmt_ratio, record, Format, VerdictRow, CSV_HEADER};

#[derive(Parser)]
#[command(
    name = "mertens-ff",
    about = "Exact Mertens sums and trace classification for elliptic curves over finite fields",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit machine-readable JSON records (one per line)
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,

    /// Emit CSV (columns: q,p,m,a,case,theta,holds,condition,limsup,first_violation)
    #[arg(long, global = true)]
    csv: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Classify (q, a) into its Waterhouse case
    Classify {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
    },
    /// List the admissible Frobenius traces over F_q
    Traces {
        #[arg(long)]
        q: u64,
    },
    /// Exact Möbius coefficients c_0..c_nmax
    Series {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, default_value_t = 12)]
        nmax: usize,
    },
    /// Exact M(X) for X = 1..xmax with normalized ratios
    Sums {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, default_value_t = 20)]
        xmax: usize,
    },
    /// Decide the Mertens bound for (q, a)
    Verdict {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
    },
    /// limsup of |M(X)|/q^(X/2)
    Limsup {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
    },
    /// Exact per-residue ratio table (rational-angle classes)
    Table {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
    },
    /// Scan for violations M(X)^2 > q^X up to xmax
    Check {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, default_value_t = 500)]
        xmax: u64,
    },
    /// All X <= xmax with |M(X)| > (1 - epsilon) q^(X/2)
    Witnesses {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        /// Decimal in (0, 1), e.g. 0.25; compared exactly
        #[arg(long)]
        epsilon: String,
        #[arg(long, default_value_t = 100)]
        xmax: u64,
    },
    /// Verdicts for every admissible (q, a) with q <= qmax
    Sweep {
        #[arg(long)]
        qmax: u64,
        /// Bound for the per-pair violation scan
        #[arg(long, default_value_t = 500)]
        xmax: u64,
        /// Worker threads (default: available parallelism)
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Compare the coefficient recurrence against the Euler-product oracle
    VerifyProduct {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, default_value_t = 12)]
        nmax: usize,
    },
    /// Enumerate all curves over F_q and compare realized traces with the
    /// admissible set
    Census {
        #[arg(long)]
        q: u64,
        /// Lift the order cap (cost grows like q^7)
        #[arg(long)]
        force_large: bool,
        /// Worker threads (default: available parallelism)
        #[arg(long)]
        threads: Option<usize>,
    },
}

fn main() {
    // die quietly when a pipeline closes our stdout (e.g. `sweep | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{err}");
                    std::process::exit(0);
                }
                _ => {
                    eprint!("{err}");
                    std::process::exit(1);
                }
            }
        }
    };
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Human
    };
    if let Err(err) = run(cli.command, format) {
        eprintln!("error: {err}");
        std::process::exit(2);
    }
}

fn configure_threads(threads: Option<usize>) {
    #[cfg(feature = "parallel")]
    if let Some(n) = threads {
        // ignore failure: the global pool can only be sized once
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    #[cfg(not(feature = "parallel"))]
    if threads.is_some() {
        eprintln!("note: built without the parallel feature; --threads ignored");
    }
}

fn class(q: u64, a: i64) -> Result<IsogenyClass, Error> {
    classify(PrimePower::from_order(q)?, a)
}

fn usage_error(message: &str) -> ! {
    eprintln!("error: {message}");
    std::process::exit(1);
}

fn run(command: Command, format: Format) -> Result<(), Error> {
    match command {
        Command::Classify { q, a } => {
            let cls = class(q, a)?;
            let row = VerdictRow::from_class(&cls);
            emit_row("classify", json!({"q": q.to_string(), "a": a.to_string()}), row, format);
        }
        Command::Traces { q } => {
            let order = PrimePower::from_order(q)?;
            let traces = admissible_traces(order);
            let inputs = json!({"q": q.to_string()});
            match format {
                Format::Json => {
                    let list: Vec<Value> =
                        traces.iter().map(|a| Value::String(a.to_string())).collect();
                    println!(
                        "{}",
                        record(
                            "traces",
                            inputs,
                            json!({"count": traces.len().to_string(), "traces": list})
                        )
                    );
                }
                Format::Csv => {
                    println!("a");
                    for a in traces {
                        println!("{a}");
                    }
                }
                Format::Human => {
                    println!(
                        "admissible traces over F_{q}: {}",
                        traces
                            .iter()
                            .map(|a| a.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    );
                }
            }
        }
        Command::Series { q, a, nmax } => {
            let cls = class(q, a)?;
            let series = mobius_coefficients(&cls, nmax);
            let inputs =
                json!({"q": q.to_string(), "a": a.to_string(), "nmax": nmax.to_string()});
            match format {
                Format::Json => {
                    let coeffs: Vec<Value> = series
                        .coefficients()
                        .iter()
                        .map(|c| Value::String(c.to_string()))
                        .collect();
                    println!(
                        "{}",
                        record("series", inputs, json!({"coefficients": coeffs}))
                    );
                }
                Format::Csv => {
                    println!("n,c_n");
                    for (n, c) in series.coefficients().iter().enumerate() {
                        println!("{n},{c}");
                    }
                }
                Format::Human => {
                    println!("{:>4}  c_N", "N");
                    for (n, c) in series.coefficients().iter().enumerate() {
                        println!("{n:>4}  {c}");
                    }
                }
            }
        }
        Command::Sums { q, a, xmax } => {
            if xmax == 0 {
                usage_error("--xmax must be at least 1");
            }
            let cls = class(q, a)?;
            let traj = mertens_sums(&cls, xmax);
            let inputs =
                json!({"q": q.to_string(), "a": a.to_string(), "xmax": xmax.to_string()});
            match format {
                Format::Json => {
                    let sums: Vec<Value> = traj
                        .sums()
                        .iter()
                        .map(|m| Value::String(m.to_string()))
                        .collect();
                    let ratios: Vec<Value> = traj
                        .ratios()
                        .iter()
                        .map(|r| Value::String(fmt_ratio(*r)))
                        .collect();
                    println!(
                        "{}",
                        record(
                            "sums",
                            inputs,
                            json!({"m_values": sums, "ratios": ratios})
                        )
                    );
                }
                Format::Csv => {
                    println!("x,m,ratio");
                    for x in 1..=xmax {
                        println!("{x},{},{}", traj.sum(x), fmt_ratio(traj.ratio(x)));
                    }
                }
                Format::Human => {
                    println!("{:>5}  {:>24}  M(X)/q^(X/2)", "X", "M(X)");
                    for x in 1..=xmax {
                        println!(
                            "{x:>5}  {:>24}  {}",
                            traj.sum(x).to_string(),
                            fmt_ratio(traj.ratio(x))
                        );
                    }
                }
            }
        }
        Command::Verdict { q, a } => {
            let v = verdict(PrimePower::from_order(q)?, a)?;
            let row = VerdictRow::from_class(v.class()).with_verdict(&v);
            emit_row("verdict", json!({"q": q.to_string(), "a": a.to_string()}), row, format);
        }
        Command::Limsup { q, a } => {
            let v = verdict(PrimePower::from_order(q)?, a)?;
            let row = VerdictRow::from_class(v.class()).with_verdict(&v);
            let inputs = json!({"q": q.to_string(), "a": a.to_string()});
            match format {
                Format::Json => {
                    let payload = json!({
                        "kind": if v.limsup().is_infinite() { "infinite" } else { "finite" },
                        "limsup": row.limsup.clone().unwrap(),
                        "limsup_exact": row
                            .limsup_exact
                            .clone()
                            .flatten()
                            .map(Value::String)
                            .unwrap_or(Value::Null),
                    });
                    println!("{}", record("limsup", inputs, payload));
                }
                Format::Csv => {
                    println!("{CSV_HEADER}");
                    println!("{}", row.csv());
                }
                Format::Human => println!("{}", row.human()),
            }
        }
        Command::Table { q, a } => {
            let cls = class(q, a)?;
            let table = residue_table(&cls)?;
            let inputs = json!({"q": q.to_string(), "a": a.to_string()});
            match format {
                Format::Json => {
                    let rows: Vec<Value> = table
                        .values()
                        .iter()
                        .enumerate()
                        .map(|(r, v)| {
                            json!({
                                "residue": r.to_string(),
                                "value": v.to_string(),
                                "decimal": fmt_ratio(v.to_f64()),
                            })
                        })
                        .collect();
                    let max_residues: Vec<Value> = table
                        .max_residues()
                        .iter()
                        .map(|r| Value::String(r.to_string()))
                        .collect();
                    let payload = json!({
                        "period": table.period().to_string(),
                        "rows": rows,
                        "max_abs": fmt_ratio(table.max_abs().to_f64()),
                        "max_abs_exact": table.max_abs().to_string(),
                        "max_residues": max_residues,
                    });
                    println!("{}", record("table", inputs, payload));
                }
                Format::Csv => {
                    println!("residue,value,decimal");
                    for (r, v) in table.values().iter().enumerate() {
                        println!("{r},{},{}", v, fmt_ratio(v.to_f64()));
                    }
                }
                Format::Human => {
                    println!("period {} (X mod {})", table.period(), table.period());
                    println!("{:>8}  {:>24}  decimal", "residue", "exact");
                    for (r, v) in table.values().iter().enumerate() {
                        println!("{r:>8}  {:>24}  {}", v.to_string(), fmt_ratio(v.to_f64()));
                    }
                    println!(
                        "max |value| = {} = {}",
                        table.max_abs(),
                        fmt_ratio(table.max_abs().to_f64())
                    );
                }
            }
        }
        Command::Check { q, a, xmax } => {
            if xmax == 0 {
                usage_error("--xmax must be at least 1");
            }
            let cls = class(q, a)?;
            let report = conjecture_scan(&cls, xmax);
            let inputs =
                json!({"q": q.to_string(), "a": a.to_string(), "xmax": xmax.to_string()});
            match format {
                Format::Json => {
                    let payload = json!({
                        "first_violation": report
                            .first_violation
                            .map(|x| Value::String(x.to_string()))
                            .unwrap_or(Value::Null),
                        "violation_count": report.violation_count.to_string(),
                        "holds_in_range": report.first_violation.is_none(),
                    });
                    println!("{}", record("check", inputs, payload));
                }
                Format::Csv => {
                    println!("xmax,first_violation,violation_count");
                    println!(
                        "{xmax},{},{}",
                        report
                            .first_violation
                            .map(|x| x.to_string())
                            .unwrap_or_default(),
                        report.violation_count
                    );
                }
                Format::Human => match report.first_violation {
                    Some(x) => println!(
                        "|M(X)| exceeds q^(X/2) first at X = {x}; {} violations with X <= {xmax}",
                        report.violation_count
                    ),
                    None => println!("|M(X)| <= q^(X/2) for all X <= {xmax}"),
                },
            }
        }
        Command::Witnesses {
            q,
            a,
            epsilon,
            xmax,
        } => {
            if xmax == 0 {
                usage_error("--xmax must be at least 1");
            }
            let eps = match parse_decimal(&epsilon) {
                Some(e) => e,
                None => usage_error("--epsilon must be a decimal number like 0.25"),
            };
            let zero = parse_decimal("0").unwrap();
            let one = parse_decimal("1").unwrap();
            if eps <= zero || eps >= one {
                usage_error("--epsilon must lie strictly between 0 and 1");
            }
            let cls = class(q, a)?;
            let found = witness_search(&cls, &eps, xmax);
            let inputs = json!({
                "q": q.to_string(),
                "a": a.to_string(),
                "epsilon": epsilon,
                "xmax": xmax.to_string(),
            });
            match format {
                Format::Json => {
                    let list: Vec<Value> =
                        found.iter().map(|x| Value::String(x.to_string())).collect();
                    println!(
                        "{}",
                        record(
                            "witnesses",
                            inputs,
                            json!({"count": found.len().to_string(), "witnesses": list})
                        )
                    );
                }
                Format::Csv => {
                    println!("x");
                    for x in found {
                        println!("{x}");
                    }
                }
                Format::Human => {
                    println!(
                        "X <= {xmax} with |M(X)| > (1 - {epsilon}) q^(X/2): {}",
                        found
                            .iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    );
                }
            }
        }
        Command::Sweep { qmax, xmax, threads } => {
            if xmax == 0 {
                usage_error("--xmax must be at least 1");
            }
            configure_threads(threads);
            let rows = sweep(qmax, xmax);
            match format {
                Format::Json => {
                    for entry in &rows {
                        let row = VerdictRow::from_class(entry.verdict.class())
                            .with_verdict(&entry.verdict)
                            .with_first_violation(entry.first_violation);
                        let inputs = json!({
                            "qmax": qmax.to_string(),
                            "xmax": xmax.to_string(),
                            "q": entry.verdict.class().q().q().to_string(),
                            "a": entry.verdict.class().trace().to_string(),
                        });
                        println!("{}", record("sweep", inputs, row.json_payload()));
                    }
                }
                Format::Csv => {
                    println!("{CSV_HEADER}");
                    for entry in &rows {
                        let row = VerdictRow::from_class(entry.verdict.class())
                            .with_verdict(&entry.verdict)
                            .with_first_violation(entry.first_violation);
                        println!("{}", row.csv());
                    }
                }
                Format::Human => {
                    let holds = rows.iter().filter(|r| r.verdict.holds()).count();
                    println!(
                        "{} admissible pairs with q <= {qmax}; bound holds for {holds}",
                        rows.len()
                    );
                    for entry in &rows {
                        let v = &entry.verdict;
                        let limsup = match v.limsup() {
                            mertens_ff::Limsup::Finite(value) => fmt_ratio(value),
                            mertens_ff::Limsup::Infinite => "infinite".to_string(),
                        };
                        println!(
                            "q={:<4} a={:<4} case {:<4} holds={:<5} limsup={limsup}",
                            v.class().q().q(),
                            v.class().trace(),
                            v.class().case().tag(),
                            v.holds(),
                        );
                    }
                }
            }
        }
        Command::VerifyProduct { q, a, nmax } => {
            if nmax > 64 {
                usage_error("--nmax is capped at 64 for the product oracle");
            }
            let cls = class(q, a)?;
            let recurrence = mobius_coefficients(&cls, nmax);
            let oracle = product_oracle(&cls, nmax);
            let first_mismatch = recurrence
                .coefficients()
                .iter()
                .zip(&oracle)
                .position(|(r, o)| r != o);
            let equal = first_mismatch.is_none();
            let inputs =
                json!({"q": q.to_string(), "a": a.to_string(), "nmax": nmax.to_string()});
            match format {
                Format::Json => {
                    let rec: Vec<Value> = recurrence
                        .coefficients()
                        .iter()
                        .map(|c| Value::String(c.to_string()))
                        .collect();
                    let orc: Vec<Value> =
                        oracle.iter().map(|c| Value::String(c.to_string())).collect();
                    let payload = json!({
                        "equal": equal,
                        "first_mismatch": first_mismatch
                            .map(|n| Value::String(n.to_string()))
                            .unwrap_or(Value::Null),
                        "recurrence": rec,
                        "product": orc,
                    });
                    println!("{}", record("verify-product", inputs, payload));
                }
                Format::Csv => {
                    println!("n,recurrence,product,equal");
                    for (n, (r, o)) in
                        recurrence.coefficients().iter().zip(&oracle).enumerate()
                    {
                        println!("{n},{r},{o},{}", r == o);
                    }
                }
                Format::Human => {
                    if equal {
                        println!(
                            "recurrence and Euler-product oracle agree on c_0..c_{nmax}"
                        );
                    } else {
                        println!(
                            "MISMATCH at N = {}: recurrence {} vs product {}",
                            first_mismatch.unwrap(),
                            recurrence.coefficient(first_mismatch.unwrap()),
                            oracle[first_mismatch.unwrap()]
                        );
                    }
                }
            }
        }
        Command::Census {
            q,
            force_large,
            threads,
        } => {
            configure_threads(threads);
            let order = PrimePower::from_order(q)?;
            let census = trace_census_opts(order, force_large, true)?;
            let expected = admissible_traces(order);
            let matches = census.realized_traces() == expected;
            let inputs = json!({
                "q": q.to_string(),
                "force_large": force_large,
            });
            match format {
                Format::Json => {
                    let realized: Vec<Value> = census
                        .realized_traces()
                        .iter()
                        .map(|a| Value::String(a.to_string()))
                        .collect();
                    let counts: Vec<Value> = census
                        .counts()
                        .iter()
                        .map(|(a, n)| {
                            json!({"trace": a.to_string(), "curves": n.to_string()})
                        })
                        .collect();
                    let payload = json!({
                        "realized_traces": realized,
                        "counts": counts,
                        "total_curves": census.total_curves().to_string(),
                        "matches_admissible": matches,
                    });
                    println!("{}", record("census", inputs, payload));
                }
                Format::Csv => {
                    println!("trace,curves");
                    for (a, n) in census.counts() {
                        println!("{a},{n}");
                    }
                }
                Format::Human => {
                    println!("curve census over F_{q} ({} nonsingular curves)", census.total_curves());
                    println!("{:>6}  curves", "trace");
                    for (a, n) in census.counts() {
                        println!("{a:>6}  {n}");
                    }
                    println!(
                        "realized traces {} the admissible set",
                        if matches { "match" } else { "DIFFER FROM" }
                    );
                }
            }
        }
    }
    Ok(())
}

fn emit_row(command: &str, inputs: Value, row: VerdictRow, format: Format) {
    match format {
        Format::Json => println!("{}", record(command, inputs, row.json_payload())),
        Format::Csv => {
            println!("{CSV_HEADER}");
            println!("{}", row.csv());
        }
        Format::Human => println!("{}", row.human()),
    }
}
