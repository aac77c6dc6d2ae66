use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use brauerkit::catalog::{catalog, parse_group_spec};
use brauerkit::classes::{classify, prime_divisors};
use brauerkit::prim::verify_classification;
use brauerkit::relations::{primordiality_trichotomy, relation_lattice, Characteristic};
use brauerkit::store::{GroupStore, StoreConfig};
use brauerkit::{Error, FiniteGroup};

use brauerkit_cli::report::*;

/// Exact Burnside-ring computations: subgroup lattices, tables of marks,
/// relation lattices, primitive quotients, and conformance sweeps.
#[derive(Parser)]
#[command(name = "brauerkit", version)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Directory for the persistent lattice/marks cache.
    #[arg(long, global = true, env = "BRAUERKIT_CACHE")]
    cache_dir: Option<PathBuf>,
    /// Cap on the order of generated groups.
    #[arg(long, global = true, default_value_t = 200)]
    order_cap: usize,
    /// Cap on the number of subgroups enumerated per group.
    #[arg(long, global = true, default_value_t = 20_000)]
    lattice_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Class predicates: cyclic, quasi-elementary, hypo-elementary, Dress.
    Classify {
        #[arg(long)]
        group: String,
        /// Extra primes to query, on top of those dividing the order.
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
    },
    /// Conjugacy classes of subgroups.
    Subgroups {
        #[arg(long)]
        group: String,
    },
    /// The table of marks.
    Marks {
        #[arg(long)]
        group: String,
    },
    /// The relation lattice in a characteristic.
    Relations {
        #[arg(long)]
        group: String,
        #[arg(long = "char")]
        characteristic: u64,
    },
    /// The primitive quotient report.
    Prim {
        #[arg(long)]
        group: String,
        #[arg(long = "char")]
        characteristic: u64,
        /// Exit nonzero unless prediction and computation agree.
        #[arg(long)]
        verify: bool,
    },
    /// Trichotomy and classification checks for one group.
    Verify {
        #[arg(long)]
        group: String,
        #[arg(long = "char")]
        characteristic: u64,
    },
    /// Functor-axiom checks over sampled configurations.
    Axioms {
        /// Comma-separated group specs; defaults to catalog groups of
        /// order at most 24.
        #[arg(long, value_delimiter = ',')]
        groups: Vec<String>,
        /// Sampled instances per axiom per group.
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Conformance sweep over the built-in catalog.
    Sweep {
        #[arg(long = "char")]
        characteristic: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn make_store(cli: &Cli) -> GroupStore {
    GroupStore::with_config(StoreConfig {
        order_cap: cli.order_cap,
        lattice_cap: cli.lattice_cap,
        cache_dir: cli.cache_dir.clone(),
    })
}

/// Parses a spec and realises it; returns the canonical rendering too.
fn realise(spec_text: &str, order_cap: usize) -> Result<(String, FiniteGroup), Error> {
    let spec = parse_group_spec(spec_text)?;
    let group = spec.to_group(order_cap)?;
    Ok((spec.to_string(), group))
}

fn emit<T: serde::Serialize>(cli: &Cli, value: &T, text: impl FnOnce()) {
    if cli.json {
        println!("{}", serde_json::to_string_pretty(value).expect("serialisable"));
    } else {
        text();
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    let store = make_store(cli);
    match &cli.command {
        Command::Classify { group, primes } => {
            let (name, g) = realise(group, cli.order_cap)?;
            let data = store.data(&g)?;
            let mut all: Vec<u64> = prime_divisors(g.order());
            for &p in primes {
                if !brauerkit::classes::is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                if !all.contains(&p) {
                    all.push(p);
                }
            }
            all.sort_unstable();
            let report = classify(&store, &data, &all)?;
            let out = ClassifyOut::new(name, all, &report);
            emit(cli, &out, || {
                println!("group {} of order {}", out.group, out.order);
                println!("  cyclic: {}", out.is_cyclic);
                println!("  quasi-elementary for q in {:?}", out.quasi_elementary_primes);
                println!("  hypo-elementary for p in {:?}", out.hypo_elementary_primes);
                for (p, qs) in &out.dress_pairs {
                    println!("  ({p},q)-Dress for q in {qs:?}");
                }
            });
            Ok(0)
        }
        Command::Subgroups { group } => {
            let (name, g) = realise(group, cli.order_cap)?;
            let data = store.data(&g)?;
            let out = SubgroupsOut::new(name, &data);
            emit(cli, &out, || {
                println!(
                    "group {} of order {}: {} subgroups in {} classes",
                    out.group,
                    out.order,
                    out.subgroup_count,
                    out.classes.len()
                );
                for c in &out.classes {
                    println!(
                        "  [{}] {:<6} order {:<4} size {:<3} normal {:<5} |N_G| {}",
                        c.index, c.name, c.order, c.size, c.normal, c.normalizer_order
                    );
                }
            });
            Ok(0)
        }
        Command::Marks { group } => {
            let (name, g) = realise(group, cli.order_cap)?;
            let data = store.data(&g)?;
            let out = MarksOut::new(name, &data);
            emit(cli, &out, || {
                println!("table of marks of {} over {:?}", out.group, out.classes);
                for row in &out.matrix {
                    println!("  {}", row.join(" "));
                }
            });
            Ok(0)
        }
        Command::Relations {
            group,
            characteristic,
        } => {
            let ch = Characteristic::new(*characteristic)?;
            let (name, g) = realise(group, cli.order_cap)?;
            let data = store.data(&g)?;
            let rel = relation_lattice(&store, &data, ch)?;
            let out = RelationsOut::new(name, &data, &rel);
            emit(cli, &out, || {
                println!(
                    "relations of {} in characteristic {}: rank {}",
                    out.group, out.characteristic, out.rank
                );
                let detecting: Vec<&str> =
                    out.detecting.iter().map(|&i| out.classes[i].as_str()).collect();
                println!("  detecting classes: {detecting:?}");
                for p in &out.pretty {
                    println!("  {p}");
                }
                println!("  top-coefficient ideal: ({})", out.top_ideal);
            });
            Ok(0)
        }
        Command::Prim {
            group,
            characteristic,
            verify,
        } => {
            let ch = Characteristic::new(*characteristic)?;
            let (name, g) = realise(group, cli.order_cap)?;
            let data = store.data(&g)?;
            let report = verify_classification(&store, &data, ch)?;
            let out = PrimOut::new(name, &data, &report);
            emit(cli, &out, || print_prim(&out));
            Ok(if *verify && !out.agree { 1 } else { 0 })
        }
        Command::Verify {
            group,
            characteristic,
        } => {
            let ch = Characteristic::new(*characteristic)?;
            let (name, g) = realise(group, cli.order_cap)?;
            let data = store.data(&g)?;
            let trichotomy = primordiality_trichotomy(&store, &data, ch)?;
            let classification = verify_classification(&store, &data, ch)?;
            let agree = trichotomy.agree && classification.agree;
            let out = VerifyOut {
                group: name.clone(),
                characteristic: ch.as_u64(),
                trichotomy: TrichotomyOut::new(&trichotomy),
                classification: PrimOut::new(name, &data, &classification),
                agree,
            };
            emit(cli, &out, || {
                println!(
                    "verify {} in characteristic {}: {}",
                    out.group,
                    out.characteristic,
                    if out.agree { "agree" } else { "DISAGREE" }
                );
                println!(
                    "  top ideal: predicted ({}) computed ({})",
                    out.trichotomy.predicted, out.trichotomy.computed
                );
                print_prim(&out.classification);
            });
            Ok(if agree { 0 } else { 1 })
        }
        Command::Axioms {
            groups,
            samples,
            seed,
        } => {
            let mut names = Vec::new();
            let mut realised = Vec::new();
            if groups.is_empty() {
                for entry in catalog() {
                    let g = entry.group(cli.order_cap)?;
                    if g.order() <= 24 {
                        names.push(entry.spec.to_string());
                        realised.push(g);
                    }
                }
            } else {
                for spec in groups {
                    let (name, g) = realise(spec, cli.order_cap)?;
                    names.push(name);
                    realised.push(g);
                }
            }
            let reports = brauerkit::axioms::run_axiom_suite(&store, &realised, *samples, *seed)?;
            let all_passed = reports.iter().all(|r| r.passed());
            let out = AxiomsOut {
                groups: names,
                samples_per_group: *samples,
                seed: *seed,
                reports: reports
                    .into_iter()
                    .map(|r| AxiomReportOut {
                        axiom: r.axiom.to_string(),
                        instances: r.instances,
                        failures: r.failures,
                    })
                    .collect(),
                all_passed,
            };
            emit(cli, &out, || {
                println!(
                    "axioms over {} groups, {} samples each, seed {}",
                    out.groups.len(),
                    out.samples_per_group,
                    out.seed
                );
                for r in &out.reports {
                    println!(
                        "  {:<5} {:>5} instances  {}",
                        r.axiom,
                        r.instances,
                        if r.failures.is_empty() {
                            "ok".to_string()
                        } else {
                            format!("{} FAILURES", r.failures.len())
                        }
                    );
                    for f in &r.failures {
                        println!("    {f}");
                    }
                }
            });
            Ok(if all_passed { 0 } else { 1 })
        }
        Command::Sweep { characteristic } => {
            let ch = Characteristic::new(*characteristic)?;
            let entries: Vec<Result<SweepEntryOut, Error>> = catalog()
                .into_par_iter()
                .map(|entry| {
                    let g = entry.group(cli.order_cap)?;
                    let data = store.data(&g)?;
                    let trichotomy = primordiality_trichotomy(&store, &data, ch)?;
                    let classification = verify_classification(&store, &data, ch)?;
                    Ok(SweepEntryOut {
                        group: entry.name.to_string(),
                        order: g.order(),
                        trichotomy: TrichotomyOut::new(&trichotomy),
                        predicted: PredictedOut::new(&classification.predicted),
                        structure: structure_string(
                            classification.free_rank,
                            &classification.torsion,
                        ),
                        classification_agree: classification.agree,
                        agree: trichotomy.agree && classification.agree,
                    })
                })
                .collect();
            let entries: Vec<SweepEntryOut> =
                entries.into_iter().collect::<Result<_, _>>()?;
            let all_agree = entries.iter().all(|e| e.agree);
            let out = SweepOut {
                characteristic: ch.as_u64(),
                entries,
                all_agree,
            };
            emit(cli, &out, || {
                println!("sweep in characteristic {}", out.characteristic);
                println!(
                    "  {:<10} {:>5}  {:>9} {:>9}  {:<16} {:<10} {}",
                    "group", "order", "pred g", "comp g", "predicted", "structure", "agree"
                );
                for e in &out.entries {
                    let predicted = match (&e.predicted.kind[..], e.predicted.q) {
                        ("Z/q", Some(q)) => format!("Z/{q}"),
                        (kind, _) => kind.to_string(),
                    };
                    println!(
                        "  {:<10} {:>5}  {:>9} {:>9}  {:<16} {:<10} {}",
                        e.group,
                        e.order,
                        e.trichotomy.predicted,
                        e.trichotomy.computed,
                        predicted,
                        e.structure,
                        e.agree
                    );
                }
                println!("all agree: {}", out.all_agree);
            });
            Ok(if all_agree { 0 } else { 1 })
        }
    }
}

fn print_prim(out: &PrimOut) {
    println!(
        "primitive quotient of {} in characteristic {}",
        out.group, out.characteristic
    );
    println!(
        "  relation rank {}, imprimitive rank {}",
        out.k_rank, out.imprim_rank
    );
    println!("  structure: {}", out.structure);
    let predicted = match (&out.predicted.kind[..], out.predicted.q) {
        ("Z/q", Some(q)) => format!("Z/{q}"),
        ("not_applicable", _) => format!(
            "not applicable ({})",
            out.predicted.reason.as_deref().unwrap_or("")
        ),
        (kind, _) => kind.to_string(),
    };
    println!("  predicted: {predicted}");
    if let Some(pretty) = &out.generator_pretty {
        println!("  generator: {pretty}");
    }
    println!("  agree: {}", out.agree);
}
