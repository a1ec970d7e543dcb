//! `seqlogic`: normal forms, congruence checks and model search for
//! short-circuit logic from the command line.
//!
//! Exit codes: 0 success or holds, 1 refuted or not equivalent, 2 usage or
//! input error, 3 search budget exhausted.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use seqlogic::congruences::{
    axiom_set, check_equation_verdict, equiv, normal_form, parse_axiom_file, verify_set, AxiomSet,
    CongruenceId, Equation, Family, Verdict,
};
use seqlogic::modelfinder::{find_model, render_counter_example, SearchConfig, SearchOutcome};
use seqlogic::normalforms::{AtomOrder, Valuedness};
use seqlogic::semantics::truth_table;
use seqlogic::terms::dual;
use seqlogic::textio::{parse_any, parse_cond, parse_seq, parse_term, print, print_cond, print_seq, to_dot};
use seqlogic::translate::{cond_to_seq, seq_to_cond};
use seqlogic::{Error, Signature, Term};

#[derive(Parser)]
#[command(name = "seqlogic", version, about = "Short-circuit logic: normal forms, congruences, model search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Sig {
    Seq,
    Cond,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Seq2cond,
    Cond2seq,
}

#[derive(Clone, Copy, ValueEnum)]
enum Congruence {
    Free,
    Mem,
    Cl,
}

impl From<Congruence> for Family {
    fn from(c: Congruence) -> Family {
        match c {
            Congruence::Free => Family::Free,
            Congruence::Mem => Family::Mem,
            Congruence::Cl => Family::Cl,
        }
    }
}

#[derive(clap::Args)]
struct CongruenceArgs {
    #[arg(long, value_enum)]
    congruence: Congruence,
    /// Use three-valued semantics even if `U` does not occur.
    #[arg(long)]
    three: bool,
}

impl CongruenceArgs {
    fn id(&self, terms: &[&Term]) -> CongruenceId {
        let three = self.three || terms.iter().any(|t| t.is_three_valued());
        let valued = if three { Valuedness::Three } else { Valuedness::Two };
        CongruenceId::new(self.congruence.into(), valued)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse and print in canonical form.
    Parse {
        #[arg(long, value_enum)]
        sig: Sig,
        expr: String,
    },
    /// Print the normal form for a congruence.
    Nf {
        #[command(flatten)]
        cong: CongruenceArgs,
        /// Comma-separated atom order; unlisted atoms follow by name.
        #[arg(long, default_value = "")]
        order: String,
        /// Also write the normal form as a DOT graph.
        #[arg(long)]
        dot: Option<PathBuf>,
        expr: String,
    },
    /// Decide whether two closed terms are congruent.
    Equiv {
        #[command(flatten)]
        cong: CongruenceArgs,
        #[arg(long, default_value = "")]
        order: String,
        lhs: String,
        rhs: String,
    },
    /// Decide an equation with variables `?x`.
    CheckEq {
        #[command(flatten)]
        cong: CongruenceArgs,
        equation: String,
    },
    /// Check every axiom of a set under a congruence.
    VerifyAxioms {
        /// Built-in set name, or `@FILE`.
        #[arg(long)]
        set: String,
        #[command(flatten)]
        cong: CongruenceArgs,
    },
    /// Print the truth table as tab-separated values.
    TruthTable {
        /// Only enumerate `T` and `F` for atoms.
        #[arg(long)]
        two: bool,
        expr: String,
    },
    /// Translate between the sequential and the conditional signature.
    Translate {
        #[arg(long, value_enum)]
        dir: Direction,
        expr: String,
    },
    /// Print the dual of a conditional term.
    Dual { expr: String },
    /// Search for a finite model of the axioms that refutes the goal.
    FindModel {
        /// Built-in set name, or `@FILE`.
        #[arg(long)]
        axioms: String,
        #[arg(long)]
        goal: String,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        /// Seconds before giving up.
        #[arg(long, default_value_t = 60)]
        timeout: u64,
    },
    /// Try to refute each axiom of a set from the others.
    Independence {
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        /// Seconds per axiom.
        #[arg(long, default_value_t = 60)]
        timeout: u64,
    },
}

enum Outcome {
    Holds,
    Refuted,
    Exhausted,
}

fn load_set(spec: &str) -> Result<AxiomSet, Error> {
    match spec.strip_prefix('@') {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::AxiomFile {
                line: 0,
                msg: format!("{path}: {e}"),
            })?;
            parse_axiom_file(path, &text)
        }
        None => axiom_set(spec),
    }
}

fn search_config(max_size: usize, timeout: u64) -> Result<SearchConfig, Error> {
    if max_size < 2 {
        return Err(Error::Unsupported("--max-size must be at least 2".into()));
    }
    Ok(SearchConfig {
        max_size,
        deadline: Duration::from_secs(timeout),
        ..SearchConfig::default()
    })
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Outcome::Holds
    } else {
        Outcome::Refuted
    }
}

fn run(cmd: Command) -> Result<Outcome, Error> {
    match cmd {
        Command::Parse { sig, expr } => {
            let sig = match sig {
                Sig::Seq => Signature::Seq,
                Sig::Cond => Signature::Cond,
            };
            println!("{}", print(&parse_term(&expr, sig)?));
            Ok(Outcome::Holds)
        }
        Command::Nf { cong, order, dot, expr } => {
            let t = parse_any(&expr)?;
            let nf = normal_form(&t, cong.id(&[&t]), &AtomOrder::parse(&order)?)?;
            println!("{}", print_cond(nf.term()));
            if let Some(path) = dot {
                std::fs::write(&path, to_dot(nf.term())?)
                    .map_err(|e| Error::Unsupported(format!("{}: {e}", path.display())))?;
            }
            Ok(Outcome::Holds)
        }
        Command::Equiv { cong, order, lhs, rhs } => {
            let (s, t) = (parse_any(&lhs)?, parse_any(&rhs)?);
            let same = equiv(&s, &t, cong.id(&[&s, &t]), &AtomOrder::parse(&order)?)?;
            println!("{}", if same { "equivalent" } else { "not equivalent" });
            Ok(verdict(same))
        }
        Command::CheckEq { cong, equation } => {
            let e = Equation::parse("goal", &equation)?;
            let c = cong.id(&[&e.lhs, &e.rhs]);
            match check_equation_verdict(&e, c)? {
                Verdict::Holds => {
                    println!("holds under {c}");
                    Ok(Outcome::Holds)
                }
                Verdict::Fails { lhs, rhs } => {
                    println!("fails under {c}\n{}\n{}", print_cond(&lhs), print_cond(&rhs));
                    Ok(Outcome::Refuted)
                }
            }
        }
        Command::VerifyAxioms { set, cong } => {
            let set = load_set(&set)?;
            let terms: Vec<&Term> = set.equations.iter().flat_map(|e| [&e.lhs, &e.rhs]).collect();
            let report = verify_set(&set, cong.id(&terms))?;
            print!("{}", report.render());
            Ok(verdict(report.all_hold()))
        }
        Command::TruthTable { two, expr } => {
            let t = parse_any(&expr)?;
            if two && t.is_three_valued() {
                return Err(Error::UndefinedInTwoValued);
            }
            print!("{}", truth_table(&t, &t.alphabet(), !two)?.to_tsv());
            Ok(Outcome::Holds)
        }
        Command::Translate { dir, expr } => {
            match dir {
                Direction::Seq2cond => println!("{}", print_cond(&seq_to_cond(&parse_seq(&expr)?))),
                Direction::Cond2seq => println!("{}", print_seq(&cond_to_seq(&parse_cond(&expr)?))),
            }
            Ok(Outcome::Holds)
        }
        Command::Dual { expr } => {
            println!("{}", print_cond(&dual(&parse_cond(&expr)?)));
            Ok(Outcome::Holds)
        }
        Command::FindModel { axioms, goal, max_size, timeout } => {
            let set = load_set(&axioms)?;
            let goal = Equation::parse("goal", &goal)?;
            let cfg = search_config(max_size, timeout)?;
            match find_model(&set.equations, &goal, &cfg)? {
                SearchOutcome::CounterModel(ce) => {
                    print!("{}", render_counter_example(&ce));
                    Ok(Outcome::Refuted)
                }
                SearchOutcome::NoModel => {
                    println!("no counter-model up to size {max_size}");
                    Ok(Outcome::Holds)
                }
                SearchOutcome::Inconclusive(why) => {
                    println!("inconclusive: {why}");
                    Ok(Outcome::Exhausted)
                }
            }
        }
        Command::Independence { set, max_size, timeout } => {
            let set = load_set(&set)?;
            let cfg = search_config(max_size, timeout)?;
            let mut found = 0;
            let mut exhausted = false;
            for e in &set.equations {
                let rest = set.without(&e.name);
                let outcome = find_model(&rest.equations, e, &cfg)?;
                println!("{}\t{outcome}", e.name);
                match outcome {
                    SearchOutcome::CounterModel(ce) => {
                        found += 1;
                        for line in render_counter_example(&ce).lines() {
                            println!("  {line}");
                        }
                    }
                    SearchOutcome::NoModel => {}
                    SearchOutcome::Inconclusive(_) => exhausted = true,
                }
            }
            let n = set.equations.len();
            println!("{found}/{n} axioms independent in {}", set.name);
            Ok(if found == n {
                Outcome::Holds
            } else if exhausted {
                Outcome::Exhausted
            } else {
                Outcome::Refuted
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Holds) => ExitCode::from(0),
        Ok(Outcome::Refuted) => ExitCode::from(1),
        Ok(Outcome::Exhausted) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
