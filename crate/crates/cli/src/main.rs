use std::fmt::Display;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fcperm::crowding::{analyze_transition, classify, Crowding};
use fcperm::report::analyze;
use fcperm::verify::{find_check, registry};
use fcperm::weak_order::{build_fc_poset, is_minimal_crowded_oracle};
use fcperm::words::{all_reduced_words, build_heap, build_heap_checked, canonical_word, commutation_classes, parse_letters};
use fcperm::{boolean_core, is_boolean, is_fully_commutative, permutations, rsk, Bounds, Error, Exec, Permutation};

#[derive(Parser)]
#[command(name = "fcperm", version, about = "Fully commutative permutations: tableaux, heaps, cores and crowding")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print only the number of results.
    #[arg(long, global = true)]
    count: bool,
    /// Largest degree allowed for sweeps over S_n.
    #[arg(long, global = true, default_value_t = Bounds::default().max_degree)]
    bound: usize,
    /// Longest permutation whose reduced words may be listed.
    #[arg(long, global = true, default_value_t = Bounds::default().max_word_length)]
    max_word_length: usize,
    /// Print permutations as digit strings when the degree is at most 9.
    #[arg(long, global = true)]
    compact: bool,
    /// Run sweeps on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report on one permutation.
    Analyze {
        perm: Permutation,
        /// Instead, analyze the cover across s_i.
        #[arg(long, value_name = "I")]
        transition: Option<usize>,
    },
    /// List the permutations of S_n passing a filter, lexicographically.
    Enumerate {
        n: usize,
        #[arg(long, value_enum, default_value_t = Filter::All)]
        filter: Filter,
    },
    /// Run an exhaustive check at degree n.
    Verify {
        #[arg(required_unless_present = "list")]
        n: Option<usize>,
        #[arg(required_unless_present = "list")]
        check: Option<String>,
        /// List the available checks.
        #[arg(long)]
        list: bool,
    },
    /// Graphviz output.
    Dot {
        #[command(subcommand)]
        target: DotTarget,
    },
    /// Insertion and recording tableaux.
    Rsk { perm: Permutation },
    /// Boolean core of a fully commutative permutation.
    Core { perm: Permutation },
    /// Reduced words of a permutation.
    Words {
        perm: Permutation,
        /// Group the words into commutation classes.
        #[arg(long)]
        classes: bool,
    },
}

#[derive(Subcommand)]
enum DotTarget {
    /// The heap of a reduced word.
    Heap {
        perm: Permutation,
        /// Reduced word to build the heap from; required when the
        /// permutation contains 321.
        #[arg(long)]
        word: Option<String>,
    },
    /// The fully commutative elements of S_n under the right weak order.
    Poset { n: usize },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Filter {
    All,
    Fc,
    Boolean,
    Uncrowded,
    Crowded,
    MinimalCrowded,
}

impl Filter {
    fn keep(self, w: &Permutation) -> bool {
        let crowded = || classify(w).map(|c| c.is_crowded());
        match self {
            Filter::All => true,
            Filter::Fc => is_fully_commutative(w),
            Filter::Boolean => is_boolean(w),
            Filter::Uncrowded => crowded() == Ok(false),
            Filter::Crowded => crowded() == Ok(true),
            Filter::MinimalCrowded => is_minimal_crowded_oracle(w).unwrap_or(false),
        }
    }
}

/// Why a command failed, mapped to the exit code.
enum Failure {
    /// A check found a counterexample or an invariant broke.
    Verification(String),
    /// Bad input or an exceeded bound.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant { .. } => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

struct Ctx {
    json: bool,
    count: bool,
    compact: bool,
    bounds: Bounds,
    exec: Exec,
}

impl Ctx {
    fn perm(&self, w: &Permutation) -> String {
        w.to_text(self.compact)
    }
}

fn join<T: Display>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn describe(c: &Crowding) -> String {
    match c {
        Crowding::Uncrowded => "uncrowded".into(),
        Crowding::Crowded { witness } => format!(
            "crowded (x={}, y={}, window {})",
            witness.x,
            witness.y,
            join(&witness.window)
        ),
    }
}

fn print_json<T: serde::Serialize>(out: &mut impl Write, value: &T) -> Outcome {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn cmd_analyze(ctx: &Ctx, out: &mut impl Write, w: &Permutation, transition: Option<usize>) -> Outcome {
    if let Some(i) = transition {
        let t = analyze_transition(w, i)?;
        if ctx.json {
            return print_json(out, &t);
        }
        writeln!(out, "v: {}", ctx.perm(&t.v))?;
        writeln!(out, "w: {}", ctx.perm(&t.w))?;
        writeln!(out, "i: {}", t.i)?;
        writeln!(out, "M: {}", t.max_prefix)?;
        writeln!(out, "m: {}", t.min_suffix)?;
        writeln!(out, "3142 positions: {}", join(&t.pattern3142))?;
        writeln!(out, "a run: {}", join(&t.a_run))?;
        writeln!(out, "e run: {}", join(&t.e_run))?;
        writeln!(out, "e: {}", t.e)?;
        writeln!(out, "r: {}", t.r)?;
        writeln!(out, "e_k: {}", join(&t.e_seq))?;
        writeln!(out, "t_k: {}", join(&t.t_seq))?;
        writeln!(out, "interval: [{}, {}]", t.interval.0, t.interval.1)?;
        writeln!(out, "row 2 of P(w) in interval: {}", t.count_in_interval)?;
        writeln!(
            out,
            "witness: x={}, y={}, window {}",
            t.witness.x,
            t.witness.y,
            join(&t.witness.window)
        )?;
        return Ok(());
    }

    let r = analyze(w)?;
    if ctx.json {
        return print_json(out, &r);
    }
    writeln!(out, "permutation: {}", ctx.perm(&r.permutation))?;
    writeln!(out, "length: {}", r.length)?;
    writeln!(out, "descents: {}", join(&r.descents))?;
    writeln!(out, "support: {}", join(&r.support))?;
    writeln!(out, "reduced word: {}", r.reduced_word)?;
    writeln!(out, "fully commutative: {}", yes(r.fully_commutative))?;
    writeln!(out, "boolean: {}", yes(r.boolean))?;
    if let Some(core) = &r.core {
        writeln!(out, "core: {}", ctx.perm(core))?;
    }
    writeln!(out, "P: {}", r.p_tableau)?;
    writeln!(out, "Q: {}", r.q_tableau)?;
    writeln!(out, "row 2: {}", join(&r.row2))?;
    if let Some(c) = &r.classification {
        writeln!(out, "classification: {}", describe(c))?;
    }
    if let Some(m) = &r.minimal_crowded {
        writeln!(out, "minimal crowded: {}", yes(m.minimal))?;
        let conditions = [
            ("descents d, d+2, ..., d+2k with k >= 2", m.alternating_descents),
            ("descent tops crowded", m.crowded_descent_tops),
            ("fixed outside [d, d+2k+1]", m.fixes_outside),
            ("415263 occurs, only consecutively", m.consecutive_415263),
            ("windows are 415263 or 315264", m.windows_415263_or_315264),
        ];
        for (label, (text, ok)) in ["a", "b", "c", "d", "e"].iter().zip(conditions) {
            writeln!(out, "  ({label}) {text}: {}", if ok { "pass" } else { "fail" })?;
        }
    }
    Ok(())
}

fn cmd_enumerate(ctx: &Ctx, out: &mut impl Write, n: usize, filter: Filter) -> Outcome {
    ctx.bounds.check_degree(n)?;
    let stream = permutations(n).filter(|w| filter.keep(w));
    if ctx.count {
        let c = stream.count();
        if ctx.json {
            return print_json(out, &serde_json::json!({ "n": n, "count": c }));
        }
        writeln!(out, "{c}")?;
    } else if ctx.json {
        let items: Vec<String> = stream.map(|w| ctx.perm(&w)).collect();
        print_json(out, &items)?;
    } else {
        for w in stream {
            writeln!(out, "{}", ctx.perm(&w))?;
        }
    }
    Ok(())
}

fn cmd_verify(ctx: &Ctx, out: &mut impl Write, n: Option<usize>, name: Option<String>, list: bool) -> Outcome {
    if list {
        for c in registry() {
            let names = std::iter::once(c.id).chain(c.aliases.iter().copied()).collect::<Vec<_>>();
            writeln!(out, "{:<36} n={}  {}", names.join(" | "), c.default_n, c.about)?;
        }
        return Ok(());
    }
    let (n, name) = (n.expect("required by clap"), name.expect("required by clap"));
    let check = find_check(&name).ok_or_else(|| Failure::Usage(format!("unknown check {name:?}")))?;
    let report = check.run(n, ctx.exec, &ctx.bounds)?;
    if ctx.json {
        print_json(out, &report)?;
    } else if let Some(c) = &report.counterexample {
        writeln!(out, "FAIL {} n={}", report.check, n)?;
        writeln!(out, "counterexample: {}", c.subject)?;
        writeln!(out, "{}", c.detail)?;
    } else {
        writeln!(out, "PASS {} n={} ({} checked)", report.check, n, report.checked)?;
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification(format!("{} failed", report.check)))
    }
}

fn cmd_dot(ctx: &Ctx, out: &mut impl Write, target: &DotTarget) -> Outcome {
    match target {
        DotTarget::Heap { perm, word } => {
            let heap = match word {
                Some(text) => {
                    let letters = parse_letters(text)?;
                    let heap = build_heap_checked(&letters, perm.degree())?;
                    let value = fcperm::words::evaluate_word(&letters, perm.degree())?;
                    if &value != perm {
                        return Err(Failure::Usage(format!(
                            "word {text} evaluates to {value}, not {perm}"
                        )));
                    }
                    heap
                }
                None if is_fully_commutative(perm) => build_heap(&canonical_word(perm)),
                None => {
                    return Err(Failure::Usage(format!(
                        "{perm} contains 321, so its heap depends on the word; pass --word"
                    )))
                }
            };
            write!(out, "{}", heap.to_dot())?;
        }
        DotTarget::Poset { n } => {
            let poset = build_fc_poset(*n, &ctx.bounds)?;
            if ctx.json {
                print_json(out, &poset.to_json())?;
            } else {
                write!(out, "{}", poset.to_dot())?;
            }
        }
    }
    Ok(())
}

fn cmd_rsk(ctx: &Ctx, out: &mut impl Write, w: &Permutation) -> Outcome {
    let r = rsk(w);
    if ctx.json {
        return print_json(out, &serde_json::json!({ "p": r.p, "q": r.q }));
    }
    writeln!(out, "P: {}", r.p)?;
    writeln!(out, "Q: {}", r.q)?;
    Ok(())
}

fn cmd_core(ctx: &Ctx, out: &mut impl Write, w: &Permutation) -> Outcome {
    let d = boolean_core(w)?;
    if ctx.json {
        return print_json(out, &d);
    }
    writeln!(out, "core: {}", ctx.perm(&d.core))?;
    writeln!(out, "remainder: {}", ctx.perm(&d.remainder))?;
    writeln!(out, "core word: {}", d.core_word)?;
    writeln!(out, "remainder word: {}", d.remainder_word)?;
    Ok(())
}

fn cmd_words(ctx: &Ctx, out: &mut impl Write, w: &Permutation, classes: bool) -> Outcome {
    if classes {
        let cs = commutation_classes(w, &ctx.bounds)?;
        if ctx.count {
            writeln!(out, "{}", cs.len())?;
        } else if ctx.json {
            print_json(out, &cs)?;
        } else {
            for class in &cs {
                writeln!(out, "{}", join(&class.iter().collect::<Vec<_>>()).replace(',', " "))?;
            }
        }
        return Ok(());
    }
    let words = all_reduced_words(w, &ctx.bounds)?;
    if ctx.count {
        writeln!(out, "{}", words.len())?;
    } else if ctx.json {
        print_json(out, &words)?;
    } else {
        for u in &words {
            writeln!(out, "{u}")?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    let ctx = Ctx {
        json: cli.json,
        count: cli.count,
        compact: cli.compact,
        bounds: Bounds {
            max_degree: cli.bound,
            max_word_length: cli.max_word_length,
            max_heap_size: Bounds::default().max_heap_size.max(cli.max_word_length),
            ..Bounds::default()
        },
        exec: if cli.sequential {
            Exec::Sequential
        } else {
            Exec::default()
        },
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match &cli.command {
        Command::Analyze { perm, transition } => cmd_analyze(&ctx, &mut out, perm, *transition),
        Command::Enumerate { n, filter } => cmd_enumerate(&ctx, &mut out, *n, *filter),
        Command::Verify { n, check, list } => cmd_verify(&ctx, &mut out, *n, check.clone(), *list),
        Command::Dot { target } => cmd_dot(&ctx, &mut out, target),
        Command::Rsk { perm } => cmd_rsk(&ctx, &mut out, perm),
        Command::Core { perm } => cmd_core(&ctx, &mut out, perm),
        Command::Words { perm, classes } => cmd_words(&ctx, &mut out, perm, *classes),
    }?;
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("fcperm: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("fcperm: {msg}");
            ExitCode::from(2)
        }
    }
}
