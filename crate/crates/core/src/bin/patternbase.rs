use std::io;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use patternbase::algebra::Strategy;
use patternbase::cli::{self, parse_set_literal, CommandSpec, ProjectOnto, Streams};
use patternbase::io::LabelMode;
use patternbase::oracle::DEFAULT_MAX_SIDE;

const PREDICATES: &str = "\
Predicates (thresholds are strict):
  minlen(N)  maxlen(N)    more / fewer than N attributes
  minfreq(N) maxfreq(N)   more / fewer than N objects
  minarea(N) maxarea(N)   |attributes| * |objects| above / below N
  hasattr(a) nothasattr(a) hasobj(o) nothasobj(o)
  and(p, ...)  or(p, ...)  not(p)  true  false";

/// Store, query and inspect collections of formal concepts.
#[derive(Parser)]
#[command(name = "patternbase", version, propagate_version = true)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate every concept of a 0/1 database into a concept list.
    Mine {
        db: String,
        out: String,
        /// Refuse databases whose smaller side exceeds this many elements.
        #[arg(long, default_value_t = DEFAULT_MAX_SIDE)]
        max_side: usize,
    },
    /// Build the concept graph of a concept list.
    Build {
        concepts: String,
        out: String,
        /// Declare the list to be every concept of some database.
        #[arg(long)]
        complete: bool,
    },
    /// Keep the concepts satisfying a predicate.
    #[command(after_help = PREDICATES)]
    Select {
        graph: String,
        predicate: String,
        out: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
    },
    /// Project onto a subset of the attributes or of the objects.
    #[command(group(ArgGroup::new("onto").required(true).args(["attrs", "objs"])))]
    Project {
        graph: String,
        out: String,
        /// Comma-separated attribute names.
        #[arg(long)]
        attrs: Option<String>,
        /// Comma-separated object names.
        #[arg(long)]
        objs: Option<String>,
    },
    /// Print vertex, edge and marked counts and the universe.
    Info { graph: String },
    /// Verify every graph invariant; exits with 1 on a violation.
    Check { graph: String },
    /// Write the graph in Graphviz DOT.
    Export {
        graph: String,
        out: String,
        #[arg(long, value_enum, default_value_t = LabelsArg::Vertices)]
        labels: LabelsArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Auto,
    /// Bottom-up, anti-monotone predicates only.
    Am,
    /// Top-down, monotone predicates only.
    M,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum LabelsArg {
    Vertices,
    Edges,
}

impl From<Command> for CommandSpec {
    fn from(c: Command) -> Self {
        match c {
            Command::Mine { db, out, max_side } => CommandSpec::Mine { db, out, max_side },
            Command::Build {
                concepts,
                out,
                complete,
            } => CommandSpec::Build {
                concepts,
                out,
                complete,
            },
            Command::Select {
                graph,
                predicate,
                out,
                strategy,
            } => CommandSpec::Select {
                graph,
                expr: predicate,
                out,
                strategy: match strategy {
                    StrategyArg::Auto => Strategy::Auto,
                    StrategyArg::Am => Strategy::AntiMonotone,
                    StrategyArg::M => Strategy::Monotone,
                    StrategyArg::Full => Strategy::Full,
                },
            },
            Command::Project {
                graph,
                out,
                attrs,
                objs,
            } => CommandSpec::Project {
                graph,
                out,
                onto: match (attrs, objs) {
                    (Some(a), _) => ProjectOnto::Attrs(parse_set_literal(&a)),
                    (_, Some(o)) => ProjectOnto::Objs(parse_set_literal(&o)),
                    (None, None) => unreachable!("clap requires one of --attrs and --objs"),
                },
            },
            Command::Info { graph } => CommandSpec::Info { graph },
            Command::Check { graph } => CommandSpec::Check { graph },
            Command::Export { graph, out, labels } => CommandSpec::Export {
                graph,
                out,
                labels: match labels {
                    LabelsArg::Vertices => LabelMode::Vertices,
                    LabelsArg::Edges => LabelMode::Edges,
                },
            },
        }
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                cli::EXIT_USAGE as u8
            } else {
                0
            });
        }
    };
    let code = cli::run(
        &args.command.into(),
        &mut Streams {
            stdin: &mut io::stdin().lock(),
            stdout: &mut io::stdout().lock(),
            stderr: &mut io::stderr().lock(),
        },
    );
    ExitCode::from(code as u8)
}
