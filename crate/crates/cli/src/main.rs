use std::io::Read;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use strata_cli::commands::{self, CommandError, Format};
use strata_core::cluster::SeedDocument;
use strata_core::job::JobSpec;

/// Seeds, mutations and checks for cluster structures on Richardson strata.
#[derive(Parser)]
#[command(name = "strata", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct JobArgs {
    /// Dynkin type, e.g. A5 or D4.
    #[arg(short = 't', long = "type")]
    kind: String,
    /// Reduced word of v, e.g. "s2 s1"; empty for the identity.
    #[arg(short = 'v', default_value = "", allow_hyphen_values = true)]
    v: String,
    /// Reduced word of w.
    #[arg(short = 'w')]
    w: String,
    /// Reduced word of w to build the seed from (default: canonical).
    #[arg(short = 'i')]
    word: Option<String>,
    /// Seed for any sampling.
    #[arg(long)]
    seed_rng: Option<u64>,
}

impl JobArgs {
    fn job(&self) -> JobSpec {
        let mut job = JobSpec::new(&self.kind, &self.v, &self.w, self.word.as_deref());
        job.seed_rng = self.seed_rng;
        job
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the initial seed of a stratum.
    Seed {
        #[command(flatten)]
        job: JobArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Mutate a seed document at a sequence of vertex ids.
    Mutate {
        /// Seed JSON file, or "-" for standard input.
        seed: String,
        /// Vertex ids, applied left to right.
        vertices: Vec<usize>,
        /// Also mutate the cluster-tilting module and check agreement. The
        /// seed must be the initial seed of the job given by -t/-v/-w/-i.
        #[arg(long, requires = "kind", requires = "w")]
        categorical: bool,
        #[arg(short = 't', long = "type")]
        kind: Option<String>,
        #[arg(short = 'v', default_value = "")]
        v: String,
        #[arg(short = 'w')]
        w: Option<String>,
        #[arg(short = 'i')]
        word: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run a check suite: sect71, sect72, remark, torsion, braid, laurent,
    /// decat, propP or all.
    Verify {
        suite: String,
        #[arg(long)]
        seed_rng: Option<u64>,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// List the initial minors and module dimension vectors (type A).
    Minors {
        #[command(flatten)]
        job: JobArgs,
    },
    /// Serve the JSON API.
    Serve {
        #[arg(default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: String,
    },
}

fn read_seed(path: &str) -> anyhow::Result<SeedDocument> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    }
    Ok(SeedDocument::from_json(&text)?)
}

fn fail(e: CommandError) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(e.exit_code() as u8)
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Seed { job, format } => {
            let doc = match commands::seed_document(&job.job()) {
                Ok(d) => d,
                Err(e) => return Ok(fail(e.into())),
            };
            for w in &doc.warnings {
                eprintln!("warning: {w}");
            }
            print!("{}", commands::render(&doc, format)?);
            if format == Format::Json {
                println!();
            }
        }
        Command::Mutate { seed, vertices, categorical, kind, v, w, word, format } => {
            let doc = read_seed(&seed)?;
            let out = if categorical {
                let job = JobSpec::new(&kind.unwrap_or_default(), &v, &w.unwrap_or_default(), word.as_deref());
                match commands::mutate_categorical(&job, Some(&doc), &vertices) {
                    Ok((out, steps)) => {
                        for s in &steps {
                            eprintln!(
                                "vertex {}: {:?} -> {:?}, ext 1, quiver agrees",
                                s.vertex,
                                s.old_module.dims(),
                                s.new_module.dims()
                            );
                        }
                        out
                    }
                    Err(e) => return Ok(fail(e)),
                }
            } else {
                match commands::mutate(&doc, &vertices) {
                    Ok(out) => out,
                    Err(e) => return Ok(fail(e.into())),
                }
            };
            print!("{}", commands::render(&out, format)?);
            if format == Format::Json {
                println!();
            }
        }
        Command::Verify { suite, seed_rng, json } => {
            let report = match commands::run_verify(&suite, seed_rng) {
                Ok(r) => r,
                Err(e) => return Ok(fail(e.into())),
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!("{report}");
            }
            if !report.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Minors { job } => match commands::minors_table(&job.job()) {
            Ok(t) => print!("{t}"),
            Err(e) => return Ok(fail(e.into())),
        },
        Command::Serve { port, host } => {
            let rt = tokio::runtime::Runtime::new()?;
            rt.block_on(strata_cli::server::serve(&host, port))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
