//! Command-line driver. Results go to `out`, diagnostics to `err`.
//!
//! Exit codes: 0 success, 1 malformed input, 2 valid sequence outside a
//! partial codec's image.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::counting::{self, Method};
use crate::hub::{self, Family};
use crate::sequence::{self, CatalanSequence, SequenceError, DEFAULT_ENUMERATION_CAP};
use crate::trees::decode_tree;
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MALFORMED: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "catalan", version, about = "Encode, decode and count Catalan-counted objects")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RenderFormat {
    Mountain,
    Dot,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Catalan number C_n
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "closed", value_parser = parse_method)]
        method: Method,
    },
    /// List every sequence of semilength n in lexicographic order
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Check a 0/1 string
    Validate {
        #[arg(allow_hyphen_values = true)]
        bits: String,
    },
    /// Encode an object of a family into its sequence
    Encode {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, allow_hyphen_values = true)]
        input: String,
    },
    /// Decode a sequence into a family's text form
    Decode {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(allow_hyphen_values = true)]
        bits: String,
    },
    /// Convert an object of one family into the corresponding object of another
    Transcode {
        #[arg(long, value_parser = parse_family)]
        from: Family,
        #[arg(long, value_parser = parse_family)]
        to: Family,
        #[arg(long, allow_hyphen_values = true)]
        input: String,
    },
    /// Position of a sequence in lexicographic order
    Rank {
        #[arg(allow_hyphen_values = true)]
        bits: String,
    },
    /// Sequence at a given position of the lexicographic order
    Unrank {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        index: BigUint,
    },
    /// Uniformly random sequence, deterministic in the seed
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Draw a sequence as a mountain range or its binary tree as a graph
    Render {
        #[arg(long, value_enum)]
        format: RenderFormat,
        #[arg(allow_hyphen_values = true)]
        bits: String,
    },
}

fn parse_family(s: &str) -> Result<Family, Error> {
    s.parse()
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse()
}

fn exit_code(e: &Error) -> i32 {
    if e.is_domain_error() {
        EXIT_DOMAIN
    } else {
        EXIT_MALFORMED
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Error> {
    let mut emit = |line: &dyn std::fmt::Display| {
        // a closed stdout is not an input error; drop the output
        let _ = writeln!(out, "{line}");
    };
    match command {
        Command::Count { n, method } => emit(&counting::catalan(n, method)),
        Command::Enumerate { n } => {
            if n > DEFAULT_ENUMERATION_CAP {
                return Err(SequenceError::CapExceeded {
                    n,
                    cap: DEFAULT_ENUMERATION_CAP,
                }
                .into());
            }
            for s in sequence::iter_sequences(n) {
                emit(&s);
            }
        }
        Command::Validate { bits } => {
            let s: CatalanSequence = bits.parse()?;
            emit(&format_args!("valid semilength={}", s.semilength()));
        }
        Command::Encode { family, input } => emit(&hub::encode(family, &input)?),
        Command::Decode { family, bits } => emit(&hub::decode(family, &bits.parse()?)?),
        Command::Transcode { from, to, input } => emit(&hub::transcode(from, to, &input)?),
        Command::Rank { bits } => emit(&sequence::rank(&bits.parse()?)),
        Command::Unrank { n, index } => emit(&sequence::unrank(n, &index)?),
        Command::Random { n, seed } => emit(&sequence::random_uniform(n, seed)),
        Command::Render { format, bits } => {
            let s: CatalanSequence = bits.parse()?;
            match format {
                RenderFormat::Mountain => {
                    for line in hub::render_mountain(&s) {
                        emit(&line);
                    }
                }
                RenderFormat::Dot => {
                    let _ = write!(out, "{}", hub::render_dot(&decode_tree(&s)));
                }
            }
        }
    }
    Ok(())
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_MALFORMED
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let kind = if e.is_domain_error() {
                "domain error"
            } else {
                "invalid input"
            };
            let _ = writeln!(err, "{kind}: {e}");
            exit_code(&e)
        }
    }
}
