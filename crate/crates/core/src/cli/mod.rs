//! Command-line driver: ring calculator, strata atlas, mass and torsion
//! reports, and the self-check suite.

pub mod atlas;
pub mod check;
pub mod expr;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::arith::{factorial_prime_parts, fmt_rational, is_prime, ng, torsion_bound, Rational};
use crate::cycleclasses::{
    deuring_check, superspecial_mass, Conventions, DeltaConstant, ProductSign, WordOrder,
    DEFAULT_CLASS_GENUS_LIMIT,
};
use crate::tautring::{degree_ag_tilde, top_degree, RingMode};

pub use atlas::{AtlasDocument, AtlasError, AtlasRow, ClassTerm, WireCoeff};
pub use check::{run_all, CheckConfig, CheckFailure};
pub use expr::{evaluate, ExprError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "agcycles",
    version,
    about = "Cycle classes on moduli of abelian varieties in characteristic p"
)]
struct Cli {
    /// Print the frozen conventions of the degeneracy formula.
    #[arg(long, global = true)]
    conventions: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Compact,
    Open,
}

impl From<ModeArg> for RingMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Compact => RingMode::Compact,
            ModeArg::Open => RingMode::Open,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Md,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SwitchArg {
    ProductSign,
    WordOrder,
    DeltaConstant,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an expression in the tautological ring.
    Ring {
        #[arg(long)]
        g: usize,
        #[arg(long, value_enum, default_value = "compact")]
        mode: ModeArg,
        /// Also print the degree when the result has top degree.
        #[arg(long)]
        degree: bool,
        #[arg(allow_hyphen_values = true)]
        expression: String,
    },
    /// Ekedahl-Oort strata with their push-forward classes.
    Strata {
        #[arg(long)]
        g: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        /// Largest genus for which classes are computed.
        #[arg(long, default_value_t = DEFAULT_CLASS_GENUS_LIMIT)]
        max_class_g: usize,
    },
    /// Superspecial mass, symbolically or at a prime.
    Masses {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Torsion bound for the top Hodge class on the open moduli space.
    Bounds {
        #[arg(long)]
        g: usize,
    },
    /// Run the invariant suite.
    Check {
        #[arg(long, default_value_t = 3)]
        max_g: usize,
        /// Flip one convention switch; the golden table should then fail.
        #[arg(long, value_enum)]
        perturb: Option<SwitchArg>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

fn perturbed(switch: SwitchArg) -> Conventions {
    let f = Conventions::FROZEN;
    match switch {
        SwitchArg::ProductSign => Conventions {
            product_sign: ProductSign::Plus,
            ..f
        },
        SwitchArg::WordOrder => Conventions {
            word_order: WordOrder::Reversed,
            ..f
        },
        SwitchArg::DeltaConstant => Conventions {
            delta_constant: DeltaConstant::Unit,
            ..f
        },
    }
}

/// Runs the command line `args` (program name first), writing all output to
/// `out`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(out, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, String> {
    let mut say = |s: String| {
        let _ = writeln!(out, "{s}");
    };
    if cli.conventions {
        say(format!("conventions: {}", Conventions::FROZEN));
    }
    let Some(command) = cli.command else {
        if cli.conventions {
            return Ok(EXIT_OK);
        }
        return Err("no command given; see --help".into());
    };
    match command {
        Command::Ring {
            g,
            mode,
            degree,
            expression,
        } => {
            let value = evaluate(&expression, g, mode.into()).map_err(|e| e.to_string())?;
            say(value.to_string());
            if degree {
                match value.homogeneous_degree() {
                    Some(d) if d == top_degree(g) || value.is_zero() => {
                        let deg = degree_ag_tilde(&value).map_err(|e| e.to_string())?;
                        say(format!("degree: {deg}"));
                    }
                    _ => say("degree: not of top degree".into()),
                }
            }
        }
        Command::Strata {
            g,
            format,
            max_class_g,
        } => {
            let doc = AtlasDocument::build(g, max_class_g, Conventions::FROZEN)
                .map_err(|e| e.to_string())?;
            match format {
                FormatArg::Json => say(doc.to_json()),
                FormatArg::Md => say(doc.to_markdown().map_err(|e| e.to_string())?),
            }
        }
        Command::Masses { g, p } => {
            let mass = superspecial_mass(g).map_err(|e| e.to_string())?;
            say(format!("superspecial mass, g = {g}: {mass}"));
            if let Some(p) = p {
                if !is_prime(p) {
                    return Err(format!("{p} is not a prime"));
                }
                let at = mass.eval(&Rational::from_integer(p.into()));
                say(format!("at p = {p}: {}", fmt_rational(&at)));
            }
            if g == 1 {
                let deuring = deuring_check().map_err(|e| e.to_string())?;
                say(format!("Deuring: deg (p-1)*l1 = {deuring}"));
            }
        }
        Command::Bounds { g } => {
            if g == 0 {
                return Err("genus must be at least one".into());
            }
            for i in 1..=g {
                let n = ng(i).map_err(|e| e.to_string())?;
                let rhs = factorial_prime_parts(i);
                say(format!("n_{i} = {n} (divides {rhs}: ok)"));
            }
            let bound = torsion_bound(g).map_err(|e| e.to_string())?;
            say(format!("bound (g-1)! * prod n_i = {bound}"));
        }
        Command::Check {
            max_g,
            perturb,
            trials,
        } => {
            let config = CheckConfig {
                max_g,
                conventions: perturb.map_or(Conventions::FROZEN, perturbed),
                trials,
            };
            return Ok(match run_all(&config, &mut say) {
                Ok(()) => {
                    say("all checks passed".into());
                    EXIT_OK
                }
                Err(failure) => {
                    say(failure.to_string());
                    EXIT_CHECK_FAILED
                }
            });
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String) {
        let mut buf = Vec::new();
        let mut full = vec!["agcycles"];
        full.extend_from_slice(args);
        let code = run(full, &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn ring_examples() {
        assert_eq!(
            run_str(&["ring", "--g", "2", "l1*l1"]),
            (0, "2*l2\n".into())
        );
        let (code, text) = run_str(&["ring", "--g", "1", "--degree", "l1"]);
        assert_eq!(code, 0);
        assert!(text.ends_with("degree: 1/24\n"), "{text}");
        assert_eq!(
            run_str(&["ring", "--g", "3", "--mode", "open", "l3"]),
            (0, "0\n".into())
        );
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&["ring", "--g", "2", "l1 +"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["masses", "--g", "1", "--p", "100"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["strata", "--g", "9"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn masses_and_bounds() {
        let (_, text) = run_str(&["masses", "--g", "1", "--p", "101"]);
        assert!(text.contains("(p-1)/24"));
        assert!(text.contains("at p = 101: 25/6"));
        let (_, text) = run_str(&["bounds", "--g", "2"]);
        assert!(text.contains("= 5760"));
    }

    #[test]
    fn conventions_flag() {
        let (code, text) = run_str(&["--conventions"]);
        assert_eq!(code, 0);
        assert!(text.contains("c_0 = 2"));
    }
}
