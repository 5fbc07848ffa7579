mod category;
mod homology;
mod inputs;
mod tor;
mod verify;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use functor_tor::linalg::{FieldTag, PrimeField};
use functor_tor::report::{Report, RunConfig};
use functor_tor::tor::Side;
use functor_tor::{Error, Result};

pub const THREADS_VAR: &str = "FUNCTOR_TOR_THREADS";

#[derive(Debug, Parser)]
#[command(name = "functor-tor", version, about = "Exact Tor over small categories, crossed categories and Hochschild homology")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Coefficient field
    #[arg(long, global = true, value_parser = ["Q", "Fp"])]
    pub field: Option<String>,
    /// Characteristic when the field is Fp
    #[arg(long, global = true)]
    pub p: Option<u32>,
    /// Truncation of simplicial-type categories
    #[arg(long = "N", global = true)]
    pub truncation: Option<usize>,
    /// Highest homological degree reported
    #[arg(long = "d", global = true)]
    pub max_degree: Option<usize>,
    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the JSON report here instead of standard output
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Which Tor argument is resolved
    #[arg(long, global = true, value_enum, default_value_t = SideArg::Contravariant)]
    pub side: SideArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SideArg {
    Contravariant,
    Covariant,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Contravariant => Side::ResolveContravariant,
            SideArg::Covariant => Side::ResolveCovariant,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a category, print its hom-set sizes and validate it
    Category {
        /// delta, delta_s, delta_c, f_as, gamma_as, sym, cyclic or group:<file>
        kind: String,
        /// Truncation or group size (overrides --N)
        n: Option<usize>,
    },
    /// Dimensions of Tor of a contravariant and a covariant module
    Tor {
        /// Base category such as gamma_as:4 or cyclic:2
        #[arg(long)]
        category: String,
        /// Contravariant argument: trivial, rep:<A>, b, or a module JSON file
        #[arg(long)]
        left: String,
        /// Covariant argument: trivial, rep:<A>, loday:<algebra>[,<bimodule>], or a module JSON file
        #[arg(long)]
        right: String,
    },
    /// Run a verification suite
    Verify {
        #[arg(value_enum)]
        suite: verify::Suite,
        /// Group-type crossed category for base-change: sym3, sym4 or sigma:<n>
        #[arg(long)]
        group: Option<String>,
        /// Crossed category JSON for crossed-laws
        #[arg(long)]
        crossed: Option<PathBuf>,
        /// Random module-map pairs per category in pseudo-adjunction
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Hochschild or cyclic homology of an algebra
    Homology {
        #[arg(value_enum)]
        kind: homology::Kind,
        /// Algebra JSON
        algebra: PathBuf,
        /// Bimodule JSON (Hochschild only; defaults to the algebra itself)
        #[arg(long)]
        bimodule: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = homology::Via::Both)]
        via: homology::Via,
    },
}

/// Applies `FUNCTOR_TOR_THREADS` to the global thread pool.
pub fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var(THREADS_VAR) else { return Ok(()) };
    let threads: usize =
        value.parse().map_err(|_| Error::Input(format!("{THREADS_VAR} must be a positive integer, got `{value}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Error::Input(format!("cannot configure threads: {e}")))
}

/// The field selected on the command line.
#[derive(Clone, Debug)]
pub enum FieldChoice {
    Rational,
    Prime(PrimeField),
}

impl FieldChoice {
    pub fn from_args(field: Option<&str>, p: Option<u32>) -> Result<Self> {
        match (field.unwrap_or("Q"), p) {
            ("Q", None) => Ok(FieldChoice::Rational),
            ("Q", Some(_)) => Err(Error::Input("--p only applies to --field Fp".into())),
            ("Fp", Some(p)) => Ok(FieldChoice::Prime(PrimeField::new(p)?)),
            ("Fp", None) => Err(Error::Input("--field Fp needs --p".into())),
            (other, _) => Err(Error::Input(format!("unknown field `{other}`"))),
        }
    }

    pub fn from_tag(tag: FieldTag) -> Result<Self> {
        match tag {
            FieldTag::Rational => Ok(FieldChoice::Rational),
            FieldTag::Prime(p) => Ok(FieldChoice::Prime(PrimeField::new(p)?)),
        }
    }

    pub fn tag(&self) -> FieldTag {
        match self {
            FieldChoice::Rational => FieldTag::Rational,
            FieldChoice::Prime(f) => FieldTag::Prime(f.modulus()),
        }
    }
}

/// Runs `$body` with `$f` bound to the concrete field of a [`FieldChoice`].
macro_rules! with_field {
    ($choice:expr, |$f:ident| $body:expr) => {
        match $choice {
            $crate::cli::FieldChoice::Rational => {
                let $f = &functor_tor::linalg::Rationals;
                $body
            }
            $crate::cli::FieldChoice::Prime(p) => {
                let $f = p;
                $body
            }
        }
    };
}
pub(crate) use with_field;

pub(crate) fn config(args: &Cli, field: &FieldChoice) -> RunConfig {
    let g = &args.global;
    let (name, p) = match field.tag() {
        FieldTag::Rational => ("Q", None),
        FieldTag::Prime(p) => ("Fp", Some(p)),
    };
    RunConfig {
        field: name.into(),
        p,
        truncation: g.truncation,
        max_degree: g.max_degree,
        inputs: Vec::new(),
        out: g.out.as_ref().map(|p| p.display().to_string()),
        seed: g.seed,
    }
}

pub fn run(args: &Cli) -> Result<Report> {
    let g = &args.global;
    match &args.command {
        Command::Category { kind, n } => {
            let field = FieldChoice::from_args(g.field.as_deref(), g.p)?;
            category::run(kind, n.or(g.truncation), g.seed, config(args, &field))
        }
        Command::Tor { category, left, right } => {
            let field = FieldChoice::from_args(g.field.as_deref(), g.p)?;
            let mut cfg = config(args, &field);
            cfg.inputs = vec![category.clone(), left.clone(), right.clone()];
            with_field!(&field, |f| tor::run(f, category, left, right, g, cfg))
        }
        Command::Verify { suite, group, crossed, samples } => {
            let field = FieldChoice::from_args(g.field.as_deref(), g.p)?;
            let mut cfg = config(args, &field);
            cfg.inputs = group.iter().cloned().chain(crossed.iter().map(|p| p.display().to_string())).collect();
            let opts = verify::Options {
                truncation: g.truncation.unwrap_or(3),
                max_degree: g.max_degree,
                seed: g.seed,
                samples: *samples,
                group: group.clone(),
                crossed: crossed.clone(),
                side: g.side.into(),
            };
            with_field!(&field, |f| verify::run(f, *suite, &opts, cfg))
        }
        Command::Homology { kind, algebra, bimodule, via } => homology::run(args, *kind, algebra, bimodule.as_ref(), *via),
    }
}

pub(crate) fn read_json<T: serde::de::DeserializeOwned>(path: &std::path::Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    Ok(serde_json::from_str(&text)?)
}
