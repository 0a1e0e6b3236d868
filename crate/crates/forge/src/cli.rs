//! Argument parsing and dispatch.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use scheme_forge_core::domain::DomainKind;
use scheme_forge_core::{Field, GroupId};

use crate::cache::Cache;
use crate::commands::{self, GeometryPart, Output, SchemeName, VerifyPlan};
use crate::config::{field_for, parse_domain, parse_group, Format, Modulus, RunConfig};
use crate::error::Result;

#[derive(Debug, Parser)]
#[command(name = "scheme-forge", version, about = "Orbital fission schemes of T(q+1) over PG(1,q)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build X(G) on a domain, check its axioms and export it.
    Build(BuildArgs),
    #[command(subcommand)]
    Scheme(SchemeCommand),
    #[command(subcommand)]
    Verify(VerifyCommand),
    #[command(subcommand)]
    Geometry(GeometryCommand),
    #[command(subcommand)]
    Group(GroupCommand),
    #[command(subcommand)]
    Fusion(FusionCommand),
}

#[derive(Debug, Subcommand)]
pub enum SchemeCommand {
    /// Same as the top-level `build`.
    Build(BuildArgs),
    /// Closed-form label, valency and pairs of every class on Ω.
    Labels(LabelsArgs),
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Check every class-count and structure prediction against computation.
    Paper(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum GeometryCommand {
    /// The conic, all lines or all points of PG(2,q).
    Dump(DumpArgs),
}

#[derive(Debug, Subcommand)]
pub enum GroupCommand {
    /// Order, generators and base-pair stabilizer size.
    Info(GroupArgs),
}

#[derive(Debug, Subcommand)]
pub enum FusionCommand {
    /// Whether one scheme on Ω is a fusion of another.
    Check(FusionArgs),
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    #[arg(long)]
    pub q: u64,
    /// Monic irreducible modulus, constant term first, e.g. 2,2,1.
    #[arg(long)]
    pub modulus: Option<Modulus>,
    /// Allow q above the default size limit.
    #[arg(long)]
    pub allow_large: bool,
}

impl FieldArgs {
    fn field(&self) -> Result<Field> {
        field_for(self.q, self.modulus.as_ref().map(|m| &m.0[..]), self.allow_large)
    }
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl OutputArgs {
    fn output(&self) -> Output<'_> {
        Output { format: self.format, path: self.out.as_deref() }
    }
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long, value_parser = parse_group)]
    pub group: GroupId,
    #[arg(long, value_parser = parse_domain, default_value = "pairs")]
    pub domain: DomainKind,
    /// Check constancy of every intersection number on every pair.
    #[arg(long)]
    pub exhaustive: bool,
    /// Include the full p^k_ij tensor in JSON output.
    #[arg(long)]
    pub p_tensor: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

impl BuildArgs {
    pub fn config(&self) -> RunConfig {
        RunConfig {
            q: self.field.q,
            group: self.group,
            domain: self.domain,
            modulus: self.field.modulus.clone().map(|m| m.0),
            out: self.output.out.clone(),
            format: self.output.format,
            exhaustive: self.exhaustive,
            deep: false,
            p_tensor: self.p_tensor,
            allow_large: self.field.allow_large,
        }
    }
}

#[derive(Debug, Args)]
pub struct LabelsArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long, value_parser = parse_group)]
    pub group: GroupId,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Field order to verify; repeatable.
    #[arg(long)]
    pub q: Vec<u64>,
    /// All default orders: 5, 7, 9, 11, 13, 25, 49.
    #[arg(long)]
    pub all_q: bool,
    /// Add q = 81.
    #[arg(long)]
    pub deep: bool,
    #[arg(long)]
    pub modulus: Option<Modulus>,
    #[arg(long)]
    pub allow_large: bool,
    /// Report wall-clock times (stderr, or a separate JSON field).
    #[arg(long)]
    pub timings: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct DumpArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long, value_enum)]
    pub what: GeometryPart,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long, value_parser = parse_group)]
    pub group: GroupId,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct FusionArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long, value_enum)]
    pub coarse: SchemeName,
    #[arg(long, value_enum)]
    pub fine: SchemeName,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Runs a parsed command; `Ok(false)` means a check failed.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<bool> {
    let cache = Cache::from_env();
    match &cli.command {
        Command::Build(args) | Command::Scheme(SchemeCommand::Build(args)) => {
            commands::cmd_build(&args.config(), &cache, stdout)
        }
        Command::Scheme(SchemeCommand::Labels(a)) => {
            commands::cmd_labels(&a.field.field()?, a.group, &cache, &a.output.output(), stdout)
        }
        Command::Verify(VerifyCommand::Paper(a)) => {
            let plan = VerifyPlan {
                orders: a.q.clone(),
                all_q: a.all_q,
                deep: a.deep,
                modulus: a.modulus.clone().map(|m| m.0),
                allow_large: a.allow_large,
                timings: a.timings,
            };
            commands::cmd_verify(&plan, &a.output.output(), stdout)
        }
        Command::Geometry(GeometryCommand::Dump(a)) => {
            commands::cmd_geometry(&a.field.field()?, a.what, &a.output.output(), stdout)
        }
        Command::Group(GroupCommand::Info(a)) => {
            commands::cmd_group(&a.field.field()?, a.group, &a.output.output(), stdout)
        }
        Command::Fusion(FusionCommand::Check(a)) => {
            commands::cmd_fusion(&a.field.field()?, a.coarse, a.fine, &cache, &a.output.output(), stdout)
        }
    }
}

/// Exit codes: 0 success, 1 failed check or computation, 2 usage error.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let result = run(&cli, &mut lock);
    let _ = lock.flush();
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        // a closed pipe (`| head`) is not a failure
        Err(e) if e.is_broken_pipe() => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_is_well_formed() {
        Cli::command().debug_assert();
    }

    #[test]
    fn parses_build() {
        let cli = Cli::try_parse_from([
            "scheme-forge",
            "scheme",
            "build",
            "--q",
            "9",
            "--group",
            "m",
            "--domain",
            "hyp-lines",
        ])
        .unwrap();
        let Command::Scheme(SchemeCommand::Build(a)) = cli.command else { panic!() };
        assert_eq!(a.config(), {
            let mut c = RunConfig::new(9, GroupId::M, DomainKind::HyperbolicLines);
            c.format = Format::Text;
            c
        });
        assert!(Cli::try_parse_from(["scheme-forge", "build", "--q", "9", "--group", "x"]).is_err());
    }
}
