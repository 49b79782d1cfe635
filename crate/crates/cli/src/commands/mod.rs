mod glsm;
mod gw;
mod kontsevich;
mod periods;
mod polytope;
mod syz;

use serde::Serialize;
use serde_json::Value;

use crate::error::CliError;
use crate::{Command, GlsmCommand, SyzCommand};

/// What a subcommand produced: both renderings, plus a failure to report
/// after the output when a check on the input came out negative.
pub struct Report {
    pub name: &'static str,
    pub json: Value,
    pub table: String,
    pub failure: Option<CliError>,
}

impl Report {
    fn new(name: &'static str, result: &impl Serialize, table: String) -> Self {
        Report { name, json: serde_json::to_value(result).expect("results serialize"), table, failure: None }
    }
}

pub fn run(command: &Command, order: usize) -> Result<Report, CliError> {
    match command {
        Command::Periods => periods::periods(order),
        Command::Monodromy => periods::monodromy(),
        Command::Gw { dmax } => gw::run(order, *dmax),
        Command::Polytope { input } => polytope::run(input.as_deref()),
        Command::Glsm { command: GlsmCommand::Transpose { input } } => glsm::transpose(input.as_deref()),
        Command::Glsm { command: GlsmCommand::Kahler { input } } => glsm::kahler(input),
        Command::Kontsevich => kontsevich::run(),
        Command::Syz { command: SyzCommand::Classify { input } } => syz::classify(input),
        Command::Syz { command: SyzCommand::QuinticCounts } => syz::quintic_counts(),
        Command::Syz { command: SyzCommand::K3 { fibres, kmax } } => syz::k3(fibres.as_deref(), *kmax),
    }
}
