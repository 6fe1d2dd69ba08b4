//! Command-line surface over the brace classification library: group
//! inspection, regular-subgroup counts, brace censuses, Hopf-Galois tables
//! and the one-shot verification harness.
//!
//! Exit codes: 0 success, 1 usage error, 2 hypothesis refusal, 3 resource
//! bound exceeded, 4 verification mismatch.

use std::time::Instant;

use clap::{Parser, Subcommand};

use brace_core::aut::automorphism_group;
use brace_core::counting::{brace_count, hgs_table, regular_counts_for};
use brace_core::group::abelian_groups_of_order;
use brace_core::holomorph::SearchLimits;
use brace_core::iso::isomorphism_type_of_order12;
use brace_core::tau::classify_pairs;
use brace_core::{Error, FiniteGroup};

pub mod golden;
pub mod report;
pub mod spec;
pub mod verify;

use report::{
    BracesPayload, Format, GroupInfo, HgsPayload, Payload, Report, RunConfig, TauClassDoc,
    SCHEMA_VERSION,
};

pub use report::render;
pub use spec::parse_group_spec;

/// Default primes for verify-paper: one per residue class mod 12 that
/// satisfies hypothesis (H).
pub const DEFAULT_P_SET: [usize; 4] = [7, 11, 13, 17];

#[derive(Parser, Debug)]
#[command(
    name = "brace-cli",
    version,
    about = "Classify left braces of size np and count Hopf-Galois structures of abelian type"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Md)]
    pub format: Format,

    /// Largest holomorph order the searches will accept.
    #[arg(long, global = true, default_value_t = 50_000)]
    pub bound: usize,

    /// Worker thread cap (0 = all cores); output is independent of it.
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Inspect a group literal (order, exponent, center, type).
    GroupInfo {
        /// Group spec, e.g. C12, C6xC2, A4, D12, Dic12, Z7xC12.
        #[arg(long)]
        group: String,
    },
    /// Count the regular subgroups of Hol(E) by isomorphism type.
    Regular {
        /// Abelian group spec for E.
        #[arg(long)]
        group: String,
    },
    /// Classify the left braces of size n·p.
    Braces {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
    },
    /// Hopf-Galois structure tables of abelian type for degree 12p.
    Hgs {
        #[arg(long)]
        p: usize,
        /// Abelian type N = Z_p × E as a concrete group spec (e.g. C84);
        /// both types are reported when omitted.
        #[arg(long)]
        group: Option<String>,
    },
    /// Re-derive every published table and cross-check; nonzero exit on
    /// any mismatch.
    VerifyPaper {
        /// Comma-separated primes, one per residue class mod 12 to cover;
        /// defaults to 7,11,13,17.
        #[arg(long)]
        p_set: Option<String>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::GroupInfo { .. } => "group-info",
            Command::Regular { .. } => "regular",
            Command::Braces { .. } => "braces",
            Command::Hgs { .. } => "hgs",
            Command::VerifyPaper { .. } => "verify-paper",
        }
    }
}

/// Caps rayon's global pool; safe to call once at startup.
pub fn install_thread_pool(threads: usize) {
    if threads > 0 {
        // Ignore the error if a pool already exists (tests, repeat calls).
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
}

pub fn run(cli: &Cli) -> Result<Report, Error> {
    let limits = SearchLimits::with_bound(cli.bound);
    let started = Instant::now();
    let mut config = RunConfig {
        command: cli.command.name().to_string(),
        group: None,
        n: None,
        p: None,
        p_set: None,
        format: cli.format,
        bound: cli.bound,
        threads: cli.threads,
    };

    let payload = match &cli.command {
        Command::GroupInfo { group } => {
            config.group = Some(group.clone());
            let g = parse_group_spec(group)?;
            Payload::GroupInfo(group_info(&g))
        }
        Command::Regular { group } => {
            config.group = Some(group.clone());
            let e = parse_group_spec(group)?;
            Payload::Regular(regular_counts_for(&e, &limits)?)
        }
        Command::Braces { n, p } => {
            config.n = Some(*n);
            config.p = Some(*p);
            let census = brace_count(*n, *p, &limits)?;
            let mut classes = Vec::new();
            for e in abelian_groups_of_order(*n) {
                for class in classify_pairs(&e, *p, &limits)? {
                    classes.push(TauClassDoc {
                        additive: e.label().to_string(),
                        f_label: class.f_class().iso_label().to_string(),
                        f_class_length: class.f_class().orbit_length(),
                        kernel_order: class.kernel_order(),
                        kernel_label: class.kernel_label().to_string(),
                        orbit_size: class.orbit_size(),
                        tau_values: class.tau_rep().values().to_vec(),
                    });
                }
            }
            Payload::Braces(BracesPayload {
                n: census.n,
                p: census.p,
                total: census.total,
                rows: census.rows,
                classes,
            })
        }
        Command::Hgs { p, group } => {
            config.p = Some(*p);
            config.group = group.clone();
            let types = hgs_types_for(*p, group.as_deref())?;
            let tables = types
                .iter()
                .map(|e| hgs_table(*p, e, &limits))
                .collect::<Result<Vec<_>, _>>()?;
            Payload::Hgs(HgsPayload { tables })
        }
        Command::VerifyPaper { p_set } => {
            let primes = parse_p_set(p_set.as_deref())?;
            config.p_set = Some(primes.clone());
            Payload::Verify(verify::verify_paper(&primes, &limits)?)
        }
    };

    Ok(Report {
        schema: SCHEMA_VERSION.to_string(),
        command: cli.command.name().to_string(),
        config,
        timing_ms: started.elapsed().as_millis(),
        payload,
    })
}

/// Exit code for an error per the CLI contract.
pub fn exit_code_for_error(e: &Error) -> i32 {
    match e {
        Error::HypothesisNotVerified { .. } => 2,
        Error::ResourceBound { .. } => 3,
        _ => 1,
    }
}

fn group_info(g: &FiniteGroup) -> GroupInfo {
    GroupInfo {
        label: g.label().to_string(),
        order: g.order(),
        abelian: g.is_abelian(),
        exponent: g.exponent(),
        center_order: g.center().len(),
        order_census: g.order_census(),
        abelian_invariants: g.abelian_invariants().ok(),
        order12_type: isomorphism_type_of_order12(g)
            .ok()
            .map(|t| t.label().to_string()),
        automorphism_order: automorphism_group(g).ok().map(|a| a.order()),
    }
}

/// Resolves the E's whose type Z_p × E was requested: all abelian groups of
/// order 12 by default, or the one matching a concrete N spec.
fn hgs_types_for(p: usize, group: Option<&str>) -> Result<Vec<FiniteGroup>, Error> {
    let all = abelian_groups_of_order(12);
    let Some(spec_str) = group else {
        return Ok(all);
    };
    let n_group = parse_group_spec(spec_str)?;
    if !n_group.is_abelian() {
        return Err(Error::NotAbelian {
            order: n_group.order(),
        });
    }
    if n_group.order() != 12 * p {
        return Err(Error::InvalidArgument(format!(
            "expected |N| = 12p = {}, got {}",
            12 * p,
            n_group.order()
        )));
    }
    let target = n_group.abelian_invariants()?;
    for e in all {
        let mut invariants = e.abelian_invariants()?;
        invariants[0] *= p;
        if invariants == target {
            return Ok(vec![e]);
        }
    }
    Err(Error::InvalidArgument(format!(
        "{spec_str} is not of the form Z_{p} x E with |E| = 12"
    )))
}

fn parse_p_set(p_set: Option<&str>) -> Result<Vec<usize>, Error> {
    let Some(raw) = p_set else {
        return Ok(DEFAULT_P_SET.to_vec());
    };
    let primes: Vec<usize> = raw
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidArgument(format!("bad p-set entry {part:?}")))
        })
        .collect::<Result<_, _>>()?;
    if primes.is_empty() || raw.trim().is_empty() {
        return Err(Error::InvalidArgument("p-set must not be empty".into()));
    }
    Ok(primes)
}
