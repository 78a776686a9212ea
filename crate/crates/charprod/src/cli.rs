//! Command execution behind the binary: every subcommand resolves to a
//! plain-text report (one fact per line, stable key=value fields) plus an
//! exit status. Identical configs produce byte-identical reports.

use std::path::PathBuf;
use std::sync::Arc;

use crate::chains::{build_maximal_chain, p_max, ChainContext};
use crate::error::{Error, Result};
use crate::group::load_group;
use crate::table::character_table;
use crate::verify::{summarize, verify_corpus, verify_pair, GroupWorkspace, Status};
use crate::zoo::{self, CorpusSpec};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Command {
    Table,
    Decompose,
    Eta,
    Chain,
    Verify,
    Corpus,
    Pmax,
}

#[derive(Clone, Debug)]
pub enum GroupSource {
    Zoo(String),
    File(PathBuf),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChiSelector {
    /// 1-based row index (row 1 is the principal character)
    Row(usize),
    /// first row of the given degree in canonical order
    Degree(usize),
}

impl ChiSelector {
    pub fn parse(s: &str) -> Result<ChiSelector> {
        if let Some(v) = s.strip_prefix("row=") {
            let i: usize = v
                .parse()
                .map_err(|_| Error::Input(format!("bad row index {v:?}")))?;
            if i == 0 {
                return Err(Error::Input("row indices are 1-based".into()));
            }
            return Ok(ChiSelector::Row(i));
        }
        if let Some(v) = s.strip_prefix("deg=") {
            let d: usize = v
                .parse()
                .map_err(|_| Error::Input(format!("bad degree {v:?}")))?;
            return Ok(ChiSelector::Degree(d));
        }
        Err(Error::Input(format!(
            "chi selector must be row=<i> or deg=<d>, got {s:?}"
        )))
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub group_source: Option<GroupSource>,
    pub chi: Option<ChiSelector>,
    pub corpus: bool,
    pub max_order: usize,
    pub exhaustive_chains: bool,
    pub out: Option<PathBuf>,
    pub pmax_n: Option<usize>,
}

impl RunConfig {
    pub fn new(command: Command) -> RunConfig {
        RunConfig {
            command,
            group_source: None,
            chi: None,
            corpus: false,
            max_order: 128,
            exhaustive_chains: false,
            out: None,
            pmax_n: None,
        }
    }
}

/// Exit status 0: success (and all verifications passed).
/// Exit status 1: bad input or internal diagnostic.
/// Exit status 2: a verification failed.
pub fn run(config: &RunConfig) -> (i32, String) {
    match execute(config) {
        Ok((code, text)) => (code, text),
        Err(e) => (1, format!("error: {e}\n")),
    }
}

fn resolve_group(config: &RunConfig) -> Result<crate::group::Group> {
    match &config.group_source {
        Some(GroupSource::Zoo(label)) => zoo::by_label(label),
        Some(GroupSource::File(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
            load_group(&text)
        }
        None => Err(Error::Input(
            "no group given: use --zoo <label> or --file <path>".into(),
        )),
    }
}

fn resolve_chi(table: &crate::table::CharacterTable, sel: Option<ChiSelector>) -> Result<usize> {
    let sel =
        sel.ok_or_else(|| Error::Input("no character given: use --chi row=<i>|deg=<d>".into()))?;
    match sel {
        ChiSelector::Row(i) => {
            if i > table.rows.len() {
                return Err(Error::Input(format!(
                    "row {i} out of range 1..={}",
                    table.rows.len()
                )));
            }
            Ok(i - 1)
        }
        ChiSelector::Degree(d) => table
            .rows
            .iter()
            .position(|r| r.degree == d)
            .ok_or_else(|| Error::Input(format!("no irreducible of degree {d}"))),
    }
}

fn execute(config: &RunConfig) -> Result<(i32, String)> {
    match config.command {
        Command::Pmax => {
            let n = config
                .pmax_n
                .ok_or_else(|| Error::Input("pmax needs an argument n".into()))?;
            if !(1..=64).contains(&n) {
                return Err(Error::Input(format!("pmax argument {n} outside 1..=64")));
            }
            Ok((0, format!("p({n})={}\n", p_max(n))))
        }
        Command::Corpus => {
            let spec = CorpusSpec {
                max_order: config.max_order,
                include_named: true,
                ..CorpusSpec::default()
            };
            let mut out = String::new();
            for g in zoo::corpus(&spec) {
                out.push_str(&format!("group label={} order={}\n", g.label, g.order()));
            }
            Ok((0, out))
        }
        Command::Table => {
            let g = resolve_group(config)?;
            let t = character_table(Arc::new(g))?;
            Ok((0, t.emit()))
        }
        Command::Decompose | Command::Eta => {
            let g = resolve_group(config)?;
            let label = g.label.clone();
            let t = character_table(Arc::new(g))?;
            let row = resolve_chi(&t, config.chi)?;
            let dec = crate::algebra::eta_of_row(&t, row)?;
            let line = dec.report_line(row, t.rows[row].degree);
            let out = if config.command == Command::Eta {
                let a: Vec<String> = dec
                    .multiplicity_multiset()
                    .iter()
                    .map(|m| m.to_string())
                    .collect();
                format!(
                    "group={label} chi={} deg={} eta={} a={{{}}}\n",
                    row + 1,
                    t.rows[row].degree,
                    dec.eta,
                    a.join(",")
                )
            } else {
                format!("group={label} {line}\n")
            };
            Ok((0, out))
        }
        Command::Chain => {
            let g = resolve_group(config)?;
            let label = g.label.clone();
            let mut ws = GroupWorkspace::new(Arc::new(g))?;
            let row = resolve_chi(&ws.table, config.chi)?;
            let (table, faithful_row) = ws.normalized(row)?;
            let ctx = ChainContext::new(table.clone(), faithful_row)?;
            let chain = build_maximal_chain(&ctx)?;
            let mut out = format!(
                "chain group={label} chi={} k={} eta={} normalized_order={}\n",
                row + 1,
                chain.k(),
                ctx.eta(),
                table.order()
            );
            for (i, step) in chain.steps.iter().enumerate() {
                out.push_str(&format!(
                    "step={} order={} theta_deg={}",
                    i,
                    step.subgroup.order(),
                    step.theta_degree()
                ));
                if i >= 1 {
                    out.push_str(&format!(
                        " r={} chief_order={}",
                        chain.r[i - 1],
                        chain.chief[i - 1].order()
                    ));
                }
                out.push('\n');
            }
            Ok((0, out))
        }
        Command::Verify => {
            let mut reports = Vec::new();
            if config.corpus {
                let spec = CorpusSpec {
                    max_order: config.max_order,
                    include_named: true,
                    ..CorpusSpec::default()
                };
                reports = verify_corpus(&spec, config.max_order, config.exhaustive_chains)?;
            } else {
                let g = resolve_group(config)?;
                let mut ws = GroupWorkspace::new(Arc::new(g))?;
                let row = resolve_chi(&ws.table, config.chi)?;
                reports.extend(verify_pair(&mut ws, row, config.exhaustive_chains)?);
            }
            let mut out = String::new();
            for r in &reports {
                out.push_str(&r.line());
                out.push('\n');
            }
            out.push_str(&summarize(&reports));
            out.push('\n');
            let failed = reports.iter().any(|r| r.status == Status::Fail);
            Ok((if failed { 2 } else { 0 }, out))
        }
    }
}
