//! Replayable construction scripts.
//!
//! Text form, one step per line:
//!
//! ```text
//! start
//! union 2
//! extend 0;3,4
//! ```
//!
//! `extend` takes a `;`-separated list of comma-separated cliques over the
//! vertex indices of the graph built so far; a bare `extend` uses the empty
//! family. Blank lines and `#` comments are ignored.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::psc::{apply_extend, apply_union, CliqueFamily};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BuildStep {
    /// `K_1`.
    Start,
    /// Disjoint union with `K_s`.
    Union(usize),
    /// New vertex joined to everything outside the family.
    Extend(CliqueFamily),
}

impl fmt::Display for BuildStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildStep::Start => f.write_str("start"),
            BuildStep::Union(s) => write!(f, "union {s}"),
            BuildStep::Extend(q) if q.is_empty() => f.write_str("extend"),
            BuildStep::Extend(q) => write!(f, "extend {q}"),
        }
    }
}

impl FromStr for BuildStep {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let line = line.trim();
        let (word, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match word {
            "start" if rest.is_empty() => Ok(BuildStep::Start),
            "union" => rest
                .parse()
                .map(BuildStep::Union)
                .map_err(|_| Error::InvalidArgument(format!("bad clique order {rest:?}"))),
            "extend" => Ok(BuildStep::Extend(rest.parse()?)),
            _ => Err(Error::InvalidArgument(format!("unrecognised step {line:?}"))),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct BuildScript {
    pub steps: Vec<BuildStep>,
}

impl BuildScript {
    pub fn new(steps: Vec<BuildStep>) -> Self {
        BuildScript { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Replays the script and returns the graph after every step.
    ///
    /// The empty script yields no graphs; [`build`] maps it to the empty graph.
    pub fn replay(&self) -> Result<Vec<Graph>> {
        let mut out: Vec<Graph> = Vec::with_capacity(self.steps.len());
        for (i, step) in self.steps.iter().enumerate() {
            let fail = |e: Error| Error::Script { step: i, reason: e.to_string() };
            let next = match (step, out.last()) {
                (BuildStep::Start, None) => Graph::complete(1).expect("K1"),
                (BuildStep::Start, Some(_)) => {
                    return Err(Error::Script { step: i, reason: "start may only be the first step".into() })
                }
                (_, None) => {
                    return Err(Error::Script { step: i, reason: "script must begin with start".into() })
                }
                (BuildStep::Union(s), Some(g)) => apply_union(g, *s).map_err(fail)?,
                (BuildStep::Extend(q), Some(g)) => apply_extend(g, q).map_err(fail)?,
            };
            out.push(next);
        }
        Ok(out)
    }
}

impl fmt::Display for BuildScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(f, "{step}")?;
        }
        Ok(())
    }
}

impl FromStr for BuildScript {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut steps = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let step = line.parse().map_err(|e: Error| Error::Script {
                step: steps.len(),
                reason: format!("line {}: {e}", i + 1),
            })?;
            steps.push(step);
        }
        Ok(BuildScript { steps })
    }
}

impl TryFrom<String> for BuildScript {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<BuildScript> for String {
    fn from(s: BuildScript) -> String {
        s.to_string()
    }
}

/// The graph a script constructs; the empty script gives the empty graph.
pub fn build(script: &BuildScript) -> Result<Graph> {
    match script.replay()?.pop() {
        Some(g) => Ok(g),
        None => Graph::empty(0),
    }
}
