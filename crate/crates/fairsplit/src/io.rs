//! Canonical JSON documents for instances, solutions, and back-map contexts.
//!
//! Every file the CLI reads or writes is one of the three document types
//! here. Serialization is deterministic: struct fields keep declaration
//! order, collections are sorted, rationals print as exact `"p/q"` strings,
//! and sign vectors as `"+-0"` strings. Oracles persist as descriptors (a
//! table or a named source instance), never as code, so any run can be
//! reproduced from its files alone.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::measures::{ConHalvInstance, CutLabelSolution};
use crate::oracles::RelabelContext;
use crate::partition::{CyclePartitionInstance, PathPartitionInstance};
use crate::problems::{IndependentSetSolution, OTuckerInstance, SchrijverInstance, SplitSolution};
use crate::reductions::DiscretizationContext;
use crate::sign::{SignVector, StableKSubset};
use crate::solvers::{Generated, PipelineRoute};

/// Bumped on any incompatible format change; readers reject other versions.
pub const SCHEMA_VERSION: u32 = 1;

/// A problem instance on disk.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceDocument {
    pub schema_version: u32,
    #[serde(flatten)]
    pub body: InstanceBody,
}

impl InstanceDocument {
    pub fn new(body: InstanceBody) -> Self {
        InstanceDocument {
            schema_version: SCHEMA_VERSION,
            body,
        }
    }
}

/// The instance payload, tagged by problem kind.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InstanceBody {
    Fisc(CyclePartitionInstance),
    Fsplitc(CyclePartitionInstance),
    Fsplitp(PathPartitionInstance),
    Conhalv(ConHalvInstance),
    Schrijver(SchrijverInstance),
    Otucker(OTuckerInstance),
}

impl InstanceBody {
    pub fn kind(&self) -> &'static str {
        match self {
            InstanceBody::Fisc(_) => "fisc",
            InstanceBody::Fsplitc(_) => "fsplitc",
            InstanceBody::Fsplitp(_) => "fsplitp",
            InstanceBody::Conhalv(_) => "conhalv",
            InstanceBody::Schrijver(_) => "schrijver",
            InstanceBody::Otucker(_) => "otucker",
        }
    }
}

impl From<Generated> for InstanceBody {
    fn from(g: Generated) -> Self {
        match g {
            Generated::Fisc(i) => InstanceBody::Fisc(i),
            Generated::FsplitC(i) => InstanceBody::Fsplitc(i),
            Generated::FsplitP(i) => InstanceBody::Fsplitp(i),
            Generated::ConHalv(i) => InstanceBody::Conhalv(i),
        }
    }
}

/// A solution on disk, optionally annotated with how it was found.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionDocument {
    pub schema_version: u32,
    #[serde(flatten)]
    pub body: SolutionBody,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

impl SolutionDocument {
    pub fn new(body: SolutionBody, provenance: Option<Provenance>) -> Self {
        SolutionDocument {
            schema_version: SCHEMA_VERSION,
            body,
            provenance,
        }
    }
}

/// The solution payload, tagged by the same kind as its instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SolutionBody {
    Fisc {
        vertices: IndependentSetSolution,
    },
    Fsplitc(SplitSolution),
    Fsplitp(SplitSolution),
    Conhalv(CutLabelSolution),
    Schrijver {
        s1: StableKSubset,
        s2: StableKSubset,
    },
    Otucker {
        x: SignVector,
        y: SignVector,
    },
}

impl SolutionBody {
    pub fn kind(&self) -> &'static str {
        match self {
            SolutionBody::Fisc { .. } => "fisc",
            SolutionBody::Fsplitc(_) => "fsplitc",
            SolutionBody::Fsplitp(_) => "fsplitp",
            SolutionBody::Conhalv(_) => "conhalv",
            SolutionBody::Schrijver { .. } => "schrijver",
            SolutionBody::Otucker { .. } => "otucker",
        }
    }
}

/// Where a solution came from. Wall-clock time is deliberately absent so
/// that rerunning a command reproduces its output byte for byte.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub solver: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub route: Option<PipelineRoute>,
    pub nodes_explored: u64,
}

/// Back-map context emitted next to a reduced instance; feeding it back in
/// lets a target solution be pulled down to the source problem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ContextDocument {
    Relabel(RelabelContext),
    Discretization(DiscretizationContext),
    AddedVertex { added_vertex: Option<usize> },
}

/// Pretty JSON with a trailing newline; the one canonical text form.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    fs::write(path, to_canonical_json(value)?)?;
    Ok(())
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

fn check_schema(version: u32) -> Result<()> {
    if version != SCHEMA_VERSION {
        return Err(Error::usage(format!(
            "unsupported schema_version {version}; this build reads {SCHEMA_VERSION}"
        )));
    }
    Ok(())
}

pub fn parse_instance(text: &str) -> Result<InstanceDocument> {
    let doc: InstanceDocument = serde_json::from_str(text)?;
    check_schema(doc.schema_version)?;
    Ok(doc)
}

pub fn read_instance(path: &Path) -> Result<InstanceDocument> {
    let doc: InstanceDocument = read_json(path)?;
    check_schema(doc.schema_version)?;
    Ok(doc)
}

pub fn parse_solution(text: &str) -> Result<SolutionDocument> {
    let doc: SolutionDocument = serde_json::from_str(text)?;
    check_schema(doc.schema_version)?;
    Ok(doc)
}

pub fn read_solution(path: &Path) -> Result<SolutionDocument> {
    let doc: SolutionDocument = read_json(path)?;
    check_schema(doc.schema_version)?;
    Ok(doc)
}

pub fn read_context(path: &Path) -> Result<ContextDocument> {
    read_json(path)
}
