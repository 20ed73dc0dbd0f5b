//! Cycles and paths on `1..=n` with a partition of the vertices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Shared payload of the two instance types: `n` vertices labeled `1..=n` and
/// a partition into parts `1..=m`, every part nonempty. Storing the
/// part-of-vertex map makes "parts are disjoint and cover `[n]`" structural;
/// only nonemptiness needs checking.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct VertexPartition {
    m: usize,
    /// `part_of[v - 1]` is the 1-based part of vertex `v`.
    part_of: Vec<usize>,
}

impl VertexPartition {
    fn from_parts(n: usize, parts: &[Vec<usize>]) -> Result<Self> {
        if n == 0 {
            return Err(Error::instance("instance needs n >= 1"));
        }
        let m = parts.len();
        if m == 0 {
            return Err(Error::instance("instance needs m >= 1 parts"));
        }
        let mut part_of = vec![0usize; n];
        for (idx, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(Error::instance(format!("part {} is empty", idx + 1)));
            }
            for &v in part {
                if v < 1 || v > n {
                    return Err(Error::instance(format!("vertex {v} outside 1..={n}")));
                }
                if part_of[v - 1] != 0 {
                    return Err(Error::instance(format!("vertex {v} listed twice")));
                }
                part_of[v - 1] = idx + 1;
            }
        }
        if let Some(v) = part_of.iter().position(|&p| p == 0) {
            return Err(Error::instance(format!("vertex {} missing from parts", v + 1)));
        }
        Ok(VertexPartition { m, part_of })
    }

    fn from_part_of(part_of: Vec<usize>) -> Result<Self> {
        if part_of.is_empty() {
            return Err(Error::instance("instance needs n >= 1"));
        }
        let m = *part_of.iter().max().unwrap();
        if m == 0 {
            return Err(Error::instance("part indices are 1-based"));
        }
        let mut seen = vec![false; m];
        for (i, &p) in part_of.iter().enumerate() {
            if p < 1 || p > m {
                return Err(Error::instance(format!(
                    "vertex {} assigned to invalid part {p}",
                    i + 1
                )));
            }
            seen[p - 1] = true;
        }
        if let Some(p) = seen.iter().position(|&s| !s) {
            return Err(Error::instance(format!("part {} is empty", p + 1)));
        }
        Ok(VertexPartition { m, part_of })
    }

    fn n(&self) -> usize {
        self.part_of.len()
    }

    fn parts(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.m];
        for (i, &p) in self.part_of.iter().enumerate() {
            out[p - 1].push(i + 1);
        }
        out
    }

    fn part_sizes(&self) -> Vec<usize> {
        let mut out = vec![0usize; self.m];
        for &p in &self.part_of {
            out[p - 1] += 1;
        }
        out
    }
}

/// Serialized form shared by both instance kinds: parts as explicit sorted
/// vertex lists.
#[derive(Serialize, Deserialize)]
struct PartitionRepr {
    n: usize,
    parts: Vec<Vec<usize>>,
}

macro_rules! partition_instance {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
        #[serde(try_from = "PartitionRepr", into = "PartitionRepr")]
        pub struct $name {
            inner: VertexPartition,
        }

        impl $name {
            /// Build from explicit per-part vertex lists covering `1..=n`.
            pub fn from_parts(n: usize, parts: &[Vec<usize>]) -> Result<Self> {
                Ok(Self { inner: VertexPartition::from_parts(n, parts)? })
            }

            /// Build from the part-of-vertex map (`part_of[v-1]` is the part
            /// of vertex `v`, parts numbered `1..=m` with none empty).
            pub fn from_part_of(part_of: Vec<usize>) -> Result<Self> {
                Ok(Self { inner: VertexPartition::from_part_of(part_of)? })
            }

            pub fn n(&self) -> usize {
                self.inner.n()
            }

            pub fn m(&self) -> usize {
                self.inner.m
            }

            /// 1-based part of vertex `v`.
            pub fn part_of(&self, v: usize) -> Result<usize> {
                self.inner
                    .part_of
                    .get(v.wrapping_sub(1))
                    .copied()
                    .ok_or_else(|| {
                        Error::usage(format!("vertex {v} outside 1..={}", self.n()))
                    })
            }

            pub fn part_of_slice(&self) -> &[usize] {
                &self.inner.part_of
            }

            /// Parts as sorted vertex lists, indexed by part - 1.
            pub fn parts(&self) -> Vec<Vec<usize>> {
                self.inner.parts()
            }

            pub fn part_sizes(&self) -> Vec<usize> {
                self.inner.part_sizes()
            }
        }

        impl From<$name> for PartitionRepr {
            fn from(v: $name) -> PartitionRepr {
                PartitionRepr { n: v.n(), parts: v.parts() }
            }
        }

        impl TryFrom<PartitionRepr> for $name {
            type Error = Error;
            fn try_from(r: PartitionRepr) -> Result<Self> {
                Self::from_parts(r.n, &r.parts)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "n={}, parts", self.n())?;
                for part in self.parts() {
                    write!(f, " {:?}", part)?;
                }
                Ok(())
            }
        }
    };
}

partition_instance! {
    /// The cycle `1 - 2 - ... - n - 1` with a partition of its vertices.
    CyclePartitionInstance
}

partition_instance! {
    /// The path `1 - 2 - ... - n` (no wrap edge) with a partition of its
    /// vertices.
    PathPartitionInstance
}

impl CyclePartitionInstance {
    /// Whether `u` and `v` are joined by a cycle edge. For `n <= 2` every
    /// distinct pair is adjacent.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        let n = self.n();
        if u == v || u < 1 || v < 1 || u > n || v > n {
            return false;
        }
        u.abs_diff(v) == 1 || (u == 1 && v == n) || (v == 1 && u == n)
    }

    /// Forgets the wrap edge.
    pub fn as_path(&self) -> PathPartitionInstance {
        PathPartitionInstance {
            inner: self.inner.clone(),
        }
    }
}

impl PathPartitionInstance {
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        let n = self.n();
        if u < 1 || v < 1 || u > n || v > n {
            return false;
        }
        u.abs_diff(v) == 1
    }

    /// Adds the wrap edge `n - 1`, keeping vertices and parts.
    pub fn close_into_cycle(&self) -> CyclePartitionInstance {
        CyclePartitionInstance {
            inner: self.inner.clone(),
        }
    }

    /// True when every part has odd size, the shape required by the
    /// path-splitting problem.
    pub fn all_parts_odd(&self) -> bool {
        self.part_sizes().iter().all(|s| s % 2 == 1)
    }
}
