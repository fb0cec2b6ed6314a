//! Seeding and extending pairs of disjoint induced forests in an E(4)
//! triangulation.
//!
//! A *closed pair* `(C, D)` is a pair of disjoint vertex sets, each inducing a
//! forest, that satisfies the absorption rules
//!
//! 1. a black vertex adjacent to a white vertex of `C` is in `C`; a black
//!    vertex outside `D` adjacent to a red vertex of `C` is in `C`;
//! 2. a white vertex adjacent to a black vertex of `D` is in `D`; a white
//!    vertex outside `C` adjacent to a red vertex of `D` is in `D`.
//!
//! Every closed pair extends to a cover `(X, Y)` of all vertices by two
//! induced forests ([`extend_cover`]). Seeds come from small stars and paths
//! around well-separated vertices ([`seed_pair_thm13`], [`seed_pair_thm14`]).

mod aux;
mod extend;
mod seeds;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use aux::{build_auxiliary_j, greedy_chromatic_independent_set, AuxGraph, IndependentSet};
pub use extend::{extend_cover, extend_cover_in_order};
pub use seeds::{
    check_bw_closed, enumerate_thm13_covers, legal_choices, path_subgraph, prescribed_side, seed_pair_thm13,
    seed_pair_thm14, star_subgraph, star_with_leaves, thm13_choice_count, thm13_choice_vector, validate_closed_pair,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TreePairError {
    #[error("auxiliary graph has max degree {aux_max_degree}, not below {graph_max_degree}^2/4")]
    AuxDegreeBound {
        aux_max_degree: usize,
        graph_max_degree: usize,
    },
    #[error("greedy colouring used {colours} colours, more than {graph_max_degree}^2/4")]
    GreedyColourBound { colours: usize, graph_max_degree: usize },
    #[error("independent set of size {size} does not exceed {bound}")]
    IndependentSetBound { size: usize, bound: f64 },
    #[error("neighbourhood of {vertex} minus {removed} is not an induced path")]
    NotAPath { vertex: usize, removed: usize },
    #[error("star centre {vertex} is red")]
    CenterIsRed { vertex: usize },
    #[error("illegal choice for vertex {vertex}: {reason}")]
    IllegalChoice { vertex: usize, reason: String },
    #[error("seed conflict: {0}")]
    SeedConflict(String),
    #[error("vertices {a} and {b} are at distance {distance}, need at least 5")]
    DistanceViolation { a: usize, b: usize, distance: usize },
    #[error("input pair is not a disjoint closed pair of forests ({0} problems)")]
    NotClosedInput(usize),
    #[error("extension created a cycle at vertex {vertex} ({stage})")]
    ExtensionFailure { vertex: usize, stage: &'static str },
    #[error("{count} choice vectors exceed the cap {cap}")]
    TooManyChoices { count: u128, cap: u128 },
}

/// Which seed structure a vertex of `K` contributes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Choice {
    Star,
    /// Neighbourhood minus the given red neighbour.
    Path(usize),
}

/// One choice per vertex of `K`, sorted by vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChoiceVector(pub Vec<(usize, Choice)>);

impl fmt::Display for ChoiceVector {
    /// Space-separated `v:STAR` / `v:PATH:r` tokens with 1-based ids.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, choice)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match choice {
                Choice::Star => write!(f, "{}:STAR", v + 1)?,
                Choice::Path(r) => write!(f, "{}:PATH:{}", v + 1, r + 1)?,
            }
        }
        Ok(())
    }
}

impl FromStr for ChoiceVector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let id = |tok: &str| -> Result<usize, String> {
            match tok.parse::<usize>() {
                Ok(v) if v > 0 => Ok(v - 1),
                _ => Err(format!("invalid vertex id `{tok}`")),
            }
        };
        let mut entries = Vec::new();
        for token in s.split_whitespace() {
            let parts: Vec<&str> = token.split(':').collect();
            let entry = match parts.as_slice() {
                [v, "STAR"] => (id(v)?, Choice::Star),
                [v, "PATH", r] => (id(v)?, Choice::Path(id(r)?)),
                _ => return Err(format!("invalid choice token `{token}`")),
            };
            entries.push(entry);
        }
        entries.sort();
        if entries.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err("vertex listed twice".into());
        }
        Ok(ChoiceVector(entries))
    }
}

/// Disjoint seed sets `C` and `D`, each sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ClosedPair {
    pub c: Vec<usize>,
    pub d: Vec<usize>,
}

impl ClosedPair {
    pub fn new(mut c: Vec<usize>, mut d: Vec<usize>) -> Self {
        c.sort_unstable();
        c.dedup();
        d.sort_unstable();
        d.dedup();
        ClosedPair { c, d }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    X,
    Y,
}

/// Partition of all vertices into `X` and `Y`, each inducing a forest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoverPair {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub connected_x: bool,
    pub connected_y: bool,
}

impl CoverPair {
    pub fn side(&self, v: usize) -> Side {
        if self.x.binary_search(&v).is_ok() {
            Side::X
        } else {
            Side::Y
        }
    }

    /// `true` for members of `X`, over `n` vertices.
    pub fn x_mask(&self, n: usize) -> Vec<bool> {
        crate::planar::mask_of(n, self.x.iter().copied())
    }

    pub fn is_tree_pair(&self) -> bool {
        self.connected_x && self.connected_y
    }
}

impl fmt::Display for CoverPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (label, side) in [("X", &self.x), ("Y", &self.y)] {
            write!(f, "{label}:")?;
            for v in side {
                write!(f, " {}", v + 1)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Which absorption rule a vertex breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    /// Rule 1: the black vertex should be in `C`.
    BlackIntoC,
    /// Rule 2: the white vertex should be in `D`.
    WhiteIntoD,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub vertex: usize,
    pub condition: Condition,
    /// The neighbour in `C` (rule 1) or `D` (rule 2) that triggers the rule.
    pub witness: usize,
}
