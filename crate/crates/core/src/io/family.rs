//! Named instance families for the command line and the property suites.

use super::generate::{
    exhaustive_graphs, exhaustive_patterns, random_cobipartite, random_ktree, random_pattern,
    random_saturated_pattern, random_unsaturated_pattern, rng,
};
use crate::cobipartite::{cobipartite_from_pattern, CobipartiteInstance};
use crate::error::{Error, Result};
use rand::Rng;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    ExhaustivePatterns,
    RandomPattern,
    RandomSaturated,
    RandomUnsaturated,
    RandomCobipartite,
    RandomKtree,
    ExhaustiveGraphs,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::ExhaustivePatterns,
        Family::RandomPattern,
        Family::RandomSaturated,
        Family::RandomUnsaturated,
        Family::RandomCobipartite,
        Family::RandomKtree,
        Family::ExhaustiveGraphs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::ExhaustivePatterns => "exhaustive_patterns",
            Family::RandomPattern => "random_pattern",
            Family::RandomSaturated => "random_saturated",
            Family::RandomUnsaturated => "random_unsaturated",
            Family::RandomCobipartite => "random_cobipartite",
            Family::RandomKtree => "random_ktree",
            Family::ExhaustiveGraphs => "exhaustive_graphs",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
                Error::Parse(format!(
                    "unknown family `{s}`; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

/// Size and seed knobs; each family reads the ones it needs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub seed: u64,
    pub count: usize,
    /// Rows, or the vertex count for graph families.
    pub m: usize,
    pub n: usize,
    pub k: usize,
}

impl Default for FamilyParams {
    fn default() -> Self {
        FamilyParams {
            seed: 0,
            count: 100,
            m: 3,
            n: 3,
            k: 2,
        }
    }
}

/// The cobipartite instances of a family. Random pattern families draw
/// `m, n` uniformly from `1..=m` and `1..=n`; graph families keep only the
/// cobipartite graphs, each with its first clique partition having two nonempty sides.
pub fn family_instances(family: Family, p: &FamilyParams) -> Result<Vec<CobipartiteInstance>> {
    let mut r = rng(p.seed);
    let mut out = Vec::new();
    let dims = |r: &mut rand_chacha::ChaCha8Rng| {
        (r.gen_range(1..=p.m.max(1)), r.gen_range(1..=p.n.max(1)))
    };
    let from_graph = |g: crate::graph::Graph| -> Result<Option<CobipartiteInstance>> {
        let parts = g.clique_partitions();
        match parts.iter().find(|q| !q.v1.is_empty() && !q.v2.is_empty()) {
            Some(&part) => CobipartiteInstance::with_partition(g, part).map(Some),
            None => Ok(None),
        }
    };
    match family {
        Family::ExhaustivePatterns => {
            for y in exhaustive_patterns(p.m, p.n)? {
                out.push(cobipartite_from_pattern(&y)?);
            }
        }
        Family::RandomPattern => {
            for _ in 0..p.count {
                let (m, n) = dims(&mut r);
                let density = r.gen_range(0.1..0.9);
                out.push(cobipartite_from_pattern(&random_pattern(
                    &mut r, m, n, density,
                )?)?);
            }
        }
        Family::RandomSaturated => {
            for _ in 0..p.count {
                let (m, n) = dims(&mut r);
                out.push(cobipartite_from_pattern(&random_saturated_pattern(
                    &mut r, m, n,
                )?)?);
            }
        }
        Family::RandomUnsaturated => {
            for _ in 0..p.count {
                let (m, n) = dims(&mut r);
                let (k1, k2) = loop {
                    let k = (r.gen_range(0..=2), r.gen_range(0..=2));
                    if k != (0, 0) {
                        break k;
                    }
                };
                out.push(cobipartite_from_pattern(&random_unsaturated_pattern(
                    &mut r, m, n, k1, k2,
                )?)?);
            }
        }
        Family::RandomCobipartite => {
            for _ in 0..p.count {
                let n = r.gen_range(2..=p.n.max(2));
                out.extend(from_graph(random_cobipartite(&mut r, n)?)?);
            }
        }
        Family::RandomKtree => {
            for _ in 0..p.count {
                out.extend(from_graph(random_ktree(&mut r, p.k, p.n)?)?);
            }
        }
        Family::ExhaustiveGraphs => {
            for g in exhaustive_graphs(p.n)? {
                out.extend(from_graph(g)?);
            }
        }
    }
    Ok(out)
}
