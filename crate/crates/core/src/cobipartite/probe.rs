//! Evidence for the open question of whether GF(2) maximum nullity changes
//! under deletion of unsaturated vertices the way `Z` does. Nothing here
//! asserts an answer.

use super::{gf2_max_nullity, CobipartiteInstance};
use crate::error::Result;
use crate::graph::{CliquePartition, Graph};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ProbeCase {
    /// `k1 = k2 = 0`; outside the question.
    Saturated,
    /// No cross edges, so no saturated core remains.
    NoCore,
    BothSides,
    OneSide,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub m: usize,
    pub n: usize,
    pub k1: usize,
    pub k2: usize,
    pub case: ProbeCase,
    pub nullity_g: Option<usize>,
    pub nullity_h: Option<usize>,
    pub predicted: Option<usize>,
    pub consistent: Option<bool>,
}

impl ProbeReport {
    pub const CSV_HEADER: &'static str =
        "index,m,n,k1,k2,case,nullity_g,nullity_h,predicted,consistent";

    pub fn csv_row(&self, index: usize) -> String {
        fn opt<T: ToString>(x: Option<T>) -> String {
            x.map(|v| v.to_string()).unwrap_or_default()
        }
        format!(
            "{index},{},{},{},{},{:?},{},{},{},{}",
            self.m,
            self.n,
            self.k1,
            self.k2,
            self.case,
            opt(self.nullity_g),
            opt(self.nullity_h),
            opt(self.predicted),
            opt(self.consistent)
        )
    }
}

/// Computes `M(G)` and `M(H)` over GF(2), `H` being `G` without its
/// unsaturated vertices, and compares `M(G)` with the value the question
/// proposes. A single unsaturated side is treated like the `k2 = 0` case with
/// the sides swapped.
pub fn probe_question(g: &Graph, partition: CliquePartition) -> Result<ProbeReport> {
    let inst = CobipartiteInstance::with_partition(g.clone(), partition)?;
    let mut r = ProbeReport {
        m: inst.m(),
        n: inst.n(),
        k1: inst.k1,
        k2: inst.k2,
        case: ProbeCase::Saturated,
        nullity_g: None,
        nullity_h: None,
        predicted: None,
        consistent: None,
    };
    if inst.saturated {
        return Ok(r);
    }
    let Some(h) = inst.saturated_core() else {
        r.case = ProbeCase::NoCore;
        return Ok(r);
    };
    r.case = if inst.k1 >= 1 && inst.k2 >= 1 {
        ProbeCase::BothSides
    } else {
        ProbeCase::OneSide
    };
    let mg = gf2_max_nullity(g)?;
    let mh = gf2_max_nullity(&h)?;
    let excess = |k: usize| k.saturating_sub(1);
    let predicted = mh + excess(inst.k1) + excess(inst.k2);
    r.nullity_g = Some(mg);
    r.nullity_h = Some(mh);
    r.predicted = Some(predicted);
    r.consistent = Some(mg == predicted);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cobipartite::cobipartite_from_pattern;
    use crate::corpus::figures;

    #[test]
    fn fig6_probe() {
        let inst = cobipartite_from_pattern(&figures::fig6_pattern()).unwrap();
        let r = probe_question(&inst.graph, inst.partition).unwrap();
        assert_eq!(r.case, ProbeCase::OneSide);
        assert_eq!((r.k1, r.k2), (0, 1));
        assert_eq!(r.nullity_g, Some(2));
        assert!(r.consistent.is_some());
        assert!(r.csv_row(0).starts_with("0,3,4,0,1,OneSide,2,"));
    }

    #[test]
    fn saturated_probe_is_excluded() {
        let inst = cobipartite_from_pattern(&figures::fig4_pattern()).unwrap();
        let r = probe_question(&inst.graph, inst.partition).unwrap();
        assert_eq!(r.case, ProbeCase::Saturated);
        assert_eq!(r.consistent, None);
        assert_eq!(r.csv_row(3), "3,3,3,0,0,Saturated,,,,");
    }
}
