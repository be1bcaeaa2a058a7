use super::{ForcingRule, Kernel, Target};
use crate::bitset::{subsets_of_size, VertexSet};
use crate::error::{cap, Result};
use crate::graph::Graph;
use crate::pattern::{has_triangle_of_size, looping_pattern, tri_number};

pub const ZF_MAX_VERTICES: usize = 20;
pub const ENHANCED_MAX_VERTICES: usize = 16;

/// A minimum forcing-set size with the first witness in colex order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZfResult {
    pub number: usize,
    pub witness: VertexSet,
}

/// Smallest `k`, and first `k`-subset, satisfying a monotone predicate.
fn smallest_set(n: usize, mut ok: impl FnMut(u64) -> bool) -> ZfResult {
    for k in 0..=n {
        if let Some(w) = subsets_of_size(VertexSet::full(n), k).find(|s| ok(s.0)) {
            return ZfResult {
                number: k,
                witness: w,
            };
        }
    }
    unreachable!("the full vertex set always qualifies")
}

/// `Z`, `Z+` or the loop zero forcing number, by iterative deepening over
/// initial-set size.
pub fn zf_number<'a>(rule: ForcingRule, target: impl Into<Target<'a>>) -> Result<ZfResult> {
    let target = target.into();
    cap("zero forcing vertex count", ZF_MAX_VERTICES, target.n())?;
    let k = Kernel::new(target);
    Ok(smallest_set(k.n, |f| k.close(rule, f, k.full) == k.full))
}

/// `Z_d`: smallest set that fills the graph using only its own vertices as
/// forcers.
pub fn direct_zf_number(g: &Graph) -> Result<ZfResult> {
    cap("zero forcing vertex count", ZF_MAX_VERTICES, g.n())?;
    let k = Kernel::new(Target::Graph(g));
    Ok(smallest_set(k.n, |f| {
        k.close(ForcingRule::Standard, f, f) == k.full
    }))
}

/// Smallest `F ⊇ V1` whose standard closure, with only `V1` forcing, fills
/// the graph. The witness is the first such `F` in colex order of `F ∖ V1`.
pub fn min_force_between(g: &Graph, v1: VertexSet, v2: VertexSet) -> Result<ZfResult> {
    g.validate_partition(v1, v2)?;
    let k = Kernel::new(Target::Graph(g));
    for s in 0..=v2.len() {
        if let Some(extra) = subsets_of_size(v2, s)
            .find(|x| k.close(ForcingRule::Standard, v1.0 | x.0, v1.0) == k.full)
        {
            return Ok(ZfResult {
                number: v1.len() + s,
                witness: v1 | extra,
            });
        }
    }
    unreachable!("F = V fills the graph")
}

/// Enhanced zero forcing number and the first looping attaining it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Enhanced {
    pub number: usize,
    pub looping: VertexSet,
}

/// `Ẑ`: the maximum loop zero forcing number over all `2^n` loopings.
///
/// Computed twice, once by loop forcing and once as `n` minus the minimum
/// triangle number of the looping patterns; the two must agree.
pub fn enhanced_zf_number(g: &Graph) -> Result<Enhanced> {
    cap(
        "enhanced zero forcing vertex count",
        ENHANCED_MAX_VERTICES,
        g.n(),
    )?;
    let by_loops = enhanced_by_loop_forcing(g);
    let by_tri = enhanced_by_triangles(g);
    assert_eq!(
        by_loops,
        by_tri,
        "loop forcing and triangle routes disagree on {:?}",
        g.labeled_edges()
    );
    Ok(by_loops)
}

fn enhanced_by_loop_forcing(g: &Graph) -> Enhanced {
    let n = g.n();
    let mut best = Enhanced {
        number: 0,
        looping: VertexSet::EMPTY,
    };
    // sets that recently worked are tried first; most loopings share one
    let mut recent: Vec<u64> = Vec::new();
    for loops in 0u64..(1 << n) {
        let h = g.with_loops(VertexSet(loops));
        let k = Kernel::new(Target::Looped(&h));
        let fills = |f: u64| k.close(ForcingRule::Loop, f, k.full) == k.full;
        if loops != 0 {
            if let Some(pos) = recent.iter().position(|&f| fills(f)) {
                let f = recent.remove(pos);
                recent.insert(0, f);
                continue;
            }
            // supersets of forcing sets force, so size `best` is decisive
            if let Some(w) = subsets_of_size(VertexSet::full(n), best.number).find(|s| fills(s.0)) {
                recent.insert(0, w.0);
                recent.truncate(8);
                continue;
            }
        }
        let z = smallest_set(n, fills);
        recent.insert(0, z.witness.0);
        recent.truncate(8);
        if loops == 0 || z.number > best.number {
            best = Enhanced {
                number: z.number,
                looping: VertexSet(loops),
            };
        }
    }
    best
}

fn enhanced_by_triangles(g: &Graph) -> Enhanced {
    let n = g.n();
    let mut min_tri = usize::MAX;
    let mut at = VertexSet::EMPTY;
    for loops in 0u64..(1 << n) {
        let y = looping_pattern(&g.with_loops(VertexSet(loops)));
        if min_tri != usize::MAX && has_triangle_of_size(&y, min_tri) {
            continue;
        }
        min_tri = tri_number(&y);
        at = VertexSet(loops);
    }
    Enhanced {
        number: n - min_tri,
        looping: at,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::figures;
    use crate::error::Error;

    fn z(g: &Graph) -> usize {
        zf_number(ForcingRule::Standard, g).unwrap().number
    }

    #[test]
    fn standard_examples() {
        assert_eq!(z(&figures::fig3()), 3);
        assert_eq!(z(&figures::fig4()), 3);
        assert_eq!(z(&figures::fig7_h()), 4);
        assert_eq!(
            zf_number(ForcingRule::Psd, &figures::fig7_h())
                .unwrap()
                .number,
            4
        );
        assert_eq!(z(&figures::extended_pentasun()), 3);
        for n in 1..=8 {
            assert_eq!(z(&Graph::path(n)), 1);
            assert_eq!(z(&Graph::complete(n)), n.max(2) - 1);
        }
        let w = zf_number(ForcingRule::Standard, &Graph::path(5))
            .unwrap()
            .witness;
        assert_eq!(w, VertexSet::singleton(0));
        assert!(matches!(
            zf_number(ForcingRule::Standard, &Graph::empty(21)),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn direct_examples() {
        assert_eq!(direct_zf_number(&figures::fig2_g1()).unwrap().number, 3);
        for n in 2..=7 {
            assert_eq!(direct_zf_number(&Graph::complete(n)).unwrap().number, n - 1);
        }
        // a path needs every other vertex when forcers must be initial
        assert_eq!(direct_zf_number(&Graph::path(5)).unwrap().number, 3);
    }

    #[test]
    fn forcing_between_sides() {
        let v1 = VertexSet::from_labels(&[1, 2, 3]);
        let v2 = VertexSet::from_labels(&[4, 5, 6]);
        assert_eq!(
            min_force_between(&figures::fig2_g2(), v1, v2)
                .unwrap()
                .number,
            3
        );
        assert_eq!(
            min_force_between(&figures::fig3(), v1, v2).unwrap().number,
            5
        );
        let two_cliques = {
            let mut g = Graph::empty(6);
            for (a, b) in [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)] {
                g.add_edge(a, b);
            }
            g
        };
        assert_eq!(min_force_between(&two_cliques, v1, v2).unwrap().number, 6);
        assert!(min_force_between(&two_cliques, v1, v1).is_err());
    }

    #[test]
    fn enhanced_examples() {
        assert_eq!(enhanced_zf_number(&figures::fig7_h()).unwrap().number, 4);
        assert_eq!(enhanced_zf_number(&Graph::path(4)).unwrap().number, 1);
        assert_eq!(enhanced_zf_number(&Graph::complete(4)).unwrap().number, 3);
        assert_eq!(enhanced_zf_number(&Graph::empty(3)).unwrap().number, 3);
    }

    #[test]
    fn loop_rule_small_cases() {
        let h = Graph::complete(2).with_loops(VertexSet::full(2));
        assert_eq!(zf_number(ForcingRule::Loop, &h).unwrap().number, 1);
        let h = Graph::complete(2).with_loops(VertexSet::EMPTY);
        assert_eq!(zf_number(ForcingRule::Loop, &h).unwrap().number, 0);
    }
}
