use super::{Force, ForcingRecord, ForcingRule, Target};
use crate::bitset::VertexSet;

/// Word-level view of a graph or looping used by all forcing kernels.
#[derive(Clone, Debug)]
pub(crate) struct Kernel {
    pub n: usize,
    pub adj: Vec<u64>,
    pub loops: u64,
    pub full: u64,
}

impl Kernel {
    pub fn new(target: Target<'_>) -> Kernel {
        let (g, loops) = match target {
            Target::Graph(g) => (g, 0),
            Target::Looped(h) => (h.base(), h.loops().0),
        };
        let n = g.n();
        Kernel {
            n,
            adj: (0..n).map(|v| g.neighbors(v).0).collect(),
            loops,
            full: VertexSet::full(n).0,
        }
    }

    /// Closed neighborhood under the loop rule.
    #[inline]
    fn loop_nbrs(&self, v: usize) -> u64 {
        self.adj[v] | (self.loops & 1 << v)
    }

    /// Unfilled components, as a per-vertex component mask (0 for filled).
    fn component_masks(&self, filled: u64) -> Vec<u64> {
        let mut comp = vec![0u64; self.n];
        let mut left = self.full & !filled;
        while left != 0 {
            let start = left & left.wrapping_neg();
            let mut c = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0;
                let mut it = frontier;
                while it != 0 {
                    let v = it.trailing_zeros() as usize;
                    it &= it - 1;
                    next |= self.adj[v];
                }
                next &= left & !c;
                c |= next;
                frontier = next;
            }
            left &= !c;
            let mut it = c;
            while it != 0 {
                let v = it.trailing_zeros() as usize;
                it &= it - 1;
                comp[v] = c;
            }
        }
        comp
    }

    /// Fixed point of `rule` from `filled`, letting only vertices in
    /// `allowed` force.
    pub fn close(&self, rule: ForcingRule, mut filled: u64, allowed: u64) -> u64 {
        match rule {
            ForcingRule::Standard => loop {
                let mut changed = false;
                let mut it = filled & allowed;
                while it != 0 {
                    let v = it.trailing_zeros() as usize;
                    it &= it - 1;
                    let u = self.adj[v] & !filled;
                    if u != 0 && u & (u - 1) == 0 {
                        filled |= u;
                        changed = true;
                    }
                }
                if !changed {
                    return filled;
                }
            },
            ForcingRule::Loop => loop {
                let mut changed = false;
                let mut it = allowed & self.full;
                while it != 0 {
                    let v = it.trailing_zeros() as usize;
                    it &= it - 1;
                    let u = self.loop_nbrs(v) & !filled;
                    if u != 0 && u & (u - 1) == 0 {
                        filled |= u;
                        changed = true;
                    }
                }
                if !changed {
                    return filled;
                }
            },
            ForcingRule::Psd => loop {
                if filled == self.full {
                    return filled;
                }
                let comp = self.component_masks(filled);
                let mut gained = 0u64;
                let mut it = filled & allowed;
                while it != 0 {
                    let v = it.trailing_zeros() as usize;
                    it &= it - 1;
                    gained |= psd_targets(self.adj[v] & !filled, &comp);
                }
                if gained == 0 {
                    return filled;
                }
                filled |= gained;
            },
        }
    }

    /// Every force legal in the current state, ordered by forcer then forced.
    pub fn legal_forces(&self, rule: ForcingRule, filled: u64, allowed: u64) -> Vec<Force> {
        let mut out = Vec::new();
        match rule {
            ForcingRule::Standard => {
                for v in VertexSet(filled & allowed) {
                    let u = self.adj[v] & !filled;
                    if u.count_ones() == 1 {
                        out.push(Force::new(v, u.trailing_zeros() as usize));
                    }
                }
            }
            ForcingRule::Loop => {
                for v in VertexSet(allowed & self.full) {
                    let u = self.loop_nbrs(v) & !filled;
                    if u.count_ones() == 1 {
                        out.push(Force::new(v, u.trailing_zeros() as usize));
                    }
                }
            }
            ForcingRule::Psd => {
                let comp = self.component_masks(filled);
                for v in VertexSet(filled & allowed) {
                    let unfilled = self.adj[v] & !filled;
                    let strict = unfilled.count_ones() > 1;
                    for u in VertexSet(psd_targets(unfilled, &comp)) {
                        out.push(Force {
                            forcer: v,
                            forced: u,
                            strictly_psd: strict,
                        });
                    }
                }
            }
        }
        out
    }

    /// A complete-as-possible record: repeatedly applies the first legal force.
    pub fn greedy_record(&self, rule: ForcingRule, initial: u64, allowed: u64) -> ForcingRecord {
        let mut filled = initial;
        let mut forces = Vec::new();
        while let Some(&f) = self.legal_forces(rule, filled, allowed).first() {
            filled |= 1 << f.forced;
            forces.push(f);
        }
        ForcingRecord::new(VertexSet(initial), forces)
    }
}

/// Unfilled neighbors that are alone in their component among `unfilled`.
#[inline]
fn psd_targets(unfilled: u64, comp: &[u64]) -> u64 {
    let mut out = 0;
    let mut it = unfilled;
    while it != 0 {
        let u = it.trailing_zeros() as usize;
        it &= it - 1;
        if (unfilled & comp[u]).count_ones() == 1 {
            out |= 1 << u;
        }
    }
    out
}

/// Final filled set reached from `filled` under `rule`.
pub fn closure<'a>(
    rule: ForcingRule,
    target: impl Into<Target<'a>>,
    filled: VertexSet,
) -> VertexSet {
    let k = Kernel::new(target.into());
    VertexSet(k.close(rule, filled.0 & k.full, k.full))
}

/// A forcing record from `initial` that applies forces in order of
/// (forcer, forced) until none is legal.
pub fn forcing_record<'a>(
    rule: ForcingRule,
    target: impl Into<Target<'a>>,
    initial: VertexSet,
) -> ForcingRecord {
    let k = Kernel::new(target.into());
    k.greedy_record(rule, initial.0 & k.full, k.full)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::figures;
    use crate::graph::Graph;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Applies legal forces in a random order until none remains.
    fn random_order_closure(
        k: &Kernel,
        rule: ForcingRule,
        mut filled: u64,
        rng: &mut impl Rng,
    ) -> u64 {
        loop {
            let fs = k.legal_forces(rule, filled, k.full);
            match fs.choose(rng) {
                Some(f) => filled |= 1 << f.forced,
                None => return filled,
            }
        }
    }

    #[test]
    fn examples() {
        let g = figures::fig1();
        let f = VertexSet::from_labels(&[1, 2, 6, 7]);
        assert_eq!(closure(ForcingRule::Standard, &g, f), g.vertices());
        let rec = forcing_record(ForcingRule::Standard, &g, f);
        assert_eq!(rec.to_trace(), "F = {1, 2, 6, 7}\n1 -> 3\n2 -> 4\n3 -> 5\n");
        let p4 = Graph::path(4);
        for rule in [ForcingRule::Standard, ForcingRule::Psd] {
            assert_eq!(closure(rule, &p4, VertexSet::EMPTY), VertexSet::EMPTY);
        }
        // unfilled path ends force their neighbors
        assert_eq!(
            closure(ForcingRule::Loop, &p4, VertexSet::EMPTY),
            p4.vertices()
        );
        let looped = Graph::empty(1).with_loops(VertexSet::full(1));
        assert_eq!(
            closure(ForcingRule::Loop, &looped, VertexSet::EMPTY),
            VertexSet::full(1)
        );
        let star = crate::io::parse_graph6("D?{").unwrap();
        let center = VertexSet::singleton(4);
        assert_eq!(closure(ForcingRule::Psd, &star, center), star.vertices());
        assert_eq!(closure(ForcingRule::Standard, &star, center), center);
    }

    #[test]
    fn psd_record_flags_strict_forces() {
        let star = crate::io::parse_graph6("D?{").unwrap();
        let rec = forcing_record(ForcingRule::Psd, &star, VertexSet::singleton(4));
        assert_eq!(rec.forces.len(), 4);
        assert!(rec.forces.iter().all(|f| f.forcer == 4));
        assert_eq!(rec.forces.iter().filter(|f| f.strictly_psd).count(), 3);
    }

    #[test]
    fn closure_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..300 {
            let n = rng.gen_range(1..=10);
            let density = rng.gen_range(0.1..0.7);
            let g = random_graph(&mut rng, n, density);
            let h = g.with_loops(VertexSet(rng.gen::<u64>() & VertexSet::full(n).0));
            let f = VertexSet(rng.gen::<u64>() & VertexSet::full(n).0);
            let extra = VertexSet(rng.gen::<u64>() & VertexSet::full(n).0);
            for (rule, target) in [
                (ForcingRule::Standard, Target::Graph(&g)),
                (ForcingRule::Psd, Target::Graph(&g)),
                (ForcingRule::Loop, Target::Looped(&h)),
            ] {
                let c = closure(rule, target, f);
                assert!(f.is_subset(c));
                assert_eq!(closure(rule, target, c), c);
                assert!(c.is_subset(closure(rule, target, f | extra)));
                let k = Kernel::new(target);
                for _ in 0..3 {
                    assert_eq!(random_order_closure(&k, rule, f.0, &mut rng), c.0);
                }
            }
            let std = closure(ForcingRule::Standard, &g, f);
            assert!(std.is_subset(closure(ForcingRule::Psd, &g, f)));
            assert!(std.is_subset(closure(ForcingRule::Loop, &h, f)));
        }
    }

    #[test]
    fn standard_forces_are_loop_forces() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..200 {
            let n = rng.gen_range(1..=8);
            let g = random_graph(&mut rng, n, 0.4);
            let f = rng.gen::<u64>() & VertexSet::full(n).0;
            let ks = Kernel::new(Target::Graph(&g));
            for loops in 0u64..(1 << n) {
                let h = g.with_loops(VertexSet(loops));
                let kl = Kernel::new(Target::Looped(&h));
                let lf = kl.legal_forces(ForcingRule::Loop, f, kl.full);
                for s in ks.legal_forces(ForcingRule::Standard, f, ks.full) {
                    assert!(lf.contains(&s));
                }
            }
        }
    }
}
