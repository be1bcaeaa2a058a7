mod common;

use rand::Rng;
use zflab::bitset::subsets_of_size;
use zflab::forcing::{
    classify_all, closure, direct_zf_number, enhanced_zf_number, forcing_record,
    persistent_triangle_by_loopings, persistent_triangle_check, reversal, sequence_search,
    strict_psd_after_standard, zf_number, ForcingRule, SequenceConstraints, VertexClass,
};
use zflab::graph::treewidth_exact;
use zflab::io::generate::{nonisomorphic_graphs, random_clique_with_attachments, rng};
use zflab::{Graph, VertexSet};

fn random_graph(r: &mut impl Rng, n: usize) -> Graph {
    let p = r.gen_range(0.15..0.85);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn number(rule: ForcingRule, g: &Graph) -> usize {
    zf_number(rule, g).unwrap().number
}

#[test]
fn chain_inequality() {
    let mut r = rng(41);
    for _ in 0..250 {
        let n = r.gen_range(1..=10);
        let g = random_graph(&mut r, n);
        let zp = number(ForcingRule::Psd, &g);
        let zh = enhanced_zf_number(&g).unwrap().number;
        let z = number(ForcingRule::Standard, &g);
        let zd = direct_zf_number(&g).unwrap().number;
        let tw = treewidth_exact(&g).unwrap();
        assert!(
            zp <= zh && zh <= z && z <= zd,
            "{zp} {zh} {z} {zd} on {:?}",
            g.edges()
        );
        assert!(g.min_degree() <= tw && tw <= zp, "{:?}", g.edges());
    }
}

#[test]
fn numbers_match_brute_force() {
    let mut r = rng(42);
    for _ in 0..150 {
        let n = r.gen_range(1..=7);
        let g = random_graph(&mut r, n);
        assert_eq!(
            number(ForcingRule::Standard, &g),
            common::zf_number(&g, common::Rule::Standard)
        );
        assert_eq!(
            number(ForcingRule::Psd, &g),
            common::zf_number(&g, common::Rule::Psd)
        );
        let loops = r.gen::<u64>() & ((1 << n) - 1);
        let h = g.with_loops(VertexSet(loops));
        assert_eq!(
            zf_number(ForcingRule::Loop, &h).unwrap().number,
            common::zf_number(&g, common::Rule::Loop(loops))
        );
    }
}

#[test]
fn closures_agree_with_brute_force_and_nest() {
    let mut r = rng(43);
    for _ in 0..200 {
        let n = r.gen_range(1..=9);
        let g = random_graph(&mut r, n);
        let f = VertexSet(r.gen::<u64>() & ((1 << n) - 1));
        let filled: Vec<bool> = (0..n).map(|v| f.contains(v)).collect();
        let adj: Vec<Vec<bool>> = (0..n)
            .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
            .collect();
        let standard = closure(ForcingRule::Standard, &g, f);
        let psd = closure(ForcingRule::Psd, &g, f);
        let as_set = |b: Vec<bool>| VertexSet::from_iter_ids((0..n).filter(|&v| b[v]));
        assert_eq!(
            standard,
            as_set(common::close(&adj, common::Rule::Standard, filled.clone()))
        );
        assert_eq!(
            psd,
            as_set(common::close(&adj, common::Rule::Psd, filled.clone()))
        );
        assert!(f.is_subset(standard) && standard.is_subset(psd));
        assert_eq!(closure(ForcingRule::Standard, &g, standard), standard);
        for loops in [0, (1u64 << n) - 1, r.gen::<u64>() & ((1 << n) - 1)] {
            let h = g.with_loops(VertexSet(loops));
            assert!(standard.is_subset(closure(ForcingRule::Loop, &h, f)));
        }
    }
}

#[test]
fn persistent_check_matches_loopings() {
    let mut r = rng(44);
    let (mut yes, mut no) = (0, 0);
    for _ in 0..25 {
        let n = r.gen_range(2..=7);
        let g = random_graph(&mut r, n);
        for _ in 0..40 {
            let k = r.gen_range(1..=n);
            let pick = |r: &mut rand_chacha::ChaCha8Rng| {
                let all: Vec<VertexSet> = subsets_of_size(g.vertices(), k).collect();
                all[r.gen_range(0..all.len())]
            };
            let (rs, cs) = (pick(&mut r), pick(&mut r));
            let a = persistent_triangle_check(&g, rs, cs).unwrap();
            assert_eq!(
                a,
                persistent_triangle_by_loopings(&g, rs, cs).unwrap(),
                "{rs} {cs} {:?}",
                g.edges()
            );
            if a {
                yes += 1
            } else {
                no += 1
            }
        }
    }
    assert!(yes > 0 && no > 0);
}

#[test]
fn reversals_of_optimal_records() {
    let mut r = rng(45);
    for _ in 0..200 {
        let n = r.gen_range(1..=10);
        let g = random_graph(&mut r, n);
        let best = zf_number(ForcingRule::Standard, &g).unwrap();
        let rec = forcing_record(ForcingRule::Standard, &g, best.witness);
        let rev = reversal(&g, &rec).unwrap();
        assert_eq!(rev.len(), best.number);
        assert_eq!(
            closure(ForcingRule::Standard, &g, rev),
            g.vertices(),
            "{:?}",
            g.edges()
        );
        let direct = direct_zf_number(&g).unwrap();
        let cons = SequenceConstraints {
            direct: true,
            ..SequenceConstraints::from(direct.witness)
        };
        let rec = sequence_search(ForcingRule::Standard, &g, &cons).expect("witness is direct");
        let rev = reversal(&g, &rec).unwrap();
        let back = SequenceConstraints {
            direct: true,
            ..SequenceConstraints::from(rev)
        };
        assert!(
            sequence_search(ForcingRule::Standard, &g, &back).is_some(),
            "{:?}",
            g.edges()
        );
    }
}

#[test]
fn strict_psd_forces_come_first_on_cobipartite_graphs() {
    let mut checked = 0;
    for n in 1..=8 {
        for g in nonisomorphic_graphs(n).unwrap() {
            if g.is_cobipartite() {
                assert_eq!(
                    strict_psd_after_standard(&g).unwrap(),
                    None,
                    "{:?}",
                    g.edges()
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
    // not every graph has the property
    let star_with_arm = Graph::from_labeled_edges(5, &[(1, 2), (1, 3), (1, 4), (4, 5)]).unwrap();
    assert!(strict_psd_after_standard(&star_with_arm).unwrap().is_some());
}

#[test]
fn simplicial_vertices_are_critical_or_uncritical() {
    let mut r = rng(46);
    for _ in 0..300 {
        let g = random_clique_with_attachments(&mut r, 9).unwrap();
        let classes = classify_all(&g).unwrap();
        let z = number(ForcingRule::Standard, &g);
        for v in 0..g.n() {
            let smaller = if g.n() == 1 {
                0
            } else {
                number(ForcingRule::Standard, &g.without_vertex(v).unwrap())
            };
            if classes[v] == VertexClass::Uncritical {
                assert_eq!(smaller, z, "uncritical {} of {:?}", v + 1, g.edges());
            }
            let closed = g.neighbors(v) | VertexSet::singleton(v);
            if g.is_clique(closed) {
                assert_ne!(
                    classes[v],
                    VertexClass::Neither,
                    "{} of {:?}",
                    v + 1,
                    g.edges()
                );
                assert!(smaller == z || smaller + 1 == z);
            }
        }
    }
}
