mod common;

use common::arcs;
use injcol::oracle::{check, exists, search_embedding, SearchProblem};
use injcol::random::{propagation_graph, sample_rng};
use injcol::t2r::consistency::{bit, BOTH};
use injcol::t2r::*;
use injcol::{decide, named, verify, Mapping, Mode, OrientedGraph, Target, Tournament};

const IOS_T2R: Target = Target::new(Tournament::T2r, Mode::Ios);

fn t2r() -> OrientedGraph {
    Tournament::T2r.graph()
}

fn no_hom_to_t2r(f: &OrientedGraph) -> bool {
    !exists(&SearchProblem::new(f, &t2r(), Mode::Ios)).unwrap()
}

#[test]
fn preliminary_examples() {
    let h4 = preliminary_check(&named::h4()).unwrap();
    assert_eq!(
        (h4.family.as_str(), h4.embedding.as_slice()),
        ("H4", &[0, 1, 2, 3][..])
    );
    assert_eq!(preliminary_check(&named::x2()).unwrap().family, "X2");
    assert!(preliminary_check(&named::directed_path(5)).is_none());
    for name in ["H4", "H4c", "X2"] {
        assert!(no_hom_to_t2r(&named::named(name).unwrap()), "{name}");
    }
}

#[test]
fn consistency_on_t3() {
    let s = consistency_check(&named::transitive_tournament(3));
    // a = 0 and c = 2 are forced at initialization, b = 1 is not.
    let init: Vec<_> = s
        .log
        .iter()
        .filter(|r| r.rule == Rule::Init)
        .map(|r| (r.vertex, r.colour))
        .collect();
    assert_eq!(init, vec![(0, 1), (2, 0)]);
    assert_eq!(s.emptied, Some(1));
    assert_eq!(s.list(0), bit(0));
    assert_eq!(s.list(2), bit(1));
    assert_eq!(s.list(1), 0);
}

#[test]
fn consistency_leaves_free_paths_alone() {
    let s = consistency_check(&named::directed_path(5));
    assert!(s.succeeded());
    assert!(s.lists.iter().all(|&l| l == BOTH));
    assert!(s.log.is_empty());
    let s = consistency_check(&named::hat());
    assert!(s.succeeded());
    // The apex has in-degree two, so it starts at t1; the ends stay free.
    assert_eq!(s.lists, vec![BOTH, bit(1), BOTH]);
}

#[test]
fn log_causes_match_their_rules() {
    for i in 0..300 {
        let mut rng = sample_rng(11, i);
        let g = propagation_graph(&mut rng, 9);
        let s = consistency_check(&g);
        for (k, r) in s.log.iter().enumerate() {
            match r.rule {
                Rule::Init => {
                    let (d_in, d_out) = g.degrees(r.vertex);
                    assert!(if r.colour == 1 { d_out == 2 } else { d_in == 2 });
                }
                Rule::R1 => assert!(r.colour == 1 && g.has_arc(r.vertex, r.cause.unwrap())),
                Rule::R2 => assert!(r.colour == 0 && g.has_arc(r.cause.unwrap(), r.vertex)),
                Rule::R3 => {
                    let (y, via) = (r.cause.unwrap(), r.via.unwrap());
                    let shared_in = g.has_arc(via, y) && g.has_arc(via, r.vertex);
                    let shared_out = g.has_arc(y, via) && g.has_arc(r.vertex, via);
                    assert!(shared_in || shared_out);
                }
            }
            if let Some(y) = r.cause {
                let forced = match r.rule {
                    Rule::R1 => 0,
                    Rule::R2 => 1,
                    _ => r.colour,
                };
                let earlier = s.removal_index(y, 1 - forced).unwrap();
                assert!(earlier < k);
            }
        }
    }
}

#[test]
fn colouring_examples() {
    let p5 = named::directed_path(5);
    assert_eq!(
        extract_colouring(&p5, &consistency_check(&p5)).unwrap(),
        Mapping::constant(5, 1)
    );
    let h3 = named::hat();
    let f = extract_colouring(&h3, &consistency_check(&h3)).unwrap();
    assert_eq!(f.image(1), 1);
    assert_ne!(f.image(0), f.image(2));
    // Two internally disjoint directed paths from 0 (out-degree 2) to 5 (in-degree 2).
    let g = arcs(6, &[(0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5)]);
    let f = extract_colouring(&g, &consistency_check(&g)).unwrap();
    assert_ne!(f.image(1), f.image(3));
    assert!(check(&SearchProblem::new(&g, &t2r(), Mode::Ios), &f).unwrap());
    let failed = consistency_check(&named::transitive_tournament(3));
    assert!(extract_colouring(&named::transitive_tournament(3), &failed).is_err());
}

#[test]
fn walks_on_t3() {
    let g = named::transitive_tournament(3);
    let s = consistency_check(&g);
    let (w0, w1) = reconstruct_walks(&g, &s, 1).unwrap();
    assert_eq!((w1.vertices.as_slice(), w1.kind), (&[0, 2, 1][..], (0, 1)));
    assert_eq!((w0.vertices.as_slice(), w0.kind), (&[2, 0, 1][..], (1, 0)));
    assert_eq!(reconstruct_walks(&g, &s, 0), Err(WalkError::NotEmpty(0)));
}

#[test]
fn walks_on_the_glued_path_cover_it_minus_the_leaves() {
    let f = arcs(7, &[(0, 1), (0, 2), (3, 2), (4, 3), (4, 6), (5, 6)]);
    let s = consistency_check(&f);
    let y = s.emptied.unwrap();
    assert_eq!(y, 3);
    let (w0, w1) = reconstruct_walks(&f, &s, y).unwrap();
    let mut walked: Vec<(usize, usize)> = [&w0, &w1]
        .iter()
        .flat_map(|w| {
            w.vertices.windows(2).map(|p| {
                if f.has_arc(p[0], p[1]) {
                    (p[0], p[1])
                } else {
                    (p[1], p[0])
                }
            })
        })
        .collect();
    walked.sort_unstable();
    assert_eq!(walked, vec![(0, 2), (3, 2), (4, 3), (4, 6)]);
}

#[test]
fn hat_family_elements() {
    // x = 0 has out-degree 2; the (0,1)-walk is the hat 0→1←2.
    let g = arcs(4, &[(0, 1), (2, 1), (0, 3)]);
    let s = consistency_check(&g);
    let w = reconstruct_walk(&g, &s, 2, 0).unwrap();
    assert_eq!(
        (w.vertices.as_slice(), w.kind, w.hat_case),
        (&[0, 1, 2][..], (0, 1), true)
    );
    let e = build_family_element(&g, &w);
    assert_eq!(e.graph.n(), 4);
    assert_eq!(e.graph.out_degree(e.first_vertex), 2);
    assert_eq!(e.augment_arcs.len(), 1);
    assert!(named::hat().n() + 1 == e.graph.n());

    // x = 0 has in-degree 2; the (1,0)-walk is the converse hat 0←1→2.
    let g = arcs(4, &[(1, 0), (1, 2), (3, 0)]);
    let s = consistency_check(&g);
    let w = reconstruct_walk(&g, &s, 2, 1).unwrap();
    assert_eq!(
        (w.vertices.as_slice(), w.kind, w.hat_case),
        (&[0, 1, 2][..], (1, 0), true)
    );
    let e = build_family_element(&g, &w);
    assert_eq!(e.graph.in_degree(e.first_vertex), 2);
    assert_eq!(e.augment_arcs.len(), 1);
}

#[test]
fn t3_family_element_and_obstruction() {
    let g = named::transitive_tournament(3);
    let s = consistency_check(&g);
    let (w0, w1) = reconstruct_walks(&g, &s, 1).unwrap();
    let e = build_family_element(&g, &w1);
    assert_eq!(e.graph.arcs(), &[(0, 1), (0, 2), (3, 2)]);
    assert_eq!(e.family, (0, 1));
    let (f, emb) = build_obstruction(&g, &w0, &w1);
    assert_eq!(f.arcs(), &[(0, 1), (0, 2), (3, 2), (4, 3), (4, 6), (5, 6)]);
    assert_eq!(emb, Mapping(vec![0, 1, 2, 1, 0, 1, 2]));
    assert!(no_hom_to_t2r(&f));
}

#[test]
fn isolated_vertices_do_not_change_the_obstruction() {
    let t3 = named::transitive_tournament(3);
    let g = t3.disjoint_union(&OrientedGraph::empty(1));
    let a = decide(IOS_T2R, &t3).unwrap().obstruction.unwrap();
    let b = decide(IOS_T2R, &g).unwrap().obstruction.unwrap();
    assert_eq!(a.graph, b.graph);
    assert_eq!(a.embedding, b.embedding);
    assert!(!b.embedding.as_slice().contains(&3));
}

#[test]
fn decide_examples() {
    let t3 = named::transitive_tournament(3);
    let c = decide_ios_t2r(&t3).unwrap();
    let o = c.obstruction.as_ref().unwrap();
    assert_eq!((o.family.as_str(), o.walks.len()), ("F", 2));
    assert!(!o.log.is_empty());
    assert!(verify(&t3, IOS_T2R, &c).unwrap().passed());
    let c7 = named::directed_cycle(7);
    assert_eq!(
        decide_ios_t2r(&c7).unwrap().colouring.unwrap(),
        Mapping::constant(7, 1)
    );
    assert_eq!(decide_ios_t2r(&named::x2()).unwrap().family(), Some("X2"));
}

#[test]
fn obstruction_fed_back_is_rejected_again() {
    let t3 = named::transitive_tournament(3);
    let f = decide_ios_t2r(&t3).unwrap().obstruction.unwrap().graph;
    let again = decide_ios_t2r(&f).unwrap();
    let f2 = &again.obstruction.as_ref().unwrap().graph;
    assert!(no_hom_to_t2r(f2));
    assert!(verify(&f, IOS_T2R, &again).unwrap().passed());
}

/// Walks that follow the forcing pattern of kind (i, j): alternating
/// directed segments where every inner segment has length at least two, the
/// first segment is forward iff i = 1 and the last iff j = 1, plus the hat
/// H3 as a (0,1)-walk and H3^c as a (1,0)-walk. Immediate reversals along
/// the same arc are excluded. Calls `visit(i, j, last)` for each walk of at
/// most `max_len` arcs from `x`.
fn for_each_walk(
    g: &OrientedGraph,
    x: usize,
    i: usize,
    max_len: usize,
    visit: &mut dyn FnMut(usize, usize),
) {
    let mut segs: Vec<(bool, usize)> = Vec::new();
    extend(g, i, x, None, max_len, &mut segs, visit);
    // Hats in the other orientation.
    for &z in g.out_neighbours(x) {
        if i == 0 {
            for &y in g.in_neighbours(z) {
                if y != x {
                    visit(1, y);
                }
            }
        }
    }
    for &s in g.in_neighbours(x) {
        if i == 1 {
            for &y in g.out_neighbours(s) {
                if y != x {
                    visit(0, y);
                }
            }
        }
    }
}

fn extend(
    g: &OrientedGraph,
    i: usize,
    v: usize,
    prev: Option<usize>,
    budget: usize,
    segs: &mut Vec<(bool, usize)>,
    visit: &mut dyn FnMut(usize, usize),
) {
    if let Some(&(forward, _)) = segs.last() {
        visit(usize::from(forward), v);
    }
    if budget == 0 {
        return;
    }
    for forward in [true, false] {
        match segs.last() {
            None if forward != (i == 1) => continue,
            Some(&(f, len)) if f != forward && segs.len() > 1 && len < 2 => continue,
            _ => {}
        }
        let next = if forward {
            g.out_neighbours(v)
        } else {
            g.in_neighbours(v)
        };
        for &w in next {
            if Some(w) == prev {
                continue;
            }
            match segs.last_mut() {
                Some((f, len)) if *f == forward => *len += 1,
                _ => segs.push((forward, 1)),
            }
            extend(g, i, w, Some(v), budget - 1, segs, visit);
            match segs.last_mut() {
                Some((_, len)) if *len > 1 => *len -= 1,
                _ => {
                    segs.pop();
                }
            }
        }
    }
}

#[test]
fn walks_force_their_last_vertex() {
    let mut graphs = 0;
    let mut walks = 0u64;
    for index in 0..400 {
        let mut rng = sample_rng(5, index);
        let g = propagation_graph(&mut rng, 6 + (index as usize % 5));
        let s = consistency_check(&g);
        if !s.succeeded() {
            continue;
        }
        graphs += 1;
        for x in g.vertices() {
            let Some(i) = s.forced(x) else { continue };
            for_each_walk(&g, x, i, 7, &mut |j, y| {
                walks += 1;
                assert_eq!(
                    s.list(y) & bit(1 - j),
                    0,
                    "({i},{j})-walk from {x} to {y} in {:?}, lists {:?}",
                    g.arcs(),
                    s.lists
                );
            });
        }
    }
    assert!(graphs >= 100, "only {graphs} successful runs");
    assert!(walks >= 1000, "only {walks} walks");
}

#[test]
fn walk_family_elements_map_into_the_graph() {
    let mut elements = 0;
    for index in 0..600 {
        let mut rng = sample_rng(6, index);
        let g = propagation_graph(&mut rng, 6 + (index as usize % 5));
        let s = consistency_check(&g);
        let Some(y) = s.emptied else { continue };
        let (w0, w1) = reconstruct_walks(&g, &s, y).unwrap();
        for w in [&w0, &w1] {
            let e = build_family_element(&g, w);
            assert_eq!(e.family, w.kind);
            assert_eq!(e.embedding.image(e.first_vertex), w.first());
            assert_eq!(e.embedding.image(e.last_vertex), w.last());
            assert!(check(&SearchProblem::new(&e.graph, &g, Mode::Ios), &e.embedding).unwrap());
            assert!(search_embedding(&e.graph, &g, Mode::Ios).unwrap().is_some());
            elements += 1;
        }
        let (f, emb) = build_obstruction(&g, &w0, &w1);
        assert!(check(&SearchProblem::new(&f, &g, Mode::Ios), &emb).unwrap());
        assert!(no_hom_to_t2r(&f), "glued graph {:?} maps to T2^r", f.arcs());
    }
    assert!(elements >= 200, "only {elements} family elements");
}

#[test]
fn propagation_is_order_independent() {
    for index in 0..200 {
        let mut rng = sample_rng(9, index);
        let g = propagation_graph(&mut rng, 8);
        let fifo = consistency_check(&g);
        for k in 0..5 {
            let other = consistency_check_with(&g, &mut RandomOrder(sample_rng(10, index * 5 + k)));
            assert_eq!(other.succeeded(), fifo.succeeded());
            if fifo.succeeded() {
                assert_eq!(other.lists, fifo.lists);
            }
        }
    }
}
