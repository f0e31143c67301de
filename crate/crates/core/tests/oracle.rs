mod common;

use common::arcs;
use injcol::oracle::{check, exists, search, search_embedding, SearchProblem};
use injcol::{named, Mapping, Mode, OrientedGraph, Tournament};
use proptest::prelude::*;

fn problem<'a>(g: &'a OrientedGraph, h: &'a OrientedGraph, mode: Mode) -> SearchProblem<'a> {
    SearchProblem::new(g, h, mode)
}

#[test]
fn check_examples() {
    let h3 = named::hat();
    let t2r = Tournament::T2r.graph();
    assert!(check(&problem(&h3, &t2r, Mode::Ios), &Mapping(vec![0, 1, 1])).unwrap());
    for t in Tournament::ALL {
        let h = t.graph();
        for mode in [Mode::Ios, Mode::Iot] {
            for a in 0..h.n() {
                for b in 0..h.n() {
                    let f = Mapping(vec![a, b, a]);
                    assert!(!check(&problem(&h3, &h, mode), &f).unwrap(), "{t} {a} {b}");
                }
            }
        }
    }
    let p3 = named::directed_path(3);
    assert!(!check(&problem(&p3, &t2r, Mode::Iot), &Mapping::constant(3, 0)).unwrap());
    assert!(check(&problem(&p3, &t2r, Mode::Ios), &Mapping::constant(3, 0)).unwrap());
    assert!(check(&problem(&p3, &t2r, Mode::Ios), &Mapping(vec![0])).is_err());
}

#[test]
fn search_examples() {
    let t3 = Tournament::T3.graph();
    assert_eq!(
        search(&problem(&named::directed_path(4), &t3, Mode::Ios)).unwrap(),
        None
    );
    let c3 = Tournament::C3.graph();
    let f = search(&problem(&named::directed_cycle(6), &c3, Mode::Ios))
        .unwrap()
        .unwrap();
    for v in 0..6 {
        assert_eq!(f.image((v + 1) % 6), (f.image(v) + 1) % 3);
    }
    let t2r = Tournament::T2r.graph();
    assert!(!exists(&problem(&named::x2(), &t2r, Mode::Ios)).unwrap());
}

#[test]
fn search_embedding_examples() {
    assert!(search_embedding(&named::hat(), &named::h4(), Mode::Ios)
        .unwrap()
        .is_some());
    let t2 = named::transitive_tournament(2);
    assert!(search_embedding(&t2, &OrientedGraph::empty(3), Mode::Ios)
        .unwrap()
        .is_none());
    // The glued path for T3, labelled a,b,c,b,a,b,c.
    let f = arcs(7, &[(0, 1), (0, 2), (3, 2), (4, 3), (4, 6), (5, 6)]);
    let t3 = named::transitive_tournament(3);
    assert!(search_embedding(&f, &t3, Mode::Ios).unwrap().is_some());
    let labels = Mapping(vec![0, 1, 2, 1, 0, 1, 2]);
    assert!(check(&problem(&f, &t3, Mode::Ios), &labels).unwrap());
}

#[test]
fn budget_exhaustion_is_reported() {
    let g = named::transitive_tournament(6);
    let t3 = Tournament::T3.graph();
    let p = problem(&g, &t3, Mode::Ios).with_budget(3);
    assert!(matches!(
        search(&p),
        Err(injcol::oracle::OracleError::Exhausted { budget: 3 })
    ));
}

fn targets() -> impl Strategy<Value = OrientedGraph> {
    prop::sample::select(Tournament::ALL.to_vec()).prop_map(|t| t.graph())
}

fn modes() -> impl Strategy<Value = Mode> {
    prop::sample::select(vec![Mode::Ios, Mode::Iot])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn search_result_passes_check(g in common::graph(7), h in targets(), mode in modes()) {
        let p = problem(&g, &h, mode);
        if let Some(f) = search(&p).unwrap() {
            prop_assert!(check(&p, &f).unwrap());
        }
    }

    #[test]
    fn search_finds_every_satisfiable_instance(g in common::graph(5), h in targets(), mode in modes()) {
        let p = problem(&g, &h, mode);
        let mut any = false;
        let total = h.n().pow(g.n() as u32);
        for code in 0..total {
            let mut c = code;
            let image: Vec<usize> = (0..g.n()).map(|_| { let a = c % h.n(); c /= h.n(); a }).collect();
            if check(&p, &Mapping(image)).unwrap() {
                any = true;
                break;
            }
        }
        prop_assert_eq!(exists(&p).unwrap(), any);
    }

    #[test]
    fn composition_is_closed(
        f_src in common::sparse_graph(6),
        g_mid in common::graph(5),
        h in targets(),
        mode in modes(),
    ) {
        let Some(f) = search_embedding(&f_src, &g_mid, mode).unwrap() else { return Ok(()) };
        let Some(g) = search(&problem(&g_mid, &h, mode)).unwrap() else { return Ok(()) };
        prop_assert!(check(&problem(&f_src, &h, mode), &f.compose(&g)).unwrap());
    }

    #[test]
    fn converse_symmetry_keeps_the_image_array(g in common::graph(7), h in targets(), mode in modes()) {
        let hc = h.converse();
        let hc = if h.is_reflexive() { hc.into_reflexive() } else { hc };
        let direct = search(&problem(&g, &h, mode)).unwrap();
        let gc = g.converse();
        let conv = search(&problem(&gc, &hc, mode)).unwrap();
        prop_assert_eq!(direct, conv);
    }

    #[test]
    fn iot_valid_implies_ios_valid(g in common::graph(6), h in targets()) {
        if let Some(f) = search(&problem(&g, &h, Mode::Iot)).unwrap() {
            prop_assert!(check(&problem(&g, &h, Mode::Ios), &f).unwrap());
        }
    }
}
