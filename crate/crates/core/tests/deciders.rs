mod common;

use common::arcs;
use injcol::irreflexive::*;
use injcol::oracle::{check, exists, SearchProblem};
use injcol::{
    decide, named, verify, Certificate, Mapping, Mode, OrientedGraph, Target, Tournament, Verdict,
};
use proptest::prelude::*;

fn family(cert: &Certificate) -> &str {
    assert_eq!(cert.verdict, Verdict::No);
    cert.family().unwrap()
}

fn colouring(cert: &Certificate) -> &[usize] {
    assert_eq!(cert.verdict, Verdict::Yes);
    cert.colouring.as_ref().unwrap().as_slice()
}

fn sound(g: &OrientedGraph, cert: &Certificate) {
    let report = verify(g, cert.target, cert).unwrap();
    assert!(
        report.passed(),
        "{} on {:?}: {report:?}",
        cert.target,
        g.arcs()
    );
}

#[test]
fn ios_t1() {
    let c = decide_ios_t1(&OrientedGraph::empty(5));
    assert_eq!(colouring(&c), &[0; 5]);
    let arc = named::transitive_tournament(2);
    assert_eq!(family(&decide_ios_t1(&arc)), "T2");
    let c3 = named::directed_cycle(3);
    let c = decide_ios_t1(&c3);
    assert_eq!(family(&c), "T2");
    sound(&c3, &c);
}

#[test]
fn ios_t2() {
    let arcs3 = arcs(6, &[(0, 1), (3, 2), (4, 5)]);
    let c = decide_ios_t2(&arcs3);
    assert_eq!(colouring(&c), &[0, 1, 1, 0, 0, 1]);
    assert_eq!(family(&decide_ios_t2(&named::directed_path(3))), "P3");
    assert_eq!(family(&decide_ios_t2(&named::hat())), "H3");
    assert_eq!(family(&decide_ios_t2(&named::hat().converse())), "H3c");
}

#[test]
fn ios_c3() {
    let c6 = named::directed_cycle(6);
    let c = decide_ios_c3(&c6);
    let f = colouring(&c);
    for v in 0..6 {
        assert_eq!(f[(v + 1) % 6], (f[v] + 1) % 3);
    }
    let c = decide_ios_c3(&named::directed_cycle(4));
    assert_eq!(family(&c), "C4");
    assert_eq!(c.obstruction.unwrap().embedding, Mapping(vec![0, 1, 2, 3]));
    assert_eq!(family(&decide_ios_c3(&named::hat())), "H3");
    assert_eq!(family(&decide_ios_c3(&named::directed_cycle(5))), "C5");
    // Paths wind along the cycle.
    let p = named::directed_path(4);
    assert_eq!(colouring(&decide_ios_c3(&p)), &[0, 1, 2, 0]);
}

#[test]
fn ios_t3() {
    let c = decide_ios_t3(&named::directed_path(3)).unwrap();
    assert_eq!(colouring(&c), &[0, 1, 2]);
    assert_eq!(family(&decide_ios_t3(&named::b2()).unwrap()), "B2");
    let h3 = named::hat();
    let c = decide_ios_t3(&h3).unwrap();
    sound(&h3, &c);
    for (name, g) in named::t3_obstructions() {
        let c = decide_ios_t3(&g).unwrap();
        assert_eq!(family(&c), name);
        sound(&g, &c);
    }
}

#[test]
fn ios_t3_colouring_cases() {
    let cases = [
        // Alternating paths with hats and converse hats.
        arcs(5, &[(0, 1), (2, 1), (2, 3), (4, 3)]).converse(),
        arcs(4, &[(0, 1), (2, 1), (2, 3)]),
        arcs(6, &[(1, 0), (1, 2), (3, 2), (3, 4), (5, 4)]),
        // A directed 2-path with hats attached.
        arcs(5, &[(0, 1), (1, 2), (3, 2)]),
        arcs(5, &[(0, 1), (1, 2), (0, 3)]),
        arcs(6, &[(0, 1), (1, 2), (3, 4), (4, 2)]),
        // Isolated vertices and a mixture of components.
        arcs(7, &[(0, 1), (1, 2), (4, 5)]),
    ];
    for g in cases {
        let c = decide_ios_t3(&g).unwrap();
        let t3 = Tournament::T3.graph();
        let oracle = exists(&SearchProblem::new(&g, &t3, Mode::Ios)).unwrap();
        assert_eq!(c.is_yes(), oracle, "{:?}", g.arcs());
        sound(&g, &c);
    }
}

#[test]
fn ios_t1r() {
    assert_eq!(
        colouring(&decide_ios_t1r(&named::directed_cycle(5))),
        &[0; 5]
    );
    assert_eq!(family(&decide_ios_t1r(&named::hat())), "H3");
    assert_eq!(family(&decide_ios_t1r(&named::hat().converse())), "H3c");
}

#[test]
fn iot_t1r() {
    let arc = named::transitive_tournament(2);
    assert_eq!(colouring(&decide_iot_t1r(&arc)), &[0, 0]);
    assert_eq!(family(&decide_iot_t1r(&named::directed_path(3))), "P3");
    let h4 = named::h4();
    let c = decide_iot_t1r(&h4);
    assert_eq!(family(&c), "H3");
    sound(&h4, &c);
}

#[test]
fn unsupported_problems_are_errors() {
    for id in [
        Tournament::T1,
        Tournament::T2,
        Tournament::T3,
        Tournament::C3,
    ] {
        let t = Target::new(id, Mode::Iot);
        assert!(matches!(
            decide(t, &OrientedGraph::empty(2)),
            Err(injcol::DecideError::Unsupported(u)) if u == t
        ));
    }
}

fn converses_match(g: &OrientedGraph) -> Result<(), TestCaseError> {
    let gc = g.converse();
    for t in Target::SUPPORTED {
        let a = decide(t, g).unwrap();
        let b = decide(t, &gc).unwrap();
        prop_assert_eq!(a.verdict, b.verdict, "{} on {:?}", t, g.arcs());
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn verdicts_are_converse_invariant(g in common::sparse_graph(9)) {
        converses_match(&g)?;
    }

    #[test]
    fn ios_t2_coincides_with_iot_t1r(g in common::sparse_graph(9)) {
        prop_assert_eq!(decide_ios_t2(&g).verdict, decide_iot_t1r(&g).verdict);
    }

    #[test]
    fn certificates_are_sound(g in common::sparse_graph(9)) {
        for t in Target::SUPPORTED {
            let cert = decide(t, &g).unwrap();
            let h = t.graph();
            prop_assert_eq!(exists(&SearchProblem::new(&g, &h, t.mode)).unwrap(), cert.is_yes());
            if let Some(f) = &cert.colouring {
                prop_assert!(check(&SearchProblem::new(&g, &h, t.mode), f).unwrap());
            }
            let report = verify(&g, t, &cert).unwrap();
            prop_assert!(report.passed(), "{} on {:?}", t, g.arcs());
        }
    }
}
