//! Acceptance suite. Prints one PASS/FAIL line per criterion and fails if any
//! criterion fails. Run with `-- --nocapture` to see the lines on success.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use linkconc_concordance::{
    cube_search, f_value, f_window, Variant, Verdict, Window, WindowOptions,
};
use linkconc_core::bounds::{
    combinatorial_lower_bound, negative_link_value, positive_link_value, spl_parity,
    splitting_lower_bound, strong_splitting_lower_bound,
};
use linkconc_core::braid::BraidWord;
use linkconc_core::catalog;
use linkconc_core::Diagram;
use linkconc_homology::jones::kauffman_jones;
use linkconc_homology::{
    khovanov_homology, lee_gr, lee_h_degrees, nu_s, s_invariant, BettiTable, Method,
};
use num_rational::Rational64;

type Outcome = Result<String, String>;

fn link(expr: &str) -> Diagram {
    catalog::resolve(expr).unwrap_or_else(|e| panic!("{expr}: {e}"))
}

fn kh(d: &Diagram) -> BettiTable {
    khovanov_homology(d, Method::default()).expect("scan never refuses")
}

fn q(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

fn check(ok: bool, failures: &mut Vec<String>, what: impl Into<String>) {
    if !ok {
        failures.push(what.into());
    }
}

fn verdict(failures: Vec<String>, summary: String) -> Outcome {
    if failures.is_empty() {
        Ok(summary)
    } else {
        Err(failures.join("; "))
    }
}

/// Reference Betti tables as (h, q, dim).
const TABLES: &[(&str, &[(i32, i32, usize)])] = &[
    (
        "W+(hopf,0,1)",
        &[
            (-6, -10, 1),
            (-5, -8, 1),
            (-5, -6, 1),
            (-4, -6, 1),
            (-4, -4, 1),
            (-3, -4, 2),
            (-3, -2, 1),
            (-2, -4, 2),
            (-2, -2, 1),
            (-2, 0, 2),
            (-1, 0, 3),
            (-1, 2, 1),
            (0, 0, 3),
            (0, 2, 3),
            (0, 4, 1),
            (1, 2, 2),
            (1, 4, 1),
            (1, 6, 1),
            (2, 4, 1),
            (2, 6, 2),
            (3, 6, 1),
            (3, 8, 1),
            (4, 10, 1),
        ],
    ),
    (
        "W+(hopf,1,1)",
        &[
            (-8, -14, 1),
            (-7, -12, 1),
            (-7, -10, 1),
            (-6, -10, 1),
            (-6, -8, 1),
            (-5, -8, 2),
            (-5, -6, 1),
            (-4, -8, 1),
            (-4, -6, 1),
            (-4, -4, 2),
            (-3, -6, 1),
            (-3, -4, 2),
            (-3, -2, 1),
            (-2, -6, 1),
            (-2, -4, 2),
            (-2, -2, 2),
            (-2, 0, 1),
            (-1, -2, 2),
            (-1, 0, 2),
            (-1, 2, 1),
            (0, -2, 1),
            (0, 0, 4),
            (0, 2, 2),
            (1, 0, 1),
            (1, 2, 2),
            (1, 4, 2),
            (2, 4, 1),
            (2, 6, 2),
            (3, 6, 1),
            (4, 10, 1),
        ],
    ),
    (
        "W+(hopf,0,2)",
        &[
            (-8, -14, 1),
            (-7, -12, 1),
            (-7, -10, 1),
            (-6, -10, 1),
            (-6, -8, 1),
            (-5, -8, 2),
            (-5, -6, 1),
            (-4, -8, 2),
            (-4, -6, 1),
            (-4, -4, 2),
            (-3, -4, 3),
            (-3, -2, 1),
            (-2, -4, 2),
            (-2, -2, 1),
            (-2, 0, 1),
            (-1, -2, 2),
            (-1, 0, 2),
            (-1, 2, 1),
            (0, -2, 1),
            (0, 0, 2),
            (0, 2, 3),
            (1, 2, 2),
            (2, 6, 2),
        ],
    ),
    (
        "W-(hopf,0,0)",
        &[
            (-6, -14, 1),
            (-5, -12, 1),
            (-5, -10, 1),
            (-4, -10, 1),
            (-4, -8, 1),
            (-3, -10, 1),
            (-3, -8, 2),
            (-3, -6, 1),
            (-2, -8, 1),
            (-2, -6, 2),
            (-2, -4, 2),
            (-1, -6, 1),
            (-1, -4, 2),
            (-1, -2, 1),
            (0, -4, 2),
            (0, -2, 3),
            (0, 0, 3),
            (1, -2, 1),
            (1, 0, 2),
            (2, 0, 1),
            (2, 2, 1),
            (3, 2, 1),
            (3, 4, 1),
            (4, 6, 1),
        ],
    ),
    (
        "W-(hopf,1,2)",
        &[
            (-12, -26, 1),
            (-11, -24, 1),
            (-11, -22, 1),
            (-10, -22, 1),
            (-10, -20, 1),
            (-9, -20, 2),
            (-9, -18, 1),
            (-8, -20, 1),
            (-8, -18, 1),
            (-8, -16, 2),
            (-7, -18, 1),
            (-7, -16, 2),
            (-7, -14, 1),
            (-6, -14, 2),
            (-6, -12, 1),
            (-5, -14, 3),
            (-5, -10, 1),
            (-4, -12, 1),
            (-4, -10, 3),
            (-3, -12, 1),
            (-3, -10, 2),
            (-3, -8, 1),
            (-2, -8, 2),
            (-2, -6, 2),
            (-1, -4, 1),
            (0, -6, 1),
            (0, -4, 2),
            (0, -2, 1),
        ],
    ),
    (
        "W'+(l8a9,1;0)",
        &[
            (-6, -10, 1),
            (-5, -6, 1),
            (-4, -6, 1),
            (-3, -4, 1),
            (-3, -2, 1),
            (-2, -4, 1),
            (-2, 0, 1),
            (-1, 0, 2),
            (0, 0, 2),
            (0, 2, 2),
            (0, 4, 1),
            (1, 2, 1),
            (2, 4, 1),
            (2, 6, 1),
            (3, 8, 1),
        ],
    ),
    (
        "W'+(hopf,1)",
        &[
            (-4, -8, 1),
            (-3, -4, 1),
            (-2, -4, 1),
            (-1, -2, 1),
            (-1, 0, 1),
            (0, -2, 1),
            (0, 0, 2),
            (0, 2, 2),
            (1, 2, 1),
            (2, 6, 1),
        ],
    ),
];

fn criterion_1() -> Outcome {
    let mut failures = Vec::new();
    let mut passed = Vec::new();
    for (expr, entries) in TABLES {
        let d = link(expr);
        let want = BettiTable::from_entries(entries.iter().map(|&(h, q, v)| ((h, q), v)));
        let start = Instant::now();
        let got = kh(&d);
        let took = start.elapsed();
        let budget = if d.crossing_count() <= 14 {
            Duration::from_secs(60)
        } else {
            Duration::from_secs(600)
        };
        if got != want {
            failures.push(format!(
                "{expr}: total {} (expected {}), {} bidegrees differ",
                got.total(),
                want.total(),
                got.0
                    .keys()
                    .chain(want.0.keys())
                    .collect::<BTreeSet<_>>()
                    .into_iter()
                    .filter(|&&(h, q)| got.get(h, q) != want.get(h, q))
                    .count()
            ));
        } else if took > budget {
            failures.push(format!("{expr}: {took:?} over budget"));
        } else {
            passed.push(format!(
                "{expr} ({} crossings, {took:.1?})",
                d.crossing_count()
            ));
        }
    }
    let summary = format!("{} tables exact: {}", passed.len(), passed.join(", "));
    if !failures.is_empty() {
        failures.push(summary.clone());
    }
    verdict(failures, summary)
}

fn gr_column(expr: &str) -> BTreeMap<i32, usize> {
    lee_gr(&link(expr), Method::default()).unwrap().column(0)
}

fn criterion_2() -> Outcome {
    let displays: &[(&str, &[(i32, usize)])] = &[
        ("W+(hopf,0,1)", &[(0, 2), (2, 2)]),
        ("W+(hopf,1,1)", &[(-2, 1), (0, 2), (2, 1)]),
        ("W+(hopf,0,2)", &[(-2, 1), (0, 2), (2, 1)]),
        ("W-(hopf,0,0)", &[(-2, 2), (0, 2)]),
        ("W-(hopf,1,2)", &[(-6, 1), (-4, 2), (-2, 1)]),
        ("W'+(l8a9,1;0)", &[(0, 2), (2, 2)]),
        ("W'+(hopf,1)", &[(-2, 1), (0, 2), (2, 1)]),
    ];
    let mut failures = Vec::new();
    for (expr, want) in displays {
        let want: BTreeMap<i32, usize> = want.iter().copied().collect();
        let got = gr_column(expr);
        check(
            got == want,
            &mut failures,
            format!("{expr}: Gr^0 = {got:?}, expected {want:?}"),
        );
    }
    verdict(failures, format!("{} displays match", displays.len()))
}

fn criterion_3() -> Outcome {
    let s_cases = [
        ("W+(hopf,0,1)", 1),
        ("W+(hopf,1,1)", -1),
        ("W+(hopf,0,2)", -1),
        ("W-(hopf,0,0)", -1),
        ("W-(hopf,1,2)", -5),
    ];
    let nu_cases = [("hopf+", 1), ("hopf-", 0), ("trefoil+", 1), ("T(3,4)", 3)];
    let mut failures = Vec::new();
    for (expr, want) in s_cases {
        let got = s_invariant(&link(expr), true, Method::default()).unwrap().s;
        check(
            got == want,
            &mut failures,
            format!("s({expr}) = {got}, expected {want}"),
        );
    }
    for (expr, want) in nu_cases {
        let got = nu_s(&link(expr), false, Method::default()).unwrap();
        check(
            got == q(want),
            &mut failures,
            format!("nu({expr}) = {got}, expected {want}"),
        );
    }
    verdict(failures, "5 s values and 4 nu values exact".into())
}

fn hopf_f(t: &[i64]) -> i64 {
    let low = t.iter().filter(|&&x| x <= -1).count();
    match low {
        2 => 2,
        1 => 1,
        _ if matches!(t, [0, 0] | [1, 0] | [0, 1]) => 1,
        _ => 0,
    }
}

fn hopf_fbar(t: &[i64]) -> i64 {
    let high = t.iter().filter(|&&x| x >= 1).count();
    match high {
        0 => 0,
        1 => -1,
        _ if t == [1, 1] => -1,
        _ => -2,
    }
}

fn criterion_4() -> Outcome {
    let hopf = link("hopf+");
    let window = Window::cube(-2, 2, 2);
    let mut failures = Vec::new();
    for (variant, expect) in [
        (Variant::FullPlus, hopf_f as fn(&[i64]) -> i64),
        (Variant::FullMinus, hopf_fbar),
    ] {
        let table = f_window(
            &hopf,
            variant,
            &window,
            WindowOptions {
                prune: false,
                ..Default::default()
            },
        )
        .unwrap();
        let wrong: Vec<_> = window
            .points()
            .filter(|t| table.get(t) != Some(q(expect(t))))
            .collect();
        check(
            wrong.is_empty(),
            &mut failures,
            format!("{variant}: wrong at {wrong:?}"),
        );
        check(
            table.monotonicity_violations().is_empty(),
            &mut failures,
            format!("{variant}: not monotone"),
        );
        check(
            table.is_symmetric(),
            &mut failures,
            format!("{variant}: not symmetric"),
        );
        check(
            table.out_of_range().is_empty(),
            &mut failures,
            format!("{variant}: out of range"),
        );
    }
    verdict(
        failures,
        "F and F-bar agree at all 25 points; monotone and symmetric".into(),
    )
}

fn criterion_5() -> Outcome {
    let l = f_value(
        &link("l8a9"),
        Variant::ReducedPlus(0),
        &[1],
        Method::default(),
    )
    .unwrap();
    let h = f_value(
        &link("hopf+"),
        Variant::ReducedPlus(0),
        &[1],
        Method::default(),
    )
    .unwrap();
    let mut failures = Vec::new();
    check(
        l.value == q(1),
        &mut failures,
        format!("F'(L8a9;A)(1) = {} (s = {}), expected 1", l.value, l.s),
    );
    check(
        h.value == q(0),
        &mut failures,
        format!("F'(H)(1) = {} (s = {}), expected 0", h.value, h.s),
    );
    check(
        l.value != h.value,
        &mut failures,
        "the two functions agree at 1",
    );
    verdict(failures, "F'(L8a9;A)(1) = 1 and F'(H)(1) = 0".into())
}

fn split(expr: &str) -> (Rational64, i64) {
    let d = link(expr);
    let nu = nu_s(&d, false, Method::default()).unwrap();
    let knots: Vec<Rational64> = (0..d.component_count())
        .map(|i| nu_s(&d.sublink(&[i]).unwrap(), false, Method::default()).unwrap())
        .collect();
    let lower = splitting_lower_bound(nu, &knots);
    (
        lower,
        strong_splitting_lower_bound(lower, spl_parity(&d.linking_matrix())),
    )
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let l3 = link("L3");
    let nu = nu_s(&l3, false, Method::default()).unwrap();
    check(nu == q(3), &mut failures, format!("nu(L3) = {nu}"));
    for i in 0..2 {
        let k = l3.sublink(&[i]).unwrap();
        check(
            kh(&k) == kh(&Diagram::unlink(1)),
            &mut failures,
            format!("L3 component {i} is not an unknot"),
        );
    }
    let (lower, strong) = split("L3");
    check(
        lower == q(3),
        &mut failures,
        format!("L3 splitting bound {lower}"),
    );
    check(
        strong == 4,
        &mut failures,
        format!("L3 strong splitting bound {strong}"),
    );
    let (lower, _) = split("T(2,2)");
    check(
        lower == q(1),
        &mut failures,
        format!("T(2,2) splitting bound {lower}"),
    );
    verdict(
        failures,
        "L3: bound 3, strong bound 4; T(2,2): bound 1".into(),
    )
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    for expr in ["trefoil+", "T(2,4)", "hopf+", "T(3,4)"] {
        let d = link(expr);
        let exact = positive_link_value(&d).unwrap().value;
        let bound = combinatorial_lower_bound(&d).value;
        let nu = nu_s(&d, false, Method::default()).unwrap();
        check(
            bound == exact && exact == nu,
            &mut failures,
            format!("{expr}: bound {bound}, formula {exact}, nu {nu}"),
        );
    }
    let mut compared = 0;
    for e in catalog::entries() {
        let d = e.build();
        // Links whose s needs the orientation hypothesis are skipped.
        if let Ok(nu) = nu_s(&d, false, Method::default()) {
            compared += 1;
            let bound = combinatorial_lower_bound(&d).value;
            check(
                bound <= nu,
                &mut failures,
                format!("{}: bound {bound} > nu {nu}", e.name),
            );
        }
    }
    for (expr, want) in [("trefoil-", -1), ("hopf-", 0)] {
        let d = link(expr);
        let v = negative_link_value(&d).unwrap().value;
        let nu = nu_s(&d, false, Method::default()).unwrap();
        check(
            v == q(want) && nu == v,
            &mut failures,
            format!("{expr}: formula {v}, nu {nu}"),
        );
    }
    verdict(
        failures,
        format!("positive and negative formulas exact; bound <= nu on {compared} catalog links"),
    )
}

fn criterion_8() -> Outcome {
    let mut failures = Vec::new();
    let (mut cube, mut jones, mut mirrors) = (0, 0, 0);
    for e in catalog::entries() {
        let d = e.build();
        let scanned = kh(&d);
        if d.crossing_count() <= 12 {
            cube += 1;
            let naive = khovanov_homology(&d, Method::naive()).unwrap();
            check(
                naive == scanned,
                &mut failures,
                format!("{}: cube and scan differ", e.name),
            );
        }
        if d.crossing_count() <= 20 {
            jones += 1;
            check(
                scanned.euler() == kauffman_jones(&d).unwrap(),
                &mut failures,
                format!(
                    "{}: Euler characteristic is not the Jones polynomial",
                    e.name
                ),
            );
        }
        if d.component_count() == 1 {
            mirrors += 1;
            check(
                kh(&d.mirror()) == scanned.dual(),
                &mut failures,
                format!("{}: mirror is not dual", e.name),
            );
        }
    }
    verdict(
        failures,
        format!(
            "cube = scan on {cube}, Euler = Jones on {jones}, mirror duality on {mirrors} knots"
        ),
    )
}

fn criterion_9() -> Outcome {
    let mut failures = Vec::new();
    let mut diagrams: Vec<(String, Diagram)> = catalog::entries()
        .iter()
        .map(|e| (e.name.to_string(), e.build()))
        .collect();
    for (expr, _) in TABLES {
        diagrams.push((expr.to_string(), link(expr)));
    }
    for (name, d) in &diagrams {
        let gr = lee_gr(d, Method::default()).unwrap();
        check(
            gr.total() == 1 << d.component_count(),
            &mut failures,
            format!("{name}: Lee total {}", gr.total()),
        );
        let mut want: BTreeMap<i32, usize> = BTreeMap::new();
        for h in lee_h_degrees(&d.linking_matrix()).values() {
            *want.entry(*h as i32).or_insert(0) += 1;
        }
        check(
            gr.by_degree() == want,
            &mut failures,
            format!("{name}: Lee degrees {:?}", gr.by_degree()),
        );
    }
    let twist_knots = [
        (-1, kh(&BraidWord::new(2, vec![1, 1, 1]).unwrap().closure())),
        (0, kh(&Diagram::unlink(1))),
        (1, kh(&link("figure8"))),
    ];
    let unknots = ["unknot", "unknot-kink", "unknot-negkink", "unknot-2kink"];
    for u in unknots {
        for (t, want) in &twist_knots {
            let w = link(&format!("W+({u},{t})"));
            check(
                &kh(&w) == want,
                &mut failures,
                format!("W+({u},{t}) is not the expected twist knot"),
            );
        }
    }
    verdict(
        failures,
        format!(
            "Lee structure on {} diagrams; framing on {} kinked unknots",
            diagrams.len(),
            unknots.len()
        ),
    )
}

fn criterion_10() -> Outcome {
    let window = Window::cube(-2, 2, 2);
    let search = |expr: &str| {
        let table = f_window(
            &link(expr),
            Variant::FullPlus,
            &window,
            WindowOptions::default(),
        )
        .unwrap();
        cube_search(&table, 2).unwrap()
    };
    let u2 = search("unlink2");
    let h = search("hopf+");
    let mut failures = Vec::new();
    check(
        u2.verdict == Verdict::CubeFound,
        &mut failures,
        "no square for the 2-component unlink",
    );
    check(
        h.cubes.is_empty(),
        &mut failures,
        format!("{} squares for the Hopf link", h.cubes.len()),
    );
    verdict(
        failures,
        format!("unlink: {} square(s); Hopf: none", u2.cubes.len()),
    )
}

#[test]
fn acceptance() {
    let criteria: [fn() -> Outcome; 10] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
    ];
    let mut failed = Vec::new();
    for (i, c) in criteria.iter().enumerate() {
        match c() {
            Ok(msg) => println!("criterion {}: PASS: {msg}", i + 1),
            Err(msg) => {
                println!("criterion {}: FAIL: {msg}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
