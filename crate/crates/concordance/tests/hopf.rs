//! F-tables of the Hopf link and the 2-component unlink.

use linkconc_concordance::{cube_search, Functions, f_window, split_obstruction, Variant, Verdict, Window, WindowOptions};
use linkconc_core::catalog;
use num_rational::Rational64;

fn expected_f(t1: i64, t2: i64) -> i64 {
    match ((t1 <= -1) as i64 + (t2 <= -1) as i64, (t1, t2)) {
        (2, _) => 2,
        (1, _) | (0, (0, 0) | (1, 0) | (0, 1)) => 1,
        _ => 0,
    }
}

fn expected_fbar(t1: i64, t2: i64) -> i64 {
    match ((t1 >= 1) as i64 + (t2 >= 1) as i64, (t1, t2)) {
        (0, _) => 0,
        (1, _) | (_, (1, 1)) => -1,
        _ => -2,
    }
}

fn exhaustive() -> WindowOptions {
    WindowOptions { prune: false, ..Default::default() }
}

#[test]
fn hopf_tables_match_the_figure() {
    let h = catalog::resolve("hopf").unwrap();
    let w = Window::cube(-2, 2, 2);
    let f = f_window(&h, Variant::FullPlus, &w, exhaustive()).unwrap();
    let fbar = f_window(&h, Variant::FullMinus, &w, exhaustive()).unwrap();
    for t in w.points() {
        assert_eq!(f.get(&t), Some(Rational64::from_integer(expected_f(t[0], t[1]))), "F at {t:?}");
        assert_eq!(fbar.get(&t), Some(Rational64::from_integer(expected_fbar(t[0], t[1]))), "F̄ at {t:?}");
    }
    for table in [&f, &fbar] {
        assert!(table.monotonicity_violations().is_empty());
        assert!(table.out_of_range().is_empty());
        assert!(table.is_symmetric());
    }
    // Wherever F reaches ℓ, F̄ is 0.
    for t in w.points() {
        if f.get(&t) == Some(Rational64::from_integer(2)) {
            assert_eq!(fbar.get(&t), Some(Rational64::from_integer(0)));
        }
    }

    let pruned = f_window(&h, Variant::FullPlus, &w, WindowOptions::default()).unwrap();
    assert_eq!(pruned.values.len(), 25);
    assert!(pruned.computed() < 25);
    assert!(pruned.values.iter().all(|(t, e)| f.get(t) == Some(e.value)));

    assert_eq!(cube_search(&f, 2).unwrap().verdict, Verdict::ObstructedInWindow);
}

#[test]
fn reduced_hopf() {
    let h = catalog::resolve("hopf").unwrap();
    let t = f_window(&h, Variant::ReducedPlus(0), &Window(vec![(-1, 2)]), WindowOptions::default()).unwrap();
    assert_eq!(t.nu0, Some(Rational64::from_integer(0)));
    let vals: Vec<i64> = (-1..=2).map(|x| t.get(&[x]).unwrap().to_integer()).collect();
    assert_eq!(vals, [1, 1, 0, 0]);
}

#[test]
fn unlink_is_additive_and_has_a_square() {
    let u = catalog::resolve("unknot").unwrap();
    let u2 = catalog::resolve("U2").unwrap();
    let w = Window::cube(-1, 1, 2);
    let one = f_window(&u, Variant::FullPlus, &Window(vec![(-1, 1)]), exhaustive()).unwrap();
    let two = f_window(&u2, Variant::FullPlus, &w, exhaustive()).unwrap();
    for t in w.points() {
        assert_eq!(two.get(&t).unwrap(), one.get(&t[..1]).unwrap() + one.get(&t[1..]).unwrap());
    }
    let sq = cube_search(&two, 2).unwrap();
    assert_eq!(sq.verdict, Verdict::CubeFound);
    assert_eq!(sq.cubes.len(), 1);
    assert_eq!(sq.cubes[0].base, vec![-1, -1]);
}

#[test]
fn split_verdicts() {
    let h = catalog::resolve("hopf").unwrap();
    let r = split_obstruction(&h, 2, &Window::cube(-2, 2, 2), Functions::Both, WindowOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::ObstructedInWindow);
    let u2 = catalog::resolve("U2").unwrap();
    let r = split_obstruction(&u2, 2, &Window::cube(-1, 0, 2), Functions::F, WindowOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::CubeFound);
    // F̄ of the unlink first drops at (1,1), outside this window.
    let r = split_obstruction(&u2, 2, &Window::cube(-1, 1, 2), Functions::Both, WindowOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::CubeFound);
    let k = catalog::resolve("trefoil+").unwrap();
    let r = split_obstruction(&k, 1, &Window(vec![(-1, 1)]), Functions::F, WindowOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Vacuous);
    assert!(split_obstruction(&k, 2, &Window(vec![(-1, 1)]), Functions::F, WindowOptions::default()).is_err());
}
