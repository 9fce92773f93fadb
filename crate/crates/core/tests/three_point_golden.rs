mod common;

use common::golden::*;
use common::{matrix, solve};
use escalier_core::monomial::Term;
use escalier_core::separators::lagrange_factor;
use escalier_core::{FieldSpec, Point, Poly, Scalar, Session};

const Q: FieldSpec = FieldSpec::RATIONALS;

fn session() -> Session {
    let pts: Vec<Point> = THREE.iter().map(|r| Point::from_i64(r, Q)).collect();
    Session::run(2, Q, &pts, true).unwrap()
}

#[test]
fn separators_match() {
    let s = session();
    let expanded: Vec<String> = s
        .separators()
        .separators()
        .iter()
        .map(|q| q.expand(2, Q).to_string())
        .collect();
    assert_eq!(expanded, THREE_SEPARATORS);
    for (q, text) in s.separators().separators().iter().zip(THREE_SEPARATORS) {
        assert_eq!(q.expand(2, Q), Poly::parse(text, 2, Q).unwrap());
    }
    let f = lagrange_factor(1, 0, s.points()).unwrap();
    assert_eq!(f.to_poly(2).to_string(), "-x1 + 1");
}

#[test]
fn matrices_match() {
    let s = session();
    let m = s.matrices().unwrap();
    assert_eq!(m.b(), &matrix(&THREE_B, Q));
    assert_eq!(m.c(), &matrix(&THREE_C, Q));
    assert_eq!(m.d(1), &matrix(&THREE_D1, Q));
    assert_eq!(m.d(2), &matrix(&THREE_D2, Q));
    assert_eq!(m.a(1), &matrix(&THREE_AX, Q));

    let two: Vec<Point> = THREE[..2].iter().map(|r| Point::from_i64(r, Q)).collect();
    let s2 = Session::run(2, Q, &two, true).unwrap();
    let c2 = s2.matrices().unwrap().c().clone();
    assert_eq!(c2, matrix(&[[0, 1, 0], [1, -1, 0], [0, 0, 0]], Q).leading_minor(2));
}

/// The last row of `A_y` expresses `y^2` in the basis `1, x, y`.
#[test]
fn a_y_from_linear_solve() {
    let s = session();
    let m = s.matrices().unwrap();
    let basis = s.terms();
    let system: Vec<Vec<Scalar>> = s
        .points()
        .iter()
        .map(|p| basis.iter().map(|t| escalier_core::oracle::eval_term(t, p, Q)).collect())
        .collect();
    let y2 = Term::parse("x2^2", 2).unwrap();
    let rhs: Vec<Scalar> = s.points().iter().map(|p| escalier_core::oracle::eval_term(&y2, p, Q)).collect();
    let coeffs = solve(&system, &rhs).unwrap();
    let want: Vec<Scalar> = [-2, 2, 3].iter().map(|&v| Scalar::from_i64(v, Q)).collect();
    assert_eq!(coeffs, want);
    assert_eq!(m.a(2).row(2), want.as_slice());
    assert_eq!(m.a(2).row(0), [0, 0, 1].map(|v| Scalar::from_i64(v, Q)).as_slice());
    assert_eq!(m.a(2).row(1), [0, 0, 0].map(|v| Scalar::from_i64(v, Q)).as_slice());
    assert_eq!(m.normal_form(&Poly::term(y2, Q)).unwrap(), want);
}

#[test]
fn border_and_basis() {
    let s = session();
    let m = s.matrices().unwrap();
    let star = s.game().barcode().star_set().unwrap();
    let g: Vec<String> = m.groebner_border(&star).unwrap().iter().map(|p| p.to_string()).collect();
    assert!(g.contains(&"x1^2 - x1".to_string()), "{g:?}");
    for p in m.reduced_groebner_basis().unwrap() {
        for pt in s.points() {
            assert!(p.evaluate(pt).unwrap().is_zero());
        }
    }
}
