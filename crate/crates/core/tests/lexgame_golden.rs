mod common;

use common::golden::*;
use escalier_core::oracle::{bm_escalier_oracle, cerlienco_mureddu};
use escalier_core::{FieldSpec, LexGame, Point, Term};

fn pts(rows: &[[i64; 4]]) -> Vec<Point> {
    rows.iter().map(|r| Point::from_i64(r, FieldSpec::RATIONALS)).collect()
}

/// `(s, l)` pairs with 1-based `l`.
fn pairs(g: &LexGame, i: usize) -> Vec<(usize, usize)> {
    g.trace()[i].pairs.iter().map(|&(s, l)| (s, l + 1)).collect()
}

#[test]
fn eight_point_steps() {
    let x = pts(&EIGHT);
    let mut g = LexGame::new(4, FieldSpec::RATIONALS);
    for (i, p) in x.iter().enumerate() {
        g.add_point(p.clone()).unwrap();
        assert_eq!(g.barcode().to_bracket_string(), EIGHT_CODES[i], "bar code after point {}", i + 1);
        assert_eq!(pairs(&g, i), EIGHT_PAIRS[i], "pairs at point {}", i + 1);
        assert_eq!(g.table().row(i), EIGHT_M[i]);
    }
    assert_eq!(g.trace()[6].sets, [vec![1, 4]]);
    let esc: Vec<String> = g.table().escalier().iter().map(Term::render).collect();
    assert_eq!(esc, EIGHT_ESCALIER);
}

#[test]
fn grs_steps() {
    let x = pts(&GRS);
    let mut g = LexGame::new(4, FieldSpec::RATIONALS);
    for (i, p) in x.iter().enumerate() {
        g.add_point(p.clone()).unwrap();
        assert_eq!(pairs(&g, i), GRS_PAIRS[i], "pairs at point {}", i + 1);
        assert_eq!(g.barcode().to_bracket_string(), GRS_CODES[i], "bar code after point {}", i + 1);
        assert_eq!(g.table().row(i), GRS_M[i]);
    }
    assert_eq!(g.trace()[12].sets, [vec![1, 4, 6, 9], vec![4]]);
    assert_eq!(g.table().term(12).render(), "x1*x2*x4");
    let cm = cerlienco_mureddu(&x).unwrap();
    assert_eq!(g.table().terms(), cm.as_slice());
    let mut bm = bm_escalier_oracle(&x).unwrap();
    bm.sort();
    assert_eq!(g.table().escalier(), bm);
}
