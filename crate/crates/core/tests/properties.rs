mod common;

use std::collections::BTreeSet;

use common::{any_field, f32003, point_rows, to_points};
use escalier_core::barcode::BarCode;
use escalier_core::monomial::{is_order_ideal, lex_cmp, project_high, star_set_brute};
use escalier_core::oracle::{bm_escalier_oracle, cerlienco_mureddu};
use escalier_core::scalar::parse_scalar;
use escalier_core::trie::witness_matrix;
use escalier_core::{FieldSpec, LexGame, Matrix, Point, PointTrie, Poly, Scalar, Session, Term};
use proptest::prelude::*;

fn scalar_strategy() -> impl Strategy<Value = (i64, i64)> {
    (-50i64..=50, 1i64..=20)
}

fn make(v: (i64, i64), field: FieldSpec) -> Option<Scalar> {
    parse_scalar(&format!("{}/{}", v.0, v.1), field).ok()
}

fn term_strategy(n: usize) -> impl Strategy<Value = Term> {
    prop::collection::vec(0u32..4, n).prop_map(Term::new)
}

/// Closure under divisors of a few random terms.
fn order_ideal_strategy() -> impl Strategy<Value = (usize, Vec<Term>)> {
    (1usize..=3).prop_flat_map(|n| {
        (Just(n), prop::collection::vec(term_strategy(n), 1..5)).prop_map(|(n, gens)| {
            let mut set = BTreeSet::new();
            for g in gens {
                let mut stack = vec![g];
                while let Some(t) = stack.pop() {
                    if set.insert(t.clone()) {
                        for v in 1..=n {
                            if let Some(d) = t.div_var(v) {
                                stack.push(d);
                            }
                        }
                    }
                }
            }
            (n, set.into_iter().collect())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar_strategy(), b in scalar_strategy(), c in scalar_strategy(), field in any_field()) {
        let (Some(a), Some(b), Some(c)) = (make(a, field), make(b, field), make(c, field)) else {
            return Ok(());
        };
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn render_parse_round_trip(a in scalar_strategy(), field in any_field()) {
        if let Some(a) = make(a, field) {
            prop_assert_eq!(parse_scalar(&a.render(), field).unwrap(), a);
        }
    }

    #[test]
    fn lex_is_a_semigroup_order(a in term_strategy(3), b in term_strategy(3), s in term_strategy(3)) {
        let ab = lex_cmp(&a, &b).unwrap();
        prop_assert_eq!(ab.reverse(), lex_cmp(&b, &a).unwrap());
        prop_assert_eq!(lex_cmp(&a.mul(&s), &b.mul(&s)).unwrap(), ab);
        prop_assert!(lex_cmp(&Term::one(3), &a).unwrap().is_le());
    }

    #[test]
    fn projections_compose(t in term_strategy(4), m in 1usize..=4) {
        let once = project_high(&t, m).unwrap();
        prop_assert_eq!(project_high(&once, 1).unwrap(), once.clone());
        prop_assert_eq!(once.exponents(), &t.exponents()[m - 1..]);
    }

    #[test]
    fn trie_prefix_sharing((n, rows) in point_rows(4, 14)) {
        let pts = to_points(&rows, FieldSpec::RATIONALS);
        let mut t = PointTrie::new(n);
        for p in &pts {
            t.extend(p.clone()).unwrap();
        }
        for i in 0..pts.len() {
            for j in 0..pts.len() {
                for h in 1..=n {
                    let shared = t.node_of(i, h) == t.node_of(j, h);
                    prop_assert_eq!(shared, rows[i][..h] == rows[j][..h]);
                }
            }
            prop_assert_eq!(t.label(t.node_of(i, n)), &[i]);
        }
        prop_assert_eq!(t.witness_matrix(), witness_matrix(&pts).unwrap());
    }

    #[test]
    fn trie_membership_ignores_order((n, rows) in point_rows(3, 10), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..rows.len()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let pts = to_points(&rows, FieldSpec::RATIONALS);
        let mut a = PointTrie::new(n);
        let mut b = PointTrie::new(n);
        for p in &pts {
            a.extend(p.clone()).unwrap();
        }
        for &k in &perm {
            b.extend(pts[k].clone()).unwrap();
        }
        for i in 0..pts.len() {
            for h in 1..=n {
                let la: BTreeSet<usize> = a.label(a.node_of(i, h)).iter().copied().collect();
                let lb: BTreeSet<usize> = b
                    .label(b.node_of(perm.iter().position(|&k| k == i).unwrap(), h))
                    .iter()
                    .map(|&k| perm[k])
                    .collect();
                prop_assert_eq!(la, lb);
            }
        }
    }

    #[test]
    fn bar_code_of_order_ideal_round_trips((n, ideal) in order_ideal_strategy()) {
        let elists: Vec<Vec<u32>> = ideal.iter().map(Term::to_elist).collect();
        let b = BarCode::from_elists(n, &elists).unwrap();
        b.validate().unwrap();
        prop_assert_eq!(b.reconstruct_terms(), ideal.clone());
        prop_assert!(b.is_admissible());
        prop_assert_eq!(b.star_set().unwrap(), star_set_brute(&ideal, n).unwrap());
    }

    #[test]
    fn game_matches_oracles((n, rows) in point_rows(4, 16), field in any_field()) {
        let pts = to_points(&rows, field);
        let mut g = LexGame::new(n, field);
        for p in &pts {
            g.add_point(p.clone()).unwrap();
            g.barcode().validate().unwrap();
        }
        let cm = cerlienco_mureddu(&pts).unwrap();
        prop_assert_eq!(g.table().terms(), cm.as_slice());
        let mut bm = bm_escalier_oracle(&pts).unwrap();
        bm.sort();
        prop_assert_eq!(g.table().escalier(), bm);
        prop_assert!(is_order_ideal(g.table().terms()));
        prop_assert!(g.barcode().is_admissible());
        prop_assert_eq!(g.barcode().reconstruct_terms(), g.table().escalier());
        prop_assert_eq!(g.table().writes(), (pts.len() * n) as u64);
    }

    #[test]
    fn escalier_ignores_point_order((n, rows) in point_rows(3, 12), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let pts = to_points(&rows, FieldSpec::RATIONALS);
        let mut shuffled = pts.clone();
        shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let a = LexGame::full_run(n, FieldSpec::RATIONALS, &pts).unwrap();
        let b = LexGame::full_run(n, FieldSpec::RATIONALS, &shuffled).unwrap();
        prop_assert_eq!(a.table().escalier(), b.table().escalier());
    }

    #[test]
    fn prefixes_are_stable((n, rows) in point_rows(4, 14)) {
        let pts = to_points(&rows, FieldSpec::RATIONALS);
        let full = LexGame::full_run(n, FieldSpec::RATIONALS, &pts).unwrap();
        for k in 1..=pts.len() {
            let part = LexGame::full_run(n, FieldSpec::RATIONALS, &pts[..k]).unwrap();
            prop_assert_eq!(part.table().rows(), &full.table().rows()[..k]);
        }
    }

    #[test]
    fn separators_are_kronecker_and_squarefree((n, rows) in point_rows(4, 12), field in any_field()) {
        let pts = to_points(&rows, field);
        let mut s = Session::new(n, field, false);
        let mut previous: Vec<escalier_core::Separator> = Vec::new();
        for p in &pts {
            s.add_point(p.clone()).unwrap();
            let fam = s.separators();
            prop_assert!(fam.check_kronecker(s.points()).unwrap());
            for (i, q) in fam.separators().iter().enumerate() {
                prop_assert!(q.is_squarefree());
                prop_assert!(q.degree() < s.points().len().max(1));
                if let Some(old) = previous.get(i) {
                    prop_assert_eq!(&q.factors[..old.factors.len()], &old.factors[..]);
                    prop_assert!(q.factors.len() <= old.factors.len() + 1);
                }
                let expanded = q.expand(n, field);
                for pt in s.points() {
                    prop_assert_eq!(expanded.evaluate(pt).unwrap(), q.evaluate(pt).unwrap());
                }
            }
            previous = fam.separators().to_vec();
        }
    }

    #[test]
    fn matrices_satisfy_identities((n, rows) in point_rows(3, 10), field in any_field()) {
        let pts = to_points(&rows, field);
        let mut s = Session::new(n, field, true);
        for p in &pts {
            s.add_point(p.clone()).unwrap();
            let m = s.matrices().unwrap();
            prop_assert!(m.residuals().unwrap().all_zero());
            prop_assert_eq!(m.c(), &m.b().inverse().unwrap());
        }
        let m = s.matrices().unwrap();
        let star = s.game().barcode().star_set().unwrap();
        for (t, g) in star.iter().zip(m.groebner_border(&star).unwrap()) {
            prop_assert_eq!(g.leading_term(), Some(t));
            for p in s.points() {
                prop_assert!(g.evaluate(p).unwrap().is_zero());
            }
        }
        for (i, t) in m.terms().iter().enumerate() {
            let nf = m.normal_form(&Poly::term(t.clone(), field)).unwrap();
            for (k, v) in nf.iter().enumerate() {
                prop_assert_eq!(v.is_one(), k == i);
                prop_assert_eq!(v.is_zero(), k != i);
            }
        }
    }
}

#[test]
fn duplicate_points_rejected_everywhere() {
    let p = Point::from_i64(&[1, 2], f32003());
    let pts = vec![p.clone(), p];
    assert!(LexGame::full_run(2, f32003(), &pts).is_err());
    assert!(cerlienco_mureddu(&pts).is_err());
    assert!(witness_matrix(&pts).is_err());
    let mut s = Session::new(2, f32003(), true);
    s.add_point(pts[0].clone()).unwrap();
    assert!(s.add_point(pts[1].clone()).is_err());
    assert_eq!(s.points().len(), 1);
    assert_eq!(s.matrices().unwrap().len(), 1);
    let _ = Matrix::identity(1, f32003());
}
