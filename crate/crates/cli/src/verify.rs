//! Runs every invariant of the pipeline over one or many point sets.

use escalier_core::monomial::{is_order_ideal, star_set_brute};
use escalier_core::oracle::{bm_escalier_oracle, cerlienco_mureddu};
use escalier_core::{FieldSpec, Point, Session};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::input::{render_point, PointSet};

pub const CHECKS: [&str; 11] = [
    "correspondence_matches_recursive_oracle",
    "escalier_matches_rank_oracle",
    "order_ideal",
    "barcode_admissible",
    "starset_matches_brute_force",
    "separators_kronecker",
    "inverse_identity",
    "eigen_identity",
    "commutation",
    "border_vanishes",
    "m_written_once",
];

#[derive(Serialize)]
pub struct Counterexample {
    pub instance: usize,
    pub field: String,
    pub points: Vec<Vec<String>>,
    pub detail: String,
}

#[derive(Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

#[derive(Serialize)]
pub struct Report {
    pub instances: usize,
    pub pass: bool,
    pub checks: Vec<CheckResult>,
}

/// Per-check verdicts for one point set; `Err` holds a description.
fn run_checks(set: &PointSet) -> Vec<Result<(), String>> {
    let session = match Session::run(set.n, set.field, &set.points, true) {
        Ok(s) => s,
        Err(e) => return vec![Err(format!("pipeline failed: {e}")); CHECKS.len()],
    };
    let g = session.game();
    let esc = g.table().escalier();
    let mut out = Vec::with_capacity(CHECKS.len());

    out.push(match cerlienco_mureddu(&set.points) {
        Ok(cm) if cm == g.table().terms() => Ok(()),
        Ok(cm) => Err(first_difference(&cm, g.table().terms())),
        Err(e) => Err(e.to_string()),
    });
    out.push(match bm_escalier_oracle(&set.points) {
        Ok(mut bm) => {
            bm.sort();
            if bm == esc {
                Ok(())
            } else {
                Err("escalier differs from the rank oracle".into())
            }
        }
        Err(e) => Err(e.to_string()),
    });
    out.push(verdict(is_order_ideal(&esc), "escalier is not closed under divisors"));
    out.push(verdict(g.barcode().is_admissible(), "bar code is not admissible"));
    let star = g.barcode().star_set();
    out.push(match (&star, star_set_brute(&esc, set.n)) {
        (Ok(a), Ok(b)) if *a == b => Ok(()),
        (Ok(_), Ok(_)) => Err("star set differs from enumeration".into()),
        (Err(e), _) => Err(e.to_string()),
        (_, Err(e)) => Err(e.to_string()),
    });
    out.push(match session.separators().check_kronecker(&set.points) {
        Ok(true) => Ok(()),
        Ok(false) => Err("some Q_i(P_j) differs from delta_ij".into()),
        Err(e) => Err(e.to_string()),
    });
    let m = session.matrices().expect("matrices enabled");
    match m.residuals() {
        Ok(r) => {
            out.push(verdict(r.inverse.is_zero(), "B*C differs from the identity"));
            out.push(verdict(
                r.eigen.iter().all(|x| x.is_zero()) && r.scaling.iter().all(|x| x.is_zero()),
                "A_h*B differs from D_h",
            ));
            out.push(verdict(r.commutators.iter().all(|x| x.is_zero()), "A matrices do not commute"));
        }
        Err(e) => out.extend((0..3).map(|_| Err(e.to_string()))),
    }
    out.push(match star.and_then(|s| m.groebner_border(&s)) {
        Ok(polys) => polys
            .iter()
            .find_map(|p| {
                set.points
                    .iter()
                    .position(|pt| !p.evaluate(pt).map(|v| v.is_zero()).unwrap_or(false))
                    .map(|j| format!("{p} does not vanish at point {}", j + 1))
            })
            .map_or(Ok(()), Err),
        Err(e) => Err(e.to_string()),
    });
    let writes = g.table().writes();
    let expected = (set.points.len() * set.n) as u64;
    out.push(verdict(writes == expected, &format!("{writes} writes to M, expected {expected}")));
    out
}

fn verdict(ok: bool, msg: &str) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

fn first_difference(a: &[escalier_core::Term], b: &[escalier_core::Term]) -> String {
    let i = a.iter().zip(b).position(|(x, y)| x != y).unwrap_or(a.len().min(b.len()));
    format!("point {} maps to {:?}, oracle gives {:?}", i + 1, b.get(i).map(|t| t.render()), a.get(i).map(|t| t.render()))
}

pub fn verify(sets: &[PointSet]) -> Report {
    let mut checks: Vec<CheckResult> = CHECKS
        .iter()
        .map(|&name| CheckResult {
            name,
            pass: true,
            failures: 0,
            counterexample: None,
        })
        .collect();
    for (k, set) in sets.iter().enumerate() {
        for (c, r) in checks.iter_mut().zip(run_checks(set)) {
            if let Err(detail) = r {
                c.pass = false;
                c.failures += 1;
                c.counterexample.get_or_insert_with(|| Counterexample {
                    instance: k + 1,
                    field: set.field.to_string(),
                    points: set.points.iter().map(render_point).collect(),
                    detail,
                });
            }
        }
    }
    Report {
        instances: sets.len(),
        pass: checks.iter().all(|c| c.pass),
        checks,
    }
}

/// Random instances with `n` in 1..=4, 1..=25 distinct points and
/// coordinates in -3..=3. Without a fixed field, halves alternate between
/// the rationals and GF(32003).
pub fn random_sets(count: usize, seed: u64, field: Option<FieldSpec>) -> Vec<PointSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let prime = FieldSpec::prime(32003).expect("32003 is prime");
    (0..count)
        .map(|k| {
            let field = field.unwrap_or(if k % 2 == 0 { FieldSpec::RATIONALS } else { prime });
            let n = rng.gen_range(1..=4);
            let len = rng.gen_range(1..=25);
            PointSet {
                field,
                n,
                points: distinct_points(&mut rng, n, len, -3, 3, field),
            }
        })
        .collect()
}

/// Up to `count` distinct points, fewer when the grid is smaller.
pub fn distinct_points<R: Rng>(rng: &mut R, n: usize, count: usize, lo: i64, hi: i64, field: FieldSpec) -> Vec<Point> {
    let capacity = ((hi - lo + 1) as u128).saturating_pow(n as u32);
    let target = (count as u128).min(capacity) as usize;
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::with_capacity(target);
    while out.len() < target {
        let row: Vec<i64> = (0..n).map(|_| rng.gen_range(lo..=hi)).collect();
        if seen.insert(row.clone()) {
            out.push(Point::from_i64(&row, field));
        }
    }
    out
}
