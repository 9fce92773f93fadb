#![allow(dead_code)]

pub mod golden;

use escalier_core::{FieldSpec, Point, Scalar};
use proptest::prelude::*;
use rand::Rng;

/// Drops repeated coordinate vectors, keeping first occurrences.
pub fn dedup(rows: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = Vec::new();
    for r in rows {
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

pub fn to_points(rows: &[Vec<i64>], field: FieldSpec) -> Vec<Point> {
    rows.iter().map(|r| Point::from_i64(r, field)).collect()
}

pub fn f32003() -> FieldSpec {
    FieldSpec::prime(32003).unwrap()
}

/// `(n, distinct points)` with coordinates in `-3..=3`.
pub fn point_rows(max_n: usize, max_points: usize) -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1..=max_n).prop_flat_map(move |n| {
        (
            Just(n),
            prop::collection::vec(prop::collection::vec(-3i64..=3, n), 1..=max_points).prop_map(dedup),
        )
    })
}

pub fn any_field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![Just(FieldSpec::RATIONALS), Just(f32003())]
}

/// Up to `count` distinct points of dimension `n` drawn uniformly from
/// `lo..=hi`, stopping early if the grid is exhausted.
pub fn random_rows<R: Rng>(rng: &mut R, n: usize, count: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let capacity = ((hi - lo + 1) as u128).saturating_pow(n as u32);
    let target = (count as u128).min(capacity) as usize;
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::with_capacity(target);
    while out.len() < target {
        let r: Vec<i64> = (0..n).map(|_| rng.gen_range(lo..=hi)).collect();
        if seen.insert(r.clone()) {
            out.push(r);
        }
    }
    out
}

/// Solves the square system `m * x = rhs` by elimination on copies.
pub fn solve(m: &[Vec<Scalar>], rhs: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| row.iter().cloned().chain([b.clone()]).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = a[col][col].inv().ok()?;
        for v in a[col].iter_mut().skip(col) {
            *v = &*v * &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (v, p) in a[r].iter_mut().zip(pivot_row).skip(col) {
                    *v = &*v - &(&f * &p);
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n].clone()).collect())
}

pub fn matrix(rows: &[[i64; 3]], field: FieldSpec) -> escalier_core::Matrix {
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    escalier_core::Matrix::from_i64(&refs, field)
}
