//! Brute-force oracles for the kernel property suites. These deliberately
//! avoid the engine's normal-form, basis and Hilbert-series code paths: the
//! membership oracle is dense linear algebra on a Macaulay matrix, the Hilbert
//! oracle enumerates monomials, and the dimension oracle searches variable
//! subsets exhaustively.

// shared by several test targets; not every target uses every oracle
#![allow(dead_code)]

use defring::coeff::FieldElement;
use defring::poly::{Monomial, Polynomial, Ring};
use rand::Rng;
use std::collections::BTreeMap;

/// All monomials of a ring with total degree at most `bound`.
pub fn monomials_up_to(ring: &Ring, bound: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d in 0..=bound {
        for p in defring::hilbert::monomials_of_degree(ring, d as u32) {
            let (m, _) = p.terms().next().expect("monomial term");
            out.push(m.clone());
        }
    }
    out
}

fn coefficient_row(
    f: &Polynomial,
    index: &BTreeMap<Monomial, usize>,
    width: usize,
) -> Option<Vec<FieldElement>> {
    let field = f.ring().field();
    let mut row = vec![field.zero(); width];
    for (m, c) in f.terms() {
        let &i = index.get(m)?;
        row[i] = c.clone();
    }
    Some(row)
}

/// Membership of `f` in the ideal generated by `gens`, decided by Gaussian
/// elimination on the matrix of all monomial multiples `mu * g` with
/// `deg(mu * g) <= bound`. Exact and complete for certificates of that degree.
pub fn macaulay_member(f: &Polynomial, gens: &[Polynomial], bound: u64) -> bool {
    if f.is_zero() {
        return true;
    }
    if f.total_degree().unwrap() > bound {
        return false;
    }
    let ring = f.ring();
    let monomials = monomials_up_to(ring, bound);
    let index: BTreeMap<Monomial, usize> = monomials
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let width = monomials.len();
    let mut rows: Vec<Vec<FieldElement>> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let dg = g.total_degree().unwrap();
        if dg > bound {
            continue;
        }
        for mu in monomials_up_to(ring, bound - dg) {
            let prod = g.mul_monomial(&mu);
            rows.push(coefficient_row(&prod, &index, width).expect("degree bounded"));
        }
    }
    let mut target = coefficient_row(f, &index, width).expect("degree bounded");
    // forward elimination with the target reduced alongside
    let mut pivot_rows: Vec<(usize, Vec<FieldElement>)> = Vec::new();
    for row in rows.into_iter() {
        let mut row = row;
        for (col, prow) in &pivot_rows {
            if !row[*col].is_zero() {
                let factor = row[*col].clone();
                for (entry, p) in row.iter_mut().zip(prow) {
                    let delta = p.try_mul(&factor).unwrap();
                    *entry = entry.try_sub(&delta).unwrap();
                }
            }
        }
        if let Some(col) = (0..width).find(|&k| !row[k].is_zero()) {
            let inv = row[col].inv().unwrap();
            for entry in row.iter_mut() {
                *entry = entry.try_mul(&inv).unwrap();
            }
            pivot_rows.push((col, row));
        }
    }
    for (col, prow) in &pivot_rows {
        if !target[*col].is_zero() {
            let factor = target[*col].clone();
            for (entry, p) in target.iter_mut().zip(prow) {
                let delta = p.try_mul(&factor).unwrap();
                *entry = entry.try_sub(&delta).unwrap();
            }
        }
    }
    target.iter().all(|c| c.is_zero())
}

/// Hilbert function of a monomial quotient by direct enumeration: for each
/// degree, the number of monomials not divisible by any generator.
pub fn hilbert_function_enumeration(ring: &Ring, gens: &[Monomial], up_to: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for d in 0..=up_to {
        let count = defring::hilbert::monomials_of_degree(ring, d as u32)
            .iter()
            .filter(|p| {
                let (m, _) = p.terms().next().unwrap();
                !gens.iter().any(|g| g.divides(m))
            })
            .count() as u64;
        out.push(count);
    }
    out
}

/// Expand `N(t)/(1-t)^n` to the requested degree.
pub fn hilbert_function_from_numerator(numerator: &[i64], nvars: usize, up_to: u64) -> Vec<u64> {
    // coefficients of 1/(1-t)^n are C(n-1+k, n-1)
    let mut out = Vec::new();
    for d in 0..=up_to {
        let mut acc: i64 = 0;
        for (k, &c) in numerator.iter().enumerate() {
            if (k as u64) > d {
                break;
            }
            acc += c * binomial(nvars as u64 - 1 + d - k as u64, nvars as u64 - 1) as i64;
        }
        assert!(acc >= 0, "Hilbert function values are nonnegative");
        out.push(acc as u64);
    }
    out
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Krull dimension of a monomial quotient by exhaustive subset search: the
/// maximal size of a variable subset touched by no generator.
pub fn dimension_by_subset_search(nvars: usize, gens: &[Monomial]) -> Option<usize> {
    if gens.iter().any(|m| m.is_one()) {
        return None;
    }
    let mut best = 0usize;
    for mask in 0u32..(1 << nvars) {
        let independent = gens.iter().all(|m| {
            // some variable of m must lie outside the subset
            m.exponents()
                .iter()
                .enumerate()
                .any(|(i, &e)| e > 0 && mask & (1 << i) == 0)
        });
        if independent {
            best = best.max(mask.count_ones() as usize);
        }
    }
    Some(best)
}

/// Number of monomials outside a zero-dimensional monomial ideal, by bounded
/// enumeration (each variable carries a pure-power generator).
pub fn colength_by_enumeration(nvars: usize, gens: &[Monomial]) -> Option<u64> {
    let mut bounds = vec![None; nvars];
    for m in gens {
        let support: Vec<usize> = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect();
        if support.len() == 1 {
            let i = support[0];
            let e = m.exponent(i);
            bounds[i] = Some(bounds[i].map_or(e, |b: u32| b.min(e)));
        }
    }
    let bounds: Option<Vec<u32>> = bounds.into_iter().collect();
    let bounds = bounds?;
    let mut count = 0u64;
    let mut stack = vec![(0usize, Monomial::one(nvars))];
    while let Some((var, m)) = stack.pop() {
        if var == nvars {
            if !gens.iter().any(|g| g.divides(&m)) {
                count += 1;
            }
            continue;
        }
        for e in 0..bounds[var] {
            let mut exps = m.exponents().to_vec();
            exps[var] = e;
            stack.push((var + 1, Monomial::new(exps)));
        }
    }
    Some(count)
}

/// A random monomial with per-variable exponents below `max_exp`.
pub fn random_monomial(rng: &mut impl Rng, nvars: usize, max_exp: u32) -> Monomial {
    Monomial::new((0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect())
}

/// A random polynomial with at most `terms` terms of total degree <= `max_deg`.
pub fn random_polynomial(
    rng: &mut impl Rng,
    ring: &Ring,
    terms: usize,
    max_deg: u32,
) -> Polynomial {
    let mut acc = ring.zero();
    for _ in 0..terms {
        let mut exps = vec![0u32; ring.nvars()];
        let mut budget = max_deg;
        for e in exps.iter_mut() {
            let step = rng.gen_range(0..=budget);
            *e = step;
            budget -= step;
        }
        let c = ring.field().from_integer(rng.gen_range(-6i64..=6));
        acc = acc.add(&ring.monomial_term(Monomial::new(exps), c));
    }
    acc
}
