//! Hilbert series of monomial quotients, Krull dimension, graded multiplicity
//! and colengths of zero-dimensional quotients.
//!
//! Everything routes through the numerator `N(t)` of the Hilbert series
//! `HS(k[x]/M) = N(t)/(1-t)^n` of a monomial ideal `M`, computed by the
//! standard pivot-variable recursion with memoization.

use crate::groebner::{buchberger, GroebnerBasis, GroebnerError, Ideal};
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HilbertError {
    #[error("non-monomial generator `{0}`")]
    NonMonomialGenerator(String),
    #[error("the ideal is the unit ideal; the quotient is the zero ring")]
    UnitIdeal,
    #[error("inhomogeneous input; use the local (tangent-cone) routines")]
    Inhomogeneous,
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// Krull dimension of a quotient ring, with the unit ideal (empty spectrum)
/// reported distinctly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    EmptySet,
    Dim(usize),
}

impl Dimension {
    pub fn as_usize(&self) -> Option<usize> {
        match self {
            Dimension::EmptySet => None,
            Dimension::Dim(d) => Some(*d),
        }
    }
}

impl std::fmt::Display for Dimension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Dimension::EmptySet => write!(f, "empty"),
            Dimension::Dim(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Colength {
    Finite(u64),
    Infinite,
}

impl std::fmt::Display for Colength {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Colength::Finite(n) => write!(f, "{n}"),
            Colength::Infinite => write!(f, "infinite"),
        }
    }
}

/// Hilbert series data of a monomial quotient `k[x_1..x_n]/M`.
///
/// `numerator` holds `N(t)` with `HS = N(t)/(1-t)^n`; `dimension` is the Krull
/// dimension and `degree` the multiplicity, i.e. `N(1)` after cancelling every
/// `(1-t)` factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    pub numerator: Vec<i64>,
    pub dimension: Dimension,
    pub degree: u64,
}

/// The ideal of leading monomials of a reduced basis.
pub fn leading_ideal(gb: &GroebnerBasis) -> Ideal {
    let ring = gb.ring();
    let gens = gb
        .leading_monomials()
        .into_iter()
        .map(|m| ring.monomial_term(m, ring.field().one()))
        .collect();
    Ideal::new(ring, gens).expect("monomial generators are valid")
}

fn monomial_generators(ideal: &Ideal) -> Result<Vec<Monomial>, HilbertError> {
    let mut out = Vec::new();
    for g in ideal.generators() {
        if g.num_terms() != 1 {
            return Err(HilbertError::NonMonomialGenerator(g.to_string()));
        }
        let (m, _) = g.terms().next().unwrap();
        out.push(m.clone());
    }
    Ok(minimalize(out))
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in gens {
        if !out.iter().any(|d| d.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

fn poly_shift(a: &[i64], d: usize) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + d];
    for (i, &c) in a.iter().enumerate() {
        out[i + d] = c;
    }
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn eval_at_one(a: &[i64]) -> i64 {
    a.iter().sum()
}

/// Divide by `(1-t)`; caller guarantees `N(1) == 0`.
fn divide_one_minus_t(a: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(a.len());
    let mut acc = 0i64;
    for &c in a {
        acc += c;
        out.push(acc);
    }
    debug_assert_eq!(out.last().copied().unwrap_or(0), 0);
    out.pop();
    trim(out)
}

/// Numerator `N(t)` of the Hilbert series of `k[x]/M` for a monomial ideal.
pub fn hilbert_numerator(ideal: &Ideal) -> Result<Vec<i64>, HilbertError> {
    let gens = monomial_generators(ideal)?;
    let mut memo = HashMap::new();
    Ok(numerator_rec(&gens, &mut memo))
}

fn numerator_rec(gens: &[Monomial], memo: &mut HashMap<Vec<Monomial>, Vec<i64>>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return Vec::new();
    }
    if gens.len() == 1 {
        let d = gens[0].degree() as usize;
        let mut n = vec![0i64; d + 1];
        n[0] = 1;
        n[d] = -1;
        return n;
    }
    // pairwise coprime: the numerator is the product of (1 - t^deg)
    if gens
        .iter()
        .enumerate()
        .all(|(i, m)| gens.iter().skip(i + 1).all(|m2| m.is_coprime(m2)))
    {
        let mut acc = vec![1i64];
        for m in gens {
            let d = m.degree() as usize;
            let mut f = vec![0i64; d + 1];
            f[0] = 1;
            f[d] = -1;
            acc = poly_mul(&acc, &f);
        }
        return acc;
    }
    let key: Vec<Monomial> = gens.to_vec();
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    // pivot on the most shared variable
    let nvars = gens[0].len();
    let mut counts = vec![0usize; nvars];
    for m in gens {
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let pivot = counts
        .iter()
        .enumerate()
        .max_by_key(|(i, &c)| (c, nvars - i))
        .map(|(i, _)| i)
        .unwrap();
    // I + (x): generators not involving x, plus x itself
    let mut sum_gens: Vec<Monomial> = gens
        .iter()
        .filter(|m| m.exponent(pivot) == 0)
        .cloned()
        .collect();
    let mut xexps = vec![0u32; nvars];
    xexps[pivot] = 1;
    sum_gens.push(Monomial::new(xexps));
    let sum_gens = minimalize(sum_gens);
    // I : x — divide the x-part down by one
    let colon_gens: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            let mut exps = m.exponents().to_vec();
            if exps[pivot] > 0 {
                exps[pivot] -= 1;
            }
            Monomial::new(exps)
        })
        .collect();
    let colon_gens = minimalize(colon_gens);
    let a = numerator_rec(&sum_gens, memo);
    let b = numerator_rec(&colon_gens, memo);
    let out = poly_add(&a, &poly_shift(&b, 1));
    memo.insert(key, out.clone());
    out
}

/// Full Hilbert data of a monomial quotient.
pub fn hilbert_data(ideal: &Ideal) -> Result<HilbertData, HilbertError> {
    let numerator = hilbert_numerator(ideal)?;
    if numerator.is_empty() {
        return Ok(HilbertData {
            numerator,
            dimension: Dimension::EmptySet,
            degree: 0,
        });
    }
    let n = ideal.ring().nvars();
    let mut reduced = numerator.clone();
    let mut cancelled = 0usize;
    while eval_at_one(&reduced) == 0 {
        reduced = divide_one_minus_t(&reduced);
        cancelled += 1;
    }
    let degree = eval_at_one(&reduced);
    debug_assert!(degree > 0, "multiplicity is positive");
    debug_assert!(cancelled <= n);
    Ok(HilbertData {
        numerator,
        dimension: Dimension::Dim(n - cancelled),
        degree: degree as u64,
    })
}

fn leading_data(ideal: &Ideal) -> Result<HilbertData, HilbertError> {
    let gb = buchberger(ideal, &MonomialOrder::DegRevLex)?;
    hilbert_data(&leading_ideal(&gb))
}

/// Krull dimension of `ring/I`.
pub fn krull_dim(ideal: &Ideal) -> Result<Dimension, HilbertError> {
    Ok(leading_data(ideal)?.dimension)
}

/// Graded (Hilbert-Samuel) multiplicity of a homogeneous proper ideal.
pub fn multiplicity_graded(ideal: &Ideal) -> Result<u64, HilbertError> {
    if !ideal.generators().iter().all(|g| g.is_homogeneous()) {
        return Err(HilbertError::Inhomogeneous);
    }
    let data = leading_data(ideal)?;
    match data.dimension {
        Dimension::EmptySet => Err(HilbertError::UnitIdeal),
        Dimension::Dim(_) => Ok(data.degree),
    }
}

/// Vector-space dimension of `ring/I`: the number of standard monomials, or
/// infinite when the dimension is positive.
pub fn colength(ideal: &Ideal) -> Result<Colength, HilbertError> {
    let data = leading_data(ideal)?;
    Ok(match data.dimension {
        Dimension::EmptySet => Colength::Finite(0),
        Dimension::Dim(0) => Colength::Finite(data.degree),
        Dimension::Dim(_) => Colength::Infinite,
    })
}

/// Render a numerator coefficient list as a readable polynomial in `t`.
pub fn numerator_string(numerator: &[i64]) -> String {
    if numerator.is_empty() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (d, &c) in numerator.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        let body = match d {
            0 => format!("{mag}"),
            1 if mag == 1 => "t".to_string(),
            1 => format!("{mag}*t"),
            _ if mag == 1 => format!("t^{d}"),
            _ => format!("{mag}*t^{d}"),
        };
        if parts.is_empty() {
            parts.push(if c < 0 { format!("-{body}") } else { body });
        } else {
            parts.push(format!("{} {}", if c < 0 { "-" } else { "+" }, body));
        }
    }
    parts.join(" ")
}

/// Monomials of total degree exactly `d` in a ring, as polynomials.
pub fn monomials_of_degree(ring: &crate::poly::Ring, d: u32) -> Vec<Polynomial> {
    let mut out = Vec::new();
    let nvars = ring.nvars();
    let mut exps = vec![0u32; nvars];
    fn rec(
        ring: &crate::poly::Ring,
        exps: &mut Vec<u32>,
        var: usize,
        remaining: u32,
        out: &mut Vec<Polynomial>,
    ) {
        if var + 1 == exps.len() {
            exps[var] = remaining;
            out.push(ring.monomial_term(Monomial::new(exps.clone()), ring.field().one()));
            exps[var] = 0;
            return;
        }
        for e in 0..=remaining {
            exps[var] = e;
            rec(ring, exps, var + 1, remaining - e, out);
        }
        exps[var] = 0;
    }
    if nvars == 0 {
        if d == 0 {
            out.push(ring.one());
        }
        return out;
    }
    rec(ring, &mut exps, 0, d, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::FieldDescriptor;
    use crate::poly::Ring;

    fn qring(vars: &[&str]) -> Ring {
        Ring::new(FieldDescriptor::rationals(), vars).unwrap()
    }

    #[test]
    fn principal_monomial_numerator() {
        let r = qring(&["x", "y"]);
        let ideal = Ideal::parse(&r, &["x*y"]).unwrap();
        assert_eq!(hilbert_numerator(&ideal).unwrap(), vec![1, 0, -1]);
    }

    #[test]
    fn square_of_maximal_ideal_numerator() {
        let r = qring(&["x", "y"]);
        let ideal = Ideal::parse(&r, &["x^2", "x*y", "y^2"]).unwrap();
        // Hilbert function 1, 2, 0, 0, ... so N = (1 + 2t)(1-t)^2 = 1 - 3t^2 + 2t^3
        assert_eq!(hilbert_numerator(&ideal).unwrap(), vec![1, 0, -3, 2]);
    }

    #[test]
    fn zero_ideal_numerator_is_one() {
        let r = qring(&["x", "y", "z"]);
        let ideal = Ideal::new(&r, vec![]).unwrap();
        assert_eq!(hilbert_numerator(&ideal).unwrap(), vec![1]);
    }

    #[test]
    fn non_monomial_generator_is_rejected() {
        let r = qring(&["x", "y"]);
        let ideal = Ideal::parse(&r, &["x + y"]).unwrap();
        assert!(matches!(
            hilbert_numerator(&ideal),
            Err(HilbertError::NonMonomialGenerator(_))
        ));
    }

    #[test]
    fn dimensions() {
        let r = qring(&["a", "b", "c", "d", "e", "f"]);
        let zero = Ideal::new(&r, vec![]).unwrap();
        assert_eq!(krull_dim(&zero).unwrap(), Dimension::Dim(6));
        let unit = Ideal::parse(&r, &["1"]).unwrap();
        assert_eq!(krull_dim(&unit).unwrap(), Dimension::EmptySet);
    }

    #[test]
    fn double_line_multiplicity() {
        let r = qring(&["x", "y"]);
        let ideal = Ideal::parse(&r, &["x^2"]).unwrap();
        assert_eq!(krull_dim(&ideal).unwrap(), Dimension::Dim(1));
        assert_eq!(multiplicity_graded(&ideal).unwrap(), 2);
    }

    #[test]
    fn quadric_hypersurface_multiplicity() {
        let r = qring(&["x", "y", "z"]);
        let ideal = Ideal::parse(&r, &["x^2 - y*z"]).unwrap();
        assert_eq!(multiplicity_graded(&ideal).unwrap(), 2);
    }

    #[test]
    fn inhomogeneous_is_routed_away() {
        let r = qring(&["x", "y"]);
        let ideal = Ideal::parse(&r, &["x^2 - y"]).unwrap();
        assert!(matches!(
            multiplicity_graded(&ideal),
            Err(HilbertError::Inhomogeneous)
        ));
    }

    #[test]
    fn colengths() {
        let r = qring(&["x11", "x12"]);
        let ideal = Ideal::parse(&r, &["x11^2", "x12^2"]).unwrap();
        assert_eq!(colength(&ideal).unwrap(), Colength::Finite(4));

        let r1 = qring(&["x11"]);
        let ideal = Ideal::parse(&r1, &["x11^2"]).unwrap();
        assert_eq!(colength(&ideal).unwrap(), Colength::Finite(2));

        let r2 = qring(&["x", "y"]);
        let ideal = Ideal::parse(&r2, &["x"]).unwrap();
        assert_eq!(colength(&ideal).unwrap(), Colength::Infinite);
    }

    #[test]
    fn numerator_rendering() {
        assert_eq!(numerator_string(&[1, 0, -3, 2]), "1 - 3*t^2 + 2*t^3");
        assert_eq!(numerator_string(&[]), "0");
        assert_eq!(numerator_string(&[1, -1]), "1 - t");
    }
}
