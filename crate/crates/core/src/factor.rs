//! Multivariate gcd, squarefree parts, polynomial square roots, and the two
//! irreducibility certificate shapes the verification layer needs: primitive
//! linear forms in a variable block, and monic quadratics with a non-square
//! discriminant.
//!
//! The gcd is the recursive content/primitive-part algorithm with a primitive
//! pseudo-remainder sequence in the main variable. Characteristic-p derivative
//! degeneracy (all partials zero) is handled by explicit p-th-root descent.

use crate::poly::{Monomial, MonomialOrder, Polynomial};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FactorError {
    #[error("zero input")]
    ZeroInput,
    #[error("expected total degree 1 in the block, found {0}")]
    BlockDegree(u32),
    #[error("expected degree 2 in the variable, found {0}")]
    NotQuadratic(u32),
}

/// Normalize a nonzero polynomial to leading coefficient 1 (canonical order).
fn normalize(f: &Polynomial) -> Polynomial {
    f.make_monic(&MonomialOrder::DegRevLex)
}

/// A greatest common divisor, normalized with leading coefficient 1.
pub fn gcd(f: &Polynomial, g: &Polynomial) -> Polynomial {
    if f.is_zero() {
        return if g.is_zero() { g.clone() } else { normalize(g) };
    }
    if g.is_zero() {
        return normalize(f);
    }
    normalize(&gcd_rec(f, g))
}

fn gcd_rec(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let ring = f.ring();
    if f.is_constant() || g.is_constant() {
        return ring.one();
    }
    // main variable: first one active in either argument
    let main = (0..ring.nvars())
        .find(|&v| f.degree_in(v) > 0 || g.degree_in(v) > 0)
        .expect("nonconstant input");
    let (df, dg) = (f.degree_in(main), g.degree_in(main));
    if df == 0 {
        return gcd_rec(f, &content(g, main));
    }
    if dg == 0 {
        return gcd_rec(&content(f, main), g);
    }
    let cont_f = content(f, main);
    let cont_g = content(g, main);
    let c = gcd_rec(&cont_f, &cont_g);
    let pp_f = f.div_exact(&cont_f).expect("content divides");
    let pp_g = g.div_exact(&cont_g).expect("content divides");
    // primitive pseudo-remainder sequence in the main variable
    let (mut r0, mut r1) = if df >= dg { (pp_f, pp_g) } else { (pp_g, pp_f) };
    loop {
        let r = pseudo_rem(&r0, &r1, main);
        if r.is_zero() {
            break;
        }
        let cont_r = content(&r, main);
        r0 = r1;
        r1 = r.div_exact(&cont_r).expect("content divides");
        if r1.degree_in(main) == 0 {
            return c;
        }
    }
    let pp_r1 = r1
        .div_exact(&content(&r1, main))
        .expect("content divides");
    c.mul(&pp_r1)
}

/// Content with respect to one variable: gcd of the coefficient polynomials.
fn content(f: &Polynomial, var: usize) -> Polynomial {
    let mut acc = f.ring().zero();
    for k in 0..=f.degree_in(var) {
        let c = f.coefficient_of(var, k);
        if c.is_zero() {
            continue;
        }
        acc = if acc.is_zero() { normalize(&c) } else { gcd(&acc, &c) };
        if acc.is_constant() {
            return f.ring().one();
        }
    }
    acc
}

/// Pseudo-remainder of `f` by `g` in `var` (leading coefficient of `g`
/// multiplied in at every step).
fn pseudo_rem(f: &Polynomial, g: &Polynomial, var: usize) -> Polynomial {
    let ring = f.ring();
    let dg = g.degree_in(var);
    let lc_g = g.coefficient_of(var, dg);
    let mut r = f.clone();
    while !r.is_zero() {
        let dr = r.degree_in(var);
        if dr < dg {
            break;
        }
        let lc_r = r.coefficient_of(var, dr);
        let mut shift_exps = vec![0u32; ring.nvars()];
        shift_exps[var] = dr - dg;
        let shift = ring.monomial_term(Monomial::new(shift_exps), ring.field().one());
        r = r.mul(&lc_g).sub(&g.mul(&lc_r).mul(&shift));
    }
    r
}

/// Product of the distinct irreducible factors of `f`, via
/// `f / gcd(f, partials)` with p-th-root descent when every partial vanishes.
pub fn squarefree_part(f: &Polynomial) -> Result<Polynomial, FactorError> {
    if f.is_zero() {
        return Err(FactorError::ZeroInput);
    }
    Ok(normalize(&squarefree_rec(f)))
}

fn squarefree_rec(f: &Polynomial) -> Polynomial {
    let ring = f.ring();
    if f.is_constant() {
        return ring.one();
    }
    let partials: Vec<Polynomial> = (0..ring.nvars()).map(|v| f.derivative(v)).collect();
    if partials.iter().all(|d| d.is_zero()) {
        return squarefree_rec(&pth_root(f));
    }
    let mut g = normalize(f);
    for d in partials.iter().filter(|d| !d.is_zero()) {
        g = gcd(&g, d);
        if g.is_constant() {
            return normalize(f);
        }
    }
    let h = f.div_exact(&g).expect("gcd divides");
    // strip every factor of h out of g; what survives carries only
    // multiplicities divisible by p and is handled recursively
    let mut w = g;
    loop {
        let d = gcd(&w, &h);
        if d.is_constant() {
            break;
        }
        w = w.div_exact(&d).expect("gcd divides");
    }
    if w.is_constant() {
        return h;
    }
    h.mul(&squarefree_rec(&w))
}

/// p-th root of a polynomial all of whose partials vanish: every exponent is
/// divisible by p, and coefficients in the prime field are their own roots.
fn pth_root(f: &Polynomial) -> Polynomial {
    let ring = f.ring();
    let p = ring.field().characteristic() as u32;
    assert!(p > 0, "p-th root only in positive characteristic");
    let mut acc = ring.zero();
    for (m, c) in f.terms() {
        let exps: Vec<u32> = m.exponents().iter().map(|&e| e / p).collect();
        debug_assert!(m.exponents().iter().all(|&e| e % p == 0));
        acc = acc.add(&ring.monomial_term(Monomial::new(exps), c.clone()));
    }
    acc
}

/// A square root `g` with `g*g == f`, if one exists in the polynomial ring.
pub fn poly_sqrt(f: &Polynomial) -> Option<Polynomial> {
    let ring = f.ring();
    if f.is_zero() {
        return Some(ring.zero());
    }
    let order = MonomialOrder::DegRevLex;
    let (fm, fc) = f.leading(&order)?;
    if fm.exponents().iter().any(|&e| e % 2 != 0) {
        return None;
    }
    let half = Monomial::new(fm.exponents().iter().map(|&e| e / 2).collect());
    let c = fc.sqrt()?;
    let mut g = ring.monomial_term(half.clone(), c.clone());
    let two_c = c.try_add(&c).expect("same field");
    loop {
        let r = f.sub(&g.mul(&g));
        if r.is_zero() {
            return Some(g);
        }
        let (rm, rc) = r.leading(&order).expect("nonzero");
        let qm = rm.try_div(&half)?;
        let qc = rc.try_div(&two_c).expect("2 is invertible");
        g = g.add(&ring.monomial_term(qm, qc));
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateMethod {
    PrimitiveLinearInBlock,
    MonicQuadraticDiscriminant,
    UnitElimination,
}

impl std::fmt::Display for CertificateMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CertificateMethod::PrimitiveLinearInBlock => "primitive-linear-in-block",
            CertificateMethod::MonicQuadraticDiscriminant => "monic-quadratic-discriminant",
            CertificateMethod::UnitElimination => "unit-elimination",
        };
        write!(f, "{s}")
    }
}

/// A re-checkable irreducibility certificate. `geometric` means the
/// certificate stays valid over every extension of the constant field.
#[derive(Debug, Clone)]
pub struct IrreducibilityCertificate {
    pub method: CertificateMethod,
    pub geometric: bool,
    pub witnesses: BTreeMap<String, String>,
}

#[derive(Debug, Clone)]
pub enum CertificateOutcome {
    Irreducible(IrreducibilityCertificate),
    Reducible { witness: String },
}

impl CertificateOutcome {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, CertificateOutcome::Irreducible(_))
    }

    pub fn certificate(&self) -> Option<&IrreducibilityCertificate> {
        match self {
            CertificateOutcome::Irreducible(c) => Some(c),
            CertificateOutcome::Reducible { .. } => None,
        }
    }
}

/// Irreducibility of a polynomial of total degree exactly 1 in the block
/// variables: granted iff the gcd of the block coefficients together with the
/// block-free part is a constant. Primitivity is absolute, so a granted
/// certificate is always geometric.
pub fn irreducible_linear_in_block(
    f: &Polynomial,
    block: &[usize],
) -> Result<CertificateOutcome, FactorError> {
    if f.is_zero() {
        return Err(FactorError::ZeroInput);
    }
    let block_degree = |m: &Monomial| -> u32 { block.iter().map(|&v| m.exponent(v)).sum() };
    let max_deg = f.terms().map(|(m, _)| block_degree(m)).max().unwrap_or(0);
    if max_deg != 1 {
        return Err(FactorError::BlockDegree(max_deg));
    }
    let ring = f.ring();
    let mut coeffs: Vec<(String, Polynomial)> = Vec::new();
    for &v in block {
        let c = f.coefficient_of(v, 1);
        // keep only the genuinely block-linear part attached to v
        let c: Polynomial = {
            let mut acc = ring.zero();
            for (m, a) in c.terms() {
                if block_degree(m) == 0 {
                    acc = acc.add(&ring.monomial_term(m.clone(), a.clone()));
                }
            }
            acc
        };
        if !c.is_zero() {
            coeffs.push((ring.var_name(v).to_string(), c));
        }
    }
    let mut free = ring.zero();
    for (m, a) in f.terms() {
        if block_degree(m) == 0 {
            free = free.add(&ring.monomial_term(m.clone(), a.clone()));
        }
    }
    if !free.is_zero() {
        coeffs.push(("1".to_string(), free));
    }
    let mut content = ring.zero();
    for (_, c) in &coeffs {
        content = if content.is_zero() {
            normalize(c)
        } else {
            gcd(&content, c)
        };
    }
    if content.is_constant() {
        let mut witnesses = BTreeMap::new();
        for (name, c) in &coeffs {
            witnesses.insert(format!("coefficient[{name}]"), c.to_string());
        }
        witnesses.insert("content".to_string(), content.to_string());
        Ok(CertificateOutcome::Irreducible(IrreducibilityCertificate {
            method: CertificateMethod::PrimitiveLinearInBlock,
            geometric: true,
            witnesses,
        }))
    } else {
        Ok(CertificateOutcome::Reducible {
            witness: format!("common factor {content}"),
        })
    }
}

/// Irreducibility of a quadratic `a*x^2 + b*x + c` in `var` whose leading
/// coefficient is a unit in the ring where the claim is read: after the unit
/// normalization `z = a*x` the discriminant is `b^2 - 4ac`, and by Gauss's
/// lemma the polynomial is irreducible iff that discriminant is not a square.
/// The geometric flag is set iff the squarefree part of the discriminant has
/// positive degree.
pub fn irreducible_monic_quadratic(
    f: &Polynomial,
    var: usize,
) -> Result<CertificateOutcome, FactorError> {
    if f.is_zero() {
        return Err(FactorError::ZeroInput);
    }
    let d = f.degree_in(var);
    if d != 2 {
        return Err(FactorError::NotQuadratic(d));
    }
    let ring = f.ring();
    let a = f.coefficient_of(var, 2);
    let b = f.coefficient_of(var, 1);
    let c = f.coefficient_of(var, 0);
    let cont = gcd(&a, &gcd(&b, &c));
    if !cont.is_constant() {
        return Ok(CertificateOutcome::Reducible {
            witness: format!("common factor {cont}"),
        });
    }
    let four = ring.integer(4);
    let disc = b.mul(&b).sub(&four.mul(&a).mul(&c));
    if disc.is_zero() {
        return Ok(CertificateOutcome::Reducible {
            witness: "zero discriminant (double root)".to_string(),
        });
    }
    if let Some(s) = poly_sqrt(&disc) {
        return Ok(CertificateOutcome::Reducible {
            witness: format!("discriminant is a square: ({s})^2"),
        });
    }
    let sqfree = squarefree_part(&disc).expect("nonzero discriminant");
    let geometric = sqfree.total_degree().unwrap_or(0) >= 1;
    let mut witnesses = BTreeMap::new();
    witnesses.insert("variable".to_string(), ring.var_name(var).to_string());
    witnesses.insert("leading_unit".to_string(), a.to_string());
    witnesses.insert("linear_coefficient".to_string(), b.to_string());
    witnesses.insert("constant_coefficient".to_string(), c.to_string());
    witnesses.insert("discriminant".to_string(), disc.to_string());
    witnesses.insert("discriminant_squarefree_part".to_string(), sqfree.to_string());
    witnesses.insert(
        "discriminant_order_at_origin".to_string(),
        disc.lowest_form()
            .total_degree()
            .map(|d| d.to_string())
            .unwrap_or_default(),
    );
    Ok(CertificateOutcome::Irreducible(IrreducibilityCertificate {
        method: CertificateMethod::MonicQuadraticDiscriminant,
        geometric,
        witnesses,
    }))
}
