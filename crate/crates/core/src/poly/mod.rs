//! Sparse multivariate polynomials over an exact coefficient field.
//!
//! A [`Ring`] fixes the field and an ordered list of variable names. Terms are
//! stored in a canonical order-independent form (graded lexicographic on the
//! exponent vectors), so structural equality of polynomials is independent of
//! the monomial order an algorithm happens to use; order-sensitive views such
//! as [`Polynomial::leading`] take the [`MonomialOrder`] explicitly.

mod display;
mod order;
mod parse;

pub use order::MonomialOrder;
pub use parse::ParseError;

use crate::coeff::{FieldDescriptor, FieldElement};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),
    #[error("variable `{0}` has no counterpart in the target ring")]
    UnboundVariable(String),
    #[error("coefficient fields differ: {0} vs {1}")]
    FieldMismatch(FieldDescriptor, FieldDescriptor),
}

#[derive(Debug)]
struct RingInner {
    field: FieldDescriptor,
    vars: Vec<String>,
    index: BTreeMap<String, usize>,
}

/// A polynomial ring: coefficient field plus ordered variable names.
#[derive(Clone, Debug)]
pub struct Ring(Arc<RingInner>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field && self.0.vars == other.0.vars)
    }
}
impl Eq for Ring {}

impl Ring {
    pub fn new(field: FieldDescriptor, vars: &[&str]) -> Result<Ring, PolyError> {
        let mut index = BTreeMap::new();
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(PolyError::InvalidVariable(v.to_string()));
            }
            if index.insert(v.to_string(), i).is_some() {
                return Err(PolyError::DuplicateVariable(v.to_string()));
            }
        }
        Ok(Ring(Arc::new(RingInner {
            field,
            vars: vars.iter().map(|s| s.to_string()).collect(),
            index,
        })))
    }

    pub fn field(&self) -> FieldDescriptor {
        self.0.field
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.0.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.0.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.index.get(name).copied()
    }

    /// A new ring with one extra variable appended; the name is derived from
    /// `base` and made fresh.
    pub fn adjoin(&self, base: &str) -> (Ring, usize) {
        let mut name = base.to_string();
        let mut k = 0usize;
        while self.0.index.contains_key(&name) {
            k += 1;
            name = format!("{base}{k}");
        }
        let mut vars: Vec<&str> = self.0.vars.iter().map(|s| s.as_str()).collect();
        vars.push(&name);
        let ring = Ring::new(self.0.field, &vars).expect("fresh name");
        let idx = ring.nvars() - 1;
        (ring, idx)
    }

    /// A new ring with the variables listed in `front` moved to the front,
    /// preserving relative order of the rest.
    pub fn permute_front(&self, front: &[usize]) -> Ring {
        let mut names: Vec<&str> = front.iter().map(|&i| self.var_name(i)).collect();
        for i in 0..self.nvars() {
            if !front.contains(&i) {
                names.push(self.var_name(i));
            }
        }
        Ring::new(self.0.field, &names).expect("permutation keeps names unique")
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(self.field().one())
    }

    pub fn constant(&self, c: FieldElement) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(self.nvars()), c);
        }
        Polynomial {
            ring: self.clone(),
            terms,
        }
    }

    pub fn integer(&self, n: i64) -> Polynomial {
        self.constant(self.field().from_integer(n))
    }

    pub fn var(&self, i: usize) -> Polynomial {
        assert!(i < self.nvars(), "variable index out of range");
        let mut exps = vec![0u32; self.nvars()];
        exps[i] = 1;
        self.monomial_term(Monomial::new(exps), self.field().one())
    }

    pub fn var_by_name(&self, name: &str) -> Option<Polynomial> {
        self.var_index(name).map(|i| self.var(i))
    }

    pub fn monomial_term(&self, m: Monomial, c: FieldElement) -> Polynomial {
        assert_eq!(m.len(), self.nvars(), "monomial arity mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ring: self.clone(),
            terms,
        }
    }

    pub fn parse(&self, src: &str) -> Result<Polynomial, ParseError> {
        parse::parse_polynomial(self, src)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// An exponent vector, one entry per ring variable.
///
/// `Ord` is the ring-independent canonical order (total degree, then
/// lexicographic) used for term storage; algorithmic comparisons go through
/// [`MonomialOrder::compare`].
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Monomial {
    degree: u64,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Monomial {
        let degree = exps.iter().map(|&e| e as u64).sum();
        Monomial { degree, exps }
    }

    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            degree: 0,
            exps: vec![0; nvars],
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial::new(
                self.exps
                    .iter()
                    .zip(&other.exps)
                    .map(|(a, b)| a - b)
                    .collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// A sparse multivariate polynomial in canonical form: no zero coefficients,
/// terms keyed by monomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl Polynomial {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElement {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.ring.field().zero())
    }

    pub fn constant_term(&self) -> FieldElement {
        self.coefficient(&Monomial::one(self.ring.nvars()))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponent(var))
            .max()
            .unwrap_or(0)
    }

    pub fn support_vars(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for m in self.terms.keys() {
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    out.insert(i);
                }
            }
        }
        out
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(self.ring == other.ring, "polynomial ring mismatch");
    }

    fn from_map(ring: Ring, terms: BTreeMap<Monomial, FieldElement>) -> Polynomial {
        Polynomial { ring, terms }
    }

    fn add_term(acc: &mut BTreeMap<Monomial, FieldElement>, m: Monomial, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match acc.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().try_add(&c).expect("same field within a ring");
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::add_term(&mut terms, m.clone(), c.clone());
        }
        Polynomial::from_map(self.ring.clone(), terms)
    }

    pub fn neg(&self) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.neg()))
            .collect();
        Polynomial::from_map(self.ring.clone(), terms)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1.try_mul(c2).expect("same field within a ring");
                Self::add_term(&mut terms, m1.mul(m2), c);
            }
        }
        Polynomial::from_map(self.ring.clone(), terms)
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), a.try_mul(c).expect("same field")))
            .collect();
        Polynomial::from_map(self.ring.clone(), terms)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| (k.mul(m), c.clone()))
            .collect();
        Polynomial::from_map(self.ring.clone(), terms)
    }

    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> Polynomial {
        self.mul_monomial(m).scale(c)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Leading (monomial, coefficient) with respect to `order`.
    pub fn leading(&self, order: &MonomialOrder) -> Option<(&Monomial, &FieldElement)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.compare(a, b))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<Monomial> {
        self.leading(order).map(|(m, _)| m.clone())
    }

    pub fn make_monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Simultaneous substitution into a target ring. Variables without a
    /// binding must exist under the same name in the target ring.
    pub fn substitute(
        &self,
        target: &Ring,
        bindings: &BTreeMap<String, Polynomial>,
    ) -> Result<Polynomial, PolyError> {
        if self.ring.field() != target.field() {
            return Err(PolyError::FieldMismatch(self.ring.field(), target.field()));
        }
        let mut images: Vec<Option<Polynomial>> = Vec::with_capacity(self.ring.nvars());
        for name in self.ring.var_names() {
            if let Some(b) = bindings.get(name) {
                if b.ring() != target {
                    return Err(PolyError::UnboundVariable(name.clone()));
                }
                images.push(Some(b.clone()));
            } else if let Some(p) = target.var_by_name(name) {
                images.push(Some(p));
            } else {
                images.push(None);
            }
        }
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![target.one()]; self.ring.nvars()];
        let power = |images: &[Option<Polynomial>],
                         powers: &mut Vec<Vec<Polynomial>>,
                         var: usize,
                         e: u32|
         -> Result<Polynomial, PolyError> {
            let img = images[var]
                .as_ref()
                .ok_or_else(|| PolyError::UnboundVariable(self.ring.var_name(var).to_string()))?;
            while powers[var].len() <= e as usize {
                let next = powers[var].last().unwrap().mul(img);
                powers[var].push(next);
            }
            Ok(powers[var][e as usize].clone())
        };
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&power(&images, &mut powers, i, e)?);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Rename-free transport into a ring that contains (at least) every
    /// variable this polynomial actually uses.
    pub fn map_into(&self, target: &Ring) -> Result<Polynomial, PolyError> {
        if self.ring.field() != target.field() {
            return Err(PolyError::FieldMismatch(self.ring.field(), target.field()));
        }
        let mut mapping: Vec<Option<usize>> = Vec::with_capacity(self.ring.nvars());
        for name in self.ring.var_names() {
            mapping.push(target.var_index(name));
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.nvars()];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    match mapping[i] {
                        Some(j) => exps[j] = e,
                        None => {
                            return Err(PolyError::UnboundVariable(
                                self.ring.var_name(i).to_string(),
                            ))
                        }
                    }
                }
            }
            Self::add_term(&mut terms, Monomial::new(exps), c.clone());
        }
        Ok(Polynomial::from_map(target.clone(), terms))
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            let factor = self.ring.field().from_integer(e as i64);
            let c = c.try_mul(&factor).expect("same field");
            let mut exps = m.exponents().to_vec();
            exps[var] -= 1;
            Self::add_term(&mut terms, Monomial::new(exps), c);
        }
        Polynomial::from_map(self.ring.clone(), terms)
    }

    /// The coefficient of `var^k`, as a polynomial in the remaining variables
    /// (still an element of the same ring).
    pub fn coefficient_of(&self, var: usize, k: u32) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.exponent(var) == k {
                let mut exps = m.exponents().to_vec();
                exps[var] = 0;
                Self::add_term(&mut terms, Monomial::new(exps), c.clone());
            }
        }
        Polynomial::from_map(self.ring.clone(), terms)
    }

    pub fn homogeneous_component(&self, d: u64) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == d)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Polynomial::from_map(self.ring.clone(), terms)
    }

    /// Degree-1 homogeneous component.
    pub fn linear_part(&self) -> Polynomial {
        self.homogeneous_component(1)
    }

    /// Lowest-degree homogeneous component; 0 for the zero polynomial.
    pub fn lowest_form(&self) -> Polynomial {
        match self.terms.keys().map(|m| m.degree()).min() {
            None => self.ring.zero(),
            Some(d) => self.homogeneous_component(d),
        }
    }

    /// `Some(d)` if every term has total degree `d`; zero counts as
    /// homogeneous of any degree and reports `Some(0)`.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut it = self.terms.keys();
        let d = match it.next() {
            None => return Some(0),
            Some(m) => m.degree(),
        };
        if it.all(|m| m.degree() == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    /// `Some(d)` if every term has the same weighted degree under `weights`.
    pub fn weighted_homogeneous_degree(&self, weights: &[u32]) -> Option<u64> {
        let mut it = self.terms.keys();
        let d = match it.next() {
            None => return Some(0),
            Some(m) => m.weighted_degree(weights),
        };
        if it.all(|m| m.weighted_degree(weights) == d) {
            Some(d)
        } else {
            None
        }
    }

    /// Exact division: `Some(q)` with `q * g == self`, or `None`.
    pub fn div_exact(&self, g: &Polynomial) -> Option<Polynomial> {
        self.check_ring(g);
        if g.is_zero() {
            return None;
        }
        let order = MonomialOrder::DegRevLex;
        let (gm, gc) = g.leading(&order).expect("nonzero divisor");
        let (gm, gc) = (gm.clone(), gc.clone());
        let gc_inv = gc.inv().expect("field");
        let mut rem = self.clone();
        let mut quot = self.ring.zero();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading(&order).expect("nonzero");
            let qm = rm.try_div(&gm)?;
            let qc = rc.try_mul(&gc_inv).expect("same field");
            let t = self.ring.monomial_term(qm, qc);
            quot = quot.add(&t);
            rem = rem.sub(&t.mul(g));
        }
        Some(quot)
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                Polynomial::$method(self, rhs)
            }
        }
    };
}

poly_binop!(Add, add);
poly_binop!(Sub, sub);
poly_binop!(Mul, mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}
