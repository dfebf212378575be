//! Buchberger's algorithm for global orders, normal forms, and the
//! ideal-theoretic toolbox built on them: membership, equality, elimination,
//! colon ideals, saturation and radical membership.
//!
//! Pair pruning follows Gebauer-Moller; the selection strategy is the normal
//! one (smallest lcm in the active order). Output bases are reduced, monic and
//! sorted, hence unique for a fixed input and order, so every downstream
//! report is reproducible bit for bit.

use crate::coeff::FieldElement;
use crate::poly::{Monomial, MonomialOrder, PolyError, Polynomial, Ring};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("generators live in different rings")]
    RingMismatch,
    #[error("a local order was supplied; use the standard-basis routines instead")]
    LocalOrder,
    #[error("colon or saturation by zero")]
    ZeroDivisor,
    #[error("generator does not parse: {0}")]
    Parse(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A finitely generated ideal. Zero generators are dropped and duplicates
/// pruned; input order is preserved otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Ideal, GroebnerError> {
        let mut gens: Vec<Polynomial> = Vec::new();
        for g in generators {
            if g.ring() != ring {
                return Err(GroebnerError::RingMismatch);
            }
            if g.is_zero() || gens.contains(&g) {
                continue;
            }
            gens.push(g);
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: gens,
        })
    }

    pub fn parse(ring: &Ring, texts: &[&str]) -> Result<Ideal, GroebnerError> {
        let gens = texts
            .iter()
            .map(|t| ring.parse(t))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| GroebnerError::Parse(e.to_string()))?;
        Ideal::new(ring, gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// The ideal with extra generators appended.
    pub fn join(&self, extra: &[Polynomial]) -> Result<Ideal, GroebnerError> {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Transport every generator into `target` by variable name.
    pub fn map_into(&self, target: &Ring) -> Result<Ideal, GroebnerError> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.map_into(target))
            .collect::<Result<Vec<_>, _>>()?;
        Ideal::new(target, gens)
    }
}

/// A reduced Groebner basis: monic, no leading monomial divides another, no
/// tail term divisible by any leading monomial; sorted by leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|g| g.leading_monomial(&self.order).expect("basis elements are nonzero"))
            .collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        reduce_full(f, &self.basis, &self.order)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant() && !self.basis[0].is_zero()
    }
}

/// Multivariate division remainder of `f` by `reducers` under a global order.
/// No remainder term is divisible by any reducer leading monomial, and
/// `f - result` lies in the ideal generated by the reducers.
pub fn normal_form(
    f: &Polynomial,
    reducers: &[Polynomial],
    order: &MonomialOrder,
) -> Result<Polynomial, GroebnerError> {
    if !order.is_global() {
        return Err(GroebnerError::LocalOrder);
    }
    Ok(reduce_full(f, reducers, order))
}

fn reduce_full(f: &Polynomial, reducers: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let ring = f.ring().clone();
    let leads: Vec<(Monomial, FieldElement)> = reducers
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let (m, c) = g.leading(order).expect("nonzero reducer");
            (m.clone(), c.clone())
        })
        .collect();
    let gens: Vec<&Polynomial> = reducers.iter().filter(|g| !g.is_zero()).collect();

    let mut rem = ring.zero();
    let mut work = f.clone();
    'outer: while !work.is_zero() {
        let (wm, wc) = {
            let (m, c) = work.leading(order).expect("nonzero");
            (m.clone(), c.clone())
        };
        for (i, (gm, gc)) in leads.iter().enumerate() {
            if gm.divides(&wm) {
                let qm = wm.try_div(gm).expect("divides");
                let qc = wc.try_div(gc).expect("nonzero leading coefficient");
                work = work.sub(&gens[i].mul_term(&qm, &qc));
                continue 'outer;
            }
        }
        // leading term is irreducible; move it to the remainder
        let t = ring.monomial_term(wm.clone(), wc);
        rem = rem.add(&t);
        work = work.sub(&t);
    }
    rem
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (fm, fc) = f.leading(order).expect("nonzero");
    let (gm, gc) = g.leading(order).expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(
        &l.try_div(fm).unwrap(),
        &fc.inv().expect("nonzero leading coefficient"),
    );
    let b = g.mul_term(
        &l.try_div(gm).unwrap(),
        &gc.inv().expect("nonzero leading coefficient"),
    );
    a.sub(&b)
}

/// Gebauer-Moller pair bookkeeping.
struct PairSet {
    pairs: Vec<(usize, usize, Monomial)>,
}

impl PairSet {
    fn new() -> Self {
        PairSet { pairs: Vec::new() }
    }

    fn update(&mut self, basis: &[Polynomial], lms: &[Monomial], new_idx: usize) {
        let t = new_idx;
        let lm_t = &lms[t];
        // candidate pairs (i, t)
        let mut cand: Vec<(usize, Monomial)> = (0..t)
            .filter(|&i| !basis[i].is_zero())
            .map(|i| (i, lms[i].lcm(lm_t)))
            .collect();
        // M criterion: drop (i,t) when some (j,t) has a strictly smaller lcm
        // dividing it
        let mut keep = vec![true; cand.len()];
        for a in 0..cand.len() {
            for b in 0..cand.len() {
                if a == b || !keep[a] {
                    continue;
                }
                if cand[b].1.divides(&cand[a].1) && cand[b].1 != cand[a].1 {
                    keep[a] = false;
                }
            }
        }
        // F criterion: among equal lcms keep a single representative
        let mut selected: Vec<(usize, Monomial)> = Vec::new();
        for (a, (i, l)) in cand.drain(..).enumerate() {
            if !keep[a] {
                continue;
            }
            if selected.iter().any(|(_, l2)| *l2 == l) {
                continue;
            }
            selected.push((i, l));
        }
        // B criterion: discard coprime leading monomials
        selected.retain(|(i, _)| !lms[*i].is_coprime(lm_t));
        // chain criterion on the old pairs
        self.pairs.retain(|(i, j, l)| {
            !(lm_t.divides(l) && lms[*i].lcm(lm_t) != *l && lms[*j].lcm(lm_t) != *l)
        });
        for (i, l) in selected {
            self.pairs.push((i, t, l));
        }
    }

    fn pop_min(&mut self, order: &MonomialOrder) -> Option<(usize, usize)> {
        if self.pairs.is_empty() {
            return None;
        }
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (bi, bj, bl) = &self.pairs[best];
            let (ki, kj, kl) = &self.pairs[k];
            let cmp = order
                .compare(kl, bl)
                .then_with(|| (ki, kj).cmp(&(bi, bj)));
            if cmp == std::cmp::Ordering::Less {
                best = k;
            }
        }
        let (i, j, _) = self.pairs.swap_remove(best);
        Some((i, j))
    }
}

/// Buchberger's algorithm. Deterministic for a fixed input and order.
pub fn buchberger(ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis, GroebnerError> {
    if !order.is_global() {
        return Err(GroebnerError::LocalOrder);
    }
    let ring = ideal.ring().clone();
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let mut pairs = PairSet::new();
    for g in ideal.generators() {
        let g = g.make_monic(order);
        let lm = g.leading_monomial(order).expect("nonzero generator");
        basis.push(g);
        lms.push(lm);
        pairs.update(&basis, &lms, basis.len() - 1);
    }
    while let Some((i, j)) = pairs.pop_min(order) {
        let s = s_polynomial(&basis[i], &basis[j], order);
        let h = reduce_full(&s, &basis, order);
        if h.is_zero() {
            continue;
        }
        let h = h.make_monic(order);
        let lm = h.leading_monomial(order).expect("nonzero");
        basis.push(h);
        lms.push(lm);
        pairs.update(&basis, &lms, basis.len() - 1);
    }
    let basis = interreduce(basis, order);
    Ok(GroebnerBasis {
        ring,
        order: order.clone(),
        basis,
    })
}

/// Minimalize and tail-reduce a basis into the unique reduced form.
fn interreduce(mut basis: Vec<Polynomial>, order: &MonomialOrder) -> Vec<Polynomial> {
    // minimalize: drop elements whose leading monomial is divisible by
    // another's
    let lms: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial(order).unwrap())
        .collect();
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i == j || !keep[i] {
                continue;
            }
            if keep[j] && lms[j].divides(&lms[i]) && (lms[j] != lms[i] || j < i) {
                keep[i] = false;
            }
        }
    }
    basis = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();
    // tail-reduce against the others until stable
    loop {
        let mut changed = false;
        for i in 0..basis.len() {
            let others: Vec<Polynomial> = basis
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let reduced = reduce_full(&basis[i], &others, order).make_monic(order);
            if reduced != basis[i] {
                basis[i] = reduced;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    basis.retain(|g| !g.is_zero());
    basis.sort_by(|a, b| {
        order.compare(
            &a.leading_monomial(order).unwrap(),
            &b.leading_monomial(order).unwrap(),
        )
    });
    basis
}

/// Post-hoc Buchberger certificate: every S-polynomial of basis pairs reduces
/// to zero. Independent of how the basis was constructed.
pub fn spair_certificate(gb: &GroebnerBasis) -> bool {
    let basis = gb.basis();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j], &gb.order);
            if !reduce_full(&s, basis, &gb.order).is_zero() {
                return false;
            }
        }
    }
    true
}

pub fn ideal_member(f: &Polynomial, ideal: &Ideal) -> Result<bool, GroebnerError> {
    let gb = buchberger(ideal, &MonomialOrder::DegRevLex)?;
    Ok(gb.contains(f))
}

/// Equality via uniqueness of the reduced basis.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool, GroebnerError> {
    if a.ring() != b.ring() {
        return Err(GroebnerError::RingMismatch);
    }
    let ga = buchberger(a, &MonomialOrder::DegRevLex)?;
    let gb = buchberger(b, &MonomialOrder::DegRevLex)?;
    Ok(ga.basis() == gb.basis())
}

/// Generators of `I` intersected with the subring omitting `block`, via a
/// block elimination order on a ring with the block variables moved first.
pub fn eliminate(ideal: &Ideal, block: &[usize]) -> Result<Ideal, GroebnerError> {
    let ring = ideal.ring();
    if block.is_empty() {
        return Ok(ideal.clone());
    }
    let permuted = ring.permute_front(block);
    let moved = ideal.map_into(&permuted)?;
    let order = MonomialOrder::elimination_block(block.len());
    let gb = buchberger(&moved, &order)?;
    let mut kept = Vec::new();
    for g in gb.basis() {
        let free_of_block = (0..block.len()).all(|i| g.degree_in(i) == 0);
        if free_of_block {
            kept.push(g.map_into(ring)?);
        }
    }
    Ideal::new(ring, kept)
}

/// The colon ideal `(I : f) = { g : g*f in I }`, computed as
/// `(I intersect (f)) / f` with the intersection eliminated through an
/// auxiliary variable.
pub fn colon(ideal: &Ideal, f: &Polynomial) -> Result<Ideal, GroebnerError> {
    if f.is_zero() {
        return Err(GroebnerError::ZeroDivisor);
    }
    if f.ring() != ideal.ring() {
        return Err(GroebnerError::RingMismatch);
    }
    if f.is_constant() {
        return Ideal::new(ideal.ring(), ideal.generators().to_vec());
    }
    let ring = ideal.ring();
    let (ext, t_idx) = ring.adjoin("t_aux");
    let t = ext.var(t_idx);
    let one_minus_t = ext.one().sub(&t);
    let mut gens = Vec::new();
    for g in ideal.generators() {
        gens.push(g.map_into(&ext)?.mul(&t));
    }
    gens.push(f.map_into(&ext)?.mul(&one_minus_t));
    let big = Ideal::new(&ext, gens)?;
    let intersection = eliminate(&big, &[t_idx])?;
    let mut out = Vec::new();
    for g in intersection.generators() {
        let back = g.map_into(ring)?;
        let q = back
            .div_exact(f)
            .expect("every element of I intersect (f) is divisible by f");
        out.push(q);
    }
    Ideal::new(ring, out)
}

/// The saturation `(I : f^infinity)`, computed with one auxiliary variable
/// through `(I, 1 - t*f)` and elimination of `t`.
pub fn saturate(ideal: &Ideal, f: &Polynomial) -> Result<Ideal, GroebnerError> {
    if f.is_zero() {
        return Err(GroebnerError::ZeroDivisor);
    }
    if f.ring() != ideal.ring() {
        return Err(GroebnerError::RingMismatch);
    }
    if f.is_constant() {
        return Ideal::new(ideal.ring(), ideal.generators().to_vec());
    }
    let ring = ideal.ring();
    let (ext, t_idx) = ring.adjoin("t_aux");
    let t = ext.var(t_idx);
    let mut gens = Vec::new();
    for g in ideal.generators() {
        gens.push(g.map_into(&ext)?);
    }
    gens.push(ext.one().sub(&t.mul(&f.map_into(&ext)?)));
    let big = Ideal::new(&ext, gens)?;
    let out = eliminate(&big, &[t_idx])?;
    out.map_into(ring)
}

/// Radical membership via the Rabinowitsch trick: `f` lies in the radical of
/// `I` iff `1` lies in `(I, 1 - t*f)`.
pub fn radical_member(f: &Polynomial, ideal: &Ideal) -> Result<bool, GroebnerError> {
    if f.ring() != ideal.ring() {
        return Err(GroebnerError::RingMismatch);
    }
    if f.is_zero() {
        // zero is in every radical of a proper ideal; and in (1) trivially
        return Ok(true);
    }
    let ring = ideal.ring();
    let (ext, t_idx) = ring.adjoin("t_aux");
    let t = ext.var(t_idx);
    let mut gens = Vec::new();
    for g in ideal.generators() {
        gens.push(g.map_into(&ext)?);
    }
    gens.push(ext.one().sub(&t.mul(&f.map_into(&ext)?)));
    let big = Ideal::new(&ext, gens)?;
    let gb = buchberger(&big, &MonomialOrder::DegRevLex)?;
    Ok(gb.is_unit_ideal())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::FieldDescriptor;

    fn qring(vars: &[&str]) -> Ring {
        Ring::new(FieldDescriptor::rationals(), vars).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let r = qring(&["x", "y"]);
        let x = r.parse("x").unwrap();
        let nf = normal_form(&r.parse("x^2").unwrap(), &[x], &MonomialOrder::DegRevLex).unwrap();
        assert!(nf.is_zero());

        let g = r.parse("x - y").unwrap();
        let nf = normal_form(
            &r.parse("x*y + y^2").unwrap(),
            &[g],
            &MonomialOrder::DegRevLex,
        )
        .unwrap();
        assert_eq!(nf, r.parse("2*y^2").unwrap());

        assert!(matches!(
            normal_form(
                &r.parse("x").unwrap(),
                &[r.parse("y").unwrap()],
                &MonomialOrder::NegDegRevLex
            ),
            Err(GroebnerError::LocalOrder)
        ));
    }

    #[test]
    fn buchberger_on_monomial_ideal() {
        let r = qring(&["x", "y"]);
        let ideal = Ideal::parse(&r, &["x", "y"]).unwrap();
        let gb = buchberger(&ideal, &MonomialOrder::DegRevLex).unwrap();
        assert_eq!(gb.basis().len(), 2);
        // sorted ascending in the order: y < x under degrevlex
        assert_eq!(gb.basis()[0], r.parse("y").unwrap());
        assert_eq!(gb.basis()[1], r.parse("x").unwrap());
        assert!(spair_certificate(&gb));
    }

    #[test]
    fn twisted_cubic_lex_basis_contains_the_plane_relation() {
        let r = qring(&["x", "y", "z"]);
        let ideal = Ideal::parse(&r, &["y - x^2", "z - x^3"]).unwrap();
        let gb = buchberger(&ideal, &MonomialOrder::Lex).unwrap();
        let wanted = r.parse("y^3 - z^2").unwrap();
        assert!(gb.basis().contains(&wanted));
        assert!(spair_certificate(&gb));
    }

    #[test]
    fn ideal_equality() {
        let r = qring(&["x", "y"]);
        let a = Ideal::parse(&r, &["x", "y"]).unwrap();
        let b = Ideal::parse(&r, &["x + y", "y"]).unwrap();
        assert!(ideal_equal(&a, &b).unwrap());
        let c = Ideal::parse(&r, &["x"]).unwrap();
        let d = Ideal::parse(&r, &["x^2"]).unwrap();
        assert!(!ideal_equal(&c, &d).unwrap());
    }

    #[test]
    fn elimination_examples() {
        let r = qring(&["x", "y", "z"]);
        let ideal = Ideal::parse(&r, &["y - x^2", "z - x^3"]).unwrap();
        let el = eliminate(&ideal, &[0]).unwrap();
        let expect = Ideal::parse(&r, &["y^3 - z^2"]).unwrap();
        assert!(ideal_equal(&el, &expect).unwrap());

        let only_x = Ideal::parse(&r, &["x"]).unwrap();
        assert!(eliminate(&only_x, &[0]).unwrap().is_zero_ideal());

        let x_minus_y = Ideal::parse(&r, &["x - y"]).unwrap();
        assert!(eliminate(&x_minus_y, &[0]).unwrap().is_zero_ideal());
    }

    #[test]
    fn colon_examples() {
        let r = qring(&["x", "y"]);
        let ideal = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        let c = colon(&ideal, &r.parse("x").unwrap()).unwrap();
        let expect = Ideal::parse(&r, &["x", "y"]).unwrap();
        assert!(ideal_equal(&c, &expect).unwrap());

        let identity = colon(&ideal, &r.one()).unwrap();
        assert!(ideal_equal(&identity, &ideal).unwrap());

        assert!(matches!(
            colon(&ideal, &r.zero()),
            Err(GroebnerError::ZeroDivisor)
        ));
    }

    #[test]
    fn saturation_examples() {
        let r = qring(&["x", "y"]);
        let ideal = Ideal::parse(&r, &["x^2*y"]).unwrap();
        let s = saturate(&ideal, &r.parse("y").unwrap()).unwrap();
        let expect = Ideal::parse(&r, &["x^2"]).unwrap();
        assert!(ideal_equal(&s, &expect).unwrap());
        // idempotent
        let s2 = saturate(&s, &r.parse("y").unwrap()).unwrap();
        assert!(ideal_equal(&s, &s2).unwrap());
    }

    #[test]
    fn radical_membership() {
        let r = qring(&["x", "y"]);
        let ideal = Ideal::parse(&r, &["x^2"]).unwrap();
        assert!(radical_member(&r.parse("x").unwrap(), &ideal).unwrap());
        assert!(!radical_member(&r.parse("y").unwrap(), &ideal).unwrap());
    }
}
