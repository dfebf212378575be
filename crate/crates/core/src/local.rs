//! Local-order computations at the origin: Mora weak normal forms, standard
//! bases, tangent cones, local multiplicity, and two certificate shapes for
//! regularity and power-series eliminations.
//!
//! The local order is fixed to negdegrevlex. Reducers are chosen with minimal
//! ecart, ties broken by position, and the classical termination argument is
//! backed by an explicit step bound so that runaway reductions surface as
//! errors instead of hangs.

use crate::groebner::{GroebnerError, Ideal};
use crate::hilbert::{self, Dimension, HilbertError};
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use thiserror::Error;

pub const DEFAULT_STEP_BOUND: usize = 200_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LocalError {
    #[error("reduction exceeded the step bound of {0}")]
    StepBound(usize),
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("target pairing impossible: {0} generators vs {1} targets")]
    PairingImpossible(usize, usize),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
}

#[derive(Debug, Clone, Copy)]
pub struct MoraOptions {
    pub max_steps: usize,
}

impl Default for MoraOptions {
    fn default() -> Self {
        MoraOptions {
            max_steps: DEFAULT_STEP_BOUND,
        }
    }
}

#[derive(Debug, Clone)]
pub struct MoraResult {
    pub remainder: Polynomial,
    pub steps: usize,
}

const LOCAL: MonomialOrder = MonomialOrder::NegDegRevLex;

fn ecart(f: &Polynomial) -> u64 {
    let total = f.total_degree().expect("nonzero");
    let lead = f.leading_monomial(&LOCAL).expect("nonzero").degree();
    total - lead
}

/// Mora weak normal form: `u*f = result mod (G)` for a unit `u` (of the form
/// 1 + higher order), and the leading term of a nonzero result is not
/// divisible by any leading term of `G`. Only head reductions are performed;
/// local tail reduction need not terminate.
pub fn mora_normal_form(
    f: &Polynomial,
    reducers: &[Polynomial],
    opts: &MoraOptions,
) -> Result<MoraResult, LocalError> {
    let mut pool: Vec<Polynomial> = reducers.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut h = f.clone();
    let mut steps = 0usize;
    while !h.is_zero() {
        let lm_h = h.leading_monomial(&LOCAL).expect("nonzero");
        let candidate = pool
            .iter()
            .enumerate()
            .filter(|(_, g)| {
                g.leading_monomial(&LOCAL)
                    .expect("nonzero reducer")
                    .divides(&lm_h)
            })
            .min_by_key(|(i, g)| (ecart(g), *i))
            .map(|(i, _)| i);
        let Some(gi) = candidate else { break };
        steps += 1;
        if steps > opts.max_steps {
            return Err(LocalError::StepBound(opts.max_steps));
        }
        let e_g = ecart(&pool[gi]);
        if e_g > ecart(&h) {
            // Mora's device: the intermediate result joins the reducer pool
            pool.push(h.clone());
        }
        let g = pool[gi].clone();
        let (gm, gc) = g.leading(&LOCAL).expect("nonzero");
        let (hm, hc) = h.leading(&LOCAL).expect("nonzero");
        let qm = hm.try_div(gm).expect("divides");
        let qc = hc.try_div(gc).expect("nonzero leading coefficient");
        h = h.sub(&g.mul_term(&qm, &qc));
    }
    Ok(MoraResult {
        remainder: h,
        steps,
    })
}

/// A standard basis with respect to negdegrevlex: every S-polynomial has Mora
/// weak normal form zero against the basis.
#[derive(Debug, Clone)]
pub struct StandardBasis {
    ideal: Ideal,
    basis: Vec<Polynomial>,
    pub max_nf_steps: usize,
}

impl StandardBasis {
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn order(&self) -> &MonomialOrder {
        &LOCAL
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|g| g.leading_monomial(&LOCAL).expect("nonzero"))
            .collect()
    }

    pub fn contains_unit(&self) -> bool {
        self.basis
            .iter()
            .any(|g| g.leading_monomial(&LOCAL).expect("nonzero").is_one())
    }
}

fn s_polynomial_local(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fm, fc) = f.leading(&LOCAL).expect("nonzero");
    let (gm, gc) = g.leading(&LOCAL).expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&l.try_div(fm).unwrap(), &fc.inv().expect("nonzero"));
    let b = g.mul_term(&l.try_div(gm).unwrap(), &gc.inv().expect("nonzero"));
    a.sub(&b)
}

/// Mora's standard-basis algorithm. The result is interreduced at the leading
/// terms only (full local tail reduction may not terminate), made monic and
/// sorted, so it is deterministic for a fixed input.
pub fn standard_basis(ideal: &Ideal, opts: &MoraOptions) -> Result<StandardBasis, LocalError> {
    let mut basis: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| g.make_monic(&LOCAL))
        .collect();
    let mut max_steps = 0usize;
    let mut queue: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            queue.push((i, j));
        }
    }
    let mut next = 0usize;
    while next < queue.len() {
        let (i, j) = queue[next];
        next += 1;
        let s = s_polynomial_local(&basis[i], &basis[j]);
        if s.is_zero() {
            continue;
        }
        let red = mora_normal_form(&s, &basis, opts)?;
        max_steps = max_steps.max(red.steps);
        if red.remainder.is_zero() {
            continue;
        }
        let h = red.remainder.make_monic(&LOCAL);
        let t = basis.len();
        basis.push(h);
        for i in 0..t {
            queue.push((i, t));
        }
    }
    // leading-term interreduction
    let lms: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial(&LOCAL).unwrap())
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
    let mut basis: Vec<Polynomial> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();
    basis.sort_by(|a, b| {
        LOCAL.compare(
            &a.leading_monomial(&LOCAL).unwrap(),
            &b.leading_monomial(&LOCAL).unwrap(),
        )
    });
    Ok(StandardBasis {
        ideal: ideal.clone(),
        basis,
        max_nf_steps: max_steps,
    })
}

/// Post-hoc certificate: every S-pair of the basis has weak normal form zero.
pub fn standard_basis_certificate(sb: &StandardBasis, opts: &MoraOptions) -> Result<bool, LocalError> {
    let basis = sb.basis();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let s = s_polynomial_local(&basis[i], &basis[j]);
            if s.is_zero() {
                continue;
            }
            if !mora_normal_form(&s, basis, opts)?.remainder.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The tangent cone at the origin: the homogeneous ideal generated by the
/// lowest-degree forms of a standard basis.
pub fn tangent_cone(ideal: &Ideal) -> Result<Ideal, LocalError> {
    let sb = standard_basis(ideal, &MoraOptions::default())?;
    let gens = sb.basis().iter().map(|g| g.lowest_form()).collect();
    Ok(Ideal::new(ideal.ring(), gens)?)
}

/// Krull dimension of the local quotient at the origin.
pub fn local_dimension(ideal: &Ideal) -> Result<Dimension, LocalError> {
    Ok(hilbert::krull_dim(&tangent_cone(ideal)?)?)
}

/// Hilbert-Samuel multiplicity of the local quotient at the origin, as the
/// graded multiplicity of the tangent cone.
pub fn local_multiplicity(ideal: &Ideal) -> Result<u64, LocalError> {
    let sb = standard_basis(ideal, &MoraOptions::default())?;
    if sb.contains_unit() {
        return Err(LocalError::UnitIdeal);
    }
    let gens = sb.basis().iter().map(|g| g.lowest_form()).collect();
    let tc = Ideal::new(ideal.ring(), gens)?;
    Ok(hilbert::multiplicity_graded(&tc)?)
}

/// Regularity certificate at the origin: the local ring is regular iff the
/// span of the linear parts of a standard basis has rank equal to the
/// codimension.
#[derive(Debug, Clone)]
pub struct RegularityCertificate {
    pub regular: bool,
    pub linear_rank: usize,
    pub dimension: usize,
    pub codimension: usize,
    pub linear_parts: Vec<Polynomial>,
}

pub fn is_regular_at_origin(ideal: &Ideal) -> Result<RegularityCertificate, LocalError> {
    let ring = ideal.ring();
    let sb = standard_basis(ideal, &MoraOptions::default())?;
    if sb.contains_unit() {
        return Err(LocalError::UnitIdeal);
    }
    let gens: Vec<Polynomial> = sb.basis().iter().map(|g| g.lowest_form()).collect();
    let tc = Ideal::new(ring, gens)?;
    let dim = match hilbert::krull_dim(&tc)? {
        Dimension::EmptySet => return Err(LocalError::UnitIdeal),
        Dimension::Dim(d) => d,
    };
    let codim = ring.nvars() - dim;
    let linear_parts: Vec<Polynomial> = sb
        .basis()
        .iter()
        .map(|g| g.linear_part())
        .filter(|l| !l.is_zero())
        .collect();
    let rank = linear_rank(ring.nvars(), &linear_parts);
    Ok(RegularityCertificate {
        regular: rank == codim,
        linear_rank: rank,
        dimension: dim,
        codimension: codim,
        linear_parts,
    })
}

fn linear_rank(nvars: usize, forms: &[Polynomial]) -> usize {
    // Gaussian elimination on the coefficient rows of the linear forms
    let mut rows: Vec<Vec<crate::coeff::FieldElement>> = Vec::new();
    for f in forms {
        let field = f.ring().field();
        let mut row = vec![field.zero(); nvars];
        for (m, c) in f.terms() {
            let var = m
                .exponents()
                .iter()
                .position(|&e| e == 1)
                .expect("linear form");
            row[var] = c.clone();
        }
        rows.push(row);
    }
    let mut rank = 0usize;
    for col in 0..nvars {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        for r in 0..rows.len() {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].try_mul(&inv).unwrap();
            let pivot_row = rows[rank].clone();
            for (entry, pivot) in rows[r].iter_mut().zip(&pivot_row) {
                let delta = pivot.try_mul(&factor).unwrap();
                *entry = entry.try_sub(&delta).unwrap();
            }
        }
        rank += 1;
    }
    rank
}

/// One step of a successful elimination chain.
#[derive(Debug, Clone)]
pub struct ChainStep {
    pub target: String,
    pub unit_coefficient: Polynomial,
}

/// Certificate that a sequence of generators eliminates a matching sequence of
/// variables, each appearing to degree one with a local-unit coefficient, so
/// the quotient is a formal power series ring in the remaining variables.
#[derive(Debug, Clone)]
pub struct ChainCertificate {
    pub granted: bool,
    pub steps: Vec<ChainStep>,
    pub failure: Option<String>,
}

pub fn elimination_chain_certificate(
    ideal: &Ideal,
    targets: &[usize],
) -> Result<ChainCertificate, LocalError> {
    let ring = ideal.ring();
    let gens = ideal.generators();
    if gens.len() != targets.len() {
        return Err(LocalError::PairingImpossible(gens.len(), targets.len()));
    }
    let mut work: Vec<Polynomial> = gens.to_vec();
    let mut steps = Vec::new();
    let deny = |msg: String, steps: Vec<ChainStep>| {
        Ok(ChainCertificate {
            granted: false,
            steps,
            failure: Some(msg),
        })
    };
    for (i, &z) in targets.iter().enumerate() {
        let g = work[i].clone();
        if g.degree_in(z) != 1 {
            return deny(
                format!(
                    "generator {} has degree {} in {}",
                    i,
                    g.degree_in(z),
                    ring.var_name(z)
                ),
                steps,
            );
        }
        let coeff = g.coefficient_of(z, 1);
        if coeff.constant_term().is_zero() {
            return deny(
                format!(
                    "coefficient of {} in generator {} is not a local unit: {}",
                    ring.var_name(z),
                    i,
                    coeff
                ),
                steps,
            );
        }
        // clear the eliminated variable from the later generators
        for item in work.iter_mut().skip(i + 1) {
            match item.degree_in(z) {
                0 => {}
                1 => {
                    let d = item.coefficient_of(z, 1);
                    *item = item.mul(&coeff).sub(&g.mul(&d));
                    debug_assert_eq!(item.degree_in(z), 0);
                }
                deg => {
                    return deny(
                        format!(
                            "later generator reintroduces {} to degree {}",
                            ring.var_name(z),
                            deg
                        ),
                        steps,
                    );
                }
            }
        }
        steps.push(ChainStep {
            target: ring.var_name(z).to_string(),
            unit_coefficient: coeff,
        });
    }
    Ok(ChainCertificate {
        granted: true,
        steps,
        failure: None,
    })
}
