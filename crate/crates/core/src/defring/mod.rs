//! The verification layer: constructs the deformation-ring ideals in the
//! three cases of the residual representation and the three coefficient
//! modes, and replays every claim about them as a chain of mechanical
//! certificates.
//!
//! The ambient completed local rings are represented by polynomial rings;
//! every verified claim is ideal-theoretic at the origin (memberships,
//! saturations, colengths, tangent cones), for which the polynomial-level
//! computation is faithful. Teichmueller units are normalized to 1, so the
//! unit substitutions read `x12 -> 1 + x12h` and `y12 -> 1 + y12h`.

pub mod claims;
mod report;
mod runner;

pub use claims::{expected_multiplicity, special_fibre_multiplicity};
pub use report::{ClaimResult, ClaimStatus, VerificationReport};
pub use runner::{run_full_verification, RunOptions};

use crate::coeff::FieldDescriptor;
use crate::groebner::Ideal;
use crate::poly::{Polynomial, Ring};
use std::collections::BTreeMap;

/// The three shapes of the residual representation. The kind decides which of
/// `x12`, `y12` carries a unit constant term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DeformationCase {
    Ramified,
    UnramifiedIndecomposable,
    Split,
}

impl DeformationCase {
    pub const ALL: [DeformationCase; 3] = [
        DeformationCase::Ramified,
        DeformationCase::UnramifiedIndecomposable,
        DeformationCase::Split,
    ];

    pub fn slug(&self) -> &'static str {
        match self {
            DeformationCase::Ramified => "ramified",
            DeformationCase::UnramifiedIndecomposable => "unramified-indecomposable",
            DeformationCase::Split => "split",
        }
    }

    pub fn is_unramified(&self) -> bool {
        !matches!(self, DeformationCase::Ramified)
    }

    fn x12_is_unit(&self) -> bool {
        matches!(self, DeformationCase::Ramified)
    }

    fn y12_is_unit(&self) -> bool {
        matches!(self, DeformationCase::UnramifiedIndecomposable)
    }
}

impl std::fmt::Display for DeformationCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.slug())
    }
}

/// How the trace parameter `v` is resolved.
///
/// * `SymbolicV`: characteristic 0 with `v` a fresh variable.
/// * `ModP`: characteristic `p` with `v = 0` (it lies in the maximal ideal of
///   the coefficients).
/// * `GradedW`: characteristic `p` with `v` replaced by a degree-1 variable
///   `w`, the graded model in which the four generators become homogeneous.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefficientMode {
    SymbolicV,
    ModP { p: u64 },
    GradedW { p: u64 },
}

/// Deliberate corruptions used as negative controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corruption {
    /// Flip the sign of the middle term of the third generator.
    FlipSignI3Middle,
}

impl std::fmt::Display for Corruption {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Corruption::FlipSignI3Middle => write!(f, "flip-sign-i3-middle"),
        }
    }
}

/// A fully resolved computation context: case, coefficient mode, the ambient
/// ring, and the unit substitutions in force.
#[derive(Debug, Clone)]
pub struct DeformationContext {
    case: DeformationCase,
    mode: CoefficientMode,
    corruption: Option<Corruption>,
    with_tdelta: bool,
    ring: Ring,
}

impl DeformationContext {
    pub fn new(case: DeformationCase, mode: CoefficientMode) -> DeformationContext {
        Self::build(case, mode, None, false)
    }

    pub fn with_corruption(
        case: DeformationCase,
        mode: CoefficientMode,
        corruption: Option<Corruption>,
    ) -> DeformationContext {
        Self::build(case, mode, corruption, false)
    }

    /// The symbolic context with the generic second-generator matrix
    /// parameter `tdelta` adjoined, used for the pairwise-dependence minors.
    pub fn symbolic_with_tdelta(corruption: Option<Corruption>) -> DeformationContext {
        Self::build(
            DeformationCase::Split,
            CoefficientMode::SymbolicV,
            corruption,
            true,
        )
    }

    fn build(
        case: DeformationCase,
        mode: CoefficientMode,
        corruption: Option<Corruption>,
        with_tdelta: bool,
    ) -> DeformationContext {
        let field = match mode {
            CoefficientMode::SymbolicV => FieldDescriptor::rationals(),
            CoefficientMode::ModP { p } | CoefficientMode::GradedW { p } => {
                FieldDescriptor::prime_field(p).expect("odd prime")
            }
        };
        let x12_name = if case.x12_is_unit() && !matches!(mode, CoefficientMode::GradedW { .. }) {
            "x12h"
        } else {
            "x12"
        };
        let y12_name = if case.y12_is_unit() && !matches!(mode, CoefficientMode::GradedW { .. }) {
            "y12h"
        } else {
            "y12"
        };
        let mut vars: Vec<&str> = Vec::new();
        if matches!(mode, CoefficientMode::SymbolicV) {
            vars.push("v");
        }
        vars.extend(["x11", x12_name, "x21", "y11", y12_name, "y21"]);
        if matches!(mode, CoefficientMode::GradedW { .. }) {
            vars.push("w");
        }
        if with_tdelta {
            vars.push("tdelta");
        }
        let ring = Ring::new(field, &vars).expect("fixed variable lists are valid");
        DeformationContext {
            case,
            mode,
            corruption,
            with_tdelta,
            ring,
        }
    }

    pub fn case(&self) -> DeformationCase {
        self.case
    }

    pub fn mode(&self) -> CoefficientMode {
        self.mode
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn corruption(&self) -> Option<Corruption> {
        self.corruption
    }

    fn named(&self, name: &str) -> Polynomial {
        self.ring
            .var_by_name(name)
            .unwrap_or_else(|| panic!("context ring has `{name}`"))
    }

    /// The resolved trace parameter.
    pub fn v_poly(&self) -> Polynomial {
        match self.mode {
            CoefficientMode::SymbolicV => self.named("v"),
            CoefficientMode::ModP { .. } => self.ring.zero(),
            CoefficientMode::GradedW { .. } => self.named("w"),
        }
    }

    /// `x12` with the case substitution applied.
    pub fn x12_poly(&self) -> Polynomial {
        if self.ring.var_index("x12h").is_some() {
            self.ring.one().add(&self.named("x12h"))
        } else {
            self.named("x12")
        }
    }

    /// `y12` with the case substitution applied.
    pub fn y12_poly(&self) -> Polynomial {
        if self.ring.var_index("y12h").is_some() {
            self.ring.one().add(&self.named("y12h"))
        } else {
            self.named("y12")
        }
    }

    pub fn unit_substitutions(&self) -> BTreeMap<String, String> {
        let mut out = BTreeMap::new();
        if self.ring.var_index("x12h").is_some() {
            out.insert("x12".to_string(), "1 + x12h".to_string());
        }
        if self.ring.var_index("y12h").is_some() {
            out.insert("y12".to_string(), "1 + y12h".to_string());
        }
        out
    }

    /// The four defining polynomials `I1..I4` with `v` resolved per mode and
    /// units substituted per case.
    pub fn generators(&self) -> Vec<Polynomial> {
        let v = self.v_poly();
        let x11 = self.named("x11");
        let x12 = self.x12_poly();
        let x21 = self.named("x21");
        let y11 = self.named("y11");
        let y12 = self.y12_poly();
        let y21 = self.named("y21");
        let two = self.ring.integer(2);
        let vp = v.add(&x11);
        let vm = v.sub(&x11);
        let i1 = vp.mul(&vm).sub(&x12.mul(&x21));
        let i2 = vp
            .mul(&vp)
            .mul(&y12)
            .sub(&two.mul(&vp).mul(&x12).mul(&y11))
            .sub(&x12.mul(&x12).mul(&y21));
        let middle3 = two.mul(&x21).mul(&vm).mul(&y11);
        let i3 = match self.corruption {
            Some(Corruption::FlipSignI3Middle) => {
                x21.mul(&x21).mul(&y12).add(&middle3).sub(&vm.mul(&vm).mul(&y21))
            }
            None => x21.mul(&x21).mul(&y12).sub(&middle3).sub(&vm.mul(&vm).mul(&y21)),
        };
        let i4 = vp
            .mul(&x21)
            .mul(&y12)
            .sub(&two.mul(&x12).mul(&x21).mul(&y11))
            .sub(&x12.mul(&vm).mul(&y21));
        vec![i1, i2, i3, i4]
    }

    pub fn generators_ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.generators()).expect("generators live in the context ring")
    }

    /// `J = y12*x21 + 2*x11*y11 + x12*y21` with case substitutions applied.
    pub fn j_polynomial(&self) -> Polynomial {
        let x11 = self.named("x11");
        let x12 = self.x12_poly();
        let x21 = self.named("x21");
        let y11 = self.named("y11");
        let y12 = self.y12_poly();
        let y21 = self.named("y21");
        let two = self.ring.integer(2);
        y12.mul(&x21).add(&two.mul(&x11).mul(&y11)).add(&x12.mul(&y21))
    }

    /// Indices of the six coordinate variables (everything except `v`, `w`,
    /// `tdelta`).
    pub fn coordinate_vars(&self) -> Vec<usize> {
        self.ring
            .var_names()
            .iter()
            .enumerate()
            .filter(|(_, n)| !matches!(n.as_str(), "v" | "w" | "tdelta"))
            .map(|(i, _)| i)
            .collect()
    }

    /// The six pairwise 2x2 determinants of the eigenvector quadruple
    /// `(v1, v2, M v1, M v2)`, with `M` the generic second-generator matrix.
    /// Requires the `tdelta` context.
    pub fn pairwise_minors(&self) -> Vec<(String, Polynomial)> {
        assert!(self.with_tdelta, "minors need the tdelta context");
        let v = self.v_poly();
        let x11 = self.named("x11");
        let x12 = self.x12_poly();
        let x21 = self.named("x21");
        let y11 = self.named("y11");
        let y12 = self.y12_poly();
        let y21 = self.named("y21");
        let t = self.named("tdelta");
        let one = self.ring.one();
        let v1 = (x12.neg(), v.add(&x11));
        let v2 = (v.sub(&x11), x21.neg());
        // M = [[1 + t + y11, y12], [y21, 1 + t - y11]]
        let m11 = one.add(&t).add(&y11);
        let m12 = y12.clone();
        let m21 = y21.clone();
        let m22 = one.add(&t).sub(&y11);
        let apply = |u: &(Polynomial, Polynomial)| {
            (
                m11.mul(&u.0).add(&m12.mul(&u.1)),
                m21.mul(&u.0).add(&m22.mul(&u.1)),
            )
        };
        let vectors = [
            ("v1".to_string(), v1.clone()),
            ("v2".to_string(), v2.clone()),
            ("M*v1".to_string(), apply(&v1)),
            ("M*v2".to_string(), apply(&v2)),
        ];
        let det = |a: &(Polynomial, Polynomial), b: &(Polynomial, Polynomial)| {
            a.0.mul(&b.1).sub(&a.1.mul(&b.0))
        };
        let mut out = Vec::new();
        for i in 0..vectors.len() {
            for j in (i + 1)..vectors.len() {
                let (na, ua) = &vectors[i];
                let (nb, ub) = &vectors[j];
                out.push((format!("det[{na} | {nb}]"), det(ua, ub)));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_modp_generators_match_frozen_forms() {
        let ctx = DeformationContext::new(DeformationCase::Split, CoefficientMode::ModP { p: 5 });
        let r = ctx.ring();
        let gens = ctx.generators();
        assert_eq!(gens[0], r.parse("-x11^2 - x12*x21").unwrap());
        assert_eq!(
            gens[1],
            r.parse("x11^2*y12 - 2*x11*x12*y11 - x12^2*y21").unwrap()
        );
        assert_eq!(
            gens[2],
            r.parse("x21^2*y12 + 2*x21*x11*y11 - x11^2*y21").unwrap()
        );
        assert_eq!(
            gens[3],
            r.parse("x11*x21*y12 - 2*x12*x21*y11 + x12*x11*y21").unwrap()
        );
        assert_eq!(
            ctx.j_polynomial(),
            r.parse("y12*x21 + 2*x11*y11 + x12*y21").unwrap()
        );
    }

    #[test]
    fn symbolic_generators_match_frozen_forms() {
        let ctx = DeformationContext::new(DeformationCase::Split, CoefficientMode::SymbolicV);
        let r = ctx.ring();
        let gens = ctx.generators();
        assert_eq!(
            gens[0],
            r.parse("(v + x11)*(v - x11) - x12*x21").unwrap()
        );
        assert_eq!(
            gens[1],
            r.parse("(v + x11)^2*y12 - 2*(v + x11)*x12*y11 - x12^2*y21")
                .unwrap()
        );
        assert_eq!(
            gens[2],
            r.parse("x21^2*y12 - 2*x21*(v - x11)*y11 - (v - x11)^2*y21")
                .unwrap()
        );
        assert_eq!(
            gens[3],
            r.parse("(v + x11)*x21*y12 - 2*x12*x21*y11 - x12*(v - x11)*y21")
                .unwrap()
        );
    }

    #[test]
    fn case_substitutions_show_up_in_j() {
        let ram = DeformationContext::new(DeformationCase::Ramified, CoefficientMode::ModP { p: 5 });
        assert_eq!(
            ram.j_polynomial(),
            ram.ring()
                .parse("y12*x21 + 2*x11*y11 + (1 + x12h)*y21")
                .unwrap()
        );
        let ind = DeformationContext::new(
            DeformationCase::UnramifiedIndecomposable,
            CoefficientMode::ModP { p: 5 },
        );
        assert_eq!(
            ind.j_polynomial(),
            ind.ring()
                .parse("(1 + y12h)*x21 + 2*x11*y11 + x12*y21")
                .unwrap()
        );
        assert_eq!(
            ram.unit_substitutions().get("x12").map(String::as_str),
            Some("1 + x12h")
        );
    }

    #[test]
    fn graded_mode_uses_w_and_no_unit_substitutions() {
        let ctx = DeformationContext::new(DeformationCase::Split, CoefficientMode::GradedW { p: 5 });
        assert!(ctx.ring().var_index("w").is_some());
        assert!(ctx.unit_substitutions().is_empty());
        let weights: Vec<u32> = ctx
            .ring()
            .var_names()
            .iter()
            .map(|n| match n.as_str() {
                "x11" | "x12" | "x21" | "w" => 1,
                _ => 0,
            })
            .collect();
        for g in ctx.generators() {
            assert_eq!(g.weighted_homogeneous_degree(&weights), Some(2));
        }
    }

    #[test]
    fn corruption_flips_one_sign() {
        let clean = DeformationContext::new(DeformationCase::Split, CoefficientMode::SymbolicV);
        let bad = DeformationContext::with_corruption(
            DeformationCase::Split,
            CoefficientMode::SymbolicV,
            Some(Corruption::FlipSignI3Middle),
        );
        let delta = clean.generators()[2].sub(&bad.generators()[2]);
        let r = clean.ring();
        assert_eq!(delta, r.parse("-4*x21*(v - x11)*y11").unwrap());
    }
}
