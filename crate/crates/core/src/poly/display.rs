//! Canonical text form. Printing then parsing is the identity on canonical
//! polynomials.

use super::{Monomial, Polynomial, Ring};
use crate::coeff::FieldElement;
use num_traits::Signed;
use std::fmt;

fn monomial_parts(ring: &Ring, m: &Monomial, out: &mut Vec<String>) {
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => out.push(ring.var_name(i).to_string()),
            _ => out.push(format!("{}^{}", ring.var_name(i), e)),
        }
    }
}

/// Split a coefficient into (is_negative, magnitude-string). Modular residues
/// are canonical in `[0, p)` and never carry a sign.
fn coeff_repr(c: &FieldElement) -> (bool, String) {
    match c {
        FieldElement::Rational(r) => {
            if r.is_negative() {
                (true, FieldElement::Rational(-r).to_string())
            } else {
                (false, c.to_string())
            }
        }
        FieldElement::Modular { .. } => (false, c.to_string()),
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            let (neg, mag) = coeff_repr(c);
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts = Vec::new();
            if mag != "1" || m.is_one() {
                parts.push(mag);
            }
            monomial_parts(self.ring(), m, &mut parts);
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use crate::coeff::FieldDescriptor;
    use crate::poly::Ring;

    #[test]
    fn print_parse_roundtrip() {
        let r = Ring::new(FieldDescriptor::rationals(), &["x", "y", "z"]).unwrap();
        for src in [
            "0",
            "1",
            "-1",
            "x",
            "-x + y - 1",
            "x^2 - y^2",
            "3*x*y*z - 1/2*z^3 + 7",
            "x^10 + x^5*y^5",
        ] {
            let f = r.parse(src).unwrap();
            let printed = f.to_string();
            assert_eq!(r.parse(&printed).unwrap(), f, "roundtrip of {src} via {printed}");
        }
    }

    #[test]
    fn modular_coefficients_print_as_residues() {
        let f5 = FieldDescriptor::prime_field(5).unwrap();
        let r = Ring::new(f5, &["x"]).unwrap();
        let f = r.parse("-x - 3").unwrap();
        assert_eq!(f.to_string(), "4*x + 2");
        assert_eq!(r.parse(&f.to_string()).unwrap(), f);
    }
}
