//! Monomial orders: global (lex, degrevlex, block) and local (negdegrevlex).

use super::Monomial;
use std::cmp::Ordering;

/// A total order on monomials compatible with multiplication.
///
/// Global orders satisfy `1 < m` for every `m != 1`; the local order
/// `NegDegRevLex` satisfies `1 > m` instead and drives the Mora machinery in
/// [`crate::local`]. `Block` compares the first `split` exponents under one
/// order and breaks ties with the rest, which is what elimination needs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    NegDegRevLex,
    Block {
        split: usize,
        first: Box<MonomialOrder>,
        second: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    pub fn elimination_block(split: usize) -> Self {
        MonomialOrder::Block {
            split,
            first: Box::new(MonomialOrder::DegRevLex),
            second: Box::new(MonomialOrder::DegRevLex),
        }
    }

    pub fn is_global(&self) -> bool {
        match self {
            MonomialOrder::Lex | MonomialOrder::DegRevLex => true,
            MonomialOrder::NegDegRevLex => false,
            MonomialOrder::Block { first, second, .. } => first.is_global() && second.is_global(),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_slices(a.exponents(), b.exponents())
    }

    fn cmp_slices(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => {
                for (x, y) in a.iter().zip(b.iter()) {
                    if x != y {
                        return x.cmp(y);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::DegRevLex => {
                let (da, db) = (slice_degree(a), slice_degree(b));
                if da != db {
                    return da.cmp(&db);
                }
                revlex_tie(a, b)
            }
            MonomialOrder::NegDegRevLex => {
                let (da, db) = (slice_degree(a), slice_degree(b));
                if da != db {
                    // lower total degree is larger
                    return db.cmp(&da);
                }
                revlex_tie(a, b)
            }
            MonomialOrder::Block {
                split,
                first,
                second,
            } => {
                let k = (*split).min(a.len());
                first
                    .cmp_slices(&a[..k], &b[..k])
                    .then_with(|| second.cmp_slices(&a[k..], &b[k..]))
            }
        }
    }
}

fn slice_degree(a: &[u32]) -> u64 {
    a.iter().map(|&e| e as u64).sum()
}

/// Equal-degree tie break shared by degrevlex and negdegrevlex: the monomial
/// whose last nonzero entry of the exponent difference is negative wins.
fn revlex_tie(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()).rev() {
        if x != y {
            return if x < y {
                Ordering::Greater
            } else {
                Ordering::Less
            };
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn degrevlex_equal_degree_tie() {
        // x > y > z: y^3 vs x*y*z, equal degree 3, y^3 wins
        let order = MonomialOrder::DegRevLex;
        assert_eq!(
            order.compare(&m(&[0, 3, 0]), &m(&[1, 1, 1])),
            Ordering::Greater
        );
    }

    #[test]
    fn lex_ignores_degree() {
        let order = MonomialOrder::Lex;
        assert_eq!(
            order.compare(&m(&[1, 0]), &m(&[0, 100])),
            Ordering::Greater
        );
    }

    #[test]
    fn negdegrevlex_is_local() {
        let order = MonomialOrder::NegDegRevLex;
        assert_eq!(order.compare(&m(&[0]), &m(&[1])), Ordering::Greater);
        assert!(!order.is_global());
        assert!(MonomialOrder::DegRevLex.is_global());
        assert!(MonomialOrder::elimination_block(2).is_global());
    }

    #[test]
    fn block_order_prefers_first_block() {
        let order = MonomialOrder::elimination_block(1);
        // any power of the first variable beats anything without it
        assert_eq!(
            order.compare(&m(&[1, 0, 0]), &m(&[0, 5, 5])),
            Ordering::Greater
        );
        assert_eq!(
            order.compare(&m(&[0, 2, 0]), &m(&[0, 1, 0])),
            Ordering::Greater
        );
    }
}
