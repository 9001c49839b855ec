use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

pub type Exponents = SmallVec<[u32; 10]>;

/// A power product `x_1^{e_1} ... x_n^{e_n}` with a cached total degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    deg: u32,
}

impl Monomial {
    pub fn new<I: IntoIterator<Item = u32>>(exps: I) -> Self {
        let exps: Exponents = exps.into_iter().collect();
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    pub fn one(arity: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, arity),
            deg: 0,
        }
    }

    /// The variable `x_i` (zero based).
    pub fn var(arity: usize, i: usize) -> Self {
        let mut m = Self::one(arity);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn max_exponent(&self) -> u32 {
        self.exps.iter().copied().max().unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
            deg: self.deg + other.deg,
        }
    }

    pub fn pow(&self, n: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|e| e * n).collect(),
            deg: self.deg * n,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
            deg: other.deg - self.deg,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Reinterpret in a ring whose variables are `map[i]` for source variable `i`.
    pub(crate) fn remap(&self, target_arity: usize, map: &[usize]) -> Monomial {
        let mut exps: Exponents = SmallVec::from_elem(0, target_arity);
        for (i, e) in self.exps.iter().enumerate() {
            exps[map[i]] += e;
        }
        Monomial {
            exps,
            deg: self.deg,
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// Monomial orders.
///
/// `Block(b)` compares the first `b` variables by grevlex first and breaks
/// ties by grevlex on the remaining variables; it eliminates the leading block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TermOrder {
    Grevlex,
    Lex,
    Block(usize),
}

impl Default for TermOrder {
    fn default() -> Self {
        TermOrder::Grevlex
    }
}

fn grevlex_range(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().rev().zip(b.iter().rev()) {
            if x != y {
                // a smaller exponent in the last differing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            TermOrder::Grevlex => a.deg.cmp(&b.deg).then_with(|| {
                for (x, y) in a.exps.iter().rev().zip(b.exps.iter().rev()) {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            TermOrder::Lex => a.exps.cmp(&b.exps),
            TermOrder::Block(k) => {
                let k = k.min(a.arity());
                grevlex_range(&a.exps[..k], &b.exps[..k])
                    .then_with(|| grevlex_range(&a.exps[k..], &b.exps[k..]))
            }
        }
    }

    /// Whether the order refines total degree (needed for degree truncation).
    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, TermOrder::Grevlex)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.iter().copied())
    }

    #[test]
    fn grevlex_examples() {
        let o = TermOrder::Grevlex;
        // x1 > x2 > x3
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        // x2^2 > x1 x3 in grevlex
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
        // higher degree wins
        assert_eq!(o.cmp(&m(&[0, 0, 3]), &m(&[2, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_and_block() {
        assert_eq!(
            TermOrder::Lex.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])),
            Ordering::Greater
        );
        let b = TermOrder::Block(1);
        assert_eq!(b.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(b.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[1, 2, 0]);
        let b = m(&[2, 2, 1]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b), Some(m(&[1, 0, 1])));
        assert_eq!(a.lcm(&m(&[0, 3, 1])), m(&[1, 3, 1]));
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 4, 1])));
    }
}
