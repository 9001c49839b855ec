use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::context::Ring;
use super::field::Field;
use super::monomial::Monomial;
use super::PolyError;

/// A polynomial with terms stored in strictly descending order of the ring's
/// term order and no zero coefficients.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: Ring<F>,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Ring<F>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring<F>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Ring<F>, c: F::Elem) -> Self {
        Self::term(ring, Monomial::one(ring.arity()), c)
    }

    pub fn from_i64(ring: &Ring<F>, c: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(c))
    }

    /// The `i`-th variable (zero based).
    pub fn var(ring: &Ring<F>, i: usize) -> Self {
        assert!(i < ring.arity(), "variable index {i} out of range");
        Self::term(ring, Monomial::var(ring.arity(), i), ring.field().one())
    }

    pub fn term(ring: &Ring<F>, m: Monomial, c: F::Elem) -> Self {
        assert_eq!(m.arity(), ring.arity(), "monomial arity mismatch");
        let terms = if ring.field().is_zero(&c) {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn monomial(ring: &Ring<F>, exps: &[u32]) -> Self {
        Self::term(ring, Monomial::new(exps.iter().copied()), ring.field().one())
    }

    /// Collects arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(ring: &Ring<F>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, F::Elem)>,
    {
        let field = ring.field();
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.arity(), ring.arity(), "monomial arity mismatch");
            match acc.get_mut(&m) {
                Some(v) => *v = field.add(v, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds from terms already sorted descending with nonzero coefficients.
    pub(crate) fn from_sorted_unchecked(ring: &Ring<F>, terms: Vec<(Monomial, F::Elem)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.field().is_one(&self.terms[0].1)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.1)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Least total degree of a term.
    pub fn low_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    /// Coefficient of `m` (zero when absent).
    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field().zero())
    }

    fn check_ring(&self, other: &Self) -> Result<(), PolyError> {
        if self.ring.same_ring(&other.ring) {
            Ok(())
        } else {
            Err(PolyError::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let field = self.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { field.neg(&b[j].1) } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        field.sub(&a[i].1, &b[j].1)
                    } else {
                        field.add(&a[i].1, &b[j].1)
                    };
                    if !field.is_zero(&c) {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { field.neg(&t.1) } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        let field = self.field();
        let mut acc: HashMap<Monomial, F::Elem> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = field.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(v) => *v = field.add(v, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        let order = self.ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// `c * m * self`. Multiplying by a monomial preserves the term order.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(t, d)| (t.mul(m), field.mul(d, c)))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        self.mul_term(&Monomial::one(self.ring.arity()), c)
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if self.field().is_one(lc) => self.clone(),
            Some(lc) => {
                let inv = self.field().inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// `self^n` by repeated squaring; `self^0 = 1`.
    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(&self.ring);
        if n == 0 {
            return result;
        }
        let mut base = self.clone();
        let mut e = n;
        loop {
            if e & 1 == 1 {
                result = result.product(&base);
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.product(&base);
        }
        result
    }

    /// The same polynomial in a ring with identical variables but possibly a
    /// different storage order.
    pub fn to_ring(&self, ring: &Ring<F>) -> Result<Self, PolyError> {
        if !self.ring.same_variables(ring) {
            return Err(PolyError::ContextMismatch);
        }
        let mut terms = self.terms.clone();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Ok(Polynomial {
            ring: ring.clone(),
            terms,
        })
    }

    /// Renames variables into a larger ring: source variable `i` becomes
    /// target variable `map[i]`.
    pub fn embed(&self, ring: &Ring<F>, map: &[usize]) -> Result<Self, PolyError> {
        if map.len() != self.ring.arity() || map.iter().any(|&t| t >= ring.arity()) {
            return Err(PolyError::ContextMismatch);
        }
        if self.field() != ring.field() {
            return Err(PolyError::ContextMismatch);
        }
        Ok(Self::from_terms(
            ring,
            self.terms
                .iter()
                .map(|(m, c)| (m.remap(ring.arity(), map), c.clone())),
        ))
    }

    /// Sum of the terms of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .cloned()
                .collect(),
        }
    }

    /// Whether every monomial exponent is within the ring's cap.
    pub fn within_exponent_cap(&self) -> bool {
        let cap = self.ring.exponent_cap();
        self.terms.iter().all(|(m, _)| m.max_exponent() <= cap)
    }

    /// Divides every term by the monomial `m`; `None` unless `m` divides each term.
    pub fn exact_div_monomial(&self, m: &Monomial) -> Option<Self> {
        let terms: Option<Vec<_>> = self
            .terms
            .iter()
            .map(|(t, c)| m.quotient_of(t).map(|q| (q, c.clone())))
            .collect();
        terms.map(|terms| Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Largest monomial dividing every term (1 for zero).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::one(self.ring.arity()),
            Some((m0, _)) => it.fold(m0.clone(), |g, (m, _)| g.gcd(m)),
        }
    }
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> std::hash::Hash for Polynomial<F> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

// Operator forms panic on ring mismatch; use the `checked_*` methods to get
// an error instead.
impl<'a, F: Field> Add<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
        self.checked_add(rhs).expect("polynomials from different rings")
    }
}

impl<'a, F: Field> Sub<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
        self.checked_sub(rhs).expect("polynomials from different rings")
    }
}

impl<'a, F: Field> Mul<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
        self.checked_mul(rhs).expect("polynomials from different rings")
    }
}

impl<F: Field> Add for Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Polynomial<F>) -> Polynomial<F> {
        &self + &rhs
    }
}

impl<F: Field> Sub for Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Polynomial<F>) -> Polynomial<F> {
        &self - &rhs
    }
}

impl<F: Field> Mul for Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Polynomial<F>) -> Polynomial<F> {
        &self * &rhs
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        let field = self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }
}

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        -&self
    }
}
