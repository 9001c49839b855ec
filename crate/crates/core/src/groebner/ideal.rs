use crate::poly::{Field, Monomial, PolyError, Polynomial, Ring};

/// An ideal given by a list of generators in one ring. Zero generators are
/// dropped on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyIdeal<F: Field> {
    ring: Ring<F>,
    gens: Vec<Polynomial<F>>,
}

impl<F: Field> PolyIdeal<F> {
    pub fn new(ring: &Ring<F>, gens: Vec<Polynomial<F>>) -> Result<Self, PolyError> {
        if gens.iter().any(|g| !g.ring().same_variables(ring)) {
            return Err(PolyError::ContextMismatch);
        }
        let gens = gens
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| if g.ring().order() == ring.order() { Ok(g) } else { g.to_ring(ring) })
            .collect::<Result<_, _>>()?;
        Ok(PolyIdeal {
            ring: ring.clone(),
            gens,
        })
    }

    pub(crate) fn from_parts(ring: Ring<F>, gens: Vec<Polynomial<F>>) -> Self {
        PolyIdeal { ring, gens }
    }

    pub fn zero(ring: &Ring<F>) -> Self {
        PolyIdeal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: &Ring<F>) -> Self {
        PolyIdeal {
            ring: ring.clone(),
            gens: vec![Polynomial::one(ring)],
        }
    }

    /// The ideal generated by the variables with the given indices.
    pub fn of_variables(ring: &Ring<F>, vars: &[usize]) -> Self {
        PolyIdeal {
            ring: ring.clone(),
            gens: vars.iter().map(|&i| Polynomial::var(ring, i)).collect(),
        }
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// Least degree of a generator (`None` for the zero ideal). For a
    /// homogeneous ideal this is the initial degree.
    pub fn min_generator_degree(&self) -> Option<u32> {
        self.gens.iter().filter_map(|g| g.low_degree()).min()
    }

    pub fn max_generator_degree(&self) -> Option<u32> {
        self.gens.iter().filter_map(|g| g.degree()).max()
    }

    fn check(&self, other: &Self) -> Result<(), PolyError> {
        if self.ring.same_variables(&other.ring) {
            Ok(())
        } else {
            Err(PolyError::ContextMismatch)
        }
    }

    pub fn sum(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let mut gens = self.gens.clone();
        for g in &other.gens {
            gens.push(g.to_ring(&self.ring)?);
        }
        Ok(PolyIdeal {
            ring: self.ring.clone(),
            gens,
        })
    }

    /// All pairwise products of generators; duplicates removed.
    pub fn product(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let mut gens: Vec<Polynomial<F>> = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                let p = a * &b.to_ring(&self.ring)?;
                if !p.is_zero() && !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        Ok(PolyIdeal {
            ring: self.ring.clone(),
            gens,
        })
    }

    /// `self^n`, generated by all products of `n` generators (multisets, so
    /// no repeated products); `self^0` is the unit ideal.
    pub fn power(&self, n: u32) -> Self {
        let k = self.gens.len();
        if n == 0 {
            return PolyIdeal::unit(&self.ring);
        }
        if k == 0 {
            return self.clone();
        }
        let mut gens = Vec::new();
        let mut exps = vec![0u32; k];
        compositions(n, 0, &mut exps, &mut |e| {
            let mut p = Polynomial::one(&self.ring);
            for (g, &a) in self.gens.iter().zip(e) {
                if a > 0 {
                    p = &p * &g.pow(a);
                }
            }
            gens.push(p);
        });
        PolyIdeal {
            ring: self.ring.clone(),
            gens,
        }
    }

    /// `p * self`.
    pub fn scale(&self, p: &Polynomial<F>) -> Result<Self, PolyError> {
        Ok(PolyIdeal {
            ring: self.ring.clone(),
            gens: self
                .gens
                .iter()
                .map(|g| g.checked_mul(&p.to_ring(&self.ring)?))
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .filter(|g| !g.is_zero())
                .collect(),
        })
    }

    /// Power of the ideal generated by the given monomials, as the list of
    /// all monomials of that degree in them.
    pub fn monomial_power(ring: &Ring<F>, vars: &[usize], n: u32) -> Self {
        let mut gens = Vec::new();
        let mut exps = vec![0u32; vars.len()];
        compositions(n, 0, &mut exps, &mut |e| {
            let mut m = vec![0u32; ring.arity()];
            for (&v, &a) in vars.iter().zip(e) {
                m[v] += a;
            }
            gens.push(Polynomial::term(
                ring,
                Monomial::new(m),
                ring.field().one(),
            ));
        });
        PolyIdeal {
            ring: ring.clone(),
            gens,
        }
    }
}

/// Calls `f` with every vector of naturals of length `exps.len()` summing to
/// `n`, in lexicographically decreasing order.
pub(crate) fn compositions(n: u32, i: usize, exps: &mut [u32], f: &mut dyn FnMut(&[u32])) {
    if exps.is_empty() {
        if n == 0 {
            f(exps);
        }
        return;
    }
    if i == exps.len() - 1 {
        exps[i] = n;
        f(exps);
        exps[i] = 0;
        return;
    }
    for a in (0..=n).rev() {
        exps[i] = a;
        compositions(n - a, i + 1, exps, f);
    }
    exps[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_counts() {
        let mut count = 0;
        let mut e = vec![0; 3];
        compositions(4, 0, &mut e, &mut |v| {
            assert_eq!(v.iter().sum::<u32>(), 4);
            count += 1;
        });
        // C(4+2, 2)
        assert_eq!(count, 15);
    }
}
