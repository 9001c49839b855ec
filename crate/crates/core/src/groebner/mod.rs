//! Buchberger's algorithm and the ideal operations built on it.
//!
//! Every answer is exact. When a computation would exceed its [`Budget`] the
//! operation fails with [`GroebnerError::Inconclusive`]; it never guesses.

mod buchberger;
mod ideal;
mod ops;

pub use crate::poly::TermOrder;
pub use ideal::PolyIdeal;
pub use ops::{colon_poly, contains, eliminate, ideals_equal, intersect, saturate};

use thiserror::Error;

use crate::poly::{Field, Monomial, PolyError, Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl GroebnerError {
    pub fn is_inconclusive(&self) -> bool {
        matches!(self, GroebnerError::Inconclusive(_))
    }
}

/// Resource caps for Groebner computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budget {
    /// S-pairs processed per basis computation.
    pub max_pairs: u64,
    /// Elements ever added to a basis.
    pub max_basis: usize,
    /// Single-term reduction steps per basis computation.
    pub max_reduction_steps: u64,
    /// Colon iterations in a saturation.
    pub max_saturation_steps: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: 2_000_000,
            max_basis: 50_000,
            max_reduction_steps: 500_000_000,
            max_saturation_steps: 64,
        }
    }
}

/// Environment variable holding a budget override, e.g.
/// `pairs=100000,basis=5000,steps=10000000,saturation=16`.
pub const BUDGET_ENV: &str = "MONOCURVE_BUDGET";

impl Budget {
    /// Parses `key=value` pairs separated by commas on top of the defaults.
    pub fn parse(spec: &str) -> Result<Budget, String> {
        let mut b = Budget::default();
        for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| format!("budget entry `{part}` is not key=value"))?;
            let n: u64 = v
                .trim()
                .parse()
                .map_err(|_| format!("budget value `{v}` is not a natural number"))?;
            match k.trim() {
                "pairs" => b.max_pairs = n,
                "basis" => b.max_basis = n as usize,
                "steps" => b.max_reduction_steps = n,
                "saturation" => b.max_saturation_steps = n as usize,
                other => return Err(format!("unknown budget key `{other}`")),
            }
        }
        Ok(b)
    }

    /// Defaults overridden by [`BUDGET_ENV`] when set.
    pub fn from_env() -> Result<Budget, String> {
        match std::env::var(BUDGET_ENV) {
            Ok(s) => Budget::parse(&s),
            Err(_) => Ok(Budget::default()),
        }
    }
}

/// A reduced Groebner basis: monic, inter-reduced, sorted by ascending
/// leading monomial. The order is that of the basis ring.
///
/// A basis computed with a degree bound is only valid for homogeneous
/// polynomials up to that degree; [`GroebnerBasis::normal_form`] refuses
/// anything else.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis<F: Field> {
    ring: Ring<F>,
    basis: Vec<Polynomial<F>>,
    degree_bound: Option<u32>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn order(&self) -> TermOrder {
        self.ring.order()
    }

    pub fn basis(&self) -> &[Polynomial<F>] {
        &self.basis
    }

    pub fn degree_bound(&self) -> Option<u32> {
        self.degree_bound
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.iter().any(|g| g.is_constant())
    }

    pub fn ideal(&self) -> PolyIdeal<F> {
        PolyIdeal::from_parts(self.ring.clone(), self.basis.clone())
    }

    /// Remainder of `p` on division by the basis. Zero iff `p` lies in the ideal.
    pub fn normal_form(&self, p: &Polynomial<F>) -> Result<Polynomial<F>, GroebnerError> {
        if !p.ring().same_variables(&self.ring) {
            return Err(PolyError::ContextMismatch.into());
        }
        if let Some(d) = self.degree_bound {
            if !p.is_homogeneous() || p.degree().unwrap_or(0) > d {
                return Err(GroebnerError::InvalidArgument(format!(
                    "basis is truncated at degree {d}; cannot reduce this polynomial"
                )));
            }
        }
        let p = if p.ring().order() == self.ring.order() {
            p.clone()
        } else {
            p.to_ring(&self.ring)?
        };
        let reducers: Vec<&Polynomial<F>> = self.basis.iter().collect();
        let mut steps = 0;
        buchberger::reduce(&p, &reducers, &mut steps, &Budget {
            max_reduction_steps: u64::MAX,
            ..Budget::default()
        })
    }

    pub fn contains_poly(&self, p: &Polynomial<F>) -> Result<bool, GroebnerError> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Whether every generator of `j` reduces to zero.
    pub fn contains_ideal(&self, j: &PolyIdeal<F>) -> Result<bool, GroebnerError> {
        for g in j.gens() {
            if !self.contains_poly(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First generator of `j` outside the ideal, with its normal form.
    pub fn first_non_member(
        &self,
        j: &PolyIdeal<F>,
    ) -> Result<Option<(usize, Polynomial<F>)>, GroebnerError> {
        for (i, g) in j.gens().iter().enumerate() {
            let nf = self.normal_form(g)?;
            if !nf.is_zero() {
                return Ok(Some((i, nf)));
            }
        }
        Ok(None)
    }
}

/// Reduced Groebner basis of `ideal` for `order`.
pub fn buchberger<F: Field>(
    ideal: &PolyIdeal<F>,
    order: TermOrder,
    budget: &Budget,
) -> Result<GroebnerBasis<F>, GroebnerError> {
    run_buchberger(ideal, order, budget, None)
}

/// Basis valid for homogeneous polynomials of degree at most `max_degree`.
///
/// Requires homogeneous generators and a degree-compatible order; otherwise
/// the full basis is computed.
pub fn buchberger_truncated<F: Field>(
    ideal: &PolyIdeal<F>,
    order: TermOrder,
    budget: &Budget,
    max_degree: u32,
) -> Result<GroebnerBasis<F>, GroebnerError> {
    if order.is_degree_compatible() && ideal.is_homogeneous() {
        run_buchberger(ideal, order, budget, Some(max_degree))
    } else {
        run_buchberger(ideal, order, budget, None)
    }
}

fn run_buchberger<F: Field>(
    ideal: &PolyIdeal<F>,
    order: TermOrder,
    budget: &Budget,
    max_degree: Option<u32>,
) -> Result<GroebnerBasis<F>, GroebnerError> {
    let ring = if ideal.ring().order() == order {
        ideal.ring().clone()
    } else {
        ideal.ring().with_order(order)
    };
    let gens: Vec<Polynomial<F>> = ideal
        .gens()
        .iter()
        .map(|g| g.to_ring(&ring))
        .collect::<Result<_, _>>()?;
    let mut engine = buchberger::Engine::new(&ring, budget, max_degree);
    engine.add_generators(&gens)?;
    engine.run()?;
    let basis = engine.finish()?;
    // a unit ideal needs no bound
    let degree_bound = if basis.iter().any(|g| g.is_constant()) {
        None
    } else {
        max_degree
    };
    let basis = if degree_bound.is_none() && basis.iter().any(|g| g.is_constant()) {
        vec![Polynomial::one(&ring)]
    } else {
        basis
    };
    Ok(GroebnerBasis {
        ring,
        basis,
        degree_bound,
    })
}

/// S-polynomial of two basis elements, exposed for self-checks.
pub fn s_polynomial<F: Field>(a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
    let (la, lb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
    let field = a.field();
    let l = la.lcm(lb);
    let ca = field.inv(a.leading_coeff().unwrap()).unwrap();
    let cb = field.inv(b.leading_coeff().unwrap()).unwrap();
    let ta = a.mul_term(&la.quotient_of(&l).unwrap(), &ca);
    let tb = b.mul_term(&lb.quotient_of(&l).unwrap(), &cb);
    &ta - &tb
}
