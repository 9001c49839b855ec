use super::{Curve, CurveError, CurveParams, PolyMatrix};
use crate::poly::{Field, Polynomial, Ring, RingContext, Substitution, TermOrder};

/// Index of each variable in `U = k[x1, x2, x3, x4, u1, u2, u3, v]`.
pub const U1: usize = 4;
pub const U2: usize = 5;
pub const V: usize = 7;

/// Presentation `U / K` of the symbolic Rees algebra, with
/// `K = (w1, w2, z1, z2, z3)` and the matrices of its resolution
/// `0 -> U -> U^5 -> U^5 -> U`.
#[derive(Debug, Clone)]
pub struct ReesPresentation<F: Field> {
    params: CurveParams,
    ring: Ring<F>,
    gens: [Polynomial<F>; 5],
}

impl<F: Field> ReesPresentation<F> {
    pub fn new(field: F, params: CurveParams) -> Result<Self, CurveError> {
        let ring = RingContext::new(
            field,
            &["x1", "x2", "x3", "x4", "u1", "u2", "u3", "v"],
            TermOrder::Grevlex,
        )?;
        let (q, m, s) = (params.q(), params.m(), params.s());
        let t = |e: [u32; 8]| Polynomial::monomial(&ring, &e);
        let w1 = &(&t([1, 0, 0, 0, 1, 0, 0, 0]) - &t([0, 1, 0, 0, 0, 1, 0, 0]))
            + &t([0, 0, s, 0, 0, 0, 1, 0]);
        let w2 = &(&t([0, 1, 0, 0, 1, 0, 0, 0]) - &t([0, 0, 1, 0, 0, 1, 0, 0]))
            + &t([q, 0, 0, m, 0, 0, 1, 0]);
        let z1 = &(&t([1, 0, 0, 0, 0, 0, 0, 1]) - &t([0, 0, s - 1, 0, 1, 0, 1, 0]))
            + &t([0, 0, 0, 0, 0, 2, 0, 0]);
        let z2 = &(&t([0, 1, 0, 0, 0, 0, 0, 1]) + &t([q - 1, 0, s - 1, m, 0, 0, 2, 0]))
            + &t([0, 0, 0, 0, 1, 1, 0, 0]);
        let z3 = &(&t([0, 0, 1, 0, 0, 0, 0, 1]) + &t([q - 1, 0, 0, m, 0, 1, 1, 0]))
            + &t([0, 0, 0, 0, 2, 0, 0, 0]);
        Ok(ReesPresentation {
            params,
            ring,
            gens: [w1, w2, z1, z2, z3],
        })
    }

    pub fn params(&self) -> CurveParams {
        self.params
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    /// `(w1, w2, z1, z2, z3)`.
    pub fn generators(&self) -> &[Polynomial<F>; 5] {
        &self.gens
    }

    pub fn generator_names() -> [&'static str; 5] {
        ["w1", "w2", "z1", "z2", "z3"]
    }

    /// The row `phi1 = (w1 w2 z1 z2 z3)`.
    pub fn phi1(&self) -> PolyMatrix<F> {
        PolyMatrix::from_rows(&self.ring, vec![self.gens.to_vec()])
    }

    /// The column `phi3 = (w1 w2 z1 z2 z3)^T`.
    pub fn phi3(&self) -> PolyMatrix<F> {
        self.phi1().transpose()
    }

    /// The skew 5x5 middle matrix exactly as it is usually displayed.
    /// Its first row and column carry the opposite sign to the one that
    /// makes `phi1 * phi2 = 0`; see [`ReesPresentation::phi2`].
    pub fn phi2_displayed(&self) -> PolyMatrix<F> {
        let (q, m, s) = (self.params.q(), self.params.m(), self.params.s());
        let r = &self.ring;
        let z = || Polynomial::zero(r);
        let x = |i: usize| Polynomial::var(r, i);
        let t = |e: [u32; 8]| Polynomial::monomial(r, &e);
        let a = t([q - 1, 0, 0, m, 0, 0, 1, 0]);
        let b = t([0, 0, s - 1, 0, 0, 0, 1, 0]);
        let (u1, u2, v) = (x(U1), x(U2), x(V));
        PolyMatrix::from_rows(
            r,
            vec![
                vec![z(), v.clone(), -&a, -&u1, u2.clone()],
                vec![-&v, z(), -&u1, u2.clone(), -&b],
                vec![a.clone(), u1.clone(), z(), x(2), -x(1)],
                vec![u1.clone(), -&u2, -x(2), z(), x(0)],
                vec![-&u2, b.clone(), x(1), -x(0), z()],
            ],
        )
    }

    /// The middle matrix with first row and column negated, so that
    /// `phi1 * phi2 = 0` and `phi2 * phi3 = 0` hold on the nose.
    pub fn phi2(&self) -> PolyMatrix<F> {
        let d = self.phi2_displayed();
        let rows = (0..5)
            .map(|i| {
                (0..5)
                    .map(|j| {
                        if (i == 0) != (j == 0) {
                            -d.get(i, j)
                        } else {
                            d.get(i, j).clone()
                        }
                    })
                    .collect()
            })
            .collect();
        PolyMatrix::from_rows(&self.ring, rows)
    }

    /// `R[t] = k[x1, x2, x3, x4, t]`, the target of `tau`.
    pub fn rees_target(&self) -> Result<Ring<F>, CurveError> {
        Ok(RingContext::new(
            self.ring.field().clone(),
            &["x1", "x2", "x3", "x4", "t"],
            TermOrder::Grevlex,
        )?)
    }

    /// `tau: U -> R[t]`, `x_i -> x_i`, `u_i -> g_i t`, `v -> f t^2`.
    pub fn tau(&self, curve: &Curve<F>) -> Result<Substitution<F>, CurveError> {
        let target = self.rees_target()?;
        let map = [0, 1, 2, 3];
        let t = Polynomial::var(&target, 4);
        let mut images: Vec<Polynomial<F>> = (0..4).map(|i| Polynomial::var(&target, i)).collect();
        for g in curve.generators() {
            images.push(&g.embed(&target, &map)? * &t);
        }
        images.push(&curve.f().embed(&target, &map)? * &t.pow(2));
        Ok(Substitution::new(&self.ring, &target, images)?)
    }

    /// Embedding `R -> U` on the first four variables.
    pub fn embed_base(&self, p: &Polynomial<F>) -> Result<Polynomial<F>, CurveError> {
        Ok(p.embed(&self.ring, &[0, 1, 2, 3])?)
    }
}
