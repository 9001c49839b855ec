//! The family of monomial curves `C(q, m)` in projective 3-space: defining
//! equations, the degree-`e` element `f`, symbolic-power generators, the
//! presentation of the symbolic Rees algebra, and closed-form invariants.

mod matrix;
mod params;
mod predict;
mod rees;

pub use matrix::{pfaffian, pfaffians4, PolyMatrix};
pub use params::CurveParams;
pub use predict::{
    predict, predicted_containment, predicted_rho, regularity_shift, render_ratio, resurgence_gap,
    resurgence_gap_factored, InvariantPrediction, Ratio,
};
pub use rees::ReesPresentation;

use thiserror::Error;

use crate::groebner::PolyIdeal;
use crate::poly::{Field, PolyError, Polynomial, Ring, RingContext, Substitution, TermOrder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("invalid curve parameters: {0}")]
    InvalidParams(String),
    #[error("witness parameters out of range: {0}")]
    WitnessRange(String),
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("matrix shape: {0}")]
    Shape(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Variable indices in `R = k[x1, x2, x3, x4]`.
pub const X1: usize = 0;
pub const X2: usize = 1;
pub const X3: usize = 2;
pub const X4: usize = 3;

/// The curve ideal and its distinguished elements in `R = k[x1..x4]`
/// (grevlex, `x1 > x2 > x3 > x4`).
#[derive(Debug, Clone)]
pub struct Curve<F: Field> {
    params: CurveParams,
    ring: Ring<F>,
    g: [Polynomial<F>; 3],
    f: Polynomial<F>,
}

impl<F: Field> Curve<F> {
    pub fn new(field: F, params: CurveParams) -> Result<Self, CurveError> {
        let ring = RingContext::new(field, &["x1", "x2", "x3", "x4"], TermOrder::Grevlex)?;
        let g = defining_generators(&ring, params);
        let f = f_combination(&ring, params, &g);
        Ok(Curve { params, ring, g, f })
    }

    pub fn params(&self) -> CurveParams {
        self.params
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    /// `g1 = x1^q x2 x4^m - x3^{q+m+1}`, `g2 = x1^{q+1} x4^m - x2 x3^{q+m}`,
    /// `g3 = x1 x3 - x2^2`.
    pub fn generators(&self) -> &[Polynomial<F>; 3] {
        &self.g
    }

    /// `f = x3^{q+m} g1 - x1^q x4^m g2 + x1^{q-1} x2 x3^{q+m-1} x4^m g3`.
    pub fn f(&self) -> &Polynomial<F> {
        &self.f
    }

    /// The expanded four-term form of `f`, built independently of the `g_i`.
    pub fn f_expanded(&self) -> Polynomial<F> {
        let (q, m, s) = (self.params.q(), self.params.m(), self.params.s());
        let r = &self.ring;
        let fld = r.field();
        Polynomial::from_terms(
            r,
            [
                (mono(&[0, 0, 2 * s + 1, 0]), fld.from_i64(-1)),
                (mono(&[q - 1, 3, s - 1, m]), fld.from_i64(-1)),
                (mono(&[q, 1, s, m]), fld.from_i64(3)),
                (mono(&[2 * q + 1, 0, 0, 2 * m]), fld.from_i64(-1)),
            ],
        )
    }

    /// Variable `x_{i+1}` of `R`.
    pub fn x(&self, i: usize) -> Polynomial<F> {
        Polynomial::var(&self.ring, i)
    }

    pub fn monomial(&self, exps: [u32; 4]) -> Polynomial<F> {
        Polynomial::monomial(&self.ring, &exps)
    }

    /// The prime `p = (g1, g2, g3)`.
    pub fn prime(&self) -> PolyIdeal<F> {
        PolyIdeal::new(&self.ring, self.g.to_vec()).expect("same ring")
    }

    /// `p^n` generated by all products `g1^a g2^b g3^c` with `a+b+c = n`.
    pub fn ordinary_power(&self, n: u32) -> PolyIdeal<F> {
        self.prime().power(n)
    }

    /// `I_n = sum_{n1 + 2 n2 = n} f^{n2} p^{n1}`, generated by
    /// `f^{n2} g1^a g2^b g3^c` with `a + b + c = n1`; `I_0 = R`.
    pub fn symbolic_gens(&self, n: u32) -> PolyIdeal<F> {
        let gens = self.symbolic_terms(n).into_iter().map(|(_, g)| g).collect();
        PolyIdeal::new(&self.ring, gens).expect("same ring")
    }

    /// The generators of `I_n` with labels such as `f^2*g1*g3`.
    pub fn symbolic_terms(&self, n: u32) -> Vec<(String, Polynomial<F>)> {
        let mut out = Vec::new();
        for n2 in (0..=n / 2).rev() {
            let n1 = n - 2 * n2;
            let fpow = self.f.pow(n2);
            for a in (0..=n1).rev() {
                for b in (0..=n1 - a).rev() {
                    let c = n1 - a - b;
                    let g = &(&(&fpow * &self.g[0].pow(a)) * &self.g[1].pow(b)) * &self.g[2].pow(c);
                    out.push((product_label(&[("f", n2), ("g1", a), ("g2", b), ("g3", c)]), g));
                }
            }
        }
        out
    }

    /// `m = (x1, x2, x3, x4)`.
    pub fn maximal_ideal(&self) -> PolyIdeal<F> {
        PolyIdeal::of_variables(&self.ring, &[X1, X2, X3, X4])
    }

    /// `m^a p^b`: every product of a degree-`a` monomial with a generator of `p^b`.
    pub fn maximal_times_prime_power(&self, a: u32, b: u32) -> PolyIdeal<F> {
        let ma = PolyIdeal::monomial_power(&self.ring, &[X1, X2, X3, X4], a);
        ma.product(&self.ordinary_power(b)).expect("same ring")
    }

    /// The parametrisation `phi: R -> k[x, y]`.
    pub fn parametrization(&self) -> Result<Substitution<F>, CurveError> {
        let (d, m) = (self.params.d(), self.params.m());
        let s = RingContext::new(self.ring.field().clone(), &["x", "y"], TermOrder::Grevlex)?;
        let images = vec![
            Polynomial::monomial(&s, &[d + 2 * m, 0]),
            Polynomial::monomial(&s, &[d + m, m]),
            Polynomial::monomial(&s, &[d, 2 * m]),
            Polynomial::monomial(&s, &[0, d + 2 * m]),
        ];
        Ok(Substitution::new(&self.ring, &s, images)?)
    }

    /// Reduction `R -> T = k[x2, x3]` killing `x1` and `x4`.
    pub fn to_t(&self) -> Result<Substitution<F>, CurveError> {
        let t = RingContext::new(self.ring.field().clone(), &["x2", "x3"], TermOrder::Grevlex)?;
        let images = vec![
            Polynomial::zero(&t),
            Polynomial::var(&t, 0),
            Polynomial::var(&t, 1),
            Polynomial::zero(&t),
        ];
        Ok(Substitution::new(&self.ring, &t, images)?)
    }

    /// The 2x3 matrix whose 2x2 minors cut out the curve.
    pub fn minors_matrix(&self) -> PolyMatrix<F> {
        let (q, m, s) = (self.params.q(), self.params.m(), self.params.s());
        PolyMatrix::from_rows(
            &self.ring,
            vec![
                vec![self.x(X1), self.x(X2), self.monomial([0, 0, s, 0])],
                vec![self.x(X2), self.x(X3), self.monomial([q, 0, 0, m])],
            ],
        )
    }

    /// The row `(g1 g2 g3)` of the Hilbert-Burch resolution.
    pub fn psi(&self) -> PolyMatrix<F> {
        PolyMatrix::from_rows(&self.ring, vec![self.g.to_vec()])
    }

    /// The 3x2 syzygy matrix of `(g1, g2, g3)`.
    pub fn syzygy_matrix(&self) -> PolyMatrix<F> {
        let (q, m, s) = (self.params.q(), self.params.m(), self.params.s());
        PolyMatrix::from_rows(
            &self.ring,
            vec![
                vec![self.x(X2), self.x(X1)],
                vec![-self.x(X3), -self.x(X2)],
                vec![self.monomial([q, 0, 0, m]), self.monomial([0, 0, s, 0])],
            ],
        )
    }

    /// Explicit expressions of `x_i f` (i = 1, 2, 3) as quadrics in the `g_j`,
    /// returned as `(x_i f, combination)` pairs.
    pub fn xf_certificates(&self) -> [(Polynomial<F>, Polynomial<F>); 3] {
        let (q, m, s) = (self.params.q(), self.params.m(), self.params.s());
        let [g1, g2, g3] = &self.g;
        let x1f = &self.x(X1) * &self.f;
        let x2f = &self.x(X2) * &self.f;
        let x3f = &self.x(X3) * &self.f;
        let c1 = &(&self.monomial([0, 0, s - 1, 0]) * &(g1 * g3)) - &(g2 * g2);
        let c2 = &(-&(&self.monomial([q - 1, 0, s - 1, m]) * &(g3 * g3))) - &(g1 * g2);
        let c3 = &(-&(&self.monomial([q - 1, 0, 0, m]) * &(g2 * g3))) - &(g1 * g1);
        [(x1f, c1), (x2f, c2), (x3f, c3)]
    }

    /// Element of `p^(k(2q+2m)+j)` outside `p^r` for the predicted `r`:
    /// `f^{k(q+m)} g2^j` for `j` in {0, 1} (k >= 1), and
    /// `f^{k(q+m)+j'} g2^{j-2j'}` with `j' = floor(j/2)` for `2 <= j <= 2q+2m-1`.
    pub fn witness(&self, k: u32, j: u32) -> Result<Polynomial<F>, CurveError> {
        let desc = witness_exponents(self.params, k, j)?;
        Ok(&self.f.pow(desc.0) * &self.g[1].pow(desc.1))
    }
}

/// Exponents `(a, b)` of the witness `f^a g2^b`.
pub fn witness_exponents(params: CurveParams, k: u32, j: u32) -> Result<(u32, u32), CurveError> {
    let s = params.s();
    match j {
        0 | 1 if k >= 1 => Ok((k * s, j)),
        0 | 1 => Err(CurveError::WitnessRange(format!(
            "j = {j} needs k >= 1"
        ))),
        j if j < 2 * s => Ok((k * s + j / 2, j % 2)),
        _ => Err(CurveError::WitnessRange(format!(
            "j = {j} must be at most 2q+2m-1 = {}",
            2 * s - 1
        ))),
    }
}

/// Human-readable form `f^a*g2^b` of a witness.
pub fn witness_label(params: CurveParams, k: u32, j: u32) -> Result<String, CurveError> {
    let (a, b) = witness_exponents(params, k, j)?;
    Ok(product_label(&[("f", a), ("g2", b)]))
}

/// `name1^e1*name2^e2*...`, skipping zero exponents; `1` if all are zero.
pub fn product_label(factors: &[(&str, u32)]) -> String {
    let parts: Vec<String> = factors
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|&(name, e)| if e == 1 { name.to_string() } else { format!("{name}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn mono(e: &[u32; 4]) -> crate::poly::Monomial {
    crate::poly::Monomial::new(e.iter().copied())
}

fn defining_generators<F: Field>(ring: &Ring<F>, params: CurveParams) -> [Polynomial<F>; 3] {
    let (q, m, s) = (params.q(), params.m(), params.s());
    let t = |e: [u32; 4]| Polynomial::monomial(ring, &e);
    [
        &t([q, 1, 0, m]) - &t([0, 0, s + 1, 0]),
        &t([q + 1, 0, 0, m]) - &t([0, 1, s, 0]),
        &t([1, 0, 1, 0]) - &t([0, 2, 0, 0]),
    ]
}

fn f_combination<F: Field>(
    ring: &Ring<F>,
    params: CurveParams,
    g: &[Polynomial<F>; 3],
) -> Polynomial<F> {
    let (q, m, s) = (params.q(), params.m(), params.s());
    let t = |e: [u32; 4]| Polynomial::monomial(ring, &e);
    let a = &t([0, 0, s, 0]) * &g[0];
    let b = &t([q, 0, 0, m]) * &g[1];
    let c = &t([q - 1, 1, s - 1, m]) * &g[2];
    &(&a - &b) + &c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse, Rationals};

    fn curve(q: u32, m: u32) -> Curve<Rationals> {
        Curve::new(Rationals, CurveParams::new(q, m).unwrap()).unwrap()
    }

    #[test]
    fn generators_for_q1_m1() {
        let c = curve(1, 1);
        let r = c.ring();
        let [g1, g2, g3] = c.generators();
        assert_eq!(*g1, parse("x1*x2*x4 - x3^3", r).unwrap());
        assert_eq!(*g2, parse("x1^2*x4 - x2*x3^2", r).unwrap());
        assert_eq!(*g3, parse("x1*x3 - x2^2", r).unwrap());
    }

    #[test]
    fn f_for_q1_m1() {
        let c = curve(1, 1);
        let expected = parse("-x3^5 - x2^3*x3*x4 + 3*x1*x2*x3^2*x4 - x1^3*x4^2", c.ring()).unwrap();
        assert_eq!(*c.f(), expected);
        assert_eq!(c.f_expanded(), expected);
    }

    #[test]
    fn two_forms_of_f_agree() {
        for q in 1..=4 {
            for m in 1..=4 {
                if let Ok(p) = CurveParams::new(q, m) {
                    let c = Curve::new(Rationals, p).unwrap();
                    assert_eq!(*c.f(), c.f_expanded(), "{p}");
                    assert_eq!(c.f().degree(), Some(p.e()));
                    assert!(c.f().is_homogeneous());
                }
            }
        }
    }

    #[test]
    fn degrees_of_generators() {
        for (q, m) in [(1, 1), (1, 2), (2, 1), (2, 3)] {
            let c = curve(q, m);
            let [g1, g2, g3] = c.generators();
            assert_eq!(g3.degree(), Some(2));
            assert_eq!(g1.degree(), Some(q + m + 1));
            assert_eq!(g2.degree(), Some(q + m + 1));
        }
    }

    #[test]
    fn image_of_f_in_t() {
        for (q, m) in [(1, 1), (1, 2), (2, 1)] {
            let c = curve(q, m);
            let to_t = c.to_t().unwrap();
            let img = to_t.apply(c.f()).unwrap();
            let expected = -Polynomial::monomial(to_t.target(), &[0, 2 * (q + m) + 1]);
            assert_eq!(img, expected);
        }
    }

    #[test]
    fn symbolic_gens_small_cases() {
        let c = curve(1, 1);
        assert_eq!(c.symbolic_gens(0).gens().len(), 1);
        assert!(c.symbolic_gens(0).gens()[0].is_one());
        assert_eq!(c.symbolic_gens(1).gens(), c.prime().gens());
        // p^2 has 6 generators, plus f
        let i2 = c.symbolic_gens(2);
        assert_eq!(i2.gens().len(), 7);
        assert!(i2.gens().contains(c.f()));
    }

    #[test]
    fn witnesses() {
        let p = CurveParams::new(1, 1).unwrap();
        let c = curve(1, 1);
        assert_eq!(c.witness(1, 0).unwrap(), c.f().pow(2));
        assert_eq!(c.witness(0, 2).unwrap(), *c.f());
        assert_eq!(c.witness(1, 1).unwrap(), &c.f().pow(2) * &c.generators()[1]);
        assert_eq!(witness_label(p, 1, 0).unwrap(), "f^2");
        assert_eq!(witness_label(p, 0, 3).unwrap(), "f*g2");
        assert!(c.witness(0, 0).is_err());
        assert!(c.witness(0, 4).is_err());
    }
}
