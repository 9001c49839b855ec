//! Monomial ideals in `T = k[x2, x3]` stored as staircases.
//!
//! A monomial `x2^a x3^b` is the pair `(a, b)`. Minimal generators are kept
//! sorted by strictly increasing `a` (so `b` strictly decreases).

use std::fmt;

use thiserror::Error;

use crate::curve::{CurveParams, Ratio};
use crate::poly::Monomial;

pub type Mono2 = (u32, u32);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoError {
    #[error("ideal is not Artinian (no pure power of {0})")]
    NotArtinian(&'static str),
    #[error("the zero ideal has no resolution")]
    ZeroIdeal,
    #[error("the unit ideal has a zero quotient")]
    UnitIdeal,
    #[error("containment violated: {0}")]
    NotContained(String),
    #[error("expected two-variable monomials, got arity {0}")]
    Arity(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MonomialIdeal {
    gens: Vec<Mono2>,
}

fn divides(u: Mono2, v: Mono2) -> bool {
    u.0 <= v.0 && u.1 <= v.1
}

impl MonomialIdeal {
    /// Minimal staircase generating set of the ideal spanned by `gens`.
    pub fn minimalize<I: IntoIterator<Item = Mono2>>(gens: I) -> Self {
        let mut all: Vec<Mono2> = gens.into_iter().collect();
        all.sort_unstable();
        all.dedup();
        let mut out: Vec<Mono2> = Vec::with_capacity(all.len());
        for g in all {
            // sorted by a then b: g is redundant iff some kept generator has b <= g.b
            match out.last() {
                Some(&(_, b)) if b <= g.1 => {}
                _ => out.push(g),
            }
        }
        MonomialIdeal { gens: out }
    }

    pub fn zero() -> Self {
        MonomialIdeal { gens: Vec::new() }
    }

    pub fn unit() -> Self {
        MonomialIdeal { gens: vec![(0, 0)] }
    }

    pub fn principal(m: Mono2) -> Self {
        MonomialIdeal { gens: vec![m] }
    }

    /// From two-variable [`Monomial`]s, e.g. leading monomials of a basis in `T`.
    pub fn from_monomials<'a, I: IntoIterator<Item = &'a Monomial>>(ms: I) -> Result<Self, MonoError> {
        let mut gens = Vec::new();
        for m in ms {
            if m.arity() != 2 {
                return Err(MonoError::Arity(m.arity()));
            }
            gens.push((m.exponent(0), m.exponent(1)));
        }
        Ok(Self::minimalize(gens))
    }

    pub fn gens(&self) -> &[Mono2] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first() == Some(&(0, 0))
    }

    pub fn contains_monomial(&self, m: Mono2) -> bool {
        self.gens.iter().any(|&g| divides(g, m))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|&g| self.contains_monomial(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Self {
        Self::minimalize(self.gens.iter().chain(&other.gens).copied())
    }

    pub fn product(&self, other: &MonomialIdeal) -> Self {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for &(a, b) in &self.gens {
            for &(c, d) in &other.gens {
                gens.push((a + c, b + d));
            }
        }
        Self::minimalize(gens)
    }

    pub fn power(&self, n: u32) -> Self {
        let mut acc = Self::unit();
        for _ in 0..n {
            acc = acc.product(self);
        }
        acc
    }

    /// `v * self`.
    pub fn shift(&self, v: Mono2) -> Self {
        MonomialIdeal {
            gens: self.gens.iter().map(|&(a, b)| (a + v.0, b + v.1)).collect(),
        }
    }

    /// `(self : v)`, generated by `u / gcd(u, v)`.
    pub fn colon_mono(&self, v: Mono2) -> Self {
        Self::minimalize(
            self.gens
                .iter()
                .map(|&(a, b)| (a.saturating_sub(v.0), b.saturating_sub(v.1))),
        )
    }

    pub fn is_artinian(&self) -> bool {
        self.check_artinian().is_ok()
    }

    fn check_artinian(&self) -> Result<(), MonoError> {
        match (self.gens.first(), self.gens.last()) {
            (Some(&(0, _)), Some(&(_, 0))) => Ok(()),
            (Some(&(0, _)), _) => Err(MonoError::NotArtinian("x2")),
            _ => Err(MonoError::NotArtinian("x3")),
        }
    }

    /// `ℓ(T / self)`: the monomials under the staircase, summed column block by
    /// column block.
    pub fn colength(&self) -> Result<u64, MonoError> {
        self.check_artinian()?;
        Ok(self
            .gens
            .windows(2)
            .map(|w| (w[1].0 - w[0].0) as u64 * w[0].1 as u64)
            .sum())
    }

    /// Minimal graded free resolution of `T / self`.
    pub fn resolve2(&self) -> Result<Resolution2, MonoError> {
        if self.is_zero() {
            return Err(MonoError::ZeroIdeal);
        }
        Ok(Resolution2 {
            gen_degrees: self.gens.iter().map(|&(a, b)| a + b).collect(),
            syz_degrees: self
                .gens
                .windows(2)
                .map(|w| w[1].0 + w[0].1)
                .collect(),
        })
    }

    /// `reg(T / self)`.
    pub fn regularity2(&self) -> Result<Ratio, MonoError> {
        if self.is_unit() {
            return Err(MonoError::UnitIdeal);
        }
        self.resolve2()?.regularity()
    }
}

/// `ℓ(a / b)` for `b ⊆ a` with `T / b` Artinian.
pub fn quotient_length(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<u64, MonoError> {
    if !a.contains(b) {
        return Err(MonoError::NotContained(format!("{b} is not inside {a}")));
    }
    Ok(b.colength()? - a.colength()?)
}

/// Degrees in the Hilbert–Burch resolution
/// `0 -> ⊕ T(-syz) -> ⊕ T(-gen) -> T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution2 {
    pub gen_degrees: Vec<u32>,
    pub syz_degrees: Vec<u32>,
}

impl Resolution2 {
    pub fn regularity(&self) -> Result<Ratio, MonoError> {
        let g = self.gen_degrees.iter().max().ok_or(MonoError::ZeroIdeal)?;
        let mut reg = *g as i64 - 1;
        if let Some(s) = self.syz_degrees.iter().max() {
            reg = reg.max(*s as i64 - 2);
        }
        Ok(Ratio::from_integer(reg))
    }
}

/// `pT = (x2^2, x2 x3^{q+m}, x3^{q+m+1})`.
pub fn prime_in_t(params: CurveParams) -> MonomialIdeal {
    let s = params.s();
    MonomialIdeal::minimalize([(2, 0), (1, s), (0, s + 1)])
}

/// `fT = (x3^{2(q+m)+1})`.
pub fn f_in_t(params: CurveParams) -> MonomialIdeal {
    MonomialIdeal::principal((0, params.e()))
}

/// `I_n = sum_{n1 + 2 n2 = n} x3^{e n2} (pT)^{n1}`; `I_0 = T`.
#[allow(non_snake_case)]
pub fn build_In(params: CurveParams, n: u32) -> MonomialIdeal {
    let pt = prime_in_t(params);
    let mut gens = Vec::new();
    for n2 in 0..=n / 2 {
        let n1 = n - 2 * n2;
        gens.extend(pt.power(n1).shift((0, params.e() * n2)).gens);
    }
    MonomialIdeal::minimalize(gens)
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, &(a, b)) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", render_mono2((a, b)))?;
        }
        write!(f, ")")
    }
}

/// `x2^a*x3^b` in the polynomial text grammar.
pub fn render_mono2((a, b): Mono2) -> String {
    let part = |name: &str, e: u32| match e {
        0 => None,
        1 => Some(name.to_string()),
        e => Some(format!("{name}^{e}")),
    };
    match (part("x2", a), part("x3", b)) {
        (None, None) => "1".into(),
        (Some(x), None) | (None, Some(x)) => x,
        (Some(x), Some(y)) => format!("{x}*{y}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ideal(g: &[Mono2]) -> MonomialIdeal {
        MonomialIdeal::minimalize(g.iter().copied())
    }

    fn p11() -> CurveParams {
        CurveParams::new(1, 1).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal(&[(2, 0), (2, 1)]).gens(), &[(2, 0)]);
        assert_eq!(ideal(&[(2, 0), (1, 2), (0, 3)]).gens(), &[(0, 3), (1, 2), (2, 0)]);
        assert!(ideal(&[]).is_zero());
    }

    #[test]
    fn square_of_pt() {
        let sq = prime_in_t(p11()).power(2);
        // x2^4, x2^3 x3^2, x2^2 x3^3, x2 x3^5, x3^6
        assert_eq!(sq, ideal(&[(4, 0), (3, 2), (2, 3), (1, 5), (0, 6)]));
        let a = ideal(&[(2, 1), (0, 4)]);
        assert_eq!(a.product(&MonomialIdeal::unit()), a);
        assert_eq!(a.power(0), MonomialIdeal::unit());
    }

    #[test]
    fn small_in() {
        assert_eq!(build_In(p11(), 1), ideal(&[(2, 0), (1, 2), (0, 3)]));
        assert_eq!(build_In(p11(), 2), ideal(&[(4, 0), (3, 2), (2, 3), (0, 5)]));
        assert_eq!(build_In(p11(), 0), MonomialIdeal::unit());
    }

    #[test]
    fn colon_examples() {
        let a = ideal(&[(2, 0), (1, 2), (0, 3)]);
        assert_eq!(a.colon_mono((0, 2)), ideal(&[(1, 0), (0, 1)]));
        assert_eq!(a.colon_mono((0, 0)), a);
        assert_eq!(ideal(&[(2, 0)]).colon_mono((2, 0)), MonomialIdeal::unit());
    }

    #[test]
    fn colength_examples() {
        assert_eq!(build_In(p11(), 1).colength(), Ok(5));
        assert_eq!(build_In(p11(), 2).colength(), Ok(15));
        assert_eq!(MonomialIdeal::unit().colength(), Ok(0));
        assert!(ideal(&[(2, 0)]).colength().is_err());
        assert!(MonomialIdeal::zero().colength().is_err());
    }

    #[test]
    fn quotient_length_examples() {
        let p = p11();
        let i1 = build_In(p, 1);
        let i2 = build_In(p, 2);
        assert_eq!(quotient_length(&i1, &build_In(p, 2).colon_mono((0, 2))), Ok(2));
        assert_eq!(quotient_length(&i2, &build_In(p, 3).colon_mono((0, 2))), Ok(3));
        assert_eq!(quotient_length(&i2, &i2), Ok(0));
        assert!(quotient_length(&i2, &i1).is_err());
    }

    #[test]
    fn resolutions() {
        let a = ideal(&[(2, 0), (1, 7), (0, 8)]);
        assert_eq!(a.resolve2().unwrap().syz_degrees, vec![9, 9]);
        let r = ideal(&[(2, 0)]).resolve2().unwrap();
        assert_eq!((r.gen_degrees, r.syz_degrees), (vec![2], vec![]));
        assert_eq!(ideal(&[(2, 0), (0, 5)]).resolve2().unwrap().syz_degrees, vec![7]);
        assert!(MonomialIdeal::zero().resolve2().is_err());
    }

    #[test]
    fn regularity_examples() {
        let p = p11();
        let x3_5 = MonomialIdeal::principal((0, 5));
        assert_eq!(build_In(p, 2).sum(&x3_5).regularity2(), Ok(Ratio::from_integer(5)));
        assert_eq!(
            build_In(p, 2).sum(&ideal(&[(2, 0)])),
            ideal(&[(2, 0), (0, 5)])
        );
        assert_eq!(ideal(&[(2, 0), (0, 5)]).regularity2(), Ok(Ratio::from_integer(5)));
        assert_eq!(ideal(&[(1, 0), (0, 1)]).regularity2(), Ok(Ratio::from_integer(0)));
    }

    #[test]
    fn display() {
        assert_eq!(build_In(p11(), 1).to_string(), "(x3^3, x2*x3^2, x2^2)");
        assert_eq!(MonomialIdeal::unit().to_string(), "(1)");
    }

    // Brute-force lattice oracle over the bounding box.
    fn in_ideal_brute(gens: &[Mono2], m: Mono2) -> bool {
        gens.iter().any(|&g| divides(g, m))
    }

    fn arb_gens() -> impl Strategy<Value = Vec<Mono2>> {
        prop::collection::vec((0u32..=12, 0u32..=12), 1..=6)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn staircase_matches_lattice_oracle(raw in arb_gens(), v in (0u32..=6, 0u32..=6)) {
            let a = MonomialIdeal::minimalize(raw.iter().copied());
            // staircase shape
            for w in a.gens().windows(2) {
                prop_assert!(w[0].0 < w[1].0 && w[0].1 > w[1].1);
            }
            let colon = a.colon_mono(v);
            for i in 0..=14 {
                for j in 0..=14 {
                    prop_assert_eq!(a.contains_monomial((i, j)), in_ideal_brute(&raw, (i, j)));
                    prop_assert_eq!(
                        colon.contains_monomial((i, j)),
                        in_ideal_brute(&raw, (i + v.0, j + v.1))
                    );
                }
            }
            // add pure powers so the quotient is finite, then count lattice points
            let mut art = raw.clone();
            art.push((13, 0));
            art.push((0, 13));
            let b = MonomialIdeal::minimalize(art.iter().copied());
            let brute = (0..13u32)
                .flat_map(|i| (0..13u32).map(move |j| (i, j)))
                .filter(|&m| !in_ideal_brute(&art, m))
                .count() as u64;
            prop_assert_eq!(b.colength().unwrap(), brute);
        }
    }
}
