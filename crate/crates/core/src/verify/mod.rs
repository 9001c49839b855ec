//! Named, independently runnable checks of every computable claim about the
//! curves `C(q, m)`, collected into a [`VerificationReport`].
//!
//! Every comparison is exact: a check passes iff the rendered expected and
//! actual values are identical strings. Budget exhaustion is reported as
//! `inconclusive`, never as a pass.

mod report;

pub use report::{CheckResult, ParamsView, Status, Summary, VerificationReport};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use thiserror::Error;

use crate::curve::{
    pfaffians4, predict, predicted_containment, predicted_rho, render_ratio, resurgence_gap,
    resurgence_gap_factored, witness_label, Curve, CurveError, CurveParams, Ratio,
    ReesPresentation, X1,
};
use crate::groebner::{
    buchberger, buchberger_truncated, contains, eliminate, ideals_equal, saturate, Budget,
    GroebnerBasis, GroebnerError, PolyIdeal,
};
use crate::mono::{build_In, quotient_length, MonoError, MonomialIdeal};
use crate::poly::{Field, PolyError, Polynomial, RingContext, TermOrder};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Mono(#[from] MonoError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Groups of checks selectable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckKind {
    Kernel,
    Lengths,
    Symbolic,
    Containment,
    Invariants,
    Rees,
}

impl CheckKind {
    pub const ALL: [CheckKind; 6] = [
        CheckKind::Kernel,
        CheckKind::Lengths,
        CheckKind::Symbolic,
        CheckKind::Containment,
        CheckKind::Invariants,
        CheckKind::Rees,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CheckKind::Kernel => "kernel",
            CheckKind::Lengths => "lengths",
            CheckKind::Symbolic => "symbolic",
            CheckKind::Containment => "containment",
            CheckKind::Invariants => "invariants",
            CheckKind::Rees => "rees",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        CheckKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = CheckKind::ALL.iter().map(|k| k.name()).collect();
                format!("unknown check group `{s}` (expected one of {})", names.join(", "))
            })
    }
}

/// What [`Verifier::run`] should do.
#[derive(Debug, Clone)]
pub struct Selection {
    pub checks: Vec<CheckKind>,
    pub n_max: u32,
    pub k_max: u32,
    pub deep: bool,
}

impl Default for Selection {
    fn default() -> Self {
        Selection {
            checks: CheckKind::ALL.to_vec(),
            n_max: 4,
            k_max: 2,
            deep: false,
        }
    }
}

/// Runs checks for one curve, caching Groebner bases of ordinary powers.
pub struct Verifier<F: Field> {
    curve: Curve<F>,
    rees: ReesPresentation<F>,
    budget: Budget,
    timings: bool,
    powers: BTreeMap<u32, GroebnerBasis<F>>,
    symbolic: BTreeMap<u32, PolyIdeal<F>>,
    rho: BTreeMap<u32, u32>,
}

fn yes_no(b: bool, yes: &str, no: &str) -> String {
    if b { yes } else { no }.to_string()
}

impl<F: Field> Verifier<F> {
    pub fn new(field: F, params: CurveParams, budget: Budget) -> Result<Self, CurveError> {
        Ok(Verifier {
            curve: Curve::new(field.clone(), params)?,
            rees: ReesPresentation::new(field, params)?,
            budget,
            timings: false,
            powers: BTreeMap::new(),
            symbolic: BTreeMap::new(),
            rho: BTreeMap::new(),
        })
    }

    /// Record wall-clock milliseconds per check (off by default so reports
    /// are byte-stable).
    pub fn with_timings(mut self, on: bool) -> Self {
        self.timings = on;
        self
    }

    pub fn params(&self) -> CurveParams {
        self.curve.params()
    }

    pub fn curve(&self) -> &Curve<F> {
        &self.curve
    }

    pub fn rees(&self) -> &ReesPresentation<F> {
        &self.rees
    }

    pub fn run(&mut self, sel: &Selection) -> VerificationReport {
        let mut checks = Vec::new();
        for kind in &sel.checks {
            match kind {
                CheckKind::Kernel => checks.push(self.check_kernel()),
                CheckKind::Lengths => checks.extend(self.check_lengths(sel.n_max)),
                CheckKind::Symbolic => checks.extend(self.check_symbolic(sel.n_max)),
                CheckKind::Containment => checks.extend(self.check_containments(sel.k_max)),
                CheckKind::Invariants => {
                    checks.extend(self.check_invariants(sel.n_max, sel.k_max))
                }
                CheckKind::Rees => checks.extend(self.check_rees(sel.deep)),
            }
        }
        VerificationReport::new(self.params(), checks)
    }

    fn timed(
        &mut self,
        name: &str,
        f: impl FnOnce(&mut Self) -> Result<CheckResult, VerifyError>,
    ) -> CheckResult {
        let start = Instant::now();
        let mut res = match f(self) {
            Ok(r) => r,
            Err(VerifyError::Groebner(e)) if e.is_inconclusive() => {
                CheckResult::with_status(name, Status::Inconclusive, "-", format!("inconclusive: {e}"))
            }
            Err(e) => CheckResult::with_status(name, Status::Fail, "-", format!("error: {e}")),
        };
        res.name = name.to_string();
        if self.timings {
            res.millis = start.elapsed().as_millis() as u64;
        }
        res
    }

    /// `p^(n)` as generated by `I_n`, cached.
    pub fn symbolic_ideal(&mut self, n: u32) -> PolyIdeal<F> {
        self.symbolic
            .entry(n)
            .or_insert_with(|| self.curve.symbolic_gens(n))
            .clone()
    }

    /// Basis of `p^r` valid up to `degree`, reusing a cached one when it
    /// reaches far enough.
    fn power_basis(&mut self, r: u32, degree: u32) -> Result<&GroebnerBasis<F>, GroebnerError> {
        let fresh = match self.powers.get(&r) {
            Some(gb) => gb.degree_bound().is_some_and(|d| d < degree),
            None => true,
        };
        if fresh {
            let gb = buchberger_truncated(
                &self.curve.ordinary_power(r),
                TermOrder::Grevlex,
                &self.budget,
                degree,
            )?;
            self.powers.insert(r, gb);
        }
        Ok(&self.powers[&r])
    }

    /// `ideal ⊆ p^r` for homogeneous `ideal`.
    pub fn in_power(&mut self, ideal: &PolyIdeal<F>, r: u32) -> Result<bool, GroebnerError> {
        if r == 0 || ideal.is_zero() {
            return Ok(true);
        }
        let deg = ideal.max_generator_degree().unwrap_or(0);
        self.power_basis(r, deg)?.contains_ideal(ideal)
    }

    /// `p - p^r` membership of a single homogeneous element.
    pub fn poly_in_power(&mut self, p: &Polynomial<F>, r: u32) -> Result<bool, GroebnerError> {
        if r == 0 || p.is_zero() {
            return Ok(true);
        }
        self.power_basis(r, p.degree().unwrap_or(0))?.contains_poly(p)
    }

    /// Least `r` with `I_n` not inside `p^r`, searched outward from the
    /// closed-form value.
    pub fn rho(&mut self, n: u32) -> Result<u32, GroebnerError> {
        if let Some(&r) = self.rho.get(&n) {
            return Ok(r);
        }
        let ideal = self.symbolic_ideal(n);
        let mut r = predicted_rho(self.params(), n);
        if !self.in_power(&ideal, r - 1)? {
            while !self.in_power(&ideal, r - 2)? {
                r -= 1;
            }
            r -= 1;
        } else {
            while self.in_power(&ideal, r)? {
                r += 1;
            }
        }
        self.rho.insert(n, r);
        Ok(r)
    }

    /// The curve's generators lie in the kernel of the parametrisation, the
    /// syzygy matrix composes to zero with them, and each is a 2x2 minor.
    pub fn check_kernel(&mut self) -> CheckResult {
        self.timed("kernel", |v| {
            let c = &v.curve;
            let phi = c.parametrization()?;
            let images = c
                .generators()
                .iter()
                .map(|g| phi.apply(g).map(|p| p.to_string()))
                .collect::<Result<Vec<_>, _>>()?;
            let hb = c.psi().mul(&c.syzygy_matrix())?.is_zero();
            let mm = c.minors_matrix();
            let [g1, g2, g3] = c.generators();
            let minors = [
                (g1, mm.minor_matrix(&[0, 1], &[1, 2]).det2()?),
                (g2, mm.minor_matrix(&[0, 1], &[0, 2]).det2()?),
                (g3, mm.minor_matrix(&[0, 1], &[0, 1]).det2()?),
            ];
            let minors_ok = minors.iter().all(|(g, d)| *d == **g || *d == -*g);
            Ok(CheckResult::compare(
                "kernel",
                "phi(g1,g2,g3)=(0,0,0); psi*syz=0; g=minors",
                format!(
                    "phi(g1,g2,g3)=({}); psi*syz={}; g={}",
                    images.join(","),
                    yes_no(hb, "0", "nonzero"),
                    yes_no(minors_ok, "minors", "not minors"),
                ),
            ))
        })
    }

    /// Staircase computations in `T = k[x2, x3]` for `1 <= n <= n_max`.
    pub fn check_lengths(&mut self, n_max: u32) -> Vec<CheckResult> {
        let p = self.params();
        let (s, e) = (p.s(), p.e());
        let mut out = Vec::new();
        for n in 1..=n_max {
            let i_n = build_In(p, n);
            let i_prev = build_In(p, n - 1);
            let colon = i_n.colon_mono((0, s));
            out.push(self.timed("length.colength", |_| {
                Ok(CheckResult::compare("", predict(p, n).length, i_n.colength()?).n(n))
            }));
            out.push(self.timed("length.colon_containment", |_| {
                Ok(CheckResult::compare(
                    "",
                    "(I_n : x3^(q+m)) in I_(n-1)",
                    yes_no(
                        i_prev.contains(&colon),
                        "(I_n : x3^(q+m)) in I_(n-1)",
                        "(I_n : x3^(q+m)) not in I_(n-1)",
                    ),
                )
                .n(n))
            }));
            out.push(self.timed("length.colon_quotient", |_| {
                Ok(CheckResult::compare("", n, quotient_length(&i_prev, &colon)?).n(n))
            }));
            out.push(self.timed("length.mod_x3", |_| {
                let sum = i_n.sum(&MonomialIdeal::principal((0, s)));
                Ok(CheckResult::compare("", 2 * s * n, sum.colength()?).n(n))
            }));
            out.push(self.timed("length.colon_x2sq", |_| {
                Ok(CheckResult::compare("", &i_prev, i_n.colon_mono((2, 0))).n(n))
            }));
            if n >= 2 {
                out.push(self.timed("length.colon_x3e", |_| {
                    let lhs = build_In(p, n + 2)
                        .sum(&i_n.shift((2, 0)))
                        .colon_mono((0, e));
                    let rhs = i_n.sum(&build_In(p, n - 2).shift((2, 0)));
                    Ok(CheckResult::compare("", rhs, lhs).n(n))
                }));
            }
        }
        out
    }

    /// Identification of `p^(n)` with `I_n`.
    ///
    /// The saturation oracle is independent of the staircase computations:
    /// `x1 f ∈ p^2` gives `x1^{n2} f^{n2} p^{n1} ⊆ p^n`, so
    /// `I_n ⊆ (p^n : x1^∞)`; since `x1 ∉ p`, `(p^n : x1^∞) ⊆ p^(n)`; and
    /// `p^(n) = I_n` closes the sandwich. Equality of `(p^n : x1^∞)` and
    /// `I_n` is checked by mutual Groebner containment.
    pub fn check_symbolic(&mut self, n_max: u32) -> Vec<CheckResult> {
        let p = self.params();
        let mut out = Vec::new();
        for n in 1..=n_max {
            out.push(self.timed("symbolic.t_colength", |v| {
                let ideal = v.symbolic_ideal(n);
                let colength = t_colength(&v.curve, &ideal, &v.budget)?;
                Ok(CheckResult::compare("", predict(p, n).length, colength).n(n))
            }));
            out.push(self.timed("symbolic.saturation", |v| {
                let sat = saturate(&v.curve.ordinary_power(n), &v.curve.x(X1), &v.budget)?;
                let ideal = v.symbolic_ideal(n);
                let eq = ideals_equal(&sat, &ideal, TermOrder::Grevlex, &v.budget)?;
                Ok(CheckResult::compare(
                    "",
                    "(p^n : x1^inf) = I_n",
                    yes_no(eq, "(p^n : x1^inf) = I_n", "(p^n : x1^inf) != I_n"),
                )
                .n(n))
            }));
            if n >= 2 {
                out.push(self.timed("symbolic.product", |v| {
                    let i2 = v.symbolic_ideal(2);
                    let half = i2.power(n / 2);
                    let (rhs, label) = if n % 2 == 0 {
                        (half, format!("I_{n} = (I_2)^{}", n / 2))
                    } else {
                        (
                            v.curve.prime().product(&half)?,
                            format!("I_{n} = p*(I_2)^{}", n / 2),
                        )
                    };
                    let ideal = v.symbolic_ideal(n);
                    let eq = ideals_equal(&ideal, &rhs, TermOrder::Grevlex, &v.budget)?;
                    let actual = if eq { label.clone() } else { label.replace(" = ", " != ") };
                    Ok(CheckResult::compare("", label, actual).n(n))
                }));
            }
        }
        out
    }

    /// Containment pattern `p^(n) ⊆ p^r` for `n = k(2q+2m) + j`, `k <= k_max`,
    /// witnesses for the sharpness, the resulting `rho_n`, the odd-index
    /// containment `p^(2r-1) ⊆ p^r`, and the two Harbourne–Huneke containments.
    pub fn check_containments(&mut self, k_max: u32) -> Vec<CheckResult> {
        let p = self.params();
        let c = p.period();
        let mut out = Vec::new();
        for k in 0..=k_max {
            for j in 0..c {
                if k == 0 && j < 2 {
                    continue;
                }
                let n = k * c + j;
                let r_in = predicted_containment(p, n);
                let rho = predicted_rho(p, n);
                out.push(self.timed("containment.positive", |v| {
                    let ideal = v.symbolic_ideal(n);
                    let ok = v.in_power(&ideal, r_in)?;
                    let expected = format!("p^({n}) in p^{r_in}");
                    let actual = yes_no(ok, &expected, &format!("p^({n}) not in p^{r_in}"));
                    Ok(CheckResult::compare("", expected, actual).n(n).kj(k, j))
                }));
                out.push(self.timed("containment.witness", |v| {
                    let label = witness_label(p, k, j)?;
                    let w = v.curve.witness(k, j)?;
                    let inside = v.poly_in_power(&w, rho)?;
                    let expected = format!("{label} not in p^{rho}");
                    let actual = yes_no(!inside, &expected, &format!("{label} in p^{rho}"));
                    Ok(CheckResult::compare("", expected, actual).n(n).kj(k, j))
                }));
                out.push(self.timed("containment.rho", |v| {
                    Ok(CheckResult::compare("", rho, v.rho(n)?).n(n).kj(k, j))
                }));
            }
        }
        for r in 1..=3 {
            let n = 2 * r - 1;
            out.push(self.timed("containment.odd_index", |v| {
                let ideal = v.symbolic_ideal(n);
                let ok = v.in_power(&ideal, r)?;
                let expected = format!("p^({n}) in p^{r}");
                let actual = yes_no(ok, &expected, &format!("p^({n}) not in p^{r}"));
                Ok(CheckResult::compare("", expected, actual).n(n))
            }));
        }
        for n in 1..=2 {
            for (name, sym, a) in [
                ("containment.harbourne_huneke_3n", 3 * n, 2 * n),
                ("containment.harbourne_huneke_2n", 2 * n, n),
            ] {
                out.push(self.timed(name, |v| {
                    let big = v.curve.maximal_times_prime_power(a, n);
                    let ideal = v.symbolic_ideal(sym);
                    let ok = contains(&big, &ideal, TermOrder::Grevlex, &v.budget)?;
                    let expected = format!("p^({sym}) in m^{a}*p^{n}");
                    let actual = yes_no(ok, &expected, &format!("p^({sym}) not in m^{a}*p^{n}"));
                    Ok(CheckResult::compare("", expected, actual).n(n))
                }));
            }
        }
        out
    }

    /// Initial degree, Waldschmidt ratios, regularity, resurgence.
    pub fn check_invariants(&mut self, n_max: u32, k_max: u32) -> Vec<CheckResult> {
        let p = self.params();
        let mut out = Vec::new();
        for n in 1..=n_max {
            let pred = predict(p, n);
            out.push(self.timed("invariant.alpha", |v| {
                let alpha = v.symbolic_ideal(n).min_generator_degree().unwrap_or(0);
                Ok(CheckResult::compare("", pred.alpha, alpha).n(n))
            }));
            out.push(self.timed("invariant.waldschmidt_ratio", |v| {
                let alpha = v.symbolic_ideal(n).min_generator_degree().unwrap_or(0);
                let ratio = Ratio::new(alpha as i64, n as i64);
                Ok(CheckResult::compare("", render_ratio(&pred.waldschmidt), render_ratio(&ratio)).n(n))
            }));
            out.push(self.timed("invariant.regularity", |_| {
                let reg = build_In(p, n).regularity2()?;
                Ok(CheckResult::compare("", render_ratio(&pred.reg), render_ratio(&reg)).n(n))
            }));
        }
        out.push(self.timed("invariant.reg_prime", |_| {
            let reg = build_In(p, 1).regularity2()?;
            Ok(CheckResult::compare("", p.s(), render_ratio(&reg)).n(1))
        }));
        let closed = predict(p, 1).resurgence;
        out.push(self.timed("invariant.resurgence_table", |v| {
            let top = k_max * p.period() + p.period() - 1;
            let mut best = (Ratio::from_integer(0), 0);
            for n in 1..=top {
                let ratio = Ratio::new(n as i64, v.rho(n)? as i64);
                if ratio > best.0 {
                    best = (ratio, n);
                }
            }
            let expected = format!("n/rho_n < {} for n <= {top}", render_ratio(&closed));
            let actual = if best.0 < closed {
                expected.clone()
            } else {
                format!("n/rho_n = {} at n = {}", render_ratio(&best.0), best.1)
            };
            Ok(CheckResult::compare("", expected, actual))
        }));
        out.push(self.timed("invariant.resurgence_closed_form", |_| {
            // limit of n / rho_n along the containment pattern
            let c = p.period() as i64;
            let limit = Ratio::new(c, c - 1);
            Ok(CheckResult::compare(
                "",
                format!("closed form {}", render_ratio(&closed)),
                format!("closed form {}", render_ratio(&limit)),
            ))
        }));
        out.push(self.timed("invariant.waldschmidt_closed_form", |_| {
            Ok(CheckResult::compare(
                "",
                "closed form 2",
                format!("closed form {}", render_ratio(&predict(p, 1).waldschmidt)),
            ))
        }));
        out.push(self.timed("invariant.resurgence_vs_reg", |_| {
            let reg = build_In(p, 1).regularity2()?;
            let gap = closed - reg / Ratio::from_integer(2);
            let sign = |r: Ratio| if r >= Ratio::from_integer(0) { "nonnegative" } else { "negative" };
            let expected_sign = if p.q() == 1 && p.m() == 1 { "nonnegative" } else { "negative" };
            let factored = resurgence_gap_factored(p);
            debug_assert_eq!(factored, resurgence_gap(p));
            Ok(CheckResult::compare(
                "",
                format!("{expected_sign} ({})", render_ratio(&factored)),
                format!("{} ({})", sign(gap), render_ratio(&gap)),
            ))
        }));
        out
    }

    /// The presentation of the symbolic Rees algebra.
    pub fn check_rees(&mut self, deep: bool) -> Vec<CheckResult> {
        let mut out = Vec::new();
        out.push(self.timed("rees.tau", |v| {
            let tau = v.rees.tau(&v.curve)?;
            let images = v
                .rees
                .generators()
                .iter()
                .map(|g| tau.apply(g).map(|p| p.to_string()))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(CheckResult::compare("", "0,0,0,0,0", images.join(",")))
        }));
        out.push(self.timed("rees.skew", |v| {
            Ok(CheckResult::compare("", true, v.rees.phi2_displayed().is_skew()))
        }));
        out.push(self.timed("rees.displayed_sign", |v| {
            let phi1 = v.rees.phi1();
            let as_displayed = phi1.mul(&v.rees.phi2_displayed())?.is_zero();
            let corrected = phi1.mul(&v.rees.phi2())?.is_zero();
            let expected = "complex after negating first row and column";
            let actual = match (as_displayed, corrected) {
                (true, _) => "complex as displayed",
                (false, true) => expected,
                (false, false) => "not a complex",
            };
            Ok(CheckResult::compare("", expected, actual))
        }));
        out.push(self.timed("rees.complex_left", |v| {
            let z = v.rees.phi1().mul(&v.rees.phi2())?.is_zero();
            Ok(CheckResult::compare("", "phi1*phi2 = 0", yes_no(z, "phi1*phi2 = 0", "phi1*phi2 != 0")))
        }));
        out.push(self.timed("rees.complex_right", |v| {
            let z = v.rees.phi2().mul(&v.rees.phi3())?.is_zero();
            Ok(CheckResult::compare("", "phi2*phi3 = 0", yes_no(z, "phi2*phi3 = 0", "phi2*phi3 != 0")))
        }));
        out.push(self.timed("rees.pfaffians", |v| {
            let pf = pfaffians4(&v.rees.phi2_displayed())?;
            let ring = v.rees.ring().clone();
            let pf_ideal = PolyIdeal::new(&ring, pf)?;
            let k = PolyIdeal::new(&ring, v.rees.generators().to_vec())?;
            let eq = ideals_equal(&pf_ideal, &k, TermOrder::Grevlex, &v.budget)?;
            Ok(CheckResult::compare("", "Pf_4 = K", yes_no(eq, "Pf_4 = K", "Pf_4 != K")))
        }));
        if deep {
            out.push(self.timed("rees.kernel", |v| {
                let ker = kernel_of_tau(&v.curve, &v.rees, &v.budget)?;
                let k = PolyIdeal::new(v.rees.ring(), v.rees.generators().to_vec())?;
                let eq = ideals_equal(&ker, &k, TermOrder::Grevlex, &v.budget)?;
                Ok(CheckResult::compare("", "ker tau = K", yes_no(eq, "ker tau = K", "ker tau != K")))
            }));
            out.push(self.timed("rees.fiber_cone", |v| {
                let ring = v.rees.ring().clone();
                let mut gens = v.rees.generators().to_vec();
                gens.extend((0..4).map(|i| Polynomial::var(&ring, i)));
                let km = PolyIdeal::new(&ring, gens)?;
                let gb = buchberger(&km, TermOrder::Grevlex, &v.budget)?;
                let (u1, u2) = (Polynomial::var(&ring, 4), Polynomial::var(&ring, 5));
                let quad = [(&u1 * &u1), (&u1 * &u2), (&u2 * &u2)];
                let members = quad
                    .iter()
                    .map(|m| gb.contains_poly(m))
                    .collect::<Result<Vec<_>, _>>()?;
                let expected = "u1^2, u1*u2, u2^2 in K + m";
                let actual = if members.iter().all(|&b| b) {
                    expected.to_string()
                } else {
                    format!("membership {members:?}")
                };
                Ok(CheckResult::compare("", expected, actual))
            }));
        }
        out
    }
}

/// `ℓ(T / (J + (x1, x4)) / (x1, x4))` via a Groebner basis of the image of `J`
/// in `T` and its leading-term staircase.
pub fn t_colength<F: Field>(
    curve: &Curve<F>,
    ideal: &PolyIdeal<F>,
    budget: &Budget,
) -> Result<u64, VerifyError> {
    let to_t = curve.to_t()?;
    let images = ideal
        .gens()
        .iter()
        .map(|g| to_t.apply(g))
        .collect::<Result<Vec<_>, _>>()?;
    let image = PolyIdeal::new(to_t.target(), images)?;
    let gb = buchberger(&image, TermOrder::Grevlex, budget)?;
    Ok(MonomialIdeal::from_monomials(&gb.leading_monomials())?.colength()?)
}

/// `ker tau` by eliminating `t` from `(u_i - g_i t, v - f t^2)` in
/// `k[x1..x4, u1, u2, u3, v, t]`.
pub fn kernel_of_tau<F: Field>(
    curve: &Curve<F>,
    rees: &ReesPresentation<F>,
    budget: &Budget,
) -> Result<PolyIdeal<F>, VerifyError> {
    let names = ["x1", "x2", "x3", "x4", "u1", "u2", "u3", "v", "t"];
    let big = RingContext::new(rees.ring().field().clone(), &names, TermOrder::Grevlex)?;
    let t = Polynomial::var(&big, 8);
    let base = [0, 1, 2, 3];
    let mut gens = Vec::new();
    for (i, g) in curve.generators().iter().enumerate() {
        gens.push(&Polynomial::var(&big, 4 + i) - &(&g.embed(&big, &base)? * &t));
    }
    gens.push(&Polynomial::var(&big, 7) - &(&curve.f().embed(&big, &base)? * &t.pow(2)));
    let ker = eliminate(&PolyIdeal::new(&big, gens)?, &[8], budget)?;
    let map: Vec<usize> = (0..8).collect();
    let gens = ker
        .gens()
        .iter()
        .map(|g| g.embed(rees.ring(), &map))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PolyIdeal::new(rees.ring(), gens)?)
}
