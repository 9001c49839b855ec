use serde::Serialize;

use super::CurveParams;

pub type Ratio = num_rational::Ratio<i64>;

/// Closed-form values of the invariants of `p^(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantPrediction {
    pub n: u32,
    /// Least degree of an element of `p^(n)`.
    pub alpha: u32,
    /// Length of `T / I_n`.
    pub length: u64,
    #[serde(serialize_with = "ser_ratio")]
    pub resurgence: Ratio,
    #[serde(serialize_with = "ser_ratio")]
    pub waldschmidt: Ratio,
    /// Regularity of `R / p^(n)`.
    #[serde(serialize_with = "ser_ratio")]
    pub reg: Ratio,
    #[serde(serialize_with = "ser_ratio")]
    pub theta: Ratio,
}

fn ser_ratio<S: serde::Serializer>(r: &Ratio, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&render_ratio(r))
}

/// `"p/q"`, or just `"p"` when the denominator is one.
pub fn render_ratio(r: &Ratio) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `0` for even `n`, `-1/2` for odd `n`.
pub fn regularity_shift(n: u32) -> Ratio {
    if n % 2 == 0 {
        Ratio::from_integer(0)
    } else {
        Ratio::new(-1, 2)
    }
}

pub fn predict(params: CurveParams, n: u32) -> InvariantPrediction {
    let e = params.e() as i64;
    let n64 = n as i64;
    let theta = regularity_shift(n);
    InvariantPrediction {
        n,
        alpha: 2 * n,
        length: (e * n64 * (n64 + 1) / 2) as u64,
        resurgence: Ratio::new(e - 1, e - 2),
        waldschmidt: Ratio::from_integer(2),
        reg: Ratio::new(n64 * e, 2) + theta,
        theta,
    }
}

/// Least `r` with `p^(n)` not inside `p^r`, for `n >= 1`.
/// Writing `n = k(2q+2m) + j` with `0 <= j < 2q+2m`, this is
/// `k(2q+2m-1) + j + 1` for `j` in {0, 1} and `k(2q+2m-1) + j` otherwise.
pub fn predicted_rho(params: CurveParams, n: u32) -> u32 {
    assert!(n >= 1, "rho_n needs n >= 1");
    let c = params.period();
    let (k, j) = (n / c, n % c);
    if j <= 1 {
        k * (c - 1) + j + 1
    } else {
        k * (c - 1) + j
    }
}

/// Largest ordinary power containing `p^(n)`, i.e. `predicted_rho - 1`.
pub fn predicted_containment(params: CurveParams, n: u32) -> u32 {
    predicted_rho(params, n) - 1
}

/// `rho(p) - reg(R/p) / gamma(p)` with `reg(R/p) = q + m` and `gamma = 2`.
pub fn resurgence_gap(params: CurveParams) -> Ratio {
    let s = params.s() as i64;
    let e = params.e() as i64;
    Ratio::new(e - 1, e - 2) - Ratio::new(s, 2)
}

/// The same gap in the factored form `(q+m)(5-2q-2m) / (2(2q+2m-1))`.
pub fn resurgence_gap_factored(params: CurveParams) -> Ratio {
    let s = params.s() as i64;
    Ratio::new(s * (5 - 2 * s), 2 * (2 * s - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q1_m1_values() {
        let p = CurveParams::new(1, 1).unwrap();
        let a = predict(p, 2);
        assert_eq!((a.alpha, a.length), (4, 15));
        assert_eq!(a.reg, Ratio::from_integer(5));
        assert_eq!(a.resurgence, Ratio::new(4, 3));
        assert_eq!(a.waldschmidt, Ratio::from_integer(2));
        assert_eq!(predict(p, 1).reg, Ratio::from_integer(2));
        assert_eq!(predict(p, 6).reg, Ratio::from_integer(15));
    }

    #[test]
    fn rho_pattern() {
        let p = CurveParams::new(1, 1).unwrap();
        let rho: Vec<u32> = (1..=9).map(|n| predicted_rho(p, n)).collect();
        assert_eq!(rho, vec![2, 2, 3, 4, 5, 5, 6, 7, 8]);
        for n in 1..40 {
            assert!(Ratio::new(n as i64, predicted_rho(p, n) as i64) < Ratio::new(4, 3));
        }
    }

    #[test]
    fn gap_forms_agree() {
        for q in 1..6 {
            for m in 1..6 {
                if let Ok(p) = CurveParams::new(q, m) {
                    assert_eq!(resurgence_gap(p), resurgence_gap_factored(p));
                    assert_eq!(resurgence_gap(p) >= Ratio::from_integer(0), q == 1 && m == 1);
                }
            }
        }
    }
}
