//! Which ordinary power contains p^(n), and the resulting ratios n / rho_n.

use monocurve::curve::{predicted_rho, render_ratio, CurveParams, Ratio};
use monocurve::groebner::Budget;
use monocurve::poly::Rationals;
use monocurve::verify::Verifier;

fn main() {
    let q = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let m = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(1);
    let params = CurveParams::new(q, m).expect("gcd condition");
    let mut v = Verifier::new(Rationals, params, Budget::default()).unwrap();

    println!(" n  rho_n  closed form  n/rho_n");
    let mut best = Ratio::from_integer(0);
    for n in 1..=2 * params.period() {
        let rho = v.rho(n).unwrap();
        let ratio = Ratio::new(n as i64, rho as i64);
        best = best.max(ratio);
        let mark = if rho == predicted_rho(params, n) { "" } else { "  <- differs" };
        println!(
            "{n:>2}  {rho:>5}  {:>11}  {:>7}{mark}",
            predicted_rho(params, n),
            render_ratio(&ratio)
        );
    }
    println!("largest n/rho_n seen: {}", render_ratio(&best));
}
