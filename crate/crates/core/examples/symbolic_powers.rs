//! p^(n) computed two ways: as the saturation (p^n : x1^inf) and as the
//! explicit ideal sum of f^b p^a.

use monocurve::curve::{Curve, CurveParams};
use monocurve::groebner::{ideals_equal, saturate, Budget, TermOrder};
use monocurve::poly::Rationals;
use monocurve::verify::t_colength;

fn main() {
    let budget = Budget::default();
    for (q, m) in [(1, 1), (2, 1)] {
        let curve = Curve::new(Rationals, CurveParams::new(q, m).unwrap()).unwrap();
        for n in 1..=3 {
            let sat = saturate(&curve.ordinary_power(n), &curve.x(0), &budget).unwrap();
            let explicit = curve.symbolic_gens(n);
            let same = ideals_equal(&sat, &explicit, TermOrder::Grevlex, &budget).unwrap();
            println!(
                "(q,m)=({q},{m}) n={n}: {} generators, saturation agrees: {same}, alpha = {:?}, colength in T = {}",
                explicit.gens().len(),
                explicit.min_generator_degree(),
                t_colength(&curve, &explicit, &budget).unwrap(),
            );
        }
        let labels: Vec<_> = curve.symbolic_terms(2).into_iter().map(|(l, _)| l).collect();
        println!("  generators of p^(2): {}", labels.join(", "));
    }
}
