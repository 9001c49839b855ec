use monocurve::curve::{Curve, CurveParams};
use monocurve::groebner::{buchberger, Budget, TermOrder};
use monocurve::poly::Rationals;

fn main() {
    let curve = Curve::new(Rationals, CurveParams::new(1, 1).unwrap()).unwrap();
    let budget = Budget::default();

    let gb = buchberger(&curve.prime(), TermOrder::Grevlex, &budget).unwrap();
    println!("reduced basis of p:");
    for g in gb.basis() {
        println!("  {g}");
    }

    let p2 = buchberger(&curve.ordinary_power(2), TermOrder::Grevlex, &budget).unwrap();
    println!("p^2 has {} basis elements", p2.basis().len());

    let f = curve.f();
    let x1f = &curve.x(0) * f;
    println!("f in p^2:    {}", p2.contains_poly(f).unwrap());
    println!("x1*f in p^2: {}", p2.contains_poly(&x1f).unwrap());
    println!("normal form of f mod p^2: {}", p2.normal_form(f).unwrap());

    // the explicit certificates behind x_i f in p^2
    for (i, (lhs, rhs)) in curve.xf_certificates().iter().enumerate() {
        assert_eq!(lhs, rhs);
        println!("certificate {} checks out", i + 1);
    }
}
