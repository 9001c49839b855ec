use monocurve::curve::{Curve, CurveParams};
use monocurve::poly::{parse, Rationals, RingContext, TermOrder};

fn main() {
    let ring = RingContext::new(Rationals, &["x", "y", "z"], TermOrder::Grevlex).unwrap();
    let a = parse("(x + y)^3 - 1/2*x*z", &ring).unwrap();
    let b = parse("x - y", &ring).unwrap();
    println!("a       = {a}");
    println!("a * b   = {}", &a * &b);
    println!("deg a   = {:?}", a.degree());
    // printing and parsing back gives the same polynomial
    assert_eq!(parse(&a.to_string(), &ring).unwrap(), a);

    // the curve generators vanish on the parametrization
    let curve = Curve::new(Rationals, CurveParams::new(1, 1).unwrap()).unwrap();
    let sigma = curve.parametrization().unwrap();
    for (name, g) in ["g1", "g2", "g3"].iter().zip(curve.generators()) {
        println!("{name} = {g}  ->  {}", sigma.apply(g).unwrap());
    }
    println!("f  = {}", curve.f_expanded());
    assert_eq!(curve.f(), &curve.f_expanded());
}
