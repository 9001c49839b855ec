use monocurve::curve::{pfaffians4, Curve, CurveParams, ReesPresentation};
use monocurve::groebner::{ideals_equal, Budget, PolyIdeal, TermOrder};
use monocurve::poly::Rationals;

fn main() {
    let params = CurveParams::new(1, 1).unwrap();
    let curve = Curve::new(Rationals, params).unwrap();
    let rees = ReesPresentation::new(Rationals, params).unwrap();

    let tau = rees.tau(&curve).unwrap();
    for (name, g) in ReesPresentation::<Rationals>::generator_names().iter().zip(rees.generators()) {
        println!("{name} = {g}");
        assert!(tau.apply(g).unwrap().is_zero());
    }

    let phi2 = rees.phi2();
    println!("phi2 skew: {}", phi2.is_skew());
    println!("phi1*phi2 = 0: {}", rees.phi1().mul(&phi2).unwrap().is_zero());
    println!("phi2*phi3 = 0: {}", phi2.mul(&rees.phi3()).unwrap().is_zero());

    let ring = rees.ring();
    let pf = PolyIdeal::new(ring, pfaffians4(&rees.phi2_displayed()).unwrap()).unwrap();
    let k = PolyIdeal::new(ring, rees.generators().to_vec()).unwrap();
    let same = ideals_equal(&pf, &k, TermOrder::Grevlex, &Budget::default()).unwrap();
    println!("Pfaffians generate K: {same}");
}
