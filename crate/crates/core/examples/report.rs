use monocurve::curve::CurveParams;
use monocurve::groebner::Budget;
use monocurve::poly::Rationals;
use monocurve::verify::{CheckKind, Selection, Verifier};

fn main() {
    let params = CurveParams::new(1, 1).unwrap();
    let mut v = Verifier::new(Rationals, params, Budget::default()).unwrap();
    let report = v.run(&Selection {
        checks: vec![CheckKind::Lengths, CheckKind::Invariants, CheckKind::Rees],
        n_max: 3,
        ..Selection::default()
    });
    print!("{}", report.to_text());
    if std::env::args().any(|a| a == "--json") {
        println!("{}", report.to_json());
    }
    std::process::exit(report.summary.exit_code());
}
