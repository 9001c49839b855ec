//! The ideals I_n in T = k[x2, x3] and their staircase invariants.

use monocurve::curve::{predict, CurveParams};
use monocurve::mono::{build_In, quotient_length};

fn main() {
    let p = CurveParams::new(1, 1).unwrap();
    println!("q=1 m=1 e={}", p.e());
    for n in 1..=5 {
        let i_n = build_In(p, n);
        let prev = build_In(p, n - 1);
        let colon = i_n.colon_mono((0, p.s()));
        let res = i_n.resolve2().unwrap();
        println!("I_{n} = {i_n}");
        println!(
            "   length {} (closed form {}), reg {}, syzygy degrees {:?}, l(I_{}/(I_{n} : x3^s)) = {}",
            i_n.colength().unwrap(),
            predict(p, n).length,
            i_n.regularity2().unwrap(),
            res.syz_degrees,
            n - 1,
            quotient_length(&prev, &colon).unwrap(),
        );
        assert_eq!(i_n.colon_mono((2, 0)), prev);
    }
}
