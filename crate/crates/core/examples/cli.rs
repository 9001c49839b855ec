// The command line can also be driven in-process.

fn main() {
    let runs: [&[&str]; 3] = [
        &["invariants", "--q", "1", "--m", "1", "--n", "2"],
        &["containment", "--q", "1", "--m", "1", "--sym", "4", "--ord", "4"],
        &["membership", "--q", "2", "--m", "1", "--element", "x1*f", "--ideal", "p^2"],
    ];
    for args in runs {
        println!("$ monocurve {}", args.join(" "));
        let argv = std::iter::once("monocurve").chain(args.iter().copied());
        let code = monocurve::cli::run(argv, &mut std::io::stdout(), &mut std::io::stderr());
        println!("(exit {code})\n");
    }
}
