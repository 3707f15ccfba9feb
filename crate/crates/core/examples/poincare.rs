//! Poincaré polynomials from the recursion, next to the point counts they
//! predict.
//!
//! `cargo run --example poincare`

use flagmann::linalg::PrimeField;
use flagmann::oracle::count_flags;
use flagmann::parse::parse_flag_type;
use flagmann::rep::build_rep;
use flagmann::{FlagEngine, Quiver, RootMultiset};

fn main() -> flagmann::Result<()> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data");
    let cases = [
        ("point", "1x3", "1;2;3"),
        ("a2", "1,1+0,1", "0,1;1,2"),
        ("a2", "1,1", "1,0;1,1"),
        ("a3", "1,1,1+0,1,1+0,0,1", "0,0,1;0,1,2;1,2,3"),
        ("d4", "1,1,1,2", "0,0,0,1;1,1,1,2"),
        ("d4", "1,1,1,2+1,0,0,1", "0,0,0,1;1,0,0,2;2,1,1,3"),
        ("d4", "1,1,1,2x2", "0,0,0,2;1,1,1,3;2,2,2,4"),
    ];
    for (quiver, rep, flag) in cases {
        let q = Quiver::from_file(format!("{dir}/{quiver}.qv"))?;
        let roots = RootMultiset::parse_inline(&q, rep)?;
        let u = parse_flag_type(flag)?;
        let poly = FlagEngine::new(&q)?.poincare(&roots, &u)?;
        let counts: Vec<String> = [2, 3, 5]
            .iter()
            .map(|&p| {
                let rep = build_rep(&q, &roots, &PrimeField::new(p)?)?;
                Ok(format!("{}={}", p, count_flags(&rep, &u)?))
            })
            .collect::<flagmann::Result<_>>()?;
        let factored = poly.factored().map(|f| format!(" = {f}")).unwrap_or_default();
        println!("{quiver:>5}  V = {rep:<20} u = {flag:<22} P = {poly}{factored}   counts {}", counts.join(" "));
    }
    Ok(())
}
