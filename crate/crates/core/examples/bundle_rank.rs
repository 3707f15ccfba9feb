//! The stratum of flags of V ⊕ W meeting V in type v is a bundle over
//! F_v(V) × F_w(W). This example checks its rank on sampled fibers and by
//! counting points, and shows that the other argument order for the rank
//! fails on the same data.
//!
//! `cargo run --example bundle_rank`

use flagmann::campaign::verify_bundle;
use flagmann::oracle::OracleConfig;
use flagmann::parse::parse_flag_type;
use flagmann::recursion::stratum_rank;
use flagmann::{Quiver, RootMultiset};

fn main() -> flagmann::Result<()> {
    let q = Quiver::linear_a(2);
    let v_roots = RootMultiset::parse_inline(&q, "1,1")?;
    let w_roots = RootMultiset::parse_inline(&q, "1,0")?;
    let v = parse_flag_type("0,1;1,1")?;
    let w = parse_flag_type("1,0;1,0")?;

    let check = verify_bundle(&q, &v_roots, &w_roots, &v, &w, 10, 0, 3, &OracleConfig::default())?;
    println!("rank sum <w_r, v_t> = {}", check.rank);
    println!("rank sum <v_r, w_t> = {}", stratum_rank(&q, &v, &w)?);
    println!("sampled fiber dimensions over F_3: {:?}", check.fibers.fiber_dims);
    for s in &check.strata {
        println!(
            "q = {}: stratum has {} points, q^rank * |F_v(V)| * |F_w(W)| = {}",
            s.prime, s.stratum, s.predicted
        );
    }
    println!("{}", if check.ok() { "bundle description holds" } else { "MISMATCH" });
    Ok(())
}
