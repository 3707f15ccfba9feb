//! Type E base cases: point counts over several primes fitted by a
//! polynomial of degree equal to the expected dimension.
//!
//! `cargo run --release --example type_e`

use flagmann::oracle::OracleConfig;
use flagmann::recursion::{base_case_rigid_interpolation, rigid_dimension};
use flagmann::{positive_roots, FlagType, Quiver, RootMultiset};

fn main() -> flagmann::Result<()> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data");
    let q = Quiver::from_file(format!("{dir}/e6.qv"))?;
    let cfg = OracleConfig::from_env()?;
    let mut by_degree = [0usize; 4];
    let mut shown = 0;
    for root in positive_roots(&q)?.into_iter().filter(|r| r.total() <= 8) {
        let single = RootMultiset::from_summands(&q, std::slice::from_ref(&root))?;
        for u in FlagType::all_with_top(&root, 2) {
            let poly = base_case_rigid_interpolation(&q, &single, &u, &cfg)?;
            let Some(deg) = poly.degree() else { continue };
            by_degree[deg.min(3)] += 1;
            if deg > 0 && shown < 8 {
                println!("({root}) u = {u:<26} dim {}  P = {poly}", rigid_dimension(&q, &u));
                shown += 1;
            }
        }
    }
    println!("nonempty two-step flag varieties by degree (0, 1, 2, 3+): {by_degree:?}");
    Ok(())
}
