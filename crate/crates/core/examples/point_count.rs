//! Brute-force enumeration: subrepresentations and flags over a prime field.
//!
//! `cargo run --example point_count`

use flagmann::linalg::PrimeField;
use flagmann::oracle::{count_flags, enumerate_subreps, estimate_candidates, list_flags};
use flagmann::parse::{parse_dim_vector, parse_flag_type};
use flagmann::rep::indecomposable_for_root;
use flagmann::Quiver;

fn main() -> flagmann::Result<()> {
    let q = Quiver::numbered(4, &[(0, 3), (1, 3), (2, 3)])?;
    let root = parse_dim_vector("1,1,1,2")?;
    for p in [2, 3, 5] {
        let f = PrimeField::new(p)?;
        let rep = indecomposable_for_root(&q, &root, &f)?;
        let lines = enumerate_subreps(&rep, &parse_dim_vector("0,0,0,1")?, None, None)?.count();
        let u = parse_flag_type("0,0,0,1;1,1,1,2")?;
        println!(
            "F_{p}: {lines} invariant lines in the center, {} flags of type {u} (estimate {})",
            count_flags(&rep, &u)?,
            estimate_candidates(&rep, &u)
        );
    }

    // every flag of type (0,0,0,1) ⊂ (1,0,0,2) ⊂ V over F_2, by its center steps
    let f = PrimeField::new(2)?;
    let rep = indecomposable_for_root(&q, &root, &f)?;
    for (k, flag) in list_flags(&rep, &parse_flag_type("0,0,0,1;1,0,0,2;1,1,1,2")?, 16)?.iter().enumerate() {
        let center: Vec<String> = flag.steps.iter().map(|s| format!("{}", s[3].basis())).collect();
        println!("flag {k}: center steps {}", center.join(" | ").replace('\n', " "));
    }
    Ok(())
}
