//! Ordering the summands of a representation so that Ext^1 vanishes in one
//! direction.
//!
//! `cargo run --example directed_order`

use flagmann::{positive_roots, FlagEngine, Quiver, RootMultiset};

fn main() -> flagmann::Result<()> {
    let q = Quiver::linear_a(3);
    let engine = FlagEngine::new(&q)?;
    let roots = positive_roots(&q)?;

    println!("dim Ext^1(row, column) on A_3 (1 -> 2 -> 3):");
    print!("{:>8}", "");
    for r in &roots {
        print!("{:>8}", r.to_string());
    }
    println!();
    for w in &roots {
        print!("{:>8}", w.to_string());
        for v in &roots {
            print!("{:>8}", engine.ext1(w, v)?);
        }
        println!();
    }

    let all = RootMultiset::from_summands(&q, &roots)?;
    let order: Vec<String> = engine.directed_order(&all)?.iter().map(|r| format!("({r})")).collect();
    println!("directed order of all indecomposables: {}", order.join(" "));
    Ok(())
}
