//! A small verification campaign: every representation of A_2 up to total
//! dimension 4 and every flag type with at most 3 steps.
//!
//! `cargo run --release --example check_odd`

use flagmann::campaign::{check_odd, JobSpec, RepClass};
use flagmann::Quiver;

fn main() -> flagmann::Result<()> {
    let q = Quiver::linear_a(2);
    let spec = JobSpec { rep_class: RepClass::Decomposable, max_dim: 4, d_max: 3, ..JobSpec::default() };
    let report = check_odd(&q, "A2", &spec)?;
    let table = report.table();
    let lines: Vec<&str> = table.lines().collect();
    for line in lines.iter().take(12) {
        println!("{line}");
    }
    println!("...");
    println!("{}", lines.last().unwrap_or(&""));
    Ok(())
}
