//! Dynkin classification and positive roots of the sample quivers.
//!
//! `cargo run --example roots`

use flagmann::{classify_dynkin, positive_roots, Quiver};

fn main() -> flagmann::Result<()> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data");
    for name in ["a2", "a3", "d4", "e6", "cycle3"] {
        let q = Quiver::from_file(format!("{dir}/{name}.qv"))?;
        let class = classify_dynkin(&q);
        match positive_roots(&q) {
            Ok(roots) => {
                let listed: Vec<String> = roots.iter().take(8).map(|r| format!("({r})")).collect();
                let more = if roots.len() > 8 { " ..." } else { "" };
                println!("{name}: type {}, {} positive roots: {}{more}", class.kind, roots.len(), listed.join(" "));
            }
            Err(e) => println!("{name}: {e}"),
        }
    }
    Ok(())
}
