//! The extended quiver, the functor Φ, and flags as subrepresentations.
//!
//! `cargo run --example extended_quiver`

use flagmann::flagcat::{flag_to_subrep, hom_dim_rep0, phi, quotient, ExtendedQuiver};
use flagmann::linalg::PrimeField;
use flagmann::oracle::list_flags;
use flagmann::parse::parse_flag_type;
use flagmann::rep::{hom_dim, indecomposable_for_root};
use flagmann::{positive_roots, Quiver};

fn main() -> flagmann::Result<()> {
    let q = Quiver::linear_a(3);
    let ext = ExtendedQuiver::new(&q, 3)?;
    println!("extended quiver for d = 3:\n{}", ext.quiver());

    let f = PrimeField::new(5)?;
    let reps: Vec<_> = positive_roots(&q)?.iter().map(|r| indecomposable_for_root(&q, r, &f)).collect::<Result<_, _>>()?;
    let mut agree = 0;
    for v in &reps {
        for w in &reps {
            if hom_dim_rep0(&phi(v, 3)?, &phi(w, 3)?)? == hom_dim(v, w)? {
                agree += 1;
            }
        }
    }
    println!("Hom(Φ V, Φ W) = Hom(V, W) for {agree} of {} pairs", reps.len() * reps.len());

    // a flag of the projective P_1 = (1,1,1) as a subrepresentation of Φ(P_1)
    let p1 = &reps.iter().find(|r| r.dims().entries() == [1, 1, 1]).expect("root (1,1,1)").clone();
    let u = parse_flag_type("0,0,1;0,1,1;1,1,1")?;
    let flag = &list_flags(p1, &u, 4)?[0];
    let (sub, _) = flag_to_subrep(p1, flag)?;
    println!("flag subrepresentation has dimension vector {}", sub.rep().dims());
    let subs: Vec<_> = flag.steps.iter().flatten().cloned().collect();
    let quot = quotient(&phi(p1, 3)?, &subs)?;
    println!("Φ(P)/V' has dimension vector {}", quot.rep().dims());
    Ok(())
}
