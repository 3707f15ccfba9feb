use flagmann::linalg::{Field, PrimeField, Rationals};
use flagmann::rep::{
    admissible_sink_order, build_rep, ext1_dim, hom_basis, hom_dim, indecomposable_for_root, is_rigid,
    is_subrepresentation,
};
use flagmann::{euler_form, positive_roots, Error, Quiver, RootMultiset};

fn d4() -> Quiver {
    Quiver::numbered(4, &[(0, 3), (1, 3), (2, 3)]).unwrap()
}

fn quivers() -> Vec<Quiver> {
    let mut out = Quiver::linear_a(3).orientations();
    out.extend(d4().orientations());
    out
}

#[test]
fn indecomposables_are_bricks_over_every_field() {
    for q in quivers() {
        for root in positive_roots(&q).unwrap() {
            let over_q = indecomposable_for_root(&q, &root, &Rationals).unwrap();
            assert_eq!(over_q.dims(), &root);
            assert_eq!(hom_dim(&over_q, &over_q).unwrap(), 1, "{q}: {root}");
            assert!(is_rigid(&over_q).unwrap());
            for p in [2, 3, 5] {
                let r = indecomposable_for_root(&q, &root, &PrimeField::new(p).unwrap()).unwrap();
                assert_eq!(hom_dim(&r, &r).unwrap(), 1, "{q}: {root} over F_{p}");
            }
        }
    }
}

#[test]
fn hom_and_ext_do_not_depend_on_the_field() {
    let f2 = PrimeField::new(2).unwrap();
    let f3 = PrimeField::new(3).unwrap();
    for q in quivers() {
        let roots = positive_roots(&q).unwrap();
        for w in &roots {
            for v in &roots {
                let (a, b) = (
                    indecomposable_for_root(&q, w, &Rationals).unwrap(),
                    indecomposable_for_root(&q, v, &Rationals).unwrap(),
                );
                let over_q = (hom_dim(&a, &b).unwrap(), ext1_dim(&a, &b).unwrap());
                for f in [f2, f3] {
                    let (a, b) =
                        (indecomposable_for_root(&q, w, &f).unwrap(), indecomposable_for_root(&q, v, &f).unwrap());
                    assert_eq!((hom_dim(&a, &b).unwrap(), ext1_dim(&a, &b).unwrap()), over_q, "{q}: {w}, {v}");
                }
            }
        }
    }
}

#[test]
fn hom_is_additive_over_direct_sums() {
    let q = Quiver::linear_a(3);
    let roots = positive_roots(&q).unwrap();
    let f = PrimeField::new(3).unwrap();
    for a in &roots {
        for b in &roots {
            let sum = build_rep(&q, &RootMultiset::from_summands(&q, &[a.clone(), b.clone()]).unwrap(), &f).unwrap();
            for c in &roots {
                let x = indecomposable_for_root(&q, c, &f).unwrap();
                let (ra, rb) = (indecomposable_for_root(&q, a, &f).unwrap(), indecomposable_for_root(&q, b, &f).unwrap());
                assert_eq!(hom_dim(&sum, &x).unwrap(), hom_dim(&ra, &x).unwrap() + hom_dim(&rb, &x).unwrap());
                assert_eq!(hom_dim(&x, &sum).unwrap(), hom_dim(&x, &ra).unwrap() + hom_dim(&x, &rb).unwrap());
                let euler = euler_form(&q, sum.dims(), x.dims()).unwrap();
                assert_eq!(hom_dim(&sum, &x).unwrap() as i64 - ext1_dim(&sum, &x).unwrap() as i64, euler);
            }
        }
    }
}

#[test]
fn hom_basis_elements_are_morphisms() {
    let q = d4();
    let f = Rationals;
    let roots = positive_roots(&q).unwrap();
    for w in &roots {
        for v in &roots {
            let (rw, rv) = (indecomposable_for_root(&q, w, &f).unwrap(), indecomposable_for_root(&q, v, &f).unwrap());
            let basis = hom_basis(&rw, &rv).unwrap();
            assert_eq!(basis.len(), hom_dim(&rw, &rv).unwrap());
            for phi in &basis {
                for (h, &(s, t)) in q.arrows().iter().enumerate() {
                    assert_eq!(phi[t].mul(rw.map(h)), rv.map(h).mul(&phi[s]));
                }
            }
        }
    }
}

#[test]
fn images_of_morphisms_are_subrepresentations() {
    let q = Quiver::linear_a(3);
    let f = PrimeField::new(5).unwrap();
    let roots = positive_roots(&q).unwrap();
    for w in &roots {
        for v in &roots {
            let (rw, rv) = (indecomposable_for_root(&q, w, &f).unwrap(), indecomposable_for_root(&q, v, &f).unwrap());
            for phi in hom_basis(&rw, &rv).unwrap() {
                let image: Vec<_> = (0..3)
                    .map(|i| flagmann::Subspace::span(&phi[i].transpose()))
                    .collect();
                assert!(is_subrepresentation(&rv, &image).unwrap());
            }
        }
    }
}

#[test]
fn sink_order_is_admissible() {
    for q in quivers() {
        let order = admissible_sink_order(&q).unwrap();
        let pos = |k: usize| order.iter().position(|&x| x == k).unwrap();
        for &(s, t) in q.arrows() {
            assert!(pos(t) < pos(s), "{q}");
        }
    }
}

#[test]
fn errors() {
    let q = Quiver::linear_a(2);
    assert!(matches!(
        indecomposable_for_root(&q, &flagmann::DimVector(vec![2, 1]), &Rationals),
        Err(Error::Input(_))
    ));
    let f = PrimeField::new(2).unwrap();
    let a = indecomposable_for_root(&q, &flagmann::DimVector(vec![1, 1]), &f).unwrap();
    let b = indecomposable_for_root(&q, &flagmann::DimVector(vec![1, 1]), &PrimeField::new(3).unwrap()).unwrap();
    assert!(matches!(hom_dim(&a, &b), Err(Error::Input(_))));
    assert_eq!(f.from_i64(3), f.one());
}
