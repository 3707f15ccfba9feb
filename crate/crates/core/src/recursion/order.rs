use crate::error::{Error, Result};
use crate::quiver::DimVector;

/// Orders `roots` so that `ext1(a, b) = 0` whenever `a` comes no later than
/// `b`. Stable topological sort on "`ext1(a, b) > 0` puts `a` after `b`",
/// ties broken by input position.
pub fn directed_order(
    roots: &[DimVector],
    mut ext1: impl FnMut(&DimVector, &DimVector) -> Result<usize>,
) -> Result<Vec<DimVector>> {
    let n = roots.len();
    // must_precede[a] = roots that have to come before a
    let mut must_precede = vec![Vec::new(); n];
    for a in 0..n {
        if ext1(&roots[a], &roots[a])? > 0 {
            return Err(Error::Unsupported(format!("root {} is not rigid", roots[a])));
        }
        for b in 0..n {
            if a != b && ext1(&roots[a], &roots[b])? > 0 {
                must_precede[a].push(b);
            }
        }
    }
    let mut placed = vec![false; n];
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let next = (0..n).find(|&a| !placed[a] && must_precede[a].iter().all(|&b| placed[b]));
        let Some(a) = next else {
            return Err(Error::Unsupported("Ext^1 relation among the summands has a cycle".into()));
        };
        placed[a] = true;
        out.push(roots[a].clone());
    }
    Ok(out)
}

/// Whether `ext1(order[r], order[t]) = 0` for all `r <= t`.
pub fn is_directed(
    order: &[DimVector],
    mut ext1: impl FnMut(&DimVector, &DimVector) -> Result<usize>,
) -> Result<bool> {
    for r in 0..order.len() {
        for t in r..order.len() {
            if ext1(&order[r], &order[t])? > 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
