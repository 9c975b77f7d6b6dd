//! Small finite posets: cover relations, DOT export and brute-force
//! (anti-)isomorphism search.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Element-count ceiling for [`poset_iso`] and diagram export.
pub const POSET_GUARD: usize = 200;

/// A finite poset stored as its full `<=` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    leq: Vec<Vec<bool>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Iso,
    Anti,
}

impl Poset {
    pub fn from_elements<T>(elements: &[T], leq: impl Fn(&T, &T) -> bool) -> Self {
        let leq = elements
            .iter()
            .map(|a| elements.iter().map(|b| leq(a, b)).collect())
            .collect();
        Poset { leq }
    }

    pub fn len(&self) -> usize {
        self.leq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leq.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// Reflexive, antisymmetric and transitive.
    pub fn is_partial_order(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| self.leq[a][a])
            && (0..n).all(|a| (0..n).all(|b| a == b || !(self.leq[a][b] && self.leq[b][a])))
            && (0..n).all(|a| {
                (0..n).all(|b| !self.leq[a][b] || (0..n).all(|c| !self.leq[b][c] || self.leq[a][c]))
            })
    }

    pub fn dual(&self) -> Poset {
        let n = self.len();
        Poset {
            leq: (0..n).map(|a| (0..n).map(|b| self.leq[b][a]).collect()).collect(),
        }
    }

    /// Covering pairs `(a, b)`: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let lt = |a: usize, b: usize| a != b && self.leq[a][b];
        let mut edges = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                    edges.push((a, b));
                }
            }
        }
        edges
    }

    // (strictly below, strictly above) counts
    fn signature(&self, a: usize) -> (usize, usize) {
        let n = self.len();
        let below = (0..n).filter(|&b| b != a && self.leq[b][a]).count();
        let above = (0..n).filter(|&b| b != a && self.leq[a][b]).count();
        (below, above)
    }
}

pub fn hasse<T>(elements: &[T], leq: impl Fn(&T, &T) -> bool) -> Vec<(usize, usize)> {
    Poset::from_elements(elements, leq).covers()
}

/// Decide whether an order isomorphism (or anti-isomorphism) `p -> q`
/// exists. Backtracking over bijections; candidates must match the
/// (below, above) count signature.
pub fn poset_iso(p: &Poset, q: &Poset, orientation: Orientation) -> Result<bool> {
    Ok(find_iso(p, q, orientation)?.is_some())
}

/// Like [`poset_iso`] but returns the bijection.
pub fn find_iso(p: &Poset, q: &Poset, orientation: Orientation) -> Result<Option<Vec<usize>>> {
    for size in [p.len(), q.len()] {
        if size > POSET_GUARD {
            return Err(Error::Refused(format!(
                "isomorphism search over {size} elements exceeds {POSET_GUARD}"
            )));
        }
    }
    if p.len() != q.len() {
        return Ok(None);
    }
    let target = match orientation {
        Orientation::Iso => q.clone(),
        Orientation::Anti => q.dual(),
    };
    let n = p.len();
    let sig_p: Vec<_> = (0..n).map(|a| p.signature(a)).collect();
    let sig_q: Vec<_> = (0..n).map(|a| target.signature(a)).collect();
    let mut sp = sig_p.clone();
    let mut sq = sig_q.clone();
    sp.sort_unstable();
    sq.sort_unstable();
    if sp != sq {
        return Ok(None);
    }

    // most constrained first: rarest signatures
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&a| sig_p.iter().filter(|&&s| s == sig_p[a]).count());

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    #[allow(clippy::too_many_arguments)]
    fn extend(
        depth: usize,
        order: &[usize],
        p: &Poset,
        q: &Poset,
        sig_p: &[(usize, usize)],
        sig_q: &[(usize, usize)],
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&a) = order.get(depth) else {
            return true;
        };
        for b in 0..q.len() {
            if used[b] || sig_q[b] != sig_p[a] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&c| {
                let d = image[c];
                p.leq(a, c) == q.leq(b, d) && p.leq(c, a) == q.leq(d, b)
            });
            if !consistent {
                continue;
            }
            image[a] = b;
            used[b] = true;
            if extend(depth + 1, order, p, q, sig_p, sig_q, image, used) {
                return true;
            }
            used[b] = false;
            image[a] = usize::MAX;
        }
        false
    }
    Ok(
        extend(0, &order, p, &target, &sig_p, &sig_q, &mut image, &mut used)
            .then_some(image),
    )
}

/// DOT digraph with one edge per cover, lower to upper.
pub fn to_dot(name: &str, labels: &[String], edges: &[(usize, usize)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {name} {{");
    let _ = writeln!(out, "  rankdir=BT;");
    for (i, label) in labels.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{}\"];", label.replace('"', "\\\""));
    }
    for (a, b) in edges {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}
