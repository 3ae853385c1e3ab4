use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

/// How monomials are compared once exponent vectors are laid out in
/// priority order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrderKind {
    Lex,
    GrevLex,
    /// Product of graded-reverse-lexicographic blocks, compared block by
    /// block from the first. Block sizes sum to the number of variables.
    Block(Vec<usize>),
}

/// A monomial order on a named variable context. `priority` lists variables
/// from largest to smallest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub priority: Vec<String>,
}

impl MonomialOrder {
    pub fn lex<S: AsRef<str>>(priority: &[S]) -> Self {
        MonomialOrder { kind: OrderKind::Lex, priority: names(priority) }
    }

    pub fn grevlex<S: AsRef<str>>(priority: &[S]) -> Self {
        MonomialOrder { kind: OrderKind::GrevLex, priority: names(priority) }
    }

    /// Elimination order: `first` (grevlex) dominates `rest` (grevlex).
    pub fn elimination<S: AsRef<str>, T: AsRef<str>>(first: &[S], rest: &[T]) -> Self {
        let mut p = names(first);
        p.extend(names(rest));
        MonomialOrder { kind: OrderKind::Block(vec![first.len(), rest.len()]), priority: p }
    }

    /// True if every monomial containing a variable of `drop` is larger than
    /// every monomial free of them.
    pub fn eliminates<S: AsRef<str>>(&self, drop: &[S]) -> bool {
        let k = drop.len();
        let head: Vec<&str> = self.priority.iter().take(k).map(|s| s.as_str()).collect();
        let same_set = drop.iter().all(|d| head.contains(&d.as_ref())) && head.len() == k;
        if !same_set {
            return false;
        }
        match &self.kind {
            OrderKind::Lex => true,
            OrderKind::GrevLex => k == 0 || k == self.priority.len(),
            OrderKind::Block(sizes) => {
                let mut acc = 0;
                for s in sizes {
                    if acc == k {
                        return true;
                    }
                    acc += s;
                }
                acc == k
            }
        }
    }

    pub fn cmp(&self, a: &[u16], b: &[u16]) -> Ordering {
        match &self.kind {
            OrderKind::Lex => a.cmp(b),
            OrderKind::GrevLex => grevlex(a, b),
            OrderKind::Block(sizes) => {
                let mut start = 0;
                for &s in sizes {
                    let o = grevlex(&a[start..start + s], &b[start..start + s]);
                    if o != Ordering::Equal {
                        return o;
                    }
                    start += s;
                }
                Ordering::Equal
            }
        }
    }
}

fn names<S: AsRef<str>>(v: &[S]) -> Vec<String> {
    v.iter().map(|s| s.as_ref().to_string()).collect()
}

fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&x| x as u32).sum();
    let db: u32 = b.iter().map(|&x| x as u32).sum();
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            // smaller exponent in the last differing variable wins
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::grevlex(&["x", "y", "z"]);
        // x*z vs y^2 : same degree; last differing is z: x*z has 1, y^2 has 0 => y^2 > x*z
        assert_eq!(o.cmp(&[1, 0, 1], &[0, 2, 0]), Ordering::Less);
        assert_eq!(o.cmp(&[2, 0, 0], &[0, 1, 0]), Ordering::Greater);
    }

    #[test]
    fn elimination_check() {
        let o = MonomialOrder::elimination(&["z", "x"], &["s", "t"]);
        assert!(o.eliminates(&["x", "z"]));
        assert!(!o.eliminates(&["z"]));
        let l = MonomialOrder::lex(&["z", "x", "s"]);
        assert!(l.eliminates(&["z"]));
        assert!(!MonomialOrder::grevlex(&["z", "x"]).eliminates(&["z"]));
        assert_eq!(o.cmp(&[0, 1, 0, 0], &[0, 0, 5, 5]), Ordering::Greater);
    }
}
