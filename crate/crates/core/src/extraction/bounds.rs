//! Concrete bound functions.
//!
//! Only `f1`, `f_p2`, `f_l1` and `f_lemma` have closed forms here. The others
//! depend on cited theorems whose bounds are not given, so the table records
//! their defining formula with no value. Values overflowing `u128` are `None`.

use serde::Serialize;

/// `binom(2k − 2, k − 1)`, the pivot bound for an induced `K_k` or its complement.
pub fn f1(k: usize) -> Option<u128> {
    if k == 0 {
        return Some(1);
    }
    binomial(2 * k as u128 - 2, k as u128 - 1)
}

/// Off-diagonal pivot bound `binom(s + t − 2, s − 1)`.
pub fn ramsey_bound(s: usize, t: usize) -> Option<u128> {
    if s == 0 || t == 0 {
        return Some(1);
    }
    binomial((s + t - 2) as u128, (s - 1) as u128)
}

fn binomial(n: u128, r: u128) -> Option<u128> {
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        // acc * (n - i) / (i + 1) stays integral at every step.
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// `r^q`: a rooted spanning tree with no vertex of `r` children has depth ≥ q.
pub fn f_p2(r: u128, q: u128) -> Option<u128> {
    let q = u32::try_from(q).ok()?;
    r.checked_pow(q)
}

/// `f_p2(f1(k), l(k + 1))`.
pub fn f_l1(k: usize, l: usize) -> Option<u128> {
    f_p2(f1(k)?, (l as u128).checked_mul(k as u128 + 1)?)
}

/// `r_H = d^((k − 1)(d² − 1) + 2)`.
pub fn f_lemma(k: usize, d: usize) -> Option<u128> {
    let e = (k as u128 - 1).checked_mul((d as u128).checked_mul(d as u128)? - 1)?.checked_add(2)?;
    f_p2(d as u128, e)
}

/// Iteration cap from the pigeonhole argument: `(k − 1)(d² − 1) + 1`.
pub fn hset_rounds(k: usize, d: usize) -> usize {
    (k.saturating_sub(1)).saturating_mul(d.saturating_mul(d).saturating_sub(1)).saturating_add(1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    pub formula: &'static str,
    pub value: Option<u128>,
    /// Whether the value is proved sufficient by the implementation.
    pub guaranteed: bool,
}

/// Bound values at given parameters, for documentation and small-k checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundTable {
    pub k: usize,
    pub l: usize,
    pub d: usize,
    pub entries: Vec<BoundEntry>,
}

impl BoundTable {
    pub fn new(k: usize, l: usize, d: usize) -> Self {
        let r = f1(k);
        let entries = vec![
            BoundEntry {
                name: "f1",
                formula: "binom(2k-2, k-1)",
                value: r,
                guaranteed: true,
            },
            BoundEntry {
                name: "f_p2",
                formula: "r^q with r = f1(k), q = l(k+1)",
                value: r.and_then(|r| f_p2(r, (l * (k + 1)) as u128)),
                guaranteed: true,
            },
            BoundEntry {
                name: "f_l1",
                formula: "f_p2(f1(k), l(k+1))",
                value: f_l1(k, l),
                guaranteed: false,
            },
            BoundEntry {
                name: "f_lemma",
                formula: "d^((k-1)(d^2-1)+2)",
                value: if k >= 1 && d >= 1 { f_lemma(k, d) } else { None },
                guaranteed: false,
            },
            BoundEntry {
                name: "f_p1",
                formula: "cited; no closed form",
                value: None,
                guaranteed: false,
            },
            BoundEntry {
                name: "f_l2",
                formula: "f_p1(f1(k+1) + f_lemma(k, f_l1(k, q)))",
                value: None,
                guaranteed: false,
            },
            BoundEntry {
                name: "f_1c",
                formula: "f_l1(k, f_l2(2k, f_t2(f1(k))))",
                value: None,
                guaranteed: false,
            },
            BoundEntry {
                name: "f_2c",
                formula: "f_l2(k, f_t2(f_1c(k+2)))",
                value: None,
                guaranteed: false,
            },
            BoundEntry {
                name: "f_3c",
                formula: "f_t2(f_2c(k+2))",
                value: None,
                guaranteed: false,
            },
            BoundEntry {
                name: "f_4c",
                formula: "f_t3(f_3c(k+3), f_lemma(2k, 4 f_3c(k+3)))",
                value: None,
                guaranteed: false,
            },
        ];
        BoundTable { k, l, d, entries }
    }

    pub fn get(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        assert_eq!(f1(1), Some(1));
        assert_eq!(f1(3), Some(6));
        assert_eq!(f1(4), Some(20));
        assert_eq!(ramsey_bound(3, 2), Some(3));
        assert_eq!(f_p2(3, 4), Some(81));
        assert_eq!(f_lemma(3, 3), Some(3u128.pow(18)));
        assert_eq!(f_lemma(40, 40), None);
        assert_eq!(hset_rounds(3, 3), 17);
    }

    #[test]
    fn table_marks_guarantees() {
        let t = BoundTable::new(3, 4, 3);
        assert!(t.get("f1").unwrap().guaranteed);
        assert!(t.get("f_1c").unwrap().value.is_none());
    }
}
