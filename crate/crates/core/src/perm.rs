//! Permutations of argument slots.
//!
//! A permutation `σ` acts on a tuple by moving the argument in slot `k` to
//! slot `σ(k)`. Composition is right to left: `(p ∘ q)(k) = p(q(k))`.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n).collect() }
    }

    /// Builds a permutation of `{1..n}` from disjoint cycles written with
    /// 1-based points, e.g. `from_cycles(4, &[&[1, 3], &[2, 4]])`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (pos, &a) in cycle.iter().enumerate() {
                let b = cycle[(pos + 1) % cycle.len()];
                assert!((1..=n).contains(&a) && (1..=n).contains(&b), "cycle point out of range");
                images[a - 1] = b - 1;
            }
        }
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `σ(k)` on 0-based points.
    pub fn image(&self, k: usize) -> usize {
        self.images[k]
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm { images: other.images.iter().map(|&k| self.images[k]).collect() }
    }

    pub fn power(&self, k: usize) -> Perm {
        (0..k).fold(Perm::identity(self.degree()), |acc, _| self.compose(&acc))
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.degree()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v] = k;
        }
        Perm { images }
    }

    pub fn sign(&self) -> i64 {
        let mut seen = vec![false; self.degree()];
        let mut sign = 1;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.images[k];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// Returns `t'` with `t'[σ(k)] = t[k]`.
    pub fn act<T: Clone>(&self, t: &[T]) -> Vec<T> {
        assert_eq!(t.len(), self.degree());
        let mut out = t.to_vec();
        for (k, item) in t.iter().enumerate() {
            out[self.images[k]] = item.clone();
        }
        out
    }

    /// All permutations of `{1..n}` in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Perm> {
        fn rec(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Perm>) {
            if prefix.len() == n {
                out.push(Perm { images: prefix.clone() });
                return;
            }
            for v in 0..n {
                if !prefix.contains(&v) {
                    prefix.push(v);
                    rec(prefix, n, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), n, &mut out);
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cycle notation with 1-based points; the identity prints as `()`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut any = false;
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut k = start;
            let mut first = true;
            while !seen[k] {
                seen[k] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", k + 1)?;
                first = false;
                k = self.images[k];
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// `I_L = {(1 2 3)^i (1 2 3 4)^j : 0 ≤ i < 3, 0 ≤ j < 4}`.
pub fn index_set_left() -> Vec<Perm> {
    let c3 = Perm::from_cycles(4, &[&[1, 2, 3]]);
    let c4 = Perm::from_cycles(4, &[&[1, 2, 3, 4]]);
    let mut out = Vec::with_capacity(12);
    for i in 0..3 {
        for j in 0..4 {
            out.push(c3.power(i).compose(&c4.power(j)));
        }
    }
    out
}

/// `I_R = {Id, (1 3), (2 3), (1 4), (2 4), (1 3)(2 4)}`.
pub fn index_set_right() -> Vec<Perm> {
    vec![
        Perm::identity(4),
        Perm::from_cycles(4, &[&[1, 3]]),
        Perm::from_cycles(4, &[&[2, 3]]),
        Perm::from_cycles(4, &[&[1, 4]]),
        Perm::from_cycles(4, &[&[2, 4]]),
        Perm::from_cycles(4, &[&[1, 3], &[2, 4]]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn action_moves_slot_k_to_sigma_k() {
        let c = Perm::from_cycles(3, &[&[1, 2, 3]]);
        assert_eq!(c.act(&['x', 'y', 'z']), vec!['z', 'x', 'y']);
        assert_eq!(c.power(2).act(&['x', 'y', 'z']), vec!['y', 'z', 'x']);
    }

    #[test]
    fn action_is_a_left_action() {
        let t = [0, 1, 2, 3];
        for p in Perm::all(4) {
            for q in Perm::all(4) {
                assert_eq!(p.compose(&q).act(&t), p.act(&q.act(&t)));
            }
        }
    }

    #[test]
    fn signs_and_inverses() {
        assert_eq!(Perm::all(3).iter().filter(|p| p.sign() == 1).count(), 3);
        for p in Perm::all(4) {
            assert!(p.compose(&p.inverse()) == Perm::identity(4));
            assert_eq!(p.sign(), p.inverse().sign());
        }
    }

    #[test]
    fn left_index_set_has_twelve_distinct_terms() {
        let il = index_set_left();
        assert_eq!(il.len(), 12);
        assert_eq!(il.iter().collect::<BTreeSet<_>>().len(), 12);
        // the summand ((x∙y)α(z))α²(w) only sees slots 1,2 as an unordered pair
        let shapes: BTreeSet<(BTreeSet<usize>, usize, usize)> = il
            .iter()
            .map(|p| {
                let t = p.act(&[0, 1, 2, 3]);
                ([t[0], t[1]].into_iter().collect(), t[2], t[3])
            })
            .collect();
        assert_eq!(shapes.len(), 12);
    }

    #[test]
    fn right_index_set_covers_pair_partitions() {
        let ir = index_set_right();
        assert_eq!(ir.len(), 6);
        // α(x∙y)α(z∙w): unordered pairs in slots {1,2} and {3,4}, ordered between them
        let shapes: BTreeSet<(BTreeSet<usize>, BTreeSet<usize>)> = ir
            .iter()
            .map(|p| {
                let t = p.act(&[0, 1, 2, 3]);
                ([t[0], t[1]].into_iter().collect(), [t[2], t[3]].into_iter().collect())
            })
            .collect();
        assert_eq!(shapes.len(), 6);
    }

    #[test]
    fn display() {
        assert_eq!(Perm::identity(3).to_string(), "()");
        assert_eq!(Perm::from_cycles(4, &[&[1, 3], &[2, 4]]).to_string(), "(1 3)(2 4)");
    }
}
