use std::cmp::Ordering;
use std::fmt;

/// Largest supported dimension parameter `n`.
pub const MAX_DIM: usize = 64;

/// A canonical wedge `f†_{k1} ∧ … ∧ f†_{kr}` (indices increasing) acting on
/// the idempotent `I`. Stored as a bit set over 0-based generator indices,
/// so a repeated index cannot be represented.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Blade(u64);

impl Blade {
    /// The empty blade, i.e. `I` itself.
    pub const fn identity() -> Self {
        Blade(0)
    }

    /// Builds a blade from strictly increasing 0-based indices.
    pub fn from_indices(indices: &[usize]) -> Option<Self> {
        let mut bits = 0u64;
        let mut prev: Option<usize> = None;
        for &k in indices {
            if k >= MAX_DIM || prev.is_some_and(|p| p >= k) {
                return None;
            }
            bits |= 1 << k;
            prev = Some(k);
        }
        Some(Blade(bits))
    }

    pub const fn from_bits(bits: u64) -> Self {
        Blade(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn contains(self, k: usize) -> bool {
        k < MAX_DIM && self.0 & (1 << k) != 0
    }

    /// Number of indices strictly below `k`.
    pub const fn count_below(self, k: usize) -> usize {
        (self.0 & ((1u64 << k) - 1)).count_ones() as usize
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..MAX_DIM).filter(move |k| bits & (1 << k) != 0)
    }

    /// Largest index plus one (0 for the empty blade).
    pub const fn span(self) -> usize {
        MAX_DIM - self.0.leading_zeros() as usize
    }

    pub(crate) const fn with(self, k: usize) -> Self {
        Blade(self.0 | (1 << k))
    }

    pub(crate) const fn without(self, k: usize) -> Self {
        Blade(self.0 & !(1 << k))
    }

    /// All blades of degree `r` over generators `0..n`, in blade order.
    pub fn all_of_degree(n: usize, r: usize) -> Vec<Blade> {
        assert!(n <= MAX_DIM);
        let mut out = Vec::new();
        let mut stack = Vec::with_capacity(r);
        fn rec(start: usize, n: usize, r: usize, stack: &mut Vec<usize>, out: &mut Vec<Blade>) {
            if stack.len() == r {
                out.push(Blade::from_indices(stack).unwrap());
                return;
            }
            for k in start..n {
                stack.push(k);
                rec(k + 1, n, r, stack, out);
                stack.pop();
            }
        }
        rec(0, n, r, &mut stack, &mut out);
        out
    }
}

impl Ord for Blade {
    /// Lexicographic on the increasing index lists.
    fn cmp(&self, other: &Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        let diff = self.0 ^ other.0;
        let first = diff.trailing_zeros();
        // Indices below `first` agree. Whoever owns `first` has the smaller
        // next entry, unless the other list already ended there.
        let below = (1u64 << first) - 1;
        let (owner, other_bits) = if self.0 & (1 << first) != 0 {
            (Ordering::Less, other.0)
        } else {
            (Ordering::Greater, self.0)
        };
        let other_continues = other_bits & !below != 0;
        if other_continues {
            owner
        } else {
            owner.reverse()
        }
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Blade {
    /// 1-based, e.g. `f†1^f†3 I`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices().map(|k| format!("f†{}", k + 1)).collect();
        if parts.is_empty() {
            write!(f, "I")
        } else {
            write!(f, "{} I", parts.join("^"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lex(a: Blade, b: Blade) -> Ordering {
        a.indices().collect::<Vec<_>>().cmp(&b.indices().collect::<Vec<_>>())
    }

    #[test]
    fn order_matches_index_list_lex() {
        for x in 0u64..64 {
            for y in 0u64..64 {
                let (a, b) = (Blade(x), Blade(y));
                assert_eq!(a.cmp(&b), lex(a, b), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn rejects_non_increasing() {
        assert!(Blade::from_indices(&[1, 1]).is_none());
        assert!(Blade::from_indices(&[2, 0]).is_none());
        assert_eq!(Blade::from_indices(&[0, 2]).unwrap().degree(), 2);
    }

    #[test]
    fn degree_enumeration_counts() {
        assert_eq!(Blade::all_of_degree(4, 2).len(), 6);
        assert_eq!(Blade::all_of_degree(3, 0), vec![Blade::identity()]);
        let v = Blade::all_of_degree(4, 2);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }
}
