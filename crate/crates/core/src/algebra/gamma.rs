//! Pairs of covering subsets of `{1..k}` that index the recursive shuffle expansion.

use std::fmt;

use serde::Serialize;

/// A pair `(alpha, beta)` of nonempty subsets of `{1..k}` with `alpha ∪ beta = {1..k}`.
/// Both sides are stored sorted ascending, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GammaPair {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl GammaPair {
    pub fn new(mut alpha: Vec<usize>, mut beta: Vec<usize>) -> Self {
        alpha.sort_unstable();
        alpha.dedup();
        beta.sort_unstable();
        beta.dedup();
        GammaPair { alpha, beta }
    }

    /// Position of `j` in `alpha`, 0-based.
    pub fn alpha_index(&self, j: usize) -> Option<usize> {
        self.alpha.binary_search(&j).ok()
    }

    pub fn beta_index(&self, j: usize) -> Option<usize> {
        self.beta.binary_search(&j).ok()
    }

    /// `k`, the size of the covered set.
    pub fn width(&self) -> usize {
        self.alpha.last().copied().unwrap_or(0).max(self.beta.last().copied().unwrap_or(0))
    }
}

impl fmt::Display for GammaPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = |s: &[usize]| s.iter().map(ToString::to_string).collect::<Vec<_>>().join("");
        write!(f, "({}, {})", word(&self.alpha), word(&self.beta))
    }
}

/// All `(alpha, beta)` covering `{1..k}` with `#alpha = m` and `#beta = n`, in
/// lexicographic order.
///
/// Every `beta` is the complement of `alpha` together with an `(m+n-k)`-subset
/// of `alpha`, so the set is empty unless `m <= k`, `n <= k` and `k <= m + n`.
pub fn gamma_set(k: usize, m: usize, n: usize) -> Vec<GammaPair> {
    if m == 0 || n == 0 || m > k || n > k || k > m + n {
        return Vec::new();
    }
    let shared = m + n - k;
    let mut out = Vec::new();
    for alpha in combinations(&(1..=k).collect::<Vec<_>>(), m) {
        let rest: Vec<usize> = (1..=k).filter(|j| !alpha.contains(j)).collect();
        for common in combinations(&alpha, shared) {
            let beta = rest.iter().chain(&common).copied().collect();
            out.push(GammaPair::new(alpha.clone(), beta));
        }
    }
    out.sort();
    out
}

/// The `size`-element subsets of `items`, preserving order within each subset.
fn combinations(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    fn walk(items: &[usize], size: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        let needed = size - current.len();
        for i in 0..items.len() {
            if items.len() - i < needed {
                break;
            }
            current.push(items[i]);
            walk(&items[i + 1..], size, current, out);
            current.pop();
        }
    }
    walk(items, size, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(list: &[(&[usize], &[usize])]) -> Vec<GammaPair> {
        let mut v: Vec<GammaPair> = list.iter().map(|(a, b)| GammaPair::new(a.to_vec(), b.to_vec())).collect();
        v.sort();
        v
    }

    #[test]
    fn width_two_lists() {
        assert_eq!(gamma_set(2, 1, 1), pairs(&[(&[1], &[2]), (&[2], &[1])]));
        assert_eq!(gamma_set(2, 1, 2), pairs(&[(&[1], &[1, 2]), (&[2], &[1, 2])]));
        assert_eq!(gamma_set(2, 2, 1), pairs(&[(&[1, 2], &[1]), (&[1, 2], &[2])]));
        assert_eq!(gamma_set(2, 2, 2), pairs(&[(&[1, 2], &[1, 2])]));
        assert!(gamma_set(2, 3, 1).is_empty());
        assert!(gamma_set(2, 1, 3).is_empty());
    }

    #[test]
    fn every_pair_covers() {
        for k in 2..=6 {
            for m in 1..=k {
                for n in 1..=k {
                    for p in gamma_set(k, m, n) {
                        assert_eq!(p.alpha.len(), m);
                        assert_eq!(p.beta.len(), n);
                        let mut union: Vec<usize> = p.alpha.iter().chain(&p.beta).copied().collect();
                        union.sort_unstable();
                        union.dedup();
                        assert_eq!(union, (1..=k).collect::<Vec<_>>());
                    }
                }
            }
        }
    }

    #[test]
    fn display_words() {
        assert_eq!(GammaPair::new(vec![2], vec![1, 3, 4]).to_string(), "(2, 134)");
    }
}
