//! Finite subset enumeration shared by the combinatorial modules.

/// `C(n, k)`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// All `k`-subsets of `0..n` as sorted index lists, in colexicographic order
/// (compare largest elements first).
pub fn colex_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, k));
    let mut current: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(current.clone());
        // colex successor: bump the first position that can move
        let mut i = 0;
        while i < k && (if i + 1 < k { current[i] + 1 == current[i + 1] } else { current[i] + 1 == n }) {
            i += 1;
        }
        if i == k {
            return out;
        }
        current[i] += 1;
        for (j, slot) in current.iter_mut().enumerate().take(i) {
            *slot = j;
        }
    }
}

/// Position of each subset in [`colex_subsets`], keyed by bitmask.
pub fn colex_index(subsets: &[Vec<usize>]) -> std::collections::HashMap<u64, usize> {
    subsets.iter().enumerate().map(|(i, s)| (mask_of(s), i)).collect()
}

pub fn mask_of(indices: &[usize]) -> u64 {
    indices.iter().fold(0u64, |m, &i| m | (1u64 << i))
}

pub fn indices_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask & (1u64 << i) != 0).collect()
}
