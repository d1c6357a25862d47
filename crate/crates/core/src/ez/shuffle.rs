use std::sync::{Arc, OnceLock, RwLock};

use rustc_hash::FxHashMap;

/// A `(p, q)`-shuffle: `{0, ..., p+q-1}` split into increasing `alpha` (size `p`) and
/// `beta` (size `q`), with signature `Σ (alpha_i - i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShufflePartition {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
    pub signature: usize,
}

impl ShufflePartition {
    pub fn is_odd(&self) -> bool {
        self.signature % 2 == 1
    }
}

type ShuffleTable = RwLock<FxHashMap<(usize, usize), Arc<[ShufflePartition]>>>;

fn table() -> &'static ShuffleTable {
    static TABLE: OnceLock<ShuffleTable> = OnceLock::new();
    TABLE.get_or_init(Default::default)
}

/// All `(p, q)`-shuffles, ordered by `alpha` lexicographically. Cached per `(p, q)`.
pub fn shuffles(p: usize, q: usize) -> Arc<[ShufflePartition]> {
    if let Some(s) = table().read().expect("shuffle table").get(&(p, q)) {
        return s.clone();
    }
    let computed: Arc<[ShufflePartition]> = enumerate(p, q).into();
    table().write().expect("shuffle table").insert((p, q), computed.clone());
    computed
}

fn enumerate(p: usize, q: usize) -> Vec<ShufflePartition> {
    let n = p + q;
    let mut out = Vec::new();
    let mut alpha: Vec<usize> = (0..p).collect();
    loop {
        let beta = (0..n).filter(|x| !alpha.contains(x)).collect();
        let signature = alpha.iter().enumerate().map(|(i, a)| a - i).sum();
        out.push(ShufflePartition { alpha: alpha.clone(), beta, signature });
        // next combination in lexicographic order
        let Some(k) = (0..p).rev().find(|&k| alpha[k] < n - p + k) else { break };
        alpha[k] += 1;
        for l in k + 1..p {
            alpha[l] = alpha[l - 1] + 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_one() {
        let s = shuffles(1, 1);
        assert_eq!(s.len(), 2);
        assert_eq!((s[0].alpha.as_slice(), s[0].beta.as_slice(), s[0].signature), (&[0][..], &[1][..], 0));
        assert_eq!((s[1].alpha.as_slice(), s[1].beta.as_slice(), s[1].signature), (&[1][..], &[0][..], 1));
    }

    #[test]
    fn degenerate_sizes() {
        let s = shuffles(3, 0);
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].signature, 0);
        assert_eq!(shuffles(0, 2).len(), 1);
        assert_eq!(shuffles(0, 0).len(), 1);
        assert_eq!(shuffles(2, 2).len(), 6);
        assert_eq!(shuffles(4, 3).len(), 35);
    }

    #[test]
    fn partitions_cover() {
        for s in shuffles(3, 2).iter() {
            let mut all: Vec<usize> = s.alpha.iter().chain(&s.beta).copied().collect();
            all.sort();
            assert_eq!(all, vec![0, 1, 2, 3, 4]);
            assert!(s.alpha.windows(2).all(|w| w[0] < w[1]));
            assert!(s.beta.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
