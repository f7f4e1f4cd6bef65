//! Seeded random instances: posets, arc sets and chain covers.

use distlat::{ArcSet, ChainCover, Poset};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

/// A random order on `0..n`: each pair of a shuffled sequence becomes a
/// cover with a density drawn per poset.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize) -> Poset {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let density = rng.gen_range(0.1..0.6);
    let mut covers = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                covers.push((perm[i], perm[j]));
            }
        }
    }
    Poset::from_covers(n, &covers).expect("covers follow a permutation")
}

/// Loops are kept with probability 0.9, strict comparabilities with a
/// density drawn per arc set.
pub fn random_arcs<R: Rng>(rng: &mut R, poset: &Poset) -> ArcSet {
    let keep = rng.gen_range(0.3..1.0);
    let arcs: Vec<_> = poset
        .comparabilities()
        .filter(|&(x, y)| rng.gen_bool(if x == y { 0.9 } else { keep }))
        .collect();
    ArcSet::from_arcs(poset, arcs).expect("arcs are comparabilities")
}

/// Chains through randomly chosen uncovered elements until all are covered,
/// so at most `n` chains and usually some overlap.
pub fn random_cover<R: Rng>(rng: &mut R, poset: &Poset) -> ChainCover {
    let n = poset.len();
    let order = poset.linear_extension();
    let mut chains: Vec<Vec<usize>> = Vec::new();
    let mut covered = vec![false; n];
    loop {
        let missing: Vec<usize> = (0..n).filter(|&x| !covered[x]).collect();
        let Some(&m) = missing.choose(rng) else { break };
        let mut chain = Vec::new();
        let mut past_m = false;
        for &x in &order {
            if x == m {
                chain.push(m);
                past_m = true;
                continue;
            }
            let fits = chain.last().is_none_or(|&last| poset.lt(last, x));
            if fits && (past_m || poset.lt(x, m)) && rng.gen_bool(0.5) {
                chain.push(x);
            }
        }
        for &x in &chain {
            covered[x] = true;
        }
        chains.push(chain);
    }
    ChainCover::new(poset, chains).expect("every element is covered")
}

/// `count` instances `(P, A)` with `|P|` uniform in `0..=max_n`.
pub fn instances(seed: u64, count: usize, max_n: usize) -> Vec<(Poset, ArcSet)> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(0..=max_n);
            let p = random_poset(&mut rng, n);
            let a = random_arcs(&mut rng, &p);
            (p, a)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_corpus_is_reproducible() {
        assert_eq!(instances(7, 30, 6), instances(7, 30, 6));
        assert!(instances(7, 30, 6).iter().all(|(p, a)| p.len() <= 6 && a.is_valid_for(p)));
    }

    #[test]
    fn covers_are_valid() {
        let mut rng = StdRng::seed_from_u64(3);
        for (p, _) in instances(1, 50, 6) {
            let c = random_cover(&mut rng, &p);
            assert!(c.len() <= p.len());
        }
    }
}
