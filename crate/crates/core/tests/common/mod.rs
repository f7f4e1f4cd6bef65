#![allow(dead_code)]

use distlat::{ArcSet, ChainCover, Poset};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A random order on `0..n`: random covers between a shuffled sequence.
pub fn random_poset(rng: &mut StdRng, n: usize) -> Poset {
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
    Poset::from_covers(n, &covers).unwrap()
}

/// Each loop kept with high probability, each strict comparability with a
/// random density.
pub fn random_arcs(rng: &mut StdRng, poset: &Poset) -> ArcSet {
    let keep = rng.gen_range(0.3..1.0);
    let arcs: Vec<_> = poset
        .comparabilities()
        .filter(|&(x, y)| rng.gen_bool(if x == y { 0.9 } else { keep }))
        .collect();
    ArcSet::from_arcs(poset, arcs).unwrap()
}

/// Random chains, each through some still uncovered element, until every
/// element is covered. At most `n` chains.
pub fn random_cover(rng: &mut StdRng, poset: &Poset) -> ChainCover {
    let n = poset.len();
    let order = poset.linear_extension();
    let mut chains: Vec<Vec<usize>> = Vec::new();
    let mut covered = vec![false; n];
    loop {
        let missing: Vec<usize> = (0..n).filter(|&x| !covered[x]).collect();
        let Some(&m) = missing.choose(rng) else { break };
        let mut chain: Vec<usize> = Vec::new();
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
    ChainCover::new(poset, chains).unwrap()
}

/// The running four-element example: a=0, b=1, c=2, d=3 with a<c, b<c,
/// b<d, and every arc except (b, c).
pub fn sample() -> (Poset, ArcSet) {
    let p = Poset::from_covers(4, &[(0, 2), (1, 2), (1, 3)]).unwrap();
    let mut a = ArcSet::all(&p);
    a.remove(1, 2);
    (p, a)
}
