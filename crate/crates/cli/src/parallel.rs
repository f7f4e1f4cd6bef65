//! Threaded versions of the candidate loop and the oracle. Results are the
//! same as the sequential library calls.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use distlat::oracle::{enumerate_posets, oracle_recognize, oracle_recognize_in, OracleOptions, MAX_ORACLE_VERTICES};
use distlat::recognize::{
    candidate_pairs, dispensable_edges, recognize_components, recognize_dl, try_candidate, NoReason, RecognizeOptions,
};
use distlat::{Lattice, OracleError, RecognitionResult, ReflexiveGraph};

/// Like `recognize_driver`, with the `(0, 1)` candidates of each R-thin
/// component tried on `jobs` threads. The lexicographically first
/// successful candidate wins, as in the sequential loop.
pub fn recognize(graph: &ReflexiveGraph, options: RecognizeOptions, jobs: usize) -> RecognitionResult {
    recognize_components(graph, options, |g| {
        if jobs <= 1 || g.len() == 1 {
            return recognize_dl(g, options).expect("connected R-thin component");
        }
        decide(g, options, jobs)
    })
}

fn decide(graph: &ReflexiveGraph, options: RecognizeOptions, jobs: usize) -> RecognitionResult {
    let skeleton = dispensable_edges(graph).graph;
    let pairs = match candidate_pairs(graph, &skeleton, options.prune_candidates) {
        Ok(p) => p,
        Err(leaves) => return RecognitionResult::No(NoReason::TooManyLeaves { leaves }),
    };
    let best = AtomicUsize::new(usize::MAX);
    let found: Mutex<Option<(usize, Lattice)>> = Mutex::new(None);
    std::thread::scope(|s| {
        for t in 0..jobs {
            let (pairs, skeleton, best, found) = (&pairs, &skeleton, &best, &found);
            s.spawn(move || {
                for k in (t..pairs.len()).step_by(jobs) {
                    if k > best.load(Ordering::Relaxed) {
                        return;
                    }
                    let (zero, one) = pairs[k];
                    if let Some(l) = try_candidate(graph, skeleton, zero, one) {
                        best.fetch_min(k, Ordering::Relaxed);
                        let mut slot = found.lock().expect("no panics while held");
                        if slot.as_ref().is_none_or(|(j, _)| k < *j) {
                            *slot = Some((k, l));
                        }
                        return;
                    }
                }
            });
        }
    });
    match found.into_inner().expect("no panics while held") {
        Some((_, l)) => RecognitionResult::Yes(l),
        None => RecognitionResult::No(NoReason::NoCandidate),
    }
}

/// `oracle_recognize` with the enumerated orders split into `jobs` chunks.
pub fn oracle(graph: &ReflexiveGraph, options: OracleOptions, jobs: usize) -> Result<Vec<Lattice>, OracleError> {
    if jobs <= 1 || graph.len() > MAX_ORACLE_VERTICES {
        return oracle_recognize(graph, options);
    }
    let posets = enumerate_posets(graph.len())?;
    let chunk = posets.len().div_ceil(jobs).max(1);
    let parts: Vec<Vec<Lattice>> = std::thread::scope(|s| {
        let handles: Vec<_> = posets
            .chunks(chunk)
            .map(|part| s.spawn(move || oracle_recognize_in(graph, part, options)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("oracle worker")).collect()
    });
    Ok(parts.concat())
}
