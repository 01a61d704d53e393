use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use super::Automaton;

type StateSet = BTreeSet<usize>;

/// Smallest `N <= max_n` such that any accepted word `U` can be followed by
/// a connector of length at most `N` and then by any accepted word `V`.
///
/// For every final state `s` reachable from an initial state, the states
/// `R` reachable from `s` within `N` steps must jointly accept every word
/// of the language. That inclusion is checked by exploring pairs of subset
/// states up to depth `sample_len`, so the answer certifies the condition
/// only up to that word length.
pub fn find_e_witness(a: &Automaton, max_n: usize, sample_len: usize) -> Option<usize> {
    let a = a.prune_dead()?;
    let reachable = a.reachable_within(a.initial(), a.states().len());
    let ends: Vec<usize> = reachable.into_iter().filter(|&s| a.is_final(s)).collect();
    let start: StateSet = a.initial().iter().copied().collect();
    (0..=max_n).find(|&n| {
        ends.iter().all(|&s| {
            let r = a.reachable_within(&[s], n);
            covers(&a, &start, &r, sample_len)
        })
    })
}

fn step(a: &Automaton, set: &StateSet, symbol: usize) -> StateSet {
    a.transitions()
        .iter()
        .filter(|t| t.symbol == symbol && set.contains(&t.from))
        .map(|t| t.to)
        .collect()
}

fn covers(a: &Automaton, lang: &StateSet, from: &StateSet, depth: usize) -> bool {
    let accepts = |s: &StateSet| s.iter().any(|&q| a.is_final(q));
    let mut seen: BTreeSet<(StateSet, StateSet)> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert((lang.clone(), from.clone()));
    queue.push_back((lang.clone(), from.clone(), 0usize));
    while let Some((x, s, d)) = queue.pop_front() {
        if accepts(&x) && !accepts(&s) {
            return false;
        }
        if d == depth {
            continue;
        }
        for symbol in 0..a.alphabet().len() {
            let nx = step(a, &x, symbol);
            if nx.is_empty() {
                continue;
            }
            let ns = step(a, &s, symbol);
            if seen.insert((nx.clone(), ns.clone())) {
                queue.push_back((nx, ns, d + 1));
            }
        }
    }
    true
}
