//! Finite automata over a finite alphabet.

mod catalog;
mod sft;
mod witness;

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;

pub use catalog::{catalog_automaton, free_group_letters, CatalogName};
pub use sft::build_sft_automaton;
pub use witness::find_e_witness;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AutomatonError {
    #[error("alphabet is empty")]
    EmptyAlphabet,
    #[error("automaton has no states")]
    NoStates,
    #[error("initial state set is empty")]
    EmptyInitial,
    #[error("final state set is empty")]
    EmptyFinal,
    #[error("duplicate symbol '{0}'")]
    DuplicateSymbol(String),
    #[error("duplicate state '{0}'")]
    DuplicateState(String),
    #[error("transition {index}: state index {state} out of range")]
    StateOutOfRange { index: usize, state: usize },
    #[error("transition {index}: symbol index {symbol} out of range")]
    SymbolOutOfRange { index: usize, symbol: usize },
    #[error("state index {0} out of range")]
    BadStateIndex(usize),
    #[error("empty forbidden word")]
    EmptyForbiddenWord,
    #[error("unknown symbol '{0}'")]
    UnknownSymbol(String),
    #[error("{0}")]
    Catalog(&'static str),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub from: usize,
    pub symbol: usize,
    pub to: usize,
}

/// A labeled directed multigraph with initial and final state sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automaton {
    alphabet: Vec<String>,
    states: Vec<String>,
    transitions: Vec<Transition>,
    initial: Vec<usize>,
    final_states: Vec<usize>,
    deterministic: bool,
    vertex_labeled: bool,
}

/// Edge multiplicities `a_ij`, indexed in state declaration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    n: usize,
    data: Vec<u64>,
}

impl AdjacencyMatrix {
    pub fn from_rows(rows: &[&[u64]]) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            assert_eq!(r.len(), n, "adjacency matrix must be square");
            data.extend_from_slice(r);
        }
        AdjacencyMatrix { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.data.iter().map(|&a| a as f64).collect()
    }

    pub fn is_zero_one(&self) -> bool {
        self.data.iter().all(|&a| a <= 1)
    }

    /// Strong connectivity of the digraph with an edge wherever `a_ij > 0`.
    pub fn is_irreducible(&self) -> bool {
        let n = self.n;
        if n == 0 {
            return false;
        }
        let fwd = reach(n, 0, |i, j| self.get(i, j) > 0);
        let bwd = reach(n, 0, |i, j| self.get(j, i) > 0);
        fwd.iter().all(|&x| x) && bwd.iter().all(|&x| x)
    }
}

fn reach(n: usize, start: usize, edge: impl Fn(usize, usize) -> bool) -> Vec<bool> {
    let mut seen = alloc::vec![false; n];
    let mut queue = VecDeque::new();
    seen[start] = true;
    queue.push_back(start);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if !seen[j] && edge(i, j) {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    seen
}

impl Automaton {
    /// Validates indices and derives the determinism and vertex-label flags.
    pub fn new(
        alphabet: Vec<String>,
        states: Vec<String>,
        transitions: Vec<Transition>,
        initial: Vec<usize>,
        final_states: Vec<usize>,
    ) -> Result<Self, AutomatonError> {
        if alphabet.is_empty() {
            return Err(AutomatonError::EmptyAlphabet);
        }
        if states.is_empty() {
            return Err(AutomatonError::NoStates);
        }
        let mut seen = BTreeSet::new();
        for s in &alphabet {
            if !seen.insert(s.as_str()) {
                return Err(AutomatonError::DuplicateSymbol(s.clone()));
            }
        }
        seen.clear();
        for s in &states {
            if !seen.insert(s.as_str()) {
                return Err(AutomatonError::DuplicateState(s.clone()));
            }
        }
        for (index, t) in transitions.iter().enumerate() {
            for state in [t.from, t.to] {
                if state >= states.len() {
                    return Err(AutomatonError::StateOutOfRange { index, state });
                }
            }
            if t.symbol >= alphabet.len() {
                return Err(AutomatonError::SymbolOutOfRange {
                    index,
                    symbol: t.symbol,
                });
            }
        }
        let initial = sorted_set(initial, states.len())?;
        let final_states = sorted_set(final_states, states.len())?;
        if initial.is_empty() {
            return Err(AutomatonError::EmptyInitial);
        }
        if final_states.is_empty() {
            return Err(AutomatonError::EmptyFinal);
        }

        let mut out_labels = BTreeSet::new();
        let mut deterministic = true;
        for t in &transitions {
            if !out_labels.insert((t.from, t.symbol)) {
                deterministic = false;
            }
        }
        let mut in_label: BTreeMap<usize, usize> = BTreeMap::new();
        let mut vertex_labeled = true;
        for t in &transitions {
            match in_label.insert(t.to, t.symbol) {
                Some(prev) if prev != t.symbol => vertex_labeled = false,
                _ => {}
            }
        }
        Ok(Automaton {
            alphabet,
            states,
            transitions,
            initial,
            final_states,
            deterministic,
            vertex_labeled,
        })
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn initial(&self) -> &[usize] {
        &self.initial
    }

    pub fn final_states(&self) -> &[usize] {
        &self.final_states
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.final_states.binary_search(&state).is_ok()
    }

    /// No state has two outgoing transitions with one symbol.
    pub fn deterministic(&self) -> bool {
        self.deterministic
    }

    /// All incoming edges of each state carry one common symbol.
    pub fn vertex_labeled(&self) -> bool {
        self.vertex_labeled
    }

    /// Deterministic with a single initial state, so paths and words coincide.
    pub fn counts_words(&self) -> bool {
        self.deterministic && self.initial.len() == 1
    }

    pub fn symbol_index(&self, name: &str) -> Option<usize> {
        self.alphabet.iter().position(|s| s == name)
    }

    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.states.iter().position(|s| s == name)
    }

    pub fn adjacency(&self) -> AdjacencyMatrix {
        let n = self.states.len();
        let mut data = alloc::vec![0u64; n * n];
        for t in &self.transitions {
            data[t.from * n + t.to] += 1;
        }
        AdjacencyMatrix { n, data }
    }

    /// Strong connectivity of the transition digraph.
    pub fn is_ergodic(&self) -> bool {
        self.adjacency().is_irreducible()
    }

    /// The symbol carried by each state's incoming edges, when every state
    /// has incoming edges and the automaton is vertex labeled.
    pub fn state_labels(&self) -> Option<Vec<usize>> {
        if !self.vertex_labeled {
            return None;
        }
        let mut labels = alloc::vec![None; self.states.len()];
        for t in &self.transitions {
            labels[t.to] = Some(t.symbol);
        }
        labels.into_iter().collect()
    }

    /// States reachable from `from` by words of length at most `n`.
    pub fn reachable_within(&self, from: &[usize], n: usize) -> BTreeSet<usize> {
        let mut seen: BTreeSet<usize> = from.iter().copied().collect();
        let mut frontier: Vec<usize> = from.to_vec();
        for _ in 0..n {
            let mut next = Vec::new();
            for &s in &frontier {
                for t in self.transitions.iter().filter(|t| t.from == s) {
                    if seen.insert(t.to) {
                        next.push(t.to);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        seen
    }

    /// States from which a final state can be reached.
    pub fn live_states(&self) -> Vec<bool> {
        let n = self.states.len();
        let mut live = alloc::vec![false; n];
        let mut queue = VecDeque::new();
        for &f in &self.final_states {
            live[f] = true;
            queue.push_back(f);
        }
        while let Some(s) = queue.pop_front() {
            for t in self.transitions.iter().filter(|t| t.to == s) {
                if !live[t.from] {
                    live[t.from] = true;
                    queue.push_back(t.from);
                }
            }
        }
        live
    }

    /// Removes dead states. `None` when no initial state is live, i.e. the
    /// language is empty.
    pub fn prune_dead(&self) -> Option<Automaton> {
        let live = self.live_states();
        if live.iter().all(|&l| l) {
            return Some(self.clone());
        }
        let mut index = alloc::vec![usize::MAX; live.len()];
        let mut states = Vec::new();
        for (i, name) in self.states.iter().enumerate() {
            if live[i] {
                index[i] = states.len();
                states.push(name.clone());
            }
        }
        let transitions = self
            .transitions
            .iter()
            .filter(|t| live[t.from] && live[t.to])
            .map(|t| Transition {
                from: index[t.from],
                symbol: t.symbol,
                to: index[t.to],
            })
            .collect();
        let initial: Vec<usize> = self
            .initial
            .iter()
            .filter(|&&s| live[s])
            .map(|&s| index[s])
            .collect();
        let final_states = self.final_states.iter().map(|&s| index[s]).collect();
        Automaton::new(self.alphabet.clone(), states, transitions, initial, final_states).ok()
    }

    /// Whether the automaton accepts the word given as symbol indices,
    /// counting accepting paths.
    pub fn accepting_paths(&self, word: &[usize]) -> u64 {
        let n = self.states.len();
        let mut current = alloc::vec![0u64; n];
        for &s in &self.initial {
            current[s] = 1;
        }
        for &a in word {
            let mut next = alloc::vec![0u64; n];
            for t in self.transitions.iter().filter(|t| t.symbol == a) {
                next[t.to] += current[t.from];
            }
            current = next;
        }
        self.final_states.iter().map(|&f| current[f]).sum()
    }
}

fn sorted_set(v: Vec<usize>, n: usize) -> Result<Vec<usize>, AutomatonError> {
    let set: BTreeSet<usize> = v.into_iter().collect();
    if let Some(&bad) = set.iter().find(|&&s| s >= n) {
        return Err(AutomatonError::BadStateIndex(bad));
    }
    Ok(set.into_iter().collect())
}

pub(crate) fn names<I: IntoIterator<Item = S>, S: Into<String>>(it: I) -> Vec<String> {
    it.into_iter().map(Into::into).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn single_loop_is_ergodic() {
        let a = Automaton::new(
            names(["x"]),
            names(["s"]),
            vec![Transition { from: 0, symbol: 0, to: 0 }],
            vec![0],
            vec![0],
        )
        .unwrap();
        assert!(a.is_ergodic());
        assert_eq!(a.adjacency(), AdjacencyMatrix::from_rows(&[&[1]]));
    }

    #[test]
    fn validation_errors() {
        let e = Automaton::new(names(["x"]), names(["s"]), vec![], vec![], vec![0]);
        assert_eq!(e, Err(AutomatonError::EmptyInitial));
        let e = Automaton::new(
            names(["x"]),
            names(["s"]),
            vec![Transition { from: 0, symbol: 0, to: 3 }],
            vec![0],
            vec![0],
        );
        assert_eq!(e, Err(AutomatonError::StateOutOfRange { index: 0, state: 3 }));
        let e = Automaton::new(Vec::new(), names(["s"]), vec![], vec![0], vec![0]);
        assert_eq!(e, Err(AutomatonError::EmptyAlphabet));
    }

    #[test]
    fn pruning_removes_dead_state() {
        let a = Automaton::new(
            names(["x", "y"]),
            names(["s", "dead"]),
            vec![
                Transition { from: 0, symbol: 0, to: 0 },
                Transition { from: 0, symbol: 1, to: 1 },
                Transition { from: 1, symbol: 1, to: 1 },
            ],
            vec![0],
            vec![0],
        )
        .unwrap();
        let p = a.prune_dead().unwrap();
        assert_eq!(p.states().len(), 1);
        assert_eq!(p.transitions().len(), 1);
    }
}
