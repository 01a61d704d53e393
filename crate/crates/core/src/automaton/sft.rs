use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Automaton, AutomatonError, Transition};

/// Automaton for the words with no factor in `forbidden`, built from the
/// Aho-Corasick trie of the forbidden words.
///
/// States are the trie nodes (proper prefixes of forbidden words) that are
/// reachable and do not end in a forbidden word, in breadth-first order with
/// the empty prefix first. Every state is final and the empty prefix is the
/// single initial state. An empty forbidden list gives the full shift.
pub fn build_sft_automaton(
    alphabet: &[String],
    forbidden: &[Vec<String>],
) -> Result<Automaton, AutomatonError> {
    if alphabet.is_empty() {
        return Err(AutomatonError::EmptyAlphabet);
    }
    let k = alphabet.len();
    let mut words = Vec::with_capacity(forbidden.len());
    for w in forbidden {
        if w.is_empty() {
            return Err(AutomatonError::EmptyForbiddenWord);
        }
        let mut idx = Vec::with_capacity(w.len());
        for s in w {
            let i = alphabet
                .iter()
                .position(|a| a == s)
                .ok_or_else(|| AutomatonError::UnknownSymbol(s.clone()))?;
            idx.push(i);
        }
        words.push(idx);
    }

    // trie
    let mut children: Vec<Vec<Option<usize>>> = alloc::vec![alloc::vec![None; k]];
    let mut bad = alloc::vec![false];
    let mut label: Vec<Vec<usize>> = alloc::vec![Vec::new()];
    for w in &words {
        let mut node = 0;
        for &c in w {
            node = match children[node][c] {
                Some(n) => n,
                None => {
                    children.push(alloc::vec![None; k]);
                    bad.push(false);
                    let mut l = label[node].clone();
                    l.push(c);
                    label.push(l);
                    let n = children.len() - 1;
                    children[node][c] = Some(n);
                    n
                }
            };
        }
        bad[node] = true;
    }

    // failure links and the completed goto function
    let nodes = children.len();
    let mut fail = alloc::vec![0usize; nodes];
    let mut goto = alloc::vec![alloc::vec![0usize; k]; nodes];
    let mut order = Vec::with_capacity(nodes);
    let mut queue = VecDeque::new();
    for c in 0..k {
        match children[0][c] {
            Some(n) => {
                goto[0][c] = n;
                queue.push_back(n);
            }
            None => goto[0][c] = 0,
        }
    }
    order.push(0);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        bad[u] = bad[u] || bad[fail[u]];
        for c in 0..k {
            match children[u][c] {
                Some(n) => {
                    fail[n] = goto[fail[u]][c];
                    goto[u][c] = n;
                    queue.push_back(n);
                }
                None => goto[u][c] = goto[fail[u]][c],
            }
        }
    }

    // keep good nodes reachable from the root
    let mut index = alloc::vec![usize::MAX; nodes];
    let mut kept = Vec::new();
    let mut queue = VecDeque::new();
    index[0] = 0;
    kept.push(0);
    queue.push_back(0);
    while let Some(u) = queue.pop_front() {
        for c in 0..k {
            let v = goto[u][c];
            if !bad[v] && index[v] == usize::MAX {
                index[v] = kept.len();
                kept.push(v);
                queue.push_back(v);
            }
        }
    }
    let mut transitions = Vec::new();
    for &u in &kept {
        for c in 0..k {
            let v = goto[u][c];
            if !bad[v] {
                transitions.push(Transition {
                    from: index[u],
                    symbol: c,
                    to: index[v],
                });
            }
        }
    }
    let states: Vec<String> = kept
        .iter()
        .map(|&u| {
            if u == 0 {
                String::from("ε")
            } else {
                label[u].iter().map(|&c| alphabet[c].as_str()).collect()
            }
        })
        .collect();
    let all: Vec<usize> = (0..states.len()).collect();
    Automaton::new(alphabet.to_vec(), states, transitions, alloc::vec![0], all)
}
