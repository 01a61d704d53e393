use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{names, Automaton, AutomatonError, Transition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalogName {
    /// Words over {a, b} with no factor "bb".
    Fibonacci,
    /// All words over `d` letters.
    FreeMonoid(usize),
    /// Freely reduced words of F_m read from a single start state.
    FreeGroupUnambiguous(usize),
    /// The same language on the strongly connected automaton whose states
    /// are the letters; every state is initial and final.
    FreeGroupErgodic(usize),
}

/// Letters of F_m: generators `a, b, ...` then their inverses `A, B, ...`.
/// The inverse of letter `k` is letter `(k + m) mod 2m`.
pub fn free_group_letters(m: usize) -> Vec<String> {
    let lower = (0..m).map(|i| letter(i, false));
    let upper = (0..m).map(|i| letter(i, true));
    lower.chain(upper).collect()
}

fn letter(i: usize, inverse: bool) -> String {
    if i < 26 {
        let base = if inverse { b'A' } else { b'a' };
        String::from(char::from(base + i as u8))
    } else if inverse {
        format!("X{}", i + 1)
    } else {
        format!("x{}", i + 1)
    }
}

pub fn catalog_automaton(name: CatalogName) -> Result<Automaton, AutomatonError> {
    match name {
        CatalogName::Fibonacci => fibonacci(),
        CatalogName::FreeMonoid(d) => free_monoid(d),
        CatalogName::FreeGroupUnambiguous(m) => free_group(m, false),
        CatalogName::FreeGroupErgodic(m) => free_group(m, true),
    }
}

fn fibonacci() -> Result<Automaton, AutomatonError> {
    let t = |from, symbol, to| Transition { from, symbol, to };
    Automaton::new(
        names(["a", "b"]),
        names(["s1", "s2"]),
        alloc::vec![t(0, 0, 0), t(0, 1, 1), t(1, 0, 0)],
        alloc::vec![0],
        alloc::vec![0, 1],
    )
}

fn free_monoid(d: usize) -> Result<Automaton, AutomatonError> {
    if d == 0 {
        return Err(AutomatonError::Catalog("free monoid needs d >= 1"));
    }
    let alphabet: Vec<String> = (0..d).map(|i| letter(i, false)).collect();
    let transitions = (0..d)
        .map(|symbol| Transition {
            from: 0,
            symbol,
            to: 0,
        })
        .collect();
    Automaton::new(alphabet, names(["s0"]), transitions, alloc::vec![0], alloc::vec![0])
}

fn free_group(m: usize, ergodic: bool) -> Result<Automaton, AutomatonError> {
    if m < 2 {
        return Err(AutomatonError::Catalog("free group automata need m >= 2"));
    }
    let k = 2 * m;
    let alphabet = free_group_letters(m);
    let offset = usize::from(!ergodic);
    let mut states = Vec::with_capacity(k + offset);
    if !ergodic {
        states.push(String::from("s0"));
    }
    states.extend(alphabet.iter().cloned());
    let mut transitions = Vec::new();
    if !ergodic {
        for symbol in 0..k {
            transitions.push(Transition {
                from: 0,
                symbol,
                to: symbol + offset,
            });
        }
    }
    for x in 0..k {
        for y in 0..k {
            if y != (x + m) % k {
                transitions.push(Transition {
                    from: x + offset,
                    symbol: y,
                    to: y + offset,
                });
            }
        }
    }
    let all: Vec<usize> = (0..states.len()).collect();
    let initial = if ergodic { all.clone() } else { alloc::vec![0] };
    Automaton::new(alphabet, states, transitions, initial, all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::AdjacencyMatrix;

    #[test]
    fn fibonacci_shape() {
        let a = catalog_automaton(CatalogName::Fibonacci).unwrap();
        assert!(a.deterministic() && a.vertex_labeled());
        assert_eq!(a.transitions().len(), 3);
        assert_eq!(a.adjacency(), AdjacencyMatrix::from_rows(&[&[1, 1], &[1, 0]]));
    }

    #[test]
    fn free_group_shapes() {
        let u = catalog_automaton(CatalogName::FreeGroupUnambiguous(2)).unwrap();
        assert_eq!(u.states().len(), 5);
        assert!(!u.is_ergodic());
        assert!(u.counts_words());
        let e = catalog_automaton(CatalogName::FreeGroupErgodic(2)).unwrap();
        assert_eq!(e.states().len(), 4);
        assert_eq!(e.transitions().len(), 12);
        assert_eq!(e.initial().len(), 4);
        assert!(e.is_ergodic() && e.deterministic() && e.vertex_labeled());
        let j = [1u64, 1];
        let k = [[0u64, 1], [1, 0]];
        for i in 0..4 {
            for c in 0..4 {
                let same_block = (i < 2) == (c < 2);
                let want = if same_block { j[c % 2] } else { k[i % 2][c % 2] };
                assert_eq!(e.adjacency().get(i, c), want, "entry ({i},{c})");
            }
        }
        assert!(catalog_automaton(CatalogName::FreeGroupErgodic(1)).is_err());
    }

    #[test]
    fn free_monoid_single_state() {
        let a = catalog_automaton(CatalogName::FreeMonoid(2)).unwrap();
        assert_eq!(a.states().len(), 1);
        assert_eq!(a.adjacency(), AdjacencyMatrix::from_rows(&[&[2]]));
        let one = catalog_automaton(CatalogName::FreeMonoid(1)).unwrap();
        assert_eq!(one.adjacency(), AdjacencyMatrix::from_rows(&[&[1]]));
    }
}
