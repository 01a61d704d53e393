use langrowth_core::polyalg::{det_poly_matrix, MultiPoly, PolyMatrix};
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly_strategy(nvars: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..3, nvars), -4i64..5), 0..4).prop_map(
        move |terms| {
            MultiPoly::from_terms(nvars, terms.into_iter().map(|(e, c)| (e, BigInt::from(c))))
                .unwrap()
        },
    )
}

fn matrix_strategy(n: usize, nvars: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(poly_strategy(nvars), n * n).prop_map(move |entries| {
        let mut it = entries.into_iter();
        let rows = (0..n).map(|_| (0..n).map(|_| it.next().unwrap()).collect()).collect();
        PolyMatrix::from_rows(rows).unwrap()
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn sign(p: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn leibniz(m: &PolyMatrix) -> MultiPoly {
    let n = m.size();
    let mut acc = MultiPoly::zero(m.nvars());
    for p in permutations(n) {
        let mut term = MultiPoly::constant(m.nvars(), sign(&p));
        for (i, &j) in p.iter().enumerate() {
            term = &term * m.get(i, j);
        }
        acc = &acc + &term;
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bareiss_matches_permutation_expansion(n in 1usize..=4, seed in prop::collection::vec(poly_strategy(2), 16)) {
        let mut it = seed.into_iter();
        let rows = (0..n).map(|_| (0..n).map(|_| it.next().unwrap()).collect()).collect();
        let m = PolyMatrix::from_rows(rows).unwrap();
        prop_assert_eq!(det_poly_matrix(&m).unwrap(), leibniz(&m));
    }

    #[test]
    fn determinant_is_multiplicative(a in matrix_strategy(3, 2), b in matrix_strategy(3, 2)) {
        let lhs = det_poly_matrix(&a.mul(&b)).unwrap();
        let rhs = &det_poly_matrix(&a).unwrap() * &det_poly_matrix(&b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_division_round_trip(p in poly_strategy(3), q in poly_strategy(3)) {
        prop_assume!(!q.is_zero());
        let prod = &p * &q;
        prop_assert_eq!(prod.div_exact(&q), Some(p));
    }
}
