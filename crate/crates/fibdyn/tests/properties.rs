//! Randomized invariants for the core machinery.

use proptest::prelude::*;

use fibdyn::conjugacy::{substitutions_with_matrix, time_reversal, z_triples};
use fibdyn::fib::{rotation_code, RotationCode};
use fibdyn::golden::{left_eigenvector_check, permutation_classes, remark_matrix};
use fibdyn::word::parikh;
use fibdyn::{AlphabetStyle, IncidenceMatrix, QuadInt, Substitution, Word};

fn substitution_strategy() -> impl Strategy<Value = Substitution> {
    (2usize..=4).prop_flat_map(|k| {
        proptest::collection::vec(proptest::collection::vec(0..k, 1..=3), k)
            .prop_map(|images| Substitution::new(images).unwrap())
    })
}

fn matrix_strategy(dim: usize) -> impl Strategy<Value = IncidenceMatrix> {
    proptest::collection::vec(0i64..=2, dim * dim)
        .prop_filter("no zero rows", move |data| {
            (0..dim).all(|i| data[i * dim..(i + 1) * dim].iter().any(|&e| e != 0))
        })
        .prop_map(move |data| IncidenceMatrix::new(dim, data).unwrap())
}

fn permutation_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn multinomial(row: &[i64]) -> u128 {
    let total: i64 = row.iter().sum();
    let factorial = |n: i64| -> u128 { (1..=n as u128).product::<u128>().max(1) };
    row.iter()
        .fold(factorial(total), |acc, &e| acc / factorial(e))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn fixed_point_prefixes_cohere(a in 1usize..=400, b in 1usize..=400) {
        let phi = Substitution::fibonacci();
        let (short, long) = (a.min(b), a.max(b));
        let p1 = phi.fixed_point_prefix(0, short).unwrap();
        let p2 = phi.fixed_point_prefix(0, long).unwrap();
        prop_assert_eq!(&p2[..short], &p1[..]);
    }

    #[test]
    fn languages_nest(n in 1usize..=12) {
        let phi = Substitution::fibonacci();
        let small = phi.language(n).unwrap();
        let big = phi.language(n + 1).unwrap();
        for w in &big.words {
            for win in w.windows(n) {
                prop_assert!(small.contains(win));
            }
        }
        // every factor extends to a longer one
        for w in &small.words {
            prop_assert!(big.words.iter().any(|v| v[..n] == w[..]));
        }
    }

    #[test]
    fn counts_transform_linearly(s in substitution_strategy(), raw in proptest::collection::vec(0usize..4, 0..12), e in 1u32..=6) {
        let k = s.alphabet_size();
        let w: Word = raw.into_iter().map(|a| a % k).collect();
        let image = s.apply(&w).unwrap();
        let pw = parikh(&w, k).unwrap();
        let pi = parikh(&image, k).unwrap();
        let m = s.incidence_matrix();
        for j in 0..k {
            let expected: u64 = (0..k).map(|a| pw[a] * m.get(a, j) as u64).sum();
            prop_assert_eq!(pi[j], expected);
        }
        let pow_matrix = s.power(e).unwrap().incidence_matrix();
        let matrix_pow = m.pow(e).unwrap();
        prop_assert_eq!(pow_matrix.entries(), matrix_pow.entries());
    }

    #[test]
    fn full_rank_powers_stay_injective(s in substitution_strategy(), e in 1u32..=6) {
        if s.has_full_rank() {
            prop_assert!(s.power(e).unwrap().is_injective());
        }
    }

    #[test]
    fn reversal_is_an_involution(s in substitution_strategy()) {
        let rev = time_reversal(&s);
        let back_again = time_reversal(&rev);
        prop_assert_eq!(back_again.images(), s.images());
        for (img, rimg) in s.images().iter().zip(rev.images()) {
            let mut back: Word = rimg.clone();
            back.reverse();
            prop_assert_eq!(&back, img);
        }
    }

    #[test]
    fn reversal_reverses_the_language(s in substitution_strategy(), l in 1usize..=6) {
        if !s.is_primitive() {
            return Ok(());
        }
        let rev = time_reversal(&s);
        let lang = s.language(l).unwrap();
        let rlang = rev.language(l).unwrap();
        let reversed: std::collections::BTreeSet<Word> = lang
            .words
            .iter()
            .map(|w| w.iter().rev().copied().collect())
            .collect();
        prop_assert_eq!(reversed, rlang.words);
    }

    #[test]
    fn z_triples_survive_relabeling(s in substitution_strategy(), seed in any::<u64>()) {
        if !s.is_primitive() {
            return Ok(());
        }
        let k = s.alphabet_size();
        // derive a permutation from the seed
        let mut perm: Vec<usize> = (0..k).collect();
        let mut state = seed;
        for i in (1..k).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let mut images = vec![Word::new(); k];
        for a in 0..k {
            images[perm[a]] = s.image(a).unwrap().iter().map(|&b| perm[b]).collect();
        }
        let relabeled = Substitution::new(images).unwrap();
        let before = z_triples(&s).unwrap();
        let after = z_triples(&relabeled).unwrap();
        prop_assert_eq!(before.is_empty(), after.is_empty());
        prop_assert_eq!(before.len(), after.len());
    }

    #[test]
    fn matrix_listing_counts(m in matrix_strategy(3)) {
        let subs = substitutions_with_matrix(&m).unwrap();
        let expected: u128 = m.rows().iter().map(|r| multinomial(r)).product();
        prop_assert_eq!(subs.len() as u128, expected);
        let mut seen = std::collections::BTreeSet::new();
        for s in &subs {
            let sm = s.incidence_matrix();
            prop_assert_eq!(sm.entries(), m.entries());
            prop_assert!(seen.insert(s.images().to_vec()));
        }
    }

    #[test]
    fn conjugated_matrices_share_a_class(m in matrix_strategy(3), p in permutation_strategy(3)) {
        let conj = m.permute(&p).unwrap();
        let classes = permutation_classes(&[m, conj]).unwrap();
        prop_assert_eq!(classes.len(), 1);
    }

    #[test]
    fn grammar_roundtrips(s in substitution_strategy()) {
        for style in [AlphabetStyle::ZeroBased, AlphabetStyle::OneBased, AlphabetStyle::Letters] {
            let text = s.format(style);
            let (back, got_style) = Substitution::parse(&text).unwrap();
            prop_assert_eq!(back.images(), s.images());
            prop_assert_eq!(got_style, style);
        }
    }

    #[test]
    fn rotation_windows_are_factors(
        p in -12i64..=12,
        q in -12i64..=12,
        from in -40i64..=40,
        len in 1usize..=25,
    ) {
        let phi = Substitution::fibonacci();
        let lang = phi.language(len).unwrap();
        let z = QuadInt::new(p, q);
        let words = match rotation_code(z, from, from + len as i64 - 1) {
            RotationCode::Exact(w) => vec![w],
            RotationCode::Ambiguous { left, right, .. } => vec![left, right],
        };
        for w in words {
            prop_assert!(lang.contains(&w), "window {:?} escapes", w);
        }
    }
}

#[test]
fn fibonacci_complexity_is_linear() {
    let phi = Substitution::fibonacci();
    for n in 1..=30 {
        assert_eq!(phi.complexity(n).unwrap(), n + 1);
    }
}

#[test]
fn structured_family_keeps_golden_row_vector() {
    for r in 3..=10 {
        assert!(left_eigenvector_check(&remark_matrix(r).unwrap()));
    }
}
