//! Well-based distance sets.
//!
//! A sorted set `a_1 < ... < a_k` stands for the words `A_i = 1 0^{a_i-1} 1`.
//! It is well-based when, for every `i > 1`, turning any nonempty choice
//! of the zeros of `A_i` into ones yields a word containing some earlier
//! `A_j` as a factor. The ones of such a word split `a_i` into the gaps
//! between consecutive ones, and the factor `A_j` occurs exactly when
//! some gap equals `a_j`. So `A_i` passes iff no composition of `a_i`
//! into at least two parts avoids `{a_1, ..., a_{i-1}}`.

use serde::Serialize;

use crate::counting::BigCount;

use super::sequences::{rational_series, IntPolynomial};
use super::FormulaError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WellBasedResult {
    pub is_well_based: bool,
    /// The minimal set `B` added to make the input well-based.
    pub completion: Vec<usize>,
    pub combined: Vec<usize>,
}

fn is_strictly_increasing(set: &[usize]) -> bool {
    set.windows(2).all(|w| w[0] < w[1])
}

/// Whether the sorted set is well-based. `{1}` alone counts as
/// well-based; every well-based set contains 1.
pub fn is_well_based(set: &[usize]) -> bool {
    if set.first() != Some(&1) || !is_strictly_increasing(set) {
        return false;
    }
    (1..set.len()).all(|i| !has_avoiding_split(set[i], &set[..i]))
}

/// Is there a composition of `total` into two or more parts, none of
/// which lies in `forbidden`?
fn has_avoiding_split(total: usize, forbidden: &[usize]) -> bool {
    let allowed = |p: usize| forbidden.binary_search(&p).is_err();
    // reach[m]: m is a sum of one or more allowed parts
    let mut reach = vec![false; total + 1];
    for m in 1..total {
        reach[m] = allowed(m) || (1..m).any(|p| allowed(p) && reach[m - p]);
    }
    (1..total).any(|p| allowed(p) && reach[total - p])
}

/// Finds the first `B` within `[n] \ A`, by increasing size and then
/// lexicographically, such that `A ∪ B` is well-based.
pub fn well_based_completion(
    distances: &[usize],
    n: usize,
) -> Result<WellBasedResult, FormulaError> {
    if distances.is_empty()
        || !is_strictly_increasing(distances)
        || distances[0] == 0
        || *distances.last().unwrap() >= n
    {
        return Err(FormulaError::InvalidDistances(distances.to_vec()));
    }
    let candidates: Vec<usize> = (1..=n)
        .filter(|d| distances.binary_search(d).is_err())
        .collect();
    for size in 0..=candidates.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let extra: Vec<usize> = idx.iter().map(|&i| candidates[i]).collect();
            let mut combined: Vec<usize> = distances.iter().chain(&extra).copied().collect();
            combined.sort_unstable();
            if is_well_based(&combined) {
                return Ok(WellBasedResult {
                    is_well_based: size == 0,
                    completion: extra,
                    combined,
                });
            }
            if !next_combination(&mut idx, candidates.len()) {
                break;
            }
        }
    }
    Err(FormulaError::NoCompletion(distances.to_vec()))
}

/// Advances `idx` to the next k-combination of `0..m` in lexicographic
/// order; false when exhausted.
fn next_combination(idx: &mut [usize], m: usize) -> bool {
    let k = idx.len();
    let Some(i) = (0..k).rev().find(|&i| idx[i] < m - k + i) else {
        return false;
    };
    idx[i] += 1;
    for j in i + 1..k {
        idx[j] = idx[j - 1] + 1;
    }
    true
}

/// `[x^n] c(x) / ((1-x) c(x) - x)` with `c(x) = 1 + sum x^{t_i}`, the
/// independent-set count of `T_n<t_1, ..., t_k>` for a well-based set.
pub fn well_based_series_count(distances: &[usize], n: usize) -> Result<BigCount, FormulaError> {
    if !is_well_based(distances) {
        return Err(FormulaError::NotWellBased(distances.to_vec()));
    }
    let c = IntPolynomial::one_plus_monomials(distances);
    let den = IntPolynomial::from_i64(&[1, -1])
        .mul(&c)
        .sub(&IntPolynomial::from_i64(&[0, 1]));
    let coeffs = rational_series(&c, &den, n + 1)?;
    coeffs[n]
        .to_biguint()
        .ok_or(FormulaError::NegativeValue("well-based series"))
}

/// Lower bound on `i(T_n<A>)` from the minimal well-based completion;
/// tight iff `A` is already well-based.
pub fn toeplitz_lower_bound(distances: &[usize], n: usize) -> Result<BigCount, FormulaError> {
    let completion = well_based_completion(distances, n)?;
    well_based_series_count(&completion.combined, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    /// Literal check on words: every nonempty zero-to-one replacement in
    /// `1 0^{a-1} 1` must contain an earlier `1 0^{b-1} 1` as a factor.
    fn exhaustive_well_based(set: &[usize]) -> bool {
        if !set.contains(&1) {
            return false;
        }
        set.iter().enumerate().skip(1).all(|(i, &a)| {
            let zeros = a - 1;
            (1u32..1 << zeros).all(|choice| {
                let mut word = vec![true];
                word.extend((0..zeros).map(|z| choice >> z & 1 == 1));
                word.push(true);
                set[..i].iter().any(|&b| contains_factor(&word, b))
            })
        })
    }

    fn contains_factor(word: &[bool], b: usize) -> bool {
        word.windows(b + 1)
            .any(|w| w[0] && w[b] && w[1..b].iter().all(|x| !x))
    }

    #[test]
    fn examples() {
        assert!(is_well_based(&[1, 2]));
        assert!(!is_well_based(&[2, 3]));
        assert!(is_well_based(&[1, 3]));
        assert!(is_well_based(&[1]));
        assert!(!is_well_based(&[1, 4]));
        assert!(is_well_based(&[1, 2, 4]));
    }

    #[test]
    fn agrees_with_word_enumeration() {
        // every subset of 1..=11 containing 1
        for mask in 0u32..1 << 10 {
            let set: Vec<usize> = std::iter::once(1)
                .chain((0..10).filter(|b| mask >> b & 1 == 1).map(|b| b + 2))
                .collect();
            assert_eq!(is_well_based(&set), exhaustive_well_based(&set), "{set:?}");
        }
    }

    #[test]
    fn completion_examples() {
        let r = well_based_completion(&[1, 2], 6).unwrap();
        assert!(r.is_well_based && r.completion.is_empty());
        let r = well_based_completion(&[2], 4).unwrap();
        assert_eq!(r.completion, vec![1]);
        assert_eq!(r.combined, vec![1, 2]);
        assert!(!r.is_well_based);
        assert!(well_based_completion(&[1], 4)
            .unwrap()
            .completion
            .is_empty());
        // {1,4} needs a part that blocks 4 = 2 + 2; the first is {2}
        assert_eq!(
            well_based_completion(&[1, 4], 6).unwrap().completion,
            vec![2]
        );
        assert!(well_based_completion(&[4], 4).is_err());
    }

    #[test]
    fn series_examples() {
        assert_eq!(
            well_based_series_count(&[1], 5).unwrap(),
            BigUint::from(13u32)
        );
        assert_eq!(
            well_based_series_count(&[1, 2], 4).unwrap(),
            BigUint::from(6u32)
        );
        assert_eq!(
            well_based_series_count(&[1, 3], 0).unwrap(),
            BigUint::from(1u32)
        );
        assert!(well_based_series_count(&[2], 3).is_err());
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(toeplitz_lower_bound(&[2], 4).unwrap(), BigUint::from(6u32));
        assert_eq!(toeplitz_lower_bound(&[1], 4).unwrap(), BigUint::from(8u32));
    }

    #[test]
    fn combinations_in_lex_order() {
        let mut idx = vec![0, 1];
        let mut seen = vec![idx.clone()];
        while next_combination(&mut idx, 4) {
            seen.push(idx.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        let mut empty: Vec<usize> = vec![];
        assert!(!next_combination(&mut empty, 3));
    }
}
