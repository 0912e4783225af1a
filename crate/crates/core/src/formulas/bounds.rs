use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::counting::{count_is, BigCount};
use crate::graphs::{
    build_riordan, ceil_log2, is_io_decomposable, BitGraph, DeltaVariant, RiordanSpec,
};

use super::sequences::{delta, fibonacci, k_fibonacci};
use super::FormulaError;

fn to_count(v: BigInt, what: &'static str) -> Result<BigCount, FormulaError> {
    v.to_biguint().ok_or(FormulaError::NegativeValue(what))
}

/// `F_k(n+k)`, for graphs with `[z^i]g = 1` (`i < k-1`), `[z^1]f = 1` and
/// `[z^j]f = 0` (`2 <= j < k`), all mod 2.
pub fn k_type_upper_bound(spec: &RiordanSpec, k: usize) -> Result<BigCount, FormulaError> {
    if k < 3 {
        return Err(FormulaError::HypothesisViolated(format!(
            "k must be at least 3, got {k}"
        )));
    }
    let (g, f) = spec.series(k)?;
    let mut failures = Vec::new();
    for i in 0..=k - 2 {
        if !g.coeff(i) {
            failures.push(format!("[z^{i}]g = 0, need 1"));
        }
    }
    if !f.coeff(1) {
        failures.push("[z^1]f = 0, need 1".to_string());
    }
    for j in 2..k {
        if f.coeff(j) {
            failures.push(format!("[z^{j}]f = 1, need 0"));
        }
    }
    if !failures.is_empty() {
        return Err(FormulaError::HypothesisViolated(failures.join("; ")));
    }
    k_fibonacci(k, spec.n + k)
}

fn chordal_threshold(k: usize, t: usize, n: usize) -> Result<(), FormulaError> {
    if k == 0 || t == 0 {
        return Err(FormulaError::IndexOutOfDomain(0));
    }
    let threshold = (2 * k - 1) * t + 1;
    if n < threshold {
        return Err(FormulaError::OrderBelowThreshold { n, threshold });
    }
    Ok(())
}

/// `i(T_n<t, 2t, ..., kt>) = prod_{j=1}^{t} F_{k+1}(floor((n-j)/t) + k + 2)`,
/// one factor per residue class mod `t`.
pub fn chordal_toeplitz_is(k: usize, t: usize, n: usize) -> Result<BigCount, FormulaError> {
    chordal_threshold(k, t, n)?;
    let mut product = BigUint::one();
    for j in 1..=t {
        product *= k_fibonacci(k + 1, (n - j) / t + k + 2)?;
    }
    Ok(product)
}

/// `(n - (k-1)t) 2^k`, the clique count of `T_n<t, ..., kt>` as a sum
/// over its `t` components. Each component contributes the empty clique,
/// so for `t > 1` this exceeds the true count by `t - 1`.
pub fn chordal_toeplitz_cliques(k: usize, t: usize, n: usize) -> Result<BigCount, FormulaError> {
    chordal_threshold(k, t, n)?;
    Ok(BigUint::from(n - (k - 1) * t) << k)
}

/// Cliques of `T_n<t, ..., kt>`, empty set counted once.
pub fn chordal_toeplitz_cliques_corrected(
    k: usize,
    t: usize,
    n: usize,
) -> Result<BigCount, FormulaError> {
    Ok(chordal_toeplitz_cliques(k, t, n)? - (t - 1))
}

/// `F(n+1)`, an upper bound for any graph with the path `1-2-...-n`.
pub fn fibonacci_upper_bound(n: usize) -> BigCount {
    fibonacci(n + 1)
}

fn delta_int(n: i64, variant: DeltaVariant) -> BigInt {
    BigInt::from(delta(n, variant))
}

/// `k` with `2^k < n <= 2^{k+1}`, for `n >= 5`.
fn io_level(n: usize) -> Result<usize, FormulaError> {
    if n < 5 {
        return Err(FormulaError::NotApplicable { n, min: 5 });
    }
    Ok(ceil_log2(n) - 1)
}

/// Pieces shared by the io and Pascal upper bounds:
/// `(delta_{2^k-2} - 1) tilde-delta_{n-2^k-3}`, `tilde-delta_{n-2^k-1}`, and
/// `sum_{i=1}^{k-1} (delta_{2^i-2} - 1) tilde-delta_{2^i-3} alpha_{i+1}`.
fn io_terms(n: usize, k: usize) -> (BigInt, BigInt, BigInt) {
    use DeltaVariant::{Plain, Tilde};
    let p = |e: usize| 1i64 << e;
    let n = n as i64;
    let k64 = k as i64;
    let head = (delta_int(p(k) - 2, Plain) - 1) * delta_int(n - p(k) - 3, Tilde);
    let outer = delta_int(n - p(k) - 1, Tilde);
    let mut sum = BigInt::zero();
    for i in 1..k64 {
        let alpha = if i == k64 - 1 {
            BigInt::one()
        } else {
            (i + 1..k64)
                .map(|j| delta_int(p(j as usize) - 1, Tilde))
                .product()
        };
        sum +=
            (delta_int(p(i as usize) - 2, Plain) - 1) * delta_int(p(i as usize) - 3, Tilde) * alpha;
    }
    (head, outer, sum)
}

/// Upper bound for io-decomposable Bell graphs, `n >= 5`.
pub fn io_upper_bound(n: usize) -> Result<BigCount, FormulaError> {
    let k = io_level(n)?;
    let (head, outer, sum) = io_terms(n, k);
    let value = delta_int(n as i64, DeltaVariant::Plain) - head - outer * sum;
    to_count(value, "io upper bound")
}

/// Sharper upper bound for the Pascal graph `PG_n`, `n >= 5`.
pub fn pascal_upper_bound(n: usize) -> Result<BigCount, FormulaError> {
    let k = io_level(n)?;
    let (head, outer, sum) = io_terms(n, k);
    let product: BigInt = (1..k)
        .map(|i| delta_int((1i64 << i) - 1, DeltaVariant::Tilde))
        .product();
    let value = delta_int(n as i64, DeltaVariant::Plain) + 1 + (BigInt::one() << (n / 2 - 1))
        - head
        - outer * (product * 2 + sum);
    to_count(value, "pascal upper bound")
}

/// `(alpha, max count)` claimed for io-decomposable graphs: the
/// independence number is `floor(n/2)` and there are at most 2 maximum
/// independent sets for even `n`, 4 for odd.
pub fn io_independence_claims(n: usize) -> Result<(usize, u32), FormulaError> {
    if n < 2 {
        return Err(FormulaError::NotApplicable { n, min: 2 });
    }
    Ok((n / 2, if n.is_multiple_of(2) { 2 } else { 4 }))
}

/// `(i(<V_o>), i(<V_e>), sigma_0(B))` where `sigma_0(B)` counts the
/// non-adjacent odd/even pairs.
fn odd_even_parts(graph: &BitGraph) -> Result<(BigCount, BigCount, usize), FormulaError> {
    let n = graph.n();
    if n < 2 {
        return Err(FormulaError::NotApplicable { n, min: 2 });
    }
    let odd: Vec<usize> = (1..=n).step_by(2).collect();
    let even: Vec<usize> = (2..=n).step_by(2).collect();
    let go = graph.induced(&odd);
    let ge = graph.induced(&even);
    let sigma0 = odd.len() * even.len() + go.edge_count() + ge.edge_count() - graph.edge_count();
    Ok((count_is(&go), count_is(&ge), sigma0))
}

/// `i(<V_o>) + i(<V_e>) - 1 + sigma_0(B)`. The empty set is counted in both
/// halves, hence the `- 1`.
pub fn odd_even_lower_bound(graph: &BitGraph) -> Result<BigCount, FormulaError> {
    let (io, ie, sigma0) = odd_even_parts(graph)?;
    Ok(io + ie + sigma0 - 1u32)
}

/// The same bound without the `- 1`; it can exceed `i(G)`.
pub fn odd_even_lower_bound_as_printed(graph: &BitGraph) -> Result<BigCount, FormulaError> {
    let (io, ie, sigma0) = odd_even_parts(graph)?;
    Ok(io + ie + sigma0)
}

fn io_dec_parts(spec: &RiordanSpec) -> Result<BigInt, FormulaError> {
    let n = spec.n;
    if n < 2 {
        return Err(FormulaError::NotApplicable { n, min: 2 });
    }
    if !is_io_decomposable(spec)? {
        return Err(FormulaError::NotIoDecomposable);
    }
    let (hi, lo) = (n.div_ceil(2), n / 2);
    let full = build_riordan(spec)?;
    let half = build_riordan(&spec.with_n(hi))?;
    Ok(
        BigInt::from(count_is(&half)) + (BigInt::one() << lo) + (hi * lo) as i64
            - full.edge_count() as i64
            + half.edge_count() as i64,
    )
}

/// `i(G_{ceil(n/2)}) + 2^{floor(n/2)} - 1 + ceil(n/2) floor(n/2) - |E(G_n)| +
/// |E(G_{ceil(n/2)})|` for io-decomposable specs.
pub fn io_dec_lower_bound(spec: &RiordanSpec) -> Result<BigCount, FormulaError> {
    to_count(io_dec_parts(spec)? - 1, "io-decomposable lower bound")
}

pub fn io_dec_lower_bound_as_printed(spec: &RiordanSpec) -> Result<BigCount, FormulaError> {
    to_count(io_dec_parts(spec)?, "io-decomposable lower bound")
}

/// `2 - L + sum_{j=1}^{L} (2^{a_j} + (a_{j+1}^2 - a_{j+1}) / 2)` with
/// `L = ceil(log2 n)` and `a_j = floor((n - 1 + 2^{j-1}) / 2^j)`.
pub fn multipartite_lower_bound(n: usize) -> Result<BigCount, FormulaError> {
    if n < 2 {
        return Err(FormulaError::NotApplicable { n, min: 2 });
    }
    let levels = ceil_log2(n);
    let a = |j: usize| (n - 1 + (1usize << (j - 1))) >> j;
    let mut value = BigInt::from(2) - levels as i64;
    for j in 1..=levels {
        let next = a(j + 1);
        value += (BigInt::one() << a(j)) + next * next.saturating_sub(1) / 2;
    }
    to_count(value, "multipartite lower bound")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::build_toeplitz;
    use crate::series::parse;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    /// Subset enumeration over edge lists.
    fn naive_is(graph: &BitGraph) -> u64 {
        let n = graph.n();
        let edges = graph.edges();
        (0u64..1 << n)
            .filter(|s| {
                edges
                    .iter()
                    .all(|&(i, j)| s >> (i - 1) & 1 == 0 || s >> (j - 1) & 1 == 0)
            })
            .count() as u64
    }

    fn naive_cliques(graph: &BitGraph) -> u64 {
        naive_is(&graph.complement())
    }

    fn spec(g: &str, f: &str, n: usize) -> RiordanSpec {
        RiordanSpec::new(parse(g).unwrap(), parse(f).unwrap(), n)
    }

    #[test]
    fn k_type_examples() {
        let s = spec("1+z", "z", 6);
        assert_eq!(k_type_upper_bound(&s, 3).unwrap(), big(13));
        assert_eq!(naive_is(&build_riordan(&s).unwrap()), 13);
        let s = spec("1+z+z^3", "z", 6);
        assert_eq!(k_type_upper_bound(&s, 3).unwrap(), big(13));
        assert_eq!(naive_is(&build_riordan(&s).unwrap()), 11);
        let err = k_type_upper_bound(&RiordanSpec::pascal(6), 3).unwrap_err();
        assert!(matches!(&err, FormulaError::HypothesisViolated(m) if m.contains("[z^2]f")));
    }

    #[test]
    fn chordal_examples() {
        assert_eq!(chordal_toeplitz_is(2, 1, 5).unwrap(), big(9));
        assert_eq!(chordal_toeplitz_is(2, 2, 7).unwrap(), big(24));
        assert_eq!(chordal_toeplitz_is(1, 1, 4).unwrap(), big(8));
        assert_eq!(chordal_toeplitz_cliques(1, 1, 3).unwrap(), big(6));
        assert_eq!(chordal_toeplitz_cliques(2, 1, 5).unwrap(), big(16));
        assert_eq!(chordal_toeplitz_cliques(2, 2, 7).unwrap(), big(20));
        // components T_4<1,2> and K_3 have 12 and 8 cliques, sharing the empty one
        assert_eq!(
            chordal_toeplitz_cliques_corrected(2, 2, 7).unwrap(),
            big(19)
        );
        assert_eq!(naive_cliques(&build_toeplitz(7, &[2, 4]).unwrap()), 19);
        assert_eq!(
            chordal_toeplitz_is(2, 2, 6),
            Err(FormulaError::OrderBelowThreshold { n: 6, threshold: 7 })
        );
    }

    #[test]
    fn chordal_against_enumeration() {
        for k in 1..=3 {
            for t in 1..=3 {
                for n in (2 * k - 1) * t + 1..=16 {
                    let d: Vec<usize> = (1..=k).map(|s| s * t).collect();
                    let g = build_toeplitz(n, &d).unwrap();
                    assert_eq!(chordal_toeplitz_is(k, t, n).unwrap(), big(naive_is(&g)));
                    let cliques = big(naive_cliques(&g));
                    assert_eq!(
                        chordal_toeplitz_cliques_corrected(k, t, n).unwrap(),
                        cliques
                    );
                    if t == 1 {
                        assert_eq!(chordal_toeplitz_cliques(k, t, n).unwrap(), cliques);
                    }
                }
            }
        }
    }

    #[test]
    fn fibonacci_bound_examples() {
        assert_eq!(fibonacci_upper_bound(12), big(377));
        assert_eq!(fibonacci_upper_bound(5), big(naive_is(&BitGraph::path(5))));
        assert_eq!(fibonacci_upper_bound(1), big(2));
    }

    #[test]
    fn io_and_pascal_examples() {
        assert_eq!(io_upper_bound(5).unwrap(), big(8));
        assert_eq!(io_upper_bound(7).unwrap(), big(22));
        assert_eq!(io_upper_bound(8).unwrap(), big(37));
        assert_eq!(pascal_upper_bound(5).unwrap(), big(7));
        assert_eq!(pascal_upper_bound(6).unwrap(), big(12));
        assert!(pascal_upper_bound(12).unwrap() >= big(98));
        assert_eq!(
            io_upper_bound(4),
            Err(FormulaError::NotApplicable { n: 4, min: 5 })
        );
        for n in 5..=20 {
            let exact = naive_is(&build_riordan(&RiordanSpec::pascal(n)).unwrap());
            let p = pascal_upper_bound(n).unwrap();
            assert!(p >= big(exact), "n={n}");
            assert!(p <= io_upper_bound(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn independence_claims() {
        assert_eq!(io_independence_claims(12).unwrap(), (6, 2));
        assert_eq!(io_independence_claims(5).unwrap(), (2, 4));
        assert_eq!(io_independence_claims(2).unwrap(), (1, 2));
        assert!(io_independence_claims(1).is_err());
    }

    #[test]
    fn odd_even_examples() {
        let pg4 = build_riordan(&RiordanSpec::pascal(4)).unwrap();
        assert_eq!(naive_is(&pg4), 6);
        assert_eq!(odd_even_lower_bound(&pg4).unwrap(), big(6));
        assert_eq!(odd_even_lower_bound_as_printed(&pg4).unwrap(), big(7));
        assert_eq!(
            odd_even_lower_bound(&BitGraph::complete(2)).unwrap(),
            big(3)
        );
        // two isolated vertices on each side: 4 + 4 - 1 + 4
        assert_eq!(odd_even_lower_bound(&BitGraph::empty(4)).unwrap(), big(11));
        assert!(odd_even_lower_bound(&BitGraph::empty(1)).is_err());
    }

    #[test]
    fn io_dec_examples() {
        assert_eq!(io_dec_lower_bound(&RiordanSpec::pascal(4)).unwrap(), big(6));
        assert!(io_dec_lower_bound(&RiordanSpec::pascal(8)).unwrap() <= big(23));
        assert!(io_dec_lower_bound(&RiordanSpec::catalan(6)).unwrap() <= big(14));
        assert_eq!(
            io_dec_lower_bound(&RiordanSpec::motzkin(8)),
            Err(FormulaError::NotIoDecomposable)
        );
    }

    /// The same sum written through the partition sizes `|V_j|`.
    fn multipartite_from_parts(n: usize) -> i64 {
        let parts = crate::graphs::multipartition(n).unwrap();
        let l = parts.len() - 1;
        let size = |j: usize| if j <= l { parts[j - 1].len() as i64 } else { 0 };
        2 - l as i64
            + (1..=l)
                .map(|j| (1i64 << size(j)) + size(j + 1) * (size(j + 1) - 1) / 2)
                .sum::<i64>()
    }

    #[test]
    fn multipartite_examples() {
        assert_eq!(multipartite_lower_bound(4).unwrap(), big(6));
        assert_eq!(multipartite_lower_bound(5).unwrap(), big(7));
        // a_4 = floor(15/16) = 0, so the last summand is 2 + 0
        assert_eq!(multipartite_lower_bound(8).unwrap(), big(22));
        for n in 2..=40 {
            assert_eq!(
                BigInt::from(multipartite_lower_bound(n).unwrap()),
                BigInt::from(multipartite_from_parts(n)),
                "n={n}"
            );
        }
    }
}
