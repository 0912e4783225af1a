//! Riordan graphs `G_n(g, f)`: for `i > j`, vertices `i` and `j` are
//! adjacent iff `[z^{i-2}] g f^{j-1}` is odd.

use crate::series::{evaluate, mul_trunc, parity_part, Gf2Series, Parity, SeriesExpr};

use super::{BitGraph, BitMatrix, DecompositionBlocks, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Generic,
    /// `f = z g`
    Bell,
    /// `f = z`
    Appell,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RiordanSpec {
    pub g: SeriesExpr,
    pub f: SeriesExpr,
    pub n: usize,
    family: Family,
}

impl RiordanSpec {
    /// Generic constructor; the family tag is detected from the shape of `f`.
    pub fn new(g: SeriesExpr, f: SeriesExpr, n: usize) -> Self {
        let family = match &f {
            SeriesExpr::Var => Family::Appell,
            SeriesExpr::Product(a, b)
                if (**a == SeriesExpr::Var && **b == g) || (**b == SeriesExpr::Var && **a == g) =>
            {
                Family::Bell
            }
            _ => Family::Generic,
        };
        RiordanSpec { g, f, n, family }
    }

    /// `G_n(g, z g)`.
    pub fn bell(g: SeriesExpr, n: usize) -> Self {
        let f = SeriesExpr::product(SeriesExpr::Var, g.clone());
        RiordanSpec {
            g,
            f,
            n,
            family: Family::Bell,
        }
    }

    pub fn pascal(n: usize) -> Self {
        Self::bell(
            crate::series::parse("1/(1-z)").expect("static expression"),
            n,
        )
    }

    pub fn catalan(n: usize) -> Self {
        Self::bell(SeriesExpr::Builtin(crate::series::Builtin::Catalan), n)
    }

    pub fn motzkin(n: usize) -> Self {
        Self::bell(SeriesExpr::Builtin(crate::series::Builtin::Motzkin), n)
    }

    /// The Toeplitz graph `T_n<t_1,...,t_k>` as `G_n(sum z^{t_s - 1}, z)`.
    pub fn toeplitz(n: usize, distances: &[usize]) -> Self {
        let terms = distances
            .iter()
            .map(|&t| SeriesExpr::pow(SeriesExpr::Var, (t - 1) as u32))
            .collect();
        RiordanSpec {
            g: SeriesExpr::Sum(terms),
            f: SeriesExpr::Var,
            n,
            family: Family::Appell,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn with_n(&self, n: usize) -> Self {
        RiordanSpec { n, ..self.clone() }
    }

    /// `(g, f)` evaluated to `order` coefficients.
    pub fn series(&self, order: usize) -> Result<(Gf2Series, Gf2Series), GraphError> {
        let order = order.max(2);
        let g = evaluate(&self.g, order)?;
        let f = evaluate(&self.f, order)?;
        if f.coeff(0) {
            return Err(GraphError::NonzeroConstantF);
        }
        Ok((g, f))
    }
}

/// The `rows x cols` leading block of the Riordan matrix `(h, f)`:
/// entry `(r, c)` is `[z^r] h f^c`, built column by column by multiplying
/// a running series by `f`.
pub fn riordan_block(
    h: &Gf2Series,
    f: &Gf2Series,
    rows: usize,
    cols: usize,
) -> Result<BitMatrix, GraphError> {
    let mut m = BitMatrix::zeros(rows, cols);
    if rows == 0 {
        return Ok(m);
    }
    let mut column = h.truncate(rows)?;
    for c in 0..cols {
        if column.is_zero() {
            break;
        }
        for r in column.support() {
            m.set(r, c, true);
        }
        if c + 1 < cols {
            column = mul_trunc(&column, f, rows)?;
        }
    }
    Ok(m)
}

fn symmetric_graph(lower: &BitMatrix) -> BitGraph {
    BitGraph::from_matrix(lower)
}

/// Builds `G_n(g, f)` from the lower triangle of `(zg, f)_n`.
pub fn build_riordan(spec: &RiordanSpec) -> Result<BitGraph, GraphError> {
    if spec.n == 0 {
        return Err(GraphError::TooFewVertices { n: 0, min: 1 });
    }
    let (g, f) = spec.series(spec.n)?;
    let zg = g.times_z_pow(1);
    Ok(symmetric_graph(&riordan_block(&zg, &f, spec.n, spec.n)?))
}

pub fn is_proper(spec: &RiordanSpec) -> Result<bool, GraphError> {
    let g = evaluate(&spec.g, 2)?;
    let f = evaluate(&spec.f, 2)?;
    Ok(g.coeff(0) && f.coeff(1))
}

fn require_proper(spec: &RiordanSpec) -> Result<(), GraphError> {
    if is_proper(spec)? {
        Ok(())
    } else {
        Err(GraphError::Improper)
    }
}

/// Blocks of the odd/even decomposition computed from the series alone.
///
/// With `h^o` and `h^e` the odd and even parts of a series `h`:
/// `X = G(g^o, f)`, `Y = G((gf/z)^o, f)` and
/// `B = (z (gf)^o, f) + ((g^e, f))^T` over GF(2).
pub fn predict_blocks(spec: &RiordanSpec) -> Result<DecompositionBlocks, GraphError> {
    require_proper(spec)?;
    let n = spec.n;
    if n < 2 {
        return Err(GraphError::TooFewVertices { n, min: 2 });
    }
    let (odd, even) = (n.div_ceil(2), n / 2);
    let (g, f) = spec.series(2 * n + 2)?;
    let order = g.order();
    let gf = mul_trunc(&g, &f, order)?;

    let x_gen = parity_part(&g, Parity::Odd).times_z_pow(1);
    let y_gen = parity_part(&gf.shift_down(1), Parity::Odd).times_z_pow(1);
    let x = symmetric_graph(&riordan_block(&x_gen, &f, odd, odd)?);
    let y = symmetric_graph(&riordan_block(&y_gen, &f, even, even)?);

    let upper = riordan_block(&parity_part(&gf, Parity::Odd).times_z_pow(1), &f, odd, even)?;
    let lower = riordan_block(&parity_part(&g, Parity::Even), &f, even, odd)?;
    let b = upper.xor(&lower.transpose());

    Ok(DecompositionBlocks::from_parts(
        x.adjacency().clone(),
        y.adjacency().clone(),
        b,
    ))
}

/// Cross block of a Bell-type spec in the form
/// `B = (zg, zg) + ((zg)'(sqrt z), zg)^T`.
pub fn predict_bell_cross_block(spec: &RiordanSpec) -> Result<BitMatrix, GraphError> {
    let n = spec.n;
    if n < 2 {
        return Err(GraphError::TooFewVertices { n, min: 2 });
    }
    let (odd, even) = (n.div_ceil(2), n / 2);
    let g = evaluate(&spec.g, 2 * n + 2)?;
    let zg = g.times_z_pow(1);
    let upper = riordan_block(&zg, &zg, odd, even)?;
    let lower = riordan_block(&parity_part(&g, Parity::Even), &zg, even, odd)?;
    Ok(upper.xor(&lower.transpose()))
}

/// Structural io-decomposability: the even-labeled subgraph is null and
/// the odd-labeled subgraph equals `G_{ceil(n/2)}(g, f)` under the
/// order-preserving relabeling.
pub fn is_io_decomposable(spec: &RiordanSpec) -> Result<bool, GraphError> {
    require_proper(spec)?;
    if spec.n < 2 {
        return Ok(true);
    }
    let blocks = super::decompose(&build_riordan(spec)?)?;
    if !blocks.y.is_zero() {
        return Ok(false);
    }
    let half = build_riordan(&spec.with_n(spec.n.div_ceil(2)))?;
    Ok(&blocks.x == half.adjacency())
}

/// Index sets `V_1, ..., V_{L+1}` with `L = ceil(log2 n)`:
/// `V_j = { 2^{j-1} + 1 + (i-1) 2^j : 1 <= i <= floor((n-1+2^{j-1}) / 2^j) }`
/// and `V_{L+1} = {1}`.
pub fn multipartition(n: usize) -> Result<Vec<Vec<usize>>, GraphError> {
    if n < 2 {
        return Err(GraphError::TooFewVertices { n, min: 2 });
    }
    let levels = ceil_log2(n);
    let mut parts: Vec<Vec<usize>> = (1..=levels)
        .map(|j| {
            let half = 1usize << (j - 1);
            let step = 1usize << j;
            let count = (n - 1 + half) / step;
            (1..=count).map(|i| half + 1 + (i - 1) * step).collect()
        })
        .collect();
    parts.push(vec![1]);
    Ok(parts)
}

/// `ceil(log2 n)` for `n >= 1`.
pub fn ceil_log2(n: usize) -> usize {
    assert!(n >= 1);
    (usize::BITS - (n - 1).leading_zeros()) as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::decompose;
    use crate::series::parse;

    fn spec(g: &str, f: &str, n: usize) -> RiordanSpec {
        RiordanSpec::new(parse(g).unwrap(), parse(f).unwrap(), n)
    }

    /// Binomial coefficients mod 2 via Pascal's rule.
    fn binomial_parity(max: usize) -> Vec<Vec<bool>> {
        let mut rows = vec![vec![true]];
        for m in 1..=max {
            let prev = &rows[m - 1];
            let row = (0..=m)
                .map(|k| {
                    let a = if k < m { prev[k] } else { false };
                    let b = if k > 0 { prev[k - 1] } else { false };
                    a ^ b
                })
                .collect();
            rows.push(row);
        }
        rows
    }

    #[test]
    fn pascal_matches_binomial_oracle() {
        // [z^{i-2}] z^{j-1}/(1-z)^j = C(i-2, j-1)
        let n = 20;
        let binom = binomial_parity(n);
        let g = build_riordan(&RiordanSpec::pascal(n)).unwrap();
        for i in 2..=n {
            for j in 1..i {
                assert_eq!(g.has_edge(i, j), binom[i - 2][j - 1], "edge {i}{j}");
            }
        }
        let pg4 = build_riordan(&RiordanSpec::pascal(4)).unwrap();
        assert_eq!(pg4.edges(), vec![(1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]);
    }

    #[test]
    fn identity_spec_is_path() {
        let g = build_riordan(&spec("1", "z", 5)).unwrap();
        assert_eq!(g, BitGraph::path(5));
    }

    #[test]
    fn family_detection() {
        assert_eq!(spec("1/(1-z)", "z*(1/(1-z))", 4).family(), Family::Bell);
        assert_eq!(spec("catalan", "catalan*z", 4).family(), Family::Bell);
        assert_eq!(spec("1+z", "z", 4).family(), Family::Appell);
        assert_eq!(spec("1", "z/(1-z)", 4).family(), Family::Generic);
        assert_eq!(RiordanSpec::pascal(3).family(), Family::Bell);
    }

    #[test]
    fn properness() {
        assert!(is_proper(&RiordanSpec::pascal(5)).unwrap());
        assert!(!is_proper(&spec("z+z^2+z^3", "z", 5)).unwrap());
        assert!(is_proper(&spec("1", "z", 5)).unwrap());
    }

    #[test]
    fn f_with_constant_term_rejected() {
        assert_eq!(
            build_riordan(&spec("1", "1+z", 3)),
            Err(GraphError::NonzeroConstantF)
        );
    }

    #[test]
    fn predicted_blocks_match_structure() {
        for s in [
            RiordanSpec::pascal(8),
            RiordanSpec::catalan(8),
            RiordanSpec::motzkin(9),
            spec("1+z^2+z^3", "z+z^3+z^4", 11),
            spec("1", "z", 6),
        ] {
            let built = decompose(&build_riordan(&s).unwrap()).unwrap();
            assert_eq!(predict_blocks(&s).unwrap(), built, "{s:?}");
        }
    }

    #[test]
    fn bell_catalan_has_null_even_block() {
        let blocks = predict_blocks(&RiordanSpec::catalan(8)).unwrap();
        assert!(blocks.y.is_zero());
    }

    #[test]
    fn path_cross_block() {
        let blocks = predict_blocks(&spec("1", "z", 6)).unwrap();
        // odd a, even b adjacent iff |(2a-1) - 2b| = 1
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(blocks.b.get(a, b), a == b || a == b + 1, "cell {a},{b}");
            }
        }
        assert!(blocks.x.is_zero() && blocks.y.is_zero());
    }

    #[test]
    fn bell_cross_block_form() {
        for s in [
            RiordanSpec::pascal(13),
            RiordanSpec::motzkin(10),
            RiordanSpec::catalan(7),
        ] {
            let blocks = decompose(&build_riordan(&s).unwrap()).unwrap();
            assert_eq!(predict_bell_cross_block(&s).unwrap(), blocks.b);
        }
    }

    #[test]
    fn improper_spec_rejected() {
        assert_eq!(
            predict_blocks(&spec("z", "z", 4)),
            Err(GraphError::Improper)
        );
        assert_eq!(
            is_io_decomposable(&spec("z", "z", 4)),
            Err(GraphError::Improper)
        );
    }

    #[test]
    fn io_decomposability() {
        assert!(is_io_decomposable(&RiordanSpec::pascal(12)).unwrap());
        assert!(is_io_decomposable(&RiordanSpec::catalan(12)).unwrap());
        assert!(!is_io_decomposable(&RiordanSpec::motzkin(8)).unwrap());
        assert!(!is_io_decomposable(&spec("1", "z", 6)).unwrap());
    }

    #[test]
    fn motzkin_odd_part_differs() {
        let m = evaluate(&SeriesExpr::Builtin(crate::series::Builtin::Motzkin), 8).unwrap();
        assert_ne!(parity_part(&m, Parity::Odd), m.truncate(4).unwrap());
    }

    #[test]
    fn multipartition_examples() {
        assert_eq!(
            multipartition(8).unwrap(),
            vec![vec![2, 4, 6, 8], vec![3, 7], vec![5], vec![1]]
        );
        assert_eq!(multipartition(2).unwrap(), vec![vec![2], vec![1]]);
        assert_eq!(
            multipartition(5).unwrap(),
            vec![vec![2, 4], vec![3], vec![5], vec![1]]
        );
        assert!(multipartition(1).is_err());
    }

    #[test]
    fn ceil_log2_values() {
        let got: Vec<usize> = (1..=9).map(ceil_log2).collect();
        assert_eq!(got, vec![0, 1, 2, 2, 3, 3, 3, 3, 4]);
    }
}
