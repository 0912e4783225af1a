use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::counting::{count_cliques, count_maximum_is, independence_number, BigCount};
use crate::formulas::{
    chordal_toeplitz_cliques, chordal_toeplitz_cliques_corrected, chordal_toeplitz_is, delta,
    fibonacci_upper_bound, io_dec_lower_bound, io_dec_lower_bound_as_printed,
    io_independence_claims, io_upper_bound, is_well_based, k_type_upper_bound,
    multipartite_lower_bound, odd_even_lower_bound, odd_even_lower_bound_as_printed,
    pascal_upper_bound, toeplitz_lower_bound, FormulaError,
};
use crate::graphs::{
    build_riordan, is_io_decomposable, is_proper, BitGraph, Family, GraphSpec, RiordanSpec,
};

use super::{exact_count, VerifyError};

pub(super) fn as_number<S: Serializer>(value: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    let number: serde_json::Number = value.to_string().parse().expect("decimal digits");
    number.serialize(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Lower,
    Upper,
    Exact,
}

/// What a bound is compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    IndependentSets,
    IndependenceNumber,
    MaximumIsCount,
    Cliques,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub name: String,
    pub quantity: Quantity,
    #[serde(serialize_with = "as_number")]
    pub target: BigCount,
    #[serde(serialize_with = "as_number")]
    pub value: BigCount,
    pub relation: Relation,
    pub holds: bool,
    pub tight: bool,
}

impl BoundEntry {
    fn new(
        name: &str,
        quantity: Quantity,
        target: BigCount,
        value: BigCount,
        relation: Relation,
    ) -> Self {
        let holds = match relation {
            Relation::Lower => value <= target,
            Relation::Upper => value >= target,
            Relation::Exact => value == target,
        };
        BoundEntry {
            name: name.to_string(),
            quantity,
            tight: value == target,
            target,
            value,
            relation,
            holds,
        }
    }
}

/// A yes/no claim, such as an equality characterization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub spec: String,
    pub n: usize,
    #[serde(serialize_with = "as_number")]
    pub exact: BigCount,
    pub entries: Vec<BoundEntry>,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl BoundReport {
    pub fn violations(&self) -> Vec<String> {
        let entries = self.entries.iter().filter(|e| !e.holds).map(|e| {
            format!(
                "{} n={}: {} {:?} {}",
                self.spec, self.n, e.name, e.value, e.target
            )
        });
        let checks = self
            .checks
            .iter()
            .filter(|c| !c.holds)
            .map(|c| format!("{} n={}: {}", self.spec, self.n, c.name));
        entries.chain(checks).collect()
    }

    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.holds) && self.checks.iter().all(|c| c.holds)
    }

    pub fn entry(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    fn push(&mut self, name: &str, value: BigCount, relation: Relation) {
        let exact = self.exact.clone();
        self.entries.push(BoundEntry::new(
            name,
            Quantity::IndependentSets,
            exact,
            value,
            relation,
        ));
    }

    fn check(&mut self, name: &str, holds: bool) {
        self.checks.push(Check {
            name: name.to_string(),
            holds,
        });
    }
}

/// Largest `k` in `3..=n+1` whose hypotheses hold, with its bound.
fn best_k_type(spec: &RiordanSpec) -> Option<(usize, BigCount)> {
    (3..=spec.n + 1)
        .rev()
        .find_map(|k| k_type_upper_bound(spec, k).ok().map(|v| (k, v)))
}

/// `T_n<1, ..., k-1>` with distances clipped below `n`.
fn consecutive_toeplitz(n: usize, k: usize) -> BitGraph {
    BitGraph::from_edges(
        n,
        (1..=n).flat_map(|i| (1..k).filter(move |d| i + d <= n).map(move |d| (i, i + d))),
    )
}

fn pascal_uniqueness_applies(n: usize) -> bool {
    (n.is_multiple_of(2) && n > 2) || (n >= 5 && (n - 1).is_power_of_two())
}

/// Evaluates every bound that applies to `spec` against its exact count.
pub fn bound_report(spec: &GraphSpec) -> Result<BoundReport, VerifyError> {
    let graph = spec.build()?;
    let n = graph.n();
    let exact = exact_count(spec, &graph);
    let mut report = BoundReport {
        spec: spec.to_string(),
        n,
        exact: exact.clone(),
        entries: Vec::new(),
        checks: Vec::new(),
        notes: Vec::new(),
    };

    if let GraphSpec::Toeplitz { distances, .. } = spec {
        toeplitz_entries(&mut report, &graph, distances)?;
    }
    if let GraphSpec::Delta { variant, .. } = spec {
        report.push(
            "delta_closed_form",
            delta(n as i64, *variant),
            Relation::Exact,
        );
    }
    if let Some(riordan) = spec.riordan() {
        if let Some((k, bound)) = best_k_type(&riordan) {
            report.push("k_type_upper_bound", bound.clone(), Relation::Upper);
            let equal = graph == consecutive_toeplitz(n, k);
            report.check(
                &format!("k_type_upper_bound (k={k}) tight iff graph is T_n<1..k-1>"),
                (bound == exact) == equal,
            );
        }
    }
    if graph.has_consecutive_ham_path() {
        report.push(
            "fibonacci_upper_bound",
            fibonacci_upper_bound(n),
            Relation::Upper,
        );
        let tight = fibonacci_upper_bound(n) == exact;
        report.check(
            "fibonacci_upper_bound tight iff graph is the path",
            tight == (graph == BitGraph::path(n)),
        );
    }
    if n >= 2 {
        report.push(
            "odd_even_lower_bound",
            odd_even_lower_bound(&graph)?,
            Relation::Lower,
        );
        let printed = odd_even_lower_bound_as_printed(&graph)?;
        if printed > exact {
            report.notes.push(format!(
                "as-printed odd_even_lower_bound value {printed} fails (exceeds exact {exact})"
            ));
        }
    }
    if let Some(riordan) = spec.riordan() {
        bell_entries(&mut report, &graph, &riordan)?;
    }
    Ok(report)
}

fn toeplitz_entries(
    report: &mut BoundReport,
    graph: &BitGraph,
    distances: &[usize],
) -> Result<(), VerifyError> {
    let n = report.n;
    let exact = report.exact.clone();
    let lower = toeplitz_lower_bound(distances, n)?;
    let tight = lower == exact;
    report.push("toeplitz_lower_bound", lower, Relation::Lower);
    report.check(
        "toeplitz_lower_bound tight iff distances are well-based",
        tight == is_well_based(distances),
    );
    let Some((k, t)) = crate::graphs::arithmetic_progression(distances) else {
        return Ok(());
    };
    match chordal_toeplitz_is(k, t, n) {
        Ok(v) => report.push("chordal_toeplitz_is", v, Relation::Exact),
        Err(FormulaError::OrderBelowThreshold { .. }) => return Ok(()),
        Err(e) => return Err(e.into()),
    }
    let cliques = count_cliques(graph);
    let corrected = chordal_toeplitz_cliques_corrected(k, t, n)?;
    report.entries.push(BoundEntry::new(
        "chordal_toeplitz_cliques",
        Quantity::Cliques,
        cliques.clone(),
        corrected,
        Relation::Exact,
    ));
    let printed = chordal_toeplitz_cliques(k, t, n)?;
    if printed != cliques {
        report.notes.push(format!(
            "as-printed chordal_toeplitz_cliques value {printed} differs from exact {cliques}"
        ));
    }
    Ok(())
}

fn bell_entries(
    report: &mut BoundReport,
    graph: &BitGraph,
    riordan: &RiordanSpec,
) -> Result<(), VerifyError> {
    let n = report.n;
    let exact = report.exact.clone();
    if n < 2
        || riordan.family() != Family::Bell
        || !is_proper(riordan)?
        || !is_io_decomposable(riordan)?
    {
        return Ok(());
    }
    if n >= 5 {
        report.push("io_upper_bound", io_upper_bound(n)?, Relation::Upper);
    }
    let (alpha, max_count) = io_independence_claims(n)?;
    report.entries.push(BoundEntry::new(
        "io_independence_number",
        Quantity::IndependenceNumber,
        independence_number(graph).into(),
        alpha.into(),
        Relation::Exact,
    ));
    let maximum = count_maximum_is(graph);
    report.entries.push(BoundEntry::new(
        "io_maximum_is_count",
        Quantity::MaximumIsCount,
        maximum.count.clone(),
        max_count.into(),
        Relation::Upper,
    ));
    report.push(
        "multipartite_lower_bound",
        multipartite_lower_bound(n)?,
        Relation::Lower,
    );
    report.push(
        "io_dec_lower_bound",
        io_dec_lower_bound(riordan)?,
        Relation::Lower,
    );
    let printed = io_dec_lower_bound_as_printed(riordan)?;
    if printed > exact {
        report.notes.push(format!(
            "as-printed io_dec_lower_bound value {printed} fails (exceeds exact {exact})"
        ));
    }

    if *graph != build_riordan(&RiordanSpec::pascal(n))? {
        return Ok(());
    }
    if n >= 5 {
        report.push(
            "pascal_upper_bound",
            pascal_upper_bound(n)?,
            Relation::Upper,
        );
    }
    if pascal_uniqueness_applies(n) {
        let evens: Vec<usize> = (2..=n).step_by(2).collect();
        let unique = maximum.count == BigUint::from(1u32)
            && maximum
                .witnesses
                .as_ref()
                .is_none_or(|w| w.len() == 1 && w[0] == evens);
        report.check(
            "pascal unique maximum independent set is the even labels",
            unique,
        );
    }
    Ok(())
}

/// One CSV row per entry: `spec,n,exact,bound,value,relation,holds,tight`,
/// where `exact` is the value the entry is compared against.
pub fn reports_to_csv(reports: &[BoundReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "spec", "n", "exact", "bound", "value", "relation", "holds", "tight",
    ])
    .expect("in-memory write");
    for r in reports {
        for e in &r.entries {
            let relation = match e.relation {
                Relation::Lower => "lower",
                Relation::Upper => "upper",
                Relation::Exact => "exact",
            };
            w.write_record([
                r.spec.clone(),
                r.n.to_string(),
                e.target.to_string(),
                e.name.clone(),
                e.value.to_string(),
                relation.to_string(),
                e.holds.to_string(),
                e.tight.to_string(),
            ])
            .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(text: &str) -> BoundReport {
        bound_report(&text.parse().unwrap()).unwrap()
    }

    fn value(r: &BoundReport, name: &str) -> u64 {
        r.entry(name).unwrap().value.to_string().parse().unwrap()
    }

    #[test]
    fn pascal_four_notes_printed_failure() {
        let r = report("pascal:n=4");
        assert_eq!(r.exact, BigUint::from(6u32));
        assert!(r.all_hold(), "{:?}", r.violations());
        assert_eq!(value(&r, "odd_even_lower_bound"), 6);
        assert!(r
            .notes
            .iter()
            .any(|n| n.contains("odd_even_lower_bound value 7 fails")));
    }

    #[test]
    fn pascal_tight_upper_bounds() {
        for (n, v) in [(5, 7), (6, 12)] {
            let r = report(&format!("pascal:n={n}"));
            assert!(r.all_hold());
            let e = r.entry("pascal_upper_bound").unwrap();
            assert!(e.tight);
            assert_eq!(value(&r, "pascal_upper_bound"), v);
        }
    }

    #[test]
    fn catalan_io_bound() {
        let r = report("catalan:n=7");
        assert_eq!(value(&r, "io_upper_bound"), 22);
        assert_eq!(r.exact, BigUint::from(21u32));
        assert!(r.all_hold());
        assert!(r.entry("pascal_upper_bound").is_none());
    }

    #[test]
    fn toeplitz_entries_present() {
        let r = report("toeplitz:n=9;d=2");
        assert!(!r.entry("toeplitz_lower_bound").unwrap().tight);
        assert!(r.entry("chordal_toeplitz_is").unwrap().tight);
        assert!(r.all_hold(), "{:?}", r.violations());
        let r = report("toeplitz:n=7;d=2,4");
        assert!(r.entry("chordal_toeplitz_cliques").unwrap().tight);
        assert!(r
            .notes
            .iter()
            .any(|n| n.contains("chordal_toeplitz_cliques value 20")));
        let r = report("toeplitz:n=6;d=1,2");
        assert!(r.entry("k_type_upper_bound").unwrap().tight);
        assert!(r.all_hold());
    }

    #[test]
    fn path_is_fibonacci_tight() {
        let r = report("riordan:g=1;f=z;n=6");
        assert!(r.entry("fibonacci_upper_bound").unwrap().tight);
        assert!(r.all_hold());
    }

    #[test]
    fn csv_has_one_row_per_entry() {
        let r = report("pascal:n=6");
        let text = reports_to_csv(std::slice::from_ref(&r));
        assert_eq!(text.lines().count(), r.entries.len() + 1);
        assert!(text.starts_with("spec,n,exact,bound,value,relation,holds,tight\n"));
    }

    #[test]
    fn json_numbers_are_plain() {
        let r = report("pascal:n=12");
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"exact\":98"), "{json}");
    }
}
