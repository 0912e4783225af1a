//! Text form of graph specifications:
//!
//! ```text
//! riordan:g=<expr>;f=<expr>;n=<int>
//! bell:g=<expr>;n=<int>
//! toeplitz:n=<int>;d=<c1,c2,...>
//! pascal:n=<int>   catalan:n=<int>   motzkin:n=<int>
//! delta:n=<int>    deltaTilde:n=<int>
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::series::{parse, SeriesExpr};

use super::{
    build_delta, build_riordan, build_toeplitz, BitGraph, DeltaVariant, GraphError, RiordanSpec,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GraphSpec {
    Riordan {
        g: SeriesExpr,
        f: SeriesExpr,
        n: usize,
    },
    Bell {
        g: SeriesExpr,
        n: usize,
    },
    Toeplitz {
        n: usize,
        distances: Vec<usize>,
    },
    Pascal {
        n: usize,
    },
    Catalan {
        n: usize,
    },
    Motzkin {
        n: usize,
    },
    Delta {
        n: usize,
        variant: DeltaVariant,
    },
}

impl GraphSpec {
    pub fn n(&self) -> usize {
        match self {
            GraphSpec::Riordan { n, .. }
            | GraphSpec::Bell { n, .. }
            | GraphSpec::Toeplitz { n, .. }
            | GraphSpec::Pascal { n }
            | GraphSpec::Catalan { n }
            | GraphSpec::Motzkin { n }
            | GraphSpec::Delta { n, .. } => *n,
        }
    }

    /// The spec as a Riordan pair, when it has one. Toeplitz graphs map to
    /// their Appell form; the Δ graphs have none.
    pub fn riordan(&self) -> Option<RiordanSpec> {
        Some(match self {
            GraphSpec::Riordan { g, f, n } => RiordanSpec::new(g.clone(), f.clone(), *n),
            GraphSpec::Bell { g, n } => RiordanSpec::bell(g.clone(), *n),
            GraphSpec::Toeplitz { n, distances } => RiordanSpec::toeplitz(*n, distances),
            GraphSpec::Pascal { n } => RiordanSpec::pascal(*n),
            GraphSpec::Catalan { n } => RiordanSpec::catalan(*n),
            GraphSpec::Motzkin { n } => RiordanSpec::motzkin(*n),
            GraphSpec::Delta { .. } => return None,
        })
    }

    pub fn build(&self) -> Result<BitGraph, GraphError> {
        match self {
            GraphSpec::Toeplitz { n, distances } => build_toeplitz(*n, distances),
            GraphSpec::Delta { n, variant } => {
                if *n == 0 {
                    return Err(GraphError::TooFewVertices { n: 0, min: 1 });
                }
                Ok(build_delta(*n, *variant))
            }
            other => build_riordan(&other.riordan().expect("riordan-backed spec")),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Riordan { g, f: ff, n } => write!(f, "riordan:g={g};f={ff};n={n}"),
            GraphSpec::Bell { g, n } => write!(f, "bell:g={g};n={n}"),
            GraphSpec::Toeplitz { n, distances } => {
                let d: Vec<String> = distances.iter().map(ToString::to_string).collect();
                write!(f, "toeplitz:n={n};d={}", d.join(","))
            }
            GraphSpec::Pascal { n } => write!(f, "pascal:n={n}"),
            GraphSpec::Catalan { n } => write!(f, "catalan:n={n}"),
            GraphSpec::Motzkin { n } => write!(f, "motzkin:n={n}"),
            GraphSpec::Delta {
                n,
                variant: DeltaVariant::Plain,
            } => write!(f, "delta:n={n}"),
            GraphSpec::Delta {
                n,
                variant: DeltaVariant::Tilde,
            } => write!(f, "deltaTilde:n={n}"),
        }
    }
}

impl FromStr for GraphSpec {
    type Err = GraphError;

    fn from_str(text: &str) -> Result<Self, GraphError> {
        let err = |reason: String| GraphError::InvalidSpec {
            spec: text.to_string(),
            reason,
        };
        let (kind, rest) = text
            .trim()
            .split_once(':')
            .ok_or_else(|| err("expected `<kind>:<key>=<value>;...`".into()))?;
        let mut fields = BTreeMap::new();
        for part in rest.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| err(format!("field `{part}` is not key=value")))?;
            if fields.insert(k.trim(), v.trim()).is_some() {
                return Err(err(format!("duplicate field `{}`", k.trim())));
            }
        }
        let allowed: &[&str] = match kind {
            "riordan" => &["g", "f", "n"],
            "bell" => &["g", "n"],
            "toeplitz" => &["n", "d"],
            "pascal" | "catalan" | "motzkin" | "delta" | "deltaTilde" => &["n"],
            other => return Err(err(format!("unknown graph kind `{other}`"))),
        };
        if let Some(extra) = fields.keys().find(|k| !allowed.contains(k)) {
            return Err(err(format!("unexpected field `{extra}` for `{kind}`")));
        }
        let field = |name: &str| {
            fields
                .get(name)
                .copied()
                .ok_or_else(|| err(format!("missing field `{name}`")))
        };
        let int = |name: &str| -> Result<usize, GraphError> {
            let v = field(name)?;
            v.parse::<usize>().map_err(|_| {
                err(format!(
                    "field `{name}` must be a nonnegative integer, got `{v}`"
                ))
            })
        };
        let expr = |name: &str| -> Result<SeriesExpr, GraphError> { Ok(parse(field(name)?)?) };
        let n = int("n")?;
        if n == 0 {
            return Err(err("n must be at least 1".into()));
        }
        Ok(match kind {
            "riordan" => GraphSpec::Riordan {
                g: expr("g")?,
                f: expr("f")?,
                n,
            },
            "bell" => GraphSpec::Bell { g: expr("g")?, n },
            "toeplitz" => {
                let distances = field("d")?
                    .split(',')
                    .map(|s| s.trim().parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| {
                        err("distances must be a comma-separated list of integers".into())
                    })?;
                super::toeplitz::validate_distances(n, &distances)?;
                GraphSpec::Toeplitz { n, distances }
            }
            "pascal" => GraphSpec::Pascal { n },
            "catalan" => GraphSpec::Catalan { n },
            "motzkin" => GraphSpec::Motzkin { n },
            "delta" => GraphSpec::Delta {
                n,
                variant: DeltaVariant::Plain,
            },
            "deltaTilde" => GraphSpec::Delta {
                n,
                variant: DeltaVariant::Tilde,
            },
            _ => unreachable!(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_kind() {
        for text in [
            "riordan:g=1/(1-z);f=z/(1-z);n=6",
            "bell:g=catalan;n=5",
            "toeplitz:n=5;d=1,3",
            "riordan:g=1+z^2;f=z*(1+z);n=4",
            "pascal:n=12",
            "catalan:n=3",
            "motzkin:n=4",
            "delta:n=7",
            "deltaTilde:n=7",
        ] {
            let spec: GraphSpec = text.parse().unwrap();
            assert_eq!(spec.to_string().parse::<GraphSpec>().unwrap(), spec);
            assert!(spec.build().is_ok());
        }
    }

    #[test]
    fn named_families_agree_with_generic_forms() {
        let named: GraphSpec = "pascal:n=9".parse().unwrap();
        let generic: GraphSpec = "riordan:g=1/(1-z);f=z/(1-z);n=9".parse().unwrap();
        let bell: GraphSpec = "bell:g=1/(1-z);n=9".parse().unwrap();
        assert_eq!(named.build().unwrap(), generic.build().unwrap());
        assert_eq!(named.build().unwrap(), bell.build().unwrap());
        let toeplitz: GraphSpec = "toeplitz:n=9;d=2,5".parse().unwrap();
        let appell = build_riordan(&toeplitz.riordan().unwrap()).unwrap();
        assert_eq!(toeplitz.build().unwrap(), appell);
    }

    #[test]
    fn rejects_malformed_specs() {
        for text in [
            "pascal",
            "pascal:n=0",
            "pascal:n=x",
            "pascal:n=3;g=1",
            "riordan:g=1;n=3",
            "cube:n=3",
            "toeplitz:n=4;d=4",
            "toeplitz:n=4;d=a",
            "bell:g=1/(1-z;n=3",
            "pascal:n=3;n=4",
        ] {
            assert!(text.parse::<GraphSpec>().is_err(), "{text}");
        }
    }
}
