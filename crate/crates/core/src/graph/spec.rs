use std::fmt;
use std::str::FromStr;

use super::{gen_gnm, gen_named, Graph, GraphError, Shape};

/// A generator addressed by a flat `name:arg1,arg2` string, e.g.
/// `gnm:10000,100000`, `path:10000`, `star:100`,
/// `clique_plus_isolated:10000,500` or `skewed:10000,2.5`.
#[derive(Clone, Debug, PartialEq)]
pub enum GraphSpec {
    Gnm { n: usize, m: usize },
    Named { shape: Shape, n: usize },
}

impl GraphSpec {
    pub fn n(&self) -> usize {
        match *self {
            GraphSpec::Gnm { n, .. } | GraphSpec::Named { n, .. } => n,
        }
    }

    pub fn generate(&self, seed: u64) -> Result<Graph, GraphError> {
        match *self {
            GraphSpec::Gnm { n, m } => gen_gnm(n, m, seed),
            GraphSpec::Named { shape, n } => gen_named(shape, n, seed),
        }
    }
}

impl FromStr for GraphSpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |reason: &str| GraphError::BadSpec {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let (name, args) = s.split_once(':').ok_or_else(|| bad("expected name:args"))?;
        let args: Vec<&str> = args.split(',').map(str::trim).collect();
        let uint = |i: usize| -> Result<usize, GraphError> {
            args.get(i)
                .ok_or_else(|| bad("missing argument"))?
                .parse()
                .map_err(|_| bad("arguments must be non-negative integers"))
        };
        let arity = |k: usize| {
            if args.len() == k {
                Ok(())
            } else {
                Err(bad(&format!("{name} takes {k} argument(s)")))
            }
        };
        match name.trim() {
            "gnm" => {
                arity(2)?;
                Ok(GraphSpec::Gnm {
                    n: uint(0)?,
                    m: uint(1)?,
                })
            }
            "path" | "star" => {
                arity(1)?;
                let shape = if name.trim() == "path" {
                    Shape::Path
                } else {
                    Shape::Star
                };
                Ok(GraphSpec::Named { shape, n: uint(0)? })
            }
            "clique_plus_isolated" => {
                arity(2)?;
                Ok(GraphSpec::Named {
                    shape: Shape::CliquePlusIsolated { k: uint(1)? },
                    n: uint(0)?,
                })
            }
            "skewed" => {
                arity(2)?;
                let exponent = args[1]
                    .parse()
                    .map_err(|_| bad("exponent must be a number"))?;
                Ok(GraphSpec::Named {
                    shape: Shape::Skewed { exponent },
                    n: uint(0)?,
                })
            }
            _ => Err(bad("unknown generator")),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphSpec::Gnm { n, m } => write!(f, "gnm:{n},{m}"),
            GraphSpec::Named { shape, n } => match shape {
                Shape::Path => write!(f, "path:{n}"),
                Shape::Star => write!(f, "star:{n}"),
                Shape::CliquePlusIsolated { k } => write!(f, "clique_plus_isolated:{n},{k}"),
                Shape::Skewed { exponent } => write!(f, "skewed:{n},{exponent}"),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for s in [
            "gnm:10000,100000",
            "path:10000",
            "star:100",
            "clique_plus_isolated:10000,500",
            "skewed:10000,2.5",
        ] {
            let spec: GraphSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            assert_eq!(spec.to_string().parse::<GraphSpec>().unwrap(), spec);
        }
    }

    #[test]
    fn rejects_garbage() {
        for s in [
            "gnm",
            "gnm:1",
            "gnm:a,b",
            "cube:3",
            "path:3,4",
            "skewed:10,x",
        ] {
            assert!(s.parse::<GraphSpec>().is_err(), "{s}");
        }
    }

    #[test]
    fn generates() {
        let g = "clique_plus_isolated:10000,500"
            .parse::<GraphSpec>()
            .unwrap()
            .generate(0)
            .unwrap();
        assert_eq!((g.n(), g.m()), (10_000, 124_750));
    }
}
