//! Constructors for the graph families that appear in the theorem checks.
//!
//! Every family uses a fixed vertex labelling so that walk matrices and
//! graph6 strings are reproducible:
//!
//! | family | labelling |
//! |---|---|
//! | `Path(n)` | `0 - 1 - … - n-1` |
//! | `Cycle(n)` | `i ~ i+1 (mod n)` |
//! | `Star(k)` | hub `0`, leaves `1..=k` |
//! | `DoubleStar(k, s)` | centres `0` and `1`, then the `k` leaves of `0`, then the `s` leaves of `1` |
//! | `CompleteBipartite(r, s)` | part `0..r`, part `r..r+s` |
//! | `HarmonicTree(ℓ)` | hub `0`, its `ℓ²-ℓ+1` neighbours next, then leaves grouped by neighbour |
//! | `PendantDecorated(base, q)` | base vertices first, then `q` pendants per base vertex, grouped |

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("parameter `{name}` = {value} is out of range: {reason}")]
    ParameterOutOfDomain {
        name: &'static str,
        value: usize,
        reason: &'static str,
    },
    #[error("pendant base must be connected and regular: {0}")]
    BadBase(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// `K_{1,leaves}`.
    Star {
        leaves: usize,
    },
    /// `T(k, s)`: two adjacent centres carrying `k` and `s` leaves.
    DoubleStar {
        k: usize,
        s: usize,
    },
    CompleteBipartite {
        r: usize,
        s: usize,
    },
    /// The harmonic tree `T_ℓ`.
    HarmonicTree {
        ell: usize,
    },
    /// `H^q_k`: `q` pendant vertices attached to every vertex of a connected
    /// regular base graph.
    PendantDecorated {
        base: Box<FamilySpec>,
        q: usize,
    },
    Complete {
        n: usize,
    },
    Empty {
        n: usize,
    },
}

fn check(
    name: &'static str,
    value: usize,
    min: usize,
    reason: &'static str,
) -> Result<(), FamilyError> {
    if value < min {
        Err(FamilyError::ParameterOutOfDomain {
            name,
            value,
            reason,
        })
    } else {
        Ok(())
    }
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        build_family(self)
    }
}

pub fn build_family(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    use FamilySpec::*;
    let g = match *spec {
        Path { n } => {
            check("n", n, 1, "a path needs n >= 1")?;
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?
        }
        Cycle { n } => {
            check("n", n, 3, "a cycle needs n >= 3")?;
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?
        }
        Star { leaves } => {
            check("leaves", leaves, 1, "a star needs at least one leaf")?;
            Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))?
        }
        DoubleStar { k, s } => {
            check("k", k, 1, "a double star needs k >= 1")?;
            check("s", s, 1, "a double star needs s >= 1")?;
            let edges = std::iter::once((0, 1))
                .chain((0..k).map(|i| (0, 2 + i)))
                .chain((0..s).map(|i| (1, 2 + k + i)));
            Graph::from_edges(k + s + 2, edges)?
        }
        CompleteBipartite { r, s } => {
            check("r", r, 1, "complete bipartite parts must be non-empty")?;
            check("s", s, 1, "complete bipartite parts must be non-empty")?;
            let edges = (0..r).flat_map(|u| (r..r + s).map(move |v| (u, v)));
            Graph::from_edges(r + s, edges)?
        }
        HarmonicTree { ell } => {
            check("ell", ell, 2, "harmonic trees are defined for ell >= 2")?;
            let hubs = ell * ell - ell + 1;
            let per = ell - 1;
            let n = 1 + hubs + hubs * per;
            let edges = (1..=hubs).map(|v| (0, v)).chain(
                (0..hubs).flat_map(move |i| (0..per).map(move |t| (1 + i, 1 + hubs + i * per + t))),
            );
            Graph::from_edges(n, edges)?
        }
        PendantDecorated { ref base, q } => {
            check("q", q, 1, "at least one pendant per vertex")?;
            let b = build_family(base)?;
            if !b.is_connected() || !b.is_regular() {
                return Err(FamilyError::BadBase(base.to_string()));
            }
            let p = b.order();
            let edges: Vec<(usize, usize)> = b
                .edges()
                .chain((0..p).flat_map(|v| (0..q).map(move |t| (v, p + v * q + t))))
                .collect();
            Graph::from_edges(p * (q + 1), edges)?
        }
        Complete { n } => {
            check("n", n, 1, "n >= 1")?;
            Graph::empty(n)?.complement()
        }
        Empty { n } => {
            check("n", n, 1, "n >= 1")?;
            Graph::empty(n)?
        }
    };
    Ok(g)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path { n } => write!(f, "path {n}"),
            Cycle { n } => write!(f, "cycle {n}"),
            Star { leaves } => write!(f, "star {leaves}"),
            DoubleStar { k, s } => write!(f, "doublestar {k} {s}"),
            CompleteBipartite { r, s } => write!(f, "completebipartite {r} {s}"),
            HarmonicTree { ell } => write!(f, "harmonictree {ell}"),
            PendantDecorated { base, q } => write!(f, "pendant {base} q {q}"),
            Complete { n } => write!(f, "complete {n}"),
            Empty { n } => write!(f, "empty {n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyParseError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("`{family}` expects {expected}")]
    Arity {
        family: &'static str,
        expected: &'static str,
    },
    #[error("`{0}` is not a non-negative integer")]
    NotANumber(String),
    #[error("unexpected trailing words: {0}")]
    Trailing(String),
}

fn number(
    word: Option<&str>,
    family: &'static str,
    expected: &'static str,
) -> Result<usize, FamilyParseError> {
    let w = word.ok_or(FamilyParseError::Arity { family, expected })?;
    w.parse()
        .map_err(|_| FamilyParseError::NotANumber(w.to_string()))
}

/// Parses one family from the front of `words`.
fn parse_prefix<'a>(
    words: &mut impl Iterator<Item = &'a str>,
) -> Result<FamilySpec, FamilyParseError> {
    use FamilySpec::*;
    let name = words
        .next()
        .ok_or(FamilyParseError::UnknownFamily(String::new()))?;
    let spec = match name.to_ascii_lowercase().as_str() {
        "path" => Path {
            n: number(words.next(), "path", "n")?,
        },
        "cycle" => Cycle {
            n: number(words.next(), "cycle", "n")?,
        },
        "star" => Star {
            leaves: number(words.next(), "star", "the number of leaves")?,
        },
        "doublestar" => DoubleStar {
            k: number(words.next(), "doublestar", "k s")?,
            s: number(words.next(), "doublestar", "k s")?,
        },
        "completebipartite" => CompleteBipartite {
            r: number(words.next(), "completebipartite", "r s")?,
            s: number(words.next(), "completebipartite", "r s")?,
        },
        "harmonictree" => HarmonicTree {
            ell: number(words.next(), "harmonictree", "ell")?,
        },
        "pendant" => {
            let base = parse_prefix(words)?;
            if words.next() != Some("q") {
                return Err(FamilyParseError::Arity {
                    family: "pendant",
                    expected: "<base family> q <q>",
                });
            }
            PendantDecorated {
                base: Box::new(base),
                q: number(words.next(), "pendant", "<base family> q <q>")?,
            }
        }
        "complete" => Complete {
            n: number(words.next(), "complete", "n")?,
        },
        "empty" => Empty {
            n: number(words.next(), "empty", "n")?,
        },
        other => return Err(FamilyParseError::UnknownFamily(other.to_string())),
    };
    Ok(spec)
}

impl std::str::FromStr for FamilySpec {
    type Err = FamilyParseError;

    /// Inverse of `Display`: `"doublestar 2 3"`, `"pendant cycle 5 q 2"`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut words = text.split_whitespace();
        let spec = parse_prefix(&mut words)?;
        let rest: Vec<&str> = words.collect();
        if !rest.is_empty() {
            return Err(FamilyParseError::Trailing(rest.join(" ")));
        }
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trips_display() {
        for text in [
            "path 4",
            "cycle 5",
            "star 3",
            "doublestar 2 3",
            "completebipartite 2 5",
            "harmonictree 3",
            "pendant cycle 5 q 2",
            "pendant pendant complete 3 q 1 q 2",
            "complete 4",
            "empty 2",
        ] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert_eq!(
            "DoubleStar 2  3".parse::<FamilySpec>().unwrap(),
            FamilySpec::DoubleStar { k: 2, s: 3 }
        );
        assert!(matches!(
            "wheel 5".parse::<FamilySpec>(),
            Err(FamilyParseError::UnknownFamily(_))
        ));
        assert!(matches!(
            "doublestar 2".parse::<FamilySpec>(),
            Err(FamilyParseError::Arity { .. })
        ));
        assert!(matches!(
            "path x".parse::<FamilySpec>(),
            Err(FamilyParseError::NotANumber(_))
        ));
        assert!(matches!(
            "path 3 4".parse::<FamilySpec>(),
            Err(FamilyParseError::Trailing(_))
        ));
        assert!(matches!(
            "pendant cycle 5 2".parse::<FamilySpec>(),
            Err(FamilyParseError::Arity { .. })
        ));
    }

    fn degree_multiset(g: &Graph) -> Vec<u64> {
        let mut d = g.degree_data().degrees;
        d.sort_unstable();
        d
    }

    #[test]
    fn path_four() {
        let g = build_family(&FamilySpec::Path { n: 4 }).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn harmonic_tree_degrees() {
        for ell in 2..=4usize {
            let g = build_family(&FamilySpec::HarmonicTree { ell }).unwrap();
            let hubs = ell * ell - ell + 1;
            let mut want = vec![hubs as u64];
            want.extend(std::iter::repeat_n(ell as u64, hubs));
            want.extend(std::iter::repeat_n(1, hubs * (ell - 1)));
            want.sort_unstable();
            assert_eq!(degree_multiset(&g), want, "ell = {ell}");
            assert!(g.is_connected());
            assert_eq!(g.edge_count(), g.order() - 1);
        }
        let t2 = build_family(&FamilySpec::HarmonicTree { ell: 2 }).unwrap();
        assert_eq!(t2.order(), 7);
        assert_eq!(t2.degree_data().degrees, vec![3, 2, 2, 2, 1, 1, 1]);
    }

    #[test]
    fn double_star_layout() {
        let g = build_family(&FamilySpec::DoubleStar { k: 2, s: 3 }).unwrap();
        assert_eq!(g.order(), 7);
        assert_eq!(g.degree_data().degrees, vec![3, 4, 1, 1, 1, 1, 1]);
        assert!(g.has_edge(0, 2) && g.has_edge(0, 3));
        assert!(g.has_edge(1, 4) && g.has_edge(1, 5) && g.has_edge(1, 6));
        for k in 1..6 {
            for s in 1..6 {
                let g = build_family(&FamilySpec::DoubleStar { k, s }).unwrap();
                assert_eq!(g.order(), k + s + 2);
                assert_eq!(g.edge_count(), k + s + 1);
            }
        }
    }

    #[test]
    fn pendant_cycle_order() {
        let spec = FamilySpec::PendantDecorated {
            base: Box::new(FamilySpec::Cycle { n: 5 }),
            q: 2,
        };
        let g = spec.build().unwrap();
        assert_eq!(g.order(), 15);
        assert_eq!(g.edge_count(), 15);
        assert_eq!(degree_multiset(&g).iter().filter(|&&d| d == 4).count(), 5);
    }

    #[test]
    fn pendant_rejects_irregular_base() {
        let spec = FamilySpec::PendantDecorated {
            base: Box::new(FamilySpec::Path { n: 4 }),
            q: 1,
        };
        assert!(matches!(spec.build(), Err(FamilyError::BadBase(_))));
    }

    #[test]
    fn out_of_domain_names_parameter() {
        let err = build_family(&FamilySpec::HarmonicTree { ell: 1 }).unwrap_err();
        assert!(matches!(
            err,
            FamilyError::ParameterOutOfDomain { name: "ell", .. }
        ));
        let err = build_family(&FamilySpec::DoubleStar { k: 1, s: 0 }).unwrap_err();
        assert!(matches!(
            err,
            FamilyError::ParameterOutOfDomain { name: "s", .. }
        ));
    }
}
