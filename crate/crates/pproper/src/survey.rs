//! Per-length verdicts on whether every `k`-list assignment drawn from a
//! finite universe admits a product-proper labelling of a path or cycle.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::adversary::{all_ones, bad_odd_cycle, bad_path, plus_minus_one, AdversaryWitness};
use crate::constructive::{label_cycle, label_path};
use crate::generators;
use crate::graph::Graph;
use crate::label::{Label, ListAssignment, Mode};
use crate::solver::{worst_list_verdict, SolverConfig, WorstCase};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
}

impl Family {
    pub fn graph(&self, n: usize) -> Graph {
        match self {
            Family::Path => generators::path(n),
            Family::Cycle => generators::cycle(n),
        }
    }

    /// Smallest list size for which the constructive labeller applies.
    pub fn constructive_size(&self, n: usize) -> Option<usize> {
        match self {
            Family::Path if n < 2 => None,
            Family::Path if n % 2 == 0 || n == 3 => Some(2),
            Family::Path => Some(3),
            Family::Cycle if n < 3 => None,
            Family::Cycle if n % 4 == 0 => Some(2),
            Family::Cycle => Some(3),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
        })
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            _ => Err(format!("unknown family {s:?} (expected path or cycle)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    /// Every assignment from the universe was solved.
    Exhaustive { assignments: u64 },
    /// The constructive labeller applies to every assignment of this list
    /// size; it was run and checked on `samples` random ones.
    Constructive { samples: usize },
    /// A generator produced a solver-checked infeasible instance.
    Adversary { generator: &'static str },
    /// Exhaustive enumeration found an infeasible assignment.
    Search,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowVerdict {
    Feasible(Evidence),
    Infeasible {
        evidence: Evidence,
        witness: AdversaryWitness,
    },
    Undecided(String),
}

impl RowVerdict {
    pub fn is_feasible(&self) -> bool {
        matches!(self, RowVerdict::Feasible(_))
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, RowVerdict::Infeasible { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyRow {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub verdict: RowVerdict,
}

impl fmt::Display for SurveyRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={} k={}: ", self.family, self.n, self.k)?;
        match &self.verdict {
            RowVerdict::Feasible(Evidence::Exhaustive { assignments }) => {
                write!(f, "FEASIBLE (exhaustive, {assignments} assignments)")
            }
            RowVerdict::Feasible(Evidence::Constructive { samples }) => {
                write!(f, "FEASIBLE (constructive, {samples} checked samples)")
            }
            RowVerdict::Feasible(e) => write!(f, "FEASIBLE ({e:?})"),
            RowVerdict::Infeasible { evidence, witness } => {
                let how = match evidence {
                    Evidence::Adversary { generator } => format!("witness from {generator}"),
                    _ => "witness from exhaustive search".to_string(),
                };
                write!(f, "INFEASIBLE ({how}; {})", witness.claim)
            }
            RowVerdict::Undecided(why) => write!(f, "UNDECIDED ({why})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SurveyConfig {
    pub universe: Vec<Label>,
    pub k: usize,
    /// Largest number of list assignments enumerated per row.
    pub exhaustive_limit: u64,
    pub samples: usize,
    pub seed: u64,
    pub solver: SolverConfig,
}

impl SurveyConfig {
    pub fn new(universe: Vec<Label>, k: usize) -> SurveyConfig {
        SurveyConfig {
            universe,
            k,
            exhaustive_limit: 1 << 16,
            samples: 200,
            seed: 0,
            solver: SolverConfig::default(),
        }
    }
}

fn binomial(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

/// Lower-bound generator for this row, using labels from the universe.
fn adversary(family: Family, n: usize, cfg: &SurveyConfig) -> Option<(&'static str, AdversaryWitness)> {
    let g = family.graph(n);
    let u: Vec<&Label> = cfg.universe.iter().filter(|x| !x.is_zero()).collect();
    let has = |x: i64| u.iter().any(|y| **y == Label::int(x));
    match cfg.k {
        1 if has(1) => all_ones(&g).ok().map(|w| ("all_ones", w)),
        2 => match family {
            Family::Cycle if n % 4 != 0 && u.len() >= 2 => bad_odd_cycle(n, u[0], u[1])
                .ok()?
                .witness()
                .cloned()
                .map(|w| ("bad_odd_cycle", w)),
            Family::Path if n % 4 == 1 && has(1) && has(-1) => plus_minus_one(&g)
                .ok()?
                .witness()
                .cloned()
                .map(|w| ("plus_minus_one", w)),
            Family::Path if n >= 7 && n % 4 == 3 && has(1) => {
                let a = u.iter().find(|x| !x.abs().is_one())?;
                let b = u.iter().find(|x| !x.is_one() && *x != a)?;
                bad_path(n, a, b).ok().map(|w| ("bad_path", w))
            }
            _ => None,
        },
        _ => None,
    }
}

fn constructive(family: Family, n: usize, cfg: &SurveyConfig) -> Result<usize, String> {
    let g = family.graph(n);
    let nonzero: Vec<Label> = cfg.universe.iter().filter(|x| !x.is_zero()).cloned().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ ((n as u64) << 8));
    for _ in 0..cfg.samples {
        let la: ListAssignment = generators::random_lists_from(&g, &nonzero, cfg.k, &mut rng);
        let res = match family {
            Family::Path => label_path(&g, &la),
            Family::Cycle => label_cycle(&g, &la),
        };
        res.map_err(|e| e.to_string())?;
    }
    Ok(cfg.samples)
}

pub fn survey_row(family: Family, n: usize, cfg: &SurveyConfig) -> SurveyRow {
    let row = |verdict| SurveyRow {
        family,
        n,
        k: cfg.k,
        verdict,
    };
    if let Some((generator, witness)) = adversary(family, n, cfg) {
        return row(RowVerdict::Infeasible {
            evidence: Evidence::Adversary { generator },
            witness,
        });
    }
    let g = family.graph(n);
    let mut universe = cfg.universe.clone();
    universe.sort();
    universe.dedup();
    let cases = binomial(universe.len(), cfg.k).pow(g.edge_count() as u32);
    if cfg.k <= universe.len() && cases <= BigUint::from(cfg.exhaustive_limit) {
        let solver = SolverConfig {
            enumeration_cap: cfg.exhaustive_limit,
            ..cfg.solver.clone()
        };
        return row(match worst_list_verdict(&g, &universe, cfg.k, Mode::Product, &solver) {
            Ok(WorstCase::Feasible { assignments }) => {
                RowVerdict::Feasible(Evidence::Exhaustive { assignments })
            }
            Ok(WorstCase::Witness(lists)) => RowVerdict::Infeasible {
                evidence: Evidence::Search,
                witness: AdversaryWitness {
                    claim: format!("ch_P*({}) > {} over this universe", g_name(family, n), cfg.k),
                    graph: g,
                    lists,
                },
            },
            Err(e) => RowVerdict::Undecided(e.to_string()),
        });
    }
    let nonzero = universe.iter().filter(|x| !x.is_zero()).count();
    match family.constructive_size(n) {
        Some(need) if cfg.k >= need && nonzero >= cfg.k => match constructive(family, n, cfg) {
            Ok(samples) => row(RowVerdict::Feasible(Evidence::Constructive { samples })),
            Err(e) => row(RowVerdict::Undecided(format!("constructive labeller failed: {e}"))),
        },
        _ => row(RowVerdict::Undecided(format!(
            "{cases} assignments exceed the limit of {}",
            cfg.exhaustive_limit
        ))),
    }
}

fn g_name(family: Family, n: usize) -> String {
    match family {
        Family::Path => format!("P_{n}"),
        Family::Cycle => format!("C_{n}"),
    }
}

/// Rows for every `n` in the range, computed in parallel, in order.
pub fn survey(family: Family, ns: std::ops::RangeInclusive<usize>, cfg: &SurveyConfig) -> Vec<SurveyRow> {
    let ns: Vec<usize> = ns.collect();
    ns.par_iter().map(|&n| survey_row(family, n, cfg)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn universe() -> Vec<Label> {
        [-3, -2, -1, 1, 2, 3].into_iter().map(Label::int).collect()
    }

    #[test]
    fn small_rows() {
        let cfg = SurveyConfig::new(universe(), 2);
        assert!(survey_row(Family::Cycle, 3, &cfg).verdict.is_infeasible());
        assert!(survey_row(Family::Cycle, 4, &cfg).verdict.is_feasible());
        assert!(survey_row(Family::Path, 3, &cfg).verdict.is_feasible());
        assert!(survey_row(Family::Path, 5, &cfg).verdict.is_infeasible());
        let cfg = SurveyConfig::new(universe(), 3);
        assert!(survey_row(Family::Path, 5, &cfg).verdict.is_feasible());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), BigUint::from(15u32));
        assert_eq!(binomial(6, 3), BigUint::from(20u32));
    }
}
