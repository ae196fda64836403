//! Declarative parameter grids: a key/value text format expands into a cell
//! list, each cell runs one check with a seed derived from the master seed
//! by cell index, and cell-level errors never abort the grid.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::derive_seed;

use super::{check, CheckId, CheckParams, CheckSpec, Expectation, Verdict, VerificationReport};

#[derive(Clone, Debug)]
pub struct GridConfig {
    pub check: CheckId,
    /// None: per-cell default expectation.
    pub expectation: Option<Expectation>,
    pub master_seed: u64,
    pub max_cells: usize,
    /// Fully expanded cell parameters (cartesian product of the varying
    /// keys, in declaration-independent fixed key order).
    pub cells: Vec<CheckParams>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GridCell {
    pub index: usize,
    pub spec: CheckSpec,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub report: Option<VerificationReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSummary {
    pub cells: usize,
    pub matches: usize,
    pub mismatches: usize,
    pub incomparable: usize,
    pub errors: usize,
    pub expectation_failures: usize,
}

impl std::fmt::Display for GridSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "cells                 {}", self.cells)?;
        writeln!(f, "matches               {}", self.matches)?;
        writeln!(f, "mismatches            {}", self.mismatches)?;
        writeln!(f, "incomparable          {}", self.incomparable)?;
        writeln!(f, "errors                {}", self.errors)?;
        write!(f, "expectation failures  {}", self.expectation_failures)
    }
}

/// Run every cell; errors are recorded per cell.
pub fn run_grid(config: &GridConfig) -> (Vec<GridCell>, GridSummary) {
    let mut cells = Vec::with_capacity(config.cells.len());
    let mut summary = GridSummary { cells: config.cells.len(), ..Default::default() };
    for (index, params) in config.cells.iter().enumerate() {
        let mut params = params.clone();
        if params.seed.is_none() {
            params.seed = Some(derive_seed(config.master_seed, index as u64));
        }
        let spec =
            CheckSpec { check_id: config.check, params, expectation: config.expectation };
        match check(&spec) {
            Ok(report) => {
                match report.verdict {
                    Verdict::Match => summary.matches += 1,
                    Verdict::Mismatch { .. } => summary.mismatches += 1,
                    Verdict::Incomparable { .. } => summary.incomparable += 1,
                }
                if !report.expectation_met {
                    summary.expectation_failures += 1;
                }
                cells.push(GridCell { index, spec, report: Some(report), error: None });
            }
            Err(e) => {
                summary.errors += 1;
                cells.push(GridCell { index, spec, report: None, error: Some(e.to_string()) });
            }
        }
    }
    (cells, summary)
}

/// Values a grid key can take in one cell.
#[derive(Clone, Debug)]
enum Vary {
    Num(Vec<u32>),
    Degrees(Vec<Vec<u32>>),
    Bidegrees(Vec<Vec<(u32, u32)>>),
    Multidegrees(Vec<Vec<Vec<u32>>>),
}

/// Parse the key = value grid format. Lists use commas (scalars) or ` | `
/// (degree multisets); `a..b` is an inclusive range; `@multisets(...)`
/// enumerates non-increasing degree sequences.
pub fn parse_grid_config(text: &str) -> Result<GridConfig> {
    let mut check: Option<CheckId> = None;
    let mut expectation: Option<Expectation> = None;
    let mut master_seed = super::DEFAULT_SEED;
    let mut max_cells = 100_000usize;
    let mut base = CheckParams::default();
    let mut varying: Vec<(&'static str, Vary)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("line {}: expected key = value", lineno + 1)))?;
        let key = key.trim();
        let value = value.trim();
        let parse_err = |what: &str| Error::Parse(format!("line {}: bad {what}: '{value}'", lineno + 1));
        match key {
            "check" => check = Some(value.parse()?),
            "expect" => {
                expectation = match value {
                    "default" => None,
                    other => Some(other.parse()?),
                }
            }
            "seed" => master_seed = value.parse().map_err(|_| parse_err("seed"))?,
            "max_cells" => max_cells = value.parse().map_err(|_| parse_err("max_cells"))?,
            "prime" => base.prime = Some(value.parse().map_err(|_| parse_err("prime"))?),
            "second_prime" => {
                base.second_prime = Some(value.parse().map_err(|_| parse_err("second_prime"))?)
            }
            "trials" => base.trials = Some(value.parse().map_err(|_| parse_err("trials"))?),
            "max_degree" => base.max_degree = Some(value.parse().map_err(|_| parse_err("max_degree"))?),
            "prec_x" => base.prec_x = Some(value.parse().map_err(|_| parse_err("prec_x"))?),
            "prec_y" => base.prec_y = Some(value.parse().map_err(|_| parse_err("prec_y"))?),
            "strict" => base.strict = Some(value.parse().map_err(|_| parse_err("strict"))?),
            "with_squares" => {
                base.with_squares = Some(value.parse().map_err(|_| parse_err("with_squares"))?)
            }
            "factors" => {
                base.factors = Some(
                    value
                        .split('+')
                        .map(|p| p.trim().parse().map_err(|_| parse_err("factors")))
                        .collect::<Result<_>>()?,
                )
            }
            "n" | "m" | "d" | "r" | "k" | "s" | "q" | "i" => {
                let nums = parse_numbers(value).ok_or_else(|| parse_err(key))?;
                let key: &'static str = match key {
                    "n" => "n",
                    "m" => "m",
                    "d" => "d",
                    "r" => "r",
                    "k" => "k",
                    "s" => "s",
                    "q" => "q",
                    _ => "i",
                };
                varying.push((key, Vary::Num(nums)));
            }
            "degrees" => {
                let lists = if let Some(spec) = value.strip_prefix("@multisets") {
                    expand_multisets(spec).ok_or_else(|| parse_err("degrees"))?
                } else {
                    value
                        .split('|')
                        .map(|alt| {
                            alt.trim()
                                .split(',')
                                .map(|p| p.trim().parse::<u32>().map_err(|_| parse_err("degrees")))
                                .collect::<Result<Vec<u32>>>()
                        })
                        .collect::<Result<Vec<_>>>()?
                };
                varying.push(("degrees", Vary::Degrees(lists)));
            }
            "bidegrees" => {
                let lists = value
                    .split('|')
                    .map(|alt| {
                        alt.trim()
                            .split(',')
                            .map(|p| {
                                let (a, b) = p
                                    .trim()
                                    .split_once(':')
                                    .ok_or_else(|| parse_err("bidegrees"))?;
                                Ok((
                                    a.parse().map_err(|_| parse_err("bidegrees"))?,
                                    b.parse().map_err(|_| parse_err("bidegrees"))?,
                                ))
                            })
                            .collect::<Result<Vec<(u32, u32)>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                varying.push(("bidegrees", Vary::Bidegrees(lists)));
            }
            "multidegrees" => {
                let lists = value
                    .split('|')
                    .map(|alt| {
                        alt.trim()
                            .split(',')
                            .map(|p| {
                                p.trim()
                                    .split(':')
                                    .map(|x| x.parse::<u32>().map_err(|_| parse_err("multidegrees")))
                                    .collect::<Result<Vec<u32>>>()
                            })
                            .collect::<Result<Vec<Vec<u32>>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                varying.push(("multidegrees", Vary::Multidegrees(lists)));
            }
            other => return Err(Error::Parse(format!("line {}: unknown key '{other}'", lineno + 1))),
        }
    }

    let check = check.ok_or_else(|| Error::Parse("grid config needs 'check = <id>'".into()))?;

    // Deterministic expansion order regardless of declaration order.
    const KEY_ORDER: [&str; 11] =
        ["n", "m", "d", "r", "k", "s", "q", "i", "degrees", "bidegrees", "multidegrees"];
    varying.sort_by_key(|(k, _)| KEY_ORDER.iter().position(|o| o == k).unwrap_or(usize::MAX));

    let mut cells = vec![base.clone()];
    for (key, vary) in &varying {
        let mut next = Vec::new();
        for cell in &cells {
            match vary {
                Vary::Num(vals) => {
                    for &v in vals {
                        let mut c = cell.clone();
                        match *key {
                            "n" => c.n = Some(v),
                            "m" => c.m = Some(v),
                            "d" => c.d = Some(v),
                            "r" => c.r = Some(v),
                            "k" => c.k = Some(v),
                            "s" => c.s = Some(v),
                            "q" => c.q = Some(v),
                            _ => c.i = Some(v),
                        }
                        next.push(c);
                    }
                }
                Vary::Degrees(lists) => {
                    for list in lists {
                        let mut c = cell.clone();
                        c.degrees = Some(list.clone());
                        next.push(c);
                    }
                }
                Vary::Bidegrees(lists) => {
                    for list in lists {
                        let mut c = cell.clone();
                        c.bidegrees = Some(list.clone());
                        next.push(c);
                    }
                }
                Vary::Multidegrees(lists) => {
                    for list in lists {
                        let mut c = cell.clone();
                        c.multidegrees = Some(list.clone());
                        next.push(c);
                    }
                }
            }
            if next.len() > max_cells {
                return Err(Error::ResourceCap(format!("grid exceeds max_cells = {max_cells}")));
            }
        }
        cells = next;
    }

    Ok(GridConfig { check, expectation, master_seed, max_cells, cells })
}

/// "2, 3, 5" or "2..6".
fn parse_numbers(value: &str) -> Option<Vec<u32>> {
    if let Some((a, b)) = value.split_once("..") {
        let a: u32 = a.trim().parse().ok()?;
        let b: u32 = b.trim().parse().ok()?;
        if a > b {
            return None;
        }
        return Some((a..=b).collect());
    }
    value.split(',').map(|p| p.trim().parse().ok()).collect()
}

/// "(dmin=2, dmax=4, rmin=1, rmax=6)": all non-increasing degree sequences.
fn expand_multisets(spec: &str) -> Option<Vec<Vec<u32>>> {
    let inner = spec.trim().strip_prefix('(')?.strip_suffix(')')?;
    let mut dmin = 1u32;
    let mut dmax = 4u32;
    let mut rmin = 1usize;
    let mut rmax = 4usize;
    for part in inner.split(',') {
        let (k, v) = part.split_once('=')?;
        match k.trim() {
            "dmin" => dmin = v.trim().parse().ok()?,
            "dmax" => dmax = v.trim().parse().ok()?,
            "rmin" => rmin = v.trim().parse().ok()?,
            "rmax" => rmax = v.trim().parse().ok()?,
            _ => return None,
        }
    }
    fn rec(left: usize, max_allowed: u32, dmin: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for d in (dmin..=max_allowed).rev() {
            cur.push(d);
            rec(left - 1, d, dmin, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    for r in rmin..=rmax {
        rec(r, dmax, dmin, &mut cur, &mut out);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_expand() {
        let config = parse_grid_config(
            "# demo\ncheck = froberg\nseed = 7\nn = 2, 3\ndegrees = 2,2 | 3,2\n",
        )
        .unwrap();
        assert_eq!(config.check, CheckId::Froberg);
        assert_eq!(config.master_seed, 7);
        assert_eq!(config.cells.len(), 4);
        assert_eq!(config.cells[0].n, Some(2));
        assert_eq!(config.cells[0].degrees, Some(vec![2, 2]));
        assert_eq!(config.cells[3].n, Some(3));
        assert_eq!(config.cells[3].degrees, Some(vec![3, 2]));
    }

    #[test]
    fn multiset_expansion_is_exhaustive() {
        let lists = expand_multisets("(dmin=2, dmax=3, rmin=1, rmax=2)").unwrap();
        // r=1: [3], [2]; r=2: [3,3], [3,2], [2,2].
        assert_eq!(
            lists,
            vec![vec![3], vec![2], vec![3, 3], vec![3, 2], vec![2, 2]]
        );
    }

    #[test]
    fn range_syntax() {
        assert_eq!(parse_numbers("2..5"), Some(vec![2, 3, 4, 5]));
        assert_eq!(parse_numbers("7"), Some(vec![7]));
        assert_eq!(parse_numbers("1, 4"), Some(vec![1, 4]));
    }

    #[test]
    fn empty_grid_is_a_single_base_cell_without_varying_keys() {
        let config = parse_grid_config("check = exterior-paths\nn = 5\n").unwrap();
        assert_eq!(config.cells.len(), 1);
    }

    #[test]
    fn run_small_grid() {
        let config =
            parse_grid_config("check = froberg\nn = 2\ndegrees = 2,2 | 2,2,2\ntrials = 2\n")
                .unwrap();
        let (cells, summary) = run_grid(&config);
        assert_eq!(cells.len(), 2);
        assert_eq!(summary.cells, 2);
        assert_eq!(summary.matches, 2);
        assert_eq!(summary.expectation_failures, 0);
        // Deterministic cell seeds derived from the master seed.
        assert!(cells.iter().all(|c| c.report.is_some()));
    }
}
