//! Multigraded quotients of the coordinate ring of (P^1)^k: a self-contained
//! rank engine and expected-series expansion for the product-of-lines
//! question. Cells are multidegrees v in a box [0, prec]^k; the expected
//! series is the multigraded truncation of
//! prod_j (1 - prod_i x_i^{d_{ij}}) / prod_i (1 - x_i)^2.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::forms::derive_seed;
use crate::linalg::Echelon;
use crate::series::TruncatedSeries;

use super::{CheckParams, SeriesPayload, Verdict};

/// Dense box of multidegree cells, lex-ordered by multidegree.
#[derive(Clone, Debug)]
pub struct MultiSeries {
    pub k: usize,
    pub prec: u32,
    /// Cell values indexed by the lex rank of the multidegree.
    pub values: Vec<i64>,
}

impl MultiSeries {
    fn cells(k: usize, prec: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; k];
        loop {
            out.push(cur.clone());
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < prec {
                    cur[i] += 1;
                    for c in cur.iter_mut().skip(i + 1) {
                        *c = 0;
                    }
                    break;
                }
            }
        }
    }

    pub fn value(&self, v: &[u32]) -> i64 {
        let mut idx = 0usize;
        for &c in v {
            idx = idx * (self.prec as usize + 1) + c as usize;
        }
        self.values[idx]
    }
}

/// Monomials of a given multidegree: one exponent split per factor.
fn basis(k: usize, v: &[u32]) -> Vec<Vec<u16>> {
    debug_assert_eq!(v.len(), k);
    let mut out: Vec<Vec<u16>> = vec![Vec::new()];
    for &vi in v.iter().take(k) {
        let mut next = Vec::with_capacity(out.len() * (vi as usize + 1));
        for stem in &out {
            for a in 0..=vi as u16 {
                let mut e = stem.clone();
                e.push(a);
                e.push(vi as u16 - a);
                next.push(e);
            }
        }
        out = next;
    }
    out
}

#[derive(Clone, Debug)]
struct MultiForm {
    multidegree: Vec<u32>,
    coeffs: BTreeMap<Vec<u16>, u64>,
}

fn random_form(k: usize, multidegree: &[u32], p: u64, rng: &mut ChaCha8Rng) -> MultiForm {
    let mut coeffs = BTreeMap::new();
    for key in basis(k, multidegree) {
        let v = rng.gen_range(0..p);
        if v != 0 {
            coeffs.insert(key, v);
        }
    }
    MultiForm { multidegree: multidegree.to_vec(), coeffs }
}

/// Empirical quotient dimensions on the box, minimum over trials.
pub fn multi_p1_quotient(
    k: usize,
    multidegrees: &[Vec<u32>],
    field: FieldSpec,
    seed: u64,
    trials: u32,
    prec: u32,
) -> Result<MultiSeries> {
    if !(2..=4).contains(&k) {
        return Err(Error::InvalidParameter("products of 2 to 4 projective lines supported".into()));
    }
    if multidegrees.iter().any(|m| m.len() != k) {
        return Err(Error::InvalidParameter("every multidegree needs one entry per factor".into()));
    }
    let cells = MultiSeries::cells(k, prec);
    let mut best: Option<Vec<i64>> = None;
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, trial as u64));
        let forms: Vec<MultiForm> =
            multidegrees.iter().map(|m| random_form(k, m, field.prime(), &mut rng)).collect();
        let mut values = Vec::with_capacity(cells.len());
        for v in &cells {
            let cell_basis = basis(k, v);
            let index: BTreeMap<Vec<u16>, u32> =
                cell_basis.iter().enumerate().map(|(i, b)| (b.clone(), i as u32)).collect();
            let mut ech = Echelon::new(cell_basis.len(), field.field());
            for f in &forms {
                if f.multidegree.iter().zip(v).any(|(&d, &c)| d > c) {
                    continue;
                }
                let comp: Vec<u32> = v.iter().zip(&f.multidegree).map(|(&c, &d)| c - d).collect();
                let mut entries: Vec<(u32, u64)> = Vec::new();
                for mult in basis(k, &comp) {
                    entries.clear();
                    for (key, &c) in &f.coeffs {
                        let prod: Vec<u16> =
                            mult.iter().zip(key).map(|(&a, &b)| a + b).collect();
                        entries.push((index[&prod], c));
                    }
                    ech.insert_sparse(&entries);
                }
            }
            values.push((cell_basis.len() - ech.rank()) as i64);
        }
        best = Some(match best {
            None => values,
            Some(prev) => prev.iter().zip(&values).map(|(&a, &b)| a.min(b)).collect(),
        });
    }
    Ok(MultiSeries { k, prec, values: best.expect("trials >= 1") })
}

/// Expected multigraded series: truncation of
/// prod_j (1 - prod_i x_i^{d_{ij}}) / prod_i (1 - x_i)^2.
pub fn multi_p1_expected(k: usize, multidegrees: &[Vec<u32>], prec: u32, strict: bool) -> MultiSeries {
    let cells = MultiSeries::cells(k, prec);
    // Numerator terms: multidegree -> coefficient.
    let mut numerator: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    numerator.insert(vec![0; k], 1);
    for m in multidegrees {
        let mut next = numerator.clone();
        for (w, c) in &numerator {
            let shifted: Vec<u32> = w.iter().zip(m).map(|(&a, &b)| a + b).collect();
            *next.entry(shifted).or_insert(0) -= c;
        }
        numerator = next;
    }
    let raw: Vec<i64> = cells
        .iter()
        .map(|v| {
            let mut acc = 0i64;
            for (w, c) in &numerator {
                if w.iter().zip(v).all(|(&a, &b)| a <= b) {
                    let mut prod = 1i64;
                    for i in 0..k {
                        prod *= (v[i] - w[i] + 1) as i64;
                    }
                    acc += c * prod;
                }
            }
            acc
        })
        .collect();
    // Multigraded truncation over the componentwise order.
    let stride = prec as usize + 1;
    let mut alive = vec![false; raw.len()];
    let mut values = vec![0i64; raw.len()];
    for (idx, v) in cells.iter().enumerate() {
        let pass = if strict { raw[idx] > 0 } else { raw[idx] >= 0 };
        let mut above = true;
        let mut base = 0usize;
        for &c in v {
            base = base * stride + c as usize;
        }
        debug_assert_eq!(base, idx);
        let mut step = 1usize;
        for i in (0..k).rev() {
            if v[i] > 0 && !alive[idx - step] {
                above = false;
            }
            step *= stride;
        }
        alive[idx] = pass && above;
        if alive[idx] {
            values[idx] = raw[idx];
        }
    }
    MultiSeries { k, prec, values }
}

#[derive(Clone, Debug)]
pub struct MultiP1Outcome {
    pub computed: MultiSeries,
    pub expected: MultiSeries,
    pub first_divergence: Option<Vec<u32>>,
}

pub(super) fn run_multi_p1(
    params: &CheckParams,
    field: FieldSpec,
    seed: u64,
    trials: u32,
) -> Result<super::checks::Outcome> {
    let multidegrees = params
        .multidegrees
        .clone()
        .ok_or_else(|| Error::InvalidParameter("multi-p1 needs --multidegrees".into()))?;
    let k = multidegrees
        .first()
        .map(|m| m.len())
        .ok_or_else(|| Error::InvalidParameter("multi-p1 needs at least one form".into()))?;
    let prec = params.prec_x.unwrap_or(4) as u32;
    let strict = params.strict.unwrap_or(true);
    let computed = multi_p1_quotient(k, &multidegrees, field, derive_seed(seed, 1), trials, prec)?;
    let expected = multi_p1_expected(k, &multidegrees, prec, strict);
    let cells = MultiSeries::cells(k, prec);
    let first = cells
        .iter()
        .enumerate()
        .find(|(i, _)| computed.values[*i] != expected.values[*i])
        .map(|(_, v)| v.clone());
    let verdict = match &first {
        None => Verdict::Match,
        Some(v) => Verdict::Mismatch {
            degree: crate::monomial::Degree::Total(v.iter().sum()),
        },
    };
    // Flattened payloads keep the report recheckable.
    let flat =
        |s: &MultiSeries| TruncatedSeries::from_dims(&s.values.iter().map(|&v| v as usize).collect::<Vec<_>>());
    let mut detail = BTreeMap::new();
    detail.insert("cell_order".into(), json!("lexicographic multidegrees, row-major"));
    detail.insert("factors".into(), json!(k));
    detail.insert("box".into(), json!(prec));
    if let Some(v) = &first {
        detail.insert("first_divergent_cell".into(), json!(v));
    }
    Ok(super::checks::Outcome {
        verdict,
        computed: Some(SeriesPayload::Uni(flat(&computed))),
        reference: Some(SeriesPayload::Uni(flat(&expected))),
        convention: Some(if strict { "strict".into() } else { "zeros-pass".into() }),
        detail,
        profile: None,
    })
}
