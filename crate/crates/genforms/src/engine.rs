//! Empirical Hilbert-series computation: per-degree Macaulay-matrix ranks
//! over a prime field for quotients of the four ambient families, degreewise
//! initial ideals, and multiplication-map rank tests.
//!
//! Everything is deterministic given (kind, specs, field, seed). Per-trial
//! quotient dimensions are aggregated by coefficientwise minimum: an unlucky
//! draw or prime can only inflate a Hilbert series, never deflate it.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bigraded::TruncatedBiSeries;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, PrimeField};
use crate::forms::{derive_seed, form_degrees, mul_monomials, realize_generators, Form, GeneratorSpec};
use crate::linalg::{Echelon, UnitClass};
use crate::monomial::{ambient_dim, monomial_basis, AlgebraKind, Degree, MonomialKey};
use crate::series::{
    anick_series, compare_series, exterior_expected_series, froberg_series, DegreeSequence,
    TruncatedSeries,
};

pub const DEFAULT_PRIME: u64 = 32003;
pub const DEFAULT_TRIALS: u32 = 3;

/// Resource guards for rank computations.
#[derive(Clone, Copy, Debug)]
pub struct EngineOptions {
    /// Hard cap on elimination width (columns).
    pub max_width: usize,
    /// Rough cap on resident echelon bytes.
    pub max_bytes: usize,
}

impl Default for EngineOptions {
    fn default() -> Self {
        Self { max_width: 1 << 22, max_bytes: 3 << 30 }
    }
}

/// Ambient dimension / ideal rank / quotient dimension in one degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRank {
    pub degree: Degree,
    pub ambient_dim: usize,
    pub ideal_rank: usize,
    pub quotient_dim: usize,
}

/// Per-degree rank data: the aggregated (coefficientwise-minimum) profile
/// plus the raw per-trial profiles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankProfile {
    pub per_degree: Vec<DegreeRank>,
    pub per_trial: Vec<Vec<DegreeRank>>,
}

#[derive(Clone, Debug)]
pub struct QuotientOutput {
    pub series: TruncatedSeries,
    pub profile: RankProfile,
}

fn check_width(width: usize, opts: &EngineOptions) -> Result<()> {
    if width > opts.max_width {
        return Err(Error::ResourceCap(format!(
            "elimination width {width} exceeds cap {}",
            opts.max_width
        )));
    }
    Ok(())
}

/// Macaulay elimination state for one graded piece of a commutative,
/// exterior or bigraded quotient.
struct GradedMacaulay {
    echelon: Echelon,
    basis: Vec<MonomialKey>,
    index: BTreeMap<MonomialKey, u32>,
}

fn build_graded_macaulay(
    kind: AlgebraKind,
    gens: &[Form],
    degree: Degree,
    field: PrimeField,
    opts: &EngineOptions,
) -> Result<GradedMacaulay> {
    let basis = monomial_basis(kind, degree);
    check_width(basis.len(), opts)?;
    let index: BTreeMap<MonomialKey, u32> =
        basis.iter().enumerate().map(|(i, k)| (k.clone(), i as u32)).collect();
    let mut mac = GradedMacaulay { echelon: Echelon::new(basis.len(), field), basis, index };
    for f in gens {
        insert_multiples(&mut mac, kind, f, degree, field)?;
    }
    Ok(mac)
}

/// Insert the rows m * f for every ambient monomial m of complementary
/// degree (left multiples; for the bigraded family the complement is
/// componentwise).
fn insert_multiples(
    mac: &mut GradedMacaulay,
    kind: AlgebraKind,
    f: &Form,
    degree: Degree,
    field: PrimeField,
) -> Result<()> {
    let comp = match (degree, f.degree) {
        (Degree::Total(t), Degree::Total(d)) => {
            if d > t {
                return Ok(());
            }
            Degree::Total(t - d)
        }
        (Degree::Bi(a, b), Degree::Bi(c, d)) => {
            if c > a || d > b {
                return Ok(());
            }
            Degree::Bi(a - c, b - d)
        }
        _ => return Err(Error::SpecKindMismatch("mixed gradings".into())),
    };
    let mut entries: Vec<(u32, u64)> = Vec::with_capacity(f.coeffs.len());
    for m in monomial_basis(kind, comp) {
        entries.clear();
        for (key, &c) in &f.coeffs {
            if let Some((prod, sign)) = mul_monomials(kind, &m, key) {
                let col = mac.index[&prod];
                let v = if sign < 0 { field.neg(c) } else { c };
                entries.push((col, v));
            }
        }
        if !entries.is_empty() {
            mac.echelon.insert_sparse(&entries);
        }
    }
    Ok(())
}

/// Rank over F_p of the degree-t Macaulay matrix of the given homogeneous
/// generators. For the tensor algebra the span is two-sided: rows are
/// w * f_i * w' over all word pairs with |w| + |w'| = t - deg f_i.
pub fn macaulay_rank(
    kind: AlgebraKind,
    gens: &[Form],
    degree: Degree,
    field: FieldSpec,
) -> Result<usize> {
    let opts = EngineOptions::default();
    match kind {
        AlgebraKind::Tensor { n } => {
            let t = match degree {
                Degree::Total(t) => t,
                Degree::Bi(..) => return Err(Error::SpecKindMismatch("bidegree in tensor".into())),
            };
            tensor_exhaustive_rank(n, gens, t, field.field(), &opts)
        }
        _ => {
            let mac = build_graded_macaulay(kind, gens, degree, field.field(), &opts)?;
            Ok(mac.echelon.rank())
        }
    }
}

/// Two-sided tensor Macaulay rank by exhaustive (w, w') enumeration over
/// word columns. Exponential in the degree; meant for modest sizes and as an
/// independent cross-check of the levelwise computation.
fn tensor_exhaustive_rank(
    n: u32,
    gens: &[Form],
    t: u32,
    field: PrimeField,
    opts: &EngineOptions,
) -> Result<usize> {
    let n = n as usize;
    let width = n.checked_pow(t).ok_or_else(|| Error::ResourceCap("word count overflow".into()))?;
    check_width(width, opts)?;
    let mut ech = Echelon::new(width, field);
    let word_index = |w: &[u8]| -> usize { w.iter().fold(0usize, |acc, &l| acc * n + l as usize) };
    let mut entries: Vec<(u32, u64)> = Vec::new();
    for f in gens {
        let d = f.degree.total();
        if d > t {
            continue;
        }
        let free = (t - d) as usize;
        for a in 0..=free {
            let b = free - a;
            let left_count = n.pow(a as u32);
            let right_count = n.pow(b as u32);
            for il in 0..left_count {
                for ir in 0..right_count {
                    entries.clear();
                    for (key, &c) in &f.coeffs {
                        let u = word_index(key.word());
                        let col = (il * n.pow(d) + u) * right_count + ir;
                        entries.push((col as u32, c));
                    }
                    ech.insert_sparse(&entries);
                }
            }
        }
    }
    Ok(ech.rank())
}

/// One graded level of the tensor quotient: the finalized elimination of the
/// relation rows inside V (x) A_{s-1}, whose free columns are the basis of
/// A_s.
struct TensorLevel {
    echelon: Echelon,
    /// dim A_{s-1}, so columns factor as letter * a_prev + basis index.
    a_prev: usize,
}

/// Levelwise quotient dimensions of the two-sided tensor quotient.
///
/// Degree t is computed as A_t = (V (x) A_{t-1}) / sum_i f_i . A_{t - d_i}:
/// two-sided multiples with a nonempty left factor already lie inside
/// x_j . I_{t-1}, which the V (x) A_{t-1} coordinates quotient away, so one
/// relation row per generator and basis element of A_{t - d_i} suffices.
fn tensor_quotient_dims(
    n: u32,
    gens: &[Form],
    max_degree: u32,
    field: PrimeField,
    opts: &EngineOptions,
) -> Result<Vec<DegreeRank>> {
    let nu = n as usize;
    let mut levels: Vec<TensorLevel> = Vec::new(); // levels[s-1] built at degree s
    let mut dims: Vec<usize> = vec![1]; // a_0
    let mut out = vec![DegreeRank {
        degree: Degree::Total(0),
        ambient_dim: 1,
        ideal_rank: 0,
        quotient_dim: 1,
    }];
    let mut bytes = 0usize;

    for t in 1..=max_degree {
        let a_prev = dims[(t - 1) as usize];
        let width = nu.checked_mul(a_prev).ok_or_else(|| Error::ResourceCap("width overflow".into()))?;
        check_width(width, opts)?;
        let mut ech = Echelon::new(width, field);
        for f in gens {
            let d = f.degree.total();
            if d > t {
                continue;
            }
            let m = (t - d) as usize;
            for b_idx in 0..dims[m] as u32 {
                let entries = relation_row(&levels, &dims, m, f, b_idx, field)?;
                ech.insert_sparse(&entries);
            }
            if ech.approx_bytes() + bytes > opts.max_bytes {
                return Err(Error::ResourceCap(format!(
                    "tensor elimination exceeds memory cap at degree {t}"
                )));
            }
        }
        let rank = ech.rank();
        let a_t = width - rank;
        let ambient = nu
            .checked_pow(t)
            .ok_or_else(|| Error::ResourceCap("ambient dimension overflow".into()))?;
        out.push(DegreeRank {
            degree: Degree::Total(t),
            ambient_dim: ambient,
            ideal_rank: ambient - a_t,
            quotient_dim: a_t,
        });
        dims.push(a_t);
        ech.finalize();
        bytes += ech.approx_bytes();
        levels.push(TensorLevel { echelon: ech, a_prev });
    }
    Ok(out)
}

/// Relation row for f . b in V (x) A_{t-1} coordinates, where b is the
/// basis element `b_idx` of A_m and t = m + deg f.
fn relation_row(
    levels: &[TensorLevel],
    dims: &[usize],
    m: usize,
    f: &Form,
    b_idx: u32,
    field: PrimeField,
) -> Result<Vec<(u32, u64)>> {
    let t_minus_1 = m + f.degree.total() as usize - 1;
    let a_out = dims[t_minus_1];
    let mut entries: Vec<(u32, u64)> = Vec::new();
    for (key, &c) in &f.coeffs {
        let w = key.word();
        let j = w[0] as usize;
        // Class of w[1..] . b in A_{t-1} coordinates.
        let mut vec: BTreeMap<u32, u64> = BTreeMap::new();
        vec.insert(b_idx, 1);
        let mut s = m; // current level of `vec`
        for &letter in w[1..].iter().rev() {
            vec = apply_letter(&levels[s], letter, &vec, field);
            s += 1;
        }
        debug_assert_eq!(s, t_minus_1);
        let offset = (j * a_out) as u32;
        for (&idx, &val) in &vec {
            entries.push((offset + idx, field.mul(val, c)));
        }
    }
    Ok(entries)
}

/// Multiply a class vector in A_{s-1} coordinates by a variable on the left,
/// producing its class in A_s coordinates.
fn apply_letter(
    level: &TensorLevel,
    letter: u8,
    vec: &BTreeMap<u32, u64>,
    field: PrimeField,
) -> BTreeMap<u32, u64> {
    let mut out: BTreeMap<u32, u64> = BTreeMap::new();
    let mut add = |idx: u32, v: u64| {
        if v == 0 {
            return;
        }
        let e = out.entry(idx).or_insert(0);
        *e = field.add(*e, v);
        if *e == 0 {
            out.remove(&idx);
        }
    };
    for (&idx, &val) in vec {
        let col = letter as u32 * level.a_prev as u32 + idx;
        match level.echelon.unit_class(col) {
            UnitClass::Free(q) => add(q, val),
            UnitClass::PivotSparse(tail) => {
                let neg = field.neg(val);
                for &(tc, tv) in tail {
                    add(level.echelon.quotient_index(tc), field.mul(neg, tv as u64));
                }
            }
            UnitClass::PivotDense(row) => {
                let neg = field.neg(val);
                for (q, &fc) in level.echelon.free_cols().iter().enumerate() {
                    let tv = row[fc as usize];
                    if tv != 0 {
                        add(q as u32, field.mul(neg, tv as u64));
                    }
                }
            }
        }
    }
    out
}

fn single_graded_dims(
    kind: AlgebraKind,
    gens: &[Form],
    max_degree: u32,
    field: PrimeField,
    opts: &EngineOptions,
) -> Result<Vec<DegreeRank>> {
    let mut out = Vec::with_capacity(max_degree as usize + 1);
    for t in 0..=max_degree {
        let degree = Degree::Total(t);
        let ambient = ambient_dim(kind, degree);
        let rank = if ambient == 0 {
            0
        } else {
            build_graded_macaulay(kind, gens, degree, field, opts)?.echelon.rank()
        };
        out.push(DegreeRank {
            degree,
            ambient_dim: ambient,
            ideal_rank: rank,
            quotient_dim: ambient - rank,
        });
    }
    Ok(out)
}

/// Empirical Hilbert series of the quotient by the realized generators, for
/// the three single-graded families.
///
/// Runs `trials` independent realizations (seeds derived from the master
/// seed by counter) and aggregates quotient dimensions by coefficientwise
/// minimum. The known lower bound for the family (conjectural minimal
/// series, Anick bound, or expected exterior series) is asserted on every
/// run; a violation is an engine bug, not a mathematical discovery.
pub fn quotient_series(
    kind: AlgebraKind,
    specs: &[GeneratorSpec],
    field: FieldSpec,
    seed: u64,
    trials: u32,
    max_degree: u32,
) -> Result<QuotientOutput> {
    quotient_series_opts(kind, specs, field, seed, trials, max_degree, &EngineOptions::default())
}

pub fn quotient_series_opts(
    kind: AlgebraKind,
    specs: &[GeneratorSpec],
    field: FieldSpec,
    seed: u64,
    trials: u32,
    max_degree: u32,
    opts: &EngineOptions,
) -> Result<QuotientOutput> {
    if trials < 1 {
        return Err(Error::InvalidParameter("trials must be >= 1".into()));
    }
    if kind.is_bigraded() {
        return Err(Error::InvalidParameter(
            "use bigraded_quotient_series for the bigraded family".into(),
        ));
    }
    let mut per_trial: Vec<Vec<DegreeRank>> = Vec::with_capacity(trials as usize);
    let mut degrees_realized: Option<Vec<u32>> = None;
    for trial in 0..trials {
        let forms = realize_generators(kind, specs, field, derive_seed(seed, trial as u64))?;
        if degrees_realized.is_none() {
            degrees_realized = Some(form_degrees(&forms));
        }
        let dims = match kind {
            AlgebraKind::Tensor { n } => {
                tensor_quotient_dims(n, &forms, max_degree, field.field(), opts)?
            }
            _ => single_graded_dims(kind, &forms, max_degree, field.field(), opts)?,
        };
        per_trial.push(dims);
    }
    let aggregated: Vec<DegreeRank> = (0..=max_degree as usize)
        .map(|i| {
            per_trial
                .iter()
                .map(|t| t[i])
                .min_by_key(|d| d.quotient_dim)
                .expect("at least one trial")
        })
        .collect();
    let series =
        TruncatedSeries::from_dims(&aggregated.iter().map(|d| d.quotient_dim).collect::<Vec<_>>());

    // Lower bounds hold for any field and any forms; assert on every run.
    let degree_seq = DegreeSequence::new(degrees_realized.unwrap_or_default())
        .expect("realized degrees are positive");
    let bound = match kind {
        AlgebraKind::Commutative { n } => froberg_series(n, &degree_seq, max_degree as usize),
        AlgebraKind::Tensor { n } => anick_series(n, &degree_seq, max_degree as usize),
        AlgebraKind::Exterior { n } => {
            exterior_expected_series(n, &degree_seq, max_degree as usize)
        }
        AlgebraKind::Bigraded { .. } => unreachable!(),
    };
    let cmp = compare_series(&series, &bound)?;
    if !cmp.is_ge() {
        return Err(Error::EngineInvariant(format!(
            "computed series {series} drops below the {kind} lower bound {bound}"
        )));
    }

    Ok(QuotientOutput { series, profile: RankProfile { per_degree: aggregated, per_trial } })
}

/// Empirical bigraded Hilbert series on the rectangle
/// `[0, prec_x] x [0, prec_y]`.
#[allow(clippy::too_many_arguments)]
pub fn bigraded_quotient_series(
    m: u32,
    n: u32,
    specs: &[GeneratorSpec],
    field: FieldSpec,
    seed: u64,
    trials: u32,
    prec_x: usize,
    prec_y: usize,
) -> Result<(TruncatedBiSeries, RankProfile)> {
    if trials < 1 {
        return Err(Error::InvalidParameter("trials must be >= 1".into()));
    }
    let kind = AlgebraKind::Bigraded { m, n };
    let opts = EngineOptions::default();
    let mut per_trial: Vec<Vec<DegreeRank>> = Vec::with_capacity(trials as usize);
    for trial in 0..trials {
        let forms = realize_generators(kind, specs, field, derive_seed(seed, trial as u64))?;
        let mut dims = Vec::with_capacity((prec_x + 1) * (prec_y + 1));
        for i in 0..=prec_x {
            for j in 0..=prec_y {
                let degree = Degree::Bi(i as u32, j as u32);
                let ambient = ambient_dim(kind, degree);
                let rank =
                    build_graded_macaulay(kind, &forms, degree, field.field(), &opts)?.echelon.rank();
                dims.push(DegreeRank {
                    degree,
                    ambient_dim: ambient,
                    ideal_rank: rank,
                    quotient_dim: ambient - rank,
                });
            }
        }
        per_trial.push(dims);
    }
    let aggregated: Vec<DegreeRank> = (0..per_trial[0].len())
        .map(|i| per_trial.iter().map(|t| t[i]).min_by_key(|d| d.quotient_dim).unwrap())
        .collect();
    let mut series = TruncatedBiSeries::zero(prec_x, prec_y);
    for d in &aggregated {
        if let Degree::Bi(i, j) = d.degree {
            series.set_coeff(i as usize, j as usize, num_bigint::BigInt::from(d.quotient_dim));
        }
    }
    Ok((series, RankProfile { per_degree: aggregated, per_trial }))
}

/// Per-degree lead monomials (pivot columns in degrevlex order, largest
/// first) of the degreewise initial ideal of a commutative quotient.
pub fn initial_ideal_leads(
    n: u32,
    specs: &[GeneratorSpec],
    field: FieldSpec,
    seed: u64,
    max_degree: u32,
) -> Result<Vec<Vec<MonomialKey>>> {
    let kind = AlgebraKind::Commutative { n };
    let forms = realize_generators(kind, specs, field, derive_seed(seed, 0))?;
    let opts = EngineOptions::default();
    let mut out = Vec::with_capacity(max_degree as usize + 1);
    for t in 0..=max_degree {
        let mac = build_graded_macaulay(kind, &forms, Degree::Total(t), field.field(), &opts)?;
        let leads: Vec<MonomialKey> =
            mac.echelon.pivot_cols().map(|c| mac.basis[c as usize].clone()).collect();
        out.push(leads);
    }
    Ok(out)
}

/// Is each degree's lead set an upper set in degrevlex order? On failure
/// returns the witness pair (member, missing-larger-monomial).
pub fn is_almost_degrevlex(
    leads: &[Vec<MonomialKey>],
    n: u32,
) -> (bool, Option<(MonomialKey, MonomialKey)>) {
    for (t, lead_set) in leads.iter().enumerate() {
        let basis = monomial_basis(AlgebraKind::Commutative { n }, Degree::Total(t as u32));
        let members: std::collections::HashSet<&MonomialKey> = lead_set.iter().collect();
        let mut first_missing: Option<&MonomialKey> = None;
        for key in &basis {
            if members.contains(key) {
                if let Some(missing) = first_missing {
                    return (false, Some((key.clone(), missing.clone())));
                }
            } else if first_missing.is_none() {
                first_missing = Some(key);
            }
        }
    }
    (true, None)
}

/// Rank data of the multiplication map A_i -> A_{i+d} induced by one
/// multiplier form on the quotient by the realized generators.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct MultiplicationRank {
    pub rank: usize,
    pub dim_source: usize,
    pub dim_target: usize,
    pub multiplier_degree: u32,
    pub maximal: bool,
}

pub fn multiplication_rank(
    kind: AlgebraKind,
    quotient_specs: &[GeneratorSpec],
    multiplier_spec: &GeneratorSpec,
    i: u32,
    field: FieldSpec,
    seed: u64,
) -> Result<MultiplicationRank> {
    if matches!(kind, AlgebraKind::Tensor { .. }) || kind.is_bigraded() {
        return Err(Error::InvalidParameter(
            "multiplication ranks are implemented for the commutative and exterior families".into(),
        ));
    }
    let opts = EngineOptions::default();
    let gens = realize_generators(kind, quotient_specs, field, derive_seed(seed, 0))?;
    let mult = realize_generators(kind, std::slice::from_ref(multiplier_spec), field, derive_seed(seed, 1))?;
    if mult.len() != 1 {
        return Err(Error::InvalidParameter("multiplier spec must produce exactly one form".into()));
    }
    let f = &mult[0];
    let d = f.degree.total();
    if d < 1 {
        return Err(Error::InvalidParameter("multiplier must have degree >= 1".into()));
    }
    let pf = field.field();

    let source = build_graded_macaulay(kind, &gens, Degree::Total(i), pf, &opts)?;
    let dim_source = ambient_dim(kind, Degree::Total(i)) - source.echelon.rank();

    let mut target = build_graded_macaulay(kind, &gens, Degree::Total(i + d), pf, &opts)?;
    let rank_ideal = target.echelon.rank();
    let dim_target = ambient_dim(kind, Degree::Total(i + d)) - rank_ideal;

    // Extend with the multiplier-image rows and compare ranks.
    insert_multiples(&mut target, kind, f, Degree::Total(i + d), pf)?;
    // Restrict to images of degree-i monomials only: insert_multiples used
    // complementary degree i automatically since deg f = d.
    let rank = target.echelon.rank() - rank_ideal;
    Ok(MultiplicationRank {
        rank,
        dim_source,
        dim_target,
        multiplier_degree: d,
        maximal: rank == dim_source.min(dim_target),
    })
}
