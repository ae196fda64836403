//! Homogeneous forms in the four ambient families and the declarative
//! generator specs the engine and harness consume.
//!
//! Realization is deterministic: a fixed (kind, specs, field, seed) always
//! produces the same forms, with randomness threaded through a single
//! counter-derived ChaCha stream.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, PrimeField};
use crate::monomial::{monomial_basis, AlgebraKind, Degree, MonomialKey};

/// Mix a master seed with a stream index (splitmix64 finalizer).
pub fn derive_seed(master: u64, stream: u64) -> u64 {
    let mut z = master ^ stream.wrapping_mul(0x9e3779b97f4a7c15);
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// A homogeneous element: nonzero coefficients over degree-homogeneous
/// monomial keys.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Form {
    pub kind: AlgebraKind,
    pub degree: Degree,
    /// Monomial -> nonzero field element.
    pub coeffs: BTreeMap<MonomialKey, u64>,
}

impl Form {
    pub fn zero(kind: AlgebraKind, degree: Degree) -> Self {
        Self { kind, degree, coeffs: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn monomial(kind: AlgebraKind, key: MonomialKey, degree: Degree) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(key, 1u64);
        Self { kind, degree, coeffs }
    }

    fn insert_term(&mut self, field: &PrimeField, key: MonomialKey, value: u64) {
        if value == 0 {
            return;
        }
        let entry = self.coeffs.entry(key.clone()).or_insert(0);
        *entry = field.add(*entry, value);
        if *entry == 0 {
            // cancelled terms are removed to keep the no-zero-entries invariant
            self.coeffs.remove(&key);
        }
    }
}

/// Monomial product in the ambient algebra: the product key and a sign,
/// `None` when the product vanishes (exterior squares).
pub fn mul_monomials(
    kind: AlgebraKind,
    a: &MonomialKey,
    b: &MonomialKey,
) -> Option<(MonomialKey, i32)> {
    match kind {
        AlgebraKind::Commutative { .. } | AlgebraKind::Bigraded { .. } => {
            let (ea, eb) = (a.exponents(), b.exponents());
            let sum: Vec<u16> = ea.iter().zip(eb).map(|(&x, &y)| x + y).collect();
            Some((MonomialKey::Exponents(sum), 1))
        }
        AlgebraKind::Exterior { .. } => {
            let (ea, eb) = (a.exponents(), b.exponents());
            let mut sum = Vec::with_capacity(ea.len());
            for (&x, &y) in ea.iter().zip(eb) {
                if x + y > 1 {
                    return None;
                }
                sum.push(x + y);
            }
            // Sign of sorting the concatenation a then b: count pairs
            // (i in a, j in b) with i > j.
            let mut inversions = 0u32;
            let mut b_seen = 0u32;
            for i in 0..ea.len() {
                if eb[i] == 1 {
                    b_seen += 1;
                }
                if ea[i] == 1 {
                    // all b-indices strictly below i are inversions
                    inversions += b_seen - u32::from(eb[i] == 1);
                }
            }
            let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
            Some((MonomialKey::Exponents(sum), sign))
        }
        AlgebraKind::Tensor { .. } => {
            let mut w = a.word().to_vec();
            w.extend_from_slice(b.word());
            Some((MonomialKey::Word(w), 1))
        }
    }
}

/// Exact product of two forms in the ambient algebra (exterior sign rule and
/// tensor non-commutativity respected).
pub fn form_mul(field: &PrimeField, a: &Form, b: &Form) -> Form {
    debug_assert_eq!(a.kind, b.kind);
    let degree = a.degree.checked_add(&b.degree).expect("mixed gradings");
    let mut out = Form::zero(a.kind, degree);
    for (ka, &va) in &a.coeffs {
        for (kb, &vb) in &b.coeffs {
            if let Some((key, sign)) = mul_monomials(a.kind, ka, kb) {
                let mut v = field.mul(va, vb);
                if sign < 0 {
                    v = field.neg(v);
                }
                out.insert_term(field, key, v);
            }
        }
    }
    out
}

pub fn form_pow(field: &PrimeField, base: &Form, exp: u32) -> Form {
    assert!(exp >= 1);
    let mut acc = base.clone();
    for _ in 1..exp {
        acc = form_mul(field, &acc, base);
    }
    acc
}

/// Declarative description of ideal generators. Each spec resolves to a
/// finite list of homogeneous forms for a given kind, field and seed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "spec")]
pub enum GeneratorSpec {
    /// One dense random form of the given degree.
    Generic { degree: Degree },
    /// g^k for a random g of the base degree.
    PowerOfGeneric { degree: u32, exponent: u32 },
    /// Product of random forms of the listed degrees.
    ProductOfGenerics { factors: Vec<u32> },
    /// l_1^{e_1} * ... * l_k^{e_k} for random linear forms l_i.
    ProductOfLinearPowers { exponents: Vec<u32> },
    /// l^d for one random linear form.
    PowerOfLinear { degree: u32 },
    /// x_1^d, ..., x_n^d (resolves to n forms).
    VariablePower { degree: u32 },
    /// (sum of an odd number of variables)^d over all 2^{n-1} odd subsets.
    SumOddVariables { degree: u32 },
    /// (x_1 +- x_2 +- x_3 +- x_4)^d, all 8 sign patterns; needs n = 4.
    SignedSumPower { degree: u32 },
    /// Random linear combination of the commutators [x_i, x_j], i < j.
    LieQuadratic,
    /// x_i x_j - x_j x_i (1-based variable indices).
    Commutator { i: u32, j: u32 },
    /// A fully specified form.
    Explicit { form: Form },
    /// All products of s generators drawn from the inner ideal's generators:
    /// the generators of I^s.
    IdealPower { exponent: u32, inner: Vec<GeneratorSpec> },
    /// The three-relation family with series (1-4z+3z^2-z^{q+3})^{-1}
    /// (q = None for the (1-4z+3z^2)^{-1} variant); needs the tensor algebra
    /// on four variables.
    FlFamily { q: Option<u32> },
}

const REDRAW_LIMIT: u32 = 32;

struct Realizer {
    kind: AlgebraKind,
    field: PrimeField,
    spec: FieldSpec,
    rng: ChaCha8Rng,
    out: Vec<Form>,
}

impl Realizer {
    fn n(&self) -> u32 {
        match self.kind {
            AlgebraKind::Commutative { n }
            | AlgebraKind::Exterior { n }
            | AlgebraKind::Tensor { n } => n,
            AlgebraKind::Bigraded { .. } => unreachable!("callers check the kind first"),
        }
    }

    fn random_form(&mut self, degree: Degree) -> Result<Form> {
        for _ in 0..REDRAW_LIMIT {
            let basis = monomial_basis(self.kind, degree);
            let mut form = Form::zero(self.kind, degree);
            for key in basis {
                let v = self.rng.gen_range(0..self.spec.prime());
                if v != 0 {
                    form.coeffs.insert(key, v);
                }
            }
            if !form.is_zero() {
                return Ok(form);
            }
        }
        Err(Error::DegenerateDraw { retries: REDRAW_LIMIT })
    }

    fn random_linear(&mut self) -> Result<Form> {
        self.random_form(Degree::Total(1))
    }

    fn require_kind(&self, ok: bool, spec: &GeneratorSpec) -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(Error::SpecKindMismatch(format!("{spec:?} in {}", self.kind)))
        }
    }

    fn nonzero(&self, form: Form) -> Result<Form> {
        if form.is_zero() {
            Err(Error::DegenerateDraw { retries: 1 })
        } else {
            Ok(form)
        }
    }

    /// Retry composite draws whose product collapsed to zero.
    fn composite<F: FnMut(&mut Self) -> Result<Form>>(&mut self, mut draw: F) -> Result<Form> {
        for _ in 0..REDRAW_LIMIT {
            match draw(self) {
                Ok(f) if !f.is_zero() => return Ok(f),
                Ok(_) => continue,
                Err(Error::DegenerateDraw { .. }) => continue,
                Err(e) => return Err(e),
            }
        }
        Err(Error::DegenerateDraw { retries: REDRAW_LIMIT })
    }

    fn variable(&self, i: usize) -> MonomialKey {
        match self.kind {
            AlgebraKind::Tensor { .. } => MonomialKey::Word(vec![i as u8]),
            _ => {
                let mut e = vec![0u16; self.kind.variable_count()];
                e[i] = 1;
                MonomialKey::Exponents(e)
            }
        }
    }

    fn realize(&mut self, spec: &GeneratorSpec) -> Result<()> {
        let comm = matches!(self.kind, AlgebraKind::Commutative { .. });
        let tensor = matches!(self.kind, AlgebraKind::Tensor { .. });
        let bigraded = self.kind.is_bigraded();
        match spec {
            GeneratorSpec::Generic { degree } => {
                match (degree, bigraded) {
                    (Degree::Bi(..), true) | (Degree::Total(_), false) => {}
                    _ => return Err(Error::SpecKindMismatch(format!("{spec:?} in {}", self.kind))),
                }
                if degree.total() == 0 {
                    return Err(Error::InvalidParameter("generators must have degree >= 1".into()));
                }
                let f = self.random_form(*degree)?;
                self.out.push(f);
            }
            GeneratorSpec::PowerOfGeneric { degree, exponent } => {
                self.require_kind(comm, spec)?;
                let field = self.field;
                let f = self.composite(|r| {
                    let g = r.random_form(Degree::Total(*degree))?;
                    Ok(form_pow(&field, &g, *exponent))
                })?;
                self.out.push(f);
            }
            GeneratorSpec::ProductOfGenerics { factors } => {
                self.require_kind(comm && !factors.is_empty(), spec)?;
                let field = self.field;
                let factors = factors.clone();
                let f = self.composite(|r| {
                    let mut acc: Option<Form> = None;
                    for &d in &factors {
                        let g = r.random_form(Degree::Total(d))?;
                        acc = Some(match acc {
                            None => g,
                            Some(a) => form_mul(&field, &a, &g),
                        });
                    }
                    Ok(acc.expect("nonempty factors"))
                })?;
                self.out.push(f);
            }
            GeneratorSpec::ProductOfLinearPowers { exponents } => {
                self.require_kind(comm && !exponents.is_empty(), spec)?;
                let field = self.field;
                let exponents = exponents.clone();
                let f = self.composite(|r| {
                    let mut acc: Option<Form> = None;
                    for &e in &exponents {
                        let l = r.random_linear()?;
                        let le = form_pow(&field, &l, e);
                        acc = Some(match acc {
                            None => le,
                            Some(a) => form_mul(&field, &a, &le),
                        });
                    }
                    Ok(acc.expect("nonempty exponents"))
                })?;
                self.out.push(f);
            }
            GeneratorSpec::PowerOfLinear { degree } => {
                self.require_kind(comm, spec)?;
                let field = self.field;
                let f = self.composite(|r| {
                    let l = r.random_linear()?;
                    Ok(form_pow(&field, &l, *degree))
                })?;
                self.out.push(f);
            }
            GeneratorSpec::VariablePower { degree } => {
                self.require_kind(comm, spec)?;
                let n = self.n() as usize;
                for i in 0..n {
                    let mut e = vec![0u16; n];
                    e[i] = *degree as u16;
                    self.out.push(Form::monomial(
                        self.kind,
                        MonomialKey::Exponents(e),
                        Degree::Total(*degree),
                    ));
                }
            }
            GeneratorSpec::SumOddVariables { degree } => {
                self.require_kind(comm, spec)?;
                let n = self.n() as usize;
                let field = self.field;
                for mask in 1u32..(1 << n) {
                    if mask.count_ones() % 2 != 1 {
                        continue;
                    }
                    let mut l = Form::zero(self.kind, Degree::Total(1));
                    for i in (0..n).filter(|i| mask >> i & 1 == 1) {
                        l.coeffs.insert(self.variable(i), 1);
                    }
                    self.out.push(form_pow(&field, &l, *degree));
                }
            }
            GeneratorSpec::SignedSumPower { degree } => {
                self.require_kind(comm && self.n() == 4, spec)?;
                let field = self.field;
                for mask in 0u32..8 {
                    let mut l = Form::zero(self.kind, Degree::Total(1));
                    l.coeffs.insert(self.variable(0), 1);
                    for i in 1..4usize {
                        let v = if mask >> (i - 1) & 1 == 1 { field.neg(1) } else { 1 };
                        l.coeffs.insert(self.variable(i), v);
                    }
                    self.out.push(form_pow(&field, &l, *degree));
                }
            }
            GeneratorSpec::LieQuadratic => {
                self.require_kind(tensor, spec)?;
                let n = self.n() as usize;
                let field = self.field;
                let f = self.composite(|r| {
                    let mut form = Form::zero(r.kind, Degree::Total(2));
                    for i in 0..n {
                        for j in (i + 1)..n {
                            let c = r.rng.gen_range(0..r.spec.prime());
                            if c == 0 {
                                continue;
                            }
                            form.insert_term(&field, MonomialKey::Word(vec![i as u8, j as u8]), c);
                            form.insert_term(
                                &field,
                                MonomialKey::Word(vec![j as u8, i as u8]),
                                field.neg(c),
                            );
                        }
                    }
                    Ok(form)
                })?;
                self.out.push(f);
            }
            GeneratorSpec::Commutator { i, j } => {
                self.require_kind(tensor, spec)?;
                let n = self.n();
                if *i < 1 || *j < 1 || *i > n || *j > n || i == j {
                    return Err(Error::InvalidParameter(format!("commutator indices ({i},{j})")));
                }
                let (a, b) = ((*i - 1) as u8, (*j - 1) as u8);
                let mut form = Form::zero(self.kind, Degree::Total(2));
                form.coeffs.insert(MonomialKey::Word(vec![a, b]), 1);
                form.coeffs.insert(MonomialKey::Word(vec![b, a]), self.field.neg(1));
                self.out.push(form);
            }
            GeneratorSpec::Explicit { form } => {
                if form.kind != self.kind {
                    return Err(Error::SpecKindMismatch(format!(
                        "explicit form for {} used in {}",
                        form.kind, self.kind
                    )));
                }
                self.out.push(form.clone());
            }
            GeneratorSpec::IdealPower { exponent, inner } => {
                self.require_kind(comm, spec)?;
                if *exponent < 1 {
                    return Err(Error::InvalidParameter("ideal power needs s >= 1".into()));
                }
                let inner_forms =
                    realize_generators(self.kind, inner, self.spec, self.rng.gen::<u64>())?;
                let r = inner_forms.len();
                let field = self.field;
                // All exponent patterns a_1 + ... + a_r = s.
                let mut pattern = vec![0u32; r];
                fn emit(
                    field: &PrimeField,
                    forms: &[Form],
                    pattern: &mut Vec<u32>,
                    pos: usize,
                    left: u32,
                    out: &mut Vec<Form>,
                ) {
                    if pos + 1 == pattern.len() {
                        pattern[pos] = left;
                        let mut acc: Option<Form> = None;
                        for (f, &e) in forms.iter().zip(pattern.iter()) {
                            if e == 0 {
                                continue;
                            }
                            let fe = form_pow(field, f, e);
                            acc = Some(match acc {
                                None => fe,
                                Some(a) => form_mul(field, &a, &fe),
                            });
                        }
                        out.push(acc.expect("s >= 1"));
                        return;
                    }
                    for e in (0..=left).rev() {
                        pattern[pos] = e;
                        emit(field, forms, pattern, pos + 1, left - e, out);
                    }
                    pattern[pos] = 0;
                }
                if r == 0 {
                    return Err(Error::InvalidParameter("ideal power of the zero ideal".into()));
                }
                let mut products = Vec::new();
                emit(&field, &inner_forms, &mut pattern, 0, *exponent, &mut products);
                for f in products {
                    self.out.push(self.nonzero(f)?);
                }
            }
            GeneratorSpec::FlFamily { q } => {
                self.require_kind(tensor && self.n() == 4, spec)?;
                let field = self.field;
                let neg1 = field.neg(1);
                // x1 x2 - x1 x3
                let mut f1 = Form::zero(self.kind, Degree::Total(2));
                f1.coeffs.insert(MonomialKey::Word(vec![0, 1]), 1);
                f1.coeffs.insert(MonomialKey::Word(vec![0, 2]), neg1);
                // x2 x3 - x3 x2 [+ x2^2 / q]; the x2^2 term is what bends
                // the series away from (1 - 4z + 3z^2)^{-1} in degree q + 3.
                let mut f2 = Form::zero(self.kind, Degree::Total(2));
                f2.coeffs.insert(MonomialKey::Word(vec![1, 2]), 1);
                f2.coeffs.insert(MonomialKey::Word(vec![2, 1]), neg1);
                if let Some(q) = q {
                    if *q == 0 || (*q as u64).is_multiple_of(field.p()) {
                        return Err(Error::InvalidParameter("fl-family needs q invertible".into()));
                    }
                    let inv_q = field.inv(*q as u64 % field.p());
                    f2.coeffs.insert(MonomialKey::Word(vec![1, 1]), inv_q);
                }
                // x3 x4
                let mut f3 = Form::zero(self.kind, Degree::Total(2));
                f3.coeffs.insert(MonomialKey::Word(vec![2, 3]), 1);
                self.out.push(f1);
                self.out.push(f2);
                self.out.push(f3);
            }
        }
        Ok(())
    }
}

/// Resolve specs into concrete homogeneous forms. Deterministic for a fixed
/// (kind, specs, field, seed).
pub fn realize_generators(
    kind: AlgebraKind,
    specs: &[GeneratorSpec],
    field: FieldSpec,
    seed: u64,
) -> Result<Vec<Form>> {
    let mut realizer = Realizer {
        kind,
        field: field.field(),
        spec: field,
        rng: ChaCha8Rng::seed_from_u64(seed),
        out: Vec::new(),
    };
    for spec in specs {
        realizer.realize(spec)?;
    }
    Ok(realizer.out)
}

/// Total degrees of realized forms, for the single-graded families.
pub fn form_degrees(forms: &[Form]) -> Vec<u32> {
    forms.iter().map(|f| f.degree.total()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::DegreeSequence;

    fn field() -> FieldSpec {
        FieldSpec::new(32003).unwrap()
    }

    #[test]
    fn generic_quadric_in_two_vars_has_three_coefficients() {
        let forms = realize_generators(
            AlgebraKind::Commutative { n: 2 },
            &[GeneratorSpec::Generic { degree: Degree::Total(2) }],
            field(),
            7,
        )
        .unwrap();
        assert_eq!(forms.len(), 1);
        assert!(forms[0].coeffs.len() <= 3);
        assert!(!forms[0].is_zero());
    }

    #[test]
    fn realization_is_deterministic() {
        let specs = [
            GeneratorSpec::Generic { degree: Degree::Total(3) },
            GeneratorSpec::PowerOfLinear { degree: 4 },
        ];
        let a = realize_generators(AlgebraKind::Commutative { n: 3 }, &specs, field(), 99).unwrap();
        let b = realize_generators(AlgebraKind::Commutative { n: 3 }, &specs, field(), 99).unwrap();
        assert_eq!(a, b);
        let c = realize_generators(AlgebraKind::Commutative { n: 3 }, &specs, field(), 100).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn commutator_is_the_difference_of_two_words() {
        let forms = realize_generators(
            AlgebraKind::Tensor { n: 3 },
            &[GeneratorSpec::Commutator { i: 1, j: 2 }],
            field(),
            0,
        )
        .unwrap();
        let f = &forms[0];
        assert_eq!(f.coeffs.len(), 2);
        assert_eq!(f.coeffs.get(&MonomialKey::Word(vec![0, 1])), Some(&1));
        assert_eq!(f.coeffs.get(&MonomialKey::Word(vec![1, 0])), Some(&32002));
    }

    #[test]
    fn ideal_power_generator_count() {
        // I = (5 generic quadrics), I^2 has C(6,4) = 15 quartic generators.
        let inner: Vec<GeneratorSpec> = (0..5)
            .map(|_| GeneratorSpec::Generic { degree: Degree::Total(2) })
            .collect();
        let forms = realize_generators(
            AlgebraKind::Commutative { n: 4 },
            &[GeneratorSpec::IdealPower { exponent: 2, inner }],
            field(),
            5,
        )
        .unwrap();
        assert_eq!(forms.len(), 15);
        assert!(forms.iter().all(|f| f.degree == Degree::Total(4)));
    }

    #[test]
    fn exterior_sign_rule() {
        let kind = AlgebraKind::Exterior { n: 3 };
        let x1 = MonomialKey::Exponents(vec![1, 0, 0]);
        let x2 = MonomialKey::Exponents(vec![0, 1, 0]);
        let x12 = MonomialKey::Exponents(vec![1, 1, 0]);
        // x1 * x2 = +x1x2, x2 * x1 = -x1x2, x1 * x1 = 0.
        assert_eq!(mul_monomials(kind, &x1, &x2), Some((x12.clone(), 1)));
        assert_eq!(mul_monomials(kind, &x2, &x1), Some((x12, -1)));
        assert_eq!(mul_monomials(kind, &x1, &x1), None);
        // (x1x2) * x3 vs x3 * (x1x2): moving x3 across two factors is even.
        let x3 = MonomialKey::Exponents(vec![0, 0, 1]);
        let x12 = MonomialKey::Exponents(vec![1, 1, 0]);
        let all = MonomialKey::Exponents(vec![1, 1, 1]);
        assert_eq!(mul_monomials(kind, &x12, &x3), Some((all.clone(), 1)));
        assert_eq!(mul_monomials(kind, &x3, &x12), Some((all, 1)));
    }

    #[test]
    fn odd_sums_count() {
        let forms = realize_generators(
            AlgebraKind::Commutative { n: 4 },
            &[GeneratorSpec::SumOddVariables { degree: 2 }],
            field(),
            1,
        )
        .unwrap();
        assert_eq!(forms.len(), 8); // 2^{4-1}
    }

    #[test]
    fn spec_kind_mismatch_is_an_error() {
        let err = realize_generators(
            AlgebraKind::Commutative { n: 3 },
            &[GeneratorSpec::Commutator { i: 1, j: 2 }],
            field(),
            0,
        );
        assert!(matches!(err, Err(Error::SpecKindMismatch(_))));
        let err = realize_generators(
            AlgebraKind::Tensor { n: 3 },
            &[GeneratorSpec::PowerOfLinear { degree: 2 }],
            field(),
            0,
        );
        assert!(matches!(err, Err(Error::SpecKindMismatch(_))));
    }

    #[test]
    fn degree_sequence_helper() {
        let d = DegreeSequence::new(vec![2, 5, 3]).unwrap();
        assert_eq!(d.as_slice(), &[5, 3, 2]);
    }
}
