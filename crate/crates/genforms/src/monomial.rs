//! Graded monomial bases for the four ambient algebra families, with the
//! canonical orders the engine pivots on.

use serde::{Deserialize, Serialize};

use crate::bigraded::binomial;
use num_traits::ToPrimitive;

/// Ambient algebra family. For `Bigraded { m, n }` the ring is the
/// coordinate ring of P^m x P^n, i.e. `m + 1` x-variables of degree (1,0)
/// and `n + 1` y-variables of degree (0,1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgebraKind {
    Commutative { n: u32 },
    Exterior { n: u32 },
    Tensor { n: u32 },
    Bigraded { m: u32, n: u32 },
}

impl AlgebraKind {
    pub fn is_bigraded(&self) -> bool {
        matches!(self, AlgebraKind::Bigraded { .. })
    }

    /// Number of generators of the ambient algebra.
    pub fn variable_count(&self) -> usize {
        match *self {
            AlgebraKind::Commutative { n } | AlgebraKind::Exterior { n } | AlgebraKind::Tensor { n } => {
                n as usize
            }
            AlgebraKind::Bigraded { m, n } => (m + 1 + n + 1) as usize,
        }
    }
}

impl std::fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            AlgebraKind::Commutative { n } => write!(f, "commutative(n={n})"),
            AlgebraKind::Exterior { n } => write!(f, "exterior(n={n})"),
            AlgebraKind::Tensor { n } => write!(f, "tensor(n={n})"),
            AlgebraKind::Bigraded { m, n } => write!(f, "bigraded(m={m},n={n})"),
        }
    }
}

/// Homogeneous degree: total for the three single-graded families, a pair
/// for the bigraded one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Degree {
    Total(u32),
    Bi(u32, u32),
}

impl Degree {
    pub fn total(&self) -> u32 {
        match *self {
            Degree::Total(t) => t,
            Degree::Bi(d, e) => d + e,
        }
    }

    pub fn as_bi(&self) -> Option<(u32, u32)> {
        match *self {
            Degree::Bi(d, e) => Some((d, e)),
            Degree::Total(_) => None,
        }
    }

    pub fn checked_add(&self, other: &Degree) -> Option<Degree> {
        match (*self, *other) {
            (Degree::Total(a), Degree::Total(b)) => Some(Degree::Total(a + b)),
            (Degree::Bi(a, b), Degree::Bi(c, d)) => Some(Degree::Bi(a + c, b + d)),
            _ => None,
        }
    }
}

impl std::fmt::Display for Degree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Degree::Total(t) => write!(f, "{t}"),
            Degree::Bi(d, e) => write!(f, "({d},{e})"),
        }
    }
}

/// Basis element of a graded piece. Exponent vectors serve the commutative,
/// exterior (entries in {0,1}) and bigraded (x block then y block) families;
/// index words serve the tensor algebra.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum MonomialKey {
    Exponents(Vec<u16>),
    Word(Vec<u8>),
}

impl MonomialKey {
    pub fn exponents(&self) -> &[u16] {
        match self {
            MonomialKey::Exponents(e) => e,
            MonomialKey::Word(_) => panic!("word monomial has no exponent vector"),
        }
    }

    pub fn word(&self) -> &[u8] {
        match self {
            MonomialKey::Word(w) => w,
            MonomialKey::Exponents(_) => panic!("exponent monomial is not a word"),
        }
    }
}

/// Pinned degrevlex: m > m' iff deg m > deg m', or degrees are equal and the
/// last nonzero entry of exponent(m) - exponent(m') is negative.
pub fn degrevlex_cmp(a: &[u16], b: &[u16]) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    for i in (0..a.len().max(b.len())).rev() {
        let ea = a.get(i).copied().unwrap_or(0) as i32;
        let eb = b.get(i).copied().unwrap_or(0) as i32;
        match (ea - eb).cmp(&0) {
            Ordering::Equal => {}
            // Last nonzero of a - b negative means a is larger.
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    std::cmp::Ordering::Equal
}

pub(crate) fn exponent_vectors(n: usize, degree: u32) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut cur = vec![0u16; n];
    fn rec(out: &mut Vec<Vec<u16>>, cur: &mut Vec<u16>, pos: usize, left: u32) {
        if pos + 1 == cur.len() {
            cur[pos] = left as u16;
            out.push(cur.clone());
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e as u16;
            rec(out, cur, pos + 1, left - e);
        }
        cur[pos] = 0;
    }
    if n == 0 {
        if degree == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(&mut out, &mut cur, 0, degree);
    out
}

fn zero_one_vectors(n: usize, weight: u32) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut cur = vec![0u16; n];
    fn rec(out: &mut Vec<Vec<u16>>, cur: &mut Vec<u16>, pos: usize, left: u32) {
        let remaining = cur.len() - pos;
        if (remaining as u32) < left {
            return;
        }
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        // Taking the variable first keeps vectors in lex-descending order.
        cur[pos] = 1;
        rec(out, cur, pos + 1, left - 1);
        cur[pos] = 0;
        rec(out, cur, pos + 1, left);
    }
    rec(&mut out, &mut cur, 0, weight);
    out
}

/// All degree-`degree` basis monomials of the ambient algebra, in the
/// canonical order: degrevlex largest-first for commutative and exterior,
/// lexicographic words for tensor, and pairwise lex (x block descending,
/// then y block descending) for bigraded.
pub fn monomial_basis(kind: AlgebraKind, degree: Degree) -> Vec<MonomialKey> {
    match (kind, degree) {
        (AlgebraKind::Commutative { n }, Degree::Total(t)) => {
            let mut v = exponent_vectors(n as usize, t);
            v.sort_by(|a, b| degrevlex_cmp(b, a));
            v.into_iter().map(MonomialKey::Exponents).collect()
        }
        (AlgebraKind::Exterior { n }, Degree::Total(t)) => {
            let mut v = zero_one_vectors(n as usize, t);
            v.sort_by(|a, b| degrevlex_cmp(b, a));
            v.into_iter().map(MonomialKey::Exponents).collect()
        }
        (AlgebraKind::Tensor { n }, Degree::Total(t)) => {
            let n = n as usize;
            let mut out = Vec::new();
            let mut word = vec![0u8; t as usize];
            loop {
                out.push(MonomialKey::Word(word.clone()));
                // Increment as a base-n counter, least significant last.
                let mut i = t as usize;
                loop {
                    if i == 0 {
                        return out;
                    }
                    i -= 1;
                    if (word[i] as usize) + 1 < n {
                        word[i] += 1;
                        for w in word.iter_mut().skip(i + 1) {
                            *w = 0;
                        }
                        break;
                    }
                }
            }
        }
        (AlgebraKind::Bigraded { m, n }, Degree::Bi(d, e)) => {
            let xs = exponent_vectors((m + 1) as usize, d);
            let ys = exponent_vectors((n + 1) as usize, e);
            let mut out = Vec::with_capacity(xs.len() * ys.len());
            for x in &xs {
                for y in &ys {
                    let mut v = x.clone();
                    v.extend_from_slice(y);
                    out.push(MonomialKey::Exponents(v));
                }
            }
            out
        }
        (kind, degree) => panic!("degree {degree} does not fit algebra {kind}"),
    }
}

/// Dimension of the ambient graded piece.
pub fn ambient_dim(kind: AlgebraKind, degree: Degree) -> usize {
    match (kind, degree) {
        (AlgebraKind::Commutative { n }, Degree::Total(t)) => {
            binomial((n - 1 + t) as u64, t as u64).to_usize().expect("ambient dimension overflow")
        }
        (AlgebraKind::Exterior { n }, Degree::Total(t)) => {
            binomial(n as u64, t as u64).to_usize().expect("ambient dimension overflow")
        }
        (AlgebraKind::Tensor { n }, Degree::Total(t)) => (n as usize)
            .checked_pow(t)
            .expect("ambient dimension overflow"),
        (AlgebraKind::Bigraded { m, n }, Degree::Bi(d, e)) => {
            let a = binomial((m + d) as u64, d as u64);
            let b = binomial((n + e) as u64, e as u64);
            (a * b).to_usize().expect("ambient dimension overflow")
        }
        (kind, degree) => panic!("degree {degree} does not fit algebra {kind}"),
    }
}

/// Render a monomial with variables named x1..xn (or the bigraded x/y split).
pub fn render_monomial(kind: AlgebraKind, key: &MonomialKey) -> String {
    match (kind, key) {
        (AlgebraKind::Bigraded { m, .. }, MonomialKey::Exponents(exps)) => {
            let mut parts = Vec::new();
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = if i <= m as usize {
                    format!("x{i}")
                } else {
                    format!("y{}", i - m as usize - 1)
                };
                parts.push(if e == 1 { name } else { format!("{name}^{e}") });
            }
            if parts.is_empty() { "1".into() } else { parts.join("*") }
        }
        (_, MonomialKey::Exponents(exps)) => {
            let mut parts = Vec::new();
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = format!("x{}", i + 1);
                parts.push(if e == 1 { name } else { format!("{name}^{e}") });
            }
            if parts.is_empty() { "1".into() } else { parts.join("*") }
        }
        (_, MonomialKey::Word(w)) => {
            if w.is_empty() {
                "1".into()
            } else {
                w.iter().map(|&l| format!("x{}", l + 1)).collect::<Vec<_>>().join("")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutative_basis_in_degrevlex_order() {
        let b = monomial_basis(AlgebraKind::Commutative { n: 2 }, Degree::Total(2));
        let exps: Vec<&[u16]> = b.iter().map(|k| k.exponents()).collect();
        assert_eq!(exps, vec![&[2, 0][..], &[1, 1], &[0, 2]]);
    }

    #[test]
    fn degrevlex_three_vars() {
        // Degree 2 in 3 variables, largest first:
        // x^2 > xy > y^2 > xz > yz > z^2.
        let b = monomial_basis(AlgebraKind::Commutative { n: 3 }, Degree::Total(2));
        let exps: Vec<&[u16]> = b.iter().map(|k| k.exponents()).collect();
        assert_eq!(
            exps,
            vec![&[2, 0, 0][..], &[1, 1, 0], &[0, 2, 0], &[1, 0, 1], &[0, 1, 1], &[0, 0, 2]]
        );
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(monomial_basis(AlgebraKind::Tensor { n: 2 }, Degree::Total(3)).len(), 8);
        assert_eq!(monomial_basis(AlgebraKind::Exterior { n: 4 }, Degree::Total(2)).len(), 6);
        assert_eq!(
            monomial_basis(AlgebraKind::Bigraded { m: 1, n: 2 }, Degree::Bi(2, 1)).len(),
            3 * 3
        );
        for (kind, deg) in [
            (AlgebraKind::Commutative { n: 4 }, Degree::Total(5)),
            (AlgebraKind::Exterior { n: 7 }, Degree::Total(3)),
            (AlgebraKind::Tensor { n: 3 }, Degree::Total(4)),
        ] {
            assert_eq!(monomial_basis(kind, deg).len(), ambient_dim(kind, deg));
        }
        assert_eq!(
            monomial_basis(AlgebraKind::Bigraded { m: 2, n: 1 }, Degree::Bi(1, 2)).len(),
            ambient_dim(AlgebraKind::Bigraded { m: 2, n: 1 }, Degree::Bi(1, 2))
        );
    }

    #[test]
    fn tensor_words_are_lex_sorted() {
        let b = monomial_basis(AlgebraKind::Tensor { n: 2 }, Degree::Total(2));
        let words: Vec<&[u8]> = b.iter().map(|k| k.word()).collect();
        assert_eq!(words, vec![&[0, 0][..], &[0, 1], &[1, 0], &[1, 1]]);
    }

    #[test]
    fn degree_zero_basis_is_the_unit() {
        assert_eq!(monomial_basis(AlgebraKind::Commutative { n: 3 }, Degree::Total(0)).len(), 1);
        assert_eq!(monomial_basis(AlgebraKind::Tensor { n: 3 }, Degree::Total(0)).len(), 1);
        assert_eq!(
            monomial_basis(AlgebraKind::Bigraded { m: 1, n: 1 }, Degree::Bi(0, 0)).len(),
            1
        );
    }
}
