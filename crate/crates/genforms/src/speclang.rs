//! Text mini-language for generator specs, used by the CLI and grid files.
//!
//! Terms are comma-separated (commas inside parentheses bind to the inner
//! list). Each term is `kind:params`, with an optional `xR` repeat suffix:
//!
//! ```text
//! generic:2x4            four generic quadrics
//! generic:(2,1)x3        three generic forms of bidegree (2,1)
//! genpow:3^2x5           five squares of generic cubics
//! prodgen:2+1            a product of a generic quadric and a linear form
//! prodlin:2+1+1          l1^2 * l2 * l3 for generic linear forms
//! linpow:4x7             seven 4th powers of generic linear forms
//! varpow:2               x_1^2, ..., x_n^2
//! oddsums:2              squares of all odd-subset sums
//! signedsums:3           the eight (x1 +- x2 +- x3 +- x4)^3
//! liequad:3              three generic quadratic Lie elements
//! commutator:1-2         x1 x2 - x2 x1
//! idealpow:s=2(generic:2x5)   the 15 generators of I^2
//! fl-family:q=2          the three-relation family, q = 2
//! fl-family:q=inf        its (1-4z+3z^2)^{-1} variant
//! ```

use crate::error::{Error, Result};
use crate::forms::GeneratorSpec;
use crate::monomial::Degree;

/// Parse a comma-separated generator list.
pub fn parse_generators(input: &str) -> Result<Vec<GeneratorSpec>> {
    let mut out = Vec::new();
    for term in split_top_level(input) {
        let term = term.trim();
        if term.is_empty() {
            continue;
        }
        parse_term(term, &mut out)?;
    }
    if out.is_empty() {
        return Err(Error::Parse("empty generator list".into()));
    }
    Ok(out)
}

fn split_top_level(input: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in input.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&input[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&input[start..]);
    parts
}

fn bad(term: &str) -> Error {
    Error::Parse(format!("bad generator term '{term}'"))
}

/// Split a trailing `xR` repeat count off a params string, careful not to
/// eat the x inside bidegree parens.
fn split_repeat(params: &str) -> (&str, usize) {
    if let Some(pos) = params.rfind('x') {
        let (head, tail) = params.split_at(pos);
        if let Ok(count) = tail[1..].parse::<usize>() {
            if !head.is_empty() {
                return (head, count);
            }
        }
    }
    (params, 1)
}

fn parse_degree(text: &str) -> Result<Degree> {
    let text = text.trim();
    if let Some(inner) = text.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        let (a, b) = inner.split_once(',').ok_or_else(|| bad(text))?;
        return Ok(Degree::Bi(
            a.trim().parse().map_err(|_| bad(text))?,
            b.trim().parse().map_err(|_| bad(text))?,
        ));
    }
    Ok(Degree::Total(text.parse().map_err(|_| bad(text))?))
}

fn parse_plus_list(text: &str) -> Result<Vec<u32>> {
    text.split('+')
        .map(|p| p.trim().parse::<u32>().map_err(|_| bad(text)))
        .collect()
}

fn parse_term(term: &str, out: &mut Vec<GeneratorSpec>) -> Result<()> {
    let (kind, params) = match term.split_once(':') {
        Some((k, p)) => (k.trim(), p.trim()),
        None => (term, ""),
    };
    match kind {
        "generic" => {
            let (deg, count) = split_repeat(params);
            let degree = parse_degree(deg)?;
            for _ in 0..count {
                out.push(GeneratorSpec::Generic { degree });
            }
        }
        "genpow" => {
            let (head, count) = split_repeat(params);
            let (d, k) = head.split_once('^').ok_or_else(|| bad(term))?;
            let spec = GeneratorSpec::PowerOfGeneric {
                degree: d.trim().parse().map_err(|_| bad(term))?,
                exponent: k.trim().parse().map_err(|_| bad(term))?,
            };
            for _ in 0..count {
                out.push(spec.clone());
            }
        }
        "prodgen" => {
            let (head, count) = split_repeat(params);
            let factors = parse_plus_list(head)?;
            for _ in 0..count {
                out.push(GeneratorSpec::ProductOfGenerics { factors: factors.clone() });
            }
        }
        "prodlin" => {
            let (head, count) = split_repeat(params);
            let exponents = parse_plus_list(head)?;
            for _ in 0..count {
                out.push(GeneratorSpec::ProductOfLinearPowers { exponents: exponents.clone() });
            }
        }
        "linpow" => {
            let (head, count) = split_repeat(params);
            let degree = head.trim().parse().map_err(|_| bad(term))?;
            for _ in 0..count {
                out.push(GeneratorSpec::PowerOfLinear { degree });
            }
        }
        "varpow" => {
            out.push(GeneratorSpec::VariablePower {
                degree: params.parse().map_err(|_| bad(term))?,
            });
        }
        "oddsums" => {
            out.push(GeneratorSpec::SumOddVariables {
                degree: params.parse().map_err(|_| bad(term))?,
            });
        }
        "signedsums" => {
            out.push(GeneratorSpec::SignedSumPower {
                degree: params.parse().map_err(|_| bad(term))?,
            });
        }
        "liequad" => {
            let count: usize =
                if params.is_empty() { 1 } else { params.parse().map_err(|_| bad(term))? };
            for _ in 0..count {
                out.push(GeneratorSpec::LieQuadratic);
            }
        }
        "commutator" => {
            let (i, j) = params.split_once('-').ok_or_else(|| bad(term))?;
            out.push(GeneratorSpec::Commutator {
                i: i.trim().parse().map_err(|_| bad(term))?,
                j: j.trim().parse().map_err(|_| bad(term))?,
            });
        }
        "idealpow" => {
            // s=2(generic:2x5)
            let rest = params.strip_prefix("s=").ok_or_else(|| bad(term))?;
            let open = rest.find('(').ok_or_else(|| bad(term))?;
            let exponent: u32 = rest[..open].trim().parse().map_err(|_| bad(term))?;
            let inner_text = rest[open..]
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| bad(term))?;
            let inner = parse_generators(inner_text)?;
            out.push(GeneratorSpec::IdealPower { exponent, inner });
        }
        "fl-family" => {
            let q_text = params.strip_prefix("q=").ok_or_else(|| bad(term))?;
            let q = match q_text {
                "inf" | "infinity" => None,
                v => Some(v.parse().map_err(|_| bad(term))?),
            };
            out.push(GeneratorSpec::FlFamily { q });
        }
        _ => return Err(bad(term)),
    }
    Ok(())
}
