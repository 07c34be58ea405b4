//! The expression mini-language: factors `x (α)`, `atom (α)`, `key (γ)`,
//! `pi:WORD (α)` and `theta:WORD (α)` joined by `*`. Text without any such
//! factor is read as a plain polynomial, e.g. `x1^2*x2 - 3*x3`.

use anyhow::{anyhow, bail, Context, Result};
use demazure::basis;
use demazure::poly::{OperatorKind, Polynomial};
use demazure::shape;

/// An evaluated expression and the variable count it naturally lives in.
pub struct Evaluated {
    pub poly: Polynomial,
    pub nvars: usize,
}

const HEADS: [&str; 5] = ["x", "atom", "key", "pi:", "theta:"];

fn split_head(factor: &str) -> Option<(&str, &str)> {
    let open = factor.find('(')?;
    let head = factor[..open].trim();
    let is_head = head == "x"
        || head == "atom"
        || head == "key"
        || head.strip_prefix("pi:").is_some_and(|w| !w.is_empty())
        || head.strip_prefix("theta:").is_some_and(|w| !w.is_empty());
    is_head.then(|| (head, factor[open..].trim()))
}

fn parse_word(w: &str) -> Result<Vec<usize>> {
    let letters: Vec<&str> =
        if w.contains(',') { w.split(',').collect() } else { w.split("").filter(|s| !s.is_empty()).collect() };
    letters
        .into_iter()
        .map(|s| match s.trim().parse::<usize>() {
            Ok(i) if i >= 1 => Ok(i),
            _ => Err(anyhow!("bad operator letter {s:?} in word {w:?}")),
        })
        .collect()
}

fn eval_factor(head: &str, arg: &str) -> Result<(Polynomial, usize)> {
    let alpha = shape::parse_comp(arg).with_context(|| format!("bad composition {arg:?}"))?;
    let n = alpha.len();
    let poly = match head {
        "x" => Polynomial::monomial(&alpha),
        "atom" => (*basis::atom(&alpha)).clone(),
        "key" => (*basis::key(&alpha)).clone(),
        _ => {
            let (kind, word) = if let Some(w) = head.strip_prefix("pi:") {
                (OperatorKind::Pi, w)
            } else {
                (OperatorKind::Theta, head.strip_prefix("theta:").unwrap())
            };
            let word = parse_word(word)?;
            let need = word.iter().map(|i| i + 1).max().unwrap_or(0);
            Polynomial::monomial(&alpha).apply_word(kind, &word).with_nvars(n.max(need))
        }
    };
    let nvars = poly.nvars().max(n);
    Ok((poly, nvars))
}

/// Split on `*` outside parentheses.
fn factors(text: &str) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    bail!("unbalanced parentheses in {text:?}");
                }
            }
            '*' if depth == 0 => {
                out.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        bail!("unbalanced parentheses in {text:?}");
    }
    out.push(text[start..].trim());
    Ok(out)
}

pub fn evaluate(text: &str) -> Result<Evaluated> {
    let text = text.trim();
    if text.is_empty() {
        bail!("empty expression");
    }
    let parts = factors(text)?;
    if !parts.iter().any(|f| split_head(f).is_some()) {
        let poly: Polynomial = text.parse().with_context(|| format!("cannot read {text:?} as a polynomial"))?;
        let nvars = poly.used_vars().max(1);
        return Ok(Evaluated { poly: poly.with_nvars(nvars), nvars });
    }
    let mut acc = Polynomial::one(0);
    let mut nvars = 0;
    for f in parts {
        let (p, n) = match split_head(f) {
            Some((head, arg)) => eval_factor(head, arg)?,
            None => {
                if f.contains('+') || f.contains('-') {
                    bail!("factor {f:?} must be a single term; known heads are {HEADS:?}");
                }
                let p: Polynomial = f.parse().with_context(|| format!("cannot read factor {f:?}"))?;
                let n = p.used_vars();
                (p, n)
            }
        };
        nvars = nvars.max(n);
        acc = acc.mul(&p);
    }
    let nvars = nvars.max(acc.used_vars()).max(1);
    Ok(Evaluated { poly: acc.with_nvars(nvars), nvars })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(s: &str) -> Polynomial {
        evaluate(s).unwrap().poly
    }

    #[test]
    fn factors_and_heads() {
        assert_eq!(eval("x (2,1,0)"), Polynomial::monomial(&[2, 1, 0]));
        assert_eq!(evaluate("x (2,1,0)").unwrap().nvars, 3);
        assert_eq!(eval("key (3,0,1)"), "x1^3*x2 + x1^3*x3".parse::<Polynomial>().unwrap().with_nvars(3));
        assert_eq!(eval("atom (0,1)"), "x2".parse().unwrap());
        assert_eq!(eval("pi:2 (3,1,0)"), eval("key (3,0,1)"));
        assert_eq!(eval("pi:1,2,1 (4,1,0)"), eval("pi:121 (4,1,0)"));
        assert_eq!(eval("theta:21 (3,1)").nvars(), 3);
        let prod = eval("key (0,2) * key (1,0,2)");
        assert_eq!(prod, basis::key(&[0, 2]).mul(&basis::key(&[1, 0, 2])));
        assert_eq!(eval("x2 * atom (1,0)"), "x1*x2".parse().unwrap());
    }

    #[test]
    fn plain_polynomials() {
        assert_eq!(eval("x2"), "x2".parse().unwrap());
        assert_eq!(evaluate("x2").unwrap().nvars, 2);
        assert_eq!(eval("2*x1 + x2"), "2*x1 + x2".parse().unwrap());
        assert_eq!(evaluate("7").unwrap().nvars, 1);
    }

    #[test]
    fn errors() {
        assert!(evaluate("").is_err());
        assert!(evaluate("key (1,0").is_err());
        assert!(evaluate("pi:1a (1,0)").is_err());
        assert!(evaluate("key (1,0) * x1 + x2").is_err());
        assert!(evaluate("key (a,b)").is_err());
    }
}
