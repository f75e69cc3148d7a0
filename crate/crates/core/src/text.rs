//! Text forms of monomials and ideals: `x2^2*x1`, `(x2^3, x2^2*x1, x2*x1^4)`.
//!
//! Display names map to variable indices, index 0 being the smallest
//! variable. The default names are `x0, …, xn`.

use crate::error::{Error, Result};
use crate::monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableNames {
    names: Vec<String>,
}

impl VariableNames {
    pub fn default_for(arity: usize) -> Self {
        VariableNames { names: (0..arity).map(|i| format!("x{i}")).collect() }
    }

    /// Names listed smallest variable first.
    pub fn new(names: Vec<String>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::EmptyRing);
        }
        for (i, name) in names.iter().enumerate() {
            let valid = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid || names[..i].contains(name) {
                return Err(Error::Parse { offset: 0, message: format!("bad variable name {name:?}") });
            }
        }
        Ok(VariableNames { names })
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Largest variable first, e.g. `x2^2*x1`; the constant monomial is `1`.
    pub fn monomial(&self, m: &Monomial) -> String {
        let factors: Vec<String> = (0..m.arity())
            .rev()
            .filter(|&i| m.exponent(i) > 0)
            .map(|i| match m.exponent(i) {
                1 => self.names[i].clone(),
                e => format!("{}^{e}", self.names[i]),
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }

    pub fn ideal(&self, gens: &[Monomial]) -> String {
        if gens.is_empty() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = gens.iter().map(|g| self.monomial(g)).collect();
        format!("({})", parts.join(", "))
    }

    pub fn parse_monomial(&self, src: &str) -> Result<Monomial> {
        let mut exps = vec![0u32; self.names.len()];
        let trimmed = src.trim();
        if trimmed == "1" {
            return Monomial::new(exps);
        }
        for factor in trimmed.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let e: u32 = e.trim().parse().map_err(|_| Error::Parse {
                        offset: 0,
                        message: format!("bad exponent in {factor:?}"),
                    })?;
                    (n.trim(), e)
                }
                None => (factor, 1),
            };
            let index = self.names.iter().position(|n| n == name).ok_or_else(|| Error::Parse {
                offset: 0,
                message: format!("unknown variable {name:?} in {src:?}"),
            })?;
            exps[index] += exp;
        }
        Monomial::new(exps)
    }

    /// Comma-separated generators, optionally wrapped in parentheses.
    pub fn parse_generators(&self, src: &str) -> Result<Vec<Monomial>> {
        let mut body = src.trim();
        if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
            body = inner.trim();
        }
        if body.is_empty() || body == "0" {
            return Ok(Vec::new());
        }
        body.split(',').map(|g| self.parse_monomial(g)).collect()
    }
}
