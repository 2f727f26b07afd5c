//! Text layout of coefficient tables, plain and regrouped by summation by parts.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_with::{serde_as, DisplayFromStr};

use super::CoeffTable;

fn monomial(j: usize, k: usize) -> String {
    if j == k {
        format!("γ{j}^2")
    } else {
        format!("γ{j}γ{k}")
    }
}

/// Appends `± |c| body` to `out`, dropping a unit coefficient.
fn push_term(out: &mut String, c: &BigInt, body: &str) {
    let first = out.is_empty();
    match (first, c.is_negative()) {
        (true, true) => out.push('-'),
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
        (true, false) => {}
    }
    let mag = c.abs();
    if mag.is_one() && !body.is_empty() {
        out.push_str(body);
    } else if body.is_empty() {
        out.push_str(&mag.to_string());
    } else {
        out.push_str(&format!("{mag} {body}"));
    }
}

/// One term `A_t (γ_jγ_k - γ_j'γ_k')` of a regrouped diagonal; `minus` is
/// `None` for the last entry.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegroupTerm {
    #[serde_as(as = "DisplayFromStr")]
    pub weight: BigInt,
    pub lead: (usize, usize),
    pub minus: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegroupedDiagonal {
    pub sum: usize,
    pub terms: Vec<RegroupTerm>,
}

impl CoeffTable {
    /// Lists `c γ_jγ_k` by index sum, then by spread. Zero coefficients are
    /// printed only when `with_zeros` is set, up to the last nonzero row.
    pub fn render(&self, with_zeros: bool) -> String {
        let max_sum = 2 * (self.gamma_len() - 1);
        let last = (0..=max_sum)
            .rev()
            .find(|&s| self.anti_diagonal(s).iter().any(|(_, _, c)| !c.is_zero()))
            .unwrap_or(0);
        let mut out = String::new();
        for s in 0..=last {
            for (j, k, c) in self.anti_diagonal(s) {
                if c.is_zero() {
                    if with_zeros {
                        let sep = if out.is_empty() { "" } else { " + " };
                        out.push_str(&format!("{sep}0 {}", monomial(j, k)));
                    }
                    continue;
                }
                push_term(&mut out, &c, &monomial(j, k));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Rewrites every anti-diagonal `Σ_t a_t b_t`, `b_t = γ_{j-t}γ_{k+t}`, as
    /// `Σ_t A_t (b_t - b_{t+1})` with prefix sums `A_t`. Zero weights are
    /// dropped.
    pub fn regrouped(&self) -> Vec<RegroupedDiagonal> {
        let max_sum = 2 * (self.gamma_len() - 1);
        (0..=max_sum)
            .filter_map(|s| {
                let row = self.anti_diagonal(s);
                let mut acc = BigInt::zero();
                let mut terms = Vec::new();
                for (t, (j, k, c)) in row.iter().enumerate() {
                    acc += c;
                    if !acc.is_zero() {
                        terms.push(RegroupTerm {
                            weight: acc.clone(),
                            lead: (*j, *k),
                            minus: row.get(t + 1).map(|(a, b, _)| (*a, *b)),
                        });
                    }
                }
                (!terms.is_empty()).then_some(RegroupedDiagonal { sum: s, terms })
            })
            .collect()
    }

    /// Bracketed layout of [`CoeffTable::regrouped`]; diagonals with more than
    /// one monomial are wrapped in `[...]`.
    pub fn render_regrouped(&self) -> String {
        let mut parts = Vec::new();
        for diag in self.regrouped() {
            let single = diag.terms.len() == 1 && diag.terms[0].minus.is_none();
            let mut inner = String::new();
            for term in &diag.terms {
                let body = match term.minus {
                    Some((a, b)) => {
                        let pair = format!("{} - {}", monomial(term.lead.0, term.lead.1), monomial(a, b));
                        if term.weight.is_one() {
                            pair
                        } else {
                            format!("({pair})")
                        }
                    }
                    None => monomial(term.lead.0, term.lead.1),
                };
                push_term(&mut inner, &term.weight, &body);
            }
            if single {
                parts.push(inner);
            } else {
                parts.push(format!("[{inner}]"));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}
