use std::cmp::Reverse;
use std::fmt;

use num_traits::{One, Signed};

use super::monomial::Monomial;
use super::poly::SparsePoly;
use super::rational::{content, Rational};
use super::varset::Var;

impl SparsePoly {
    /// Terms in output order: weighted degree descending, then exponent
    /// vector lexicographically descending.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let w = self.varset().weights();
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by_key(|(m, _)| (Reverse(m.weighted_degree(&w)), Reverse(*m)));
        terms
    }

    fn factors(&self, m: &Monomial) -> Vec<(Var, i32)> {
        m.exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| (self.varset().var_at(i), e))
            .collect()
    }

    /// `c1^2*c2` style name of a monomial; `1` for the empty product.
    pub fn format_monomial(&self, m: &Monomial) -> String {
        let vars: Vec<String> = self
            .factors(m)
            .into_iter()
            .map(|(v, e)| {
                if e == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        if vars.is_empty() {
            "1".into()
        } else {
            vars.join("*")
        }
    }

    /// LaTeX rendering, e.g. `4 c_1^3 - 3 c_1c_2 - c_3`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let abs = c.abs();
            let vars: String = self
                .factors(m)
                .into_iter()
                .map(|(v, e)| latex_power(v, e))
                .collect();
            if vars.is_empty() {
                out.push_str(&latex_rational(&abs));
            } else if abs.is_one() {
                out.push_str(&vars);
            } else {
                out.push_str(&format!("{} {vars}", latex_rational(&abs)));
            }
        }
        out
    }

    /// `g*(p/g)` with `g` the positive content, or the plain form when the
    /// content is 1 or there is a single term.
    pub fn to_content_form(&self) -> String {
        let g = content(self.terms().map(|(_, c)| c));
        if self.len() <= 1 || g.is_one() {
            return self.to_string();
        }
        format!("{}*({})", g, self.scale(&g.recip()))
    }
}

fn latex_index(n: i64) -> String {
    if (0..10).contains(&n) {
        n.to_string()
    } else {
        format!("{{{n}}}")
    }
}

fn latex_power(v: Var, e: i32) -> String {
    let base = format!("{}_{}", v.kind.letter(), latex_index(i64::from(v.index)));
    if e == 1 {
        base
    } else {
        format!("{base}^{}", latex_index(i64::from(e)))
    }
}

pub(crate) fn latex_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            let vars: Vec<String> = self
                .factors(m)
                .into_iter()
                .map(|(v, e)| {
                    if e == 1 {
                        v.to_string()
                    } else {
                        format!("{v}^{e}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}
