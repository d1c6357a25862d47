use std::fmt;

use super::Simplicial;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Operator {
    Face(usize),
    Degeneracy(usize),
}

/// A composite of face and degeneracy operators, written as function composition:
/// the rightmost symbol acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct OperatorWord {
    symbols: Vec<Operator>,
}

impl OperatorWord {
    pub fn new(symbols: Vec<Operator>) -> Self {
        OperatorWord { symbols }
    }

    pub fn identity() -> Self {
        OperatorWord::default()
    }

    pub fn symbols(&self) -> &[Operator] {
        &self.symbols
    }

    pub fn is_identity(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Applies the word to `s`, rightmost symbol first.
    pub fn apply<S: Simplicial>(&self, s: &S) -> Result<S> {
        let mut cur = s.clone();
        for op in self.symbols.iter().rev() {
            let dim = cur.degree();
            cur = match *op {
                Operator::Face(i) if i <= dim && dim > 0 => cur.face_op(i),
                Operator::Degeneracy(i) if i <= dim => cur.degeneracy_op(i),
                Operator::Face(i) | Operator::Degeneracy(i) => {
                    return Err(Error::IndexOutOfRange { index: i, dim })
                }
            };
        }
        Ok(cur)
    }

    /// Whether all degeneracies precede all faces, degeneracy indices strictly
    /// decrease and face indices strictly increase (left to right).
    pub fn is_normal(&self) -> bool {
        self.symbols.windows(2).all(|w| match (w[0], w[1]) {
            (Operator::Degeneracy(a), Operator::Degeneracy(b)) => a > b,
            (Operator::Face(a), Operator::Face(b)) => a < b,
            (Operator::Degeneracy(_), Operator::Face(_)) => true,
            (Operator::Face(_), Operator::Degeneracy(_)) => false,
        })
    }

    /// Rewrites the word into its unique normal form using the simplicial identities.
    pub fn normalize(&self) -> OperatorWord {
        let mut w = self.symbols.clone();
        let mut changed = true;
        while changed {
            changed = false;
            let mut k = 0;
            while k + 1 < w.len() {
                match (w[k], w[k + 1]) {
                    (Operator::Face(i), Operator::Degeneracy(j)) => {
                        changed = true;
                        if i < j {
                            w[k] = Operator::Degeneracy(j - 1);
                            w[k + 1] = Operator::Face(i);
                        } else if i == j || i == j + 1 {
                            w.drain(k..k + 2);
                            continue;
                        } else {
                            w[k] = Operator::Degeneracy(j);
                            w[k + 1] = Operator::Face(i - 1);
                        }
                    }
                    (Operator::Face(a), Operator::Face(b)) if a >= b => {
                        changed = true;
                        w[k] = Operator::Face(b);
                        w[k + 1] = Operator::Face(a + 1);
                    }
                    (Operator::Degeneracy(a), Operator::Degeneracy(b)) if a <= b => {
                        changed = true;
                        w[k] = Operator::Degeneracy(b + 1);
                        w[k + 1] = Operator::Degeneracy(a);
                    }
                    _ => {}
                }
                k += 1;
            }
        }
        OperatorWord { symbols: w }
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.symbols.is_empty() {
            return f.write_str("id");
        }
        for (k, op) in self.symbols.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            match op {
                Operator::Face(i) => write!(f, "d{i}")?,
                Operator::Degeneracy(i) => write!(f, "s{i}")?,
            }
        }
        Ok(())
    }
}
