use std::fmt;

use super::GroupElement;
use crate::ez::{shuffles, Perm};
use crate::{Error, Result};

/// A bar word `[g_1 | ... | g_n]` over the group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BarWord(Vec<GroupElement>);

impl BarWord {
    pub fn new(letters: Vec<GroupElement>) -> Self {
        BarWord(letters)
    }

    pub fn letters(&self) -> &[GroupElement] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Each letter replaced by its permutation; `None` if some letter is not a generator.
    pub fn operator_term(&self) -> Option<OperatorTerm> {
        self.0.iter().map(|g| g.letter_action()).collect::<Option<Vec<_>>>().map(OperatorTerm)
    }
}

impl fmt::Debug for BarWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for BarWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join("|"))
    }
}

/// The permutations `ν(g_1), ..., ν(g_n)` of a bar word, each followed by `Sh_4`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OperatorTerm(pub Vec<Perm>);

/// Which end of a bar word is adjacent to `Aw_4`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LetterOrder {
    /// The first letter acts last: `Aw_4 ν(g_1) Sh_4 ⋯ ν(g_n) Sh_4 Δ`.
    #[default]
    OuterFirst,
    /// The first letter acts first: `Aw_4 ν(g_n) Sh_4 ⋯ ν(g_1) Sh_4 Δ`.
    InnerFirst,
}

impl OperatorTerm {
    /// The permutations in the order they are applied to `Δx`.
    pub fn application_order(&self, order: LetterOrder) -> Vec<Perm> {
        match order {
            LetterOrder::OuterFirst => self.0.iter().rev().copied().collect(),
            LetterOrder::InnerFirst => self.0.clone(),
        }
    }
}

/// The summands of `e_{(3i+3, ℓ)}`: for every arrangement of `3i+2-ℓ` letters `(1,0)`
/// and `ℓ` letters `(0,1)` and every split `j`, the word of the first `j` letters, then
/// `a_1`, then the remaining letters with `(a, b)` swapped.
pub fn bar_words(i: usize, l: usize) -> Result<Vec<BarWord>> {
    let n = 3 * i + 2;
    if l > n {
        return Err(Error::InvalidArgument(format!("ℓ = {l} out of range 0..={n}")));
    }
    let mut out = Vec::new();
    for s in shuffles(n - l, l).iter() {
        let mut letters = vec![GroupElement::A2; n];
        for &k in &s.beta {
            letters[k] = GroupElement::A3;
        }
        for j in 0..=n {
            let mut word = Vec::with_capacity(n + 1);
            word.extend_from_slice(&letters[..j]);
            word.push(GroupElement::A1);
            word.extend(letters[j..].iter().map(|g| g.bar()));
            out.push(BarWord(word));
        }
    }
    Ok(out)
}

/// The values of `ℓ` whose words sum to `e_{3i+3}`.
pub fn e_cases(i: usize) -> Vec<usize> {
    match i {
        0 => vec![0],
        2 | 4 => vec![i, i - 1],
        1 | 3 | 5 => vec![i],
        _ if i % 2 == 0 => vec![i, i - 1, i - 2],
        _ if ((i - 7) / 2) % 2 == 0 => vec![i],
        _ => vec![i, i - 2],
    }
}
