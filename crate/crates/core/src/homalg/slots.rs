use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::mfcore::GradedMF;

/// Block of a morphism matrix, named (source parity, target parity).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Block {
    /// even to even
    PlusPlus,
    /// odd to odd
    MinusMinus,
    /// even to odd
    PlusMinus,
    /// odd to even
    MinusPlus,
}

impl Block {
    pub fn source_even(self) -> bool {
        matches!(self, Block::PlusPlus | Block::PlusMinus)
    }

    pub fn target_even(self) -> bool {
        matches!(self, Block::PlusPlus | Block::MinusPlus)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Block::PlusPlus => "++",
            Block::MinusMinus => "--",
            Block::PlusMinus => "+-",
            Block::MinusPlus => "-+",
        }
    }
}

/// One basis vector: the monomial `x^exp` at (`row`, `col`) of `block`,
/// with `row` indexing target summands and `col` source summands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Slot {
    pub block: Block,
    pub row: usize,
    pub col: usize,
    pub exp: u32,
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{},{}]x^{}", self.block.symbol(), self.row, self.col, self.exp)
    }
}

/// Basis of the degree-`q` morphism space between two univariate objects.
/// Slots are ordered `++`, `--`, `+-`, `-+`, each row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlotBasis {
    degree: i64,
    src_even: usize,
    tgt_even: usize,
    src_dim: usize,
    tgt_dim: usize,
    slots: Vec<Slot>,
    index: HashMap<(usize, usize), usize>,
}

impl SlotBasis {
    pub fn new(alpha: &GradedMF, beta: &GradedMF, q: i64) -> Result<Self> {
        let h = alpha.require_univariate()? as i64;
        beta.require_univariate()?;
        if !alpha.same_context(beta) {
            return Err(Error::PotentialMismatch);
        }
        let (k, l) = (alpha.even(), alpha.odd());
        let (k2, l2) = (beta.even(), beta.odd());
        let mut slots = Vec::new();
        let mut push = |block, tgt: &[i64], src: &[i64], offset: i64| {
            for (row, t) in tgt.iter().enumerate() {
                for (col, s) in src.iter().enumerate() {
                    let m = offset + t - s;
                    if m >= 0 {
                        slots.push(Slot {
                            block,
                            row,
                            col,
                            exp: m as u32,
                        });
                    }
                }
            }
        };
        if q.rem_euclid(2) == 0 {
            push(Block::PlusPlus, k2, k, q * h / 2);
            push(Block::MinusMinus, l2, l, q * h / 2);
        } else {
            push(Block::PlusMinus, l2, k, (q - 1) * h / 2);
            push(Block::MinusPlus, k2, l, (q + 1) * h / 2);
        }
        let mut basis = SlotBasis {
            degree: q,
            src_even: k.len(),
            tgt_even: k2.len(),
            src_dim: alpha.dim(),
            tgt_dim: beta.dim(),
            slots,
            index: HashMap::new(),
        };
        basis.index = basis
            .slots
            .iter()
            .enumerate()
            .map(|(n, s)| (basis.full_coords(s), n))
            .collect();
        Ok(basis)
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    /// Source and target ranks `(p + r)`.
    pub fn dims(&self) -> (usize, usize) {
        (self.src_dim, self.tgt_dim)
    }

    /// Position of a slot in the full `(target, source)` matrix, whose
    /// rows and columns list even summands before odd ones.
    pub fn full_coords(&self, s: &Slot) -> (usize, usize) {
        let r = if s.block.target_even() {
            s.row
        } else {
            self.tgt_even + s.row
        };
        let c = if s.block.source_even() {
            s.col
        } else {
            self.src_even + s.col
        };
        (r, c)
    }

    /// Slot index at a full matrix position, if that position carries one.
    pub fn lookup(&self, row: usize, col: usize) -> Option<usize> {
        self.index.get(&(row, col)).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mfcore::indecomposable;

    #[test]
    fn endomorphism_slots() {
        let m = indecomposable(1, 0, 4).unwrap();
        let b0 = SlotBasis::new(&m, &m, 0).unwrap();
        assert_eq!(b0.len(), 2);
        assert!(b0.slots().iter().all(|s| s.exp == 0));
        let b1 = SlotBasis::new(&m, &m, 1).unwrap();
        let exps: Vec<(Block, u32)> = b1.slots().iter().map(|s| (s.block, s.exp)).collect();
        assert_eq!(exps, vec![(Block::PlusMinus, 1), (Block::MinusPlus, 3)]);
    }

    #[test]
    fn missing_slot() {
        let a = indecomposable(2, 0, 4).unwrap();
        let b = indecomposable(1, 0, 4).unwrap();
        let basis = SlotBasis::new(&a, &b, 0).unwrap();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis.slots()[0].block, Block::PlusPlus);
    }
}
