use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};

/// Block structure `A₁ × ⋯ × Aₙ` laid over a flat coordinate space.
///
/// Each entry is the dimension of one block. Blocks of dimension zero are
/// allowed (the terminal object); the profile itself is never empty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ArityProfile {
    blocks: Vec<usize>,
}

impl ArityProfile {
    pub fn new(blocks: Vec<usize>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::EmptyProfile);
        }
        Ok(ArityProfile { blocks })
    }

    pub fn single(dim: usize) -> Self {
        ArityProfile { blocks: vec![dim] }
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn total(&self) -> usize {
        self.blocks.iter().sum()
    }

    pub fn check_block(&self, block: usize) -> Result<()> {
        if block >= self.blocks.len() {
            return Err(Error::BlockOutOfRange {
                index: block,
                blocks: self.blocks.len(),
            });
        }
        Ok(())
    }

    pub fn dim(&self, block: usize) -> Result<usize> {
        self.check_block(block)?;
        Ok(self.blocks[block])
    }

    /// Flat coordinate range occupied by `block`.
    pub fn range(&self, block: usize) -> Result<Range<usize>> {
        self.check_block(block)?;
        let start: usize = self.blocks[..block].iter().sum();
        Ok(start..start + self.blocks[block])
    }

    /// `(block, offset)` of a flat coordinate.
    pub fn locate(&self, flat: usize) -> Result<(usize, usize)> {
        let mut start = 0;
        for (b, &d) in self.blocks.iter().enumerate() {
            if flat < start + d {
                return Ok((b, flat - start));
            }
            start += d;
        }
        Err(Error::IndexOutOfRange {
            index: flat,
            dim: start,
        })
    }

    /// This profile followed by the blocks of `tail`.
    pub fn extend(&self, tail: &[usize]) -> ArityProfile {
        let mut blocks = self.blocks.clone();
        blocks.extend_from_slice(tail);
        ArityProfile { blocks }
    }

    /// The same profile with `block` resized to `dim`.
    pub fn replace(&self, block: usize, dim: usize) -> Result<ArityProfile> {
        self.check_block(block)?;
        let mut blocks = self.blocks.clone();
        blocks[block] = dim;
        Ok(ArityProfile { blocks })
    }
}

impl fmt::Display for ArityProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for ArityProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_and_locate() {
        let p = ArityProfile::new(vec![2, 0, 3]).unwrap();
        assert_eq!(p.total(), 5);
        assert_eq!(p.range(0).unwrap(), 0..2);
        assert_eq!(p.range(1).unwrap(), 2..2);
        assert_eq!(p.range(2).unwrap(), 2..5);
        assert_eq!(p.locate(4).unwrap(), (2, 2));
        assert_eq!(p.locate(2).unwrap(), (2, 0));
        assert!(p.locate(5).is_err());
        assert!(p.range(3).is_err());
        assert_eq!(ArityProfile::new(vec![]), Err(Error::EmptyProfile));
    }

    #[test]
    fn every_flat_index_has_one_home() {
        let p = ArityProfile::new(vec![1, 3, 0, 2]).unwrap();
        for flat in 0..p.total() {
            let (b, off) = p.locate(flat).unwrap();
            assert_eq!(p.range(b).unwrap().start + off, flat);
        }
    }
}
