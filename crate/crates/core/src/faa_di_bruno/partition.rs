use std::fmt;

use crate::error::{Error, Result};

/// A partition of `{1, …, n}` into nonempty blocks.
///
/// Elements inside a block are increasing and blocks are ordered by their
/// least element, so the block holding `1` always comes first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates and canonicalises an arbitrary list of blocks.
    pub fn from_blocks(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::Usage("partition blocks must be nonempty".into()));
            }
            block.sort_unstable();
            for &e in block.iter() {
                if e == 0 || e > n {
                    return Err(Error::IndexOutOfRange { index: e, dim: n });
                }
                if seen[e] {
                    return Err(Error::Usage(format!("element {e} appears twice")));
                }
                seen[e] = true;
            }
        }
        if let Some(missing) = (1..=n).find(|&e| !seen[e]) {
            return Err(Error::Usage(format!("element {missing} is not covered")));
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// Builds the partition of a restricted growth string (`labels[i]` is the
    /// block of element `i+1`, first occurrences increasing from 0).
    fn from_growth_string(labels: &[usize]) -> Self {
        let k = labels.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); k];
        for (i, &l) in labels.iter().enumerate() {
            blocks[l].push(i + 1);
        }
        SetPartition {
            n: labels.len(),
            blocks,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, block) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str("|")?;
            }
            let items: Vec<String> = block.iter().map(usize::to_string).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `{1, …, n}`, each exactly once.
///
/// Order: restricted growth strings in decreasing lexicographic order, so the
/// partition into singletons comes first and the single block comes last.
/// `n = 0` yields no partitions.
pub fn enumerate_partitions(n: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut labels = vec![0; n];
    grow(&mut labels, 1, 0, &mut out);
    out
}

fn grow(labels: &mut [usize], pos: usize, max: usize, out: &mut Vec<SetPartition>) {
    if pos == labels.len() {
        out.push(SetPartition::from_growth_string(labels));
        return;
    }
    for label in (0..=max + 1).rev() {
        labels[pos] = label;
        grow(labels, pos + 1, max.max(label), out);
    }
}

/// `x_I`: the entries of `args` at the 1-based, increasing positions `indices`.
pub fn index_select<T: Clone>(args: &[T], indices: &[usize]) -> Result<Vec<T>> {
    if indices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Usage(format!(
            "index set {indices:?} is not increasing"
        )));
    }
    indices
        .iter()
        .map(|&i| {
            if i == 0 || i > args.len() {
                Err(Error::IndexOutOfRange {
                    index: i,
                    dim: args.len(),
                })
            } else {
                Ok(args[i - 1].clone())
            }
        })
        .collect()
}
