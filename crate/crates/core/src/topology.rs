//! Complete binary tree laid out breadth-first in a flat index space.
//!
//! ```text
//! level 0          0
//! level 1      1       2
//! level 2    3   4   5   6
//! ```
//!
//! Children of `i` are `2i+1` and `2i+2`. The two ends of the tree close on
//! themselves: the ur-parent (index 0) is its own parent, and every leaf is
//! both of its own children.

use crate::error::{Error, Result};

/// Deepest tree we agree to build; keeps `2^levels` and the schedule periods
/// comfortably inside 64-bit arithmetic.
pub const MAX_LEVELS: u32 = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Tree {
    levels: u32,
    agent_count: usize,
}

/// Builds a complete tree with `levels` levels and `2^levels - 1` agents.
pub fn build_tree(levels: u32) -> Result<Tree> {
    if levels < 1 {
        return Err(Error::invalid("tree needs at least one level"));
    }
    if levels > MAX_LEVELS {
        return Err(Error::invalid(format!(
            "tree depth {levels} exceeds the supported maximum of {MAX_LEVELS}"
        )));
    }
    Ok(Tree {
        levels,
        agent_count: (1usize << levels) - 1,
    })
}

impl Tree {
    pub fn levels(&self) -> u32 {
        self.levels
    }

    pub fn agent_count(&self) -> usize {
        self.agent_count
    }

    fn check(&self, i: usize) -> Result<()> {
        if i < self.agent_count {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "agent index {i} out of range for a tree of {} agents",
                self.agent_count
            )))
        }
    }

    pub fn is_leaf(&self, i: usize) -> bool {
        2 * i + 1 >= self.agent_count
    }

    pub fn parent_of(&self, i: usize) -> Result<usize> {
        self.check(i)?;
        Ok(if i == 0 { 0 } else { (i - 1) / 2 })
    }

    /// Returns `(u, v)`; a leaf gets `(i, i)`.
    pub fn children_of(&self, i: usize) -> Result<(usize, usize)> {
        self.check(i)?;
        if self.is_leaf(i) {
            Ok((i, i))
        } else {
            Ok((2 * i + 1, 2 * i + 2))
        }
    }

    pub fn level_of(&self, i: usize) -> Result<u32> {
        self.check(i)?;
        Ok((i + 1).ilog2())
    }

    /// Agent indices on `level`, ascending. Empty if the level does not exist.
    pub fn agents_at_level(&self, level: u32) -> std::ops::Range<usize> {
        if level >= self.levels {
            return 0..0;
        }
        let first = (1usize << level) - 1;
        first..(2 * first + 1)
    }

    /// `(parent, first child, second child)` for an in-range index.
    pub(crate) fn neighbours(&self, i: usize) -> (usize, usize, usize) {
        let p = if i == 0 { 0 } else { (i - 1) / 2 };
        if self.is_leaf(i) {
            (p, i, i)
        } else {
            (p, 2 * i + 1, 2 * i + 2)
        }
    }
}
