//! Binary trees and their Catalan code.
//!
//! The code of a nonempty tree is `0`, then one digit pair per edge in
//! preorder, then `1`. A node with only a left child emits `01`, one with only
//! a right child emits `10`, and a node with both emits `00` before its left
//! subtree and `11` before its right subtree. The empty tree encodes to the
//! empty sequence so that semilength always equals node count.
//!
//! Trees are stored as preorder arenas, and every traversal here uses an
//! explicit stack, so degenerate chains of any length are safe.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::sequence::CatalanSequence;

mod expr;

pub use expr::{
    decode_expression, encode_expression, extend_tree, parse_mult, parse_rpn, render_mult,
    render_rpn, rpn_paper_decode, rpn_paper_encode, strip_leaves, ExtNode, ExtendedBinaryTree,
    RpnToken, RpnTokenSequence,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    /// `position` is a 0-based character offset into the input text.
    #[error("syntax error at position {position}: expected {expected}")]
    Syntax {
        position: usize,
        expected: &'static str,
    },
    #[error("operator at position {position} lacks two operands")]
    StackUnderflow { position: usize },
    #[error("{remaining} values left on the stack, expected one")]
    ExcessOperands { remaining: usize },
    #[error("empty expression")]
    EmptyExpression,
    /// The sequence has no preimage under the append-1 postfix code. `prefix`
    /// is the length of the first prefix whose operands do not outnumber its operators.
    #[error("sequence is not a postfix code: prefix of length {prefix} is not operand-dominated")]
    NotInImage { prefix: usize },
}

/// Child links of one node, as arena indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Children {
    pub left: Option<usize>,
    pub right: Option<usize>,
}

/// A finite binary tree, possibly empty.
///
/// Nodes are kept in preorder with the root at index 0, which makes the
/// representation canonical: two trees are equal iff their shapes are.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BinaryTree {
    nodes: Vec<Children>,
}

impl BinaryTree {
    pub fn empty() -> Self {
        Self::default()
    }

    /// One node without children.
    pub fn single() -> Self {
        Self {
            nodes: vec![Children::default()],
        }
    }

    /// A new root with the given subtrees.
    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        let left_len = left.nodes.len();
        let mut nodes = Vec::with_capacity(1 + left_len + right.nodes.len());
        nodes.push(Children {
            left: (!left.is_empty()).then_some(1),
            right: (!right.is_empty()).then_some(1 + left_len),
        });
        let shift = |c: Children, by: usize| Children {
            left: c.left.map(|i| i + by),
            right: c.right.map(|i| i + by),
        };
        nodes.extend(left.nodes.into_iter().map(|c| shift(c, 1)));
        nodes.extend(right.nodes.into_iter().map(|c| shift(c, 1 + left_len)));
        Self { nodes }
    }

    /// Wraps nodes already laid out in preorder with the root at index 0.
    pub(crate) fn from_preorder(nodes: Vec<Children>) -> Self {
        Self { nodes }
    }

    /// `n` nodes, each the left child of the previous one.
    pub fn left_chain(n: usize) -> Self {
        let nodes = (0..n)
            .map(|i| Children {
                left: (i + 1 < n).then_some(i + 1),
                right: None,
            })
            .collect();
        Self { nodes }
    }

    /// `n` nodes, each the right child of the previous one.
    pub fn right_chain(n: usize) -> Self {
        let nodes = (0..n)
            .map(|i| Children {
                left: None,
                right: (i + 1 < n).then_some(i + 1),
            })
            .collect();
        Self { nodes }
    }

    /// Splits into `(left, right)` subtrees; `None` for the empty tree.
    pub fn split(&self) -> Option<(BinaryTree, BinaryTree)> {
        let root = self.nodes.first()?;
        let sub = |start: Option<usize>| match start {
            None => BinaryTree::empty(),
            Some(s) => {
                let len = self.subtree_size(s);
                BinaryTree {
                    nodes: self.nodes[s..s + len]
                        .iter()
                        .map(|c| Children {
                            left: c.left.map(|i| i - s),
                            right: c.right.map(|i| i - s),
                        })
                        .collect(),
                }
            }
        };
        Some((sub(root.left), sub(root.right)))
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn root(&self) -> Option<usize> {
        (!self.nodes.is_empty()).then_some(0)
    }

    pub fn children(&self, node: usize) -> Children {
        self.nodes[node]
    }

    /// Nodes in preorder.
    pub fn nodes(&self) -> &[Children] {
        &self.nodes
    }

    fn subtree_size(&self, node: usize) -> usize {
        let mut size = 0;
        let mut stack = vec![node];
        while let Some(i) = stack.pop() {
            size += 1;
            let c = self.nodes[i];
            stack.extend(c.left);
            stack.extend(c.right);
        }
        size
    }

    /// Size of every subtree, indexed by node.
    pub(crate) fn subtree_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![1usize; self.nodes.len()];
        // children always follow their parent in preorder
        for i in (0..self.nodes.len()).rev() {
            let c = self.nodes[i];
            sizes[i] += c.left.map_or(0, |l| sizes[l]) + c.right.map_or(0, |r| sizes[r]);
        }
        sizes
    }

    pub fn height(&self) -> usize {
        let mut best = 0;
        let mut stack: Vec<(usize, usize)> = self.root().map(|r| (r, 1)).into_iter().collect();
        while let Some((i, depth)) = stack.pop() {
            best = best.max(depth);
            let c = self.nodes[i];
            stack.extend(c.left.map(|l| (l, depth + 1)));
            stack.extend(c.right.map(|r| (r, depth + 1)));
        }
        best
    }
}

/// Text form: `Tree := "." | "(" Tree " " Tree ")"`.
impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        enum Task {
            Visit(Option<usize>),
            Text(&'static str),
        }
        let mut stack = vec![Task::Visit(self.root())];
        while let Some(task) = stack.pop() {
            match task {
                Task::Text(t) => f.write_str(t)?,
                Task::Visit(None) => f.write_str(".")?,
                Task::Visit(Some(i)) => {
                    let c = self.nodes[i];
                    f.write_str("(")?;
                    stack.push(Task::Text(")"));
                    stack.push(Task::Visit(c.right));
                    stack.push(Task::Text(" "));
                    stack.push(Task::Visit(c.left));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryTree({self})")
    }
}

impl FromStr for BinaryTree {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        #[derive(Clone, Copy)]
        enum Slot {
            Left,
            Right,
        }
        let chars: Vec<char> = s.chars().collect();
        let mut pos = 0;
        let skip_ws = |pos: &mut usize| {
            while chars.get(*pos).is_some_and(|c| c.is_whitespace()) {
                *pos += 1;
            }
        };
        let mut nodes: Vec<Children> = Vec::new();
        let mut open: Vec<(usize, Slot)> = Vec::new();
        loop {
            skip_ws(&mut pos);
            let mut completed = match chars.get(pos) {
                Some('.') => {
                    pos += 1;
                    true
                }
                Some('(') => {
                    pos += 1;
                    let idx = nodes.len();
                    nodes.push(Children::default());
                    match open.last() {
                        Some(&(parent, Slot::Left)) => nodes[parent].left = Some(idx),
                        Some(&(parent, Slot::Right)) => nodes[parent].right = Some(idx),
                        None => {}
                    }
                    open.push((idx, Slot::Left));
                    false
                }
                _ => {
                    return Err(TreeError::Syntax {
                        position: pos,
                        expected: "'.' or '('",
                    })
                }
            };
            while completed {
                match open.last_mut() {
                    None => {
                        skip_ws(&mut pos);
                        if pos != chars.len() {
                            return Err(TreeError::Syntax {
                                position: pos,
                                expected: "end of input",
                            });
                        }
                        return Ok(BinaryTree { nodes });
                    }
                    Some((_, slot @ Slot::Left)) => {
                        *slot = Slot::Right;
                        completed = false;
                    }
                    Some((_, Slot::Right)) => {
                        skip_ws(&mut pos);
                        if chars.get(pos) != Some(&')') {
                            return Err(TreeError::Syntax {
                                position: pos,
                                expected: "')'",
                            });
                        }
                        pos += 1;
                        open.pop();
                    }
                }
            }
        }
    }
}

pub fn node_count(t: &BinaryTree) -> usize {
    t.node_count()
}

/// Preorder pair code of `t`, wrapped in `0 ... 1` when nonempty.
pub fn encode_tree(t: &BinaryTree) -> CatalanSequence {
    enum Task {
        Visit(usize),
        RightBranch(usize),
    }
    let Some(root) = t.root() else {
        return CatalanSequence::empty();
    };
    let mut bits = Vec::with_capacity(2 * t.node_count());
    bits.push(false);
    let mut stack = vec![Task::Visit(root)];
    while let Some(task) = stack.pop() {
        match task {
            Task::Visit(i) => match (t.nodes[i].left, t.nodes[i].right) {
                (None, None) => {}
                (Some(l), None) => {
                    bits.extend([false, true]);
                    stack.push(Task::Visit(l));
                }
                (None, Some(r)) => {
                    bits.extend([true, false]);
                    stack.push(Task::Visit(r));
                }
                (Some(l), Some(r)) => {
                    bits.extend([false, false]);
                    stack.push(Task::RightBranch(r));
                    stack.push(Task::Visit(l));
                }
            },
            Task::RightBranch(r) => {
                bits.extend([true, true]);
                stack.push(Task::Visit(r));
            }
        }
    }
    bits.push(true);
    CatalanSequence::from_trusted(bits)
}

/// Inverse of [`encode_tree`]: strip the outer `0 ... 1`, then read digit pairs,
/// keeping the vertices that still owe a right edge on a stack.
pub fn decode_tree(s: &CatalanSequence) -> BinaryTree {
    let bits = s.bits();
    if bits.is_empty() {
        return BinaryTree::empty();
    }
    let interior = &bits[1..bits.len() - 1];
    assert!(interior.len().is_multiple_of(2), "odd interior in a valid sequence");
    let mut nodes = vec![Children::default()];
    let mut current = 0usize;
    let mut pending: Vec<usize> = Vec::new();
    for pair in interior.chunks_exact(2) {
        let child = nodes.len();
        match (pair[0], pair[1]) {
            (false, true) => nodes[current].left = Some(child),
            (true, false) => nodes[current].right = Some(child),
            (false, false) => {
                pending.push(current);
                nodes[current].left = Some(child);
            }
            (true, true) => {
                current = pending.pop().expect("11 pair without a pending 00");
                nodes[current].right = Some(child);
            }
        }
        nodes.push(Children::default());
        current = child;
    }
    assert!(pending.is_empty(), "unmatched 00 pairs in a valid sequence");
    BinaryTree { nodes }
}
