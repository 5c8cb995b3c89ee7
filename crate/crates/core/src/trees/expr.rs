//! Extended binary trees as multiplication expressions.
//!
//! Every internal node is a multiplication and every leaf the operand `a`.
//! Two text syntaxes are supported: fully parenthesized infix
//! (`Expr := "a" | "(" Expr "*" Expr ")"`) and postfix over `{'a', '*'}`.
//!
//! Two Catalan codecs live here and they are different maps:
//! [`encode_expression`] drops the leaves and encodes the remaining binary
//! tree (total and bijective at every semilength), while [`rpn_paper_encode`]
//! writes the postfix word as `a -> 0`, `* -> 1` and appends a final `1`,
//! whose inverse is only defined on part of each semilength.

use std::fmt;
use std::str::FromStr;

use super::{decode_tree, encode_tree, BinaryTree, Children, TreeError};
use crate::sequence::CatalanSequence;

/// A node of an extended tree. The left child of an internal node at index
/// `i` is always at `i + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtNode {
    Leaf,
    Internal { right: usize },
}

/// A tree in which every internal node has exactly two children, stored in preorder.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtendedBinaryTree {
    nodes: Vec<ExtNode>,
}

impl Default for ExtendedBinaryTree {
    fn default() -> Self {
        Self::leaf()
    }
}

impl ExtendedBinaryTree {
    pub fn leaf() -> Self {
        Self {
            nodes: vec![ExtNode::Leaf],
        }
    }

    pub fn internal(left: ExtendedBinaryTree, right: ExtendedBinaryTree) -> Self {
        let left_len = left.nodes.len();
        let mut nodes = Vec::with_capacity(1 + left_len + right.nodes.len());
        nodes.push(ExtNode::Internal {
            right: 1 + left_len,
        });
        let shift = |n: ExtNode, by: usize| match n {
            ExtNode::Leaf => ExtNode::Leaf,
            ExtNode::Internal { right } => ExtNode::Internal { right: right + by },
        };
        nodes.extend(left.nodes.into_iter().map(|n| shift(n, 1)));
        nodes.extend(right.nodes.into_iter().map(|n| shift(n, 1 + left_len)));
        Self { nodes }
    }

    pub fn nodes(&self) -> &[ExtNode] {
        &self.nodes
    }

    pub fn is_leaf(&self) -> bool {
        self.nodes.len() == 1
    }

    pub fn internal_count(&self) -> usize {
        self.nodes.len() / 2
    }

    pub fn leaf_count(&self) -> usize {
        self.nodes.len() / 2 + 1
    }
}

impl fmt::Display for ExtendedBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_mult(self))
    }
}

impl fmt::Debug for ExtendedBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtendedBinaryTree({})", render_mult(self))
    }
}

impl FromStr for ExtendedBinaryTree {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_mult(s)
    }
}

/// Adds a leaf wherever a node lacks a child.
pub fn extend_tree(t: &BinaryTree) -> ExtendedBinaryTree {
    enum Task {
        Visit(Option<usize>),
        SetRight(usize),
    }
    let mut nodes = Vec::with_capacity(2 * t.node_count() + 1);
    let mut stack = vec![Task::Visit(t.root())];
    while let Some(task) = stack.pop() {
        match task {
            Task::Visit(None) => nodes.push(ExtNode::Leaf),
            Task::Visit(Some(i)) => {
                let c = t.children(i);
                let idx = nodes.len();
                nodes.push(ExtNode::Internal { right: 0 });
                stack.push(Task::Visit(c.right));
                stack.push(Task::SetRight(idx));
                stack.push(Task::Visit(c.left));
            }
            Task::SetRight(idx) => {
                nodes[idx] = ExtNode::Internal { right: nodes.len() };
            }
        }
    }
    ExtendedBinaryTree { nodes }
}

/// Removes every leaf, keeping the internal nodes and the edges between them.
pub fn strip_leaves(e: &ExtendedBinaryTree) -> BinaryTree {
    #[derive(Clone, Copy)]
    enum Side {
        Left,
        Right,
    }
    let mut nodes: Vec<Children> = Vec::with_capacity(e.internal_count());
    let mut stack: Vec<(usize, Option<(usize, Side)>)> = vec![(0, None)];
    while let Some((j, parent)) = stack.pop() {
        let ExtNode::Internal { right } = e.nodes[j] else {
            continue;
        };
        let idx = nodes.len();
        nodes.push(Children::default());
        match parent {
            Some((p, Side::Left)) => nodes[p].left = Some(idx),
            Some((p, Side::Right)) => nodes[p].right = Some(idx),
            None => {}
        }
        stack.push((right, Some((idx, Side::Right))));
        stack.push((j + 1, Some((idx, Side::Left))));
    }
    BinaryTree { nodes }
}

/// Code of the leafless tree; `n` multiplications give semilength `n`.
pub fn encode_expression(e: &ExtendedBinaryTree) -> CatalanSequence {
    encode_tree(&strip_leaves(e))
}

pub fn decode_expression(s: &CatalanSequence) -> ExtendedBinaryTree {
    extend_tree(&decode_tree(s))
}

pub fn render_mult(e: &ExtendedBinaryTree) -> String {
    enum Task {
        Visit(usize),
        Text(char),
    }
    let mut out = String::with_capacity(3 * e.nodes.len());
    let mut stack = vec![Task::Visit(0)];
    while let Some(task) = stack.pop() {
        match task {
            Task::Text(c) => out.push(c),
            Task::Visit(j) => match e.nodes[j] {
                ExtNode::Leaf => out.push('a'),
                ExtNode::Internal { right } => {
                    out.push('(');
                    stack.push(Task::Text(')'));
                    stack.push(Task::Visit(right));
                    stack.push(Task::Text('*'));
                    stack.push(Task::Visit(j + 1));
                }
            },
        }
    }
    out
}

/// Parses `Expr := "a" | "(" Expr "*" Expr ")"`. No whitespace is accepted.
pub fn parse_mult(text: &str) -> Result<ExtendedBinaryTree, TreeError> {
    #[derive(PartialEq)]
    enum State {
        AfterLeft,
        AfterRight,
    }
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    let mut nodes: Vec<ExtNode> = Vec::new();
    let mut open: Vec<(usize, State)> = Vec::new();
    loop {
        match chars.get(pos) {
            Some('a') => {
                nodes.push(ExtNode::Leaf);
                pos += 1;
            }
            Some('(') => {
                open.push((nodes.len(), State::AfterLeft));
                nodes.push(ExtNode::Internal { right: 0 });
                pos += 1;
                continue;
            }
            _ => {
                return Err(TreeError::Syntax {
                    position: pos,
                    expected: "'a' or '('",
                })
            }
        }
        // an operand just completed; close as many parentheses as it finishes
        loop {
            match open.last_mut() {
                None => {
                    if pos != chars.len() {
                        return Err(TreeError::Syntax {
                            position: pos,
                            expected: "end of input",
                        });
                    }
                    return Ok(ExtendedBinaryTree { nodes });
                }
                Some((idx, state)) if *state == State::AfterLeft => {
                    if chars.get(pos) != Some(&'*') {
                        return Err(TreeError::Syntax {
                            position: pos,
                            expected: "'*'",
                        });
                    }
                    pos += 1;
                    nodes[*idx] = ExtNode::Internal { right: nodes.len() };
                    *state = State::AfterRight;
                    break;
                }
                Some(_) => {
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

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RpnToken {
    Operand,
    Operator,
}

/// A postfix word over operands and binary operators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RpnTokenSequence {
    pub tokens: Vec<RpnToken>,
}

impl RpnTokenSequence {
    /// Well formed iff every proper prefix holds strictly more operands than
    /// operators and the whole word has exactly one operand more.
    pub fn is_well_formed(&self) -> bool {
        self.first_violation().is_none()
    }

    /// Length of the first prefix breaking the well-formedness condition.
    fn first_violation(&self) -> Option<usize> {
        let mut depth: isize = 0;
        for (i, t) in self.tokens.iter().enumerate() {
            depth += match t {
                RpnToken::Operand => 1,
                RpnToken::Operator => -1,
            };
            let proper = i + 1 < self.tokens.len();
            if (proper && depth < 1) || (!proper && depth != 1) {
                return Some(i + 1);
            }
        }
        self.tokens.is_empty().then_some(0)
    }
}

impl FromStr for RpnTokenSequence {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .enumerate()
            .map(|(position, c)| match c {
                'a' => Ok(RpnToken::Operand),
                '*' => Ok(RpnToken::Operator),
                _ => Err(TreeError::Syntax {
                    position,
                    expected: "'a' or '*'",
                }),
            })
            .collect::<Result<_, _>>()
            .map(|tokens| RpnTokenSequence { tokens })
    }
}

impl fmt::Display for RpnTokenSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.tokens {
            f.write_str(match t {
                RpnToken::Operand => "a",
                RpnToken::Operator => "*",
            })?;
        }
        Ok(())
    }
}

fn build_from_tokens(tokens: &RpnTokenSequence) -> Result<ExtendedBinaryTree, TreeError> {
    // children of each postfix node, by postfix index
    let mut post: Vec<Option<(usize, usize)>> = Vec::with_capacity(tokens.tokens.len());
    let mut values: Vec<usize> = Vec::new();
    for (position, t) in tokens.tokens.iter().enumerate() {
        match t {
            RpnToken::Operand => {
                values.push(post.len());
                post.push(None);
            }
            RpnToken::Operator => {
                let (Some(right), Some(left)) = (values.pop(), values.pop()) else {
                    return Err(TreeError::StackUnderflow { position });
                };
                values.push(post.len());
                post.push(Some((left, right)));
            }
        }
    }
    let root = match values.len() {
        0 => return Err(TreeError::EmptyExpression),
        1 => values[0],
        remaining => return Err(TreeError::ExcessOperands { remaining }),
    };

    enum Task {
        Visit(usize),
        SetRight(usize),
    }
    let mut nodes = Vec::with_capacity(post.len());
    let mut stack = vec![Task::Visit(root)];
    while let Some(task) = stack.pop() {
        match task {
            Task::Visit(p) => match post[p] {
                None => nodes.push(ExtNode::Leaf),
                Some((l, r)) => {
                    let idx = nodes.len();
                    nodes.push(ExtNode::Internal { right: 0 });
                    stack.push(Task::Visit(r));
                    stack.push(Task::SetRight(idx));
                    stack.push(Task::Visit(l));
                }
            },
            Task::SetRight(idx) => nodes[idx] = ExtNode::Internal { right: nodes.len() },
        }
    }
    Ok(ExtendedBinaryTree { nodes })
}

/// Builds the expression tree of a postfix word over `{'a', '*'}` with a value stack.
pub fn parse_rpn(text: &str) -> Result<ExtendedBinaryTree, TreeError> {
    build_from_tokens(&text.parse()?)
}

pub fn rpn_tokens(e: &ExtendedBinaryTree) -> RpnTokenSequence {
    enum Task {
        Visit(usize),
        Operator,
    }
    let mut tokens = Vec::with_capacity(e.nodes.len());
    let mut stack = vec![Task::Visit(0)];
    while let Some(task) = stack.pop() {
        match task {
            Task::Operator => tokens.push(RpnToken::Operator),
            Task::Visit(j) => match e.nodes[j] {
                ExtNode::Leaf => tokens.push(RpnToken::Operand),
                ExtNode::Internal { right } => {
                    stack.push(Task::Operator);
                    stack.push(Task::Visit(right));
                    stack.push(Task::Visit(j + 1));
                }
            },
        }
    }
    RpnTokenSequence { tokens }
}

/// Postorder rendering: left operand, right operand, then `*`.
pub fn render_rpn(e: &ExtendedBinaryTree) -> String {
    rpn_tokens(e).to_string()
}

/// Postfix word with operand `0`, operator `1`, followed by one extra `1`.
/// `k` operands give semilength `k`.
pub fn rpn_paper_encode(e: &ExtendedBinaryTree) -> CatalanSequence {
    let mut bits: Vec<bool> = rpn_tokens(e)
        .tokens
        .into_iter()
        .map(|t| t == RpnToken::Operator)
        .collect();
    bits.push(true);
    CatalanSequence::from_trusted(bits)
}

/// Inverse of [`rpn_paper_encode`]. Defined exactly on the sequences `0 u 1`
/// with `u` a Catalan sequence; everything else is [`TreeError::NotInImage`].
pub fn rpn_paper_decode(s: &CatalanSequence) -> Result<ExtendedBinaryTree, TreeError> {
    let Some((_, body)) = s.bits().split_last() else {
        return Err(TreeError::NotInImage { prefix: 0 });
    };
    let tokens = RpnTokenSequence {
        tokens: body
            .iter()
            .map(|&b| if b { RpnToken::Operator } else { RpnToken::Operand })
            .collect(),
    };
    if let Some(prefix) = tokens.first_violation() {
        return Err(TreeError::NotInImage { prefix });
    }
    Ok(build_from_tokens(&tokens).expect("well-formed postfix word"))
}
