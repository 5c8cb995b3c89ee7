//! Triangulations of a convex `m`-gon and their dual binary trees.
//!
//! Vertices are labeled `0..m` clockwise and the root side is `(0, m - 1)`.
//! The triangle on a base `(a, b)` has a unique apex `c` with `a < c < b`; it
//! becomes a node whose left subtree is the region over `(a, c)` and whose
//! right subtree is the region over `(c, b)`. An `m`-gon has `m - 2` triangles,
//! so its code has semilength `m - 2`. The 2-gon (a single side) is admitted
//! as the empty triangulation.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::sequence::CatalanSequence;
use crate::trees::{decode_tree, encode_tree, BinaryTree, Children};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    #[error("malformed triangulation text at {position}: expected {expected}")]
    Syntax {
        position: usize,
        expected: &'static str,
    },
    #[error("a polygon needs at least 2 sides, got {0}")]
    TooFewSides(usize),
    #[error("{0}-{1} is not a diagonal of a {2}-gon")]
    NotADiagonal(usize, usize, usize),
    #[error("diagonal {0}-{1} listed twice")]
    DuplicateDiagonal(usize, usize),
    #[error("diagonals {0:?} and {1:?} cross")]
    Crossing((usize, usize), (usize, usize)),
    #[error("a {sides}-gon needs {expected} diagonals, got {actual}")]
    WrongDiagonalCount {
        sides: usize,
        expected: usize,
        actual: usize,
    },
    #[error("no unique triangle on base {0}-{1}")]
    MalformedTriangulation(usize, usize),
    #[error("tree has {nodes} nodes, which does not triangulate a {sides}-gon")]
    SizeMismatch { nodes: usize, sides: usize },
}

/// A convex polygon with `sides` vertices cut into triangles by `sides - 3`
/// non-crossing diagonals, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Triangulation {
    sides: usize,
    diagonals: Vec<(usize, usize)>,
}

impl Triangulation {
    pub fn new(
        sides: usize,
        diagonals: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, PolygonError> {
        if sides < 2 {
            return Err(PolygonError::TooFewSides(sides));
        }
        let mut diagonals: Vec<(usize, usize)> = diagonals
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        for &(a, b) in &diagonals {
            if b >= sides || b - a < 2 || (a == 0 && b == sides - 1) {
                return Err(PolygonError::NotADiagonal(a, b, sides));
            }
        }
        diagonals.sort_unstable();
        if let Some(w) = diagonals.windows(2).find(|w| w[0] == w[1]) {
            return Err(PolygonError::DuplicateDiagonal(w[0].0, w[0].1));
        }
        let expected = sides.saturating_sub(3);
        if diagonals.len() != expected {
            return Err(PolygonError::WrongDiagonalCount {
                sides,
                expected,
                actual: diagonals.len(),
            });
        }
        for (x, &(a, b)) in diagonals.iter().enumerate() {
            for &(c, d) in &diagonals[x + 1..] {
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    return Err(PolygonError::Crossing((a, b), (c, d)));
                }
            }
        }
        Ok(Self { sides, diagonals })
    }

    pub fn sides(&self) -> usize {
        self.sides
    }

    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }

    pub fn triangle_count(&self) -> usize {
        self.sides - 2
    }
}

/// Text form: `m;a-b,c-d,...`, e.g. `5;0-2,0-3`, or `3;` for a bare triangle.
impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.sides)?;
        for (k, (a, b)) in self.diagonals.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}-{b}")?;
        }
        Ok(())
    }
}

impl FromStr for Triangulation {
    type Err = PolygonError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let Some((head, rest)) = s.split_once(';') else {
            return Err(PolygonError::Syntax {
                position: s.len(),
                expected: "';'",
            });
        };
        let sides = head.trim().parse().map_err(|_| PolygonError::Syntax {
            position: 0,
            expected: "a side count",
        })?;
        let mut diagonals = Vec::new();
        if !rest.trim().is_empty() {
            let mut offset = head.len() + 1;
            for item in rest.split(',') {
                let bad = |position| PolygonError::Syntax {
                    position,
                    expected: "'a-b' with vertex numbers",
                };
                let (a, b) = item.split_once('-').ok_or(bad(offset))?;
                let a = a.trim().parse().map_err(|_| bad(offset))?;
                let b = b.trim().parse().map_err(|_| bad(offset))?;
                diagonals.push((a, b));
                offset += item.len() + 1;
            }
        }
        Triangulation::new(sides, diagonals)
    }
}

/// The binary tree of triangles, rooted at the triangle on side `(0, m - 1)`.
pub fn dual_tree(tri: &Triangulation) -> Result<BinaryTree, PolygonError> {
    let m = tri.sides;
    if m == 2 {
        return Ok(BinaryTree::empty());
    }
    let mut edges: HashSet<(usize, usize)> = tri.diagonals.iter().copied().collect();
    edges.extend((0..m - 1).map(|v| (v, v + 1)));
    edges.insert((0, m - 1));
    let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); m];
    for &(a, b) in &edges {
        neighbors[a].push(b);
        neighbors[b].push(a);
    }

    #[derive(Clone, Copy)]
    enum Side {
        Left,
        Right,
    }
    let mut nodes: Vec<Children> = Vec::with_capacity(m - 2);
    // region (a, b) still to split, and where to hang its triangle
    type Region = (usize, usize, Option<(usize, Side)>);
    let mut stack: Vec<Region> = vec![(0, m - 1, None)];
    while let Some((a, b, parent)) = stack.pop() {
        if b == a + 1 {
            continue;
        }
        let (scan, other) = if neighbors[a].len() <= neighbors[b].len() {
            (a, b)
        } else {
            (b, a)
        };
        let mut apexes = neighbors[scan].iter().copied().filter(|&c| {
            a < c && c < b && edges.contains(&(c.min(other), c.max(other)))
        });
        let (Some(c), None) = (apexes.next(), apexes.next()) else {
            return Err(PolygonError::MalformedTriangulation(a, b));
        };
        let idx = nodes.len();
        nodes.push(Children::default());
        match parent {
            Some((p, Side::Left)) => nodes[p].left = Some(idx),
            Some((p, Side::Right)) => nodes[p].right = Some(idx),
            None => {}
        }
        stack.push((c, b, Some((idx, Side::Right))));
        stack.push((a, c, Some((idx, Side::Left))));
    }
    let tree = BinaryTree::from_preorder(nodes);
    debug_assert_eq!(tree.node_count(), m - 2);
    Ok(tree)
}

/// Inverse of [`dual_tree`]: a node over base `(a, b)` whose left subtree has
/// `k` nodes puts its apex at `a + k + 1`.
pub fn rebuild_triangulation(t: &BinaryTree, sides: usize) -> Result<Triangulation, PolygonError> {
    if sides < 2 || t.node_count() + 2 != sides {
        return Err(PolygonError::SizeMismatch {
            nodes: t.node_count(),
            sides,
        });
    }
    let sizes = t.subtree_sizes();
    let mut diagonals = Vec::with_capacity(sides.saturating_sub(3));
    let mut stack: Vec<(usize, usize, usize)> =
        t.root().map(|r| (r, 0, sides - 1)).into_iter().collect();
    while let Some((i, a, b)) = stack.pop() {
        let c = t.children(i);
        let apex = a + c.left.map_or(0, |l| sizes[l]) + 1;
        if apex != a + 1 {
            diagonals.push((a, apex));
        }
        if apex != b - 1 {
            diagonals.push((apex, b));
        }
        stack.extend(c.left.map(|l| (l, a, apex)));
        stack.extend(c.right.map(|r| (r, apex, b)));
    }
    diagonals.sort_unstable();
    Ok(Triangulation { sides, diagonals })
}

pub fn encode_polygon(tri: &Triangulation) -> Result<CatalanSequence, PolygonError> {
    Ok(encode_tree(&dual_tree(tri)?))
}

pub fn decode_polygon(s: &CatalanSequence) -> Triangulation {
    rebuild_triangulation(&decode_tree(s), s.semilength() + 2).expect("node count equals semilength")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::enumerate;

    fn tri(s: &str) -> Triangulation {
        s.parse().unwrap()
    }

    fn seq(s: &str) -> CatalanSequence {
        s.parse().unwrap()
    }

    #[test]
    fn dual_tree_examples() {
        assert_eq!(dual_tree(&tri("2;")).unwrap(), BinaryTree::empty());
        assert_eq!(dual_tree(&tri("3;")).unwrap(), BinaryTree::single());
        assert_eq!(dual_tree(&tri("5;0-2,0-3")).unwrap(), BinaryTree::left_chain(3));
        assert_eq!(dual_tree(&tri("5;1-4,2-4")).unwrap(), BinaryTree::right_chain(3));
    }

    #[test]
    fn rebuild_examples() {
        assert_eq!(
            rebuild_triangulation(&BinaryTree::empty(), 2).unwrap().diagonals(),
            &[]
        );
        assert_eq!(
            rebuild_triangulation(&BinaryTree::single(), 3).unwrap().diagonals(),
            &[]
        );
        assert_eq!(
            rebuild_triangulation(&BinaryTree::left_chain(3), 5).unwrap(),
            tri("5;0-2,0-3")
        );
        assert_eq!(
            rebuild_triangulation(&BinaryTree::single(), 4),
            Err(PolygonError::SizeMismatch { nodes: 1, sides: 4 })
        );
    }

    #[test]
    fn codec_examples() {
        assert_eq!(encode_polygon(&tri("3;")).unwrap().to_string(), "01");
        assert_eq!(encode_polygon(&tri("5;0-2,0-3")).unwrap().to_string(), "001011");
        assert_eq!(decode_polygon(&seq("000111")).to_string(), "5;0-2,2-4");
        assert_eq!(decode_polygon(&seq("")).to_string(), "2;");
    }

    #[test]
    fn rejects_invalid_triangulations() {
        assert_eq!(
            "4;0-2,1-3".parse::<Triangulation>(),
            Err(PolygonError::WrongDiagonalCount {
                sides: 4,
                expected: 1,
                actual: 2
            })
        );
        assert_eq!(
            "6;0-3,1-4,0-2".parse::<Triangulation>(),
            Err(PolygonError::Crossing((0, 2), (1, 4)))
        );
        assert_eq!(
            "5;0-4,0-2".parse::<Triangulation>(),
            Err(PolygonError::NotADiagonal(0, 4, 5))
        );
        assert_eq!(
            "5;0-1,0-2".parse::<Triangulation>(),
            Err(PolygonError::NotADiagonal(0, 1, 5))
        );
        assert_eq!(
            "5;0-2,2-0".parse::<Triangulation>(),
            Err(PolygonError::DuplicateDiagonal(0, 2))
        );
        assert_eq!("1;".parse::<Triangulation>(), Err(PolygonError::TooFewSides(1)));
        assert!("5".parse::<Triangulation>().is_err());
        assert!("5;0-2,x".parse::<Triangulation>().is_err());
    }

    #[test]
    fn round_trips() {
        for n in 0..=7 {
            let mut seen = HashSet::new();
            for s in enumerate(n).unwrap() {
                let t = decode_polygon(&s);
                assert_eq!(t.sides(), n + 2);
                assert_eq!(t.diagonals().len(), n.saturating_sub(1));
                // re-validating checks the diagonals are pairwise non-crossing
                let again = Triangulation::new(t.sides(), t.diagonals().to_vec()).unwrap();
                assert_eq!(again, t);
                assert_eq!(dual_tree(&t).unwrap().node_count(), n);
                assert_eq!(encode_polygon(&t).unwrap(), s);
                assert_eq!(t.to_string().parse::<Triangulation>().unwrap(), t);
                seen.insert(t);
            }
            assert_eq!(seen.len(), crate::sequence::enumerate(n).unwrap().len());
        }
    }

    #[test]
    fn large_fan() {
        let m = 5000;
        let fan = Triangulation::new(m, (2..m - 1).map(|c| (0, c))).unwrap();
        let s = encode_polygon(&fan).unwrap();
        assert_eq!(s.semilength(), m - 2);
        assert_eq!(decode_polygon(&s), fan);
    }
}
