//! Transcoding between families through the Catalan sequence, plus text renderers.
//!
//! Every family has an encoder into [`CatalanSequence`] and a decoder back
//! out. Converting family `F` to family `G` is `decode_G(encode_F(x))`, so
//! any two families of the same semilength are linked by a bijection.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::chords::{decode_chords, encode_chords, ChordDiagram};
use crate::lattice::{decode_path, decode_pm, encode_path, encode_pm, GridPath, PlusMinusSequence};
use crate::polygons::{decode_polygon, encode_polygon, Triangulation};
use crate::sequence::CatalanSequence;
use crate::trees::{
    decode_expression, decode_tree, encode_expression, encode_tree, parse_mult, parse_rpn,
    render_mult, render_rpn, rpn_paper_decode, rpn_paper_encode, BinaryTree,
};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// The sequence itself, `'0'`/`'1'` text. Alias `mountain`.
    Sequence,
    /// Binary trees, `Tree := "." | "(" Tree " " Tree ")"`.
    Tree,
    /// Grid paths under the diagonal, `'H'`/`'V'` text.
    Path,
    /// ±1 ballot sequences, `'+'`/`'-'` text. Aliases `ballot`, `votes`.
    Pm,
    /// Non-crossing chord diagrams, `i-j` pairs.
    Chords,
    /// Parenthesized multiplications, through the leafless tree.
    Mult,
    /// The same expression codec as [`Family::Mult`], in postfix text.
    Rpn,
    /// Postfix text with the append-1 code. Decoding is partial.
    RpnPaper,
    /// Polygon triangulations, `m;a-b,...` text.
    Polygon,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Sequence,
        Family::Tree,
        Family::Path,
        Family::Pm,
        Family::Chords,
        Family::Mult,
        Family::Rpn,
        Family::RpnPaper,
        Family::Polygon,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Sequence => "sequence",
            Family::Tree => "tree",
            Family::Path => "path",
            Family::Pm => "pm",
            Family::Chords => "chords",
            Family::Mult => "mult",
            Family::Rpn => "rpn",
            Family::RpnPaper => "rpn-paper",
            Family::Polygon => "polygon",
        }
    }

    /// Whether every sequence decodes into this family.
    pub fn is_total(self) -> bool {
        self != Family::RpnPaper
    }

    pub fn total() -> impl Iterator<Item = Family> {
        Family::ALL.into_iter().filter(|f| f.is_total())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let family = match s {
            "mountain" => Family::Sequence,
            "ballot" | "votes" => Family::Pm,
            _ => Family::ALL
                .into_iter()
                .find(|f| f.name() == s)
                .ok_or_else(|| Error::UnknownFamily(s.to_owned()))?,
        };
        Ok(family)
    }
}

/// An object in its family's canonical text form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilyObjectText {
    pub family: Family,
    pub text: String,
}

impl FamilyObjectText {
    pub fn new(family: Family, text: impl Into<String>) -> Self {
        Self {
            family,
            text: text.into(),
        }
    }
}

/// Parses `text` in `family`'s grammar and encodes it.
pub fn encode(family: Family, text: &str) -> Result<CatalanSequence, Error> {
    let s = match family {
        Family::Sequence => text.parse()?,
        Family::Tree => encode_tree(&text.parse::<BinaryTree>()?),
        Family::Path => encode_path(&text.parse::<GridPath>()?),
        Family::Pm => encode_pm(&text.parse::<PlusMinusSequence>()?),
        Family::Chords => encode_chords(&text.parse::<ChordDiagram>()?),
        Family::Mult => encode_expression(&parse_mult(text)?),
        Family::Rpn => encode_expression(&parse_rpn(text)?),
        Family::RpnPaper => rpn_paper_encode(&parse_rpn(text)?),
        Family::Polygon => encode_polygon(&text.parse::<Triangulation>()?)?,
    };
    Ok(s)
}

/// Decodes `s` into `family`'s canonical text. Fails only for partial families.
pub fn decode(family: Family, s: &CatalanSequence) -> Result<String, Error> {
    let text = match family {
        Family::Sequence => s.to_string(),
        Family::Tree => decode_tree(s).to_string(),
        Family::Path => decode_path(s).to_string(),
        Family::Pm => decode_pm(s).to_string(),
        Family::Chords => decode_chords(s).to_string(),
        Family::Mult => render_mult(&decode_expression(s)),
        Family::Rpn => render_rpn(&decode_expression(s)),
        Family::RpnPaper => render_rpn(&rpn_paper_decode(s)?),
        Family::Polygon => decode_polygon(s).to_string(),
    };
    Ok(text)
}

pub fn transcode(from: Family, to: Family, input: &str) -> Result<String, Error> {
    decode(to, &encode(from, input)?)
}

pub fn transcode_object(input: &FamilyObjectText, to: Family) -> Result<FamilyObjectText, Error> {
    Ok(FamilyObjectText::new(
        to,
        transcode(input.family, to, &input.text)?,
    ))
}

/// Draws the sequence as a mountain range, top row first: `/` for each 0 at
/// the altitude before the step, `\` for each 1 at the altitude after it.
/// Trailing blanks are trimmed. The empty sequence draws no lines.
pub fn render_mountain(s: &CatalanSequence) -> Vec<String> {
    let heights = s.altitude_profile();
    let heights = heights.heights();
    let rows = heights.iter().copied().max().unwrap_or(0);
    let mut grid = vec![vec![' '; s.len()]; rows];
    for (i, &b) in s.bits().iter().enumerate() {
        if b {
            grid[heights[i + 1]][i] = '\\';
        } else {
            grid[heights[i]][i] = '/';
        }
    }
    grid.into_iter()
        .rev()
        .map(|row| row.into_iter().collect::<String>().trim_end().to_owned())
        .collect()
}

/// Graphviz description of `t`: nodes `v0, v1, ...` in preorder, one edge
/// per child labeled `L` or `R`.
pub fn render_dot(t: &BinaryTree) -> String {
    let mut out = String::from("digraph tree {\n");
    for i in 0..t.node_count() {
        let _ = writeln!(out, "  v{i};");
    }
    for (i, c) in t.nodes().iter().enumerate() {
        if let Some(l) = c.left {
            let _ = writeln!(out, "  v{i} -> v{l} [label=\"L\"];");
        }
        if let Some(r) = c.right {
            let _ = writeln!(out, "  v{i} -> v{r} [label=\"R\"];");
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::enumerate;

    fn seq(s: &str) -> CatalanSequence {
        s.parse().unwrap()
    }

    #[test]
    fn family_names() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!("ballot".parse::<Family>().unwrap(), Family::Pm);
        assert_eq!("votes".parse::<Family>().unwrap(), Family::Pm);
        assert_eq!("mountain".parse::<Family>().unwrap(), Family::Sequence);
        assert!(matches!("frieze".parse::<Family>(), Err(Error::UnknownFamily(_))));
        assert_eq!(Family::total().count(), 8);
    }

    #[test]
    fn transcode_examples() {
        assert_eq!(transcode(Family::Pm, Family::Path, "+++---").unwrap(), "HHHVVV");
        assert_eq!(
            transcode(Family::Tree, Family::Chords, "((. (. .)) (. .))").unwrap(),
            "1-8,2-7,3-4,5-6"
        );
        assert_eq!(
            transcode(Family::Sequence, Family::Sequence, "001011").unwrap(),
            "001011"
        );
        assert_eq!(
            transcode(Family::RpnPaper, Family::Mult, "aaa*a**").unwrap(),
            "((a*(a*a))*(a*a))"
        );
        let err = transcode(Family::Mult, Family::RpnPaper, "(a*((a*a)*a))").unwrap_err();
        assert!(err.is_domain_error());
        let err = transcode(Family::Path, Family::Tree, "VH").unwrap_err();
        assert!(!err.is_domain_error());
    }

    #[test]
    fn object_transcode() {
        let input = FamilyObjectText::new(Family::Chords, "1-4,2-3");
        let out = transcode_object(&input, Family::Polygon).unwrap();
        assert_eq!(out, FamilyObjectText::new(Family::Polygon, "4;0-2"));
    }

    #[test]
    fn mountain_examples() {
        assert_eq!(render_mountain(&seq("01")), vec!["/\\"]);
        assert_eq!(render_mountain(&seq("0011")), vec![" /\\", "/  \\"]);
        assert_eq!(render_mountain(&seq("010101")), vec!["/\\/\\/\\"]);
        assert!(render_mountain(&seq("")).is_empty());
    }

    #[test]
    fn dot_examples() {
        assert_eq!(render_dot(&BinaryTree::empty()), "digraph tree {\n}\n");
        assert_eq!(render_dot(&BinaryTree::single()), "digraph tree {\n  v0;\n}\n");
        assert_eq!(
            render_dot(&decode_tree(&seq("001101"))),
            "digraph tree {\n  v0;\n  v1;\n  v2;\n  v0 -> v1 [label=\"L\"];\n  v1 -> v2 [label=\"R\"];\n}\n"
        );
        let chain = render_dot(&decode_tree(&seq("001011")));
        assert!(chain.contains("v0 -> v1 [label=\"L\"]"));
        assert!(chain.contains("v1 -> v2 [label=\"L\"]"));
    }

    #[test]
    fn hub_identity_small() {
        for n in 0..=4 {
            for s in enumerate(n).unwrap() {
                for f in Family::total() {
                    let text = decode(f, &s).unwrap();
                    assert_eq!(transcode(f, f, &text).unwrap(), text);
                    for g in Family::total() {
                        let other = transcode(f, g, &text).unwrap();
                        assert_eq!(transcode(g, f, &other).unwrap(), text, "{f}->{g} {s}");
                    }
                }
            }
        }
    }
}
