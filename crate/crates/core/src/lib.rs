//! Catalan sequences and invertible codecs for the families counted by the
//! Catalan numbers.
//!
//! A Catalan sequence is a binary word with as many 1s as 0s in which no
//! prefix has more 1s than 0s. Every family here (binary trees, grid paths,
//! ±1 sequences, chord diagrams, multiplication and postfix expressions,
//! polygon triangulations) encodes into such a word and decodes back, and
//! [`hub::transcode`] chains any encoder with any decoder.
//!
//! ```
//! use catalan_core::hub::{transcode, Family};
//!
//! let chords = transcode(Family::Tree, Family::Chords, "((. (. .)) (. .))").unwrap();
//! assert_eq!(chords, "1-8,2-7,3-4,5-6");
//! ```

use thiserror::Error;

pub mod chords;
pub mod cli;
pub mod counting;
pub mod hub;
pub mod lattice;
pub mod polygons;
pub mod sequence;
pub mod trees;

pub use chords::{ChordDiagram, ChordError};
pub use counting::{CatalanNumber, Method, SeriesPrefix};
pub use hub::Family;
pub use lattice::{GridPath, LatticeError, PlusMinusSequence};
pub use polygons::{PolygonError, Triangulation};
pub use sequence::{AltitudeProfile, CatalanSequence, SequenceError};
pub use trees::{BinaryTree, ExtendedBinaryTree, TreeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Chord(#[from] ChordError),
    #[error(transparent)]
    Polygon(#[from] PolygonError),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
}

impl Error {
    /// True when the input was well formed but lies outside a partial codec's image.
    pub fn is_domain_error(&self) -> bool {
        matches!(self, Error::Tree(TreeError::NotInImage { .. }))
    }
}
