//! Exact computation in the Onsager Lie algebra, realized inside the
//! three-point `sl2` loop algebra `sl2 ⊗ Q[t, 1/t, 1/(t-1)]`.

pub mod bases;
pub mod corpus;
pub mod error;
pub mod expr;
pub mod likeness;
pub mod loop_algebra;
pub mod random;
pub mod ring;
mod scan;
pub mod symmetry;
pub mod tables;
pub mod transitions;
pub mod verify;

pub use bases::{
    basis_elem, basis_elem_recursive, basis_seeds, bracket_coords, coords, BasisId, BasisVector,
    Family, OCoords, RecursiveBuilder,
};
pub use error::{Error, ParseError, Result};
pub use expr::{evaluate, expr_equal, parse, render, BracketExpr};
pub use likeness::{
    decompose_canonical, decompose_onsager, decompose_path, is_like, like_basis_elem, LikeKind,
    PathLabel, PathParts,
};
pub use loop_algebra::{std_gen, GenLabel, LoopElem, TensorStyle};
pub use ring::{Poly, Rational, RingAut, RingElem, ShiftCenter, Subring};
pub use symmetry::{apply_basic, apply_perm, word_for, Basic, GenWord, Perm};
pub use transitions::{aut_image, convert, transition, transition_via, Swap};
