//! Cop strategies on trees and on Cartesian products of two trees, plus the
//! baseline players in [`simple`].

mod one_cop;
pub mod simple;
mod two_cop;

pub use one_cop::{center_start, OneCopChase};
pub use two_cop::{
    lemma1_responder, normalize_parity, phase1_move, Augmentation, Coord, LemmaState, Orientation, ParityNormalized,
    Phase, TwoCopStrategy, TwoPhaseMemory,
};
