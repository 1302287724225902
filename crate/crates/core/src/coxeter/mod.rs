//! Permutations, fixed-point-free involutions, and their statistics.

mod fpf;
mod partition;
mod perm;

pub use fpf::{
    ascent_chain_to_top, dearc, fpf_cover_up, fpf_grassmannian_from_shape, fpf_length,
    fpf_transition_indices, is_fpf_grassmannian, shift_fpf, sp_code, sp_rothe_diagram, sp_shape,
    theta, visible_descents, FpfGrassmannian, FpfInvolution, PartialMatching,
    ShiftedFpfInvolution,
};
pub use partition::{Partition, StrictPartition};
pub use perm::{
    bruhat_cover_up, grassmannian_perm, perm_length, reduced_word, shift_perm,
    transition_indices_perm, Permutation,
};

use crate::error::{Error, Result};

/// Digit string when every entry is a single digit, comma-separated otherwise.
pub(crate) fn format_word(word: &[usize]) -> String {
    if word.iter().all(|&v| v <= 9) {
        word.iter().map(|v| v.to_string()).collect()
    } else {
        word.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

pub(crate) fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.contains(',') {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad entry {t:?} in {s:?}")))
            })
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(format!("bad digit {c:?} in {s:?}")))
            })
            .collect()
    }
}
