use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::gf2::enumerate_subspaces;
use crate::spectrum::BooleanFunction;

/// Largest dimension accepted by [`kill_number`].
pub const KILL_NUMBER_MAX_DIM: usize = 8;

/// Smallest codimension of an affine subspace on which `f` is constant.
///
/// Exhaustive: for each codimension `c`, every subspace `W` of dimension `c`
/// is tried, and the cosets of `W^⊥` are the classes of points with equal
/// inner products against a basis of `W`.
pub fn kill_number(f: &BooleanFunction) -> Result<usize> {
    let n = f.n();
    if n > KILL_NUMBER_MAX_DIM {
        return Err(Error::DimensionTooLarge(n));
    }
    let mut seen = vec![0u8; 1 << n];
    for c in 0..n {
        let found = enumerate_subspaces(n, c, |rows| {
            if has_constant_class(f, rows, &mut seen[..1 << c]) {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if found.is_break() {
            return Ok(c);
        }
    }
    Ok(n)
}

fn has_constant_class(f: &BooleanFunction, rows: &[u32], seen: &mut [u8]) -> bool {
    seen.fill(0);
    // bit i of cols[j] is coordinate j of rows[i]
    let n = f.n();
    let cols: Vec<u32> = (0..n)
        .map(|j| {
            rows.iter()
                .enumerate()
                .fold(0, |acc, (i, &r)| acc | (r >> j & 1) << i)
        })
        .collect();
    let mut x = 0u32;
    let mut label = 0u32;
    for step in 0..1u32 << n {
        if step > 0 {
            let j = step.trailing_zeros() as usize;
            x ^= 1 << j;
            label ^= cols[j];
        }
        seen[label as usize] |= if f.get(x) { 2 } else { 1 };
    }
    seen.iter().any(|&s| s != 3)
}
