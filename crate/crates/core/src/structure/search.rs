use crate::addcomb::PointSet;
use crate::gf2::{AffineSubspace, Subspace};

/// Partitions `points` into `count` disjoint affine subspaces of dimension
/// `dim` by exhaustive backtracking. Returns `None` when no such partition
/// exists.
pub fn partition_into_affine(points: &PointSet, dim: usize, count: usize) -> Option<Vec<AffineSubspace>> {
    let mut remaining = points.clone();
    let mut out = Vec::with_capacity(count);
    if fill(&mut remaining, dim, count, &mut out) {
        Some(out)
    } else {
        None
    }
}

fn fill(remaining: &mut PointSet, dim: usize, count: usize, out: &mut Vec<AffineSubspace>) -> bool {
    if count == 0 {
        return remaining.is_empty();
    }
    if remaining.len() != count << dim {
        return false;
    }
    // the smallest remaining point must lie in some piece
    let p = remaining.iter().next().expect("nonempty");
    let mut basis = Vec::with_capacity(dim);
    let mut offsets = vec![0u32];
    grow(remaining, p, dim, count, &mut basis, &mut offsets, out)
}

fn grow(
    remaining: &mut PointSet,
    p: u32,
    dim: usize,
    count: usize,
    basis: &mut Vec<u32>,
    offsets: &mut Vec<u32>,
    out: &mut Vec<AffineSubspace>,
) -> bool {
    let n = remaining.n();
    if basis.len() == dim {
        if !is_greedy_basis(n, basis, offsets) {
            return false;
        }
        let piece = AffineSubspace::from_parts(p, Subspace::from_bits(n, basis.iter().copied()));
        for &o in offsets.iter() {
            remaining.remove(p ^ o);
        }
        out.push(piece);
        if fill(remaining, dim, count - 1, out) {
            return true;
        }
        out.pop();
        for &o in offsets.iter() {
            remaining.insert(p ^ o);
        }
        return false;
    }
    let floor = basis.last().copied().unwrap_or(0);
    let candidates: Vec<u32> = remaining
        .iter()
        .map(|q| q ^ p)
        .filter(|&v| v > floor)
        .collect();
    for v in candidates {
        if offsets.contains(&v) || !offsets.iter().all(|&o| remaining.contains(p ^ o ^ v)) {
            continue;
        }
        let before = offsets.len();
        for i in 0..before {
            offsets.push(offsets[i] ^ v);
        }
        basis.push(v);
        if grow(remaining, p, dim, count, basis, offsets, out) {
            return true;
        }
        basis.pop();
        offsets.truncate(before);
    }
    false
}

/// Whether `basis` is the basis obtained by repeatedly taking the smallest
/// element of the span not yet covered. Each subspace has exactly one.
fn is_greedy_basis(n: usize, basis: &[u32], elements: &[u32]) -> bool {
    let mut sorted = elements.to_vec();
    sorted.sort_unstable();
    let mut span = Subspace::from_bits(n, std::iter::empty());
    let mut greedy = Vec::with_capacity(basis.len());
    for x in sorted {
        if x != 0 && !span.contains(x) {
            span.insert(x);
            greedy.push(x);
        }
    }
    greedy == basis
}
