//! Solving many off-diagonal clusters that share a coloring at once.

use cube_core::{CubeState, MoveSequence};

use crate::boundary::target_colors;
use crate::cluster::{cluster_positions, cluster_solution, Chirality, ClusterColoring};
use crate::cms::ClusterMoveSequence;
use crate::error::N3Error;
use crate::solve::check_shape;

/// Each typed move once: the face move, the x-tied move for every x of
/// `xs`, the y-tied move for every y of `ys`.
pub fn bulk_moves_n3(cms: &ClusterMoveSequence, xs: &[usize], ys: &[usize], n: usize) -> MoveSequence {
    let mut out = Vec::new();
    for i in 0..cms.len() {
        out.extend(cms.a[i].map(|t| t.at(n)));
        if let Some(t) = cms.b[i] {
            out.extend(xs.iter().map(|&x| t.at(x, n)));
        }
        if let Some(t) = cms.c[i] {
            out.extend(ys.iter().map(|&y| t.at(y, n)));
        }
    }
    out
}

/// The coloring every off-diagonal cluster shows on a solved cube.
pub fn solved_coloring(state: &CubeState) -> Result<ClusterColoring, N3Error> {
    let n = check_shape(state)?;
    let pos = cluster_positions(1, 2, n.max(6))?;
    Ok(ClusterColoring::solved(&pos, &target_colors(state)?))
}

fn chirality(xs: &[usize], ys: &[usize]) -> Result<Chirality, N3Error> {
    let below = xs.iter().all(|&x| ys.iter().all(|&y| x < y));
    let above = xs.iter().all(|&x| ys.iter().all(|&y| x > y));
    match (below, above) {
        (true, false) => Ok(Chirality::Below),
        (false, true) => Ok(Chirality::Above),
        _ => Err(N3Error::PreconditionViolation("x and y indices must not interleave".into())),
    }
}

/// Solves every cluster of `xs x ys`, all of which must show coloring `d`.
pub fn bulk_solve_uniform_n3(
    state: &CubeState,
    xs: &[usize],
    ys: &[usize],
    d: &ClusterColoring,
) -> Result<MoveSequence, N3Error> {
    let n = check_shape(state)?;
    if xs.is_empty() || ys.is_empty() {
        return Ok(Vec::new());
    }
    let chir = chirality(xs, ys)?;
    for &x in xs {
        for &y in ys {
            let found = ClusterColoring::read(state, &cluster_positions(x, y, n)?);
            if found != *d {
                return Err(N3Error::PreconditionViolation(format!("cluster ({x}, {y}) differs from the coloring")));
            }
        }
    }
    let solved = solved_coloring(state)?;
    Ok(bulk_moves_n3(&cluster_solution(d, &solved, chir)?, xs, ys, n))
}

/// Columns per chunk: half the log of the row count, at least one.
pub fn chunk_size(rows: usize) -> usize {
    let bits = usize::BITS - rows.saturating_sub(1).leading_zeros();
    (bits as usize).div_ceil(2).max(1)
}

/// Column subsets and the rows whose matches within a chunk are exactly
/// that subset, chunk by chunk, subsets in increasing bitmask order.
pub fn group_plan_n3(
    state: &CubeState,
    xs: &[usize],
    ys: &[usize],
    d: &ClusterColoring,
) -> Result<Vec<(Vec<usize>, Vec<usize>)>, N3Error> {
    let n = check_shape(state)?;
    let mut plan = Vec::new();
    for chunk in xs.chunks(chunk_size(ys.len())) {
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); 1 << chunk.len()];
        for &y in ys {
            let mut mask = 0usize;
            for (bit, &x) in chunk.iter().enumerate() {
                if ClusterColoring::read(state, &cluster_positions(x, y, n)?) == *d {
                    mask |= 1 << bit;
                }
            }
            if mask != 0 {
                groups[mask].push(y);
            }
        }
        for (mask, rows) in groups.into_iter().enumerate() {
            if !rows.is_empty() {
                let cols = chunk.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &x)| x).collect();
                plan.push((cols, rows));
            }
        }
    }
    Ok(plan)
}

/// Solves the clusters of `xs x ys` that show coloring `d`, whatever the
/// others hold.
pub fn bulk_solve_grouped_n3(
    state: &CubeState,
    xs: &[usize],
    ys: &[usize],
    d: &ClusterColoring,
) -> Result<MoveSequence, N3Error> {
    let n = check_shape(state)?;
    if xs.is_empty() || ys.is_empty() {
        return Ok(Vec::new());
    }
    let solved = solved_coloring(state)?;
    if *d == solved {
        return Ok(Vec::new());
    }
    let cms = cluster_solution(d, &solved, chirality(xs, ys)?)?;
    Ok(group_plan_n3(state, xs, ys, d)?
        .into_iter()
        .flat_map(|(cols, rows)| bulk_moves_n3(&cms, &cols, &rows, n))
        .collect())
}
