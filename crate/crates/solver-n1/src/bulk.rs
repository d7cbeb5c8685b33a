//! Solving many inner clusters that share a configuration at once.

use cube_core::{CubeState, MoveSequence};

use crate::cluster::{check_shape, classify_cluster, col, row, N1Cluster, N1ClusterState};
use crate::error::N1Error;

/// Expands the configuration's solving sequence with each column move
/// applied to every `x` in `xs` and each row move to every `y` in `ys`.
/// Clusters outside `xs x ys` are left as they were.
pub fn bulk_moves(n: usize, xs: &[usize], ys: &[usize], cfg: N1ClusterState) -> MoveSequence {
    let mut out = Vec::new();
    for &g in cfg.solution() {
        if g.is_row() {
            out.extend(ys.iter().map(|&y| row(g.line(n, y))));
        } else {
            out.extend(xs.iter().map(|&x| col(g.line(n, x))));
        }
    }
    out
}

/// Solves every cluster of `xs x ys`, all of which must currently be in
/// configuration `cfg`.
pub fn bulk_solve_uniform(
    state: &CubeState,
    xs: &[usize],
    ys: &[usize],
    cfg: N1ClusterState,
) -> Result<MoveSequence, N1Error> {
    let n = check_shape(state)?;
    for &x in xs {
        for &y in ys {
            let found = classify_cluster(state, N1Cluster::new(n, x, y))?;
            if found != cfg {
                return Err(N1Error::PreconditionViolation { x, y, expected: cfg, found });
            }
        }
    }
    Ok(bulk_moves(n, xs, ys, cfg))
}

/// Columns per chunk: half the log of the row count, at least one.
pub fn chunk_size(rows: usize) -> usize {
    let bits = usize::BITS - rows.saturating_sub(1).leading_zeros();
    (bits as usize).div_ceil(2).max(1)
}

/// Column subsets and the rows whose matching columns are exactly that
/// subset, for each chunk of `xs`. Subsets come in increasing bitmask order.
pub fn group_plan(
    state: &CubeState,
    xs: &[usize],
    ys: &[usize],
    cfg: N1ClusterState,
) -> Result<Vec<(Vec<usize>, Vec<usize>)>, N1Error> {
    let n = check_shape(state)?;
    let mut plan = Vec::new();
    for chunk in xs.chunks(chunk_size(ys.len())) {
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); 1 << chunk.len()];
        for &y in ys {
            let mut mask = 0usize;
            for (bit, &x) in chunk.iter().enumerate() {
                if classify_cluster(state, N1Cluster::new(n, x, y))? == cfg {
                    mask |= 1 << bit;
                }
            }
            if mask != 0 {
                groups[mask].push(y);
            }
        }
        for (mask, rows) in groups.into_iter().enumerate() {
            if rows.is_empty() {
                continue;
            }
            let cols = chunk.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &x)| x).collect();
            plan.push((cols, rows));
        }
    }
    Ok(plan)
}

/// Solves every cluster of `xs x ys` currently in configuration `cfg`,
/// whatever the others hold.
pub fn bulk_solve_grouped(
    state: &CubeState,
    xs: &[usize],
    ys: &[usize],
    cfg: N1ClusterState,
) -> Result<MoveSequence, N1Error> {
    let n = check_shape(state)?;
    if cfg == N1ClusterState::Solved {
        return Ok(Vec::new());
    }
    Ok(group_plan(state, xs, ys, cfg)?
        .into_iter()
        .flat_map(|(cols, rows)| bulk_moves(n, &cols, &rows, cfg))
        .collect())
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::{cluster_solution, flat};
    use cube_core::invert_sequence;

    fn inject(n: usize, cells: &[(usize, usize, N1ClusterState)]) -> CubeState {
        let mut s = CubeState::solved(flat(n));
        for &(x, y, cfg) in cells {
            s.apply_sequence_mut(&invert_sequence(&cluster_solution(cfg, N1Cluster::new(n, x, y))))
                .unwrap();
        }
        s
    }

    #[test]
    fn chunk_sizes() {
        assert_eq!(chunk_size(1), 1);
        assert_eq!(chunk_size(2), 1);
        assert_eq!(chunk_size(4), 1);
        assert_eq!(chunk_size(5), 2);
        assert_eq!(chunk_size(16), 2);
        assert_eq!(chunk_size(17), 3);
    }

    #[test]
    fn uniform_block() {
        let n = 12;
        let cfg = N1ClusterState::BlueLeft;
        let s = inject(n, &[(1, 3, cfg), (2, 3, cfg), (1, 4, cfg), (2, 4, cfg)]);
        let seq = bulk_solve_uniform(&s, &[1, 2], &[3, 4], cfg).unwrap();
        assert_eq!(seq, vec![col(1), col(2), row(3), row(4), col(1), col(2), row(3), row(4)]);
        assert_eq!(s.apply_sequence(&seq).unwrap(), CubeState::solved(flat(n)));
        assert!(matches!(
            bulk_solve_uniform(&s, &[1, 2, 3], &[3], cfg),
            Err(N1Error::PreconditionViolation { x: 3, y: 3, .. })
        ));
    }

    #[test]
    fn singleton_is_the_caption() {
        for cfg in N1ClusterState::ALL {
            let s = inject(9, &[(2, 3, cfg)]);
            assert_eq!(bulk_solve_uniform(&s, &[2], &[3], cfg).unwrap(), cluster_solution(cfg, N1Cluster::new(9, 2, 3)));
        }
    }

    #[test]
    fn grouping_trace() {
        let n = 16;
        let up = N1ClusterState::BlueUp;
        let ys = [3, 4, 5, 6, 7];
        let s = inject(n, &[(1, 3, up), (2, 3, up), (1, 5, up), (2, 4, N1ClusterState::AllBlue)]);
        let plan = group_plan(&s, &[1, 2], &ys, up).unwrap();
        assert_eq!(plan, vec![(vec![1], vec![5]), (vec![1, 2], vec![3])]);
        let seq = bulk_solve_grouped(&s, &[1, 2], &ys, up).unwrap();
        let t = s.apply_sequence(&seq).unwrap();
        for x in 1..n / 2 {
            for y in 1..n / 2 {
                let want = if (x, y) == (2, 4) { N1ClusterState::AllBlue } else { N1ClusterState::Solved };
                assert_eq!(classify_cluster(&t, N1Cluster::new(n, x, y)).unwrap(), want, "({x},{y})");
            }
        }
        assert!(bulk_solve_grouped(&s, &[1, 2], &[3, 4], N1ClusterState::BlueRight).unwrap().is_empty());
    }
}
