use cube_core::{counting_lower_bound, CubeState, MoveSequence};
use num_bigint::BigUint;

use crate::boundary::solve_boundary;
use crate::bulk::bulk_solve_grouped;
use crate::cluster::{check_shape, classify_cluster, cluster_solution, inner_indices, N1Cluster, N1ClusterState};
use crate::error::N1Error;

fn after(state: &CubeState, seq: &[cube_core::Move]) -> CubeState {
    state.apply_sequence(seq).expect("solver emits legal moves")
}

/// Boundary first, then for each unsolved configuration one grouped bulk
/// pass over all inner rows and columns.
pub fn solve_n1(state: &CubeState) -> Result<MoveSequence, N1Error> {
    let n = check_shape(state)?;
    let mut seq = solve_boundary(state)?;
    let mut cur = after(state, &seq);
    let idx: Vec<usize> = inner_indices(n).collect();
    for cfg in &N1ClusterState::ALL[1..] {
        let part = bulk_solve_grouped(&cur, &idx, &idx, *cfg)?;
        cur.apply_sequence_mut(&part).expect("legal");
        seq.extend(part);
    }
    Ok(seq)
}

/// Boundary first, then every inner cluster on its own.
pub fn naive_solve_n1(state: &CubeState) -> Result<MoveSequence, N1Error> {
    let n = check_shape(state)?;
    let mut seq = solve_boundary(state)?;
    let cur = after(state, &seq);
    for x in inner_indices(n) {
        for y in inner_indices(n) {
            let c = N1Cluster::new(n, x, y);
            // clusters are independent, so classifying the pre-pass state is enough
            seq.extend(cluster_solution(classify_cluster(&cur, c)?, c));
        }
    }
    Ok(seq)
}

/// Moves some n x n x 1 state needs: with 2n moves available and six
/// configurations per inner cluster, fewer moves cannot reach them all.
pub fn lower_bound_n1(n: usize) -> u64 {
    let inner = (n / 2).saturating_sub(1) as u64;
    counting_lower_bound(&BigUint::from(6u32), inner * inner, 2 * n as u64)
}
