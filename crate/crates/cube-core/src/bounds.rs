//! Counting lower bounds on the diameter of a move graph.

use num_bigint::BigUint;
use num_traits::One;

/// Smallest `k` such that `moves^(k+1) >= states`, where `states` is given
/// as `per_cluster^clusters`. A ball of radius `k` in a graph of out-degree
/// `moves` holds fewer than `moves^(k+1)` nodes, so some state needs at
/// least this many moves.
///
/// The floating estimate decides the answer unless it lands within 1e-9 of
/// an integer, in which case the comparison is redone in exact arithmetic.
pub fn counting_lower_bound(per_cluster: &BigUint, clusters: u64, moves: u64) -> u64 {
    if clusters == 0 || *per_cluster <= BigUint::one() {
        return 0;
    }
    let t = clusters as f64 * ln_big(per_cluster) / (moves as f64).ln();
    let r = t.round();
    let c = if (t - r).abs() < 1e-9 {
        let r = r as u64;
        let lhs = BigUint::from(moves).pow(r as u32);
        let rhs = per_cluster.pow(clusters as u32);
        if lhs >= rhs {
            r
        } else {
            r + 1
        }
    } else {
        t.ceil() as u64
    };
    c.saturating_sub(1)
}

/// Natural log of a big integer, good to double precision.
pub fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_string().parse::<f64>().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top: BigUint = x >> shift;
    top.to_string().parse::<f64>().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}
