//! Breadth-first enumeration of Eisenstein triples through the Berggren tree.

use super::point::CirclePointQ;
use crate::arith::lattice::M_I64;
use crate::par::Exec;

/// Roots of the four Berggren trees.
pub const ROOTS: [[u64; 3]; 4] = [[8, 7, 13], [3, 5, 7], [5, 3, 7], [7, 8, 13]];

/// Largest `max_c` accepted by the machine-word enumeration.
pub const MAX_C_LIMIT: u64 = 1 << 56;

fn children(v: &[u64; 3], max_c: u64) -> Vec<[u64; 3]> {
    let x = [v[0] as i64, v[1] as i64, v[2] as i64];
    M_I64
        .iter()
        .filter_map(|m| {
            let row = |i: usize| m[i][0] * x[0] + m[i][1] * x[1] + m[i][2] * x[2];
            let c = row(2);
            (c as u64 <= max_c).then(|| [row(0) as u64, row(1) as u64, c as u64])
        })
        .collect()
}

/// All primitive triples `(a, b, c)` with `c ≤ max_c`, sorted by `(c, a)`.
pub fn triples_u64(max_c: u64, exec: Exec) -> Vec<[u64; 3]> {
    assert!(max_c < MAX_C_LIMIT, "max_c too large for the word-size enumeration");
    let mut out: Vec<[u64; 3]> = Vec::new();
    if max_c >= 1 {
        out.push([1, 0, 1]);
        out.push([0, 1, 1]);
    }
    let mut frontier: Vec<[u64; 3]> = ROOTS.iter().copied().filter(|r| r[2] <= max_c).collect();
    while !frontier.is_empty() {
        out.extend_from_slice(&frontier);
        frontier = exec.flat_map(&frontier, |v| children(v, max_c));
    }
    out.sort_unstable_by_key(|t| (t[2], t[0]));
    out
}

/// Every Eisenstein triple with height at most `max_c`, each exactly once, sorted by `(c, a)`.
pub fn enumerate_triples(max_c: u64) -> Vec<CirclePointQ> {
    enumerate_triples_with(max_c, Exec::Sequential)
}

pub fn enumerate_triples_with(max_c: u64, exec: Exec) -> Vec<CirclePointQ> {
    triples_u64(max_c, exec)
        .into_iter()
        .map(|[a, b, c]| CirclePointQ::new(a, b, c).expect("tree produces Eisenstein triples"))
        .collect()
}
