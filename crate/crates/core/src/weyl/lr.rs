//! Littlewood–Richardson coefficients by the tableau rule.

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// `c^λ_{μν}`: the number of skew tableaux of shape `λ/μ` and content `ν`,
/// semistandard, whose reverse reading word (rows top to bottom, each read
/// right to left) is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    if mu.size() + nu.size() != lambda.size() {
        return Err(Error::IncomparableSizes(mu.size() + nu.size(), lambda.size()));
    }
    if mu.len() > lambda.len() || (0..mu.len()).any(|i| mu.part(i) > lambda.part(i)) {
        return Ok(0);
    }
    // cells in reverse reading order
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|r| (mu.part(r)..lambda.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut filling = vec![Vec::new(); lambda.len()];
    for (r, row) in filling.iter_mut().enumerate() {
        *row = vec![0usize; lambda.part(r)];
    }
    let mut counts = vec![0usize; nu.len()];
    Ok(fill(0, &cells, lambda, mu, nu, &mut filling, &mut counts))
}

fn fill(
    idx: usize,
    cells: &[(usize, usize)],
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    filling: &mut [Vec<usize>],
    counts: &mut [usize],
) -> u64 {
    let Some(&(r, c)) = cells.get(idx) else {
        return 1;
    };
    let mut total = 0;
    for v in 0..nu.len() {
        if counts[v] == nu.part(v) {
            continue;
        }
        // lattice condition on the prefix read so far
        if v > 0 && counts[v] + 1 > counts[v - 1] {
            continue;
        }
        // rows weakly increase left to right: the cell to the right was filled first
        if c + 1 < lambda.part(r) && filling[r][c + 1] < v {
            continue;
        }
        // columns strictly increase downward
        if r > 0 && c >= mu.part(r - 1) && filling[r - 1][c] >= v {
            continue;
        }
        filling[r][c] = v;
        counts[v] += 1;
        total += fill(idx + 1, cells, lambda, mu, nu, filling, counts);
        counts[v] -= 1;
    }
    total
}
