//! Littlewood-Richardson coefficients by brute-force tableau enumeration,
//! kept independent of every polynomial routine so it can serve as an oracle.

use crate::partition::Partition;

/// c^ν_{λμ}: the number of LR tableaux of shape ν/λ and content μ.
///
/// Cells are filled in reading order (rows top to bottom, each row right to
/// left) so that row weakness, column strictness and the lattice-word
/// condition can all be checked on the partial filling.
pub fn lr_oracle(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.weight() != lambda.weight() + mu.weight() {
        return 0;
    }
    if lambda.len() > nu.len() || (0..lambda.len()).any(|r| lambda.part(r) > nu.part(r)) {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..nu.len())
        .flat_map(|r| (lambda.part(r)..nu.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut filling: Vec<Vec<usize>> = (0..nu.len()).map(|r| vec![0; nu.part(r)]).collect();
    let mut counts = vec![0; mu.len() + 1];
    let mut search = Search { lambda, mu, cells: &cells, filling: &mut filling, counts: &mut counts };
    search.count(0)
}

struct Search<'a> {
    lambda: &'a Partition,
    mu: &'a Partition,
    cells: &'a [(usize, usize)],
    filling: &'a mut Vec<Vec<usize>>,
    counts: &'a mut Vec<usize>,
}

impl Search<'_> {
    fn count(&mut self, idx: usize) -> u64 {
        let Some(&(r, c)) = self.cells.get(idx) else {
            return 1;
        };
        // right neighbour, already filled when it is a skew cell
        let hi = if c + 1 < self.filling[r].len() { self.filling[r][c + 1] } else { self.mu.len() };
        // cell above must be strictly smaller when it belongs to the skew shape
        let lo = if r > 0 && c >= self.lambda.part(r - 1) { self.filling[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in lo..=hi {
            if self.counts[v] == self.mu.part(v - 1) {
                continue;
            }
            if v > 1 && self.counts[v] + 1 > self.counts[v - 1] {
                continue;
            }
            self.counts[v] += 1;
            self.filling[r][c] = v;
            total += self.count(idx + 1);
            self.counts[v] -= 1;
        }
        self.filling[r][c] = 0;
        total
    }
}
