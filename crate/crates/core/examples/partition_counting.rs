//! The dimension count behind the mixed bases: partitions in a box times
//! partitions with parts in [n-k+1, n] give all partitions with at most k parts.

use symquot::partition::{count_table, gaussian_binomial};

fn main() -> symquot::Result<()> {
    let (k, n) = (3, 6);
    println!("[{n} choose {k}]_q = {}", gaussian_binomial(n, k)?);
    println!("{:>6} {:>5} {:>5} {:>7} {:>5}", "degree", "box", "band", "product", "P_k");
    for row in count_table(k, n, 12)? {
        println!(
            "{:>6} {:>5} {:>5} {:>7} {:>5}",
            row.degree, row.boxed, row.banded, row.product, row.at_most_k
        );
        assert!(row.holds());
    }
    Ok(())
}
