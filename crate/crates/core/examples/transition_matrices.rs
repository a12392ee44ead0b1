//! Transition matrices between the classical families, in full and
//! restricted to the k x (n-k) box.

use symquot::bases::{transition_matrix, BasisFamily, TransitionMatrix};

fn show(t: &TransitionMatrix) {
    println!("{} -> {} (degree {}, k = {})", t.row_family, t.col_family, t.degree, t.k);
    for (lambda, row) in t.rows.iter().zip(&t.entries) {
        let cells: Vec<String> = row.iter().map(|c| format!("{:>4}", c.to_string())).collect();
        println!("  {:>8} | {}", lambda.to_string(), cells.join(" "));
    }
    println!("  unitriangular: {}", t.is_unitriangular_under_dominance());
}

fn main() -> symquot::Result<()> {
    show(&transition_matrix(BasisFamily::Schur, BasisFamily::Monomial, 4, 4, None)?);
    show(&transition_matrix(BasisFamily::ElementaryConjugate, BasisFamily::Schur, 4, 4, None)?);
    show(&transition_matrix(BasisFamily::Monomial, BasisFamily::PowerSum, 4, 4, None)?);
    show(&transition_matrix(BasisFamily::Schur, BasisFamily::Monomial, 4, 2, Some(5))?);
    Ok(())
}
