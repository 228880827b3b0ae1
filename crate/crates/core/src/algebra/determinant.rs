use std::collections::HashMap;

use super::Polynomial;

/// Exact determinant of a square matrix of polynomials.
///
/// Laplace expansion along the rows, memoized on the set of columns already
/// used, so the cost is `O(n·2ⁿ)` polynomial products rather than `n!`.
pub fn determinant(matrix: &[Vec<Polynomial>]) -> Polynomial {
    let n = matrix.len();
    assert!(matrix.iter().all(|row| row.len() == n), "matrix must be square");
    assert!(n < 32, "determinant size {n} is out of range");
    let mut memo = HashMap::new();
    minor(matrix, 0, 0, &mut memo)
}

fn minor(matrix: &[Vec<Polynomial>], row: usize, used: u32, memo: &mut HashMap<u32, Polynomial>) -> Polynomial {
    let n = matrix.len();
    if row == n {
        return Polynomial::one();
    }
    if let Some(cached) = memo.get(&used) {
        return cached.clone();
    }
    let mut acc = Polynomial::zero();
    // sign of a column is the parity of the free columns to its left
    let mut free_before = 0;
    for col in 0..n {
        if used & (1 << col) != 0 {
            continue;
        }
        let entry = &matrix[row][col];
        if !entry.is_zero() {
            let rest = minor(matrix, row + 1, used | (1 << col), memo);
            let term = entry * &rest;
            if free_before % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        free_before += 1;
    }
    memo.insert(used, acc.clone());
    acc
}
