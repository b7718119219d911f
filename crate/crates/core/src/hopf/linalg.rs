//! Small exact linear algebra over ℚ(t) for triangular-family expansions
//! and change of PBW coordinates.

use crate::coeff::RatFunc;

pub enum SolveOutcome {
    Unique(Vec<RatFunc>),
    NoSolution,
    Underdetermined,
}

/// Solve Σ λ_j · columns[j] = rhs exactly.
///
/// Reports Underdetermined when the columns are linearly dependent (whether
/// or not a solution exists), NoSolution when the system is inconsistent.
pub fn solve_unique(columns: &[Vec<RatFunc>], rhs: &[RatFunc]) -> SolveOutcome {
    let ncols = columns.len();
    let nrows = rhs.len();
    debug_assert!(columns.iter().all(|c| c.len() == nrows));
    // augmented matrix, rows major
    let mut m: Vec<Vec<RatFunc>> = (0..nrows)
        .map(|r| {
            let mut row: Vec<RatFunc> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut row = 0usize;
    for col in 0..ncols {
        let Some(p) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip().expect("pivot nonzero");
        for c in col..=ncols {
            m[row][c] = &m[row][c] * &inv;
        }
        for r in 0..nrows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=ncols {
                    let delta = &m[row][c] * &f;
                    m[r][c] = &m[r][c] - &delta;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == nrows {
            break;
        }
    }
    // inconsistent?
    for r in row..nrows {
        if !m[r][ncols].is_zero() {
            return SolveOutcome::NoSolution;
        }
    }
    if pivot_cols.len() < ncols {
        return SolveOutcome::Underdetermined;
    }
    let mut sol = vec![RatFunc::zero(); ncols];
    for (r, &c) in pivot_cols.iter().enumerate() {
        sol[c] = m[r][ncols].clone();
    }
    SolveOutcome::Unique(sol)
}

/// Rank of the column family.
pub fn rank(columns: &[Vec<RatFunc>]) -> usize {
    if columns.is_empty() {
        return 0;
    }
    let nrows = columns[0].len();
    let mut m: Vec<Vec<RatFunc>> = (0..nrows)
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    let ncols = columns.len();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].recip().expect("pivot nonzero");
        for c in col..ncols {
            m[rank][c] = &m[rank][c] * &inv;
        }
        for r in 0..nrows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..ncols {
                    let delta = &m[rank][c] * &f;
                    m[r][c] = &m[r][c] - &delta;
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}
