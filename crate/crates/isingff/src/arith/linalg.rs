use num::Zero;

use super::rational::Q;
use crate::error::{Error, Result};

/// Unique solution of the (possibly overdetermined) system `rows · x = rhs`.
pub fn solve_exact(mut rows: Vec<Vec<Q>>, mut rhs: Vec<Q>) -> Result<Vec<Q>> {
    let n = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        rhs.swap(r, p);
        let inv = rows[r][c].recip();
        for j in c..n {
            rows[r][j] = &rows[r][j] * &inv;
        }
        rhs[r] = &rhs[r] * &inv;
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for j in c..n {
                let d = &f * &rows[r][j];
                rows[i][j] -= d;
            }
            let d = &f * &rhs[r];
            rhs[i] -= d;
        }
        pivots.push(c);
        r += 1;
    }
    if pivots.len() < n {
        return Err(Error::Linear(format!("rank {} < {} unknowns", pivots.len(), n)));
    }
    if let Some(i) = (r..rows.len()).find(|&i| !rhs[i].is_zero()) {
        return Err(Error::Linear(format!("inconsistent equation {i}")));
    }
    Ok(rhs[..n].to_vec())
}
