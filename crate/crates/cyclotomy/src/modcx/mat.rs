//! Small integer matrices (m <= 3) acting on lattices.

use crate::linalg::{Error, Result};

/// Row-major square integer matrix.
pub type IntMat = Vec<Vec<i64>>;

pub fn identity(m: usize) -> IntMat {
    (0..m)
        .map(|i| (0..m).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn from_cols(cols: &[Vec<i64>]) -> IntMat {
    let m = cols.len();
    (0..m).map(|i| (0..m).map(|j| cols[j][i]).collect()).collect()
}

pub fn col(g: &IntMat, j: usize) -> Vec<i64> {
    (0..g.len()).map(|i| g[i][j]).collect()
}

pub fn neg(g: &IntMat) -> IntMat {
    g.iter().map(|r| r.iter().map(|x| -x).collect()).collect()
}

pub fn mul(a: &IntMat, b: &IntMat) -> IntMat {
    let m = a.len();
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| (0..m).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn mat_vec(g: &IntMat, v: &[i64]) -> Vec<i64> {
    g.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Row vector times matrix.
pub fn vec_mat(v: &[i64], g: &IntMat) -> Vec<i64> {
    (0..g.len())
        .map(|j| (0..g.len()).map(|k| v[k] * g[k][j]).sum())
        .collect()
}

pub fn det(g: &IntMat) -> i64 {
    match g.len() {
        0 => 1,
        1 => g[0][0],
        2 => g[0][0] * g[1][1] - g[0][1] * g[1][0],
        3 => {
            g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
                - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
                + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0])
        }
        _ => unimplemented!("determinant for m > 3"),
    }
}

/// Inverse of a unimodular matrix (integer entries).
pub fn inv(g: &IntMat) -> Result<IntMat> {
    let d = det(g);
    if d != 1 && d != -1 {
        return Err(Error::InvalidArgument(format!(
            "matrix is not unimodular (det {d})"
        )));
    }
    let m = g.len();
    let adj: IntMat = match m {
        1 => vec![vec![1]],
        2 => vec![vec![g[1][1], -g[0][1]], vec![-g[1][0], g[0][0]]],
        3 => {
            let c = |i: usize, j: usize| -> i64 {
                let rows: Vec<usize> = (0..3).filter(|&r| r != i).collect();
                let cols: Vec<usize> = (0..3).filter(|&c| c != j).collect();
                let minor = g[rows[0]][cols[0]] * g[rows[1]][cols[1]]
                    - g[rows[0]][cols[1]] * g[rows[1]][cols[0]];
                if (i + j).is_multiple_of(2) {
                    minor
                } else {
                    -minor
                }
            };
            // adjugate = transpose of cofactor matrix
            (0..3)
                .map(|i| (0..3).map(|j| c(j, i)).collect())
                .collect()
        }
        _ => unimplemented!("inverse for m > 3"),
    };
    Ok(adj
        .into_iter()
        .map(|row| row.into_iter().map(|x| x * d).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        let g = vec![vec![0, -1, 0], vec![1, -1, 0], vec![2, 3, 1]];
        assert_eq!(det(&g).abs(), 1);
        let gi = inv(&g).unwrap();
        assert_eq!(mul(&g, &gi), identity(3));
    }
}
