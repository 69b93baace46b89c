//! Dense linear algebra over the prime field `F_p`.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{mul_mod, pow_mod};

pub(crate) type Matrix = Vec<Vec<u64>>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Field {
    pub p: u64,
}

impl Field {
    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.p)
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        pow_mod(a, self.p - 2, self.p)
    }

    /// Reduced row echelon form in place; zero rows are dropped. Returns the
    /// pivot column of each remaining row.
    pub fn rref(self, rows: &mut Matrix) -> Vec<usize> {
        let width = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..width {
            let Some(found) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
                continue;
            };
            rows.swap(r, found);
            let inv = self.inv(rows[r][col]);
            for x in rows[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..rows.len() {
                if i != r && rows[i][col] != 0 {
                    let f = rows[i][col];
                    for c in col..width {
                        let t = self.mul(f, rows[r][c]);
                        rows[i][c] = self.sub(rows[i][c], t);
                    }
                }
            }
            pivots.push(col);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        pivots
    }

    /// Basis of `{u : u A = 0}` for a square `A`.
    pub fn left_nullspace(self, a: &Matrix) -> Matrix {
        let n = a.len();
        // u A = 0  <=>  A^T u^T = 0
        let mut t: Matrix = (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect();
        let pivots = self.rref(&mut t);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; n];
                v[f] = 1;
                for (row, &pc) in t.iter().zip(&pivots) {
                    v[pc] = self.neg(row[f]);
                }
                v
            })
            .collect()
    }

    /// Characteristic polynomial `det(x I - A)`, coefficients from the
    /// constant term upwards, via reduction to Hessenberg form.
    pub fn charpoly(self, a: &Matrix) -> Vec<u64> {
        let n = a.len();
        let mut h = a.clone();
        for j in 0..n.saturating_sub(2) {
            let Some(i) = (j + 1..n).find(|&i| h[i][j] != 0) else {
                continue;
            };
            if i != j + 1 {
                h.swap(i, j + 1);
                for row in h.iter_mut() {
                    row.swap(i, j + 1);
                }
            }
            let inv = self.inv(h[j + 1][j]);
            for i in j + 2..n {
                if h[i][j] == 0 {
                    continue;
                }
                let u = self.mul(h[i][j], inv);
                for c in 0..n {
                    let t = self.mul(u, h[j + 1][c]);
                    h[i][c] = self.sub(h[i][c], t);
                }
                for row in h.iter_mut() {
                    let t = self.mul(u, row[i]);
                    row[j + 1] = self.add(row[j + 1], t);
                }
            }
        }
        // p_m = (x - h_mm) p_(m-1) - sum_i h_im (h_(m,m-1) ... h_(i+1,i)) p_(i-1)
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for m in 0..n {
            let prev = &polys[m];
            let mut next = vec![0u64; m + 2];
            for (k, &c) in prev.iter().enumerate() {
                next[k + 1] = self.add(next[k + 1], c);
                next[k] = self.sub(next[k], self.mul(h[m][m], c));
            }
            let mut t = 1u64;
            for i in (0..m).rev() {
                t = self.mul(t, h[i + 1][i]);
                let f = self.mul(h[i][m], t);
                if f == 0 {
                    continue;
                }
                for (k, &c) in polys[i].iter().enumerate() {
                    next[k] = self.sub(next[k], self.mul(f, c));
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    pub fn eval(self, poly: &[u64], x: u64) -> u64 {
        poly.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// Distinct roots in `F_p`, ascending. Exhaustive evaluation; `p` is
    /// small for every group the engine handles.
    pub fn roots(self, poly: &[u64]) -> Vec<u64> {
        (0..self.p).filter(|&x| self.eval(poly, x) == 0).collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(self, v: &[u64], a: &Matrix) -> Vec<u64> {
        let n = a.first().map_or(0, Vec::len);
        let mut out = vec![0u64; n];
        for (k, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (o, &y) in out.iter_mut().zip(&a[k]) {
                *o = self.add(*o, self.mul(x, y));
            }
        }
        out
    }
}
