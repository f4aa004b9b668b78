//! Small dense exact linear algebra over Q and Z.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{int, Scalar};

pub type Matrix = Vec<Vec<Scalar>>;

pub fn to_matrix(rows: &[Vec<i64>]) -> Matrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| int(x)).collect())
        .collect()
}

/// Row-reduces in place; returns pivot columns.
fn row_echelon(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let v = &f * &m[r][j];
                    m[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    row_echelon(&mut a).len()
}

pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    rank(&to_matrix(rows))
}

pub fn determinant(m: &Matrix) -> Scalar {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Scalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Scalar::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = &a[i][c] / &a[c][c];
                for j in c..n {
                    let v = &f * &a[c][j];
                    a[i][j] -= v;
                }
            }
        }
    }
    det
}

pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            row
        })
        .collect();
    let piv = row_echelon(&mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solves `cols · x = b` where `cols` lists the column vectors; returns
/// `None` when the system is inconsistent. The columns must be independent.
pub fn solve_columns(cols: &[Vec<i64>], b: &[i64]) -> Option<Vec<Scalar>> {
    let l = cols.len();
    let n = b.len();
    let mut aug: Matrix = (0..n)
        .map(|i| {
            let mut row: Vec<Scalar> = cols.iter().map(|c| int(c[i])).collect();
            row.push(int(b[i]));
            row
        })
        .collect();
    let piv = row_echelon(&mut aug);
    if piv.contains(&l) {
        return None;
    }
    assert_eq!(piv.len(), l, "columns must be linearly independent");
    Some((0..l).map(|i| aug[i][l].clone()).collect())
}

pub fn det_i64(rows: &[Vec<i64>]) -> i64 {
    if let Some(d) = bareiss(rows).and_then(|d| i64::try_from(d).ok()) {
        return d;
    }
    let d = determinant(&to_matrix(rows));
    debug_assert!(d.is_integer());
    i64::try_from(d.to_integer()).expect("determinant overflow")
}

/// Fraction-free elimination in `i128`; `None` on overflow.
fn bareiss(rows: &[Vec<i64>]) -> Option<i128> {
    let n = rows.len();
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| a[i][k] != 0) else {
            return Some(0);
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].checked_mul(a[k][k])?.checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                a[i][j] = v / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    if n == 0 {
        return Some(1);
    }
    Some(sign * a[n - 1][n - 1])
}

/// Divides an integer vector by the gcd of its entries.
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g == 0 {
        return v.to_vec();
    }
    v.iter().map(|&x| x / g).collect()
}

/// Integer normal to the hyperplane through `points` (n points in Z^n), via
/// signed maximal minors of the difference matrix. Zero when degenerate.
pub fn hyperplane_normal(points: &[&[i64]]) -> Vec<i64> {
    let n = points[0].len();
    let base = points[0];
    let diffs: Vec<Vec<i64>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = diffs
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let d = if minor.is_empty() { 1 } else { det_i64(&minor) };
            if j % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

/// gcd of all maximal minors of the matrix whose columns are `cols`; this is
/// the index of the lattice they span inside its saturation.
pub fn lattice_index(cols: &[Vec<i64>]) -> u64 {
    let l = cols.len();
    if l == 0 {
        return 1;
    }
    let n = cols[0].len();
    let mut g: i64 = 0;
    for rows in combinations(n, l) {
        let m: Vec<Vec<i64>> = rows
            .iter()
            .map(|&i| cols.iter().map(|c| c[i]).collect())
            .collect();
        g = g.gcd(&det_i64(&m));
    }
    g.unsigned_abs()
}

/// All k-subsets of 0..n in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

pub fn abs_scalar(s: &Scalar) -> Scalar {
    s.abs()
}
