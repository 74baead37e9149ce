//! Naive dense brute force for the lower central series of the free
//! associative algebra.
//!
//! Works in a single total grading with dense integer rows indexed by words
//! read as base-`n` numbers. Shares no code with `lcsq-core`.

use std::fmt;

/// Raised when an intermediate entry leaves the `i64` range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Overflow {
    pub degree: usize,
    pub level: usize,
}

impl fmt::Display for Overflow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "oracle arithmetic overflow at L_{} in degree {}",
            self.level, self.degree
        )
    }
}

impl std::error::Error for Overflow {}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Dense row echelon form with primitive integer rows.
///
/// Alongside the reduced rows it keeps the original inserted vectors that
/// raised the rank; those span the same space and keep small entries, so
/// they are what gets bracketed at the next level.
#[derive(Debug, Clone)]
pub struct DenseEchelon {
    dim: usize,
    rows: Vec<(usize, Vec<i64>)>,
    spanning: Vec<Vec<i64>>,
}

impl DenseEchelon {
    pub fn new(dim: usize) -> Self {
        DenseEchelon {
            dim,
            rows: Vec::new(),
            spanning: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Independent input vectors spanning the space, in insertion order.
    pub fn spanning(&self) -> &[Vec<i64>] {
        &self.spanning
    }

    /// Reduces `v` against the rows and keeps it if it is independent.
    /// Returns `Ok(true)` when the rank grew.
    pub fn insert(&mut self, v: Vec<i64>) -> Result<bool, ()> {
        assert_eq!(v.len(), self.dim);
        let original = v.clone();
        let mut v = v;
        for (piv, row) in &self.rows {
            if v[*piv] == 0 {
                continue;
            }
            let g = gcd(v[*piv], row[*piv]);
            let a = (row[*piv] / g) as i128;
            let b = (v[*piv] / g) as i128;
            let mut largest = 0i64;
            for c in 0..self.dim {
                let x = a * v[c] as i128 - b * row[c] as i128;
                v[c] = i64::try_from(x).map_err(|_| ())?;
                largest = largest.max(v[c].abs());
            }
            if largest > 1 << 24 {
                let content = v.iter().fold(0, |acc, &x| gcd(acc, x));
                if content > 1 {
                    v.iter_mut().for_each(|x| *x /= content);
                }
            }
        }
        let Some(piv) = v.iter().position(|&c| c != 0) else {
            return Ok(false);
        };
        let content = v.iter().fold(0, |acc, &x| gcd(acc, x));
        let sign = if v[piv] < 0 { -1 } else { 1 };
        for x in v.iter_mut() {
            *x = *x / content * sign;
        }
        let pos = self.rows.partition_point(|(p, _)| *p < piv);
        self.rows.insert(pos, (piv, v));
        self.spanning.push(original);
        Ok(true)
    }
}

/// Index of the concatenation `w·u` given the indices of `w` and `u`.
fn concat(w: usize, u: usize, u_len: usize, n: usize) -> usize {
    w * n.pow(u_len as u32) + u
}

/// Dense coordinates of `[w, u]` where `w` is a word of length `w_len`
/// and `u` a dense vector of words of length `u_len`.
fn bracket_word(n: usize, w: usize, w_len: usize, u: &[i64], u_len: usize) -> Option<Vec<i64>> {
    let dim = n.pow((w_len + u_len) as u32);
    let mut out = vec![0i64; dim];
    for (j, &c) in u.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let left = concat(w, j, u_len, n);
        out[left] = out[left].checked_add(c)?;
        let right = concat(j, w, w_len, n);
        out[right] = out[right].checked_sub(c)?;
    }
    Some(out)
}

/// Total-degree dimensions of `L_m(A_n)` for `1 <= m <= m_max` and
/// `0 <= d <= deg_max`: `dims[m - 1][d]`.
pub fn lcs_dims(n: usize, m_max: usize, deg_max: usize) -> Result<Vec<Vec<usize>>, Overflow> {
    // bases[d] holds an echelon basis of the previous level in degree d.
    let mut prev: Vec<DenseEchelon> = (0..=deg_max)
        .map(|d| {
            let dim = n.pow(d as u32);
            let mut e = DenseEchelon::new(dim);
            for i in 0..dim {
                let mut v = vec![0; dim];
                v[i] = 1;
                e.insert(v).expect("unit vectors never overflow");
            }
            e
        })
        .collect();
    let mut dims = vec![prev.iter().map(|e| e.rank()).collect::<Vec<_>>()];
    for level in 2..=m_max {
        let mut next = Vec::with_capacity(deg_max + 1);
        for d in 0..=deg_max {
            let mut e = DenseEchelon::new(n.pow(d as u32));
            for w_len in 1..d {
                let u_len = d - w_len;
                for w in 0..n.pow(w_len as u32) {
                    for u in prev[u_len].spanning() {
                        let overflow = Overflow { degree: d, level };
                        let g = bracket_word(n, w, w_len, u, u_len).ok_or(overflow.clone())?;
                        e.insert(g).map_err(|_| overflow)?;
                    }
                }
            }
            next.push(e);
        }
        dims.push(next.iter().map(|e| e.rank()).collect());
        prev = next;
    }
    Ok(dims)
}

/// Total-degree dimensions of `B_m(A_n) = L_m / L_{m+1}`: `dims[m - 1][d]`
/// for `1 <= m <= m_max`.
pub fn b_dims(n: usize, m_max: usize, deg_max: usize) -> Result<Vec<Vec<usize>>, Overflow> {
    let l = lcs_dims(n, m_max + 1, deg_max)?;
    Ok((0..m_max)
        .map(|m| (0..=deg_max).map(|d| l[m][d] - l[m + 1][d]).collect())
        .collect())
}

/// Total-degree dimensions of `Z`, the image of `A[[A,A],A]A` in `A/[A,A]`,
/// for `0 <= d <= deg_max`.
pub fn z_dims(n: usize, deg_max: usize) -> Result<Vec<usize>, Overflow> {
    let mut out = Vec::with_capacity(deg_max + 1);
    for d in 0..=deg_max {
        let dim = n.pow(d as u32);
        let mut comm = DenseEchelon::new(dim);
        for a in 1..d {
            for w1 in 0..n.pow(a as u32) {
                for w2 in 0..n.pow((d - a) as u32) {
                    let mut u = vec![0; n.pow((d - a) as u32)];
                    u[w2] = 1;
                    let overflow = Overflow {
                        degree: d,
                        level: 2,
                    };
                    let g = bracket_word(n, w1, a, &u, d - a).ok_or(overflow.clone())?;
                    comm.insert(g).map_err(|_| overflow)?;
                }
            }
        }
        let base = comm.rank();
        let mut total = comm;
        // w1 [[w2, w3], w4] w5 with w2, w3, w4 nonempty.
        for l1 in 0..=d {
            for l2 in 1..=d {
                for l3 in 1..=d {
                    for l4 in 1..=d {
                        let used = l1 + l2 + l3 + l4;
                        if used > d {
                            continue;
                        }
                        let l5 = d - used;
                        for w2 in 0..n.pow(l2 as u32) {
                            for w3 in 0..n.pow(l3 as u32) {
                                let mut unit = vec![0; n.pow(l3 as u32)];
                                unit[w3] = 1;
                                let inner = bracket_word(n, w2, l2, &unit, l3)
                                    .expect("single commutator of words");
                                let inner_len = l2 + l3;
                                for w4 in 0..n.pow(l4 as u32) {
                                    // [inner, w4] = -[w4, inner]
                                    let mut x = bracket_word(n, w4, l4, &inner, inner_len)
                                        .expect("double commutator of words");
                                    x.iter_mut().for_each(|c| *c = -*c);
                                    let x_len = inner_len + l4;
                                    for w1 in 0..n.pow(l1 as u32) {
                                        for w5 in 0..n.pow(l5 as u32) {
                                            let mut v = vec![0; dim];
                                            for (j, &c) in x.iter().enumerate() {
                                                if c != 0 {
                                                    let left = concat(w1, j, x_len, n);
                                                    v[concat(left, w5, l5, n)] += c;
                                                }
                                            }
                                            total.insert(v).map_err(|_| Overflow {
                                                degree: d,
                                                level: 0,
                                            })?;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        out.push(total.rank() - base);
    }
    Ok(out)
}
