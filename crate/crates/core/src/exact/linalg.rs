use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num::{One, Zero};

use super::{fmt_q, int, one, zero, Rational, Vec3};

/// Dense rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix {
            rows,
            cols,
            data: entries.iter().map(|&x| int(x)).collect(),
        }
    }

    pub fn from_cols(cols: &[Vec<Rational>]) -> Self {
        Self::from_rows(cols.to_vec()).transpose()
    }

    pub fn diag(entries: &[Rational]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vec<Rational> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .sum()
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn mul_vec3(&self, v: &Vec3) -> Vec3 {
        Vec3::from_slice(&self.mul_vec(&v.0))
    }

    pub fn pow(&self, n: u32) -> Matrix {
        let mut r = Matrix::identity(self.rows);
        for _ in 0..n {
            r = &r * self;
        }
        r
    }

    pub fn commutator(&self, o: &Matrix) -> Matrix {
        &(self * o) - &(o * self)
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut b = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                b[(i, j)] = self[(r0 + i, c0 + j)].clone();
            }
        }
        b
    }

    /// Stacks `self` on top of `o`.
    pub fn vstack(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Matrix {
            rows: self.rows + o.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let v = &m[(i, j)] - &f * &m[(r, j)];
                    m[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn det(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = self.rows;
        let mut d = one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return zero();
            };
            if p != c {
                m.swap_rows(p, c);
                d = -d;
            }
            let piv = m[(c, c)].clone();
            d *= &piv;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] / &piv;
                for j in c..n {
                    let v = &m[(i, j)] - &f * &m[(c, j)];
                    m[(i, j)] = v;
                }
            }
        }
        d
    }

    pub fn inverse(&self) -> Option<Matrix> {
        let n = self.rows;
        if n != self.cols {
            return None;
        }
        let mut aug = Matrix::zeros(n, 2 * n);
        aug.set_block(0, 0, self);
        aug.set_block(0, n, &Matrix::identity(n));
        let (r, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        Some(r.block(0, n, n, n))
    }

    /// Some solution of `self · x = rhs`, if one exists.
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        aug.set_block(0, 0, self);
        for (i, v) in rhs.iter().enumerate() {
            aug[(i, self.cols)] = v.clone();
        }
        let (r, piv) = aug.rref();
        if piv.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![zero(); self.cols];
        for (i, &c) in piv.iter().enumerate() {
            x[c] = r[(i, self.cols)].clone();
        }
        Some(x)
    }
}

/// Basis of the right nullspace of `m`.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Rational>> {
    let (r, piv) = m.rref();
    let free: Vec<usize> = (0..m.cols()).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![zero(); m.cols()];
            v[f] = one();
            for (i, &p) in piv.iter().enumerate() {
                v[p] = -r[(i, f)].clone();
            }
            v
        })
        .collect()
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&-one())
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let r: Vec<String> = self.row(i).iter().map(fmt_q).collect();
                format!("[{}]", r.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// A linear subspace of `Q^n`, stored by its reduced echelon basis so that
/// equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Self {
        if vectors.is_empty() {
            return Subspace {
                ambient,
                basis: Vec::new(),
            };
        }
        let (r, piv) = Matrix::from_rows(vectors.to_vec()).rref();
        Subspace {
            ambient,
            basis: (0..piv.len()).map(|i| r.row(i)).collect(),
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Self::span(ambient, &[])
    }

    pub fn kernel_of(m: &Matrix) -> Self {
        Self::span(m.cols(), &kernel_basis(m))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut vs = self.basis.clone();
        vs.push(v.to_vec());
        Subspace::span(self.ambient, &vs).dim() == self.dim()
    }

    pub fn contains_space(&self, o: &Subspace) -> bool {
        self.sum(o).dim() == self.dim()
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(o.basis.iter().cloned());
        Subspace::span(self.ambient, &vs)
    }

    pub fn with(&self, extra: &[Vec<Rational>]) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(extra.iter().cloned());
        Subspace::span(self.ambient, &vs)
    }

    /// Orthogonal complement for the bilinear form with Gram matrix `g`.
    pub fn perp(&self, g: &Matrix) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::span(self.ambient, &Matrix::identity(self.ambient).rows_vec());
        }
        let rows = Matrix::from_rows(self.basis.clone());
        Subspace::kernel_of(&(&rows * g))
    }
}

impl Matrix {
    pub fn rows_vec(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = &self[(i, j)];
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }
}

impl Subspace {
    pub fn intersect(&self, o: &Subspace) -> Subspace {
        if self.dim() == 0 || o.dim() == 0 {
            return Subspace::zero(self.ambient);
        }
        let mut cols = self.basis.clone();
        cols.extend(o.basis.iter().map(|v| v.iter().map(|x| -x.clone()).collect()));
        let m = Matrix::from_cols(&cols);
        let k = self.dim();
        let vs: Vec<Vec<Rational>> = kernel_basis(&m)
            .iter()
            .map(|coef| {
                let mut v = vec![zero(); self.ambient];
                for (c, b) in coef[..k].iter().zip(&self.basis) {
                    for (vi, bi) in v.iter_mut().zip(b) {
                        *vi += c * bi;
                    }
                }
                v
            })
            .collect();
        Subspace::span(self.ambient, &vs)
    }
}

/// Counts of positive, negative and zero squares of the symmetric form `m`,
/// by congruence diagonalization (Sylvester's law of inertia).
pub fn inertia(m: &Matrix) -> (usize, usize, usize) {
    let n = m.rows();
    let mut a = m.clone();
    let (mut pos, mut neg) = (0, 0);
    let mut live: Vec<usize> = (0..n).collect();
    while !live.is_empty() {
        let pivot = live.iter().copied().find(|&i| !a[(i, i)].is_zero());
        let k = match pivot {
            Some(k) => k,
            None => {
                // zero diagonal: e_i + e_j has square 2a_ij, nonzero if a_ij is
                let pair = live
                    .iter()
                    .flat_map(|&i| live.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !a[(i, j)].is_zero());
                let Some((i, j)) = pair else { break };
                for c in 0..n {
                    let v = &a[(i, c)] + &a[(j, c)];
                    a[(i, c)] = v;
                }
                for r in 0..n {
                    let v = &a[(r, i)] + &a[(r, j)];
                    a[(r, i)] = v;
                }
                i
            }
        };
        let d = a[(k, k)].clone();
        if d > zero() {
            pos += 1;
        } else {
            neg += 1;
        }
        live.retain(|&i| i != k);
        for &i in &live {
            let f = &a[(i, k)] / &d;
            if f.is_zero() {
                continue;
            }
            for c in 0..n {
                let v = &a[(i, c)] - &(&f * &a[(k, c)]);
                a[(i, c)] = v;
            }
            for r in 0..n {
                let v = &a[(r, i)] - &(&f * &a[(r, k)]);
                a[(r, i)] = v;
            }
        }
    }
    (pos, neg, n - pos - neg)
}

/// Coefficients `c₀..cₙ` (lowest degree first) of `det(tI − m)`, by the
/// Faddeev–LeVerrier recursion.
pub fn char_poly(m: &Matrix) -> Vec<Rational> {
    let n = m.rows();
    let mut c = vec![zero(); n + 1];
    c[n] = one();
    let mut mk = Matrix::zeros(n, n);
    let id = Matrix::identity(n);
    for k in 1..=n {
        mk = &(m * &mk) + &id.scale(&c[n - k + 1]);
        let t = (m * &mk).trace();
        c[n - k] = -t / int(k as i64);
    }
    c
}

/// Rational roots of a polynomial (coefficients lowest degree first) with
/// multiplicities, plus the degree of the factor left without rational roots.
pub fn rational_roots(coeffs: &[Rational]) -> (Vec<(Rational, usize)>, usize) {
    use num::{BigInt, Integer, Signed};
    let mut p: Vec<Rational> = coeffs.to_vec();
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    let mut roots = Vec::new();
    let mut zeros = 0;
    while p.len() > 1 && p[0].is_zero() {
        p.remove(0);
        zeros += 1;
    }
    if zeros > 0 {
        roots.push((zero(), zeros));
    }
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let n = n.abs();
        let mut ds = Vec::new();
        let mut d = BigInt::one();
        while &d * &d <= n {
            if (&n % &d).is_zero() {
                ds.push(d.clone());
                ds.push(&n / &d);
            }
            d += 1;
        }
        ds
    };
    let (Some(a0), Some(an)) = (ints.first(), ints.last()) else {
        return (roots, 0);
    };
    let mut cands: Vec<Rational> = Vec::new();
    for num in divisors(a0) {
        for den in divisors(an) {
            let r = Rational::new(num.clone(), den);
            cands.push(r.clone());
            cands.push(-r);
        }
    }
    cands.sort();
    cands.dedup();
    for r in cands {
        let mut mult = 0;
        loop {
            if p.len() <= 1 {
                break;
            }
            // synthetic division by (t − r)
            let deg = p.len() - 1;
            let mut quo = vec![zero(); deg];
            let mut acc = zero();
            for i in (0..=deg).rev() {
                acc = &acc * &r + &p[i];
                if i > 0 {
                    quo[i - 1] = acc.clone();
                }
            }
            if !acc.is_zero() {
                break;
            }
            p = quo;
            mult += 1;
        }
        if mult > 0 {
            roots.push((r, mult));
        }
    }
    (roots, p.len() - 1)
}
