use std::ops::{Add, Index, Mul, Neg, Sub};

use num::Zero;

use super::{int, zero, Matrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vec3(pub [Rational; 3]);

impl Vec3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Vec3([x, y, z])
    }

    pub fn from_i64(v: [i64; 3]) -> Self {
        Vec3(v.map(int))
    }

    pub fn zero() -> Self {
        Vec3([zero(), zero(), zero()])
    }

    /// Standard basis vector `e_{i+1}`.
    pub fn e(i: usize) -> Self {
        let mut v = Self::zero();
        v.0[i] = int(1);
        v
    }

    pub fn from_slice(s: &[Rational]) -> Self {
        Vec3([s[0].clone(), s[1].clone(), s[2].clone()])
    }

    pub fn to_vec(&self) -> Vec<Rational> {
        self.0.to_vec()
    }

    pub fn dot(&self, o: &Vec3) -> Rational {
        &self.0[0] * &o.0[0] + &self.0[1] * &o.0[1] + &self.0[2] * &o.0[2]
    }

    pub fn cross(&self, o: &Vec3) -> Vec3 {
        let [a1, a2, a3] = &self.0;
        let [b1, b2, b3] = &o.0;
        Vec3([a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1])
    }

    pub fn norm2(&self) -> Rational {
        self.dot(self)
    }

    pub fn scale(&self, s: &Rational) -> Vec3 {
        Vec3(self.0.clone().map(|x| x * s))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// The cross-product matrix: `hat(u) v = u × v`.
    pub fn hat(&self) -> Matrix {
        let [a, b, c] = &self.0;
        let z = zero();
        Matrix::from_rows(vec![
            vec![z.clone(), -c.clone(), b.clone()],
            vec![c.clone(), z.clone(), -a.clone()],
            vec![-b.clone(), a.clone(), z],
        ])
    }

    /// Inverse of [`Vec3::hat`]; `None` unless `m` is antisymmetric 3x3.
    pub fn unhat(m: &Matrix) -> Option<Vec3> {
        if m.rows() != 3 || m.cols() != 3 || !(m + &m.transpose()).is_zero() {
            return None;
        }
        Some(Vec3([m[(2, 1)].clone(), m[(0, 2)].clone(), m[(1, 0)].clone()]))
    }
}

impl Index<usize> for Vec3 {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl Add for &Vec3 {
    type Output = Vec3;
    fn add(self, o: &Vec3) -> Vec3 {
        Vec3([&self.0[0] + &o.0[0], &self.0[1] + &o.0[1], &self.0[2] + &o.0[2]])
    }
}

impl Sub for &Vec3 {
    type Output = Vec3;
    fn sub(self, o: &Vec3) -> Vec3 {
        Vec3([&self.0[0] - &o.0[0], &self.0[1] - &o.0[1], &self.0[2] - &o.0[2]])
    }
}

impl Neg for &Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3(self.0.clone().map(|x| -x))
    }
}

impl Mul<&Vec3> for &Rational {
    type Output = Vec3;
    fn mul(self, v: &Vec3) -> Vec3 {
        v.scale(self)
    }
}
