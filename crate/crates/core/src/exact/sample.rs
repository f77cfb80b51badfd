use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{int, one, q, Matrix, Rational, Vec3};
use crate::octonion::Quaternion;

/// Cayley transform `(I − S)(I + S)⁻¹` of `S = hat(s)`; always in SO(3).
pub fn cayley(s: &Vec3) -> Matrix {
    let i = Matrix::identity(3);
    let h = s.hat();
    let inv = (&i + &h).inverse().expect("I + S is invertible for antisymmetric S");
    &(&i - &h) * &inv
}

pub fn sample_so3(seed: u64) -> Matrix {
    Sampler::new(seed).so3()
}

/// `((1 − |w|²) + 2w) / (1 + |w|²)`, a unit quaternion for every rational `w`.
pub fn sample_unit_quaternion(w: &Vec3) -> Quaternion {
    let n = w.norm2();
    let d = &one() + &n;
    Quaternion::new(
        (&one() - &n) / &d,
        &(&int(2) * &w[0]) / &d,
        &(&int(2) * &w[1]) / &d,
        &(&int(2) * &w[2]) / &d,
    )
}

/// Inverse stereographic projection from the north pole: a rational point of
/// S² for every rational `(u, v)`, never equal to `e₃`.
pub fn stereographic(u: &Rational, v: &Rational) -> Vec3 {
    let n = u * u + v * v;
    let d = &one() + &n;
    Vec3::new(
        &(&int(2) * u) / &d,
        &(&int(2) * v) / &d,
        (&n - &one()) / &d,
    )
}

/// Deterministic source of small rationals and exact group elements.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rational(&mut self) -> Rational {
        let n = self.rng.gen_range(-6i64..=6);
        let d = self.rng.gen_range(1i64..=5);
        q(n, d)
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if r != int(0) {
                return r;
            }
        }
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn vec3(&mut self) -> Vec3 {
        Vec3::new(self.rational(), self.rational(), self.rational())
    }

    pub fn vector(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.rational()).collect()
    }

    pub fn so3(&mut self) -> Matrix {
        cayley(&self.vec3())
    }

    pub fn unit_quaternion(&mut self) -> Quaternion {
        sample_unit_quaternion(&self.vec3())
    }

    /// A rational unit vector away from both poles `±e₃`.
    pub fn unit_vec3(&mut self) -> Vec3 {
        loop {
            let (u, v) = (self.rational(), self.rational());
            let x = stereographic(&u, &v);
            if x[0] != int(0) || x[1] != int(0) {
                return x;
            }
        }
    }
}
