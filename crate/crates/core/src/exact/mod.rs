//! Exact scalars, dense linear algebra, polynomials and seeded samplers.

mod linalg;
mod poly;
mod sample;
mod vec3;

pub use linalg::{char_poly, inertia, kernel_basis, rational_roots, Matrix, Subspace};
pub use poly::{lie_bracket, MultiPoly, VectorField};
pub use sample::{cayley, sample_so3, sample_unit_quaternion, stereographic, Sampler};
pub use vec3::Vec3;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// `p` for integers, `p/q` otherwise.
pub fn fmt_q(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
    }
}

pub fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(fmt_q).collect();
    format!("({})", parts.join(","))
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn vadd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vsub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vscale(s: &Rational, a: &[Rational]) -> Vec<Rational> {
    a.iter().map(|x| s * x).collect()
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![zero(); n];
    v[i] = one();
    v
}

/// If `v = c·w` for some rational `c` (with `w` nonzero), returns `c`.
pub fn proportional(v: &[Rational], w: &[Rational]) -> Option<Rational> {
    let k = w.iter().position(|x| !x.is_zero())?;
    let c = &v[k] / &w[k];
    let ok = v.iter().zip(w).all(|(a, b)| *a == &c * b);
    ok.then_some(c)
}

/// Scales `v` so its first nonzero entry is 1.
pub fn normalize_first(v: &[Rational]) -> Vec<Rational> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(p) => {
            let p = p.clone();
            v.iter().map(|x| x / &p).collect()
        }
        None => v.to_vec(),
    }
}

pub fn abs(x: &Rational) -> Rational {
    x.abs()
}
