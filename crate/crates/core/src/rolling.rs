//! Two balls rolling on each other: configurations `(g, x) ∈ SO₃ × S²`,
//! the no-slip/no-spin plane, the `SO₃ × SO₃` action and the growth vector.

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, lie_bracket, one, Matrix, MultiPoly, Rational, Subspace, Vec3, VectorField};
use crate::roots::{Algebra, DistributionData};

/// Number of ambient coordinates: `g` row-major, then `x`.
pub const AMBIENT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RollingState {
    pub g: Matrix,
    pub x: Vec3,
    pub ratio: Rational,
}

impl RollingState {
    pub fn new(g: Matrix, x: Vec3, ratio: Rational) -> Result<Self> {
        if !(&g.transpose() * &g).is_identity() || g.det() != one() {
            return Err(Error::InvalidState("g is not in SO3".into()));
        }
        if x.norm2() != one() {
            return Err(Error::InvalidState("x is not a unit vector".into()));
        }
        if !ratio.is_positive() {
            return Err(Error::InvalidState("ratio must be positive".into()));
        }
        Ok(RollingState { g, x, ratio })
    }

    /// `(I, e₃)`.
    pub fn base(ratio: Rational) -> Self {
        RollingState::new(Matrix::identity(3), Vec3::e(2), ratio).expect("base point is valid")
    }

    pub fn point(&self) -> Vec<Rational> {
        let mut v = self.g.entries().to_vec();
        v.extend(self.x.to_vec());
        v
    }

    pub fn off_poles(&self) -> bool {
        !(self.x[0].is_zero() && self.x[1].is_zero())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RollingTangent {
    pub g_dot: Matrix,
    pub x_dot: Vec3,
}

impl RollingTangent {
    pub fn zero() -> Self {
        RollingTangent {
            g_dot: Matrix::zeros(3, 3),
            x_dot: Vec3::zero(),
        }
    }

    /// Velocity of `(g,x)` under the one-parameter subgroups generated by
    /// `(ω′, ω″)`: `ġ = ω̂′g − gω̂″`, `ẋ = ω′ × x`.
    pub fn from_omegas(s: &RollingState, w1: &Vec3, w2: &Vec3) -> Self {
        RollingTangent {
            g_dot: &(&w1.hat() * &s.g) - &(&s.g * &w2.hat()),
            x_dot: w1.cross(&s.x),
        }
    }

    pub fn coords(&self) -> Vec<Rational> {
        let mut v = self.g_dot.entries().to_vec();
        v.extend(self.x_dot.to_vec());
        v
    }

    pub fn from_coords(c: &[Rational]) -> Self {
        RollingTangent {
            g_dot: Matrix::from_rows((0..3).map(|i| c[3 * i..3 * i + 3].to_vec()).collect()),
            x_dot: Vec3::from_slice(&c[9..12]),
        }
    }
}

/// `ω` with `ġg⁻¹ = ω̂`, or `None` if `ġgᵗ` is not antisymmetric.
pub fn angular_velocity(s: &RollingState, t: &RollingTangent) -> Option<Vec3> {
    Vec3::unhat(&(&t.g_dot * &s.g.transpose()))
}

/// `(ρ+1)ẋ = ω × x` and `⟨ω, x⟩ = 0`.
pub fn is_rolling_tangent(s: &RollingState, t: &RollingTangent) -> bool {
    let Some(w) = angular_velocity(s, t) else {
        return false;
    };
    let lhs = t.x_dot.scale(&(&s.ratio + &one()));
    lhs == w.cross(&s.x) && w.dot(&s.x).is_zero()
}

/// Solutions `(ω′, ω″) ∈ ℝ³ × ℝ³` of `⟨ω′,e₃⟩ = ⟨ω″,e₃⟩ = 0`, `ρω′ + ω″ = 0`.
pub fn base_plane(ratio: &Rational) -> Subspace {
    let z = int(0);
    let o = one();
    let r = ratio.clone();
    let rows = vec![
        vec![z.clone(), z.clone(), o.clone(), z.clone(), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), z.clone(), z.clone(), z.clone(), o.clone()],
        vec![r.clone(), z.clone(), z.clone(), o.clone(), z.clone(), z.clone()],
        vec![z.clone(), r.clone(), z.clone(), z.clone(), o.clone(), z.clone()],
        vec![z.clone(), z.clone(), r, z.clone(), z.clone(), o],
    ];
    Subspace::kernel_of(&Matrix::from_rows(rows))
}

/// The isotropy direction `(e₃, e₃)`.
pub fn isotropy_generator() -> Vec<Rational> {
    let mut v = Vec3::e(2).to_vec();
    v.extend(Vec3::e(2).to_vec());
    v
}

/// `(g,x) ↦ (g′ g g″ᵗ, g′ x)`.
pub fn group_action(g1: &Matrix, g2: &Matrix, s: &RollingState) -> RollingState {
    RollingState {
        g: &(g1 * &s.g) * &g2.transpose(),
        x: g1.mul_vec3(&s.x),
        ratio: s.ratio.clone(),
    }
}

/// Derivative of [`group_action`]; it is linear, so tangents transform the
/// same way.
pub fn push_tangent(g1: &Matrix, g2: &Matrix, t: &RollingTangent) -> RollingTangent {
    RollingTangent {
        g_dot: &(g1 * &t.g_dot) * &g2.transpose(),
        x_dot: g1.mul_vec3(&t.x_dot),
    }
}

fn var(i: usize) -> MultiPoly {
    MultiPoly::var(AMBIENT, i)
}

fn cross_poly(a: &[MultiPoly; 3], b: &[MultiPoly; 3]) -> [MultiPoly; 3] {
    let c = |i: usize, j: usize| &(&a[i] * &b[j]) - &(&a[j] * &b[i]);
    [c(1, 2), c(2, 0), c(0, 1)]
}

fn frame_field(u: &[MultiPoly; 3], x: &[MultiPoly; 3], ratio: &Rational) -> VectorField {
    let zero = MultiPoly::zero(AMBIENT);
    let neg = |p: &MultiPoly| -p;
    let hat = [
        [zero.clone(), neg(&u[2]), u[1].clone()],
        [u[2].clone(), zero.clone(), neg(&u[0])],
        [neg(&u[1]), u[0].clone(), zero],
    ];
    let mut field = Vec::with_capacity(AMBIENT);
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = MultiPoly::zero(AMBIENT);
            for (k, h) in hat[i].iter().enumerate() {
                acc = &acc + &(h * &var(3 * k + j));
            }
            field.push(acc);
        }
    }
    let s = one() / (ratio + &one());
    field.extend(cross_poly(u, x).iter().map(|p| p.scale(&s)));
    field
}

/// `V_a = (û_a g, u_a × x / (ρ+1))` with `u₁ = e₃ × x`, `u₂ = x × u₁`.
pub fn spanning_fields(ratio: &Rational) -> [VectorField; 2] {
    let x = [var(9), var(10), var(11)];
    let zero = MultiPoly::zero(AMBIENT);
    let u1 = [-&x[1], x[0].clone(), zero];
    let u2 = cross_poly(&x, &u1);
    [frame_field(&u1, &x, ratio), frame_field(&u2, &x, ratio)]
}

pub fn eval_field(f: &[MultiPoly], s: &RollingState) -> Result<RollingTangent> {
    if !s.off_poles() {
        return Err(Error::DegeneratePoint);
    }
    let pt = s.point();
    Ok(RollingTangent::from_coords(
        &f.iter().map(|p| p.eval(&pt)).collect::<Vec<_>>(),
    ))
}

/// Ranks of `D`, `D + [D,D]`, `D + [D,D] + [D,[D,D]]` at `pt`, from exact
/// brackets of the spanning fields.
pub fn growth_vector(ratio: &Rational, pt: &RollingState) -> Result<Vec<usize>> {
    if !pt.off_poles() {
        return Err(Error::DegeneratePoint);
    }
    GrowthFields::new(ratio).at(pt)
}

/// Fields bracketed once, so the expensive symbolic part can be shared over
/// many points.
pub struct GrowthFields {
    layers: Vec<Vec<VectorField>>,
}

impl GrowthFields {
    pub fn new(ratio: &Rational) -> Self {
        let [v1, v2] = spanning_fields(ratio);
        let v12 = lie_bracket(&v1, &v2);
        let v112 = lie_bracket(&v1, &v12);
        let v212 = lie_bracket(&v2, &v12);
        GrowthFields {
            layers: vec![vec![v1, v2], vec![v12], vec![v112, v212]],
        }
    }

    pub fn at(&self, pt: &RollingState) -> Result<Vec<usize>> {
        if !pt.off_poles() {
            return Err(Error::DegeneratePoint);
        }
        growth_of_fields(&self.layers, pt)
    }
}

fn growth_of_fields(layers: &[Vec<VectorField>], pt: &RollingState) -> Result<Vec<usize>> {
    let p = pt.point();
    let mut vecs: Vec<Vec<Rational>> = Vec::new();
    let mut out = Vec::new();
    for layer in layers {
        for f in layer {
            vecs.push(f.iter().map(|c| c.eval(&p)).collect());
        }
        out.push(Subspace::span(AMBIENT, &vecs).dim());
    }
    Ok(out)
}

/// `(so₃ ⊕ so₃, ℝ(e₃,e₃), base_plane(ρ))`.
pub fn extract_data(ratio: &Rational) -> DistributionData {
    DistributionData {
        algebra: Algebra::So3So3,
        isotropy: Subspace::span(6, &[isotropy_generator()]),
        plane: base_plane(ratio).basis().to_vec(),
    }
}

/// `ω′ ↔ ω″`, the relabeling that exchanges the two balls.
pub fn swap_summands(v: &[Rational]) -> Vec<Rational> {
    let mut out = v[3..].to_vec();
    out.extend_from_slice(&v[..3]);
    out
}
