//! The null quadric of V: annihilator chains, the distribution `x⁰/ℝx`,
//! isotropy at a ray, and the double cover of the rolling configuration
//! space.

use num::{Signed, Zero};
use serde::Serialize;

use crate::compact::ktilde_action;
use crate::error::{Error, Result};
use crate::exact::{fmt_q, int, one, proportional, Matrix, Rational, Sampler, Subspace, Vec3};
use crate::g2::{G2Element, DIM};
use crate::octonion::{inner_product, inner_product_gram, oct_mul, ImOctonion, Quaternion};
use crate::roots::{plane_w, Algebra, DistributionData, RootDatum};
use crate::rolling::{is_rolling_tangent, RollingState, RollingTangent};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NullRay {
    rep: ImOctonion,
}

impl NullRay {
    pub fn new(x: ImOctonion) -> Result<Self> {
        let n = inner_product(&x, &x);
        if !n.is_zero() {
            return Err(Error::NotNull(fmt_q(&n)));
        }
        if x.is_zero() {
            return Err(Error::NotNull("0 (zero vector)".into()));
        }
        Ok(NullRay { rep: x })
    }

    /// The ray through `e₁`.
    pub fn base() -> Self {
        NullRay::new(ImOctonion::e(0)).expect("e1 is null")
    }

    pub fn rep(&self) -> &ImOctonion {
        &self.rep
    }

    /// `(v, h)` with `|v| = |h| = 1`, when the representative already has
    /// unit halves.
    pub fn normalized(&self) -> Option<(Vec3, Quaternion)> {
        let (v, h) = self.rep.to_pair();
        (v.norm2() == one()).then_some((v, h))
    }
}

/// `c·(v, h)` with `v`, `h` rational unit vectors and `c > 0`.
pub fn sample_null_point(s: &mut Sampler) -> NullRay {
    let (v, h) = sample_sphere_point(s);
    let c = s.nonzero_rational().abs();
    NullRay::new(ImOctonion::from_pair(&v, &h).scale(&c)).expect("|v| = |h| gives a null vector")
}

/// A rational point of `S² × S³`.
pub fn sample_sphere_point(s: &mut Sampler) -> (Vec3, Quaternion) {
    (s.unit_vec3(), s.unit_quaternion())
}

/// `8 × 7` matrix of `y ↦ x y` into the full algebra.
pub fn left_mul_matrix(x: &ImOctonion) -> Matrix {
    let ox = x.to_octonion();
    let cols: Vec<Vec<Rational>> = (0..7)
        .map(|n| oct_mul(&ox, &ImOctonion::basis(n).to_octonion()).coords())
        .collect();
    Matrix::from_cols(&cols)
}

/// `x⁰ = {y ∈ V : xy = 0}`.
pub fn annihilator(x: &ImOctonion) -> Subspace {
    Subspace::kernel_of(&left_mul_matrix(x))
}

#[derive(Clone, Debug)]
pub struct Chain {
    pub line: Subspace,
    pub x0: Subspace,
    pub x0_perp: Subspace,
    pub x_perp: Subspace,
}

impl Chain {
    pub fn dims(&self) -> [usize; 5] {
        [self.line.dim(), self.x0.dim(), self.x0_perp.dim(), self.x_perp.dim(), 7]
    }
}

/// `ℝx ⊂ x⁰ ⊂ (x⁰)⊥ ⊂ x⊥ ⊂ V`, with the inclusions checked.
pub fn annihilator_chain(x: &NullRay) -> Result<Chain> {
    let g = inner_product_gram();
    let line = Subspace::span(7, &[x.rep.coords()]);
    let x0 = annihilator(&x.rep);
    let x0_perp = x0.perp(&g);
    let x_perp = line.perp(&g);
    let ok = x0.contains_space(&line) && x0_perp.contains_space(&x0) && x_perp.contains_space(&x0_perp);
    if !ok {
        return Err(Error::IdentityFailure("annihilator chain is not nested".into()));
    }
    Ok(Chain {
        line,
        x0,
        x0_perp,
        x_perp,
    })
}

/// `D_[x]` lifted to V: the 3-space `x⁰`, whose image modulo `ℝx` is the
/// plane in `T_[x]C = x⊥/ℝx`.
pub fn quadric_distribution(x: &NullRay) -> Subspace {
    annihilator(&x.rep)
}

/// Change from Cartan coordinates to the `e, f, U` coordinates; it is its
/// own inverse.
fn chart_flip() -> Matrix {
    let d: Vec<Rational> = (0..7).map(|n| if n < 3 { int(-1) } else { one() }).collect();
    Matrix::diag(&d)
}

/// A matrix acting on Cartan coordinates, rewritten for `e, f, U`
/// coordinates.
pub fn to_chart_a(m: &Matrix) -> Matrix {
    let p = chart_flip();
    &(&p * m) * &p
}

pub fn transform(m: &Matrix, s: &Subspace) -> Subspace {
    let v: Vec<Vec<Rational>> = s.basis().iter().map(|b| m.mul_vec(b)).collect();
    Subspace::span(s.ambient(), &v)
}

/// `g·D_[x] = D_[g·x]` for a group element `g` given in Cartan coordinates.
pub fn distribution_invariant_under(g: &Matrix, x: &NullRay) -> bool {
    let ga = to_chart_a(g);
    let gx = ImOctonion::from_slice(&ga.mul_vec(&x.rep.coords()));
    transform(&ga, &quadric_distribution(x)) == annihilator(&gx)
}

/// `7 × 14` matrix of `ξ ↦ ξ·x` over the standard basis of g₂.
fn orbit_map(x: &ImOctonion) -> Matrix {
    let xa = x.coords();
    let cols: Vec<Vec<Rational>> = (0..DIM)
        .map(|n| to_chart_a(&G2Element::basis(n).rho()).mul_vec(&xa))
        .collect();
    Matrix::from_cols(&cols)
}

/// `{ξ ∈ g₂ : ξ·x ∈ ℝx}`.
pub fn isotropy_algebra(x: &NullRay) -> Subspace {
    let m = orbit_map(&x.rep);
    let mut rows = m.rows_vec();
    for (row, xi) in rows.iter_mut().zip(x.rep.coords()) {
        row.push(xi);
    }
    let ker = Subspace::kernel_of(&Matrix::from_rows(rows));
    let proj: Vec<Vec<Rational>> = ker.basis().iter().map(|v| v[..DIM].to_vec()).collect();
    Subspace::span(DIM, &proj)
}

/// `dim span{ξ·x}`: 6 means the orbit is open in the cone.
pub fn infinitesimal_transitivity(x: &ImOctonion) -> usize {
    orbit_map(x).rank()
}

/// Checks that the plane `W` of root vectors maps onto `x⁰ mod ℝe₁` at the
/// base ray, and that `p` fixes the ray; returns the quadric's data.
pub fn distribution_data_of_quadric(rd: &RootDatum, p: &Subspace) -> Result<DistributionData> {
    let base = NullRay::base();
    let iso = isotropy_algebra(&base);
    if &iso != p {
        return Err(Error::PlaneMismatch("isotropy at [e1] differs from p".into()));
    }
    let e1 = base.rep.coords();
    let act = |u: &G2Element| to_chart_a(&u.rho()).mul_vec(&e1);
    let w = plane_w(rd);
    for (u, target) in w.iter().zip([ImOctonion::f(1), ImOctonion::f(2)]) {
        match proportional(&act(u), &target.coords()) {
            Some(c) if !c.is_zero() => {}
            _ => return Err(Error::PlaneMismatch("root vector does not move e1 to f2 / f3".into())),
        }
    }
    let line = Subspace::span(7, std::slice::from_ref(&e1));
    for b in p.basis() {
        if !line.contains(&act(&G2Element::from_coords(b))) {
            return Err(Error::PlaneMismatch("p moves the ray".into()));
        }
    }
    let image = line.with(&w.iter().map(act).collect::<Vec<_>>());
    if image != quadric_distribution(&base) {
        return Err(Error::PlaneMismatch("W does not map onto the annihilator".into()));
    }
    Ok(DistributionData {
        algebra: Algebra::G2,
        isotropy: iso,
        plane: w.iter().map(G2Element::coords).collect(),
    })
}

/// Checks `|v| = |h| = 1`.
pub fn require_normalized(v: &Vec3, h: &Quaternion) -> Result<()> {
    if v.norm2() != one() || h.norm2() != one() {
        return Err(Error::NotNormalized {
            v: fmt_q(&v.norm2()),
            h: fmt_q(&h.norm2()),
        });
    }
    Ok(())
}

/// `Φ(v, h) = (R_{v h̄}, v)`.
pub fn covering_map(v: &Vec3, h: &Quaternion) -> Result<(Matrix, Vec3)> {
    require_normalized(v, h)?;
    let q = &Quaternion::pure(v) * &h.conj();
    Ok((q.rotation(), v.clone()))
}

/// `ω` with `(d/dt) R_q · R_qᵗ = ω̂` for unit `q`: `ω = 2 Im(q̇ q̄)`.
pub fn rotation_velocity(q: &Quaternion, q_dot: &Quaternion) -> Vec3 {
    (q_dot * &q.conj()).im().scale(&int(2))
}

/// `dΦ` applied to `y ∈ x⊥`, after removing the radial part of `y`.
pub fn cover_tangent(v: &Vec3, h: &Quaternion, y: &ImOctonion) -> Result<RollingTangent> {
    let (g, _) = covering_map(v, h)?;
    let (vy, hy) = y.to_pair();
    let s = v.dot(&vy);
    let v_dot = &vy - &v.scale(&s);
    let h_dot = &hy - &h.scale(&s);
    let q = &Quaternion::pure(v) * &h.conj();
    let q_dot = &(&Quaternion::pure(&v_dot) * &h.conj()) + &(&Quaternion::pure(v) * &h_dot.conj());
    let w = rotation_velocity(&q, &q_dot);
    Ok(RollingTangent {
        g_dot: &w.hat() * &g,
        x_dot: v_dot,
    })
}

/// `dΦ(D_[x])`, one tangent per basis vector of `x⁰` (the radial one maps
/// to zero).
pub fn pushforward_plane(v: &Vec3, h: &Quaternion) -> Result<Vec<RollingTangent>> {
    let x = ImOctonion::from_pair(v, h);
    annihilator(&x)
        .basis()
        .iter()
        .map(|b| cover_tangent(v, h, &ImOctonion::from_slice(b)))
        .collect()
}

/// Whether `dΦ(D)` equals the rolling plane of ratio `ρ` at `Φ(v, h)`.
pub fn pushes_to_ratio(v: &Vec3, h: &Quaternion, ratio: &Rational) -> Result<bool> {
    let (g, x) = covering_map(v, h)?;
    let st = RollingState::new(g, x, ratio.clone())?;
    let ts = pushforward_plane(v, h)?;
    let rank = Subspace::span(12, &ts.iter().map(RollingTangent::coords).collect::<Vec<_>>()).dim();
    Ok(rank == 2 && ts.iter().all(|t| is_rolling_tangent(&st, t)))
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverScanRow {
    pub ratio: String,
    pub matched_points: usize,
    pub points: usize,
}

pub fn cover_ratio_scan(pts: &[(Vec3, Quaternion)], ratios: &[Rational]) -> Result<Vec<CoverScanRow>> {
    ratios
        .iter()
        .map(|r| {
            let mut n = 0;
            for (v, h) in pts {
                if pushes_to_ratio(v, h, r)? {
                    n += 1;
                }
            }
            Ok(CoverScanRow {
                ratio: fmt_q(r),
                matched_points: n,
                points: pts.len(),
            })
        })
        .collect()
}

/// `Φ(k·x) = (R_{q₁} g R_{q₂}ᵗ, R_{q₁} v)`.
pub fn cover_equivariant(v: &Vec3, h: &Quaternion, q1: &Quaternion, q2: &Quaternion) -> Result<bool> {
    let (g, x) = covering_map(v, h)?;
    let kx = ktilde_action(q1, q2, &ImOctonion::from_pair(v, h))?;
    let (kv, kh) = kx.to_pair();
    let (g2, x2) = covering_map(&kv, &kh)?;
    let (r1, r2) = (q1.rotation(), q2.rotation());
    Ok(g2 == &(&r1 * &g) * &r2.transpose() && x2 == r1.mul_vec3(&x))
}

/// `h` and `−h` cover the same configuration.
pub fn cover_is_two_to_one(v: &Vec3, h: &Quaternion) -> Result<bool> {
    Ok(covering_map(v, h)? == covering_map(v, &-h)?)
}
