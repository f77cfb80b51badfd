//! The Pfaffian system `α, β, γ` on V in Cartan coordinates, its Lie
//! derivatives along g₂, rank jumps, and the null 3-plane family.

use std::ops::{Add, Neg, Sub};

use num::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{fmt_q, int, one, q, Matrix, MultiPoly, Rational, Sampler, Subspace, Vec3};
use crate::g2::{flatten, G2Element};
use crate::octonion::{j_gram, oct_mul, CartanPoint, ImOctonion};
use crate::quadric::{annihilator, sample_null_point};

const X: usize = 0;
const Y: usize = 3;
const Z: usize = 6;

/// The form `dq ↦ pᵗ C dq` whose coefficients are linear in `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOneForm {
    pub c: Matrix,
}

impl LinearOneForm {
    pub fn zero() -> Self {
        LinearOneForm { c: Matrix::zeros(7, 7) }
    }

    fn with(mut self, point: usize, dir: usize, v: i64) -> Self {
        self.c[(point, dir)] += int(v);
        self
    }

    pub fn scale(&self, s: &Rational) -> Self {
        LinearOneForm { c: self.c.scale(s) }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero()
    }

    /// The covector at `p`.
    pub fn at(&self, p: &[Rational]) -> Vec<Rational> {
        self.c.transpose().mul_vec(p)
    }

    /// Coefficient of each `dqⱼ` as a polynomial in the seven coordinates.
    pub fn to_polys(&self) -> Vec<MultiPoly> {
        (0..7)
            .map(|j| {
                (0..7).fold(MultiPoly::zero(7), |acc, i| {
                    &acc + &MultiPoly::var(7, i).scale(&self.c[(i, j)])
                })
            })
            .collect()
    }
}

impl Add for &LinearOneForm {
    type Output = LinearOneForm;
    fn add(self, o: &LinearOneForm) -> LinearOneForm {
        LinearOneForm { c: &self.c + &o.c }
    }
}

impl Sub for &LinearOneForm {
    type Output = LinearOneForm;
    fn sub(self, o: &LinearOneForm) -> LinearOneForm {
        LinearOneForm { c: &self.c - &o.c }
    }
}

impl Neg for &LinearOneForm {
    type Output = LinearOneForm;
    fn neg(self) -> LinearOneForm {
        self.scale(&int(-1))
    }
}

#[derive(Clone, Debug)]
pub struct PfaffianSystem {
    pub alpha: [LinearOneForm; 3],
    pub beta: [LinearOneForm; 3],
    pub gamma1: LinearOneForm,
    pub gamma2: LinearOneForm,
}

impl PfaffianSystem {
    pub fn gamma(&self) -> LinearOneForm {
        &self.gamma1 - &self.gamma2
    }

    /// `α₁, α₂, α₃, β₁, β₂, β₃`.
    pub fn alpha_beta(&self) -> Vec<LinearOneForm> {
        self.alpha.iter().chain(&self.beta).cloned().collect()
    }

    /// `α₁..α₃, β₁..β₃, γ`.
    pub fn forms(&self) -> Vec<LinearOneForm> {
        let mut v = self.alpha_beta();
        v.push(self.gamma());
        v
    }
}

/// `(y × dy)ᵢ`-type term: `(u × dw)ᵢ` with `u` at offset `pu`, `w` at `pw`.
fn cross_term(f: LinearOneForm, i: usize, pu: usize, pw: usize) -> LinearOneForm {
    let (j, k) = ((i + 1) % 3, (i + 2) % 3);
    f.with(pu + j, pw + k, 1).with(pu + k, pw + j, -1)
}

/// `dJ` as a form: `J = pᵗGp` so `dJ = 2pᵗG dq`.
pub fn dj() -> LinearOneForm {
    LinearOneForm { c: j_gram().scale(&int(2)) }
}

/// `α = z dx − x dz + y×dy`, `β = z dy − y dz + x×dx`, `γ₁ = z dz + x·dy`,
/// `γ₂ = z dz + y·dx`; fails unless `γ₁ + γ₂ = dJ`.
pub fn build_system() -> Result<PfaffianSystem> {
    let alpha = std::array::from_fn(|i| {
        let f = LinearOneForm::zero().with(Z, X + i, 1).with(X + i, Z, -1);
        cross_term(f, i, Y, Y)
    });
    let beta = std::array::from_fn(|i| {
        let f = LinearOneForm::zero().with(Z, Y + i, 1).with(Y + i, Z, -1);
        cross_term(f, i, X, X)
    });
    let mut gamma1 = LinearOneForm::zero().with(Z, Z, 1);
    let mut gamma2 = LinearOneForm::zero().with(Z, Z, 1);
    for i in 0..3 {
        gamma1 = gamma1.with(X + i, Y + i, 1);
        gamma2 = gamma2.with(Y + i, X + i, 1);
    }
    let sys = PfaffianSystem {
        alpha,
        beta,
        gamma1,
        gamma2,
    };
    if &sys.gamma1 + &sys.gamma2 != dj() {
        return Err(Error::IdentityFailure("gamma1 + gamma2 != dJ".into()));
    }
    Ok(sys)
}

/// `ℒ_X ω` for the linear field `X(p) = Mp`: `C ↦ MᵗC + CM`.
pub fn lie_derivative(u: &G2Element, w: &LinearOneForm) -> LinearOneForm {
    let m = u.rho();
    LinearOneForm {
        c: &(&m.transpose() * &w.c) + &(&w.c * &m),
    }
}

fn dot_forms(v: &Vec3, f: &[LinearOneForm; 3]) -> LinearOneForm {
    (0..3).fold(LinearOneForm::zero(), |acc, i| &acc + &f[i].scale(&v[i]))
}

fn cross_forms(v: &Vec3, f: &[LinearOneForm; 3]) -> [LinearOneForm; 3] {
    std::array::from_fn(|i| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        &f[k].scale(&v[j]) - &f[j].scale(&v[k])
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseResidual {
    /// `A`, `b` or `c`.
    pub case: &'static str,
    /// Parameter label, e.g. `E12` or `e2`.
    pub parameter: String,
    /// Which Lie derivative, e.g. `L(alpha2)`.
    pub form: String,
    pub zero: bool,
    /// Largest absolute residual coefficient, as a rational string.
    pub max_residual: String,
}

fn residual(case: &'static str, parameter: String, form: String, r: &LinearOneForm) -> CaseResidual {
    let max = r
        .c
        .entries()
        .iter()
        .map(num::Signed::abs)
        .max()
        .unwrap_or_else(Rational::zero);
    CaseResidual {
        case,
        parameter,
        form,
        zero: r.is_zero(),
        max_residual: fmt_q(&max),
    }
}

/// Traceless basis `E_ij (i ≠ j)`, `E₁₁ − E₂₂`, `E₂₂ − E₃₃`.
fn traceless_basis() -> Vec<(String, Matrix)> {
    let mut out = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                let mut m = Matrix::zeros(3, 3);
                m[(i, j)] = one();
                out.push((format!("E{}{}", i + 1, j + 1), m));
            }
        }
    }
    out.push(("E11-E22".into(), Matrix::diag(&[one(), int(-1), int(0)])));
    out.push(("E22-E33".into(), Matrix::diag(&[int(0), one(), int(-1)])));
    out
}

/// Residuals of the three case formulas over a basis of each parameter
/// (the formulas are linear in the parameter, so this covers all of g₂).
/// With `corrected = false` the printed multipliers are used instead.
pub fn case_residuals(sys: &PfaffianSystem, corrected: bool) -> Vec<CaseResidual> {
    let gamma = sys.gamma();
    let mut out = Vec::new();
    for (name, a) in traceless_basis() {
        let u = G2Element::from_a(a.clone()).expect("traceless");
        for i in 0..3 {
            let want: LinearOneForm = (0..3).fold(LinearOneForm::zero(), |acc, j| &acc + &sys.alpha[j].scale(&a[(i, j)]));
            let r = &lie_derivative(&u, &sys.alpha[i]) - &want;
            out.push(residual("A", name.clone(), format!("L(alpha{})", i + 1), &r));
            let want: LinearOneForm = (0..3).fold(LinearOneForm::zero(), |acc, j| &acc - &sys.beta[j].scale(&a[(j, i)]));
            let r = &lie_derivative(&u, &sys.beta[i]) - &want;
            out.push(residual("A", name.clone(), format!("L(beta{})", i + 1), &r));
        }
        out.push(residual("A", name.clone(), "L(gamma)".into(), &lie_derivative(&u, &gamma)));
    }
    for n in 0..3 {
        let e = Vec3::e(n);
        let pname = format!("e{}", n + 1);
        // case b
        let u = G2Element::from_b(e.clone());
        let (bx_other, g_mult) = if corrected {
            (cross_forms(&e, &sys.alpha), int(2))
        } else {
            (cross_forms(&e, &sys.beta), int(1))
        };
        for i in 0..3 {
            let r = &lie_derivative(&u, &sys.alpha[i]) - &gamma.scale(&e[i]);
            out.push(residual("b", pname.clone(), format!("L(alpha{})", i + 1), &r));
            let r = &lie_derivative(&u, &sys.beta[i]) - &bx_other[i];
            out.push(residual("b", pname.clone(), format!("L(beta{})", i + 1), &r));
        }
        let r = &lie_derivative(&u, &gamma) - &dot_forms(&e, &sys.beta).scale(&g_mult);
        out.push(residual("b", pname.clone(), "L(gamma)".into(), &r));
        // case c
        let u = G2Element::from_c(e.clone());
        let (cx_other, g_mult) = if corrected {
            (cross_forms(&e, &sys.beta).map(|f| -&f), int(2))
        } else {
            (cross_forms(&e, &sys.alpha), int(1))
        };
        for i in 0..3 {
            let r = &lie_derivative(&u, &sys.alpha[i]) - &cx_other[i];
            out.push(residual("c", pname.clone(), format!("L(alpha{})", i + 1), &r));
            let r = &lie_derivative(&u, &sys.beta[i]) - &gamma.scale(&e[i]);
            out.push(residual("c", pname.clone(), format!("L(beta{})", i + 1), &r));
        }
        let r = &lie_derivative(&u, &gamma) - &dot_forms(&e, &sys.alpha).scale(&g_mult);
        out.push(residual("c", pname, "L(gamma)".into(), &r));
    }
    out
}

/// Whether every `ℒ_X ω` lies in the constant-coefficient span of the seven
/// forms, for all 14 basis elements `X`; independent of the case formulas.
pub fn span_invariance(sys: &PfaffianSystem) -> bool {
    let forms = sys.forms();
    let span = Subspace::span(49, &forms.iter().map(|f| flatten(&f.c)).collect::<Vec<_>>());
    (0..crate::g2::DIM).all(|n| {
        let u = G2Element::basis(n);
        forms.iter().all(|f| span.contains(&flatten(&lie_derivative(&u, f).c)))
    })
}

/// Dimension of the common kernel of `forms` at `p`, which is what "rank"
/// of the system means here.
pub fn system_rank_at(forms: &[LinearOneForm], p: &CartanPoint) -> usize {
    common_kernel(forms, p).dim()
}

pub fn common_kernel(forms: &[LinearOneForm], p: &CartanPoint) -> Subspace {
    let pc = p.coords();
    Subspace::kernel_of(&Matrix::from_rows(forms.iter().map(|f| f.at(&pc)).collect()))
}

/// Parses `x1,0,0`-style point names: each slot is `0` or a signed
/// `x_i` / `y_i` / `z`, summed into a Cartan point, e.g. `x1,y2,0`.
pub fn parse_point(s: &str) -> Result<CartanPoint> {
    let mut c = vec![Rational::zero(); 7];
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty() && *t != "0") {
        let (sign, name) = match tok.strip_prefix('-') {
            Some(rest) => (int(-1), rest),
            None => (one(), tok.trim_start_matches('+')),
        };
        let idx = match name {
            "z" => Z,
            _ if name.len() == 2 => {
                let i: usize = name[1..].parse().map_err(|_| Error::Parse(tok.into()))?;
                if !(1..=3).contains(&i) {
                    return Err(Error::Parse(tok.into()));
                }
                match &name[..1] {
                    "x" => X + i - 1,
                    "y" => Y + i - 1,
                    _ => return Err(Error::Parse(tok.into())),
                }
            }
            _ => return Err(Error::Parse(tok.into())),
        };
        c[idx] += sign;
    }
    Ok(CartanPoint::from_coords(&c))
}

/// Sum `Σ uᵢ ωᵢ` of forms with polynomial multipliers, as polynomials.
fn combine(terms: &[(MultiPoly, &LinearOneForm)]) -> Vec<MultiPoly> {
    let mut acc = vec![MultiPoly::zero(7); 7];
    for (m, f) in terms {
        for (a, p) in acc.iter_mut().zip(f.to_polys()) {
            *a = &*a + &(m * &p);
        }
    }
    acc
}

#[derive(Clone, Debug, Serialize)]
pub struct CorrectionReport {
    pub x_beta_minus_y_alpha_is_z_gamma: bool,
    pub gamma_forces_both_on_cone: usize,
    pub alpha_beta_imply_gamma: usize,
    pub kernel_is_annihilator: usize,
    pub kernel_dim_three: usize,
    pub points: usize,
}

/// Null points in Cartan coordinates with `z ≠ 0`.
pub fn sample_null_cartan(s: &mut Sampler) -> CartanPoint {
    loop {
        let p = sample_null_point(s).rep().to_cartan();
        if !p.z.is_zero() {
            return p;
        }
    }
}

/// `x⁰` at a Cartan point, in Cartan coordinates.
pub fn annihilator_cartan(p: &CartanPoint) -> Subspace {
    let a = annihilator(&ImOctonion::from_cartan(p));
    let v: Vec<Vec<Rational>> = a
        .basis()
        .iter()
        .map(|b| ImOctonion::from_slice(b).to_cartan().coords())
        .collect();
    Subspace::span(7, &v)
}

pub fn correction_identities(sys: &PfaffianSystem, points: usize, seed: u64) -> Result<CorrectionReport> {
    let var = |i: usize| MultiPoly::var(7, i);
    let gamma = sys.gamma();
    let mut terms: Vec<(MultiPoly, &LinearOneForm)> = Vec::new();
    for i in 0..3 {
        terms.push((var(X + i), &sys.beta[i]));
        terms.push((-&var(Y + i), &sys.alpha[i]));
    }
    terms.push((-&var(Z), &gamma));
    let identity = combine(&terms).iter().all(MultiPoly::is_zero);
    if !identity {
        return Err(Error::IdentityFailure("x.beta - y.alpha != z gamma".into()));
    }
    let mut s = Sampler::new(seed);
    let (mut forces, mut implies, mut kernel_ok, mut dim3) = (0, 0, 0, 0);
    let ab = sys.alpha_beta();
    let all = sys.forms();
    for _ in 0..points {
        let p = sample_null_cartan(&mut s);
        let cone_tangent = common_kernel(&[gamma.clone(), dj()], &p);
        if common_kernel(&[sys.gamma1.clone(), sys.gamma2.clone()], &p).contains_space(&cone_tangent) {
            forces += 1;
        }
        let k = common_kernel(&all, &p);
        if common_kernel(&ab, &p) == k {
            implies += 1;
        }
        if k == annihilator_cartan(&p) {
            kernel_ok += 1;
        }
        if k.dim() == 3 {
            dim3 += 1;
        }
    }
    Ok(CorrectionReport {
        x_beta_minus_y_alpha_is_z_gamma: identity,
        gamma_forces_both_on_cone: forces,
        alpha_beta_imply_gamma: implies,
        kernel_is_annihilator: kernel_ok,
        kernel_dim_three: dim3,
        points,
    })
}

/// The product `p · dq` of imaginary split octonions, read as forms: the
/// imaginary part in Cartan coordinates and the real part.
pub fn octonion_product_forms() -> (Vec<LinearOneForm>, LinearOneForm) {
    let mut im = vec![LinearOneForm::zero(); 7];
    let mut re = LinearOneForm::zero();
    let basis = |n: usize| {
        let mut c = vec![Rational::zero(); 7];
        c[n] = one();
        ImOctonion::from_cartan(&CartanPoint::from_coords(&c)).to_octonion()
    };
    for i in 0..7 {
        for j in 0..7 {
            let prod = oct_mul(&basis(i), &basis(j));
            re.c[(i, j)] = prod.re();
            let imag = ImOctonion::from_octonion(&prod.im_part()).expect("imaginary part");
            for (k, v) in imag.to_cartan().coords().into_iter().enumerate() {
                im[k].c[(i, j)] = v;
            }
        }
    }
    (im, re)
}

/// `p·dp = (−α, β, −½γ) + ½(γ₁+γ₂)`; with `printed = true` checks
/// `(α, β, ½γ)` instead.
pub fn octonion_identity_holds(sys: &PfaffianSystem, printed: bool) -> bool {
    let (im, re) = octonion_product_forms();
    let sa = if printed { one() } else { int(-1) };
    let mut want: Vec<LinearOneForm> = sys.alpha.iter().map(|f| f.scale(&sa)).collect();
    want.extend(sys.beta.iter().cloned());
    want.push(sys.gamma().scale(&(&sa * &q(1, 2))));
    im == want && re == (&sys.gamma1 + &sys.gamma2).scale(&q(1, 2))
}

/// `A(u×v) + Aᵗu×v + u×Aᵗv = tr(A)(u×v)`.
pub fn cross_product_lemma(a: &Matrix, u: &Vec3, v: &Vec3) -> bool {
    let at = a.transpose();
    let lhs = &(&a.mul_vec3(&u.cross(v)) + &at.mul_vec3(u).cross(v)) + &u.cross(&at.mul_vec3(v));
    lhs == u.cross(v).scale(&a.trace())
}

/// `{(x,y,z) : x − z a + b×y = 0, y − z b + a×x = 0}` for `a·b = −1`.
pub fn null_threeplane_family(a: &Vec3, b: &Vec3) -> Result<Subspace> {
    let ab = a.dot(b);
    if ab != int(-1) {
        return Err(Error::BadParameters(fmt_q(&ab)));
    }
    let mut m = Matrix::zeros(6, 7);
    m.set_block(0, 0, &Matrix::identity(3));
    m.set_block(0, 3, &b.hat());
    m.set_block(3, 0, &a.hat());
    m.set_block(3, 3, &Matrix::identity(3));
    for i in 0..3 {
        m[(i, 6)] = -a[i].clone();
        m[(3 + i, 6)] = -b[i].clone();
    }
    Ok(Subspace::kernel_of(&m))
}

/// `J` vanishes on the subspace: `uᵗGv = 0` for all basis pairs.
pub fn is_totally_null(s: &Subspace) -> bool {
    let g = j_gram();
    s.basis()
        .iter()
        .all(|u| s.basis().iter().all(|v| crate::exact::dot(u, &g.mul_vec(v)).is_zero()))
}

/// Unique `(a, b)` whose plane is `s`, or `None` if `s` is outside the chart.
pub fn recover_parameters(s: &Subspace) -> Option<(Vec3, Vec3)> {
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for v in s.basis() {
        let (x, y, z) = (Vec3::from_slice(&v[0..3]), Vec3::from_slice(&v[3..6]), &v[6]);
        // −z a − ŷ b = −x and −x̂ a − z b = −y
        let mut m = Matrix::zeros(6, 6);
        m.set_block(0, 0, &Matrix::identity(3).scale(&-z.clone()));
        m.set_block(0, 3, &y.hat().scale(&int(-1)));
        m.set_block(3, 0, &x.hat().scale(&int(-1)));
        m.set_block(3, 3, &Matrix::identity(3).scale(&-z.clone()));
        rows.extend(m.rows_vec());
        rhs.extend((-&x).to_vec());
        rhs.extend((-&y).to_vec());
    }
    let m = Matrix::from_rows(rows);
    if m.rank() != 6 {
        return None;
    }
    let sol = m.solve(&rhs)?;
    Some((Vec3::from_slice(&sol[..3]), Vec3::from_slice(&sol[3..])))
}

/// `(a, b)` with `a·b = −1` from small random rationals.
pub fn sample_family_params(s: &mut Sampler) -> (Vec3, Vec3) {
    loop {
        let a = s.vec3();
        if a.is_zero() {
            continue;
        }
        let w = s.vec3();
        let t = (w.dot(&a) + one()) / a.norm2();
        let b = &w - &a.scale(&t);
        return (a, b);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum FamilyImage {
    /// Image is a member of the family with the recovered parameters.
    Member(Vec3, Vec3),
    /// Image is null and 3-dimensional but outside the `(a, b)` chart.
    OutsideChart,
    /// Image left the family.
    Broken,
}

/// Image of `L(a,b)` under a group element in Cartan coordinates.
pub fn family_image(g: &Matrix, a: &Vec3, b: &Vec3) -> Result<FamilyImage> {
    let l = null_threeplane_family(a, b)?;
    let img = crate::quadric::transform(g, &l);
    if img.dim() != 3 || !is_totally_null(&img) {
        return Ok(FamilyImage::Broken);
    }
    match recover_parameters(&img) {
        None => Ok(FamilyImage::OutsideChart),
        Some((a2, b2)) => match null_threeplane_family(&a2, &b2) {
            Ok(l2) if l2 == img => Ok(FamilyImage::Member(a2, b2)),
            _ => Ok(FamilyImage::Broken),
        },
    }
}
