//! The maximal compact subalgebra `so₃ ⊕ so₃ ⊂ g₂`, its two ideals, the
//! identification with the rolling data, and the quaternion pair action on V.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{int, kernel_basis, one, q, rational_roots, Matrix, Rational, Sampler, Subspace};
use crate::g2::{bracket, coords_span, G2Element};
use crate::octonion::{inner_product, oct_mul, ImOctonion, Quaternion, SplitOctonion};
use crate::quadric::{annihilator, sample_null_point};
use crate::roots::{plane_w, Algebra, DistributionData, RootDatum};
use crate::rolling::{base_plane, swap_summands};
use crate::serre::SerreBasis;

#[derive(Clone, Debug)]
pub struct CompactBasis {
    pub l: [G2Element; 3],
    pub s: [G2Element; 3],
    /// `e′ᵢ = (3Lᵢ + 2Sᵢ)/4`.
    pub e1: [G2Element; 3],
    /// `e″ᵢ = (Lᵢ − 2Sᵢ)/4`.
    pub e2: [G2Element; 3],
}

pub fn compact_basis(sb: &SerreBasis) -> CompactBasis {
    let diff = |i: usize, d: i64| (&sb.pos[i] - &sb.neg[i]).scale(&q(1, d));
    let l = [diff(3, 1), diff(4, 6), diff(5, 6)];
    let s = [diff(0, 4), diff(1, 2), diff(2, 2)];
    let e1 = std::array::from_fn(|i| (&l[i].scale(&int(3)) + &s[i].scale(&int(2))).scale(&q(1, 4)));
    let e2 = std::array::from_fn(|i| (&l[i] - &s[i].scale(&int(2))).scale(&q(1, 4)));
    CompactBasis { l, s, e1, e2 }
}

fn levi_civita(i: usize, j: usize) -> Option<(usize, i64)> {
    if i == j {
        return None;
    }
    let k = 3 - i - j;
    let sign = if (j + 3 - i) % 3 == 1 { 1 } else { -1 };
    Some((k, sign))
}

/// Checks `[Xᵢ, Yⱼ] = ε_{ijk} f(k)` for all `i, j`.
fn check_family(
    name: &str,
    x: &[G2Element; 3],
    y: &[G2Element; 3],
    f: impl Fn(usize) -> G2Element,
) -> Result<usize> {
    for i in 0..3 {
        for j in 0..3 {
            let want = match levi_civita(i, j) {
                Some((k, s)) => f(k).scale(&int(s)),
                None => G2Element::zero(),
            };
            if bracket(&x[i], &y[j]) != want {
                return Err(Error::RelationFailure(format!("{name}: ({}, {})", i + 1, j + 1)));
            }
        }
    }
    Ok(9)
}

/// `[Lᵢ,Lⱼ] = εL_k`, `[Lᵢ,Sⱼ] = εS_k`, `[Sᵢ,Sⱼ] = ε(¾L_k − S_k)`; returns
/// the number of brackets checked.
pub fn verify_compact_relations(cb: &CompactBasis) -> Result<usize> {
    let mut n = check_family("[L,L]", &cb.l, &cb.l, |k| cb.l[k].clone())?;
    n += check_family("[L,S]", &cb.l, &cb.s, |k| cb.s[k].clone())?;
    n += check_family("[S,S]", &cb.s, &cb.s, |k| &cb.l[k].scale(&q(3, 4)) - &cb.s[k])?;
    let span: Vec<G2Element> = cb.l.iter().chain(&cb.s).cloned().collect();
    if coords_span(&span).dim() != 6 {
        return Err(Error::RelationFailure("L, S are not independent".into()));
    }
    Ok(n)
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealSplit {
    /// `x² + c₁x + c₀`, stored `[c₀, c₁, 1]`.
    #[serde(serialize_with = "ser_q_vec")]
    pub quadratic: Vec<Rational>,
    #[serde(serialize_with = "ser_q_vec")]
    pub roots: Vec<Rational>,
}

fn ser_q_vec<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(crate::exact::fmt_q))
}

/// Derives the quadratic for the ansatz `Sᵢ = a e′ᵢ + b e″ᵢ`, solves it, and
/// checks that the resulting `e′`, `e″` are commuting `so₃` ideals that agree
/// with the closed forms in [`CompactBasis`].
pub fn split_into_ideals(cb: &CompactBasis) -> Result<IdealSplit> {
    // [S₁,S₂] = αL₃ + βS₃ means S acts like x² = α + βx on span{L, S}
    let m = Matrix::from_cols(&[cb.l[2].coords(), cb.s[2].coords()]);
    let sol = m
        .solve(&bracket(&cb.s[0], &cb.s[1]).coords())
        .ok_or_else(|| Error::RelationFailure("[S1,S2] leaves span{L3,S3}".into()))?;
    let quadratic = vec![-sol[0].clone(), -sol[1].clone(), one()];
    let (found, rest) = rational_roots(&quadratic);
    if rest != 0 || found.len() != 2 {
        return Err(Error::RelationFailure("quadratic has no two rational roots".into()));
    }
    let mut roots: Vec<Rational> = found.into_iter().map(|(r, _)| r).collect();
    roots.sort();
    roots.reverse();
    let (a, b) = (&roots[0], &roots[1]);
    let d = a - b;
    for i in 0..3 {
        let e1 = (&cb.s[i] - &cb.l[i].scale(b)).scale(&d.recip());
        let e2 = (&cb.l[i].scale(a) - &cb.s[i]).scale(&d.recip());
        if e1 != cb.e1[i] || e2 != cb.e2[i] {
            return Err(Error::RelationFailure(format!("derived ideal basis differs at {}", i + 1)));
        }
    }
    check_family("[e',e']", &cb.e1, &cb.e1, |k| cb.e1[k].clone())?;
    check_family("[e'',e'']", &cb.e2, &cb.e2, |k| cb.e2[k].clone())?;
    check_family("[e',e'']", &cb.e1, &cb.e2, |_| G2Element::zero())?;
    Ok(IdealSplit { quadratic, roots })
}

/// Columns: images of `L₁..L₃, S₁..S₃` in `ℝ³ × ℝ³` under `e′ᵢ ↦ (eᵢ,0)`,
/// `e″ᵢ ↦ (0,eᵢ)`, or the summand-swapped map.
pub fn isomorphism_matrix(swap: bool) -> Matrix {
    let mut m = Matrix::zeros(6, 6);
    let (lo, hi) = if swap { (3, 0) } else { (0, 3) };
    for i in 0..3 {
        // Lᵢ = e′ᵢ + e″ᵢ, Sᵢ = ½e′ᵢ − (3/2)e″ᵢ
        m[(lo + i, i)] = one();
        m[(hi + i, i)] = one();
        m[(lo + i, 3 + i)] = q(1, 2);
        m[(hi + i, 3 + i)] = q(-3, 2);
    }
    m
}

/// Coordinates of `u` in the basis `L₁, L₂, L₃, S₁, S₂, S₃`.
pub fn ls_coords(cb: &CompactBasis, u: &G2Element) -> Option<Vec<Rational>> {
    let cols: Vec<Vec<Rational>> = cb.l.iter().chain(&cb.s).map(G2Element::coords).collect();
    Matrix::from_cols(&cols).solve(&u.coords())
}

pub fn to_so3so3(cb: &CompactBasis, u: &G2Element, swap: bool) -> Option<Vec<Rational>> {
    Some(isomorphism_matrix(swap).mul_vec(&ls_coords(cb, u)?))
}

pub fn compact_space(cb: &CompactBasis) -> Subspace {
    let v: Vec<G2Element> = cb.l.iter().chain(&cb.s).cloned().collect();
    coords_span(&v)
}

/// `k ∩ p` and `(W + p) ∩ k`, transported to `so₃ ⊕ so₃`.
pub fn compact_distribution_data(
    cb: &CompactBasis,
    rd: &RootDatum,
    p: &Subspace,
    swap: bool,
) -> Result<DistributionData> {
    let k = compact_space(cb);
    let h = k.intersect(p);
    if h != coords_span(std::slice::from_ref(&cb.l[2])) {
        return Err(Error::PlaneMismatch(format!("k meets p in dimension {}", h.dim())));
    }
    let wp = p.with(&plane_w(rd).iter().map(G2Element::coords).collect::<Vec<_>>());
    let lifted = wp.intersect(&k);
    let want = coords_span(&[cb.l[2].clone(), cb.s[0].clone(), cb.s[1].clone()]);
    if lifted != want {
        return Err(Error::PlaneMismatch("(W + p) meets k outside span{L3, S1, S2}".into()));
    }
    let image = |u: &G2Element| to_so3so3(cb, u, swap).expect("element of k");
    Ok(DistributionData {
        algebra: Algebra::So3So3,
        isotropy: Subspace::span(6, &[image(&cb.l[2])]),
        plane: vec![image(&cb.s[0]), image(&cb.s[1])],
    })
}

pub const SCAN_RATIOS: [(i64, i64); 6] = [(3, 1), (1, 3), (1, 1), (2, 1), (5, 1), (1, 2)];

#[derive(Clone, Debug, Serialize)]
pub struct RatioScanRow {
    pub ratio: String,
    pub matches: bool,
    pub matches_swapped: bool,
}

/// Whether the image plane satisfies the base-plane equations at each ratio.
pub fn ratio_scan(cb: &CompactBasis, rd: &RootDatum, p: &Subspace) -> Result<Vec<RatioScanRow>> {
    let d = compact_distribution_data(cb, rd, p, false)?;
    let ds = compact_distribution_data(cb, rd, p, true)?;
    let plane = Subspace::span(6, &d.plane);
    let splane = Subspace::span(6, &ds.plane);
    Ok(SCAN_RATIOS
        .iter()
        .map(|&(n, m)| {
            let r = q(n, m);
            let bp = base_plane(&r);
            RatioScanRow {
                ratio: crate::exact::fmt_q(&r),
                matches: plane == bp,
                matches_swapped: splane == bp,
            }
        })
        .collect())
}

/// Swapping summands turns the data of one ratio into the other.
pub fn swap_consistent(d: &DistributionData, swapped: &DistributionData) -> bool {
    let s: Vec<Vec<Rational>> = d.plane.iter().map(|v| swap_summands(v)).collect();
    Subspace::span(6, &s) == Subspace::span(6, &swapped.plane)
}

/// `(q₁, q₂)·(a, b) = (q₁ a q̄₁, q₂ b q̄₁)` on the whole algebra.
pub fn ktilde_octonion(q1: &Quaternion, q2: &Quaternion, o: &SplitOctonion) -> Result<SplitOctonion> {
    q1.require_unit()?;
    q2.require_unit()?;
    let c1 = q1.conj();
    Ok(SplitOctonion::new(&(q1 * &o.a) * &c1, &(q2 * &o.b) * &c1))
}

pub fn ktilde_action(q1: &Quaternion, q2: &Quaternion, v: &ImOctonion) -> Result<ImOctonion> {
    let o = ktilde_octonion(q1, q2, &v.to_octonion())?;
    Ok(ImOctonion::from_octonion(&o).expect("the action fixes the real line"))
}

/// Matrix of the action on V in the `e, f, U` coordinates.
pub fn ktilde_matrix(q1: &Quaternion, q2: &Quaternion) -> Result<Matrix> {
    let cols = (0..7)
        .map(|n| Ok(ktilde_action(q1, q2, &ImOctonion::basis(n))?.coords()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_cols(&cols))
}

/// Whether the action is an automorphism and an isometry on the given pair.
pub fn ktilde_preserves_structure(q1: &Quaternion, q2: &Quaternion, x: &ImOctonion, y: &ImOctonion) -> Result<bool> {
    let (ox, oy) = (x.to_octonion(), y.to_octonion());
    let lhs = ktilde_octonion(q1, q2, &oct_mul(&ox, &oy))?;
    let rhs = oct_mul(&ktilde_octonion(q1, q2, &ox)?, &ktilde_octonion(q1, q2, &oy)?);
    let kx = ktilde_action(q1, q2, x)?;
    let ky = ktilde_action(q1, q2, y)?;
    Ok(lhs == rhs && inner_product(&kx, &ky) == inner_product(x, y))
}

/// Unit pairs acting trivially on V. Triviality on `(a, 0)` makes `q₁`
/// commute with `i, j, k`, so it is real; triviality on `(0, 1)` then
/// forces `q₂ = q₁`.
pub fn representation_kernel() -> Result<Vec<(Quaternion, Quaternion)>> {
    let mut rows = Vec::new();
    let basis = |n: usize| if n == 0 { Quaternion::one() } else { Quaternion::unit(n - 1) };
    for a in 0..3 {
        let ua = Quaternion::unit(a);
        let cols: Vec<Vec<Rational>> = (0..4)
            .map(|n| {
                let b = basis(n);
                (&(&b * &ua) - &(&ua * &b)).coords().to_vec()
            })
            .collect();
        rows.extend(Matrix::from_cols(&cols).rows_vec());
    }
    let ker = kernel_basis(&Matrix::from_rows(rows));
    if ker.len() != 1 {
        return Err(Error::IdentityFailure(format!("centralizer has dimension {}", ker.len())));
    }
    let w = Quaternion::new(ker[0][0].clone(), ker[0][1].clone(), ker[0][2].clone(), ker[0][3].clone());
    // w is a real multiple of 1; its unit multiples are ±w/|w|
    let unit = w.scale(&w.r.recip());
    let mut out = Vec::new();
    for s in [one(), int(-1)] {
        let q1 = unit.scale(&s);
        let q2 = q1.clone();
        if ktilde_matrix(&q1, &q2)?.is_identity() {
            out.push((q1, q2));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct InvolutionReport {
    pub sigma_squared_identity: bool,
    pub sigma_nontrivial: bool,
    pub sigma_preserves_d: usize,
    pub minus_identity_preserves_d: usize,
    pub points: usize,
}

/// `σ = (−1, 1)` and `−I` on V: both are involutions carrying the
/// annihilator of `x` to the annihilator of the image point.
pub fn involution_checks(points: usize, seed: u64) -> Result<InvolutionReport> {
    let m1 = Quaternion::real(int(-1));
    let sigma = ktilde_matrix(&m1, &Quaternion::one())?;
    let mut s = Sampler::new(seed);
    let mut sigma_ok = 0;
    let mut minus_ok = 0;
    for _ in 0..points {
        let x = sample_null_point(&mut s);
        let d = annihilator(x.rep());
        let sx = ImOctonion::from_slice(&sigma.mul_vec(&x.rep().coords()));
        let image: Vec<Vec<Rational>> = d.basis().iter().map(|v| sigma.mul_vec(v)).collect();
        if Subspace::span(7, &image) == annihilator(&sx) {
            sigma_ok += 1;
        }
        if annihilator(&x.rep().scale(&int(-1))) == d {
            minus_ok += 1;
        }
    }
    Ok(InvolutionReport {
        sigma_squared_identity: (&sigma * &sigma).is_identity(),
        sigma_nontrivial: !sigma.is_identity(),
        sigma_preserves_d: sigma_ok,
        minus_identity_preserves_d: minus_ok,
        points,
    })
}

/// Each `Lᵢ`, `Sᵢ` is a multiple of `E_α − E_{−α}` for a Serre basis pair.
pub fn weyl_form(cb: &CompactBasis, sb: &SerreBasis) -> bool {
    let idx = [3, 4, 5, 0, 1, 2];
    cb.l.iter().chain(&cb.s).zip(idx).all(|(u, i)| {
        crate::exact::proportional(&u.coords(), &(&sb.pos[i] - &sb.neg[i]).coords()).is_some()
    })
}
