//! Cartan subalgebra, roots of g₂, weights of V, the parabolic p, the plane
//! W and derived flags of homogeneous distribution data.

use num::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{
    char_poly, fmt_q, int, kernel_basis, normalize_first, proportional, rational_roots, Matrix, Rational, Subspace, Vec3,
};
use crate::g2::{ad_matrix, bracket, coords_span, G2Element, DIM};
use crate::octonion::{weight_of_basis, CartanPoint, ImOctonion, BASIS_NAMES};

/// `T₁ = diag(1,−1,0)`, `T₂ = diag(0,1,−1)`.
pub fn cartan_basis() -> [G2Element; 2] {
    [
        G2Element::diag([int(1), int(-1), int(0)]).expect("traceless"),
        G2Element::diag([int(0), int(1), int(-1)]).expect("traceless"),
    ]
}

/// A functional on the Cartan, stored as its values on `T₁, T₂`.
pub type Pair = [Rational; 2];

fn pair(a: i64, b: i64) -> Pair {
    [int(a), int(b)]
}

fn padd(a: &Pair, b: &Pair) -> Pair {
    [&a[0] + &b[0], &a[1] + &b[1]]
}

fn psub(a: &Pair, b: &Pair) -> Pair {
    [&a[0] - &b[0], &a[1] - &b[1]]
}

fn pneg(a: &Pair) -> Pair {
    [-a[0].clone(), -a[1].clone()]
}

/// Weight `d_i` of the coordinate direction `x_i`.
pub fn coordinate_weight(i: usize) -> Pair {
    [pair(1, 0), pair(-1, 1), pair(0, -1)][i].clone()
}

/// The fixed labelling: σ₁ = d₃, σ₂ = −d₂, σ₃ = −d₁, λ₁ = σ₂ − σ₃,
/// λ₂ = σ₁ + σ₃, λ₃ = σ₁ + σ₂, together with the negatives.
pub fn labelled_roots() -> Vec<(String, Pair)> {
    let d = |i| coordinate_weight(i);
    let s1 = d(2);
    let s2 = pneg(&d(1));
    let s3 = pneg(&d(0));
    let positive = [
        ("sigma1", s1.clone()),
        ("sigma2", s2.clone()),
        ("sigma3", s3.clone()),
        ("lambda1", psub(&s2, &s3)),
        ("lambda2", padd(&s1, &s3)),
        ("lambda3", padd(&s1, &s2)),
    ];
    let mut out: Vec<(String, Pair)> = positive.iter().map(|(n, p)| (n.to_string(), p.clone())).collect();
    out.extend(positive.iter().map(|(n, p)| (format!("-{n}"), pneg(p))));
    out
}

#[derive(Clone, Debug)]
pub struct Root {
    pub label: String,
    pub pair: Pair,
    pub vector: G2Element,
    pub long: bool,
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    pub cartan: [G2Element; 2],
    pub roots: Vec<Root>,
}

impl RootDatum {
    pub fn get(&self, label: &str) -> &Root {
        self.roots
            .iter()
            .find(|r| r.label == label)
            .unwrap_or_else(|| panic!("no root {label}"))
    }

    pub fn find(&self, p: &Pair) -> Option<&Root> {
        self.roots.iter().find(|r| &r.pair == p)
    }

    pub fn cartan_space(&self) -> Subspace {
        coords_span(&self.cartan)
    }

    pub fn root_space(&self, label: &str) -> Subspace {
        coords_span(std::slice::from_ref(&self.get(label).vector))
    }
}

pub fn killing_form(u: &G2Element, v: &G2Element) -> Rational {
    (&ad_matrix(u) * &ad_matrix(v)).trace()
}

/// Killing-dual norm `⟨α, β⟩` of two Cartan functionals, using the
/// Killing form restricted to the Cartan.
pub fn dual_pairing(a: &Pair, b: &Pair) -> Rational {
    static GRAM_INV: std::sync::OnceLock<Matrix> = std::sync::OnceLock::new();
    let gi = GRAM_INV.get_or_init(|| {
        let t = cartan_basis();
        let g = Matrix::from_rows(vec![
            vec![killing_form(&t[0], &t[0]), killing_form(&t[0], &t[1])],
            vec![killing_form(&t[1], &t[0]), killing_form(&t[1], &t[1])],
        ]);
        g.inverse().expect("Killing form is nondegenerate on the Cartan")
    });
    let gb = gi.mul_vec(b);
    &a[0] * &gb[0] + &a[1] * &gb[1]
}

/// Simultaneous eigen-decomposition of `ad(T₁)`, `ad(T₂)`.
pub fn root_decomposition() -> Result<RootDatum> {
    let t = cartan_basis();
    let (ad1, ad2) = (ad_matrix(&t[0]), ad_matrix(&t[1]));
    // a generic combination separates all twelve roots
    let generic = &ad1 + &ad2.scale(&int(7));
    let (eigs, rest) = rational_roots(&char_poly(&generic));
    if rest != 0 {
        return Err(Error::DecompositionFailure(format!(
            "{rest} eigenvalues are not rational"
        )));
    }
    let mut found = Vec::new();
    let mut total = 0;
    for (lam, mult) in eigs {
        let shifted = &generic - &Matrix::identity(DIM).scale(&lam);
        let ker = kernel_basis(&shifted);
        if ker.len() != mult {
            return Err(Error::DecompositionFailure(format!(
                "eigenvalue {} is not semisimple",
                fmt_q(&lam)
            )));
        }
        total += mult;
        if lam.is_zero() {
            if mult != 2 {
                return Err(Error::DecompositionFailure("Cartan is not 2-dimensional".into()));
            }
            continue;
        }
        if mult != 1 {
            return Err(Error::DecompositionFailure(format!(
                "root space for eigenvalue {} has dimension {mult}",
                fmt_q(&lam)
            )));
        }
        let v = normalize_first(&ker[0]);
        let e = G2Element::from_coords(&v);
        let a1 = proportional(&bracket(&t[0], &e).coords(), &v);
        let a2 = proportional(&bracket(&t[1], &e).coords(), &v);
        let (Some(a1), Some(a2)) = (a1, a2) else {
            return Err(Error::DecompositionFailure("not a common eigenvector".into()));
        };
        found.push(([a1, a2], e));
    }
    if total != DIM || found.len() != 12 {
        return Err(Error::DecompositionFailure(format!("found {} roots", found.len())));
    }
    let norms: Vec<Rational> = found.iter().map(|(p, _)| dual_pairing(p, p)).collect();
    let shortest = norms.iter().min().expect("twelve roots").clone();
    let mut roots = Vec::with_capacity(12);
    for (label, p) in labelled_roots() {
        let idx = found
            .iter()
            .position(|(fp, _)| *fp == p)
            .ok_or_else(|| Error::DecompositionFailure(format!("{label} is not a root")))?;
        roots.push(Root {
            label,
            pair: p,
            vector: found[idx].1.clone(),
            long: norms[idx] != shortest,
        });
    }
    Ok(RootDatum { cartan: t, roots })
}

/// Short root vectors live in the `b`/`c` slots, long ones in the
/// off-diagonal `A` slot.
pub fn check_root_vector_shapes(rd: &RootDatum) -> bool {
    rd.roots.iter().all(|r| {
        let v = &r.vector;
        if r.long {
            v.b.is_zero() && v.c.is_zero() && (0..3).all(|i| v.a[(i, i)].is_zero())
        } else {
            v.a.is_zero() && (v.b.is_zero() != v.c.is_zero())
        }
    })
}

pub const PARABOLIC_ROOTS: [&str; 7] = [
    "-sigma1", "sigma2", "-sigma3", "lambda1", "-lambda2", "lambda3", "-lambda3",
];
pub const PLANE_ROOTS: [&str; 2] = ["sigma1", "-sigma2"];

/// Smallest subalgebra containing `gens`.
pub fn generated_subalgebra(gens: &[G2Element]) -> Subspace {
    let mut s = coords_span(gens);
    loop {
        let basis: Vec<G2Element> = s.basis().iter().map(|v| G2Element::from_coords(v)).collect();
        let mut new = Vec::new();
        for (i, u) in basis.iter().enumerate() {
            for v in &basis[i + 1..] {
                new.push(bracket(u, v).coords());
            }
        }
        let next = s.with(&new);
        if next.dim() == s.dim() {
            return s;
        }
        s = next;
    }
}

pub fn is_subalgebra(s: &Subspace) -> bool {
    let basis: Vec<G2Element> = s.basis().iter().map(|v| G2Element::from_coords(v)).collect();
    basis
        .iter()
        .enumerate()
        .all(|(i, u)| basis[i + 1..].iter().all(|v| s.contains(&bracket(u, v).coords())))
}

/// `𝔱` plus the seven root spaces of [`PARABOLIC_ROOTS`].
pub fn build_parabolic(rd: &RootDatum) -> Result<Subspace> {
    let mut gens: Vec<G2Element> = rd.cartan.to_vec();
    gens.extend(PARABOLIC_ROOTS.iter().map(|l| rd.get(l).vector.clone()));
    let p = coords_span(&gens);
    if !is_subalgebra(&p) {
        return Err(Error::NotClosed("parabolic".into()));
    }
    Ok(p)
}

/// Adding any missing root space to `p` generates all of g₂, so no
/// subalgebra sits strictly between them.
pub fn parabolic_is_maximal(rd: &RootDatum, p: &Subspace) -> bool {
    rd.roots
        .iter()
        .filter(|r| !p.contains(&r.vector.coords()))
        .all(|r| {
            let mut gens: Vec<G2Element> = p.basis().iter().map(|v| G2Element::from_coords(v)).collect();
            gens.push(r.vector.clone());
            generated_subalgebra(&gens).dim() == DIM
        })
}

pub fn plane_w(rd: &RootDatum) -> Vec<G2Element> {
    PLANE_ROOTS.iter().map(|l| rd.get(l).vector.clone()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Algebra {
    G2,
    So3So3,
}

impl Algebra {
    pub fn dim(self) -> usize {
        match self {
            Algebra::G2 => DIM,
            Algebra::So3So3 => 6,
        }
    }

    pub fn bracket(self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        match self {
            Algebra::G2 => bracket(&G2Element::from_coords(a), &G2Element::from_coords(b)).coords(),
            Algebra::So3So3 => {
                let c1 = Vec3::from_slice(&a[..3]).cross(&Vec3::from_slice(&b[..3]));
                let c2 = Vec3::from_slice(&a[3..]).cross(&Vec3::from_slice(&b[3..]));
                let mut v = c1.to_vec();
                v.extend(c2.to_vec());
                v
            }
        }
    }
}

/// Homogeneous distribution data: an algebra, an isotropy subalgebra, and a
/// plane taken modulo the isotropy.
#[derive(Clone, Debug)]
pub struct DistributionData {
    pub algebra: Algebra,
    pub isotropy: Subspace,
    pub plane: Vec<Vec<Rational>>,
}

impl DistributionData {
    /// Isotropy plus plane.
    pub fn lifted_plane(&self) -> Subspace {
        self.isotropy.with(&self.plane)
    }

    /// `[𝔥, W] ⊆ W + 𝔥`.
    pub fn isotropy_invariant(&self) -> bool {
        let lifted = self.lifted_plane();
        self.isotropy.basis().iter().all(|h| {
            self.plane
                .iter()
                .all(|w| lifted.contains(&self.algebra.bracket(h, w)))
        })
    }

    pub fn same_as(&self, o: &DistributionData) -> bool {
        self.algebra == o.algebra
            && self.isotropy == o.isotropy
            && self.lifted_plane() == o.lifted_plane()
    }
}

fn bracket_span(alg: Algebra, a: &Subspace, b: &Subspace) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    for u in a.basis() {
        for v in b.basis() {
            out.push(alg.bracket(u, v));
        }
    }
    out
}

/// Dimensions of `W`, `W + [W,W]`, `W + [W,W] + [W,[W,W]]` modulo the
/// isotropy.
pub fn derived_flag(data: &DistributionData) -> Vec<usize> {
    let h = data.isotropy.dim();
    let f1 = data.lifted_plane();
    let f2 = f1.with(&bracket_span(data.algebra, &f1, &f1));
    let f3 = f2.with(&bracket_span(data.algebra, &f1, &f2));
    vec![f1.dim() - h, f2.dim() - h, f3.dim() - h]
}

pub fn g2_distribution_data(rd: &RootDatum, p: &Subspace) -> DistributionData {
    DistributionData {
        algebra: Algebra::G2,
        isotropy: p.clone(),
        plane: plane_w(rd).iter().map(G2Element::coords).collect(),
    }
}

#[derive(Clone, Debug)]
pub struct Weight {
    pub name: &'static str,
    pub pair: Pair,
    /// Exponents `(α, β, γ)` with `α + β + γ = 0`.
    pub triple: [i64; 3],
    pub vector: CartanPoint,
}

#[derive(Clone, Debug)]
pub struct WeightDatum {
    pub weights: Vec<Weight>,
}

impl WeightDatum {
    pub fn find(&self, p: &Pair) -> Option<&Weight> {
        self.weights.iter().find(|w| &w.pair == p)
    }
}

/// `(w(T₁), w(T₂)) = (a, b)` corresponds to exponents
/// `t₁ = 2a + b`, `t₂ = t₁ − 3a`, `t₃ = t₂ − 3b`.
pub fn triple_of(p: &Pair) -> Option<[i64; 3]> {
    let t1 = &int(2) * &p[0] + &p[1];
    let t2 = &t1 - &(&int(3) * &p[0]);
    let t3 = &t2 - &(&int(3) * &p[1]);
    let as_int = |x: &Rational| -> Option<i64> { x.is_integer().then(|| x.to_integer().try_into().ok())? };
    Some([as_int(&t1)?, as_int(&t2)?, as_int(&t3)?])
}

/// Decomposes V under the Cartan and checks the weight table and the
/// inclusion half of the shifting rule.
pub fn weight_decomposition(rd: &RootDatum) -> Result<WeightDatum> {
    let mut weights = Vec::with_capacity(7);
    for (n, name) in BASIS_NAMES.iter().enumerate() {
        let v = ImOctonion::basis(n).to_cartan();
        let coords = v.coords();
        let vals: Vec<Rational> = rd
            .cartan
            .iter()
            .map(|t| {
                proportional(&t.act(&v).coords(), &coords)
                    .ok_or_else(|| Error::DecompositionFailure(format!("{name} is not a weight vector")))
            })
            .collect::<Result<_>>()?;
        let p = [vals[0].clone(), vals[1].clone()];
        let triple = triple_of(&p).ok_or_else(|| Error::DecompositionFailure(format!("{name}: non-integral weight")))?;
        if triple != weight_of_basis(n) {
            return Err(Error::TableMismatch {
                entry: format!("weight of {name}"),
                expected: format!("{:?}", weight_of_basis(n)),
                computed: format!("{triple:?}"),
            });
        }
        weights.push(Weight {
            name,
            pair: p,
            triple,
            vector: v,
        });
    }
    let wd = WeightDatum { weights };
    for r in &rd.roots {
        for w in &wd.weights {
            let image = r.vector.act(&w.vector);
            let target = padd(&r.pair, &w.pair);
            match wd.find(&target) {
                Some(t) => {
                    if !image.is_zero() && proportional(&image.coords(), &t.vector.coords()).is_none() {
                        return Err(Error::RelationFailure(format!("{} * {} leaves V_(w+a)", r.label, w.name)));
                    }
                }
                None => {
                    if !image.is_zero() {
                        return Err(Error::RelationFailure(format!("{} * {} should vanish", r.label, w.name)));
                    }
                }
            }
        }
    }
    Ok(wd)
}

/// Pairs `(root, weight)` with `w + α` a weight but `g_α V_w = 0`; empty
/// when the equality half of the shifting rule holds.
pub fn shifting_rule_gaps(rd: &RootDatum, wd: &WeightDatum) -> Vec<(String, &'static str)> {
    let mut gaps = Vec::new();
    for r in &rd.roots {
        for w in &wd.weights {
            if wd.find(&padd(&r.pair, &w.pair)).is_some() && r.vector.act(&w.vector).is_zero() {
                gaps.push((r.label.clone(), w.name));
            }
        }
    }
    gaps
}

/// `(long/short norm ratio, set of squared cosines between roots)`.
pub fn root_metric(rd: &RootDatum) -> (Rational, Vec<Rational>) {
    let short = rd.roots.iter().find(|r| !r.long).expect("short root");
    let long = rd.roots.iter().find(|r| r.long).expect("long root");
    let ratio = dual_pairing(&long.pair, &long.pair) / dual_pairing(&short.pair, &short.pair);
    let mut cos2 = Vec::new();
    for a in &rd.roots {
        for b in &rd.roots {
            let ab = dual_pairing(&a.pair, &b.pair);
            let c = &ab * &ab / (dual_pairing(&a.pair, &a.pair) * dual_pairing(&b.pair, &b.pair));
            if !cos2.contains(&c) {
                cos2.push(c);
            }
        }
    }
    cos2.sort();
    (ratio, cos2)
}

/// Sign of a Killing norm, reported for the record.
pub fn killing_sign_on_cartan() -> i32 {
    let t = cartan_basis();
    let k = killing_form(&t[0], &t[0]);
    if k.is_positive() {
        1
    } else if k.is_negative() {
        -1
    } else {
        0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RootRecord {
    pub label: String,
    pub values: [String; 2],
    pub length: &'static str,
    pub vector: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightRecord {
    pub name: &'static str,
    pub values: [String; 2],
    pub exponents: [i64; 3],
}

#[derive(Clone, Debug, Serialize)]
pub struct RootsDump {
    pub cartan: [String; 2],
    pub roots: Vec<RootRecord>,
    pub weights: Vec<WeightRecord>,
    pub parabolic_roots: Vec<&'static str>,
    pub plane_roots: Vec<&'static str>,
    pub derived_flag: Vec<usize>,
}

pub fn roots_dump() -> Result<RootsDump> {
    let rd = root_decomposition()?;
    let wd = weight_decomposition(&rd)?;
    let p = build_parabolic(&rd)?;
    Ok(RootsDump {
        cartan: ["diag(1,-1,0)".into(), "diag(0,1,-1)".into()],
        roots: rd
            .roots
            .iter()
            .map(|r| RootRecord {
                label: r.label.clone(),
                values: [fmt_q(&r.pair[0]), fmt_q(&r.pair[1])],
                length: if r.long { "long" } else { "short" },
                vector: r.vector.to_string(),
            })
            .collect(),
        weights: wd
            .weights
            .iter()
            .map(|w| WeightRecord {
                name: w.name,
                values: [fmt_q(&w.pair[0]), fmt_q(&w.pair[1])],
                exponents: w.triple,
            })
            .collect(),
        parabolic_roots: PARABOLIC_ROOTS.to_vec(),
        plane_roots: PLANE_ROOTS.to_vec(),
        derived_flag: derived_flag(&g2_distribution_data(&rd, &p)),
    })
}
