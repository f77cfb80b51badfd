//! Quaternions, split octonions as pairs of quaternions, and the 7-space of
//! imaginary split octonions in two coordinate charts.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{fmt_q, int, one, q, zero, Matrix, Rational, Vec3};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub r: Rational,
    pub i: Rational,
    pub j: Rational,
    pub k: Rational,
}

impl Quaternion {
    pub fn new(r: Rational, i: Rational, j: Rational, k: Rational) -> Self {
        Quaternion { r, i, j, k }
    }

    pub fn from_i64(c: [i64; 4]) -> Self {
        let [r, i, j, k] = c.map(int);
        Quaternion { r, i, j, k }
    }

    pub fn zero() -> Self {
        Self::real(zero())
    }

    pub fn one() -> Self {
        Self::real(one())
    }

    pub fn real(r: Rational) -> Self {
        Quaternion::new(r, zero(), zero(), zero())
    }

    pub fn pure(v: &Vec3) -> Self {
        Quaternion::new(zero(), v[0].clone(), v[1].clone(), v[2].clone())
    }

    /// The units `i, j, k` for `n = 0, 1, 2`.
    pub fn unit(n: usize) -> Self {
        Self::pure(&Vec3::e(n))
    }

    pub fn im(&self) -> Vec3 {
        Vec3::new(self.i.clone(), self.j.clone(), self.k.clone())
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.r.clone(), -self.i.clone(), -self.j.clone(), -self.k.clone())
    }

    pub fn norm2(&self) -> Rational {
        &self.r * &self.r + &self.i * &self.i + &self.j * &self.j + &self.k * &self.k
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Quaternion::new(&self.r * s, &self.i * s, &self.j * s, &self.k * s)
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero() && self.i.is_zero() && self.j.is_zero() && self.k.is_zero()
    }

    pub fn coords(&self) -> [Rational; 4] {
        [self.r.clone(), self.i.clone(), self.j.clone(), self.k.clone()]
    }

    pub fn require_unit(&self) -> Result<()> {
        let n = self.norm2();
        if n.is_one() {
            Ok(())
        } else {
            Err(Error::NotUnit(fmt_q(&n)))
        }
    }

    /// Matrix of `v ↦ q v q̄` on imaginary quaternions; a rotation when `|q| = 1`.
    pub fn rotation(&self) -> Matrix {
        let cols: Vec<Vec<Rational>> = (0..3)
            .map(|n| (&(self * &Quaternion::unit(n)) * &self.conj()).im().to_vec())
            .collect();
        Matrix::from_cols(&cols)
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(&self.r + &o.r, &self.i + &o.i, &self.j + &o.j, &self.k + &o.k)
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(&self.r - &o.r, &self.i - &o.i, &self.j - &o.j, &self.k - &o.k)
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        self.scale(&int(-1))
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, o: &Quaternion) -> Quaternion {
        let (a1, b1, c1, d1) = (&self.r, &self.i, &self.j, &self.k);
        let (a2, b2, c2, d2) = (&o.r, &o.i, &o.j, &o.k);
        Quaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
}

/// `(a, b) ∈ ℍ²` with product `(a,b)(c,d) = (ac + d̄b, da + bc̄)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplitOctonion {
    pub a: Quaternion,
    pub b: Quaternion,
}

impl SplitOctonion {
    pub fn new(a: Quaternion, b: Quaternion) -> Self {
        SplitOctonion { a, b }
    }

    pub fn one() -> Self {
        Self::real(one())
    }

    pub fn real(r: Rational) -> Self {
        SplitOctonion::new(Quaternion::real(r), Quaternion::zero())
    }

    pub fn conj(&self) -> Self {
        SplitOctonion::new(self.a.conj(), -&self.b)
    }

    pub fn re(&self) -> Rational {
        self.a.r.clone()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        SplitOctonion::new(self.a.scale(s), self.b.scale(s))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `x x̄`, which is always a real multiple of 1; returns that real.
    pub fn norm_form(&self) -> Rational {
        let n = oct_mul(self, &self.conj());
        debug_assert!(n.im_part().is_zero());
        n.re()
    }

    /// The octonion minus its real part.
    pub fn im_part(&self) -> SplitOctonion {
        let mut a = self.a.clone();
        a.r = zero();
        SplitOctonion::new(a, self.b.clone())
    }

    pub fn coords(&self) -> Vec<Rational> {
        let mut v = self.a.coords().to_vec();
        v.extend(self.b.coords());
        v
    }
}

pub fn oct_mul(x: &SplitOctonion, y: &SplitOctonion) -> SplitOctonion {
    let (a, b) = (&x.a, &x.b);
    let (c, d) = (&y.a, &y.b);
    SplitOctonion::new(&(a * c) + &(&d.conj() * b), &(d * a) + &(b * &c.conj()))
}

impl Add for &SplitOctonion {
    type Output = SplitOctonion;
    fn add(self, o: &SplitOctonion) -> SplitOctonion {
        SplitOctonion::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl Sub for &SplitOctonion {
    type Output = SplitOctonion;
    fn sub(self, o: &SplitOctonion) -> SplitOctonion {
        SplitOctonion::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl Mul for &SplitOctonion {
    type Output = SplitOctonion;
    fn mul(self, o: &SplitOctonion) -> SplitOctonion {
        oct_mul(self, o)
    }
}

pub const BASIS_NAMES: [&str; 7] = ["e1", "e2", "e3", "f1", "f2", "f3", "U"];

/// Imaginary split octonion as coefficients over `e₁,e₂,e₃,f₁,f₂,f₃,U`
/// with `e_i = ½(q_i, q_i)`, `f_i = ½(q_i, −q_i)`, `U = (0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ImOctonion(pub [Rational; 7]);

impl ImOctonion {
    pub fn zero() -> Self {
        ImOctonion(std::array::from_fn(|_| zero()))
    }

    pub fn basis(n: usize) -> Self {
        let mut v = Self::zero();
        v.0[n] = one();
        v
    }

    pub fn e(i: usize) -> Self {
        Self::basis(i)
    }

    pub fn f(i: usize) -> Self {
        Self::basis(3 + i)
    }

    pub fn u() -> Self {
        Self::basis(6)
    }

    pub fn from_slice(s: &[Rational]) -> Self {
        ImOctonion(std::array::from_fn(|n| s[n].clone()))
    }

    pub fn coords(&self) -> Vec<Rational> {
        self.0.to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        ImOctonion(self.0.clone().map(|x| x * s))
    }

    pub fn to_octonion(&self) -> SplitOctonion {
        let half = q(1, 2);
        let v = Quaternion::new(
            zero(),
            &half * &(&self.0[0] + &self.0[3]),
            &half * &(&self.0[1] + &self.0[4]),
            &half * &(&self.0[2] + &self.0[5]),
        );
        let h = Quaternion::new(
            self.0[6].clone(),
            &half * &(&self.0[0] - &self.0[3]),
            &half * &(&self.0[1] - &self.0[4]),
            &half * &(&self.0[2] - &self.0[5]),
        );
        SplitOctonion::new(v, h)
    }

    /// `None` if `o` has a nonzero real part.
    pub fn from_octonion(o: &SplitOctonion) -> Option<Self> {
        if !o.a.r.is_zero() {
            return None;
        }
        let v = o.a.im();
        let h = o.b.im();
        let e = &v + &h;
        let f = &v - &h;
        Some(ImOctonion([
            e[0].clone(),
            e[1].clone(),
            e[2].clone(),
            f[0].clone(),
            f[1].clone(),
            f[2].clone(),
            o.b.r.clone(),
        ]))
    }

    pub fn from_pair(v: &Vec3, h: &Quaternion) -> Self {
        Self::from_octonion(&SplitOctonion::new(Quaternion::pure(v), h.clone()))
            .expect("pure first slot")
    }

    /// The `(v, h)` pair with the octonion equal to `(v, h)`, `v` pure.
    pub fn to_pair(&self) -> (Vec3, Quaternion) {
        let o = self.to_octonion();
        (o.a.im(), o.b)
    }

    pub fn to_cartan(&self) -> CartanPoint {
        let c = &self.0;
        CartanPoint {
            x: Vec3::new(-c[0].clone(), -c[1].clone(), -c[2].clone()),
            y: Vec3::new(c[3].clone(), c[4].clone(), c[5].clone()),
            z: c[6].clone(),
        }
    }

    pub fn from_cartan(p: &CartanPoint) -> Self {
        ImOctonion([
            -p.x[0].clone(),
            -p.x[1].clone(),
            -p.x[2].clone(),
            p.y[0].clone(),
            p.y[1].clone(),
            p.y[2].clone(),
            p.z.clone(),
        ])
    }
}

impl Add for &ImOctonion {
    type Output = ImOctonion;
    fn add(self, o: &ImOctonion) -> ImOctonion {
        ImOctonion(std::array::from_fn(|n| &self.0[n] + &o.0[n]))
    }
}

impl Sub for &ImOctonion {
    type Output = ImOctonion;
    fn sub(self, o: &ImOctonion) -> ImOctonion {
        ImOctonion(std::array::from_fn(|n| &self.0[n] - &o.0[n]))
    }
}

/// `⟨x, y⟩ = Re(x ȳ)`.
pub fn inner_product(x: &ImOctonion, y: &ImOctonion) -> Rational {
    oct_mul(&x.to_octonion(), &y.to_octonion().conj()).re()
}

/// Gram matrix of [`inner_product`] in the `e, f, U` basis.
pub fn inner_product_gram() -> Matrix {
    let mut g = Matrix::zeros(7, 7);
    for a in 0..7 {
        for b in 0..7 {
            g[(a, b)] = inner_product(&ImOctonion::basis(a), &ImOctonion::basis(b));
        }
    }
    g
}

/// Cartan coordinates `(x, y, z)` over the basis `E_i = −e_i, f_i, U`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanPoint {
    pub x: Vec3,
    pub y: Vec3,
    pub z: Rational,
}

impl CartanPoint {
    pub fn new(x: Vec3, y: Vec3, z: Rational) -> Self {
        CartanPoint { x, y, z }
    }

    pub fn zero() -> Self {
        CartanPoint::new(Vec3::zero(), Vec3::zero(), zero())
    }

    /// Coordinates in the order `x₁,x₂,x₃,y₁,y₂,y₃,z`.
    pub fn coords(&self) -> Vec<Rational> {
        let mut v = self.x.to_vec();
        v.extend(self.y.to_vec());
        v.push(self.z.clone());
        v
    }

    pub fn from_coords(c: &[Rational]) -> Self {
        CartanPoint::new(
            Vec3::from_slice(&c[0..3]),
            Vec3::from_slice(&c[3..6]),
            c[6].clone(),
        )
    }

    pub fn from_i64(c: [i64; 7]) -> Self {
        Self::from_coords(&c.map(int))
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }
}

/// `J = z² + x·y`.
#[allow(non_snake_case)]
pub fn J(p: &CartanPoint) -> Rational {
    &p.z * &p.z + p.x.dot(&p.y)
}

/// Gram matrix `G` of `J` in Cartan coordinates: `J(p) = pᵗ G p`.
pub fn j_gram() -> Matrix {
    let mut g = Matrix::zeros(7, 7);
    let half = q(1, 2);
    for i in 0..3 {
        g[(i, 3 + i)] = half.clone();
        g[(3 + i, i)] = half.clone();
    }
    g[(6, 6)] = one();
    g
}

/// Product of two imaginary split octonions in Cartan coordinates, derived
/// from the pair product: returns (imaginary part, real part).
pub fn cartan_coordinate_product(p: &CartanPoint, r: &CartanPoint) -> (CartanPoint, Rational) {
    let (x, y, z) = (&p.x, &p.y, &p.z);
    let (x2, y2, z2) = (&r.x, &r.y, &r.z);
    let half = q(1, 2);
    let nx = &(&(-&y.cross(y2)) - &x2.scale(z)) + &x.scale(z2);
    let ny = &(&x.cross(x2) + &y2.scale(z)) - &y.scale(z2);
    let nz = &half * &(x2.dot(y) - x.dot(y2));
    let re = z * z2 + &half * &(x.dot(y2) + x2.dot(y));
    (CartanPoint::new(nx, ny, nz), re)
}

/// The Cartan-coordinate product exactly as printed, for comparison only:
/// its `z` component and real part disagree with [`cartan_coordinate_product`].
pub fn printed_cartan_product(p: &CartanPoint, r: &CartanPoint) -> (CartanPoint, Rational) {
    let (x, y, z) = (&p.x, &p.y, &p.z);
    let (x2, y2, z2) = (&r.x, &r.y, &r.z);
    let half = q(1, 2);
    let nx = &(&(-&y.cross(y2)) - &x2.scale(z)) + &x.scale(z2);
    let ny = &(&x.cross(x2) + &y2.scale(z)) - &y.scale(z2);
    let skew = &half * &(x.dot(y2) - x2.dot(y));
    let re = z * z2 + skew.clone();
    (CartanPoint::new(nx, ny, skew), re)
}

/// An entry of the basis multiplication table: a real part plus an
/// imaginary part in the `e, f, U` basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub re: Rational,
    pub im: ImOctonion,
}

impl TableEntry {
    fn from_octonion(o: &SplitOctonion) -> Self {
        TableEntry {
            re: o.re(),
            im: ImOctonion::from_octonion(&o.im_part()).expect("imaginary part"),
        }
    }

    fn term(c: i64, n: usize) -> Self {
        TableEntry {
            re: zero(),
            im: ImOctonion::basis(n).scale(&int(c)),
        }
    }
}

impl fmt::Display for TableEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(Rational, &str)> = Vec::new();
        if !self.re.is_zero() {
            terms.push((self.re.clone(), ""));
        }
        for (c, name) in self.im.0.iter().zip(BASIS_NAMES) {
            if !c.is_zero() {
                terms.push((c.clone(), name));
            }
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (n, (c, name)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (n, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if name.is_empty() || !mag.is_one() {
                out.push_str(&fmt_q(&mag));
            }
            out.push_str(name);
        }
        write!(f, "{out}")
    }
}

#[derive(Clone, Debug)]
pub struct MultiplicationTable {
    /// `entries[a][b]` is `basis[a] · basis[b]`.
    pub entries: Vec<Vec<TableEntry>>,
}

impl MultiplicationTable {
    pub fn to_text(&self) -> String {
        let w = 14;
        let mut s = format!("{:<6}", "");
        for n in BASIS_NAMES {
            s.push_str(&format!("{n:<w$}"));
        }
        s = s.trim_end().to_string();
        s.push('\n');
        for (a, row) in self.entries.iter().enumerate() {
            let mut line = format!("{:<6}", BASIS_NAMES[a]);
            for e in row {
                line.push_str(&format!("{:<w$}", e.to_string()));
            }
            s.push_str(line.trim_end());
            s.push('\n');
        }
        s
    }
}

/// The table as printed: `e_i² = f_i² = 0`, `e_i e_j = f_k`, `f_i f_j = e_k`
/// cyclically and antisymmetric, `e_i f_j = 0` for `i ≠ j`, `e_iU = e_i`,
/// `f_iU = −f_i`, `U e_i = −e_i`, `U f_i = f_i`, `e_i f_i = −½ + ½U`,
/// `f_i e_i = −½ − ½U`, `U² = 1`.
pub fn expected_entry(a: usize, b: usize) -> TableEntry {
    let zero_entry = TableEntry {
        re: zero(),
        im: ImOctonion::zero(),
    };
    let cyc = |i: usize, j: usize| -> Option<(i64, usize)> {
        let k = 3 - i - j;
        if (i + 1) % 3 == j {
            Some((1, k))
        } else {
            Some((-1, k))
        }
    };
    match (a, b) {
        (6, 6) => TableEntry {
            re: one(),
            im: ImOctonion::zero(),
        },
        (i, 6) if i < 3 => TableEntry::term(1, i),
        (i, 6) => TableEntry::term(-1, i),
        (6, i) if i < 3 => TableEntry::term(-1, i),
        (6, i) => TableEntry::term(1, i),
        (i, j) if i < 3 && j < 3 => {
            if i == j {
                zero_entry
            } else {
                let (s, k) = cyc(i, j).unwrap();
                TableEntry::term(s, 3 + k)
            }
        }
        (i, j) if i >= 3 && j >= 3 => {
            let (i, j) = (i - 3, j - 3);
            if i == j {
                zero_entry
            } else {
                let (s, k) = cyc(i, j).unwrap();
                TableEntry::term(s, k)
            }
        }
        (i, j) => {
            let (ii, jj) = (i % 3, j % 3);
            if ii != jj {
                return zero_entry;
            }
            let half = q(1, 2);
            let u = if i < 3 { half.clone() } else { -half.clone() };
            TableEntry {
                re: -half,
                im: ImOctonion::u().scale(&u),
            }
        }
    }
}

/// Computes all 49 products of the basis and compares each with the
/// printed table.
pub fn basis_multiplication_table() -> Result<MultiplicationTable> {
    let mut entries = Vec::with_capacity(7);
    for a in 0..7 {
        let mut row = Vec::with_capacity(7);
        for b in 0..7 {
            let p = oct_mul(
                &ImOctonion::basis(a).to_octonion(),
                &ImOctonion::basis(b).to_octonion(),
            );
            let got = TableEntry::from_octonion(&p);
            let want = expected_entry(a, b);
            if got != want {
                return Err(Error::TableMismatch {
                    entry: format!("{}*{}", BASIS_NAMES[a], BASIS_NAMES[b]),
                    expected: want.to_string(),
                    computed: got.to_string(),
                });
            }
            row.push(got);
        }
        entries.push(row);
    }
    Ok(MultiplicationTable { entries })
}

/// Exponents of the torus scaling on `e₁,e₂,e₃`; `f_i` carries the
/// negatives and `U` weight zero.
pub const WEIGHT_TABLE: [[i64; 3]; 3] = [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]];

/// Weight triple of basis vector `n` (`e, f, U` ordering).
pub fn weight_of_basis(n: usize) -> [i64; 3] {
    match n {
        0..=2 => WEIGHT_TABLE[n],
        3..=5 => WEIGHT_TABLE[n - 3].map(|w| -w),
        _ => [0, 0, 0],
    }
}

/// Scales each basis vector by `λ₁^α λ₂^β λ₃^γ` for its weight `(α, β, γ)`.
pub fn torus_scaling(lambda: &[Rational; 3], v: &ImOctonion) -> ImOctonion {
    let pow = |x: &Rational, k: i64| -> Rational {
        let base = if k < 0 { x.recip() } else { x.clone() };
        (0..k.unsigned_abs()).fold(one(), |acc, _| acc * &base)
    };
    ImOctonion(std::array::from_fn(|n| {
        let w = weight_of_basis(n);
        let s = pow(&lambda[0], w[0]) * pow(&lambda[1], w[1]) * pow(&lambda[2], w[2]);
        &v.0[n] * &s
    }))
}
