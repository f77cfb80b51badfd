//! The 14-dimensional matrix Lie algebra g₂ acting on Cartan coordinates
//! `(x₁,x₂,x₃,y₁,y₂,y₃,z)`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::Zero;

use crate::error::{Error, Result};
use crate::exact::{fmt_q, int, one, q, zero, Matrix, Rational, Sampler, Subspace, Vec3};
use crate::octonion::{j_gram, CartanPoint};

pub const DIM: usize = 14;

/// `(A, b, c)` with `tr A = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct G2Element {
    pub a: Matrix,
    pub b: Vec3,
    pub c: Vec3,
}

impl G2Element {
    pub fn new(a: Matrix, b: Vec3, c: Vec3) -> Result<Self> {
        let t = a.trace();
        if !t.is_zero() {
            return Err(Error::NonTraceless(fmt_q(&t)));
        }
        Ok(G2Element { a, b, c })
    }

    pub fn zero() -> Self {
        G2Element {
            a: Matrix::zeros(3, 3),
            b: Vec3::zero(),
            c: Vec3::zero(),
        }
    }

    pub fn from_a(a: Matrix) -> Result<Self> {
        Self::new(a, Vec3::zero(), Vec3::zero())
    }

    pub fn from_b(b: Vec3) -> Self {
        G2Element {
            b,
            ..Self::zero()
        }
    }

    pub fn from_c(c: Vec3) -> Self {
        G2Element {
            c,
            ..Self::zero()
        }
    }

    /// The elementary matrix `E_ij` (zero-based) as an `A`-block element, `i ≠ j`.
    pub fn elementary(i: usize, j: usize) -> Self {
        assert_ne!(i, j);
        let mut a = Matrix::zeros(3, 3);
        a[(i, j)] = one();
        G2Element {
            a,
            ..Self::zero()
        }
    }

    pub fn diag(d: [Rational; 3]) -> Result<Self> {
        Self::from_a(Matrix::diag(&d))
    }

    /// Coordinates `a₁₁,a₁₂,a₁₃,a₂₁,a₂₂,a₂₃,a₃₁,a₃₂,b₁,b₂,b₃,c₁,c₂,c₃`;
    /// `a₃₃` is determined by the trace.
    pub fn coords(&self) -> Vec<Rational> {
        let mut v: Vec<Rational> = self.a.entries()[..8].to_vec();
        v.extend(self.b.to_vec());
        v.extend(self.c.to_vec());
        v
    }

    pub fn from_coords(v: &[Rational]) -> Self {
        assert_eq!(v.len(), DIM);
        let mut a = Matrix::zeros(3, 3);
        for n in 0..8 {
            a[(n / 3, n % 3)] = v[n].clone();
        }
        a[(2, 2)] = -(&v[0] + &v[4]);
        G2Element {
            a,
            b: Vec3::from_slice(&v[8..11]),
            c: Vec3::from_slice(&v[11..14]),
        }
    }

    pub fn basis(n: usize) -> Self {
        let mut v = vec![zero(); DIM];
        v[n] = one();
        Self::from_coords(&v)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        G2Element {
            a: self.a.scale(s),
            b: self.b.scale(s),
            c: self.c.scale(s),
        }
    }

    pub fn rho(&self) -> Matrix {
        let mut m = Matrix::zeros(7, 7);
        m.set_block(0, 0, &self.a);
        m.set_block(0, 3, &self.c.hat());
        m.set_block(3, 0, &-&self.b.hat());
        m.set_block(3, 3, &-&self.a.transpose());
        for i in 0..3 {
            m[(i, 6)] = &int(2) * &self.b[i];
            m[(3 + i, 6)] = &int(-2) * &self.c[i];
            m[(6, i)] = self.c[i].clone();
            m[(6, 3 + i)] = -self.b[i].clone();
        }
        m
    }

    /// Reads `(A, b, c)` back from a 7×7 matrix; `None` if `m` is not in the
    /// image of ρ.
    pub fn from_matrix(m: &Matrix) -> Option<Self> {
        let a = m.block(0, 0, 3, 3);
        let b = Vec3::new(-m[(6, 3)].clone(), -m[(6, 4)].clone(), -m[(6, 5)].clone());
        let c = Vec3::new(m[(6, 0)].clone(), m[(6, 1)].clone(), m[(6, 2)].clone());
        let u = G2Element::new(a, b, c).ok()?;
        (u.rho() == *m).then_some(u)
    }

    pub fn act(&self, p: &CartanPoint) -> CartanPoint {
        CartanPoint::from_coords(&self.rho().mul_vec(&p.coords()))
    }
}

impl Add for &G2Element {
    type Output = G2Element;
    fn add(self, o: &G2Element) -> G2Element {
        G2Element {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
            c: &self.c + &o.c,
        }
    }
}

impl Sub for &G2Element {
    type Output = G2Element;
    fn sub(self, o: &G2Element) -> G2Element {
        G2Element {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
            c: &self.c - &o.c,
        }
    }
}

impl Neg for &G2Element {
    type Output = G2Element;
    fn neg(self) -> G2Element {
        self.scale(&int(-1))
    }
}

impl fmt::Display for G2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A={} b={} c={}", self.a, crate::exact::fmt_vec(&self.b.0), crate::exact::fmt_vec(&self.c.0))
    }
}

pub fn rho(a: &Matrix, b: &Vec3, c: &Vec3) -> Result<Matrix> {
    Ok(G2Element::new(a.clone(), b.clone(), c.clone())?.rho())
}

/// Closed-form bracket:
/// `A″ = [A,A′] + 3(bc′ᵗ − b′cᵗ) − (b·c′ − b′·c)I`,
/// `b″ = Ab′ − A′b − 2c×c′`, `c″ = −Aᵗc′ + A′ᵗc + 2b×b′`.
pub fn bracket(u: &G2Element, v: &G2Element) -> G2Element {
    let outer = |x: &Vec3, y: &Vec3| {
        let mut m = Matrix::zeros(3, 3);
        for i in 0..3 {
            for j in 0..3 {
                m[(i, j)] = &x[i] * &y[j];
            }
        }
        m
    };
    let s = u.b.dot(&v.c) - v.b.dot(&u.c);
    let a = &(&u.a.commutator(&v.a) + &(&outer(&u.b, &v.c) - &outer(&v.b, &u.c)).scale(&int(3)))
        - &Matrix::identity(3).scale(&s);
    let b = &(&u.a.mul_vec3(&v.b) - &v.a.mul_vec3(&u.b)) - &u.c.cross(&v.c).scale(&int(2));
    let c = &(&v.a.transpose().mul_vec3(&u.c) - &u.a.transpose().mul_vec3(&v.c))
        + &u.b.cross(&v.b).scale(&int(2));
    G2Element { a, b, c }
}

/// [`bracket`], also checking that ρ of the result is the matrix commutator.
pub fn bracket_checked(u: &G2Element, v: &G2Element) -> Result<G2Element> {
    let w = bracket(u, v);
    let comm = u.rho().commutator(&v.rho());
    if w.rho() != comm || G2Element::from_matrix(&comm).is_none() {
        return Err(Error::ClosureViolation);
    }
    Ok(w)
}

/// Matrix of `ad(u)` on the coordinates of [`G2Element::coords`].
pub fn ad_matrix(u: &G2Element) -> Matrix {
    let cols: Vec<Vec<Rational>> = (0..DIM)
        .map(|n| bracket(u, &G2Element::basis(n)).coords())
        .collect();
    Matrix::from_cols(&cols)
}

pub fn coords_span(elems: &[G2Element]) -> Subspace {
    let vs: Vec<Vec<Rational>> = elems.iter().map(G2Element::coords).collect();
    Subspace::span(DIM, &vs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanOperator {
    pub label: String,
    pub matrix: Matrix,
}

/// A linear vector field `Σ c · p_from ∂_to` written as a matrix whose entry
/// `(to, from)` is the coefficient.
fn field(terms: &[(Rational, usize, usize)]) -> Matrix {
    let mut m = Matrix::zeros(7, 7);
    for (c, from, to) in terms {
        m[(*to, *from)] += c;
    }
    m
}

const fn xi(i: usize) -> usize {
    i
}
const fn yi(i: usize) -> usize {
    3 + i
}
const Z: usize = 6;

/// Cartan's fifteen operators `X_ii`, `X_i0`, `X_0i`, `X_ij`.
pub fn cartan_operators() -> Vec<CartanOperator> {
    let mut ops = Vec::with_capacity(15);
    let third = q(1, 3);
    for i in 0..3 {
        let mut t = vec![(int(-1), xi(i), xi(i)), (int(1), yi(i), yi(i))];
        for j in 0..3 {
            t.push((third.clone(), xi(j), xi(j)));
            t.push((-third.clone(), yi(j), yi(j)));
        }
        ops.push(CartanOperator {
            label: format!("X{}{}", i + 1, i + 1),
            matrix: field(&t),
        });
    }
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        ops.push(CartanOperator {
            label: format!("X{}0", i + 1),
            matrix: field(&[
                (int(2), Z, xi(i)),
                (int(-1), yi(i), Z),
                (int(-1), xi(j), yi(k)),
                (int(1), xi(k), yi(j)),
            ]),
        });
        ops.push(CartanOperator {
            label: format!("X0{}", i + 1),
            matrix: field(&[
                (int(-2), Z, yi(i)),
                (int(1), xi(i), Z),
                (int(1), yi(j), xi(k)),
                (int(-1), yi(k), xi(j)),
            ]),
        });
    }
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                ops.push(CartanOperator {
                    label: format!("X{}{}", i + 1, j + 1),
                    matrix: field(&[(int(-1), xi(j), xi(i)), (int(1), yi(i), yi(j))]),
                });
            }
        }
    }
    ops
}

pub fn cartan_operator(label: &str) -> Matrix {
    cartan_operators()
        .into_iter()
        .find(|o| o.label == label)
        .unwrap_or_else(|| panic!("no operator {label}"))
        .matrix
}

/// `−Σ a_ij X_ij + Σ b_i X_i0 + Σ c_i X_0i`.
pub fn operator_expansion(u: &G2Element) -> Matrix {
    let mut m = Matrix::zeros(7, 7);
    for i in 0..3 {
        for j in 0..3 {
            let coeff = -u.a[(i, j)].clone();
            if !coeff.is_zero() {
                m = &m + &cartan_operator(&format!("X{}{}", i + 1, j + 1)).scale(&coeff);
            }
        }
        m = &m + &cartan_operator(&format!("X{}0", i + 1)).scale(&u.b[i]);
        m = &m + &cartan_operator(&format!("X0{}", i + 1)).scale(&u.c[i]);
    }
    m
}

pub fn flatten(m: &Matrix) -> Vec<Rational> {
    m.entries().to_vec()
}

/// `MᵗG + GM = 0` for the Gram matrix `G` of `J`.
pub fn is_j_antisymmetric(m: &Matrix) -> bool {
    let g = j_gram();
    (&(&m.transpose() * &g) + &(&g * m)).is_zero()
}

/// The space of all J-antisymmetric 7×7 matrices, as flattened vectors.
pub fn j_antisymmetric_space() -> Subspace {
    let g = j_gram();
    let cols: Vec<Vec<Rational>> = (0..49)
        .map(|n| {
            let mut e = Matrix::zeros(7, 7);
            e[(n / 7, n % 7)] = one();
            flatten(&(&(&e.transpose() * &g) + &(&g * &e)))
        })
        .collect();
    Subspace::kernel_of(&Matrix::from_cols(&cols))
}

pub fn g2_matrix_space() -> Subspace {
    let vs: Vec<Vec<Rational>> = (0..DIM).map(|n| flatten(&G2Element::basis(n).rho())).collect();
    Subspace::span(49, &vs)
}

/// `Σ ρ(u)ⁿ/n!`, finite because ρ(u) is nilpotent.
pub fn exp_nilpotent(u: &G2Element) -> Result<Matrix> {
    let m = u.rho();
    if !m.pow(7).is_zero() {
        return Err(Error::NotNilpotent);
    }
    let mut term = Matrix::identity(7);
    let mut sum = term.clone();
    for n in 1..7 {
        term = (&term * &m).scale(&q(1, n));
        sum = &sum + &term;
    }
    Ok(sum)
}

/// Group action of the diagonal torus element `D`: `x ↦ Dx`, `y ↦ D⁻¹y`.
pub fn torus_element(d: &[Rational; 3]) -> Matrix {
    let mut entries = d.to_vec();
    entries.extend(d.iter().map(|x| x.recip()));
    entries.push(one());
    Matrix::diag(&entries)
}

/// The twelve root-vector directions `E_ij (i ≠ j)`, `(0,e_i,0)`, `(0,0,e_i)`.
pub fn nilpotent_directions() -> Vec<G2Element> {
    let mut v = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                v.push(G2Element::elementary(i, j));
            }
        }
    }
    for i in 0..3 {
        v.push(G2Element::from_b(Vec3::e(i)));
        v.push(G2Element::from_c(Vec3::e(i)));
    }
    v
}

/// A product of three nilpotent exponentials and a torus scaling.
pub fn sample_group_element(s: &mut Sampler) -> Matrix {
    let dirs = nilpotent_directions();
    let mut g = Matrix::identity(7);
    for _ in 0..3 {
        let u = dirs[s.index(dirs.len())].scale(&s.nonzero_rational());
        g = &g * &exp_nilpotent(&u).expect("root vectors are nilpotent");
    }
    let (l1, l2) = (s.nonzero_rational(), s.nonzero_rational());
    let l3 = (&l1 * &l2).recip();
    &g * &torus_element(&[l1, l2, l3])
}

pub fn apply(g: &Matrix, p: &CartanPoint) -> CartanPoint {
    CartanPoint::from_coords(&g.mul_vec(&p.coords()))
}
