//! Serre generators inside the matrix realization, the recursive root-vector
//! basis, and the structure-constant table.

use num::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{fmt_q, int, one, proportional, Matrix, Rational};
use crate::g2::{bracket, coords_span, G2Element};
use crate::roots::RootDatum;

pub const POSITIVE: [&str; 6] = ["x1", "x2", "x3", "X1", "X2", "X3"];
pub const NEGATIVE: [&str; 6] = ["y1", "y2", "y3", "Y1", "Y2", "Y3"];
/// Roots of the positive basis vectors, in [`POSITIVE`] order.
pub const POSITIVE_ROOTS: [&str; 6] = ["sigma1", "sigma2", "sigma3", "lambda1", "lambda2", "lambda3"];

#[derive(Clone, Debug)]
pub struct SerreBasis {
    pub h: G2Element,
    pub big_h: G2Element,
    /// `x₁, x₂, x₃, X₁, X₂, X₃`.
    pub pos: Vec<G2Element>,
    /// `y₁, y₂, y₃, Y₁, Y₂, Y₃`.
    pub neg: Vec<G2Element>,
}

impl SerreBasis {
    pub fn x(&self) -> &G2Element {
        &self.pos[2]
    }
    pub fn big_x(&self) -> &G2Element {
        &self.pos[3]
    }
    pub fn y(&self) -> &G2Element {
        &self.neg[2]
    }
    pub fn big_y(&self) -> &G2Element {
        &self.neg[3]
    }

    pub fn get(&self, name: &str) -> &G2Element {
        if name == "h" {
            return &self.h;
        }
        if name == "H" {
            return &self.big_h;
        }
        if let Some(i) = POSITIVE.iter().position(|n| *n == name) {
            return &self.pos[i];
        }
        if let Some(i) = NEGATIVE.iter().position(|n| *n == name) {
            return &self.neg[i];
        }
        panic!("unknown basis element {name}")
    }

    /// All fourteen elements with their names.
    pub fn named(&self) -> Vec<(&'static str, &G2Element)> {
        let mut v: Vec<(&'static str, &G2Element)> = POSITIVE.iter().copied().zip(self.pos.iter()).collect();
        v.extend(NEGATIVE.iter().copied().zip(self.neg.iter()));
        v.push(("h", &self.h));
        v.push(("H", &self.big_h));
        v
    }
}

fn ad_pow(u: &G2Element, v: &G2Element, n: usize) -> G2Element {
    (0..n).fold(v.clone(), |acc, _| bracket(u, &acc))
}

/// Solves for `t` with `[[e, t f], e] = 2e`.
fn sl2_scale(e: &G2Element, f: &G2Element, what: &str) -> Result<Rational> {
    let c = proportional(&bracket(&bracket(e, f), e).coords(), &e.coords())
        .ok_or_else(|| Error::NoSolution(what.into()))?;
    if c.is_zero() {
        return Err(Error::NoSolution(what.into()));
    }
    Ok(int(2) / c)
}

/// Relations that every Serre basis must satisfy, each as (name, holds).
pub fn serre_relations(x: &G2Element, y: &G2Element, xx: &G2Element, yy: &G2Element) -> Vec<(&'static str, bool)> {
    let h = bracket(x, y);
    let hh = bracket(xx, yy);
    let z = G2Element::zero();
    vec![
        ("[h,x]=2x", bracket(&h, x) == x.scale(&int(2))),
        ("[h,y]=-2y", bracket(&h, y) == y.scale(&int(-2))),
        ("[H,X]=2X", bracket(&hh, xx) == xx.scale(&int(2))),
        ("[H,Y]=-2Y", bracket(&hh, yy) == yy.scale(&int(-2))),
        ("[h,X]=-3X", bracket(&h, xx) == xx.scale(&int(-3))),
        ("[h,Y]=3Y", bracket(&h, yy) == yy.scale(&int(3))),
        ("[H,x]=-x", bracket(&hh, x) == x.scale(&int(-1))),
        ("[H,y]=y", bracket(&hh, y) == *y),
        ("[x,Y]=0", bracket(x, yy) == z),
        ("[X,y]=0", bracket(xx, y) == z),
        ("[h,H]=0", bracket(&h, &hh) == z),
        ("ad(x)^4 X=0", ad_pow(x, xx, 4) == z),
        ("ad(X)^2 x=0", ad_pow(xx, x, 2) == z),
        ("ad(y)^4 Y=0", ad_pow(y, yy, 4) == z),
        ("ad(Y)^2 y=0", ad_pow(yy, y, 2) == z),
        ("ad(Y)^2 x=0", ad_pow(yy, x, 2) == z),
    ]
}

/// Generators with `x, X` scaled by `sx, sX` from their canonical
/// representatives; used to check the table does not depend on the choice.
pub fn find_serre_generators_scaled(rd: &RootDatum, sx: &Rational, s_big_x: &Rational) -> Result<SerreBasis> {
    let x = rd.get("sigma3").vector.scale(sx);
    let xx = rd.get("lambda1").vector.scale(s_big_x);
    let y0 = &rd.get("-sigma3").vector;
    let yy0 = &rd.get("-lambda1").vector;
    let y = y0.scale(&sl2_scale(&x, y0, "[x,y]=h with [h,x]=2x")?);
    let yy = yy0.scale(&sl2_scale(&xx, yy0, "[X,Y]=H with [H,X]=2X")?);
    for (name, ok) in serre_relations(&x, &y, &xx, &yy) {
        if !ok {
            return Err(Error::RelationFailure(name.into()));
        }
    }
    let h = bracket(&x, &y);
    let big_h = bracket(&xx, &yy);
    let mut pos = vec![G2Element::zero(); 6];
    let mut neg = vec![G2Element::zero(); 6];
    pos[2] = x;
    pos[3] = xx;
    neg[2] = y;
    neg[3] = yy;
    Ok(SerreBasis { h, big_h, pos, neg })
}

/// Canonical choice: `x` and `X` are the root vectors with first nonzero
/// coordinate 1, and `y`, `Y` are solved for.
pub fn find_serre_generators(rd: &RootDatum) -> Result<SerreBasis> {
    find_serre_generators_scaled(rd, &one(), &one())
}

/// `x₂ = [x,X₁]`, `x₁ = [x,x₂]`, `X₂ = [x,x₁]`, `X₃ = [X₁,X₂]` and
/// `y₂ = −[y,Y₁]`, `y₁ = −[y,y₂]`, `Y₂ = −[y,y₁]`, `Y₃ = −[Y₁,Y₂]`; each
/// is checked to lie in its predicted root space.
pub fn build_recursive_basis(s: &SerreBasis, rd: &RootDatum) -> Result<SerreBasis> {
    let mut out = s.clone();
    let (x, xx) = (s.x().clone(), s.big_x().clone());
    out.pos[1] = bracket(&x, &xx);
    out.pos[0] = bracket(&x, &out.pos[1]);
    out.pos[4] = bracket(&x, &out.pos[0]);
    out.pos[5] = bracket(&xx, &out.pos[4]);
    let (y, yy) = (s.y().clone(), s.big_y().clone());
    let m = int(-1);
    out.neg[1] = bracket(&y, &yy).scale(&m);
    out.neg[0] = bracket(&y, &out.neg[1]).scale(&m);
    out.neg[4] = bracket(&y, &out.neg[0]).scale(&m);
    out.neg[5] = bracket(&yy, &out.neg[4]).scale(&m);
    for i in 0..6 {
        for (name, v, root) in [
            (POSITIVE[i], &out.pos[i], POSITIVE_ROOTS[i].to_string()),
            (NEGATIVE[i], &out.neg[i], format!("-{}", POSITIVE_ROOTS[i])),
        ] {
            if v.is_zero() || !rd.root_space(&root).contains(&v.coords()) {
                return Err(Error::RelationFailure(format!("{name} is not in the {root} root space")));
            }
        }
    }
    Ok(out)
}

/// Coefficients `(a, b)` with `v = a h + b H`.
fn cartan_coords(s: &SerreBasis, v: &G2Element) -> Option<(Rational, Rational)> {
    let m = Matrix::from_cols(&[s.h.coords(), s.big_h.coords()]);
    let sol = m.solve(&v.coords())?;
    Some((sol[0].clone(), sol[1].clone()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstantTable {
    /// `c[i][j]`: `[POSITIVE[i], NEGATIVE[j]] = c · (root vector of the
    /// difference)`; the diagonal is 1, standing for `h_i` / `H_i`.
    pub c: Vec<Vec<Rational>>,
    /// `h₁,h₂,h₃,H₁,H₂,H₃` as `(coefficient of h, coefficient of H)`.
    pub diagonal: Vec<(Rational, Rational)>,
    /// Positive-positive products that are not zero for root reasons:
    /// `(left, right, coefficient, result)`.
    pub positive_products: Vec<(&'static str, &'static str, Rational, &'static str)>,
}

/// Element of the basis spanning the root space of `label`, with its name.
fn basis_for_root<'a>(s: &'a SerreBasis, label: &str) -> (&'static str, &'a G2Element) {
    let (neg, base) = match label.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, label),
    };
    let i = POSITIVE_ROOTS.iter().position(|r| *r == base).expect("root label");
    if neg {
        (NEGATIVE[i], &s.neg[i])
    } else {
        (POSITIVE[i], &s.pos[i])
    }
}

fn root_label_of(rd: &RootDatum, v: &G2Element) -> Option<String> {
    rd.roots
        .iter()
        .find(|r| proportional(&v.coords(), &r.vector.coords()).is_some())
        .map(|r| r.label.clone())
}

fn sum_label(rd: &RootDatum, a: &str, b: &str) -> Option<String> {
    let (pa, pb) = (&rd.get(a).pair, &rd.get(b).pair);
    let s = [&pa[0] + &pb[0], &pa[1] + &pb[1]];
    rd.find(&s).map(|r| r.label.clone())
}

fn root_of_name(name: &str) -> String {
    if let Some(i) = POSITIVE.iter().position(|n| *n == name) {
        return POSITIVE_ROOTS[i].to_string();
    }
    let i = NEGATIVE.iter().position(|n| *n == name).expect("root vector name");
    format!("-{}", POSITIVE_ROOTS[i])
}

/// `c_{α,β}` with `[E_α, E_β] = c_{α,β} E_{α+β}` for the named basis, or
/// `None` when `α + β` is zero or not a root.
pub fn structure_constant(s: &SerreBasis, rd: &RootDatum, a: &str, b: &str) -> Result<Option<Rational>> {
    let (ra, rb) = (root_of_name(a), root_of_name(b));
    let br = bracket(s.get(a), s.get(b));
    let Some(target) = sum_label(rd, &ra, &rb) else {
        return Ok(None);
    };
    let (tname, tvec) = basis_for_root(s, &target);
    proportional(&br.coords(), &tvec.coords())
        .map(Some)
        .ok_or_else(|| Error::TableMismatch {
            entry: format!("[{a},{b}]"),
            expected: format!("multiple of {tname}"),
            computed: br.to_string(),
        })
}

pub fn structure_constant_table_computed(s: &SerreBasis, rd: &RootDatum) -> Result<StructureConstantTable> {
    let mut c = vec![vec![int(0); 6]; 6];
    let mut diagonal = Vec::with_capacity(6);
    for i in 0..6 {
        for j in 0..6 {
            if i == j {
                let br = bracket(&s.pos[i], &s.neg[j]);
                let d = cartan_coords(s, &br).ok_or_else(|| Error::TableMismatch {
                    entry: format!("[{},{}]", POSITIVE[i], NEGATIVE[j]),
                    expected: "element of the Cartan".into(),
                    computed: br.to_string(),
                })?;
                diagonal.push(d);
                c[i][j] = one();
                continue;
            }
            let br = bracket(&s.pos[i], &s.neg[j]);
            c[i][j] = match structure_constant(s, rd, POSITIVE[i], NEGATIVE[j])? {
                Some(v) => v,
                None if br.is_zero() => int(0),
                None => {
                    return Err(Error::TableMismatch {
                        entry: format!("[{},{}]", POSITIVE[i], NEGATIVE[j]),
                        expected: "0".into(),
                        computed: br.to_string(),
                    })
                }
            };
        }
    }
    let mut positive_products = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            let br = bracket(&s.pos[i], &s.pos[j]);
            match structure_constant(s, rd, POSITIVE[i], POSITIVE[j])? {
                Some(v) => {
                    let target = sum_label(rd, POSITIVE_ROOTS[i], POSITIVE_ROOTS[j]).expect("root");
                    positive_products.push((POSITIVE[i], POSITIVE[j], v, basis_for_root(s, &target).0));
                }
                None if br.is_zero() => {}
                None => {
                    return Err(Error::TableMismatch {
                        entry: format!("[{},{}]", POSITIVE[i], POSITIVE[j]),
                        expected: "0".into(),
                        computed: br.to_string(),
                    })
                }
            }
        }
    }
    Ok(StructureConstantTable {
        c,
        diagonal,
        positive_products,
    })
}

/// The printed table.
pub fn expected_table() -> StructureConstantTable {
    let rows: [[i64; 6]; 6] = [
        [1, 4, -4, 0, 12, -12],
        [4, 1, -3, 1, 0, 3],
        [-4, -3, 1, 0, -3, 0],
        [0, 1, 0, 1, 0, -1],
        [12, 0, -3, 0, 1, 36],
        [-12, 3, 0, -1, 36, 1],
    ];
    let diag: [(i64, i64); 6] = [(8, 12), (1, 3), (1, 0), (0, 1), (36, 36), (36, 72)];
    StructureConstantTable {
        c: rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect(),
        diagonal: diag.iter().map(|&(a, b)| (int(a), int(b))).collect(),
        // the defining brackets plus the one extra product
        positive_products: vec![
            ("x1", "x2", int(1), "X3"),
            ("x1", "x3", int(-1), "X2"),
            ("x2", "x3", int(-1), "x1"),
            ("x3", "X1", int(1), "x2"),
            ("X1", "X2", int(1), "X3"),
        ],
    }
}

/// Computes the table and compares it entry by entry with the printed one.
pub fn structure_constant_table(s: &SerreBasis, rd: &RootDatum) -> Result<StructureConstantTable> {
    let got = structure_constant_table_computed(s, rd)?;
    let want = expected_table();
    for i in 0..6 {
        for j in 0..6 {
            if got.c[i][j] != want.c[i][j] {
                return Err(Error::TableMismatch {
                    entry: format!("[{},{}]", POSITIVE[i], NEGATIVE[j]),
                    expected: fmt_q(&want.c[i][j]),
                    computed: fmt_q(&got.c[i][j]),
                });
            }
        }
        if got.diagonal[i] != want.diagonal[i] {
            return Err(Error::TableMismatch {
                entry: diag_name(i).into(),
                expected: fmt_cartan(&want.diagonal[i]),
                computed: fmt_cartan(&got.diagonal[i]),
            });
        }
    }
    let mut gp = got.positive_products.clone();
    let mut wp = want.positive_products.clone();
    gp.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
    wp.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
    if gp != wp {
        return Err(Error::TableMismatch {
            entry: "[positive, positive]".into(),
            expected: format!("{wp:?}"),
            computed: format!("{gp:?}"),
        });
    }
    Ok(got)
}

pub fn diag_name(i: usize) -> &'static str {
    ["h1", "h2", "h3", "H1", "H2", "H3"][i]
}

fn fmt_cartan((a, b): &(Rational, Rational)) -> String {
    let term = |c: &Rational, sym: &str| -> String {
        if c == &one() {
            sym.to_string()
        } else {
            format!("{}{sym}", fmt_q(c))
        }
    };
    match (a.is_zero(), b.is_zero()) {
        (true, true) => "0".into(),
        (false, true) => term(a, "h"),
        (true, false) => term(b, "H"),
        (false, false) => {
            let sign = if b.is_negative() { "-" } else { "+" };
            format!("{} {sign} {}", term(a, "h"), term(&b.abs(), "H"))
        }
    }
}

/// `c_{−α,−β} = −c_{α,β}` and `c_{α,−β} = c_{β,−α}` over all root pairs;
/// returns the failing pairs.
pub fn symmetry_failures(s: &SerreBasis, rd: &RootDatum) -> Result<Vec<String>> {
    let names: Vec<&'static str> = POSITIVE.iter().chain(NEGATIVE.iter()).copied().collect();
    let neg_of = |n: &str| -> &'static str {
        match POSITIVE.iter().position(|p| *p == n) {
            Some(i) => NEGATIVE[i],
            None => POSITIVE[NEGATIVE.iter().position(|p| *p == n).expect("name")],
        }
    };
    let mut bad = Vec::new();
    for a in &names {
        for b in &names {
            let c = structure_constant(s, rd, a, b)?;
            let cneg = structure_constant(s, rd, neg_of(a), neg_of(b))?;
            if let (Some(c), Some(cneg)) = (&c, &cneg) {
                if *cneg != -c.clone() {
                    bad.push(format!("c(-{a},-{b})"));
                }
            }
            let c1 = structure_constant(s, rd, a, neg_of(b))?;
            let c2 = structure_constant(s, rd, b, neg_of(a))?;
            if c1 != c2 {
                bad.push(format!("c({a},-{b}) vs c({b},-{a})"));
            }
        }
    }
    Ok(bad)
}

pub type EigenTable = Vec<(i64, Vec<&'static str>)>;

pub fn ad_h_table() -> EigenTable {
    vec![
        (3, vec!["X2", "Y1"]),
        (2, vec!["x3"]),
        (1, vec!["x1", "y2"]),
        (0, vec!["X3", "Y3", "h", "H"]),
        (-1, vec!["x2", "y1"]),
        (-2, vec!["y3"]),
        (-3, vec!["X1", "Y2"]),
    ]
}

pub fn ad_big_h_table() -> EigenTable {
    vec![
        (2, vec!["X1"]),
        (1, vec!["X3", "x2", "y3", "Y2"]),
        (0, vec!["x1", "y1", "h", "H"]),
        (-1, vec!["X2", "x3", "y2", "Y3"]),
        (-2, vec!["Y1"]),
    ]
}

fn check_eigentable(s: &SerreBasis, op: &G2Element, op_name: &str, table: &EigenTable) -> Result<()> {
    let mut all = Vec::new();
    for (lam, vs) in table {
        for v in vs {
            let e = s.get(v);
            if bracket(op, e) != e.scale(&int(*lam)) {
                return Err(Error::SpectrumMismatch {
                    operator: op_name.into(),
                    vector: v.to_string(),
                });
            }
            all.push(e.clone());
        }
    }
    if coords_span(&all).dim() != 14 {
        return Err(Error::SpectrumMismatch {
            operator: op_name.into(),
            vector: "eigenvectors do not span g2".into(),
        });
    }
    Ok(())
}

/// Verifies both eigentables for `ad(h)` and `ad(H)`.
pub fn ad_eigentables(s: &SerreBasis) -> Result<(EigenTable, EigenTable)> {
    let (t1, t2) = (ad_h_table(), ad_big_h_table());
    check_eigentable(s, &s.h, "ad(h)", &t1)?;
    check_eigentable(s, &s.big_h, "ad(H)", &t2)?;
    Ok((t1, t2))
}

/// Whether the printed tables also hold read literally for `ad(x)`, `ad(X)`.
pub fn literal_eigentables_hold(s: &SerreBasis) -> (bool, bool) {
    (
        check_eigentable(s, s.x(), "ad(x)", &ad_h_table()).is_ok(),
        check_eigentable(s, s.big_x(), "ad(X)", &ad_big_h_table()).is_ok(),
    )
}

/// Full pipeline: generators, recursive basis, checked table.
pub fn serre_basis(rd: &RootDatum) -> Result<SerreBasis> {
    build_recursive_basis(&find_serre_generators(rd)?, rd)
}

pub fn render_text(t: &StructureConstantTable) -> String {
    let mut s = String::new();
    for (a, b, c, r) in &t.positive_products {
        if (*a, *b) == ("x1", "x2") {
            let coeff = if *c == one() { String::new() } else { fmt_q(c) };
            s.push_str(&format!("[{a}, {b}] = {coeff}{r}\n\n"));
        }
    }
    s.push_str(&format!("{:<5}", "c"));
    for n in NEGATIVE {
        s.push_str(&format!("{n:>5}"));
    }
    s.push('\n');
    for (i, p) in POSITIVE.iter().enumerate() {
        s.push_str(&format!("{p:<5}"));
        for v in &t.c[i] {
            s.push_str(&format!("{:>5}", fmt_q(v)));
        }
        s.push('\n');
    }
    s.push('\n');
    for (i, d) in t.diagonal.iter().enumerate() {
        s.push_str(&format!("{} = {}\n", diag_name(i), fmt_cartan(d)));
    }
    s.push('\n');
    for (name, table) in [("ad(h)", ad_h_table()), ("ad(H)", ad_big_h_table())] {
        s.push_str(&format!("{name} eigenvalues\n"));
        for (lam, vs) in table {
            s.push_str(&format!("{lam:>3}: {}\n", vs.join(", ")));
        }
    }
    s
}

pub fn render_latex(t: &StructureConstantTable) -> String {
    let mut s = String::from("\\begin{array}{|c||c|c|c|c|c|c|}\n\\hline\n");
    s.push_str("c_{\\alpha,\\beta}");
    for n in NEGATIVE {
        s.push_str(&format!("&{}_{}", &n[..1], &n[1..]));
    }
    s.push_str("\\\\\n\\hline\\hline\n");
    for (i, p) in POSITIVE.iter().enumerate() {
        s.push_str(&format!("{}_{}", &p[..1], &p[1..]));
        for v in &t.c[i] {
            s.push_str(&format!("&{}", fmt_q(v)));
        }
        s.push_str("\\\\\n\\hline\n");
    }
    s.push_str("\\end{array}\n");
    for (i, d) in t.diagonal.iter().enumerate() {
        let n = diag_name(i);
        s.push_str(&format!("{}_{} = {}\n", &n[..1], &n[1..], fmt_cartan(d)));
    }
    s
}

#[derive(Serialize)]
struct TableJson {
    columns: Vec<&'static str>,
    rows: Vec<(&'static str, Vec<String>)>,
    diagonal: Vec<(&'static str, String, String)>,
    positive_products: Vec<String>,
}

pub fn render_json(t: &StructureConstantTable) -> String {
    let j = TableJson {
        columns: NEGATIVE.to_vec(),
        rows: POSITIVE
            .iter()
            .enumerate()
            .map(|(i, p)| (*p, t.c[i].iter().map(fmt_q).collect()))
            .collect(),
        diagonal: t
            .diagonal
            .iter()
            .enumerate()
            .map(|(i, (a, b))| (diag_name(i), fmt_q(a), fmt_q(b)))
            .collect(),
        positive_products: t
            .positive_products
            .iter()
            .map(|(a, b, c, r)| format!("[{a},{b}] = {} {r}", fmt_q(c)))
            .collect(),
    };
    serde_json::to_string_pretty(&j).expect("serializable") + "\n"
}

/// Root label whose space contains `v`, for diagnostics.
pub fn describe(rd: &RootDatum, v: &G2Element) -> String {
    root_label_of(rd, v).unwrap_or_else(|| "not a root vector".into())
}
