//! Trivariate homogeneous and univariate complex polynomials: evaluation,
//! differentiation, restriction to charts and lines, and Sylvester resultants.
//!
//! All types are immutable after construction; operations are pure functions.

use crate::{C64, Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// Relative magnitude below which coefficients are dropped at construction.
const PRUNE_REL: f64 = 1e-12;

/// One of the three homogeneous coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::Z => 2,
        }
    }
}

/// Homogeneous trivariate polynomial with complex coefficients, stored as a
/// map from exponent triples to coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct TriPoly {
    degree: usize,
    terms: BTreeMap<(usize, usize, usize), C64>,
}

impl TriPoly {
    /// Builds a polynomial of the given degree, pruning coefficients whose
    /// modulus falls below the relative zero threshold. Exponent triples must
    /// sum to `degree`.
    pub fn new(degree: usize, terms: impl IntoIterator<Item = ((usize, usize, usize), C64)>) -> Self {
        let mut map: BTreeMap<(usize, usize, usize), C64> = BTreeMap::new();
        for ((i, j, k), c) in terms {
            debug_assert_eq!(i + j + k, degree, "non-homogeneous term");
            if c != C64::new(0.0, 0.0) {
                *map.entry((i, j, k)).or_insert(C64::new(0.0, 0.0)) += c;
            }
        }
        let max = map.values().map(|c| c.norm()).fold(0.0_f64, f64::max);
        map.retain(|_, c| c.norm() > PRUNE_REL * max);
        TriPoly { degree, terms: map }
    }

    pub fn zero(degree: usize) -> Self {
        TriPoly {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize, usize), &C64)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> C64 {
        self.terms.get(&(i, j, k)).copied().unwrap_or_default()
    }

    /// Largest coefficient modulus; zero for the zero polynomial.
    pub fn max_coeff(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Evaluates at a point of C^3.
    pub fn eval(&self, pt: [C64; 3]) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for (&(i, j, k), &c) in &self.terms {
            acc += c * pt[0].powu(i as u32) * pt[1].powu(j as u32) * pt[2].powu(k as u32);
        }
        acc
    }

    /// Formal partial derivative; degree drops by one.
    pub fn partial(&self, var: Var) -> TriPoly {
        if self.degree == 0 {
            return TriPoly::zero(0);
        }
        let mut terms = Vec::new();
        for (&(i, j, k), &c) in &self.terms {
            let e = [i, j, k];
            let n = e[var.index()];
            if n == 0 {
                continue;
            }
            let mut e2 = e;
            e2[var.index()] -= 1;
            terms.push(((e2[0], e2[1], e2[2]), c * n as f64));
        }
        TriPoly::new(self.degree - 1, terms)
    }

    pub fn scale(&self, s: C64) -> TriPoly {
        TriPoly::new(self.degree, self.terms.iter().map(|(&e, &c)| (e, c * s)))
    }

    pub fn add(&self, other: &TriPoly) -> TriPoly {
        assert_eq!(self.degree, other.degree, "degree mismatch in add");
        TriPoly::new(
            self.degree,
            self.terms
                .iter()
                .map(|(&e, &c)| (e, c))
                .chain(other.terms.iter().map(|(&e, &c)| (e, c))),
        )
    }

    pub fn sub(&self, other: &TriPoly) -> TriPoly {
        self.add(&other.scale(C64::new(-1.0, 0.0)))
    }

    pub fn mul(&self, other: &TriPoly) -> TriPoly {
        let mut terms: BTreeMap<(usize, usize, usize), C64> = BTreeMap::new();
        for (&(i1, j1, k1), &c1) in &self.terms {
            for (&(i2, j2, k2), &c2) in &other.terms {
                *terms
                    .entry((i1 + i2, j1 + j2, k1 + k2))
                    .or_insert(C64::new(0.0, 0.0)) += c1 * c2;
            }
        }
        TriPoly::new(self.degree + other.degree, terms)
    }

    /// Substitutes `value` for one variable and 1 for another, leaving `free`
    /// as the single remaining variable. The chart variable and the free
    /// variable must be distinct.
    pub fn restrict_chart(&self, chart: Var, free: Var, other_value: C64) -> UniPoly {
        assert_ne!(chart, free, "chart variable and free variable must differ");
        let mut coeffs = vec![C64::new(0.0, 0.0); self.degree + 1];
        for (&(i, j, k), &c) in &self.terms {
            let e = [i, j, k];
            let free_exp = e[free.index()];
            // the remaining variable (neither chart nor free)
            let other_idx = 3 - chart.index() - free.index();
            let other_exp = e[other_idx];
            coeffs[free_exp] += c * other_value.powu(other_exp as u32);
        }
        UniPoly::new(coeffs)
    }

    /// Bivariate view of the chart `chart_var = 1`: coefficients of powers of
    /// `elim` as univariate polynomials in `keep`.
    pub fn chart_bipoly(&self, chart: Var, keep: Var, elim: Var) -> BiPoly {
        assert!(chart != keep && chart != elim && keep != elim);
        let mut coeffs: Vec<Vec<C64>> = vec![vec![C64::new(0.0, 0.0); self.degree + 1]; self.degree + 1];
        for (&(i, j, k), &c) in &self.terms {
            let e = [i, j, k];
            coeffs[e[elim.index()]][e[keep.index()]] += c;
        }
        BiPoly::new(coeffs.into_iter().map(UniPoly::new).collect())
    }

    /// Substitutes y ↦ x, z ↦ 1.
    pub fn restrict_diagonal(&self) -> UniPoly {
        let mut coeffs = vec![C64::new(0.0, 0.0); self.degree + 1];
        for (&(i, j, _), &c) in &self.terms {
            coeffs[i + j] += c;
        }
        UniPoly::new(coeffs)
    }

    /// Restricts to the parametrized line t ↦ base + t·dir, returning the
    /// univariate polynomial in t.
    pub fn restrict_to_line(&self, base: [C64; 3], dir: [C64; 3]) -> UniPoly {
        let mut coeffs = vec![C64::new(0.0, 0.0); self.degree + 1];
        let mut binom = vec![vec![C64::new(0.0, 0.0); self.degree + 1]; 3];
        for (&(i, j, k), &c) in &self.terms {
            // (base_v + t dir_v)^e expanded per coordinate, then convolved
            for (v, &e) in [i, j, k].iter().enumerate() {
                let row = &mut binom[v];
                row.iter_mut().for_each(|x| *x = C64::new(0.0, 0.0));
                row[0] = C64::new(1.0, 0.0);
                for _ in 0..e {
                    for d in (0..self.degree).rev() {
                        let prev = row[d];
                        row[d + 1] += prev * dir[v];
                        row[d] = prev * base[v];
                    }
                }
            }
            for (d0, &b0) in binom[0].iter().enumerate().take(i + 1) {
                for (d1, &b1) in binom[1].iter().enumerate().take(j + 1) {
                    for (d2, &b2) in binom[2].iter().enumerate().take(k + 1) {
                        if d0 + d1 + d2 <= self.degree {
                            coeffs[d0 + d1 + d2] += c * b0 * b1 * b2;
                        }
                    }
                }
            }
        }
        UniPoly::new(coeffs)
    }

    /// Composition with a linear change of coordinates: returns F(m·(x,y,z)).
    pub fn transform(&self, m: &[[C64; 3]; 3]) -> TriPoly {
        let lin = |r: usize| {
            TriPoly::new(
                1,
                [
                    ((1, 0, 0), m[r][0]),
                    ((0, 1, 0), m[r][1]),
                    ((0, 0, 1), m[r][2]),
                ],
            )
        };
        let (lx, ly, lz) = (lin(0), lin(1), lin(2));
        let mut acc = TriPoly::zero(self.degree);
        for (&(i, j, k), &c) in &self.terms {
            let mut t = TriPoly::new(0, [((0, 0, 0), c)]);
            for _ in 0..i {
                t = t.mul(&lx);
            }
            for _ in 0..j {
                t = t.mul(&ly);
            }
            for _ in 0..k {
                t = t.mul(&lz);
            }
            acc = acc.add(&t);
        }
        acc
    }
}

impl fmt::Display for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j, k), &c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({:.6})", c)?;
            for (v, e) in [("x", i), ("y", j), ("z", k)] {
                if e > 0 {
                    write!(f, "*{}^{}", v, e)?;
                }
            }
        }
        Ok(())
    }
}

/// Dense univariate complex polynomial, coefficients in ascending degree.
/// The zero polynomial is the empty list.
#[derive(Debug, Clone, PartialEq)]
pub struct UniPoly {
    coeffs: Vec<C64>,
}

impl UniPoly {
    /// Builds from ascending coefficients, trimming a trailing run of
    /// relatively negligible leading coefficients.
    pub fn new(coeffs: Vec<C64>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: C64) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    /// Monic polynomial with the given roots (test and oracle helper).
    pub fn from_roots(roots: &[C64]) -> Self {
        let mut coeffs = vec![C64::new(1.0, 0.0)];
        for &r in roots {
            coeffs.push(C64::new(0.0, 0.0));
            for d in (0..coeffs.len() - 1).rev() {
                let c = coeffs[d];
                coeffs[d + 1] += c;
                coeffs[d] = -c * r;
            }
        }
        UniPoly::new(coeffs)
    }

    fn trim(&mut self) {
        let max = self.coeffs.iter().map(|c| c.norm()).fold(0.0_f64, f64::max);
        while let Some(last) = self.coeffs.last() {
            if last.norm() <= PRUNE_REL * max {
                self.coeffs.pop();
            } else {
                break;
            }
        }
        if max == 0.0 {
            self.coeffs.clear();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial. Panics on the zero polynomial.
    pub fn degree(&self) -> usize {
        assert!(!self.coeffs.is_empty(), "degree of zero polynomial");
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn leading(&self) -> C64 {
        *self.coeffs.last().expect("leading of zero polynomial")
    }

    pub fn max_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn eval(&self, x: C64) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        )
    }

    pub fn scale(&self, s: C64) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![C64::new(0.0, 0.0); n];
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        for (k, &c) in other.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        UniPoly::new(coeffs)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![C64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(coeffs)
    }

    /// Coefficients of the Taylor shift p(x + c), ascending. Entry k equals
    /// p^(k)(c) / k!.
    pub fn taylor_shift(&self, c: C64) -> Vec<C64> {
        let mut shifted = self.coeffs.clone();
        let n = shifted.len();
        // repeated synthetic division by (x - c)
        for start in 0..n {
            for k in (start + 1..n).rev() {
                let carry = shifted[k] * c;
                shifted[k - 1] += carry;
            }
            // after pass `start`, shifted[start] holds the next Taylor coefficient
        }
        shifted
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| format!("({:.6})*t^{}", c, k))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Bivariate polynomial stored as coefficients of the eliminated variable,
/// each a univariate polynomial in the surviving variable.
#[derive(Debug, Clone)]
pub struct BiPoly {
    /// coeffs[k] multiplies v^k, where v is the variable to eliminate.
    coeffs: Vec<UniPoly>,
}

impl BiPoly {
    pub fn new(mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().is_some_and(UniPoly::is_zero) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree_elim(&self) -> usize {
        assert!(!self.coeffs.is_empty());
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    /// Specializes the surviving variable, yielding a univariate polynomial
    /// in the eliminated one.
    pub fn specialize(&self, u: C64) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|p| p.eval(u)).collect())
    }

    fn max_inner_degree(&self) -> usize {
        self.coeffs
            .iter()
            .map(|p| if p.is_zero() { 0 } else { p.degree() })
            .max()
            .unwrap_or(0)
    }
}

/// Determinant of a dense complex matrix by LU with partial pivoting.
fn det_lu(mut m: Vec<Vec<C64>>) -> C64 {
    let n = m.len();
    let mut det = C64::new(1.0, 0.0);
    for k in 0..n {
        let (pivot, pnorm) = (k..n)
            .map(|r| (r, m[r][k].norm()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        if pnorm == 0.0 {
            return C64::new(0.0, 0.0);
        }
        if pivot != k {
            m.swap(pivot, k);
            det = -det;
        }
        det *= m[k][k];
        for r in k + 1..n {
            let factor = m[r][k] / m[k][k];
            for c in k..n {
                let sub = factor * m[k][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

/// Sylvester determinant for coefficient slices of fixed nominal degrees
/// (leading entries may be zero).
fn sylvester_det(f: &[C64], g: &[C64]) -> C64 {
    let df = f.len() - 1;
    let dg = g.len() - 1;
    if df == 0 && dg == 0 {
        return C64::new(1.0, 0.0);
    }
    if df == 0 {
        return f[0].powu(dg as u32);
    }
    if dg == 0 {
        return g[0].powu(df as u32);
    }
    let n = df + dg;
    let mut m = vec![vec![C64::new(0.0, 0.0); n]; n];
    for row in 0..dg {
        for (j, &c) in f.iter().rev().enumerate() {
            m[row][row + j] = c;
        }
    }
    for row in 0..df {
        for (j, &c) in g.iter().rev().enumerate() {
            m[dg + row][row + j] = c;
        }
    }
    det_lu(m)
}

/// Resultant of two univariate polynomials as the determinant of their
/// Sylvester matrix. Zero iff the polynomials share a root (up to tolerance).
pub fn sylvester_resultant(f: &UniPoly, g: &UniPoly) -> Result<C64> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::BothZero);
    }
    if f.is_zero() || g.is_zero() {
        return Ok(C64::new(0.0, 0.0));
    }
    Ok(sylvester_det(f.coeffs(), g.coeffs()))
}

/// Eliminates one variable from a pair of bivariate polynomials: the
/// resultant with respect to the eliminated variable, as a univariate
/// polynomial in the surviving one.
///
/// Computed by sampling the Sylvester determinant at roots of unity and
/// interpolating, then pruning noise terms above the structural degree bound.
pub fn resultant_eliminate(f2: &BiPoly, g2: &BiPoly) -> Result<UniPoly> {
    if f2.is_zero() && g2.is_zero() {
        return Err(Error::BothZero);
    }
    if f2.is_zero() || g2.is_zero() {
        return Err(Error::DegenerateLeading);
    }
    let (nf, ng) = (f2.degree_elim(), g2.degree_elim());
    if nf == 0 && ng == 0 {
        return Ok(UniPoly::constant(C64::new(1.0, 0.0)));
    }
    if nf == 0 {
        // Res(const(u), g) = f^ng
        let mut r = UniPoly::constant(C64::new(1.0, 0.0));
        for _ in 0..ng {
            r = r.mul(&f2.coeffs()[0]);
        }
        return Ok(r);
    }
    if ng == 0 {
        let mut r = UniPoly::constant(C64::new(1.0, 0.0));
        for _ in 0..nf {
            r = r.mul(&g2.coeffs()[0]);
        }
        return Ok(r);
    }

    // degree bound of det: ng rows of f-entries, nf rows of g-entries
    let bound = ng * f2.max_inner_degree() + nf * g2.max_inner_degree();
    let n_samples = bound + 1;
    let tau = std::f64::consts::TAU;
    let mut values = Vec::with_capacity(n_samples);
    for s in 0..n_samples {
        let x = C64::from_polar(1.0, tau * s as f64 / n_samples as f64);
        let fc: Vec<C64> = f2.coeffs().iter().map(|p| p.eval(x)).collect();
        let gc: Vec<C64> = g2.coeffs().iter().map(|p| p.eval(x)).collect();
        values.push(sylvester_det(&fc, &gc));
    }
    // inverse DFT on the unit circle recovers the coefficients
    let n = n_samples as f64;
    let mut coeffs = Vec::with_capacity(n_samples);
    for k in 0..n_samples {
        let mut acc = C64::new(0.0, 0.0);
        for (s, &v) in values.iter().enumerate() {
            acc += v * C64::from_polar(1.0, -tau * (k * s) as f64 / n);
        }
        coeffs.push(acc / n);
    }
    Ok(UniPoly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kuribayashi::build_curve_raw;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn fermat() -> TriPoly {
        TriPoly::new(
            4,
            [
                ((4, 0, 0), c(1.0, 0.0)),
                ((0, 4, 0), c(1.0, 0.0)),
                ((0, 0, 4), c(1.0, 0.0)),
            ],
        )
    }

    #[test]
    fn eval_fermat_at_ones() {
        assert_eq!(fermat().eval([c(1.0, 0.0); 3]), c(3.0, 0.0));
    }

    #[test]
    fn eval_on_curve_root_at_infinity() {
        // C_{3,0} at (beta, 1, 0) with beta a root of x^4 + 3x^2 + 1
        let a = c(3.0, 0.0);
        let f = build_curve_raw(a, c(0.0, 0.0));
        let beta = ((-a + (a * a - c(4.0, 0.0)).sqrt()) / 2.0).sqrt();
        let v = f.eval([beta, c(1.0, 0.0), c(0.0, 0.0)]);
        assert!(v.norm() < 1e-12, "|F| = {}", v.norm());
    }

    #[test]
    fn eval_c33_at_ones() {
        let f = build_curve_raw(c(3.0, 0.0), c(3.0, 0.0));
        let v = f.eval([c(1.0, 0.0); 3]);
        assert!((v - c(9.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn partial_of_quartic_monomial() {
        let p = TriPoly::new(4, [((4, 0, 0), c(1.0, 0.0))]);
        let px = p.partial(Var::X);
        assert_eq!(px.degree(), 3);
        assert_eq!(px.coeff(3, 0, 0), c(4.0, 0.0));
        assert_eq!(px.terms().count(), 1);
    }

    #[test]
    fn partial_z_picks_out_z_terms() {
        let p = TriPoly::new(
            4,
            [
                ((4, 0, 0), c(1.0, 0.0)),
                ((0, 4, 0), c(1.0, 0.0)),
                ((0, 0, 4), c(1.0, 0.0)),
                ((2, 2, 0), c(5.0, 0.0)),
            ],
        );
        let pz = p.partial(Var::Z);
        assert_eq!(pz.coeff(0, 0, 3), c(4.0, 0.0));
        assert_eq!(pz.terms().count(), 1);
    }

    #[test]
    fn partial_x_of_mixed_term() {
        let a = c(0.0, 2.0);
        let p = TriPoly::new(4, [((2, 2, 0), a)]);
        let px = p.partial(Var::X);
        assert_eq!(px.coeff(1, 2, 0), a * 2.0);
    }

    #[test]
    fn partial_of_constant_is_zero() {
        let p = TriPoly::new(0, [((0, 0, 0), c(2.0, 0.0))]);
        assert!(p.partial(Var::X).is_zero());
    }

    #[test]
    fn restrict_chart_y0_z1() {
        // C_{a,b} with y -> 0, z -> 1 gives x^4 + b x^2 + 1
        let (a, b) = (c(2.5, 0.0), c(-1.5, 0.0));
        let f = build_curve_raw(a, b);
        let r = f.restrict_chart(Var::Z, Var::X, c(0.0, 0.0));
        assert_eq!(r.degree(), 4);
        assert!((r.coeff(0) - c(1.0, 0.0)).norm() < 1e-14);
        assert!((r.coeff(2) - b).norm() < 1e-14);
        assert!((r.coeff(4) - c(1.0, 0.0)).norm() < 1e-14);
        assert!(r.coeff(1).norm() < 1e-14 && r.coeff(3).norm() < 1e-14);
    }

    #[test]
    fn restrict_chart_z0_y1() {
        // C_{a,b} with z -> 0, y -> 1 gives x^4 + a x^2 + 1
        let (a, b) = (c(2.5, 0.0), c(-1.5, 0.0));
        let f = build_curve_raw(a, b);
        let r = f.restrict_chart(Var::Y, Var::X, c(0.0, 0.0));
        assert!((r.coeff(2) - a).norm() < 1e-14);
        assert!((r.coeff(0) - c(1.0, 0.0)).norm() < 1e-14);
        assert!((r.coeff(4) - c(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn restrict_chart_fermat_sanity() {
        let r = fermat().restrict_chart(Var::Z, Var::X, c(0.0, 0.0));
        assert!((r.coeff(0) - c(1.0, 0.0)).norm() < 1e-14);
        assert!((r.coeff(4) - c(1.0, 0.0)).norm() < 1e-14);
        assert_eq!(r.coeffs().iter().filter(|c| c.norm() > 0.0).count(), 2);
    }

    #[test]
    fn restrict_diagonal_family() {
        let (a, b) = (c(1.25, 0.5), c(-0.75, 0.25));
        let f = build_curve_raw(a, b);
        let d = f.restrict_diagonal();
        assert!((d.coeff(4) - (a + 2.0)).norm() < 1e-14);
        assert!((d.coeff(2) - b * 2.0).norm() < 1e-14);
        assert!((d.coeff(0) - c(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn restrict_diagonal_fermat_and_c00() {
        for f in [fermat(), build_curve_raw(c(0.0, 0.0), c(0.0, 0.0))] {
            let d = f.restrict_diagonal();
            assert!((d.coeff(4) - c(2.0, 0.0)).norm() < 1e-14);
            assert!((d.coeff(0) - c(1.0, 0.0)).norm() < 1e-14);
            assert!(d.coeff(2).norm() < 1e-14);
        }
    }

    #[test]
    fn sylvester_small_cases() {
        // Res(x^2 - 1, x - 2) = 3
        let f = UniPoly::from_real(&[-1.0, 0.0, 1.0]);
        let g = UniPoly::from_real(&[-2.0, 1.0]);
        let r = sylvester_resultant(&f, &g).unwrap();
        assert!((r - c(3.0, 0.0)).norm() < 1e-12);

        // shared root
        let h = UniPoly::new(vec![c(-0.7, 0.3), c(1.0, 0.0)]);
        let r = sylvester_resultant(&h, &h.clone()).unwrap();
        assert!(r.norm() < 1e-12);
    }

    #[test]
    fn sylvester_rejects_two_zeros() {
        assert!(matches!(
            sylvester_resultant(&UniPoly::zero(), &UniPoly::zero()),
            Err(Error::BothZero)
        ));
    }

    #[test]
    fn resultant_eliminate_linear_pair() {
        // f = v - u, g = v + u, eliminating v: 2u up to sign
        let f2 = BiPoly::new(vec![
            UniPoly::new(vec![c(0.0, 0.0), c(-1.0, 0.0)]),
            UniPoly::constant(c(1.0, 0.0)),
        ]);
        let g2 = BiPoly::new(vec![
            UniPoly::new(vec![c(0.0, 0.0), c(1.0, 0.0)]),
            UniPoly::constant(c(1.0, 0.0)),
        ]);
        let r = resultant_eliminate(&f2, &g2).unwrap();
        assert_eq!(r.degree(), 1);
        assert!(r.coeff(0).norm() < 1e-12);
        assert!((r.coeff(1).norm() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn taylor_shift_matches_direct_evaluation() {
        let p = UniPoly::new(vec![c(1.0, 2.0), c(-3.0, 0.5), c(0.0, 1.0), c(2.0, 0.0)]);
        let at = c(0.7, -0.4);
        let sh = p.taylor_shift(at);
        assert!((sh[0] - p.eval(at)).norm() < 1e-12);
        assert!((sh[1] - p.derivative().eval(at)).norm() < 1e-12);
        assert!((sh[2] - p.derivative().derivative().eval(at) / 2.0).norm() < 1e-12);
    }

    #[test]
    fn from_roots_builds_expected_quadratic() {
        let p = UniPoly::from_roots(&[c(1.0, 0.0), c(-2.0, 0.0)]);
        // (x-1)(x+2) = x^2 + x - 2
        assert!((p.coeff(0) - c(-2.0, 0.0)).norm() < 1e-14);
        assert!((p.coeff(1) - c(1.0, 0.0)).norm() < 1e-14);
        assert!((p.coeff(2) - c(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn transform_diag_scale() {
        let f = fermat();
        let m = [
            [c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
        ];
        let g = f.transform(&m);
        assert_eq!(g.coeff(4, 0, 0), c(16.0, 0.0));
        assert_eq!(g.coeff(0, 4, 0), c(1.0, 0.0));
    }
}
