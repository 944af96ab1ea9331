//! Univariate complex root finding with multiplicity recovery, and the
//! projective solver for the curve/Hessian system F = H = 0.
//!
//! Roots are located by simultaneous Aberth iteration from perturbed-circle
//! initial values. Nearby approximations are merged into multiple roots and
//! the cluster centroid polished by Newton on the appropriate derivative.
//! System solutions are generated per affine chart from a resultant
//! eliminant, then polished by a two-dimensional Newton step on (F, H) — or
//! on (F, J) with J a Jacobian minor where the intersection is tangential —
//! so that every reported point carries near machine-precision residuals.

use crate::polycore::{resultant_eliminate, TriPoly, UniPoly, Var};
use crate::{par, C64, Error, Result, Tolerances};

const MACHINE_EPS: f64 = f64::EPSILON;
/// Relative band inside which coordinate moduli count as tied during
/// canonicalization; keeps the pivot choice stable under rounding jitter.
const TIE_BAND: f64 = 1e-9;
/// Iterates escaping this radius are pinned as far-field roots.
const ESCAPE_RADIUS: f64 = 1e6;

/// Roots of a univariate polynomial, each with its multiplicity.
#[derive(Debug, Clone)]
pub struct RootSet {
    roots: Vec<(C64, usize)>,
}

impl RootSet {
    pub fn roots(&self) -> &[(C64, usize)] {
        &self.roots
    }

    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|&(_, m)| m).sum()
    }

    pub fn values(&self) -> impl Iterator<Item = C64> + '_ {
        self.roots.iter().map(|&(z, _)| z)
    }

    /// The root nearest to `z`, with its distance.
    pub fn nearest(&self, z: C64) -> Option<(C64, usize, f64)> {
        self.roots
            .iter()
            .map(|&(r, m)| (r, m, (r - z).norm()))
            .min_by(|a, b| a.2.total_cmp(&b.2))
    }
}

fn horner_with_derivative(coeffs: &[C64], z: C64) -> (C64, C64) {
    let mut p = C64::new(0.0, 0.0);
    let mut dp = C64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Backward-error noise floor for evaluating the polynomial at `z`:
/// residuals below this are indistinguishable from an exact root.
fn residual_floor(coeffs: &[C64], z: C64) -> f64 {
    let az = z.norm();
    let mut acc = 0.0;
    let mut pw = 1.0;
    for c in coeffs {
        acc += c.norm() * pw;
        pw *= az;
    }
    8.0 * coeffs.len() as f64 * MACHINE_EPS * acc
}

fn quadratic_roots(c0: C64, c1: C64, c2: C64) -> [C64; 2] {
    let disc = (c1 * c1 - 4.0 * c0 * c2).sqrt();
    // pick the sign that avoids cancellation in -c1 ∓ disc
    let q = if (c1.conj() * disc).re >= 0.0 {
        -(c1 + disc) / 2.0
    } else {
        -(c1 - disc) / 2.0
    };
    if q.norm() > 0.0 {
        [q / c2, c0 / q]
    } else {
        // c1 = 0 and c0*c2 = 0 up to rounding
        let r = (-c0 / c2).sqrt();
        [r, -r]
    }
}

fn aberth_sweeps(coeffs: &[C64], guesses: &mut [C64], cap: usize) -> bool {
    let n = guesses.len();
    for _ in 0..cap {
        let mut done = true;
        let snapshot: Vec<C64> = guesses.to_vec();
        for i in 0..n {
            let z = snapshot[i];
            if z.norm() > ESCAPE_RADIUS {
                continue;
            }
            let (p, dp) = horner_with_derivative(coeffs, z);
            if p.norm() <= residual_floor(coeffs, z) {
                continue;
            }
            let w = if dp.norm() > 0.0 {
                p / dp
            } else {
                C64::new(1e-8, 1e-8)
            };
            let mut s = C64::new(0.0, 0.0);
            for (j, &zj) in snapshot.iter().enumerate() {
                if j != i {
                    let d = z - zj;
                    if d.norm() > 1e-30 {
                        s += C64::new(1.0, 0.0) / d;
                    }
                }
            }
            let denom = C64::new(1.0, 0.0) - w * s;
            let step = if denom.norm() > 1e-30 { w / denom } else { w };
            if !step.re.is_finite() || !step.im.is_finite() {
                return false;
            }
            guesses[i] = z - step;
            if step.norm() > 1e-13 * (1.0 + z.norm()) {
                done = false;
            }
        }
        if done {
            return true;
        }
    }
    // accept if every iterate sits on the residual noise floor anyway
    guesses.iter().all(|&z| {
        z.norm() > ESCAPE_RADIUS || {
            let (p, _) = horner_with_derivative(coeffs, z);
            p.norm() <= residual_floor(coeffs, z)
        }
    })
}

fn newton_refine(coeffs: &[C64], z0: C64, iters: usize) -> C64 {
    let mut z = z0;
    for _ in 0..iters {
        let (p, dp) = horner_with_derivative(coeffs, z);
        if dp.norm() == 0.0 {
            break;
        }
        let step = p / dp;
        if !step.re.is_finite() || !step.im.is_finite() {
            break;
        }
        z -= step;
        if step.norm() <= 1e-15 * (1.0 + z.norm()) {
            break;
        }
    }
    z
}

/// Finds all roots of a nonzero polynomial, merging nearby approximations
/// into multiple roots and polishing each cluster centroid by Newton on the
/// matching derivative. The multiplicities always sum to the degree.
pub fn roots_with_multiplicity(f: &UniPoly, tol: &Tolerances) -> Result<RootSet> {
    assert!(!f.is_zero(), "roots of the zero polynomial");
    let degree = f.degree();
    if degree == 0 {
        return Ok(RootSet { roots: Vec::new() });
    }

    // strip roots at the origin: a leading run of negligible low-order coefficients
    let max = f.max_coeff();
    let zero_mult = f
        .coeffs()
        .iter()
        .take_while(|c| c.norm() <= tol.zero_eps * max)
        .count()
        .min(degree);
    let work: Vec<C64> = f.coeffs()[zero_mult..].iter().map(|&c| c / max).collect();
    let n = work.len() - 1;

    let mut approx: Vec<C64> = Vec::with_capacity(n);
    match n {
        0 => {}
        1 => approx.push(-work[0] / work[1]),
        2 => approx.extend(quadratic_roots(work[0], work[1], work[2])),
        _ => {
            let lc = work[n].norm();
            let fujiwara = (0..n)
                .map(|k| (work[k].norm() / lc).powf(1.0 / (n - k) as f64))
                .fold(0.0_f64, f64::max);
            let radius = (2.0 * fujiwara).clamp(0.5, 1e3);
            let tau = std::f64::consts::TAU;
            let mut converged = false;
            for attempt in 0..4 {
                approx.clear();
                let offset = 0.31 * attempt as f64 + 0.4 / n as f64;
                for k in 0..n {
                    let jitter = 1.0 + 0.05 * ((k * 7919 % 13) as f64 / 13.0) + 0.1 * attempt as f64;
                    approx.push(C64::from_polar(
                        radius * jitter,
                        tau * (k as f64 + 0.5) / n as f64 + offset,
                    ));
                }
                if aberth_sweeps(&work, &mut approx, 200) {
                    converged = true;
                    break;
                }
            }
            if !converged {
                return Err(Error::NoConvergence { sweeps: 200, degree: n });
            }
        }
    }

    // single-linkage clustering; the adaptive floor absorbs the scatter ring
    // that simultaneous iteration leaves around a multiple root
    let mut cluster_of: Vec<usize> = (0..approx.len()).collect();
    fn find(cl: &mut Vec<usize>, i: usize) -> usize {
        if cl[i] != i {
            let r = find(cl, cl[i]);
            cl[i] = r;
        }
        cl[i]
    }
    for i in 0..approx.len() {
        for j in i + 1..approx.len() {
            let scale = 1.0 + approx[i].norm().max(approx[j].norm());
            let link = tol.cluster_radius.max(3e-5 * scale);
            if (approx[i] - approx[j]).norm() <= link {
                let (ri, rj) = (find(&mut cluster_of, i), find(&mut cluster_of, j));
                if ri != rj {
                    cluster_of[ri] = rj;
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<C64>> = std::collections::BTreeMap::new();
    for i in 0..approx.len() {
        let r = find(&mut cluster_of, i);
        groups.entry(r).or_default().push(approx[i]);
    }

    let mut roots: Vec<(C64, usize)> = Vec::new();
    if zero_mult > 0 {
        roots.push((C64::new(0.0, 0.0), zero_mult));
    }
    for members in groups.values() {
        let m = members.len();
        let centroid = members.iter().sum::<C64>() / m as f64;
        let polished = if m == 1 {
            newton_refine(&work, centroid, 8)
        } else {
            // the (m-1)-th derivative has a simple root at a multiplicity-m root
            let mut d = UniPoly::new(work.clone());
            for _ in 0..m - 1 {
                d = d.derivative();
            }
            let cand = newton_refine(d.coeffs(), centroid, 40);
            let scale = 1.0 + centroid.norm();
            if (cand - centroid).norm() <= 1e-3 * scale {
                cand
            } else {
                centroid
            }
        };
        roots.push((polished, m));
    }
    roots.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
    Ok(RootSet { roots })
}

/// Multiplicity of `point` as a root of `f`, read off the scaled Taylor
/// profile: the index of the first coefficient of f(x + point) whose relative
/// magnitude exceeds `rel_threshold`. Returns 0 when the point is not a root.
pub fn multiplicity_profile(f: &UniPoly, point: C64, rel_threshold: f64) -> usize {
    if f.is_zero() {
        return 0;
    }
    let shifted = f.taylor_shift(point);
    let max = shifted.iter().map(|c| c.norm()).fold(0.0_f64, f64::max);
    shifted
        .iter()
        .position(|c| c.norm() > rel_threshold * max)
        .unwrap_or(shifted.len())
}

/// Point of the complex projective plane in canonical normalization: the
/// coordinate of largest modulus equals one, ties broken by smallest index.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjPoint {
    coords: [C64; 3],
}

/// Normalizes a coordinate triple so the pivot entry is exactly one.
pub fn canonicalize3(v: [C64; 3]) -> [C64; 3] {
    let max = v.iter().map(|c| c.norm()).fold(0.0_f64, f64::max);
    assert!(max > 0.0, "cannot canonicalize the zero triple");
    let pivot = v
        .iter()
        .position(|c| c.norm() >= max * (1.0 - TIE_BAND))
        .unwrap();
    let p = v[pivot];
    let mut out = [v[0] / p, v[1] / p, v[2] / p];
    out[pivot] = C64::new(1.0, 0.0);
    out
}

fn pivot_index(v: &[C64; 3]) -> usize {
    let max = v.iter().map(|c| c.norm()).fold(0.0_f64, f64::max);
    v.iter()
        .position(|c| c.norm() >= max * (1.0 - TIE_BAND))
        .unwrap()
}

impl ProjPoint {
    pub fn new(coords: [C64; 3]) -> Self {
        ProjPoint {
            coords: canonicalize3(coords),
        }
    }

    pub fn coords(&self) -> [C64; 3] {
        self.coords
    }

    /// Distance in the chart where `self` has its pivot coordinate.
    pub fn dist(&self, other: &ProjPoint) -> f64 {
        let k = pivot_index(&self.coords);
        let qk = other.coords[k];
        let qmax = other.coords.iter().map(|c| c.norm()).fold(0.0_f64, f64::max);
        if qk.norm() < 1e-3 * qmax {
            return f64::INFINITY;
        }
        (0..3)
            .map(|i| (self.coords[i] / self.coords[k] - other.coords[i] / qk).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &ProjPoint, eps: f64) -> bool {
        self.dist(other) < eps
    }

    /// Lexicographic key on canonical coordinates, for deterministic ordering.
    pub fn sort_key(&self) -> [f64; 6] {
        [
            self.coords[0].re,
            self.coords[0].im,
            self.coords[1].re,
            self.coords[1].im,
            self.coords[2].re,
            self.coords[2].im,
        ]
    }

    pub fn cmp_key(&self, other: &ProjPoint) -> std::cmp::Ordering {
        let (a, b) = (self.sort_key(), other.sort_key());
        for i in 0..6 {
            let o = a[i].total_cmp(&b[i]);
            if o != std::cmp::Ordering::Equal {
                return o;
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl std::fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{:.6} : {:.6} : {:.6}]",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

/// The three affine charts used by the system solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chart {
    /// z = 1, keep x, eliminate y
    Z,
    /// y = 1, keep z, eliminate x
    Y,
    /// x = 1, keep y, eliminate z
    X,
}

impl Chart {
    pub const DEFAULT_ORDER: [Chart; 3] = [Chart::Z, Chart::Y, Chart::X];

    fn vars(self) -> (Var, Var, Var) {
        // (chart variable set to one, kept variable, eliminated variable)
        match self {
            Chart::Z => (Var::Z, Var::X, Var::Y),
            Chart::Y => (Var::Y, Var::Z, Var::X),
            Chart::X => (Var::X, Var::Y, Var::Z),
        }
    }

    fn embed(self, keep: C64, elim: C64) -> [C64; 3] {
        let one = C64::new(1.0, 0.0);
        match self {
            Chart::Z => [keep, elim, one],
            Chart::Y => [elim, one, keep],
            Chart::X => [one, keep, elim],
        }
    }
}

struct ChartContext<'a> {
    f: &'a TriPoly,
    h: &'a TriPoly,
    grad_f: [TriPoly; 3],
    grad_h: [TriPoly; 3],
    f_scale: f64,
    h_scale: f64,
}

impl<'a> ChartContext<'a> {
    fn new(f: &'a TriPoly, h: &'a TriPoly) -> Self {
        ChartContext {
            f,
            h,
            grad_f: [f.partial(Var::X), f.partial(Var::Y), f.partial(Var::Z)],
            grad_h: [h.partial(Var::X), h.partial(Var::Y), h.partial(Var::Z)],
            f_scale: f.max_coeff(),
            h_scale: h.max_coeff(),
        }
    }

    fn residuals(&self, pt: [C64; 3]) -> (f64, f64) {
        let s = pt.iter().map(|c| c.norm()).fold(1.0_f64, f64::max);
        let rf = self.f.eval(pt).norm() / (self.f_scale * s.powi(self.f.degree() as i32));
        let rh = self.h.eval(pt).norm() / (self.h_scale * s.powi(self.h.degree() as i32));
        (rf, rh)
    }
}

fn solve2(j: [[C64; 2]; 2], r: [C64; 2]) -> Option<[C64; 2]> {
    let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
    let scale = j.iter().flatten().map(|c| c.norm()).fold(0.0_f64, f64::max);
    if det.norm() <= 1e-14 * scale * scale {
        return None;
    }
    let du = (r[0] * j[1][1] - r[1] * j[0][1]) / det;
    let dv = (j[0][0] * r[1] - j[1][0] * r[0]) / det;
    Some([du, dv])
}

/// Newton iteration in chart coordinates on the pair (F, G).
fn newton2(
    ctx: &ChartContext,
    chart: Chart,
    g: &TriPoly,
    g_grad: &[TriPoly; 3],
    mut u: C64,
    mut v: C64,
    iters: usize,
) -> (C64, C64) {
    let (_, keep, elim) = chart.vars();
    let (ki, ei) = (
        match keep {
            Var::X => 0,
            Var::Y => 1,
            Var::Z => 2,
        },
        match elim {
            Var::X => 0,
            Var::Y => 1,
            Var::Z => 2,
        },
    );
    for _ in 0..iters {
        let pt = chart.embed(u, v);
        let r = [ctx.f.eval(pt), g.eval(pt)];
        let j = [
            [ctx.grad_f[ki].eval(pt), ctx.grad_f[ei].eval(pt)],
            [g_grad[ki].eval(pt), g_grad[ei].eval(pt)],
        ];
        let Some([du, dv]) = solve2(j, r) else { break };
        if !du.is_finite() || !dv.is_finite() {
            break;
        }
        u -= du;
        v -= dv;
        let s = 1.0 + u.norm().max(v.norm());
        if du.norm().max(dv.norm()) <= 1e-15 * s {
            break;
        }
    }
    (u, v)
}

/// Polishes one chart candidate. Falls back to a deflated system (F together
/// with the Jacobian minor of (F, H) for this chart) when the intersection is
/// tangential, which is exactly the hyperflex situation.
fn polish_candidate(
    ctx: &ChartContext,
    chart: Chart,
    minor: &TriPoly,
    minor_grad: &[TriPoly; 3],
    u0: C64,
    v0: C64,
) -> Option<[C64; 3]> {
    let (mut u, mut v) = newton2(ctx, chart, ctx.h, &ctx.grad_h, u0, v0, 30);
    let mut best = chart.embed(u, v);
    let (rf, rh) = ctx.residuals(best);
    let mut best_res = rf.max(rh);

    // tangentiality probe: normalized Jacobian minor of (F, H)
    let pt = chart.embed(u, v);
    let gf: Vec<C64> = ctx.grad_f.iter().map(|p| p.eval(pt)).collect();
    let gh: Vec<C64> = ctx.grad_h.iter().map(|p| p.eval(pt)).collect();
    let nf = gf.iter().map(|c| c.norm()).fold(0.0_f64, f64::max);
    let nh = gh.iter().map(|c| c.norm()).fold(0.0_f64, f64::max);
    let minor_val = minor.eval(pt).norm();
    let tangential = nf > 0.0 && nh > 0.0 && minor_val < 1e-4 * nf * nh;

    if tangential || best_res > 1e-11 {
        (u, v) = newton2(ctx, chart, minor, minor_grad, u0, v0, 40);
        let cand = chart.embed(u, v);
        let (rf2, rh2) = ctx.residuals(cand);
        if rf2.max(rh2) < best_res {
            best = cand;
            best_res = rf2.max(rh2);
        }
    }

    if best_res < 1e-9 {
        Some(best)
    } else {
        None
    }
}

fn chart_candidates(
    ctx: &ChartContext,
    chart: Chart,
    tol: &Tolerances,
) -> Result<Option<Vec<[C64; 3]>>> {
    let (cv, keep, elim) = chart.vars();
    let fb = ctx.f.chart_bipoly(cv, keep, elim);
    let hb = ctx.h.chart_bipoly(cv, keep, elim);
    let eliminant = match resultant_eliminate(&fb, &hb) {
        Ok(r) => r,
        Err(Error::DegenerateLeading | Error::BothZero) => return Ok(None),
        Err(e) => return Err(e),
    };
    if eliminant.is_zero() {
        return Ok(None);
    }
    if eliminant.degree() == 0 {
        return Ok(Some(Vec::new()));
    }

    let minor = ctx.grad_f[vidx(keep)]
        .mul(&ctx.grad_h[vidx(elim)])
        .sub(&ctx.grad_f[vidx(elim)].mul(&ctx.grad_h[vidx(keep)]));
    let minor_grad = [
        minor.partial(Var::X),
        minor.partial(Var::Y),
        minor.partial(Var::Z),
    ];

    let mut found = Vec::new();
    let keep_roots = roots_with_multiplicity(&eliminant, tol)?;
    for u0 in keep_roots.values() {
        if u0.norm() > 1e4 {
            continue;
        }
        let f_slice = fb.specialize(u0);
        if f_slice.is_zero() {
            continue;
        }
        let h_slice = hb.specialize(u0);
        let h_scale = ctx.h_scale * (1.0 + u0.norm()).powi(ctx.h.degree() as i32);
        let h_negligible = h_slice.max_coeff() <= 1e-9 * h_scale;
        for v0 in roots_with_multiplicity(&f_slice, tol)?.values() {
            if v0.norm() > 1e4 {
                continue;
            }
            let loose = 1e-2 * h_scale * (1.0 + v0.norm()).powi(ctx.h.degree() as i32);
            if h_negligible || h_slice.eval(v0).norm() <= loose {
                if let Some(pt) = polish_candidate(ctx, chart, &minor, &minor_grad, u0, v0) {
                    found.push(pt);
                }
            }
        }
    }
    Ok(Some(found))
}

fn vidx(v: Var) -> usize {
    match v {
        Var::X => 0,
        Var::Y => 1,
        Var::Z => 2,
    }
}

/// Complete finite solution set of F = H = 0 in the projective plane, each
/// point reported once, with charts processed in the given order.
pub fn solve_curve_system_with_charts(
    f: &TriPoly,
    h: &TriPoly,
    tol: &Tolerances,
    charts: &[Chart],
) -> Result<Vec<ProjPoint>> {
    if f.is_zero() || h.is_zero() {
        return Err(Error::DegenerateSystem);
    }
    let ctx = ChartContext::new(f, h);
    let per_chart = par::map_vec(charts.to_vec(), |chart| chart_candidates(&ctx, chart, tol));

    let mut any_live_chart = false;
    let mut candidates: Vec<ProjPoint> = Vec::new();
    for result in per_chart {
        match result? {
            Some(points) => {
                any_live_chart = true;
                candidates.extend(points.into_iter().map(ProjPoint::new));
            }
            None => {}
        }
    }
    if !any_live_chart {
        return Err(Error::DegenerateSystem);
    }

    candidates.sort_by(|a, b| a.cmp_key(b));
    let mut unique: Vec<ProjPoint> = Vec::new();
    for p in candidates {
        if !unique.iter().any(|q| q.approx_eq(&p, tol.point_eps)) {
            unique.push(p);
        }
    }
    Ok(unique)
}

/// Complete finite solution set of F = H = 0 in the projective plane.
pub fn solve_curve_system(f: &TriPoly, h: &TriPoly, tol: &Tolerances) -> Result<Vec<ProjPoint>> {
    solve_curve_system_with_charts(f, h, tol, &Chart::DEFAULT_ORDER)
}

/// True iff the gradient of F is nonvanishing (after normalization) at every
/// supplied point. Used as a runtime guard at every computed flex.
pub fn smoothness_probe(f: &TriPoly, pts: &[ProjPoint], tol: &Tolerances) -> bool {
    let scale = f.max_coeff();
    if scale == 0.0 {
        return false;
    }
    let grads = [f.partial(Var::X), f.partial(Var::Y), f.partial(Var::Z)];
    pts.iter().all(|p| {
        let c = p.coords();
        let g = grads
            .iter()
            .map(|gp| gp.eval(c).norm())
            .fold(0.0_f64, f64::max);
        g / scale > tol.zero_eps
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flexlab::hessian;
    use crate::kuribayashi::build_curve_raw;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn quartic_roots_of_minus_one() {
        // x^4 + 1: four simple roots e^{i pi (2k+1)/4}
        let f = UniPoly::from_real(&[1.0, 0.0, 0.0, 0.0, 1.0]);
        let rs = roots_with_multiplicity(&f, &tol()).unwrap();
        assert_eq!(rs.roots().len(), 4);
        assert_eq!(rs.total_multiplicity(), 4);
        for k in 0..4 {
            let expected = C64::from_polar(1.0, std::f64::consts::PI * (2.0 * k as f64 + 1.0) / 4.0);
            let (_, m, d) = rs.nearest(expected).unwrap();
            assert_eq!(m, 1);
            assert!(d < 1e-10, "distance {}", d);
        }
    }

    #[test]
    fn double_root_recovered() {
        // (x-1)^2 (x+2) = x^3 - 3x + 2
        let f = UniPoly::from_real(&[2.0, -3.0, 0.0, 1.0]);
        let rs = roots_with_multiplicity(&f, &tol()).unwrap();
        assert_eq!(rs.total_multiplicity(), 3);
        let (r1, m1, d1) = rs.nearest(c(1.0, 0.0)).unwrap();
        assert_eq!(m1, 2);
        assert!(d1 < 1e-8, "root {} dist {}", r1, d1);
        let (_, m2, d2) = rs.nearest(c(-2.0, 0.0)).unwrap();
        assert_eq!(m2, 1);
        assert!(d2 < 1e-10);
    }

    #[test]
    fn stripped_zero_root_with_multiplicity() {
        // 144 x^4 + 144 x^8 = 144 x^4 (1 + x^4): oracle is the hand factorization
        let mut coeffs = vec![0.0; 9];
        coeffs[4] = 144.0;
        coeffs[8] = 144.0;
        let f = UniPoly::from_real(&coeffs);
        let rs = roots_with_multiplicity(&f, &tol()).unwrap();
        assert_eq!(rs.total_multiplicity(), 8);
        let (_, m0, d0) = rs.nearest(c(0.0, 0.0)).unwrap();
        assert_eq!(m0, 4);
        assert!(d0 == 0.0);
        for k in 0..4 {
            let expected = C64::from_polar(1.0, std::f64::consts::PI * (2.0 * k as f64 + 1.0) / 4.0);
            let (_, m, d) = rs.nearest(expected).unwrap();
            assert_eq!(m, 1);
            assert!(d < 1e-10);
        }
    }

    #[test]
    fn multiplicity_profile_reads_taylor_coefficients() {
        let f = UniPoly::from_real(&[2.0, -3.0, 0.0, 1.0]); // (x-1)^2 (x+2)
        assert_eq!(multiplicity_profile(&f, c(1.0, 0.0), 1e-5), 2);
        assert_eq!(multiplicity_profile(&f, c(-2.0, 0.0), 1e-5), 1);
        assert_eq!(multiplicity_profile(&f, c(0.5, 0.0), 1e-5), 0);
    }

    #[test]
    fn canonicalization_is_stable_under_jitter() {
        let delta = C64::from_polar(1.0, std::f64::consts::FRAC_PI_4);
        let p = ProjPoint::new([c(0.0, 0.0), delta, c(1.0, 0.0)]);
        let jitter = c(1.0 + 3e-15, -2e-15);
        let q = ProjPoint::new([c(0.0, 0.0), delta * jitter, jitter]);
        assert!(p.approx_eq(&q, 1e-10), "p={} q={}", p, q);
    }

    #[test]
    fn fermat_system_has_twelve_flex_points() {
        let f = build_curve_raw(c(0.0, 0.0), c(0.0, 0.0));
        let h = hessian(&f);
        let pts = solve_curve_system(&f, &h, &tol()).unwrap();
        assert_eq!(pts.len(), 12, "points: {:#?}", pts);
        // orbit pattern: [0:d:1], [d:0:1] with d^4 = -1, [b:1:0] with b^4 = -1
        let mut on_x0 = 0;
        let mut on_y0 = 0;
        let mut at_inf = 0;
        for p in &pts {
            let [x, y, z] = p.coords();
            if x.norm() < 1e-9 {
                on_x0 += 1;
                assert!((y.powu(4) / z.powu(4) + 1.0).norm() < 1e-9);
            } else if y.norm() < 1e-9 {
                on_y0 += 1;
                assert!((x.powu(4) / z.powu(4) + 1.0).norm() < 1e-9);
            } else if z.norm() < 1e-9 {
                at_inf += 1;
                assert!((x.powu(4) / y.powu(4) + 1.0).norm() < 1e-9);
            } else {
                panic!("unexpected Fermat flex at {}", p);
            }
        }
        assert_eq!((on_x0, on_y0, at_inf), (4, 4, 4));
    }

    #[test]
    fn c44_has_24_points_and_c33_has_12() {
        for (a, b, expected) in [(4.0, 4.0, 24), (3.0, 3.0, 12)] {
            let f = build_curve_raw(c(a, 0.0), c(b, 0.0));
            let h = hessian(&f);
            let pts = solve_curve_system(&f, &h, &tol()).unwrap();
            assert_eq!(pts.len(), expected, "C_{{{},{}}}", a, b);
            for p in &pts {
                let s = f.eval(p.coords()).norm();
                let t = h.eval(p.coords()).norm() / h.max_coeff();
                assert!(s < 1e-7, "|F| = {s:e} at {p}");
                assert!(t < 1e-6, "|H|/scale = {t:e} at {p}");
            }
        }
    }

    #[test]
    fn chart_order_does_not_change_solution_set() {
        let f = build_curve_raw(c(4.0, 0.0), c(4.0, 0.0));
        let h = hessian(&f);
        let fwd = solve_curve_system_with_charts(&f, &h, &tol(), &Chart::DEFAULT_ORDER).unwrap();
        let rev = solve_curve_system_with_charts(&f, &h, &tol(), &[Chart::X, Chart::Y, Chart::Z])
            .unwrap();
        assert_eq!(fwd.len(), rev.len());
        for p in &fwd {
            assert!(rev.iter().any(|q| q.approx_eq(p, tol().point_eps)));
        }
    }

    #[test]
    fn degenerate_system_detected() {
        // x^4 has an identically vanishing Hessian
        let f = TriPoly::new(4, [((4, 0, 0), c(1.0, 0.0))]);
        let h = hessian(&f);
        assert!(matches!(
            solve_curve_system(&f, &h, &tol()),
            Err(Error::DegenerateSystem)
        ));
    }

    #[test]
    fn smoothness_probe_flags_singular_point() {
        // x^4 + y^4 is singular at [0:0:1]
        let f = TriPoly::new(4, [((4, 0, 0), c(1.0, 0.0)), ((0, 4, 0), c(1.0, 0.0))]);
        let p = ProjPoint::new([c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        assert!(!smoothness_probe(&f, &[p], &tol()));

        let fermat = build_curve_raw(c(0.0, 0.0), c(0.0, 0.0));
        let delta = C64::from_polar(1.0, std::f64::consts::FRAC_PI_4);
        let q = ProjPoint::new([c(0.0, 0.0), delta, c(1.0, 0.0)]);
        assert!(smoothness_probe(&fermat, &[q], &tol()));
    }
}
