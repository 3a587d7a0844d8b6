//! One-point codes `C_ℓ(P)` and improved codes `C̃_d(P)` on a GK curve:
//! parity-check matrices by evaluation, ranks, exhaustive minimum distance for
//! tiny dimensions, propagation rules and the derived code tables.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::{self, Write};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::curve::{CurvePoint, GkCurve, Orbit};
use crate::field::{Elem, GaloisField};
use crate::funcfield::{BasePoint, FuncError, RationalFunction};
use crate::semigroup::{NumericalSemigroup, SemigroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("independence failure: {rows} rows have rank {rank}")]
    IndependenceFailure { rows: usize, rank: usize },
    #[error("dimension {k} too large for exhaustive search (limit {limit})")]
    TooLarge { k: usize, limit: usize },
    #[error("ℓ must be at least 1 with ρ_ℓ below the code length")]
    BadEll,
    #[error("designed distance must be at least 2")]
    BadDistance,
    #[error("rows have inconsistent lengths")]
    Ragged,
    #[error(transparent)]
    Func(#[from] FuncError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

/// Which parity checks a matrix carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum MatrixKind {
    Cl { ell: u64 },
    Improved { d: u64 },
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixKind::Cl { ell } => write!(f, "cl/{ell}"),
            MatrixKind::Improved { d } => write!(f, "improved/{d}"),
        }
    }
}

/// Rows `(f(P_1), …, f(P_n))` for functions `f` with poles only at the base point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalMatrix {
    pub rows: Vec<Vec<Elem>>,
    /// Pole order of the function behind each row.
    pub row_meta: Vec<u64>,
    pub point_order: Vec<CurvePoint>,
    pub n: usize,
    pub qbar: u32,
    pub orbit: Orbit,
    pub kind: MatrixKind,
}

impl EvalMatrix {
    pub fn rank(&self, f: &GaloisField) -> usize {
        rank(f, &self.rows)
    }

    /// Writes the `GKMAT/1` text form: a magic line, one header line and one
    /// line of space-separated encodings per row.
    pub fn write_gkmat<W: Write>(&self, f: &GaloisField, mut out: W) -> io::Result<()> {
        let irr: Vec<String> = f.modulus().iter().map(|c| c.to_string()).collect();
        writeln!(out, "GKMAT/1")?;
        writeln!(
            out,
            "p={} m={} irr={} qbar={} orbit={} kind={} n={} rows={}",
            f.characteristic(),
            f.degree(),
            irr.join(","),
            self.qbar,
            self.orbit,
            self.kind,
            self.n,
            self.rows.len()
        )?;
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|e| e.enc().to_string()).collect();
            writeln!(out, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Row rank by Gaussian elimination; pivots are the first nonzero column and
/// the first row carrying it.
pub fn rank(f: &GaloisField, rows: &[Vec<Elem>]) -> usize {
    let mut m: Vec<Vec<Elem>> = rows.to_vec();
    let width = m.iter().map(Vec::len).max().unwrap_or(0);
    let mut r = 0;
    for col in 0..width {
        let Some(pivot) = (r..m.len()).find(|&i| m[i].get(col).is_some_and(|v| !v.is_zero())) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = f.inv(m[r][col]).expect("pivot is nonzero");
        let pivot_row: Vec<Elem> = m[r].iter().map(|&v| f.mul(v, inv)).collect();
        for row in m.iter_mut().skip(r + 1) {
            let factor = row.get(col).copied().unwrap_or(Elem::ZERO);
            if factor.is_zero() {
                continue;
            }
            for (j, &pv) in pivot_row.iter().enumerate().skip(col) {
                row[j] = f.sub(row[j], f.mul(factor, pv));
            }
        }
        m[r] = pivot_row;
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Exact minimum weight of the code spanned by `generator_rows`.
///
/// Weights are invariant under scaling, so only codewords whose first nonzero
/// coefficient is 1 are visited.
pub fn min_distance_bruteforce(
    f: &GaloisField,
    generator_rows: &[Vec<Elem>],
    k_limit: usize,
) -> Result<usize, CodeError> {
    let k = generator_rows.len();
    if k > k_limit {
        return Err(CodeError::TooLarge { k, limit: k_limit });
    }
    let n = generator_rows.first().map_or(0, Vec::len);
    if generator_rows.iter().any(|r| r.len() != n) {
        return Err(CodeError::Ragged);
    }
    if k == 0 {
        return Ok(n);
    }
    let q = f.size() as u64;
    let jobs: Vec<(usize, u64)> = (0..k)
        .flat_map(|lead| {
            let free = (k - lead - 1) as u32;
            (0..q.pow(free)).map(move |idx| (lead, idx))
        })
        .collect();
    let best = jobs
        .par_chunks(256)
        .map(|chunk| {
            let mut word = vec![Elem::ZERO; n];
            let mut best = usize::MAX;
            for &(lead, mut idx) in chunk {
                word.copy_from_slice(&generator_rows[lead]);
                for row in &generator_rows[lead + 1..] {
                    let c = Elem((idx % q) as u16);
                    idx /= q;
                    if !c.is_zero() {
                        for (w, &v) in word.iter_mut().zip(row) {
                            *w = f.add(*w, f.mul(c, v));
                        }
                    }
                }
                best = best.min(word.iter().filter(|v| !v.is_zero()).count());
            }
            best
        })
        .min()
        .unwrap_or(n);
    Ok(best)
}

/// The codes attached to one base point: generator values at every other
/// rational point are computed once and reused for all matrices.
pub struct CodeFamily<'a> {
    pub curve: &'a GkCurve,
    pub base: BasePoint<'a>,
    pub semigroup: NumericalSemigroup,
    pub points: Vec<CurvePoint>,
    generator_values: Vec<Vec<Elem>>,
}

impl<'a> CodeFamily<'a> {
    /// Family at the standard base point of `orbit`.
    pub fn standard(curve: &'a GkCurve, orbit: Orbit) -> Result<Self, CodeError> {
        let base = BasePoint::standard(&curve.params, &curve.points, orbit)?;
        Self::from_base(curve, base)
    }

    pub fn at(curve: &'a GkCurve, point: CurvePoint) -> Result<Self, CodeError> {
        let base = BasePoint::new(&curve.params, point)?;
        Self::from_base(curve, base)
    }

    fn from_base(curve: &'a GkCurve, base: BasePoint<'a>) -> Result<Self, CodeError> {
        let semigroup = base.semigroup()?;
        let points: Vec<CurvePoint> = curve.points.iter().copied().filter(|p| *p != base.point).collect();
        let generator_values = points.par_iter().map(|q| base.generator_values(q)).collect::<Result<Vec<_>, _>>()?;
        Ok(Self { curve, base, semigroup, points, generator_values })
    }

    pub fn field(&self) -> &'a GaloisField {
        self.base.field()
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn orbit(&self) -> Orbit {
        self.base.orbit
    }

    fn functions_for(&self, rhos: &[u64]) -> Result<Vec<RationalFunction>, CodeError> {
        let orders = self.base.pole_orders();
        rhos.iter().map(|&rho| Ok(self.base.function_with_pole(rho, &orders)?)).collect()
    }

    /// Evaluates point-major, then transposes into one row per function.
    fn evaluate_rows(&self, funcs: &[RationalFunction]) -> Vec<Vec<Elem>> {
        let f = self.field();
        let columns: Vec<Vec<Elem>> = self
            .generator_values
            .par_iter()
            .map(|vals| funcs.iter().map(|func| crate::funcfield::evaluate_with(f, func, vals)).collect())
            .collect();
        (0..funcs.len()).map(|i| columns.iter().map(|col| col[i]).collect()).collect()
    }

    fn matrix(&self, rhos: Vec<u64>, kind: MatrixKind) -> Result<EvalMatrix, CodeError> {
        let funcs = self.functions_for(&rhos)?;
        Ok(EvalMatrix {
            rows: self.evaluate_rows(&funcs),
            row_meta: rhos,
            point_order: self.points.clone(),
            n: self.n(),
            qbar: self.curve.qbar(),
            orbit: self.orbit(),
            kind,
        })
    }

    /// Parity-check matrix of `C_ℓ`: rows for pole orders `ρ_1, …, ρ_ℓ`.
    /// Fails with `IndependenceFailure` if the rows are not independent.
    pub fn parity_matrix_cl(&self, ell: u64) -> Result<EvalMatrix, CodeError> {
        if ell == 0 || self.semigroup.rho(ell)? >= self.n() as u64 {
            return Err(CodeError::BadEll);
        }
        let rhos = (1..=ell).map(|i| self.semigroup.rho(i)).collect::<Result<Vec<_>, _>>()?;
        let m = self.matrix(rhos, MatrixKind::Cl { ell })?;
        let r = m.rank(self.field());
        if r < ell as usize {
            return Err(CodeError::IndependenceFailure { rows: ell as usize, rank: r });
        }
        Ok(m)
    }

    /// Parity-check matrix of `C̃_d`: rows `h_{i+1}` for every `i` with `ν_i < d`.
    pub fn parity_matrix_improved(&self, d: u64) -> Result<EvalMatrix, CodeError> {
        if d < 2 {
            return Err(CodeError::BadDistance);
        }
        let rhos = self
            .semigroup
            .improved_indices(d)
            .into_iter()
            .map(|i| self.semigroup.rho(i + 1))
            .collect::<Result<Vec<_>, _>>()?;
        self.matrix(rhos, MatrixKind::Improved { d })
    }

    /// Exact minimum distance of `C(D, ρ_ℓ P)`, generated by the rows of the
    /// parity-check matrix of `C_ℓ`.
    pub fn primal_min_distance(&self, ell: u64, k_limit: usize) -> Result<usize, CodeError> {
        if ell as usize > k_limit {
            return Err(CodeError::TooLarge { k: ell as usize, limit: k_limit });
        }
        let m = self.parity_matrix_cl(ell)?;
        min_distance_bruteforce(self.field(), &m.rows, k_limit)
    }
}

/// How a set of code parameters was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum CodeKind {
    Cl { ell: u64, rho: u64 },
    Improved { d: u64 },
    Propagated { from: (u64, u64, u64), rule: PropagationRule, s: u64 },
}

/// The four ways of trading length, dimension and distance of an `[n, k, d]` code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PropagationRule {
    /// `[n, k, d - s]`, `s < d`
    ReduceDistance,
    /// `[n, k - s, d]`, `s < k`
    Subcode,
    /// `[n - s, k - s, d]`, `s < k`
    Shorten,
    /// `[n - s, k, d - s]`, `s < min(n - k - 1, d)`
    Puncture,
}

impl PropagationRule {
    pub const ALL: [PropagationRule; 4] = [
        PropagationRule::ReduceDistance,
        PropagationRule::Subcode,
        PropagationRule::Shorten,
        PropagationRule::Puncture,
    ];

    /// Exclusive upper bound on `s`.
    pub fn s_limit(self, n: u64, k: u64, d: u64) -> u64 {
        match self {
            PropagationRule::ReduceDistance => d,
            PropagationRule::Subcode | PropagationRule::Shorten => k,
            PropagationRule::Puncture => (n.saturating_sub(k + 1)).min(d),
        }
    }

    pub fn apply(self, (n, k, d): (u64, u64, u64), s: u64) -> (u64, u64, u64) {
        match self {
            PropagationRule::ReduceDistance => (n, k, d - s),
            PropagationRule::Subcode => (n, k - s, d),
            PropagationRule::Shorten => (n - s, k - s, d),
            PropagationRule::Puncture => (n - s, k, d - s),
        }
    }
}

/// Code parameters with provenance; `d_designed` is a guaranteed lower bound,
/// not the exact minimum distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CodeSpec {
    pub n: u64,
    pub k: u64,
    pub d_designed: u64,
    pub kind: CodeKind,
    pub orbit: Option<Orbit>,
    pub qbar: u32,
}

impl CodeSpec {
    pub fn params(&self) -> (u64, u64, u64) {
        (self.n, self.k, self.d_designed)
    }

    pub fn satisfies_singleton(&self) -> bool {
        self.k + self.d_designed <= self.n + 1
    }
}

/// Every code the propagation rules give from `[n, k, d]`, for all admissible `s`.
pub fn propagate(spec: &CodeSpec) -> Vec<CodeSpec> {
    let from = spec.params();
    let (n, k, d) = from;
    PropagationRule::ALL
        .iter()
        .flat_map(|&rule| {
            (0..rule.s_limit(n, k, d)).map(move |s| {
                let (n2, k2, d2) = rule.apply(from, s);
                CodeSpec {
                    n: n2,
                    k: k2,
                    d_designed: d2,
                    kind: CodeKind::Propagated { from, rule, s },
                    orbit: None,
                    qbar: spec.qbar,
                }
            })
        })
        .collect()
}

/// Length of the one-point codes: all rational points but the base point.
pub fn code_length(qbar: u32) -> u64 {
    let q = u64::from(qbar).pow(3);
    let g = (q + 1) * (u64::from(qbar).pow(2) - 2) / 2 + 1;
    q * q + 2 * g * q
}

/// `C_ℓ` parameters for every ℓ with `ρ_ℓ ≤ max_rho`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClTableRow {
    pub n: u64,
    pub k: u64,
    pub ell: u64,
    pub rho: u64,
    pub nu: u64,
    pub d_ord: u64,
}

pub fn cl_table(qbar: u32, orbit: Orbit, max_rho: u64) -> Result<Vec<ClTableRow>, CodeError> {
    let s = crate::semigroup::gk_semigroup(qbar, orbit)?;
    let n = code_length(qbar);
    Ok(crate::semigroup::nu_rows(&s, max_rho)
        .into_iter()
        .map(|r| ClTableRow { n, k: n - r.ell, ell: r.ell, rho: r.rho, nu: r.nu, d_ord: r.d_ord })
        .collect())
}

/// Improved-code parameters: `r_d` and the dimension bound `n - r_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ImprovedTableRow {
    pub n: u64,
    pub d: u64,
    pub r_d: u64,
    pub k_lb: u64,
}

pub fn improved_row(s: &NumericalSemigroup, n: u64, d: u64) -> ImprovedTableRow {
    let r_d = s.r_d(d);
    ImprovedTableRow { n, d, r_d, k_lb: n - r_d }
}

pub fn improved_table(
    qbar: u32,
    orbit: Orbit,
    ds: impl IntoIterator<Item = u64>,
) -> Result<Vec<ImprovedTableRow>, CodeError> {
    let s = crate::semigroup::gk_semigroup(qbar, orbit)?;
    let n = code_length(qbar);
    Ok(ds.into_iter().map(|d| improved_row(&s, n, d)).collect())
}

/// Best improved code of designed distance `d` over both base orbits; O1 wins ties.
pub fn best_improved(qbar: u32, d: u64) -> Result<CodeSpec, CodeError> {
    let n = code_length(qbar);
    let mut best: Option<CodeSpec> = None;
    for orbit in [Orbit::O1, Orbit::O2] {
        let s = crate::semigroup::gk_semigroup(qbar, orbit)?;
        let k = n - s.r_d(d);
        if best.is_none_or(|b| k > b.k) {
            best = Some(CodeSpec { n, k, d_designed: d, kind: CodeKind::Improved { d }, orbit: Some(orbit), qbar });
        }
    }
    Ok(best.expect("two orbits"))
}

/// Best improved codes for `2 ≤ d ≤ d_max`, dropping each `d` whose dimension is
/// matched by a larger designed distance.
pub fn best_improved_table(qbar: u32, d_max: u64) -> Result<Vec<CodeSpec>, CodeError> {
    let all = (2..=d_max + 1).map(|d| best_improved(qbar, d)).collect::<Result<Vec<_>, _>>()?;
    Ok(all.windows(2).filter(|w| w[0].k > w[1].k).map(|w| w[0]).collect())
}

/// Designed distances whose improved codes seed the GF(64) improvements.
pub const IMPROVEMENT_SEEDS: [u64; 4] = [13, 14, 15, 20];

/// Codimension `n - k` with the range of lengths over which the closure
/// beats the best previously tabulated GF(64) codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ImprovementWindow {
    pub codim: u64,
    pub n_min: u64,
    pub n_max: u64,
}

pub const IMPROVEMENT_WINDOWS: [ImprovementWindow; 4] = [
    ImprovementWindow { codim: 20, n_min: 200, n_max: 224 },
    ImprovementWindow { codim: 22, n_min: 210, n_max: 224 },
    ImprovementWindow { codim: 23, n_min: 210, n_max: 224 },
    ImprovementWindow { codim: 28, n_min: 210, n_max: 224 },
];

/// Closure of `seeds` under single-step propagation, keeping the largest `d`
/// for each `(n, k)`. Each entry remembers the code it was first reached from.
pub fn propagation_closure(seeds: &[CodeSpec], n_min: u64) -> BTreeMap<(u64, u64), CodeSpec> {
    let mut best: BTreeMap<(u64, u64), CodeSpec> = BTreeMap::new();
    let mut seen: BTreeSet<(u64, u64, u64)> = BTreeSet::new();
    let mut frontier: Vec<CodeSpec> = seeds.to_vec();
    while let Some(spec) = frontier.pop() {
        if spec.n < n_min || spec.k == 0 || spec.d_designed == 0 || !seen.insert(spec.params()) {
            continue;
        }
        let entry = best.entry((spec.n, spec.k)).or_insert(spec);
        if spec.d_designed > entry.d_designed {
            *entry = spec;
        }
        for rule in PropagationRule::ALL {
            if rule.s_limit(spec.n, spec.k, spec.d_designed) > 1 {
                let (n, k, d) = rule.apply(spec.params(), 1);
                frontier.push(CodeSpec {
                    n,
                    k,
                    d_designed: d,
                    kind: CodeKind::Propagated { from: spec.params(), rule, s: 1 },
                    orbit: None,
                    qbar: spec.qbar,
                });
            }
        }
    }
    best
}

/// The GF(64) improvements: best improved codes for the seed distances, their
/// propagation closure, restricted to the improvement windows. Ordered by
/// increasing `d`, then decreasing `n`.
pub fn improvements_table() -> Result<Vec<CodeSpec>, CodeError> {
    let seeds = IMPROVEMENT_SEEDS.iter().map(|&d| best_improved(2, d)).collect::<Result<Vec<_>, _>>()?;
    let n_min = IMPROVEMENT_WINDOWS.iter().map(|w| w.n_min).min().unwrap_or(0);
    let closure = propagation_closure(&seeds, n_min);
    let mut rows: Vec<CodeSpec> = closure
        .into_values()
        .filter(|c| IMPROVEMENT_WINDOWS.iter().any(|w| c.n - c.k == w.codim && (w.n_min..=w.n_max).contains(&c.n)))
        .collect();
    rows.sort_by(|a, b| a.d_designed.cmp(&b.d_designed).then(b.n.cmp(&a.n)));
    Ok(rows)
}
