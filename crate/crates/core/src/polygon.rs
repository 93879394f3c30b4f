//! The polygon model of the cluster category of type `A_n`.
//!
//! Diagonals of the `(n+3)`-gon with vertices `0..=n+2` correspond to the
//! indecomposable objects, for the cluster-tilting object `T` whose endomorphism
//! algebra is the path algebra of `1 -> 2 -> ... -> n`:
//!
//! * `{i, n+2}` with `1 <= i <= n` is `ΣT_i`;
//! * `{i, j}` with `j <= n+1` is the interval module `M[i+1, j-1]`.
//!
//! Crossing diagonals have a one-dimensional extension space, and the two
//! smoothings of a crossing are the middle terms of the two non-split triangles.
//! [`verify_an`] checks the multiplication identity on every crossing, calibrates
//! crossing against module-theoretic `Ext¹`, and compares the resulting set of
//! values with the cluster variables found by seed mutation.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::character::{cc_value_with, verify_triangle_with, CCObject};
use crate::cluster::{enumerate_cluster_variables, mutate_seed, quiver_to_matrix, Seed};
use crate::error::{Error, Result};
use crate::grassmannian::GrassmannianOptions;
use crate::modules::{ext1_dim, Representation};
use crate::quiver::Algebra;
use crate::{LaurentPoly, QField, QMatrix, Rational};

/// Largest `n` accepted by [`verify_an`] unless overridden.
pub const DEFAULT_MAX_N: usize = 6;

/// A diagonal `{i, j}` of the `(n+3)`-gon, `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagonal {
    i: usize,
    j: usize,
}

impl Diagonal {
    /// Validates that `{i, j}` is a diagonal (not a side) of the `(n+3)`-gon.
    pub fn new(n: usize, i: usize, j: usize) -> Result<Self> {
        let (i, j) = (i.min(j), i.max(j));
        if j > n + 2 || is_side(n, i, j) {
            return Err(Error::InvalidArgument(format!(
                "{{{i},{j}}} is not a diagonal of the {}-gon",
                n + 3
            )));
        }
        Ok(Diagonal { i, j })
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.i, self.j)
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.i, self.j)
    }
}

fn is_side(n: usize, i: usize, j: usize) -> bool {
    j <= i + 1 || (i == 0 && j == n + 2)
}

/// All `n(n+3)/2` diagonals in lexicographic order.
pub fn all_arcs(n: usize) -> Result<Vec<Diagonal>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("the polygon model needs n >= 2, got {n}")));
    }
    let mut out = Vec::new();
    for i in 0..=n + 2 {
        for j in i + 2..=n + 2 {
            if !is_side(n, i, j) {
                out.push(Diagonal { i, j });
            }
        }
    }
    Ok(out)
}

/// True iff the endpoints strictly interleave.
pub fn crossing(a: &Diagonal, b: &Diagonal) -> bool {
    (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j)
}

/// Short exact sequences `0 -> M[c,b] -> M[a,b] -> M[a,c-1] -> 0`, as
/// `[(c,b), (a,b), (a,c-1)]`, for all `1 <= a < c <= b <= n`.
pub fn interval_sequences(n: usize) -> Vec<[(usize, usize); 3]> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a..=n {
            for c in a + 1..=b {
                out.push([(c, b), (a, b), (a, c - 1)]);
            }
        }
    }
    out
}

/// The linear `A_n` algebra together with the arc dictionary.
#[derive(Clone, Debug)]
pub struct PolygonModel {
    n: usize,
    algebra: Arc<Algebra>,
}

impl PolygonModel {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("the polygon model needs n >= 2, got {n}")));
        }
        Ok(PolygonModel {
            n,
            algebra: Arc::new(Algebra::linear_a(n)?),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    /// `M[a, b]`: one-dimensional on vertices `a..=b`, identities inside.
    pub fn interval(&self, a: usize, b: usize) -> Result<Representation> {
        if a < 1 || b > self.n || a > b {
            return Err(Error::InvalidArgument(format!(
                "[{a},{b}] is not an interval in 1..={}",
                self.n
            )));
        }
        let inside = |v: usize| (a..=b).contains(&v);
        let dims: Vec<usize> = (1..=self.n).map(|v| usize::from(inside(v))).collect();
        let matrices = (1..self.n)
            .map(|k| {
                let mut m = QMatrix::zeros(QField::new(), dims[k], dims[k - 1]);
                if inside(k) && inside(k + 1) {
                    m[(0, 0)] = Rational::from_integer(1.into());
                }
                m
            })
            .collect();
        Representation::new(self.algebra.clone(), dims, matrices)
    }

    pub fn arc_to_object(&self, d: &Diagonal) -> Result<CCObject> {
        let (i, j) = d.endpoints();
        let n = self.n;
        Diagonal::new(n, i, j)?;
        if j == n + 2 {
            Ok(CCObject::shifted_projective(self.algebra.clone(), i - 1))
        } else {
            Ok(CCObject::from_module(self.interval(i + 1, j - 1)?))
        }
    }

    /// Object for a pair of polygon vertices; sides give the zero object.
    fn chord_object(&self, i: usize, j: usize) -> Result<CCObject> {
        let (i, j) = (i.min(j), i.max(j));
        if is_side(self.n, i, j) {
            Ok(CCObject::zero(self.algebra.clone()))
        } else {
            self.arc_to_object(&Diagonal { i, j })
        }
    }

    /// The two smoothings of a crossing. For `a = {p,r}`, `b = {q,s}` with
    /// `p < q < r < s` the first is `{p,q} ⊕ {r,s}`, the second `{p,s} ⊕ {q,r}`;
    /// swapping the arguments swaps the outputs.
    pub fn smoothings(&self, a: &Diagonal, b: &Diagonal) -> Result<(CCObject, CCObject)> {
        if !crossing(a, b) {
            return Err(Error::InvalidArgument(format!("{a} and {b} do not cross")));
        }
        let (first, second) = if a.i < b.i { (a, b) } else { (b, a) };
        let (p, r, q, s) = (first.i, first.j, second.i, second.j);
        let x = self.chord_object(p, q)?.direct_sum(&self.chord_object(r, s)?)?;
        let y = self.chord_object(p, s)?.direct_sum(&self.chord_object(q, r)?)?;
        Ok(if a.i < b.i { (x, y) } else { (y, x) })
    }
}

/// Knobs for [`verify_an_with`].
#[derive(Clone, Debug)]
pub struct AnOptions {
    pub max_n: usize,
    /// Verify at most this many crossing pairs (lexicographically first).
    pub max_pairs: Option<usize>,
    pub grassmannian: GrassmannianOptions,
}

impl Default for AnOptions {
    fn default() -> Self {
        AnOptions {
            max_n: DEFAULT_MAX_N,
            max_pairs: None,
            grassmannian: GrassmannianOptions::default(),
        }
    }
}

/// One line of the report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub kind: CheckKind,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckKind {
    Triangle,
    Calibration,
    Flip,
    Bijection,
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckKind::Triangle => "triangle",
            CheckKind::Calibration => "ext",
            CheckKind::Flip => "flip",
            CheckKind::Bijection => "bijection",
        })
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} {}", self.kind, self.detail)
    }
}

#[derive(Clone, Debug)]
pub struct AnReport {
    pub n: usize,
    pub arcs: usize,
    pub crossing_pairs: usize,
    pub checked_pairs: usize,
    pub cluster_variables: usize,
    pub checks: Vec<Check>,
}

impl AnReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn count(&self, kind: CheckKind) -> (usize, usize) {
        let of_kind: Vec<_> = self.checks.iter().filter(|c| c.kind == kind).collect();
        (of_kind.iter().filter(|c| c.passed).count(), of_kind.len())
    }

    pub fn summary(&self) -> String {
        let passed = self.checks.iter().filter(|c| c.passed).count();
        if self.passed() {
            format!("{passed} checks passed")
        } else {
            format!("{} of {} checks failed", self.checks.len() - passed, self.checks.len())
        }
    }
}

impl fmt::Display for AnReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "n = {}: {} arcs, {} crossing pairs ({} checked), {} cluster variables",
            self.n, self.arcs, self.crossing_pairs, self.checked_pairs, self.cluster_variables
        )?;
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        writeln!(f, "{}", self.summary())
    }
}

pub fn verify_an(n: usize) -> Result<AnReport> {
    verify_an_with(n, &AnOptions::default())
}

pub fn verify_an_with(n: usize, opts: &AnOptions) -> Result<AnReport> {
    if n > opts.max_n {
        return Err(Error::InvalidArgument(format!(
            "n = {n} exceeds the configured maximum {}",
            opts.max_n
        )));
    }
    let model = PolygonModel::new(n)?;
    let g = &opts.grassmannian;
    let names = model.algebra.variable_names();
    let arcs = all_arcs(n)?;
    let objects: Vec<CCObject> = arcs.iter().map(|d| model.arc_to_object(d)).collect::<Result<_>>()?;
    let values: Vec<LaurentPoly> = objects
        .par_iter()
        .map(|o| cc_value_with(o, g))
        .collect::<Result<_>>()?;

    let mut pairs = Vec::new();
    let mut all_pairs = Vec::new();
    for (x, a) in arcs.iter().enumerate() {
        for (y, b) in arcs.iter().enumerate().skip(x) {
            all_pairs.push((x, y));
            if crossing(a, b) {
                pairs.push((x, y));
            }
        }
    }
    let crossing_pairs = pairs.len();
    if let Some(k) = opts.max_pairs {
        pairs.truncate(k);
    }

    let mut checks: Vec<Check> = pairs
        .par_iter()
        .map(|&(x, y)| -> Result<Check> {
            let (b, b_prime) = model.smoothings(&arcs[x], &arcs[y])?;
            let report = verify_triangle_with(&objects[x], &objects[y], &b, &b_prime, g)?;
            let detail = if report.holds {
                format!("{} x {}", arcs[x], arcs[y])
            } else {
                format!(
                    "{} x {}: X_L*X_M - (X_B + X_B') = {}",
                    arcs[x],
                    arcs[y],
                    report.difference.render_with(&names)
                )
            };
            Ok(Check {
                kind: CheckKind::Triangle,
                passed: report.holds,
                detail,
            })
        })
        .collect::<Result<_>>()?;

    let calibration: Vec<Check> = all_pairs
        .par_iter()
        .map(|&(x, y)| calibrate(&arcs[x], &objects[x], &arcs[y], &objects[y]))
        .collect::<Result<_>>()?;
    checks.extend(calibration);

    // Fan arcs {i, n+2} give the initial cluster; flipping {i, n+2} gives {i-1, i+1}.
    let matrix = quiver_to_matrix(model.algebra.quiver())?;
    let seed = Seed::initial(matrix.clone());
    for i in 1..=n {
        let fan = Diagonal::new(n, i, n + 2)?;
        let flipped = Diagonal::new(n, i - 1, i + 1)?;
        let fan_value = &values[arcs.binary_search(&fan).expect("fan arc")];
        let flip_value = &values[arcs.binary_search(&flipped).expect("flipped arc")];
        let mutated = mutate_seed(&seed, i - 1)?;
        let passed = *fan_value == seed.variables[i - 1] && *flip_value == mutated.variables[i - 1];
        checks.push(Check {
            kind: CheckKind::Flip,
            passed,
            detail: format!(
                "{fan} -> {flipped}: X = {} vs mutation {}",
                flip_value.render_fraction(&names),
                mutated.variables[i - 1].render_fraction(&names)
            ),
        });
    }

    let from_arcs: BTreeSet<LaurentPoly> = values.iter().cloned().collect();
    let expected = n * (n + 3) / 2;
    let cluster_vars = enumerate_cluster_variables(&matrix, 100_000)?;
    let only_arcs = from_arcs.difference(&cluster_vars).count();
    let only_seeds = cluster_vars.difference(&from_arcs).count();
    checks.push(Check {
        kind: CheckKind::Bijection,
        passed: from_arcs == cluster_vars && from_arcs.len() == expected,
        detail: format!(
            "{} distinct arc values, {} cluster variables, expected {expected} (only in arcs: {only_arcs}, only in seeds: {only_seeds})",
            from_arcs.len(),
            cluster_vars.len()
        ),
    });

    Ok(AnReport {
        n,
        arcs: arcs.len(),
        crossing_pairs,
        checked_pairs: pairs.len(),
        cluster_variables: cluster_vars.len(),
        checks,
    })
}

/// Crossing versus `Ext¹`: for two modules, `dim Ext¹(M,N) + dim Ext¹(N,M)` is 1
/// exactly on crossings; against `ΣT_i`, crossing happens iff `(FM)_i != 0`.
fn calibrate(a: &Diagonal, x: &CCObject, b: &Diagonal, y: &CCObject) -> Result<Check> {
    let cross = crossing(a, b);
    let shift_of = |o: &CCObject| o.shifts().iter().position(|&s| s > 0);
    let (passed, what) = match (shift_of(x), shift_of(y)) {
        (None, None) => {
            let e = ext1_dim(x.module(), y.module())? + ext1_dim(y.module(), x.module())?;
            (e == usize::from(cross), format!("ext sum {e}"))
        }
        (Some(i), None) | (None, Some(i)) => {
            let m = if shift_of(x).is_some() { y } else { x };
            let d = m.module().dims()[i];
            (cross == (d >= 1), format!("dim at vertex {} is {d}", i + 1))
        }
        (Some(_), Some(_)) => (!cross, "two shifted projectives".to_string()),
    };
    Ok(Check {
        kind: CheckKind::Calibration,
        passed,
        detail: format!("{a} {b}: crossing {cross}, {what}"),
    })
}
