//! Finite-dimensional modules over a quiver algebra, as representations.
//!
//! An arrow `a: i -> j` acts by a `dims[j] x dims[i]` matrix, and paths act by
//! composing these right to left. Hom spaces are solved exactly over the
//! rationals; Ext¹ comes from a single syzygy.

use std::fmt;
use std::ops::Deref;
use std::path::Path as FsPath;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::quiver::{content_lines, path_matrix, projective, Algebra, Path};
use crate::{QField, QMatrix, Rational};

/// Class in `K_0(mod B)`: one nonnegative entry per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVector(pub Vec<usize>);

impl Deref for DimVector {
    type Target = [usize];
    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Class in `K_0(proj B)` on the basis `[P_1], ..., [P_n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct K0ProjClass(pub Vec<i64>);

impl Deref for K0ProjClass {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl K0ProjClass {
    pub fn zero(n: usize) -> Self {
        K0ProjClass(vec![0; n])
    }

    pub fn from_counts(counts: &[usize]) -> Self {
        K0ProjClass(counts.iter().map(|&c| c as i64).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        K0ProjClass(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        K0ProjClass(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// E.g. `[P_2] - [P_3]`, `2[P_1]`, or `0`.
    pub fn render(&self, symbol: &str, labels: &[String]) -> String {
        let mut out = String::new();
        for (c, label) in self.0.iter().zip(labels) {
            if *c == 0 {
                continue;
            }
            let sign = if *c < 0 { "-" } else { "+" };
            if out.is_empty() {
                if *c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if c.abs() != 1 {
                out.push_str(&c.abs().to_string());
            }
            out.push_str(&format!("[{symbol}_{label}]"));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// A module morphism: one matrix per vertex.
pub type Morphism = Vec<QMatrix>;

#[derive(Clone, Debug)]
pub struct Representation {
    algebra: Arc<Algebra>,
    dims: Vec<usize>,
    matrices: Vec<QMatrix>,
}

impl Representation {
    /// Validates shapes and that every relation acts as zero.
    pub fn new(algebra: Arc<Algebra>, dims: Vec<usize>, matrices: Vec<QMatrix>) -> Result<Self> {
        let q = algebra.quiver();
        if dims.len() != q.vertex_count() {
            return Err(Error::InvalidModule(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                q.vertex_count()
            )));
        }
        if matrices.len() != q.arrows().len() {
            return Err(Error::InvalidModule(format!(
                "{} matrices for {} arrows",
                matrices.len(),
                q.arrows().len()
            )));
        }
        for (m, a) in matrices.iter().zip(q.arrows()) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::InvalidModule(format!(
                    "matrix for arrow `{}` is {}x{}, expected {}x{}",
                    a.name,
                    m.rows(),
                    m.cols(),
                    dims[a.target],
                    dims[a.source]
                )));
            }
        }
        for r in algebra.relations() {
            let terms: Vec<(Rational, Path)> = r
                .terms
                .iter()
                .map(|(c, p)| (Rational::from_integer(BigInt::from(*c)), p.clone()))
                .collect();
            if !algebra.evaluate_paths(&dims, &matrices, &terms).is_zero() {
                return Err(Error::InvalidModule(format!(
                    "relation `{}` does not vanish",
                    r.display(q)
                )));
            }
        }
        Ok(Representation {
            algebra,
            dims,
            matrices,
        })
    }

    pub fn with_zero_maps(algebra: Arc<Algebra>, dims: Vec<usize>) -> Self {
        let matrices = algebra
            .quiver()
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(QField::new(), dims[a.target], dims[a.source]))
            .collect();
        Representation {
            algebra,
            dims,
            matrices,
        }
    }

    pub fn zero(algebra: Arc<Algebra>) -> Self {
        let n = algebra.vertex_count();
        Self::with_zero_maps(algebra, vec![0; n])
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_vector(&self) -> DimVector {
        DimVector(self.dims.clone())
    }

    pub fn matrices(&self) -> &[QMatrix] {
        &self.matrices
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn path_matrix(&self, p: &Path) -> QMatrix {
        path_matrix(&self.dims, &self.matrices, p)
    }

    /// True when every arrow matrix has integer entries.
    pub fn is_integral(&self) -> bool {
        self.matrices
            .iter()
            .all(|m| m.entries().iter().all(|v| v.is_integer()))
    }

    fn check_same_algebra(&self, other: &Self) -> Result<()> {
        if self.algebra.same_as(&other.algebra) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.check_same_algebra(other)?;
        Ok(Representation {
            algebra: self.algebra.clone(),
            dims: self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect(),
            matrices: self
                .matrices
                .iter()
                .zip(&other.matrices)
                .map(|(a, b)| a.block_diag(b))
                .collect(),
        })
    }

    /// Vector-space dual, a module over the opposite algebra.
    pub fn dual(&self) -> Self {
        Representation {
            algebra: self.algebra.opposite(),
            dims: self.dims.clone(),
            matrices: self.matrices.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Moves the module onto a structurally identical algebra handle.
    pub fn rehome(&self, algebra: &Arc<Algebra>) -> Result<Self> {
        if !self.algebra.same_as(algebra) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Representation {
            algebra: algebra.clone(),
            dims: self.dims.clone(),
            matrices: self.matrices.clone(),
        })
    }

    /// The isomorphic module `g_j M(a) g_i^{-1}` for invertible `g_v`.
    pub fn change_basis(&self, g: &[QMatrix]) -> Result<Self> {
        let f = QField::new();
        let mut inverses = Vec::with_capacity(g.len());
        for (v, gv) in g.iter().enumerate() {
            let id = Matrix::identity(f, self.dims[v]);
            let inv = gv
                .solve(&id)?
                .filter(|_| gv.rank() == self.dims[v])
                .ok_or_else(|| Error::InvalidArgument("base change is not invertible".into()))?;
            inverses.push(inv);
        }
        let matrices = self
            .algebra
            .quiver()
            .arrows()
            .iter()
            .zip(&self.matrices)
            .map(|(a, m)| g[a.target].mul(m)?.mul(&inverses[a.source]))
            .collect::<Result<Vec<_>>>()?;
        Representation::new(self.algebra.clone(), self.dims.clone(), matrices)
    }

    /// Parses the module format against an already loaded algebra.
    pub fn parse(text: &str, algebra: Arc<Algebra>) -> Result<Self> {
        let parsed = parse_module_text(text)?;
        parsed.build(algebra)
    }

    /// Loads a module file together with the algebra it names (resolved relative to the file).
    pub fn load(path: impl AsRef<FsPath>) -> Result<Self> {
        let path = path.as_ref();
        let text = read(path)?;
        let parsed = parse_module_text(&text)?;
        let alg_ref = parsed.algebra.clone().ok_or_else(|| Error::Parse {
            line: 0,
            msg: "module file has no `algebra:` line".into(),
        })?;
        let alg_path = path.parent().unwrap_or(FsPath::new(".")).join(alg_ref);
        parsed.build(Algebra::load(alg_path)?)
    }

    /// Loads a module file, interpreting it over the given algebra.
    pub fn load_with(path: impl AsRef<FsPath>, algebra: Arc<Algebra>) -> Result<Self> {
        Self::parse(&read(path.as_ref())?, algebra)
    }
}

fn read(path: &FsPath) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

struct ParsedModule {
    algebra: Option<String>,
    dims: Vec<usize>,
    dims_line: usize,
    matrices: Vec<(usize, String, Vec<Vec<BigInt>>)>,
}

impl ParsedModule {
    fn build(self, algebra: Arc<Algebra>) -> Result<Representation> {
        let q = algebra.quiver();
        if self.dims.len() != q.vertex_count() {
            return Err(Error::Parse {
                line: self.dims_line,
                msg: format!(
                    "{} dimensions given for {} vertices",
                    self.dims.len(),
                    q.vertex_count()
                ),
            });
        }
        let f = QField::new();
        let mut mats: Vec<Option<QMatrix>> = vec![None; q.arrows().len()];
        for (line, name, rows) in self.matrices {
            let ai = q.arrow_index(&name).ok_or_else(|| Error::UnknownArrow(name.clone()))?;
            let a = &q.arrows()[ai];
            let (r, c) = (self.dims[a.target], self.dims[a.source]);
            if r == 0 || c == 0 {
                return Err(Error::Parse {
                    line,
                    msg: format!("matrix given for arrow `{name}` between zero-dimensional spaces"),
                });
            }
            if mats[ai].is_some() {
                return Err(Error::Parse {
                    line,
                    msg: format!("duplicate matrix for `{name}`"),
                });
            }
            if rows.len() != r || rows.iter().any(|row| row.len() != c) {
                return Err(Error::Parse {
                    line,
                    msg: format!("matrix for `{name}` must be {r}x{c}"),
                });
            }
            let data = rows.into_iter().flatten().map(Rational::from_integer).collect();
            mats[ai] = Some(Matrix::from_vec(f, r, c, data)?);
        }
        let matrices = mats
            .into_iter()
            .zip(q.arrows())
            .map(|(m, a)| {
                m.unwrap_or_else(|| Matrix::zeros(f, self.dims[a.target], self.dims[a.source]))
            })
            .collect();
        Representation::new(algebra, self.dims, matrices)
    }
}

fn parse_module_text(text: &str) -> Result<ParsedModule> {
    let err = |line: usize, msg: String| Error::Parse { line, msg };
    let mut in_section = false;
    let mut algebra = None;
    let mut dims = None;
    let mut dims_line = 0;
    let mut matrices = Vec::new();
    for (ln, line) in content_lines(text) {
        if line == "[module]" {
            in_section = true;
            continue;
        }
        if !in_section {
            return Err(err(ln, "content before `[module]`".into()));
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| err(ln, format!("expected `key: value`, got `{line}`")))?;
        let key = key.trim();
        let value = value.trim();
        if key == "algebra" {
            algebra = Some(value.to_string());
        } else if key == "dims" {
            let parsed = value
                .split_whitespace()
                .map(|d| d.parse::<usize>().map_err(|_| err(ln, format!("bad dimension `{d}`"))))
                .collect::<Result<Vec<_>>>()?;
            dims = Some(parsed);
            dims_line = ln;
        } else if let Some(name) = key.strip_prefix("matrix ") {
            matrices.push((ln, name.trim().to_string(), parse_matrix_literal(value, ln)?));
        } else {
            return Err(err(ln, format!("unexpected key `{key}`")));
        }
    }
    let dims = dims.ok_or_else(|| err(0, "missing `dims:` line".into()))?;
    Ok(ParsedModule {
        algebra,
        dims,
        dims_line,
        matrices,
    })
}

/// `[[1,0],[0,1]]`; entries must be integers.
fn parse_matrix_literal(s: &str, line: usize) -> Result<Vec<Vec<BigInt>>> {
    let err = |msg: String| Error::Parse { line, msg };
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = s
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| err(format!("bad matrix literal `{s}`")))?;
    let mut rows = Vec::new();
    for chunk in inner.split("],") {
        let chunk = chunk.trim_start_matches('[').trim_end_matches(']');
        let row = chunk
            .split(',')
            .map(|v| {
                v.parse::<BigInt>()
                    .map_err(|_| err(format!("matrix entry `{v}` is not an integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Ok(rows)
}

// ---------------------------------------------------------------------------
// Homological algebra

/// A basis of `Hom(m, n)`.
pub fn hom_space(m: &Representation, n: &Representation) -> Result<Vec<Morphism>> {
    m.check_same_algebra(n)?;
    let q = m.algebra.quiver();
    let nv = q.vertex_count();
    let mut offset = vec![0usize; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    }
    let unknowns = offset[nv];
    let var = |v: usize, r: usize, c: usize| offset[v] + r * m.dims[v] + c;
    let f = QField::new();

    let mut rows: Vec<Vec<(usize, Rational)>> = Vec::new();
    for (ai, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let ma = &m.matrices[ai];
        let na = &n.matrices[ai];
        // (phi_t M(a) - N(a) phi_s)[r][c] = 0
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                let mut eq = Vec::new();
                for k in 0..m.dims[t] {
                    if !ma[(k, c)].is_zero() {
                        eq.push((var(t, r, k), ma[(k, c)].clone()));
                    }
                }
                for k in 0..n.dims[s] {
                    if !na[(r, k)].is_zero() {
                        eq.push((var(s, k, c), -na[(r, k)].clone()));
                    }
                }
                if !eq.is_empty() {
                    rows.push(eq);
                }
            }
        }
    }
    let mut system = Matrix::zeros(f, rows.len(), unknowns);
    for (i, eq) in rows.into_iter().enumerate() {
        for (j, c) in eq {
            system[(i, j)] = &system[(i, j)] + c;
        }
    }
    let kernel = system.kernel_basis();
    Ok((0..kernel.cols())
        .map(|k| {
            (0..nv)
                .map(|v| {
                    let data = (0..n.dims[v] * m.dims[v])
                        .map(|i| kernel[(offset[v] + i, k)].clone())
                        .collect();
                    Matrix::from_vec(f, n.dims[v], m.dims[v], data).expect("shape")
                })
                .collect()
        })
        .collect())
}

/// `dim Hom(m, n)`.
pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    Ok(hom_space(m, n)?.len())
}

pub fn is_morphism(f: &Morphism, m: &Representation, n: &Representation) -> bool {
    m.algebra
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .all(|(ai, a)| {
            let lhs = f[a.target].mul(&m.matrices[ai]);
            let rhs = n.matrices[ai].mul(&f[a.source]);
            matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
        })
}

/// Vectors spanning a complement of the radical at each vertex.
fn top_generators(m: &Representation) -> Vec<Vec<Vec<Rational>>> {
    let q = m.algebra.quiver();
    let f = QField::new();
    (0..q.vertex_count())
        .map(|v| {
            let d = m.dims[v];
            let mut cols: Vec<Vec<Rational>> = Vec::new();
            for (ai, a) in q.arrows().iter().enumerate() {
                if a.target == v {
                    cols.extend(m.matrices[ai].columns());
                }
            }
            let rad_cols = cols.len();
            for k in 0..d {
                let mut e = vec![Rational::zero(); d];
                e[k] = Rational::one();
                cols.push(e);
            }
            let all = Matrix::from_columns(f, d, &cols);
            all.independent_columns()
                .into_iter()
                .filter(|&c| c >= rad_cols)
                .map(|c| cols[c].clone())
                .collect()
        })
        .collect()
}

/// A projective cover `P0 -> m`.
pub struct Cover {
    /// Multiplicity of each `P_i` in `P0`.
    pub multiplicities: Vec<usize>,
    pub module: Representation,
    pub map: Morphism,
}

/// Minimal projective cover, obtained by covering the top of `m`.
pub fn projective_cover(m: &Representation) -> Cover {
    let a = &m.algebra;
    let nv = a.vertex_count();
    let f = QField::new();
    let gens = top_generators(m);
    let multiplicities: Vec<usize> = gens.iter().map(Vec::len).collect();

    let mut module = Representation::zero(a.clone());
    let mut columns: Vec<Vec<Vec<Rational>>> = vec![Vec::new(); nv];
    for (v, gs) in gens.iter().enumerate() {
        if gs.is_empty() {
            continue;
        }
        let p = projective(a, v);
        let paths: Vec<&Path> = a.basis().iter().filter(|b| b.source == v).collect();
        for g in gs {
            module = module.direct_sum(&p).expect("same algebra");
            let gm = Matrix::from_columns(f, m.dims[v], std::slice::from_ref(g));
            for path in &paths {
                let image = m.path_matrix(path).mul(&gm).expect("shape");
                columns[path.target].push(image.column(0));
            }
        }
    }
    let map = (0..nv)
        .map(|w| Matrix::from_columns(f, m.dims[w], &columns[w]))
        .collect();
    Cover {
        multiplicities,
        module,
        map,
    }
}

/// Kernel of a morphism `f: x -> y`, with its inclusion into `x`.
pub fn kernel(f: &Morphism, x: &Representation) -> (Representation, Morphism) {
    let q = x.algebra.quiver();
    let inclusion: Morphism = f.iter().map(Matrix::kernel_basis).collect();
    let dims: Vec<usize> = inclusion.iter().map(Matrix::cols).collect();
    let matrices = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let image = x.matrices[ai].mul(&inclusion[a.source]).expect("shape");
            inclusion[a.target]
                .solve(&image)
                .expect("shape")
                .expect("kernel is a submodule")
        })
        .collect();
    let k = Representation {
        algebra: x.algebra.clone(),
        dims,
        matrices,
    };
    (k, inclusion)
}

/// First syzygy `Ω m` with its minimal cover data.
pub struct Syzygy {
    pub cover: K0ProjClass,
    pub cover_module: Representation,
    pub kernel: Representation,
    pub inclusion: Morphism,
}

pub fn syzygy(m: &Representation) -> Syzygy {
    let cover = projective_cover(m);
    let (kernel, inclusion) = kernel(&cover.map, &cover.module);
    Syzygy {
        cover: K0ProjClass::from_counts(&cover.multiplicities),
        cover_module: cover.module,
        kernel,
        inclusion,
    }
}

/// `dim Ext¹(m, n)` as the cokernel of `Hom(P0, n) -> Hom(Ω m, n)`.
pub fn ext1_dim(m: &Representation, n: &Representation) -> Result<usize> {
    m.check_same_algebra(n)?;
    let syz = syzygy(m);
    let hom_omega = hom_dim(&syz.kernel, n)?;
    if hom_omega == 0 {
        return Ok(0);
    }
    let restricted: Vec<Vec<Rational>> = hom_space(&syz.cover_module, n)?
        .iter()
        .map(|phi| {
            phi.iter()
                .zip(&syz.inclusion)
                .flat_map(|(p, i)| p.mul(i).expect("shape").entries().to_vec())
                .collect()
        })
        .collect();
    let len: usize = (0..n.dims.len()).map(|v| n.dims[v] * syz.kernel.dims[v]).sum();
    let rank = Matrix::from_columns(QField::new(), len, &restricted).rank();
    Ok(hom_omega - rank)
}

/// Multiplicities of the projectives in a minimal presentation `P1 -> P0 -> m -> 0`.
pub fn min_proj_presentation(m: &Representation) -> (K0ProjClass, K0ProjClass) {
    let first = syzygy(m);
    let second = projective_cover(&first.kernel);
    (first.cover, K0ProjClass::from_counts(&second.multiplicities))
}

/// Multiplicities of the injectives in a minimal copresentation `0 -> m -> I0 -> I1`.
pub fn min_inj_copresentation(m: &Representation) -> (K0ProjClass, K0ProjClass) {
    min_proj_presentation(&m.dual())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{injective, simple};

    const A4: &str = "[quiver]\nvertices: 1 2 3 4\narrow: d 2 1\narrow: alpha 2 3\narrow: beta 3 4\narrow: gamma 4 2\n[relations]\nrel: beta.alpha\nrel: gamma.beta\nrel: alpha.gamma\n";
    const A4_M: &str = "[module]\nalgebra: a4.alg\ndims: 1 1 0 0\nmatrix d: [[1]]\n";

    fn a4() -> Arc<Algebra> {
        Arc::new(Algebra::parse(A4).unwrap())
    }

    fn a2() -> Arc<Algebra> {
        Arc::new(Algebra::linear_a(2).unwrap())
    }

    #[test]
    fn module_parse_errors() {
        let a = a4();
        let wrong_shape = "[module]\ndims: 1 1 0 0\nmatrix d: [[1,0]]\n";
        assert!(matches!(Representation::parse(wrong_shape, a.clone()), Err(Error::Parse { .. })));
        let zero_space = "[module]\ndims: 1 1 0 0\nmatrix alpha: [[1]]\n";
        assert!(matches!(Representation::parse(zero_space, a.clone()), Err(Error::Parse { .. })));
        let fractional = "[module]\ndims: 1 1 0 0\nmatrix d: [[1/2]]\n";
        assert!(matches!(Representation::parse(fractional, a.clone()), Err(Error::Parse { .. })));
        let unknown = "[module]\ndims: 1 1 0 0\nmatrix q: [[1]]\n";
        assert_eq!(Representation::parse(unknown, a.clone()).unwrap_err(), Error::UnknownArrow("q".into()));
        // beta.alpha must vanish
        let bad_rel = "[module]\ndims: 0 1 1 1\nmatrix alpha: [[1]]\nmatrix beta: [[1]]\n";
        assert!(matches!(Representation::parse(bad_rel, a), Err(Error::InvalidModule(_))));
    }

    #[test]
    fn hom_examples() {
        let a = a4();
        let m = Representation::parse(A4_M, a.clone()).unwrap();
        assert_eq!(hom_dim(&m, &simple(&a, 1)).unwrap(), 1);
        assert!(hom_dim(&m, &m).unwrap() >= 1);
        for i in 0..4 {
            assert_eq!(hom_dim(&projective(&a, i), &m).unwrap(), m.dims()[i]);
        }
    }

    #[test]
    fn syzygy_examples() {
        let a = a4();
        let s = syzygy(&projective(&a, 1));
        assert_eq!(s.cover.0, vec![0, 1, 0, 0]);
        assert!(s.kernel.is_zero());

        let s2 = syzygy(&simple(&a, 1));
        assert_eq!(s2.cover.0, vec![0, 1, 0, 0]);
        assert_eq!(s2.kernel.dims(), &[1, 0, 1, 0]);
        assert!(s2.kernel.matrices().iter().all(Matrix::is_zero));

        let z = syzygy(&Representation::zero(a.clone()));
        assert_eq!(z.cover.0, vec![0; 4]);
        assert!(z.kernel.is_zero());
    }

    #[test]
    fn ext_examples() {
        let a = a4();
        assert_eq!(ext1_dim(&simple(&a, 1), &simple(&a, 0)).unwrap(), 1);
        let m = Representation::parse(A4_M, a.clone()).unwrap();
        for i in 0..4 {
            assert_eq!(ext1_dim(&projective(&a, i), &m).unwrap(), 0);
        }
        let b = a2();
        assert_eq!(ext1_dim(&simple(&b, 0), &simple(&b, 1)).unwrap(), 1);
        assert_eq!(ext1_dim(&simple(&b, 1), &simple(&b, 0)).unwrap(), 0);
    }

    #[test]
    fn presentations() {
        let a = a4();
        let (p0, p1) = min_proj_presentation(&projective(&a, 2));
        assert_eq!((p0.0, p1.0), (vec![0, 0, 1, 0], vec![0; 4]));
        let (p0, p1) = min_proj_presentation(&simple(&a, 2));
        assert_eq!((p0.0, p1.0), (vec![0, 0, 1, 0], vec![0, 0, 0, 1]));
        let (p0, p1) = min_proj_presentation(&simple(&a, 3));
        assert_eq!((p0.0, p1.0), (vec![0, 0, 0, 1], vec![0, 1, 0, 0]));

        let (i0, i1) = min_inj_copresentation(&injective(&a, 1));
        assert_eq!((i0.0, i1.0), (vec![0, 1, 0, 0], vec![0; 4]));
        let (i0, i1) = min_inj_copresentation(&simple(&a, 0));
        assert_eq!((i0.0, i1.0), (vec![1, 0, 0, 0], vec![0, 1, 0, 0]));
        let (i0, i1) = min_inj_copresentation(&simple(&a, 2));
        assert_eq!((i0.0, i1.0), (vec![0, 0, 1, 0], vec![0, 1, 0, 0]));
    }

    #[test]
    fn direct_sum_examples() {
        let a = a4();
        let m = Representation::parse(A4_M, a.clone()).unwrap();
        let z = Representation::zero(a.clone());
        let mz = m.direct_sum(&z).unwrap();
        assert_eq!(mz.dims(), m.dims());
        assert_eq!(mz.matrices(), m.matrices());
        let s = simple(&a, 2);
        let ms = m.direct_sum(&s).unwrap();
        assert_eq!(ms.dims(), &[1, 1, 1, 0]);
        for i in 0..4 {
            let p = projective(&a, i);
            assert_eq!(
                hom_dim(&p, &ms).unwrap(),
                hom_dim(&p, &m).unwrap() + hom_dim(&p, &s).unwrap()
            );
        }
        let other = a2();
        assert_eq!(m.direct_sum(&simple(&other, 0)).unwrap_err(), Error::AlgebraMismatch);
        assert_eq!(hom_dim(&m, &simple(&other, 0)).unwrap_err(), Error::AlgebraMismatch);
    }

    #[test]
    fn syzygy_dimension_exactness() {
        let a = a4();
        let mut mods: Vec<Representation> = (0..4)
            .flat_map(|i| [simple(&a, i), projective(&a, i), injective(&a, i)])
            .collect();
        mods.push(Representation::parse(A4_M, a.clone()).unwrap());
        for m in &mods {
            let s = syzygy(m);
            for v in 0..4 {
                assert_eq!(s.kernel.dims()[v] + m.dims()[v], s.cover_module.dims()[v]);
            }
        }
    }

    #[test]
    fn duality_of_hom() {
        let a = a4();
        let mods: Vec<Representation> = (0..4)
            .flat_map(|i| [simple(&a, i), projective(&a, i), injective(&a, i)])
            .collect();
        for m in &mods {
            for n in &mods {
                assert_eq!(hom_dim(m, n).unwrap(), hom_dim(&n.dual(), &m.dual()).unwrap());
            }
        }
    }

    #[test]
    fn k0_render() {
        let labels: Vec<String> = ["1", "2", "3", "4"].iter().map(|s| s.to_string()).collect();
        assert_eq!(K0ProjClass(vec![0, 1, -1, 0]).render("P", &labels), "[P_2] - [P_3]");
        assert_eq!(K0ProjClass(vec![-1, 2, 0, 0]).render("P", &labels), "-[P_1] + 2[P_2]");
        assert_eq!(K0ProjClass(vec![0; 4]).render("P", &labels), "0");
    }
}
