//! Quivers with relations and their path algebras.
//!
//! Paths are stored in application order: `arrows[0]` is applied first. In the
//! text format a path is written right to left, `b.a` meaning "apply `a`, then
//! `b`", so the stored order is the reverse of the written one.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path as FsPath;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forms::FormMatrix;
use crate::linalg::Matrix;
use crate::modules::Representation;
use crate::{QField, QMatrix, Rational};

/// Default cap on the total size of the path basis.
pub const DEFAULT_BASIS_CAP: usize = 64;
/// Cap on the number of raw paths of a single length considered while reducing.
const RAW_PATH_CAP: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowDef {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<ArrowDef>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Self> {
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::Duplicate(v.clone()));
            }
        }
        let mut defs: Vec<ArrowDef> = Vec::with_capacity(arrows.len());
        for (name, s, t) in arrows {
            if defs.iter().any(|a| a.name == name) || vertices.contains(&name) {
                return Err(Error::Duplicate(name));
            }
            let find = |v: &str| {
                vertices
                    .iter()
                    .position(|x| x == v)
                    .ok_or_else(|| Error::UnknownVertex(v.to_string()))
            };
            let source = find(&s)?;
            let target = find(&t)?;
            defs.push(ArrowDef {
                name,
                source,
                target,
            });
        }
        Ok(Quiver {
            vertices,
            arrows: defs,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[ArrowDef] {
        &self.arrows
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Number of arrows `i -> j`.
    pub fn arrow_count(&self, i: usize, j: usize) -> usize {
        self.arrows
            .iter()
            .filter(|a| a.source == i && a.target == j)
            .count()
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowDef {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }
}

/// A path in the quiver; the trivial path at a vertex has no arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// The path `arrow ∘ self`.
    pub fn then(&self, arrow: usize, q: &Quiver) -> Option<Path> {
        let a = &q.arrows[arrow];
        if a.source != self.target {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.push(arrow);
        Some(Path {
            source: self.source,
            target: a.target,
            arrows,
        })
    }

    /// `outer ∘ self`, both composable.
    fn followed_by(&self, outer: &Path) -> Path {
        debug_assert_eq!(self.target, outer.source);
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&outer.arrows);
        Path {
            source: self.source,
            target: outer.target,
            arrows,
        }
    }

    fn reversed(&self) -> Path {
        Path {
            source: self.target,
            target: self.source,
            arrows: self.arrows.iter().rev().copied().collect(),
        }
    }

    /// Written form, right-most arrow applied first; `e_<v>` for trivial paths.
    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e_{}", q.vertices[self.source]);
        }
        self.arrows
            .iter()
            .rev()
            .map(|&a| q.arrows[a].name.as_str())
            .collect::<Vec<_>>()
            .join(".")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(i64, Path)>,
}

impl Relation {
    pub fn source(&self) -> usize {
        self.terms[0].1.source
    }
    pub fn target(&self) -> usize {
        self.terms[0].1.target
    }
    pub fn degree(&self) -> usize {
        self.terms[0].1.len()
    }

    pub fn display(&self, q: &Quiver) -> String {
        let mut s = String::new();
        for (i, (c, p)) in self.terms.iter().enumerate() {
            let sign = if *c < 0 { "-" } else { "+" };
            if i > 0 {
                let _ = write!(s, " {sign} ");
            } else if *c < 0 {
                s.push('-');
            }
            if c.abs() != 1 {
                let _ = write!(s, "{}*", c.abs());
            }
            s.push_str(&p.display(q));
        }
        s
    }
}

/// A finite-dimensional quiver algebra `kQ/I` with a chosen path basis.
#[derive(Debug)]
pub struct Algebra {
    quiver: Quiver,
    relations: Vec<Relation>,
    basis: Vec<Path>,
    normal_forms: HashMap<Path, Vec<(usize, Rational)>>,
    nilpotency_bound: usize,
    opposite: OnceLock<Arc<Algebra>>,
    form_matrix: OnceLock<FormMatrix>,
}

impl Algebra {
    pub fn new(quiver: Quiver, relations: Vec<Relation>) -> Result<Self> {
        Self::with_cap(quiver, relations, DEFAULT_BASIS_CAP)
    }

    pub fn with_cap(quiver: Quiver, relations: Vec<Relation>, cap: usize) -> Result<Self> {
        for r in &relations {
            validate_relation(r, &quiver)?;
        }
        let (basis, normal_forms, nilpotency_bound) = path_basis(&quiver, &relations, cap)?;
        Ok(Algebra {
            quiver,
            relations,
            basis,
            normal_forms,
            nilpotency_bound,
            opposite: OnceLock::new(),
            form_matrix: OnceLock::new(),
        })
    }

    /// Parses the line-oriented algebra format.
    pub fn parse(text: &str) -> Result<Self> {
        let (quiver, relations) = parse_algebra_text(text)?;
        Self::new(quiver, relations)
    }

    pub fn load(path: impl AsRef<FsPath>) -> Result<Arc<Self>> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            msg: e.to_string(),
        })?;
        Ok(Arc::new(Self::parse(&text)?))
    }

    /// The linear quiver `1 -> 2 -> ... -> n` without relations.
    pub fn linear_a(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("A_n needs n >= 1".into()));
        }
        let vertices = (1..=n).map(|i| i.to_string()).collect();
        let arrows = (1..n)
            .map(|i| (format!("a{i}"), i.to_string(), (i + 1).to_string()))
            .collect();
        Self::new(Quiver::new(vertices, arrows)?, Vec::new())
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn nilpotency_bound(&self) -> usize {
        self.nilpotency_bound
    }

    /// Variable names `x<label>` following the vertex order.
    pub fn variable_names(&self) -> Vec<String> {
        self.quiver.vertices.iter().map(|v| format!("x{v}")).collect()
    }

    /// Coordinates of a path in the basis (empty for paths in the ideal).
    pub fn normal_form(&self, p: &Path) -> Vec<(usize, Rational)> {
        if p.len() >= self.nilpotency_bound {
            return Vec::new();
        }
        self.normal_forms.get(p).cloned().unwrap_or_default()
    }

    /// Whether two algebras have identical presentations.
    pub fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other)
            || (self.quiver == other.quiver && self.relations == other.relations)
    }

    pub fn opposite(&self) -> Arc<Algebra> {
        self.opposite
            .get_or_init(|| {
                let relations = self
                    .relations
                    .iter()
                    .map(|r| Relation {
                        terms: r.terms.iter().map(|(c, p)| (*c, p.reversed())).collect(),
                    })
                    .collect();
                Arc::new(
                    Algebra::with_cap(self.quiver.opposite(), relations, usize::MAX)
                        .expect("opposite of a valid algebra is valid"),
                )
            })
            .clone()
    }

    pub(crate) fn form_cache(&self) -> &OnceLock<FormMatrix> {
        &self.form_matrix
    }

    /// Evaluates a linear combination of paths on a family of arrow matrices.
    pub fn evaluate_paths(
        &self,
        dims: &[usize],
        matrices: &[QMatrix],
        terms: &[(Rational, Path)],
    ) -> QMatrix {
        let (s, t) = match terms.first() {
            Some((_, p)) => (p.source, p.target),
            None => return Matrix::zeros(QField::new(), 0, 0),
        };
        let mut acc = Matrix::zeros(QField::new(), dims[t], dims[s]);
        for (c, p) in terms {
            let m = path_matrix(dims, matrices, p);
            acc = acc.add(&m.scale(c)).expect("homogeneous combination");
        }
        acc
    }
}

/// Matrix of a path acting on a representation.
pub fn path_matrix(dims: &[usize], matrices: &[QMatrix], p: &Path) -> QMatrix {
    let mut m = Matrix::identity(QField::new(), dims[p.source]);
    for &a in &p.arrows {
        m = matrices[a].mul(&m).expect("composable path");
    }
    m
}

fn validate_relation(r: &Relation, q: &Quiver) -> Result<()> {
    let text = r.display(q);
    if r.terms.is_empty() {
        return Err(Error::NonAdmissible(text, "empty relation".into()));
    }
    let (s, t, d) = (r.source(), r.target(), r.degree());
    for (_, p) in &r.terms {
        if p.source != s || p.target != t {
            return Err(Error::NonAdmissible(
                text,
                "terms have different endpoints".into(),
            ));
        }
        if p.len() < 2 {
            return Err(Error::NonAdmissible(
                text,
                "every path must have length at least 2".into(),
            ));
        }
        if p.len() != d {
            return Err(Error::InhomogeneousRelation(text));
        }
    }
    Ok(())
}

type BasisData = (Vec<Path>, HashMap<Path, Vec<(usize, Rational)>>, usize);

/// Path basis computed degree by degree. In each degree the raw paths are
/// reduced modulo the span of `u.r.v` for relations `r`; the lexicographically
/// largest paths are eliminated first so the survivors form the basis.
fn path_basis(q: &Quiver, relations: &[Relation], cap: usize) -> Result<BasisData> {
    let n = q.vertex_count();
    let mut basis: Vec<Path> = Vec::new();
    let mut nf: HashMap<Path, Vec<(usize, Rational)>> = HashMap::new();
    let mut raw: Vec<Vec<Path>> = vec![(0..n).map(Path::trivial).collect()];

    let mut degree = 0;
    loop {
        let paths = &raw[degree];
        if paths.is_empty() {
            return Ok((basis, nf, degree));
        }
        let gens = ideal_generators(relations, &raw, degree);
        let survivors = if gens.is_empty() {
            for p in paths {
                nf.insert(p.clone(), vec![(basis.len(), Rational::one())]);
                basis.push(p.clone());
            }
            paths.len()
        } else {
            reduce_degree(paths, &gens, &mut basis, &mut nf)
        };
        if basis.len() > cap {
            return Err(Error::BasisGrowth { cap });
        }
        if survivors == 0 {
            return Ok((basis, nf, degree));
        }
        let next: Vec<Path> = paths
            .iter()
            .flat_map(|p| (0..q.arrows.len()).filter_map(move |a| p.then(a, q)))
            .collect();
        if next.len() > RAW_PATH_CAP {
            return Err(Error::BasisGrowth { cap });
        }
        raw.push(next);
        degree += 1;
    }
}

fn ideal_generators(relations: &[Relation], raw: &[Vec<Path>], degree: usize) -> Vec<Vec<(i64, Path)>> {
    let mut gens = Vec::new();
    for r in relations {
        let d = r.degree();
        if d > degree {
            continue;
        }
        for before in 0..=degree - d {
            let after = degree - d - before;
            let inner: Vec<&Path> = raw[before].iter().filter(|p| p.target == r.source()).collect();
            let outer: Vec<&Path> = raw[after].iter().filter(|p| p.source == r.target()).collect();
            for v in &inner {
                for u in &outer {
                    gens.push(
                        r.terms
                            .iter()
                            .map(|(c, m)| (*c, v.followed_by(m).followed_by(u)))
                            .collect(),
                    );
                }
            }
        }
    }
    gens
}

/// Returns the number of new basis paths in this degree.
fn reduce_degree(
    paths: &[Path],
    gens: &[Vec<(i64, Path)>],
    basis: &mut Vec<Path>,
    nf: &mut HashMap<Path, Vec<(usize, Rational)>>,
) -> usize {
    let f = QField::new();
    // Column k holds paths[m - 1 - k] so the largest paths become pivots.
    let m = paths.len();
    let col_of: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, m - 1 - i)).collect();
    let mut mat = Matrix::zeros(f, gens.len(), m);
    for (r, g) in gens.iter().enumerate() {
        for (c, p) in g {
            let col = col_of[p];
            mat[(r, col)] = &mat[(r, col)] + Rational::from_integer((*c).into());
        }
    }
    let ech = mat.echelon();
    let free: Vec<usize> = (0..m).filter(|c| !ech.pivots.contains(c)).collect();
    let mut index_of_free = HashMap::new();
    // Record basis paths in increasing path order.
    for &c in free.iter().rev() {
        let p = &paths[m - 1 - c];
        index_of_free.insert(c, basis.len());
        nf.insert(p.clone(), vec![(basis.len(), Rational::one())]);
        basis.push(p.clone());
    }
    for (row, &pc) in ech.pivots.iter().enumerate() {
        let p = &paths[m - 1 - pc];
        let mut combo: Vec<(usize, Rational)> = free
            .iter()
            .filter(|&&fc| !ech.reduced[(row, fc)].is_zero())
            .map(|&fc| (index_of_free[&fc], -ech.reduced[(row, fc)].clone()))
            .collect();
        combo.sort_by_key(|(i, _)| *i);
        nf.insert(p.clone(), combo);
    }
    free.len()
}

// ---------------------------------------------------------------------------
// Text format

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Strips comments and yields `(line number, trimmed content)` for non-empty lines.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn parse_algebra_text(text: &str) -> Result<(Quiver, Vec<Relation>)> {
    #[derive(PartialEq)]
    enum Section {
        None,
        Quiver,
        Relations,
    }
    let mut section = Section::None;
    let mut vertices: Option<Vec<String>> = None;
    let mut arrows = Vec::new();
    let mut rel_lines = Vec::new();
    for (ln, line) in content_lines(text) {
        match line {
            "[quiver]" => {
                section = Section::Quiver;
                continue;
            }
            "[relations]" => {
                section = Section::Relations;
                continue;
            }
            _ => {}
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| parse_err(ln, format!("expected `key: value`, got `{line}`")))?;
        let value = value.trim();
        match (&section, key.trim()) {
            (Section::Quiver, "vertices") => {
                if vertices.is_some() {
                    return Err(parse_err(ln, "duplicate `vertices:` line"));
                }
                vertices = Some(value.split_whitespace().map(String::from).collect());
            }
            (Section::Quiver, "arrow") => {
                let parts: Vec<&str> = value.split_whitespace().collect();
                if parts.len() != 3 {
                    return Err(parse_err(ln, "expected `arrow: name source target`"));
                }
                arrows.push((parts[0].to_string(), parts[1].to_string(), parts[2].to_string()));
            }
            (Section::Relations, "rel") => rel_lines.push((ln, value.to_string())),
            (_, k) => return Err(parse_err(ln, format!("unexpected key `{k}`"))),
        }
    }
    let vertices = vertices.ok_or_else(|| parse_err(0, "missing `vertices:` line"))?;
    if vertices.is_empty() {
        return Err(parse_err(0, "no vertices"));
    }
    let quiver = Quiver::new(vertices, arrows)?;
    let relations = rel_lines
        .iter()
        .map(|(ln, s)| parse_relation(s, &quiver, *ln))
        .collect::<Result<Vec<_>>>()?;
    Ok((quiver, relations))
}

/// Parses `±c*name_k.….name_1 ± …`.
pub fn parse_relation(s: &str, q: &Quiver, line: usize) -> Result<Relation> {
    let mut terms: Vec<(i64, Path)> = Vec::new();
    let mut sign = 1i64;
    let mut rest = s.trim();
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r;
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r;
    }
    loop {
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let term = rest[..end].trim();
        if term.is_empty() {
            return Err(parse_err(line, format!("empty term in `{s}`")));
        }
        let (coef, word) = match term.split_once('*') {
            Some((c, w)) => (
                c.trim()
                    .parse::<i64>()
                    .map_err(|_| parse_err(line, format!("bad coefficient `{c}`")))?,
                w.trim(),
            ),
            None => (1, term),
        };
        let path = parse_path(word, q)?;
        match terms.iter_mut().find(|(_, p)| *p == path) {
            Some(t) => t.0 += sign * coef,
            None => terms.push((sign * coef, path)),
        }
        if end == rest.len() {
            break;
        }
        sign = if rest.as_bytes()[end] == b'-' { -1 } else { 1 };
        rest = &rest[end + 1..];
    }
    terms.retain(|(c, _)| *c != 0);
    Ok(Relation { terms })
}

fn parse_path(word: &str, q: &Quiver) -> Result<Path> {
    let names: Vec<&str> = word.split('.').map(str::trim).collect();
    let mut arrows = Vec::with_capacity(names.len());
    for name in names.iter().rev() {
        arrows.push(
            q.arrow_index(name)
                .ok_or_else(|| Error::UnknownArrow(name.to_string()))?,
        );
    }
    let first = &q.arrows[arrows[0]];
    let mut path = Path {
        source: first.source,
        target: first.target,
        arrows: vec![arrows[0]],
    };
    for &a in &arrows[1..] {
        path = path
            .then(a, q)
            .ok_or_else(|| Error::NonComposable(word.to_string()))?;
    }
    Ok(path)
}

// ---------------------------------------------------------------------------
// Canonical modules

/// The indecomposable projective `P_i`: at vertex `j`, the span of basis paths `i -> j`.
pub fn projective(a: &Arc<Algebra>, i: usize) -> Representation {
    let n = a.vertex_count();
    let mut positions: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut slot = HashMap::new();
    for (bi, p) in a.basis.iter().enumerate() {
        if p.source == i {
            slot.insert(bi, positions[p.target].len());
            positions[p.target].push(bi);
        }
    }
    let dims: Vec<usize> = positions.iter().map(Vec::len).collect();
    let mut matrices = Vec::with_capacity(a.quiver.arrows.len());
    for (ai, arrow) in a.quiver.arrows.iter().enumerate() {
        let mut m = Matrix::zeros(QField::new(), dims[arrow.target], dims[arrow.source]);
        for (col, &bi) in positions[arrow.source].iter().enumerate() {
            let extended = a.basis[bi].then(ai, &a.quiver).expect("composable");
            for (target_bi, c) in a.normal_form(&extended) {
                m[(slot[&target_bi], col)] = c;
            }
        }
        matrices.push(m);
    }
    Representation::new(a.clone(), dims, matrices).expect("projective module is valid")
}

/// The indecomposable injective `I_i`, dual of the projective at `i` over the opposite algebra.
pub fn injective(a: &Arc<Algebra>, i: usize) -> Representation {
    let dual = projective(&a.opposite(), i).dual();
    // Re-home onto `a` itself (the double opposite is structurally equal).
    Representation::new(a.clone(), dual.dims().to_vec(), dual.matrices().to_vec())
        .expect("injective module is valid")
}

/// The simple `S_i`.
pub fn simple(a: &Arc<Algebra>, i: usize) -> Representation {
    let mut dims = vec![0; a.vertex_count()];
    dims[i] = 1;
    Representation::with_zero_maps(a.clone(), dims)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const A4: &str = "\
[quiver]
vertices: 1 2 3 4
arrow: d 2 1
arrow: alpha 2 3
arrow: beta 3 4
arrow: gamma 4 2
[relations]
rel: beta.alpha
rel: gamma.beta
rel: alpha.gamma
";

    const D4: &str = "\
[quiver]
vertices: 0 1 2 3
arrow: a 0 1
arrow: b 0 2
arrow: c 1 3
arrow: d 2 3
arrow: m 3 0
[relations]
rel: c.a - d.b
rel: m.c
rel: m.d
rel: a.m
rel: b.m
";

    fn a4() -> Arc<Algebra> {
        Arc::new(Algebra::parse(A4).unwrap())
    }

    #[test]
    fn a4_basis() {
        let a = a4();
        assert_eq!(a.dimension(), 9);
        let mut shown: Vec<String> = a.basis().iter().map(|p| p.display(a.quiver())).collect();
        shown.sort();
        let mut expected = vec![
            "e_1", "e_2", "e_3", "e_4", "d", "alpha", "beta", "gamma", "d.gamma",
        ];
        expected.sort();
        assert_eq!(shown, expected);
        assert!(a.basis().iter().all(|p| p.len() < a.nilpotency_bound()));
    }

    #[test]
    fn one_vertex_algebra() {
        let a = Arc::new(Algebra::parse("[quiver]\nvertices: v\n").unwrap());
        assert_eq!(a.dimension(), 1);
        assert_eq!(projective(&a, 0).dims(), &[1]);
        assert_eq!(injective(&a, 0).dims(), &[1]);
        assert_eq!(simple(&a, 0).dims(), &[1]);
    }

    #[test]
    fn d4_loads() {
        let a = Arc::new(Algebra::parse(D4).unwrap());
        assert_eq!(a.dimension(), 10);
        let total: usize = (0..4).map(|i| projective(&a, i).total_dim()).sum();
        assert_eq!(total, a.dimension());
    }

    #[test]
    fn a4_projectives_and_injectives() {
        let a = a4();
        let p: Vec<Vec<usize>> = (0..4).map(|i| projective(&a, i).dims().to_vec()).collect();
        assert_eq!(p[0], vec![1, 0, 0, 0]);
        assert_eq!(p[1], vec![1, 1, 1, 0]);
        assert_eq!(p[2], vec![0, 0, 1, 1]);
        assert_eq!(p[3], vec![1, 1, 0, 1]);
        assert_eq!(p.iter().flatten().sum::<usize>(), a.dimension());
        assert_eq!(injective(&a, 0).dims(), &[1, 1, 0, 1]);
        assert_eq!(injective(&a, 3).dims(), &[0, 0, 1, 1]);
    }

    #[test]
    fn simples_are_distinct() {
        let a = a4();
        let dims: Vec<Vec<usize>> = (0..4).map(|i| simple(&a, i).dims().to_vec()).collect();
        #[allow(clippy::needless_range_loop)]
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(dims[i][j], usize::from(i == j));
            }
        }
    }

    #[test]
    fn load_errors() {
        let bad_vertex = "[quiver]\nvertices: 1 2\narrow: a 1 3\n";
        assert_eq!(Algebra::parse(bad_vertex).unwrap_err(), Error::UnknownVertex("3".into()));
        let bad_arrow = "[quiver]\nvertices: 1 2\narrow: a 1 2\n[relations]\nrel: b.a\n";
        assert_eq!(Algebra::parse(bad_arrow).unwrap_err(), Error::UnknownArrow("b".into()));
        let noncomp = "[quiver]\nvertices: 1 2\narrow: a 1 2\narrow: b 1 2\n[relations]\nrel: b.a\n";
        assert!(matches!(Algebra::parse(noncomp), Err(Error::NonComposable(_))));
        let short = "[quiver]\nvertices: 1 2\narrow: a 1 2\n[relations]\nrel: a\n";
        assert!(matches!(Algebra::parse(short), Err(Error::NonAdmissible(..))));
        let loop_free = "[quiver]\nvertices: 1\narrow: x 1 1\n";
        assert!(matches!(Algebra::parse(loop_free), Err(Error::BasisGrowth { .. })));
        let mixed = "[quiver]\nvertices: 1\narrow: x 1 1\n[relations]\nrel: x.x - x.x.x\n";
        assert!(matches!(Algebra::parse(mixed), Err(Error::InhomogeneousRelation(_))));
        assert!(matches!(Algebra::parse("[quiver]\narrow: a 1 2\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn loop_with_nilpotent_relation() {
        let text = "[quiver]\nvertices: 1\narrow: x 1 1\n[relations]\nrel: x.x.x\n";
        let a = Algebra::parse(text).unwrap();
        assert_eq!(a.dimension(), 3);
        assert_eq!(a.nilpotency_bound(), 3);
    }

    #[test]
    fn relations_vanish_on_projectives() {
        for text in [A4, D4] {
            let a = Arc::new(Algebra::parse(text).unwrap());
            for i in 0..a.vertex_count() {
                // Representation::new checks every relation.
                let p = projective(&a, i);
                assert!(Representation::new(a.clone(), p.dims().to_vec(), p.matrices().to_vec()).is_ok());
            }
        }
    }

    #[test]
    fn linear_a() {
        let a = Arc::new(Algebra::linear_a(4).unwrap());
        assert_eq!(a.dimension(), 10);
        assert_eq!(projective(&a, 1).dims(), &[0, 1, 1, 1]);
        assert_eq!(injective(&a, 1).dims(), &[1, 1, 0, 0]);
    }
}
