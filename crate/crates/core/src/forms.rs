//! Euler form, its antisymmetrization, index and coindex.
//!
//! Every quantity here is computed along two independent routes (minimal
//! (co)presentations versus Hom/Ext¹ against simples) and the results are
//! compared; a disagreement is reported as [`Error::Consistency`].

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::modules::{
    ext1_dim, hom_dim, min_inj_copresentation, min_proj_presentation, K0ProjClass, Representation,
};
use crate::quiver::{simple, Algebra};

/// Integer matrix with entry `(i, j) = <S_i, S_j>_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl FormMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("form matrix must be square".into()));
        }
        let m = FormMatrix {
            n,
            entries: rows.concat(),
        };
        if !m.is_skew_symmetric() {
            return Err(Error::Consistency("form matrix is not skew-symmetric".into()));
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n.max(1)).map(<[i64]>::to_vec).collect()
    }

    pub fn is_skew_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == -self.get(j, i)))
    }

    /// The vector `(<S_i, v>_a)_i`.
    pub fn apply(&self, v: &[usize]) -> Vec<i64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j] as i64).sum())
            .collect()
    }

    /// `v^T F w`.
    pub fn value(&self, v: &[usize], w: &[usize]) -> i64 {
        let fw = self.apply(w);
        v.iter().zip(fw).map(|(&a, b)| a as i64 * b).sum()
    }
}

impl fmt::Display for FormMatrix {
    /// One row per line, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `<m, n> = dim Hom(m, n) - dim Ext¹(m, n)`.
pub fn euler_form(m: &Representation, n: &Representation) -> Result<i64> {
    Ok(hom_dim(m, n)? as i64 - ext1_dim(m, n)? as i64)
}

/// The antisymmetrized form on simples, cached per algebra.
pub fn antisym_form_matrix(a: &Arc<Algebra>) -> Result<FormMatrix> {
    if let Some(f) = a.form_cache().get() {
        return Ok(f.clone());
    }
    let f = compute_form_matrix(a)?;
    let _ = a.form_cache().set(f.clone());
    Ok(f)
}

fn compute_form_matrix(a: &Arc<Algebra>) -> Result<FormMatrix> {
    let n = a.vertex_count();
    let simples: Vec<Representation> = (0..n).map(|i| simple(a, i)).collect();
    let mut entries = vec![0i64; n * n];
    for (i, s) in simples.iter().enumerate() {
        // [P0:P_j] - [P1:P_j] - [I0:I_j] + [I1:I_j]
        let (p0, p1) = min_proj_presentation(s);
        let (i0, i1) = min_inj_copresentation(s);
        for j in 0..n {
            entries[i * n + j] = p0[j] - p1[j] - i0[j] + i1[j];
        }
    }
    let m = FormMatrix { n, entries };
    if !m.is_skew_symmetric() {
        return Err(Error::Consistency(format!(
            "antisymmetric form from presentations is not skew-symmetric:\n{m}"
        )));
    }
    for i in 0..n {
        for j in 0..n {
            let direct = euler_form(&simples[i], &simples[j])? - euler_form(&simples[j], &simples[i])?;
            if direct != m.get(i, j) {
                return Err(Error::Consistency(format!(
                    "<S_{i}, S_{j}>_a: presentations give {}, Hom/Ext give {direct}",
                    m.get(i, j)
                )));
            }
        }
    }
    Ok(m)
}

/// `<v, w>_a` on classes in `K_0(mod B)`.
pub fn form_a_value(a: &Arc<Algebra>, v: &[usize], w: &[usize]) -> Result<i64> {
    let n = a.vertex_count();
    if v.len() != n || w.len() != n {
        return Err(Error::Dimension(format!(
            "dimension vectors of length {} and {} for {n} vertices",
            v.len(),
            w.len()
        )));
    }
    Ok(antisym_form_matrix(a)?.value(v, w))
}

/// `(<S_i, m>_a)_i` computed directly from the Euler form.
pub fn antisym_against_simples(m: &Representation) -> Result<Vec<i64>> {
    let a = m.algebra();
    (0..a.vertex_count())
        .map(|i| {
            let s = simple(a, i);
            Ok(euler_form(&s, m)? - euler_form(m, &s)?)
        })
        .collect()
}

/// `ind m = [P0] - [P1]`, checked against `sum_i <m, S_i> [P_i]`.
pub fn index(m: &Representation) -> Result<K0ProjClass> {
    let (p0, p1) = min_proj_presentation(m);
    let from_presentation = p0.sub(&p1);
    let a = m.algebra();
    let from_forms = K0ProjClass(
        (0..a.vertex_count())
            .map(|i| euler_form(m, &simple(a, i)))
            .collect::<Result<_>>()?,
    );
    if from_presentation != from_forms {
        return Err(Error::Consistency(format!(
            "index: presentation gives {:?}, Euler form gives {:?}",
            from_presentation.0, from_forms.0
        )));
    }
    Ok(from_presentation)
}

/// `coind m = sum_i <S_i, m> [P_i]`, checked against `[I0] - [I1]` with `I_j` read as `P_j`.
pub fn coindex(m: &Representation) -> Result<K0ProjClass> {
    let a = m.algebra();
    let from_forms = K0ProjClass(
        (0..a.vertex_count())
            .map(|i| euler_form(&simple(a, i), m))
            .collect::<Result<_>>()?,
    );
    let (i0, i1) = min_inj_copresentation(m);
    let from_copresentation = i0.sub(&i1);
    if from_copresentation != from_forms {
        return Err(Error::Consistency(format!(
            "coindex: copresentation gives {:?}, Euler form gives {:?}",
            from_copresentation.0, from_forms.0
        )));
    }
    Ok(from_forms)
}
