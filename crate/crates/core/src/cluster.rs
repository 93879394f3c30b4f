//! Coefficient-free seed mutation and finite-type cluster variable enumeration.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::path::Path as FsPath;

use crate::error::{Error, Result};
use crate::quiver::{content_lines, Quiver};
use crate::LaurentPoly;

/// Skew-symmetric integer exchange matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExchangeMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl ExchangeMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidArgument("exchange matrix must be nonempty".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("exchange matrix must be square".into()));
        }
        let m = ExchangeMatrix {
            n,
            entries: rows.concat(),
        };
        for i in 0..n {
            for j in 0..n {
                if m.get(i, j) != -m.get(j, i) {
                    return Err(Error::InvalidArgument(format!(
                        "exchange matrix is not skew-symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
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
        self.entries.chunks(self.n).map(<[i64]>::to_vec).collect()
    }

    pub fn negated(&self) -> Self {
        ExchangeMatrix {
            n: self.n,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }

    /// Reads `n` followed by `n` rows of integers; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut tokens = Vec::new();
        for (line, content) in content_lines(text) {
            for tok in content.split_whitespace() {
                let v: i64 = tok.parse().map_err(|_| Error::Parse {
                    line,
                    msg: format!("expected an integer, found `{tok}`"),
                })?;
                tokens.push((line, v));
            }
        }
        let Some(&(line, n)) = tokens.first() else {
            return Err(Error::Parse {
                line: 1,
                msg: "empty matrix file".into(),
            });
        };
        if n <= 0 {
            return Err(Error::Parse {
                line,
                msg: format!("matrix size must be positive, found {n}"),
            });
        }
        let n = n as usize;
        let body = &tokens[1..];
        if body.len() != n * n {
            return Err(Error::Parse {
                line: body.last().map_or(line, |t| t.0),
                msg: format!("expected {} entries, found {}", n * n, body.len()),
            });
        }
        let rows: Vec<Vec<i64>> = body.chunks(n).map(|r| r.iter().map(|t| t.1).collect()).collect();
        Self::from_rows(&rows)
    }

    pub fn load(path: impl AsRef<FsPath>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            msg: e.to_string(),
        })?;
        Self::parse(&text)
    }
}

impl fmt::Display for ExchangeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `b_ij = #(i -> j) - #(j -> i)`. Loops are rejected; 2-cycles cancel.
pub fn quiver_to_matrix(q: &Quiver) -> Result<ExchangeMatrix> {
    if let Some(a) = q.arrows().iter().find(|a| a.source == a.target) {
        return Err(Error::InvalidArgument(format!("quiver has a loop `{}`", a.name)));
    }
    let n = q.vertex_count();
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| q.arrow_count(i, j) as i64 - q.arrow_count(j, i) as i64)
                .collect()
        })
        .collect();
    ExchangeMatrix::from_rows(&rows)
}

/// Matrix mutation in direction `k` (0-based).
pub fn mutate_matrix(b: &ExchangeMatrix, k: usize) -> Result<ExchangeMatrix> {
    let n = b.n;
    if k >= n {
        return Err(Error::InvalidArgument(format!(
            "mutation direction {} out of range 1..={n}",
            k + 1
        )));
    }
    let mut entries = vec![0i64; n * n];
    for i in 0..n {
        for j in 0..n {
            entries[i * n + j] = if i == k || j == k {
                -b.get(i, j)
            } else {
                let (bik, bkj) = (b.get(i, k), b.get(k, j));
                b.get(i, j) + bik.signum() * (bik * bkj).max(0)
            };
        }
    }
    Ok(ExchangeMatrix { n, entries })
}

/// An exchange matrix with its cluster.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    pub matrix: ExchangeMatrix,
    pub variables: Vec<LaurentPoly>,
}

impl Seed {
    /// The seed `(x_1, ..., x_n; b)`.
    pub fn initial(matrix: ExchangeMatrix) -> Self {
        let n = matrix.size();
        Seed {
            variables: (0..n).map(|i| LaurentPoly::var(n, i)).collect(),
            matrix,
        }
    }

    /// The seed up to simultaneous permutation of cluster and matrix: variables
    /// sorted, matrix rows and columns reordered to match.
    fn key(&self) -> (Vec<LaurentPoly>, Vec<i64>) {
        let n = self.matrix.size();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| self.variables[a].cmp(&self.variables[b]));
        let vars = order.iter().map(|&i| self.variables[i].clone()).collect();
        let entries = order
            .iter()
            .flat_map(|&i| order.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.matrix.get(i, j))
            .collect();
        (vars, entries)
    }
}

/// Seed mutation in direction `k` (0-based), computing the new variable by exact division.
pub fn mutate_seed(s: &Seed, k: usize) -> Result<Seed> {
    let matrix = mutate_matrix(&s.matrix, k)?;
    let n = s.matrix.size();
    let one = LaurentPoly::one(n);
    let mut plus = one.clone();
    let mut minus = one;
    for i in 0..n {
        let b = s.matrix.get(i, k);
        if b > 0 {
            plus = &plus * &s.variables[i].pow(b as u32);
        } else if b < 0 {
            minus = &minus * &s.variables[i].pow((-b) as u32);
        }
    }
    let numerator = &plus + &minus;
    let new = numerator.div_exact(&s.variables[k])?;
    let mut variables = s.variables.clone();
    variables[k] = new;
    Ok(Seed { matrix, variables })
}

/// Applies mutations in order.
pub fn mutate_sequence(s: &Seed, seq: &[usize]) -> Result<Seed> {
    seq.iter().try_fold(s.clone(), |acc, &k| mutate_seed(&acc, k))
}

/// All cluster variables reachable from the initial seed of `b`.
///
/// Breadth-first over seeds, identified up to simultaneous permutation of the
/// cluster and the matrix. Fails with [`Error::NotFinite`] once more than
/// `seed_cap` distinct seeds appear.
pub fn enumerate_cluster_variables(b: &ExchangeMatrix, seed_cap: usize) -> Result<BTreeSet<LaurentPoly>> {
    Ok(explore(b, seed_cap)?.variables)
}

/// Counts from a breadth-first exploration.
#[derive(Clone, Debug)]
pub struct Exploration {
    pub seeds: usize,
    pub variables: BTreeSet<LaurentPoly>,
}

pub fn explore(b: &ExchangeMatrix, seed_cap: usize) -> Result<Exploration> {
    if seed_cap == 0 {
        return Err(Error::InvalidArgument("seed cap must be positive".into()));
    }
    let start = Seed::initial(b.clone());
    let mut seen = HashSet::new();
    let mut variables: BTreeSet<LaurentPoly> = start.variables.iter().cloned().collect();
    seen.insert(start.key());
    let mut queue = VecDeque::from([start]);
    while let Some(seed) = queue.pop_front() {
        for k in 0..b.size() {
            let next = mutate_seed(&seed, k)?;
            if seen.insert(next.key()) {
                if seen.len() > seed_cap {
                    return Err(Error::NotFinite(seed_cap));
                }
                variables.insert(next.variables[k].clone());
                queue.push_back(next);
            }
        }
    }
    Ok(Exploration {
        seeds: seen.len(),
        variables,
    })
}

/// Exchange matrix of the linear quiver `1 -> 2 -> ... -> n`.
pub fn linear_a_matrix(n: usize) -> ExchangeMatrix {
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if j == i + 1 {
                        1
                    } else if i == j + 1 {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    ExchangeMatrix::from_rows(&rows).expect("skew-symmetric by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::default_names;

    fn lp(n: usize, s: &str) -> LaurentPoly {
        LaurentPoly::parse_with(s, &default_names(n)).unwrap()
    }

    fn a2() -> ExchangeMatrix {
        ExchangeMatrix::from_rows(&[vec![0, 1], vec![-1, 0]]).unwrap()
    }

    #[test]
    fn matrix_mutation() {
        let m = mutate_matrix(&a2(), 0).unwrap();
        assert_eq!(m.rows(), vec![vec![0, -1], vec![1, 0]]);
        let a3 = linear_a_matrix(3);
        let m = mutate_matrix(&a3, 1).unwrap();
        // 1 -> 2 -> 3 becomes 1 <- 2 <- 3 plus the arrow 1 -> 3
        assert_eq!(m.rows(), vec![vec![0, -1, 1], vec![1, 0, -1], vec![-1, 1, 0]]);
        assert!(mutate_matrix(&a3, 3).is_err());
    }

    #[test]
    fn a2_seed_mutation() {
        let s = Seed::initial(a2());
        let s1 = mutate_seed(&s, 0).unwrap();
        assert_eq!(s1.variables[0], lp(2, "x1^-1 + x1^-1*x2"));
        let s2 = mutate_seed(&s1, 1).unwrap();
        assert_eq!(s2.variables[1], lp(2, "x1^-1*x2^-1 + x2^-1 + x1^-1"));
        assert_eq!(mutate_seed(&s1, 0).unwrap(), s);
    }

    #[test]
    fn enumeration_counts() {
        let ex = explore(&a2(), 100).unwrap();
        assert_eq!(ex.seeds, 5);
        let vars = ex.variables;
        assert_eq!(vars.len(), 5);
        for expected in ["x1", "x2", "x1^-1 + x1^-1*x2", "x2^-1 + x1*x2^-1", "x1^-1*x2^-1 + x2^-1 + x1^-1"] {
            assert!(vars.contains(&lp(2, expected)), "{expected}");
        }
        assert_eq!(enumerate_cluster_variables(&linear_a_matrix(3), 1000).unwrap().len(), 9);
        let a4 = explore(&linear_a_matrix(4), 5000).unwrap();
        assert_eq!((a4.seeds, a4.variables.len()), (42, 14));
    }

    #[test]
    fn cap_exceeded() {
        // Kronecker matrix: infinite type
        let k = ExchangeMatrix::from_rows(&[vec![0, 2], vec![-2, 0]]).unwrap();
        assert_eq!(enumerate_cluster_variables(&k, 50), Err(Error::NotFinite(50)));
    }

    #[test]
    fn quiver_matrix() {
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![("a".into(), "1".into(), "2".into())],
        )
        .unwrap();
        assert_eq!(quiver_to_matrix(&q).unwrap().rows(), vec![vec![0, 1], vec![-1, 0]]);
        assert_eq!(quiver_to_matrix(&q.opposite()).unwrap(), quiver_to_matrix(&q).unwrap().negated());
        let looped = Quiver::new(vec!["1".into()], vec![("l".into(), "1".into(), "1".into())]).unwrap();
        assert!(quiver_to_matrix(&looped).is_err());
    }

    #[test]
    fn parse_matrix_file() {
        let m = ExchangeMatrix::parse("# A2\n2\n0 1\n-1 0\n").unwrap();
        assert_eq!(m, a2());
        assert!(matches!(ExchangeMatrix::parse("2\n0 1\n1 0\n"), Err(Error::InvalidArgument(_))));
        assert!(matches!(ExchangeMatrix::parse("2\n0 1\n-1\n"), Err(Error::Parse { .. })));
        assert!(matches!(ExchangeMatrix::parse("x"), Err(Error::Parse { .. })));
    }
}
