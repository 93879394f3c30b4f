//! Quiver Grassmannians by point counting.
//!
//! `Gr_e(M)` is counted over `F_p` by enumerating, at every vertex, all
//! `e_v`-dimensional subspaces in reduced echelon form and keeping the tuples
//! stable under every arrow. Counts at `D + 1` primes (with `D` the dimension
//! of the ambient product of Grassmannians) determine the counting polynomial;
//! one extra prime checks it. The Euler characteristic is its value at `q = 1`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::modules::{DimVector, Representation};
use crate::scalar::{first_primes, is_prime, PrimeField};

/// Default cap on the number of candidate subspace tuples per count.
pub const DEFAULT_BUDGET: u128 = 50_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannianOptions {
    pub primes: Vec<u64>,
    pub budget: u128,
}

impl Default for GrassmannianOptions {
    fn default() -> Self {
        GrassmannianOptions {
            primes: first_primes(12),
            budget: DEFAULT_BUDGET,
        }
    }
}

impl GrassmannianOptions {
    pub fn with_primes(primes: Vec<u64>) -> Result<Self> {
        if let Some(&p) = primes.iter().find(|&&p| !is_prime(p) || p >= 1 << 31) {
            return Err(Error::InvalidArgument(format!("{p} is not a usable prime")));
        }
        Ok(GrassmannianOptions {
            primes,
            ..Self::default()
        })
    }
}

/// Integer polynomial in `q`, coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountingPolynomial {
    coefficients: Vec<BigInt>,
}

impl CountingPolynomial {
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        CountingPolynomial { coefficients }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn eval(&self, q: i64) -> BigInt {
        let q = BigInt::from(q);
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &q + c)
    }

    /// Interpolates through `(x, y)` points, requiring integer coefficients.
    fn interpolate(points: &[(u64, u64)]) -> Option<Self> {
        // Newton divided differences, then expand into the monomial basis.
        let n = points.len();
        let xs: Vec<BigRational> = points.iter().map(|(x, _)| BigRational::from_integer((*x).into())).collect();
        let mut dd: Vec<BigRational> = points.iter().map(|(_, y)| BigRational::from_integer((*y).into())).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
            }
        }
        let mut coeffs = vec![BigRational::zero(); n];
        // Horner on the Newton form: p = dd[0] + (x - x0)(dd[1] + (x - x1)(...))
        for i in (0..n).rev() {
            // coeffs <- coeffs * (x - xs[i]) + dd[i]
            let mut next = vec![BigRational::zero(); n];
            for k in 0..n {
                if coeffs[k].is_zero() {
                    continue;
                }
                if k + 1 < n {
                    next[k + 1] = &next[k + 1] + &coeffs[k];
                }
                next[k] = &next[k] - &coeffs[k] * &xs[i];
            }
            next[0] = &next[0] + &dd[i];
            coeffs = next;
        }
        let ints = coeffs
            .into_iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(ints))
    }
}

impl fmt::Display for CountingPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigInt::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{k}"),
            };
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Result of an Euler characteristic computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerCharacteristic {
    pub polynomial: CountingPolynomial,
    /// `(prime, count)` pairs used for the fit, the last one being the check.
    pub counts: Vec<(u64, u64)>,
    pub chi: i64,
}

/// Arrow data reduced mod `p`.
struct ReducedModule {
    p: u64,
    dims: Vec<usize>,
    /// `(source, target, row-major dims[target] x dims[source])`.
    arrows: Vec<(usize, usize, Vec<u64>)>,
}

impl ReducedModule {
    fn new(m: &Representation, p: u64) -> Result<Self> {
        let field = PrimeField::new(p);
        let q = m.algebra().quiver();
        let arrows = q
            .arrows()
            .iter()
            .zip(m.matrices())
            .map(|(a, mat)| {
                let red = mat
                    .map_into(field, |v| field.reduce_ratio(v))
                    .ok_or_else(|| {
                        Error::InvalidModule(format!(
                            "matrix of `{}` is not defined modulo {p}",
                            a.name
                        ))
                    })?;
                Ok((a.source, a.target, red.entries().to_vec()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ReducedModule {
            p,
            dims: m.dims().to_vec(),
            arrows,
        })
    }
}

/// A subspace of `F_p^n` as reduced echelon rows.
struct Subspace {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Whether `w` lies in the span.
    fn contains(&self, mut w: Vec<u64>, p: u64) -> bool {
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let f = w[c];
            if f != 0 {
                for (x, r) in w.iter_mut().zip(row) {
                    *x = (*x + (p - f) * r) % p;
                }
            }
        }
        w.iter().all(|&x| x == 0)
    }
}

/// Number of `k`-dimensional subspaces of `F_p^n`.
pub fn gaussian_binomial(n: usize, k: usize, p: u64) -> u128 {
    if k > n {
        return 0;
    }
    let p = p as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.saturating_mul(p.saturating_pow((n - i) as u32) - 1);
        den = den.saturating_mul(p.saturating_pow((i + 1) as u32) - 1);
    }
    num / den
}

/// All `k`-dimensional subspaces of `F_p^n`, each exactly once.
fn subspaces(n: usize, k: usize, p: u64) -> Vec<Subspace> {
    let mut out = Vec::new();
    let mut pivots = Vec::with_capacity(k);
    choose_pivots(n, k, 0, &mut pivots, &mut |piv| {
        // free positions: (row r, column j) with j > piv[r] and j not a pivot
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| ((piv[r] + 1)..n).filter(|j| !piv.contains(j)).map(move |j| (r, j)))
            .collect();
        let mut values = vec![0u64; free.len()];
        loop {
            let mut rows = vec![vec![0u64; n]; k];
            for (r, &c) in piv.iter().enumerate() {
                rows[r][c] = 1;
            }
            for (&(r, j), &v) in free.iter().zip(&values) {
                rows[r][j] = v;
            }
            out.push(Subspace {
                rows,
                pivots: piv.to_vec(),
            });
            // odometer
            let mut i = 0;
            while i < values.len() {
                values[i] += 1;
                if values[i] < p {
                    break;
                }
                values[i] = 0;
                i += 1;
            }
            if i == values.len() {
                break;
            }
        }
    });
    out
}

fn choose_pivots(n: usize, k: usize, start: usize, acc: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if acc.len() == k {
        visit(acc);
        return;
    }
    for c in start..n {
        if n - c < k - acc.len() {
            break;
        }
        acc.push(c);
        choose_pivots(n, k, c + 1, acc, visit);
        acc.pop();
    }
}

fn check_e(m: &Representation, e: &DimVector) -> Result<()> {
    if e.len() != m.dims().len() || e.iter().zip(m.dims()).any(|(a, b)| a > b) {
        return Err(Error::InvalidArgument(format!(
            "dimension vector {e} out of range for module of dimension {}",
            DimVector(m.dims().to_vec())
        )));
    }
    Ok(())
}

fn count_reduced(red: &ReducedModule, e: &[usize], budget: u128) -> Result<u64> {
    let p = red.p;
    let needed = red
        .dims
        .iter()
        .zip(e)
        .fold(1u128, |acc, (&d, &k)| acc.saturating_mul(gaussian_binomial(d, k, p)));
    if needed > budget {
        return Err(Error::Budget { needed, budget });
    }
    let choices: Vec<Vec<Subspace>> = red
        .dims
        .iter()
        .zip(e)
        .map(|(&d, &k)| subspaces(d, k, p))
        .collect();
    Ok(count_tuples(red, &choices))
}

/// Backtracking over vertices in order, checking each arrow once both ends are chosen.
fn count_tuples(red: &ReducedModule, choices: &[Vec<Subspace>]) -> u64 {
    let nv = choices.len();
    // arrows to check when vertex v is the last of its endpoints to be chosen
    let mut checks: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for (ai, (s, t, _)) in red.arrows.iter().enumerate() {
        checks[(*s).max(*t)].push(ai);
    }
    let mut chosen: Vec<usize> = vec![0; nv];

    fn stable(red: &ReducedModule, ai: usize, choices: &[Vec<Subspace>], chosen: &[usize]) -> bool {
        let (s, t, mat) = &red.arrows[ai];
        let (ds, dt) = (red.dims[*s], red.dims[*t]);
        if ds == 0 || dt == 0 {
            return true;
        }
        let us = &choices[*s][chosen[*s]];
        let ut = &choices[*t][chosen[*t]];
        us.rows.iter().all(|u| {
            let w: Vec<u64> = (0..dt)
                .map(|r| (0..ds).fold(0u64, |acc, c| (acc + mat[r * ds + c] * u[c]) % red.p))
                .collect();
            ut.contains(w, red.p)
        })
    }

    fn go(
        v: usize,
        red: &ReducedModule,
        choices: &[Vec<Subspace>],
        checks: &[Vec<usize>],
        chosen: &mut Vec<usize>,
    ) -> u64 {
        if v == choices.len() {
            return 1;
        }
        let mut total = 0;
        for i in 0..choices[v].len() {
            chosen[v] = i;
            if checks[v].iter().all(|&ai| stable(red, ai, choices, chosen)) {
                total += go(v + 1, red, choices, checks, chosen);
            }
        }
        total
    }

    go(0, red, choices, &checks, &mut chosen)
}

/// Number of `F_p`-points of `Gr_e(m)`.
pub fn count_points(m: &Representation, e: &DimVector, p: u64) -> Result<u64> {
    count_points_with_budget(m, e, p, DEFAULT_BUDGET)
}

pub fn count_points_with_budget(m: &Representation, e: &DimVector, p: u64, budget: u128) -> Result<u64> {
    check_e(m, e)?;
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    count_reduced(&ReducedModule::new(m, p)?, e, budget)
}

/// Number of all subrepresentations of `m` over `F_p`, of any dimension vector.
pub fn count_all_subrepresentations(m: &Representation, p: u64) -> Result<u64> {
    let red = ReducedModule::new(m, p)?;
    let choices: Vec<Vec<Subspace>> = red
        .dims
        .iter()
        .map(|&d| (0..=d).flat_map(|k| subspaces(d, k, p)).collect())
        .collect();
    Ok(count_tuples(&red, &choices))
}

/// Upper bound on the degree of the counting polynomial.
pub fn degree_bound(m: &Representation, e: &DimVector) -> usize {
    m.dims().iter().zip(e.iter()).map(|(&d, &k)| k * (d - k)).sum()
}

/// `χ(Gr_e(m))` with default options.
pub fn euler_char(m: &Representation, e: &DimVector) -> Result<i64> {
    Ok(euler_char_with(m, e, &GrassmannianOptions::default())?.chi)
}

pub fn euler_char_with(
    m: &Representation,
    e: &DimVector,
    opts: &GrassmannianOptions,
) -> Result<EulerCharacteristic> {
    check_e(m, e)?;
    let needed = degree_bound(m, e) + 2;
    if opts.primes.len() < needed {
        return Err(Error::NotEnoughPrimes {
            needed,
            have: opts.primes.len(),
        });
    }
    let primes = &opts.primes[..needed];
    let counts = primes
        .par_iter()
        .map(|&p| Ok((p, count_reduced(&ReducedModule::new(m, p)?, e, opts.budget)?)))
        .collect::<Result<Vec<_>>>()?;
    let (fit, check) = counts.split_at(needed - 1);
    let polynomial = CountingPolynomial::interpolate(fit).ok_or_else(|| {
        Error::NonPolynomialCount(format!(
            "counts {fit:?} for e = {e} do not fit an integer polynomial"
        ))
    })?;
    let (p, c) = check[0];
    if polynomial.eval(p as i64) != BigInt::from(c) {
        return Err(Error::NonPolynomialCount(format!(
            "e = {e}: fitted {polynomial} predicts {} points over F_{p}, counted {c}",
            polynomial.eval(p as i64)
        )));
    }
    let chi = polynomial
        .eval(1)
        .to_i64()
        .ok_or_else(|| Error::Consistency("Euler characteristic overflows i64".into()))?;
    Ok(EulerCharacteristic {
        polynomial,
        counts,
        chi,
    })
}

/// All `e` between `0` and the dimension vector of `m`, in lexicographic order.
pub fn dimension_vectors_below(dims: &[usize]) -> Vec<DimVector> {
    let mut out = vec![Vec::new()];
    for &d in dims {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                (0..=d).map(move |k| {
                    let mut v = prefix.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(DimVector).collect()
}

/// Classes `e` with `χ(Gr_e(m)) != 0`, in lexicographic order of `e`.
pub fn submodule_classes(m: &Representation) -> Result<Vec<(DimVector, i64)>> {
    submodule_classes_with(m, &GrassmannianOptions::default())
}

pub fn submodule_classes_with(
    m: &Representation,
    opts: &GrassmannianOptions,
) -> Result<Vec<(DimVector, i64)>> {
    let all = dimension_vectors_below(m.dims());
    let chis = all
        .par_iter()
        .map(|e| euler_char_with(m, e, opts).map(|r| r.chi))
        .collect::<Result<Vec<_>>>()?;
    Ok(all
        .into_iter()
        .zip(chis)
        .filter(|(_, chi)| *chi != 0)
        .collect())
}
