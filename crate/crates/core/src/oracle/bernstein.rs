//! Counting torus solutions of two random bivariate Laurent polynomials via
//! the Sylvester resultant in `y`.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::poly::{poly_determinant, Poly};
use crate::error::{Error, Result};
use crate::intlin::Covector;
use crate::polytope::PointSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomSystemSpec {
    pub supports: [PointSet; 2],
    pub coefficient_bound: u64,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum BernsteinOutcome {
    Count(usize),
    /// Non-generic coefficients suspected; redraw.
    Degenerate,
    /// The two polynomials share a component; redraw.
    ZeroResultant,
}

/// Coefficients for every support point, determined by `(seed, retry)`.
pub fn draw_coefficients(spec: &RandomSystemSpec, retry: u64) -> [Vec<BigInt>; 2] {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    rng.set_stream(retry);
    let b = spec.coefficient_bound.max(1) as i64;
    let mut draw = |s: &PointSet| -> Vec<BigInt> {
        s.points()
            .iter()
            .map(|_| {
                let k = rng.random_range(1..=2 * b);
                BigInt::from(if k > b { b - k } else { k })
            })
            .collect()
    };
    let f = draw(&spec.supports[0]);
    let g = draw(&spec.supports[1]);
    [f, g]
}

/// Rows indexed by the `y` exponent, each a polynomial in `x`; both
/// exponents are shifted to start at 0. `shear` substitutes `x = X Y^t`,
/// which keeps the torus and separates solutions sharing an `x` value.
fn as_y_poly(support: &PointSet, coeffs: &[BigInt], shear: i64) -> Vec<Poly> {
    let t = BigInt::from(shear);
    let sheared: Vec<Covector> = support
        .points()
        .iter()
        .map(|p| {
            let (a, b) = (&p.coords()[0], &p.coords()[1]);
            Covector::new(vec![a.clone(), b + &t * a])
        })
        .collect();
    let pts: Vec<&Covector> = sheared.iter().collect();
    let min = |k: usize| pts.iter().map(|p| p.coords()[k].clone()).min().unwrap();
    let (mx, my) = (min(0), min(1));
    let exp = |c: &BigInt, m: &BigInt| -> usize { (c - m).try_into().expect("small exponent") };
    let dy = pts.iter().map(|p| exp(&p.coords()[1], &my)).max().unwrap();
    let mut rows = vec![Poly::zero(); dy + 1];
    for (p, c) in pts.iter().zip(coeffs) {
        let i = exp(&p.coords()[0], &mx);
        let j = exp(&p.coords()[1], &my);
        rows[j] = &rows[j] + &Poly::monomial(c.clone(), i);
    }
    rows
}

fn sylvester(f: &[Poly], g: &[Poly]) -> Vec<Vec<Poly>> {
    let (p, q) = (f.len() - 1, g.len() - 1);
    let n = p + q;
    let mut m = vec![vec![Poly::zero(); n]; n];
    for r in 0..q {
        for (i, c) in f.iter().rev().enumerate() {
            m[r][r + i] = c.clone();
        }
    }
    for r in 0..p {
        for (i, c) in g.iter().rev().enumerate() {
            m[q + r][r + i] = c.clone();
        }
    }
    m
}

fn x_content(rows: &[Poly]) -> Poly {
    rows.iter().fold(Poly::zero(), |g, r| g.gcd(r))
}

pub fn bernstein_resultant_count(spec: &RandomSystemSpec, retry: u64) -> Result<BernsteinOutcome> {
    for s in &spec.supports {
        if s.is_empty() {
            return Err(Error::EmptySupport);
        }
        if s.rank() != 2 {
            return Err(Error::RankMismatch {
                expected: 2,
                got: s.rank(),
            });
        }
    }
    let [cf, cg] = draw_coefficients(spec, retry);
    // retry r also shears by r: a fixed projection can keep failing
    let shear = retry as i64;
    let f = as_y_poly(&spec.supports[0], &cf, shear);
    let g = as_y_poly(&spec.supports[1], &cg, shear);
    if f.len() == 1 && g.len() == 1 {
        return Ok(BernsteinOutcome::Degenerate);
    }
    for rows in [&f, &g] {
        // a factor h(x) other than a power of x, with y present
        if rows.len() > 1 && !x_content(rows).strip_x().1.is_constant() {
            return Ok(BernsteinOutcome::Degenerate);
        }
    }

    let r = poly_determinant(sylvester(&f, &g));
    if r.is_zero() {
        return Ok(BernsteinOutcome::ZeroResultant);
    }
    let r = r.strip_x().1.primitive();
    if !r.is_squarefree() {
        return Ok(BernsteinOutcome::Degenerate);
    }
    // roots escaping to y = infinity or landing on y = 0
    let at_infinity = f.last().unwrap().gcd(g.last().unwrap());
    let at_zero = f[0].gcd(&g[0]);
    for bad in [at_infinity, at_zero] {
        if !r.gcd(&bad).is_constant() {
            return Ok(BernsteinOutcome::Degenerate);
        }
    }
    Ok(BernsteinOutcome::Count(r.degree().unwrap_or(0)))
}

/// Retries on `Degenerate`/`ZeroResultant` up to `max_retries` times.
/// Returns the count with the retry index that produced it, or the last
/// outcome when every attempt failed.
pub fn bernstein_count_with_retries(
    spec: &RandomSystemSpec,
    max_retries: u64,
) -> Result<std::result::Result<(usize, u64), BernsteinOutcome>> {
    let mut last = BernsteinOutcome::Degenerate;
    for retry in 0..=max_retries {
        match bernstein_resultant_count(spec, retry)? {
            BernsteinOutcome::Count(c) => return Ok(Ok((c, retry))),
            other => last = other,
        }
    }
    Ok(Err(last))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn spec(a: &[&[i64]], b: &[&[i64]], seed: u64) -> RandomSystemSpec {
        RandomSystemSpec {
            supports: [PointSet::from_i64s(2, a), PointSet::from_i64s(2, b)],
            coefficient_bound: 50,
            seed,
        }
    }

    #[test]
    fn two_lines() {
        for seed in 0..5 {
            let s = spec(&[&[0, 0], &[1, 0]], &[&[0, 0], &[0, 1]], seed);
            assert_eq!(bernstein_count_with_retries(&s, 10).unwrap().unwrap().0, 1);
        }
    }

    #[test]
    fn two_conics() {
        let tri: &[&[i64]] = &[&[0, 0], &[1, 0], &[2, 0], &[0, 1], &[1, 1], &[0, 2]];
        for seed in 0..5 {
            let s = spec(tri, tri, seed);
            assert_eq!(bernstein_count_with_retries(&s, 10).unwrap().unwrap().0, 4);
        }
    }

    #[test]
    fn parallel_directions() {
        let s = spec(&[&[0, 0], &[1, 0]], &[&[0, 0], &[1, 0]], 3);
        match bernstein_resultant_count(&s, 0).unwrap() {
            BernsteinOutcome::Count(0) | BernsteinOutcome::Degenerate => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn laurent_supports_are_shifted() {
        // x + x^-1 y + y^-1 type supports
        let s = spec(&[&[1, 0], &[-1, 1], &[0, -1]], &[&[0, 0], &[1, 1]], 9);
        let got = bernstein_count_with_retries(&s, 10).unwrap().unwrap().0;
        let mv = crate::polytope::mixed_volume(&s.supports).unwrap();
        assert_eq!(BigInt::from(got), mv.into_inner());
    }

    #[test]
    fn draws_are_reproducible() {
        let s = spec(&[&[0, 0], &[1, 0]], &[&[0, 0], &[0, 1]], 42);
        assert_eq!(draw_coefficients(&s, 3), draw_coefficients(&s, 3));
        assert_ne!(draw_coefficients(&s, 3), draw_coefficients(&s, 4));
        assert!(draw_coefficients(&s, 0)
            .iter()
            .flatten()
            .all(|c| !c.is_zero()));
    }
}
