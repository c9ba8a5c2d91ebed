//! Placing (beneath-beyond) triangulation of a full-dimensional point set.
//!
//! Points are inserted one at a time. A point strictly beyond some boundary
//! facets is coned over each of them; the horizon ridges then become new
//! boundary facets through the point. Everything is exact, so coplanar and
//! interior points are handled by the sign tests alone.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::intlin::{bareiss_determinant, dot, rank};

pub(crate) struct Triangulation {
    /// Sum of |det| over all simplices, i.e. the lattice-normalized volume.
    pub volume: BigInt,
    /// Indices (into the input) of points lying on some boundary facet.
    pub boundary: Vec<usize>,
}

struct Facet {
    verts: Vec<usize>,
    normal: Vec<BigInt>,
    offset: BigInt,
}

impl Facet {
    /// Facet through `verts`, oriented so that `inner` is strictly beneath it.
    fn through(points: &[Vec<BigInt>], verts: Vec<usize>, inner: usize) -> Facet {
        let normal = hyperplane_normal(points, &verts);
        let offset = dot(&normal, &points[verts[0]]);
        let mut f = Facet {
            verts,
            normal,
            offset,
        };
        let side = f.height(&points[inner]);
        debug_assert!(!side.is_zero(), "degenerate simplex in triangulation");
        if side.is_positive() {
            f.normal.iter_mut().for_each(|c| *c = -std::mem::take(c));
            f.offset = -std::mem::take(&mut f.offset);
        }
        f
    }

    /// Positive exactly when `p` is beyond the facet; the magnitude is the
    /// lattice volume of the simplex spanned by the facet and `p`.
    fn height(&self, p: &[BigInt]) -> BigInt {
        dot(&self.normal, p) - &self.offset
    }
}

/// Cofactor vector `c` with `c . x - c . v0 = det[v1 - v0; ...; x - v0]`.
fn hyperplane_normal(points: &[Vec<BigInt>], verts: &[usize]) -> Vec<BigInt> {
    let n = points[verts[0]].len();
    let base = &points[verts[0]];
    let edges: Vec<Vec<BigInt>> = verts[1..]
        .iter()
        .map(|&v| points[v].iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    (0..n)
        .map(|i| {
            let minor: Vec<Vec<BigInt>> = edges
                .iter()
                .map(|e| {
                    e.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != i)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let d = bareiss_determinant(minor);
            if (n - 1 + i).is_multiple_of(2) {
                d
            } else {
                -d
            }
        })
        .collect()
}

/// Greedily picks `n + 1` affinely independent points, or `None` when the
/// affine span is lower dimensional.
fn initial_simplex(points: &[Vec<BigInt>], n: usize) -> Option<Vec<usize>> {
    let mut chosen = vec![0];
    let mut diffs: Vec<Vec<BigInt>> = Vec::new();
    for (i, p) in points.iter().enumerate().skip(1) {
        let d: Vec<BigInt> = p.iter().zip(&points[0]).map(|(a, b)| a - b).collect();
        diffs.push(d);
        if rank(&diffs) == diffs.len() {
            chosen.push(i);
            if chosen.len() == n + 1 {
                return Some(chosen);
            }
        } else {
            diffs.pop();
        }
    }
    None
}

/// Triangulates `Conv(points)` in `Z^n`. Returns `None` unless the points
/// affinely span `R^n`. `points` must be nonempty and duplicate free.
pub(crate) fn triangulate(points: &[Vec<BigInt>], n: usize) -> Option<Triangulation> {
    if n == 0 {
        return Some(Triangulation {
            volume: BigInt::one(),
            boundary: vec![0],
        });
    }
    let simplex = initial_simplex(points, n)?;
    let mut volume = {
        let rows: Vec<Vec<BigInt>> = simplex[1..]
            .iter()
            .map(|&v| {
                points[v]
                    .iter()
                    .zip(&points[simplex[0]])
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        bareiss_determinant(rows).abs()
    };
    let mut facets: Vec<Facet> = (0..=n)
        .map(|skip| {
            let mut verts: Vec<usize> = simplex
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != skip)
                .map(|(_, &v)| v)
                .collect();
            verts.sort_unstable();
            Facet::through(points, verts, simplex[skip])
        })
        .collect();

    let mut placed = vec![false; points.len()];
    for &v in &simplex {
        placed[v] = true;
    }
    for p in 0..points.len() {
        if placed[p] {
            continue;
        }
        placed[p] = true;
        let heights: Vec<BigInt> = facets.iter().map(|f| f.height(&points[p])).collect();
        if heights.iter().all(|h| !h.is_positive()) {
            continue;
        }
        // ridge -> (number of visible facets containing it, omitted vertex)
        let mut ridges: HashMap<Vec<usize>, (usize, usize)> = HashMap::new();
        for (f, h) in facets.iter().zip(&heights) {
            if !h.is_positive() {
                continue;
            }
            volume += h;
            for k in 0..f.verts.len() {
                let mut ridge = f.verts.clone();
                let omitted = ridge.remove(k);
                ridges
                    .entry(ridge)
                    .and_modify(|e| e.0 += 1)
                    .or_insert((1, omitted));
            }
        }
        let mut next: Vec<Facet> = facets
            .into_iter()
            .zip(&heights)
            .filter(|(_, h)| !h.is_positive())
            .map(|(f, _)| f)
            .collect();
        let mut horizon: Vec<(Vec<usize>, usize)> = ridges
            .into_iter()
            .filter(|(_, (count, _))| *count == 1)
            .map(|(ridge, (_, omitted))| (ridge, omitted))
            .collect();
        horizon.sort();
        for (mut ridge, omitted) in horizon {
            ridge.push(p);
            ridge.sort_unstable();
            next.push(Facet::through(points, ridge, omitted));
        }
        facets = next;
    }

    let mut boundary: Vec<usize> = facets
        .iter()
        .flat_map(|f| f.verts.iter().copied())
        .collect();
    boundary.sort_unstable();
    boundary.dedup();
    Some(Triangulation { volume, boundary })
}
