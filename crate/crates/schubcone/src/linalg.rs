//! Exact integer linear algebra on small lattice vectors.
//!
//! Everything in this crate that touches geometry funnels through here:
//! inner products, integer matrix rank, primitivization (dividing a vector
//! by the gcd of its entries), and the double description method for
//! computing the extremal rays of a polyhedral cone given by homogeneous
//! inequalities `⟨aᵢ, x⟩ ≥ 0`.
//!
//! Arithmetic policy: the public vectors are `i64`, but every computation
//! that *composes* products (Gaussian elimination, double-description
//! combinations) is carried out over arbitrary-precision integers
//! ([`num_bigint::BigInt`]) and only converted back to `i64` after
//! primitivization.  Inner products of `i64` vectors are accumulated in
//! `i128`, which is exact for any vectors this crate can produce.  There is
//! no floating point anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// Errors from the exact linear algebra layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    /// The double description solver tracks active constraints in a 128-bit
    /// set; systems with more than 128 inequality rows are out of scope.
    TooManyConstraints(usize),
    /// An exact intermediate value no longer fits the `i64` vector entries
    /// used by the public API.  Unreachable at the desk scales this crate
    /// supports; reported rather than silently truncated.
    ScaleExceeded,
}

impl std::fmt::Display for LinalgError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LinalgError::TooManyConstraints(n) => {
                write!(f, "double description supports at most 128 constraint rows, got {n}")
            }
            LinalgError::ScaleExceeded => {
                write!(f, "exact result exceeds the i64 range of public lattice vectors")
            }
        }
    }
}

impl std::error::Error for LinalgError {}

// ======================================================================
// inner products, gcd reduction, rank
// ======================================================================

/// Exact inner product of two `i64` vectors, accumulated in `i128`.
///
/// Slices must have equal length (zipped; extra entries would be silently
/// ignored, so callers keep dimensions aligned).
pub(crate) fn dot(a: &[i64], b: &[i64]) -> i128 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

/// Divide a vector by the gcd of its entries (a zero vector is returned
/// unchanged), yielding the primitive lattice vector on the same ray.
pub(crate) fn primitive_i64(v: &mut Vec<i64>) {
    let mut g: i64 = 0;
    for &x in v.iter() {
        g = gcd_i64(g, x.abs());
    }
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

fn gcd_i64(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.abs()
}

/// Primitivize a `BigInt` vector and convert it to the public `i64` form.
fn primitive_big(v: Vec<BigInt>) -> Result<Vec<i64>, LinalgError> {
    let mut g = BigInt::zero();
    for x in &v {
        g = g.gcd(x);
    }
    let one = BigInt::from(1);
    let reduced: Vec<BigInt> = if g > one {
        v.into_iter().map(|x| x / &g).collect()
    } else {
        v
    };
    reduced
        .into_iter()
        .map(|x| i64::try_from(x).map_err(|_| LinalgError::ScaleExceeded))
        .collect()
}

/// Exact rank of a set of integer row vectors, by fraction-free Gaussian
/// elimination over `BigInt`.
///
/// Zero rows are ignored; the empty set has rank 0.
pub(crate) fn rank<I>(rows: I) -> usize
where
    I: IntoIterator,
    I::Item: AsRef<[i64]>,
{
    let mut mat: Vec<Vec<BigInt>> = rows
        .into_iter()
        .filter(|r| r.as_ref().iter().any(|&x| x != 0))
        .map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    if mat.is_empty() {
        return 0;
    }
    let nrows = mat.len();
    let ncols = mat[0].len();
    let mut r = 0usize;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        // Fraction-free elimination: replace row i by pv·rowᵢ − mᵢ·row_r,
        // which stays integral and preserves the row space rank.
        let pv = mat[r][c].clone();
        for i in (r + 1)..nrows {
            if mat[i][c].is_zero() {
                continue;
            }
            let mi = mat[i][c].clone();
            for j in 0..ncols {
                let t = &pv * &mat[i][j] - &mi * &mat[r][j];
                mat[i][j] = t;
            }
        }
        r += 1;
        if r == nrows || r == ncols {
            break;
        }
    }
    r
}

// ======================================================================
// double description
// ======================================================================

/// Output of [`dual_description`]: the cone `{x : ⟨aᵢ, x⟩ ≥ 0}` decomposed
/// as `lineality + cone(rays)`.
///
/// When `lineality` is empty the `rays` are certified extremal (the active
/// constraints of each ray have rank `dim − 1`), deduplicated, primitive,
/// and sorted lexicographically.  When `lineality` is nonempty the cone is
/// not pointed; the rays of the projected pointed part are returned without
/// the extremality certificate (callers in this crate only use the
/// lineality dimension in that case).
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct DualDescription {
    pub lineality: Vec<Vec<i64>>,
    pub rays: Vec<Vec<i64>>,
}

/// Exact double description method for `{x ∈ ℝ^dim : ⟨row, x⟩ ≥ 0 ∀ rows}`.
///
/// Constraints are inserted one at a time.  While the current lineality
/// space is nontrivial, each new constraint that is not orthogonal to it
/// pivots one lineality generator into a ray; afterwards the classic
/// plus/zero/minus split runs with the combinatorial adjacency test of
/// Fukuda–Prodon (a new ray from `r⁺, r⁻` is kept only if no *third*
/// existing ray is active on every constraint where both parents are
/// active).  Active-constraint sets are tracked as `u128` bitmasks, which
/// caps the row count at 128.
pub(crate) fn dual_description(dim: usize, rows: &[Vec<i64>]) -> Result<DualDescription, LinalgError> {
    if rows.len() > 128 {
        return Err(LinalgError::TooManyConstraints(rows.len()));
    }
    // lineality starts as the full standard basis of ℤ^dim
    let mut lin: Vec<Vec<i64>> = (0..dim)
        .map(|i| (0..dim).map(|k| i64::from(k == i)).collect())
        .collect();
    // each ray carries the bitmask of already-processed rows active on it
    let mut rays: Vec<(Vec<i64>, u128)> = Vec::new();

    for (t, a) in rows.iter().enumerate() {
        let bit = 1u128 << t;
        let pivot_pos = lin.iter().position(|l| dot(a, l) != 0);
        if let Some(pp) = pivot_pos {
            let piv = lin.remove(pp);
            let pa = dot(a, &piv);
            // project the remaining lineality generators into a ⊥ hyperplane
            let mut new_lin = Vec::with_capacity(lin.len());
            for l in &lin {
                let al = dot(a, l);
                let w: Vec<BigInt> = l
                    .iter()
                    .zip(&piv)
                    .map(|(&x, &y)| BigInt::from(pa) * BigInt::from(x) - BigInt::from(al) * BigInt::from(y))
                    .collect();
                new_lin.push(primitive_big(w)?);
            }
            lin = new_lin;
            // project existing rays, keeping the positive multiple
            let mut new_rays = Vec::with_capacity(rays.len() + 1);
            for (r, z) in &rays {
                let ar = dot(a, r);
                let mut w: Vec<BigInt> = r
                    .iter()
                    .zip(&piv)
                    .map(|(&x, &y)| BigInt::from(pa) * BigInt::from(x) - BigInt::from(ar) * BigInt::from(y))
                    .collect();
                if pa < 0 {
                    // pa·r − ar·piv is a *negative* multiple of r modulo the
                    // pivot direction when pa < 0; flip to stay inside the cone
                    for x in w.iter_mut() {
                        let neg = -std::mem::take(x);
                        *x = neg;
                    }
                }
                new_rays.push((primitive_big(w)?, z | bit));
            }
            // the pivot itself becomes a ray on the correct side of a
            let mut pr = piv;
            if pa < 0 {
                for x in pr.iter_mut() {
                    *x = -*x;
                }
            }
            primitive_i64(&mut pr);
            new_rays.push((pr, bit - 1)); // active on all previously processed rows
            rays = new_rays;
        } else {
            // a is orthogonal to the lineality space: plus / zero / minus split
            let mut plus_idx: Vec<usize> = Vec::new();
            let mut zero_idx: Vec<usize> = Vec::new();
            let mut minus_idx: Vec<usize> = Vec::new();
            for (i, (r, _)) in rays.iter().enumerate() {
                let d = dot(a, r);
                if d > 0 {
                    plus_idx.push(i);
                } else if d == 0 {
                    zero_idx.push(i);
                } else {
                    minus_idx.push(i);
                }
            }
            let mut new: Vec<(Vec<i64>, u128)> = Vec::new();
            for &i in &zero_idx {
                new.push((rays[i].0.clone(), rays[i].1 | bit));
            }
            for &i in &plus_idx {
                new.push(rays[i].clone());
            }
            for &ip in &plus_idx {
                'pair: for &im in &minus_idx {
                    let zb = rays[ip].1 & rays[im].1;
                    // adjacency: rp, rm are adjacent iff no third ray is
                    // active on every constraint where both parents are
                    for (i3, (_, z3)) in rays.iter().enumerate() {
                        if i3 != ip && i3 != im && zb & !z3 == 0 {
                            continue 'pair;
                        }
                    }
                    let (rp, _) = &rays[ip];
                    let (rm, _) = &rays[im];
                    let dp = dot(a, rp);
                    let dm = dot(a, rm);
                    let w: Vec<BigInt> = rp
                        .iter()
                        .zip(rm)
                        .map(|(&xp, &xm)| {
                            BigInt::from(dp) * BigInt::from(xm) - BigInt::from(dm) * BigInt::from(xp)
                        })
                        .collect();
                    new.push((primitive_big(w)?, zb | bit));
                }
            }
            rays = new;
        }
    }

    if lin.is_empty() {
        // exact extremality certificate: a ray of a pointed cone produced
        // from a full lineality start is extremal iff its active constraint
        // rows have rank dim − 1
        let mut kept: Vec<(Vec<i64>, u128)> = Vec::new();
        for (r, z) in rays.into_iter() {
            let active: Vec<&[i64]> = rows
                .iter()
                .enumerate()
                .filter(|(u, _)| z >> u & 1 == 1)
                .map(|(_, row)| row.as_slice())
                .collect();
            if rank(active) == dim.saturating_sub(1) {
                kept.push((r, z));
            }
        }
        kept.sort_by(|a, b| a.0.cmp(&b.0));
        kept.dedup_by(|a, b| a.0 == b.0);
        Ok(DualDescription {
            lineality: Vec::new(),
            rays: kept.into_iter().map(|(r, _)| r).collect(),
        })
    } else {
        let mut out: Vec<Vec<i64>> = rays.into_iter().map(|(r, _)| r).collect();
        out.sort();
        out.dedup();
        lin.sort();
        Ok(DualDescription { lineality: lin, rays: out })
    }
}

// ======================================================================
// tests
// ======================================================================

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_is_exact() {
        assert_eq!(dot(&[1, 2, 3], &[4, 5, 6]), 32);
        assert_eq!(dot(&[i64::MAX, 0], &[i64::MAX, 0]), (i64::MAX as i128).pow(2));
        assert_eq!(dot(&[], &[]), 0);
    }

    #[test]
    fn primitive_reduces_gcd() {
        let mut v = vec![6, -9, 3];
        primitive_i64(&mut v);
        assert_eq!(v, vec![2, -3, 1]);
        let mut z = vec![0, 0];
        primitive_i64(&mut z);
        assert_eq!(z, vec![0, 0]);
        let mut w = vec![0, -4];
        primitive_i64(&mut w);
        assert_eq!(w, vec![0, -1]);
    }

    #[test]
    fn rank_basics() {
        assert_eq!(rank(Vec::<Vec<i64>>::new()), 0);
        assert_eq!(rank(vec![vec![0, 0]]), 0);
        assert_eq!(rank(vec![vec![1, 0], vec![0, 1]]), 2);
        assert_eq!(rank(vec![vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]), 2);
    }

    #[test]
    fn dd_positive_orthant() {
        // x ≥ 0, y ≥ 0 in the plane: rays e₁, e₂
        let dd = dual_description(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(dd.lineality.is_empty());
        assert_eq!(dd.rays, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn dd_halfplane_has_lineality() {
        // x ≥ 0 in the plane: lineality along e₂
        let dd = dual_description(2, &[vec![1, 0]]).unwrap();
        assert_eq!(dd.lineality.len(), 1);
        assert_eq!(dd.lineality[0][0], 0);
        assert_ne!(dd.lineality[0][1], 0);
    }

    #[test]
    fn dd_quadric_cone_has_four_rays() {
        // the cone over a square: dual of cone(e₁, e₂, e₁+e₃, e₂+e₃)
        // realized as {x : constraints from K_{2,2} edge rows}
        let rows = vec![vec![1, 0, 1], vec![1, 0, 0], vec![0, 1, 1], vec![0, 1, 0]];
        let dd = dual_description(3, &rows).unwrap();
        assert!(dd.lineality.is_empty());
        assert_eq!(dd.rays.len(), 4);
        // each ray satisfies every constraint
        for r in &dd.rays {
            for row in &rows {
                assert!(dot(row, r) >= 0);
            }
        }
        assert!(dd.rays.contains(&vec![1, 0, 0]));
        assert!(dd.rays.contains(&vec![0, 1, 0]));
        assert!(dd.rays.contains(&vec![0, 0, 1]));
        assert!(dd.rays.contains(&vec![1, 1, -1]));
    }

    #[test]
    fn dd_redundant_constraint_changes_nothing() {
        let rows = vec![vec![1, 0], vec![0, 1], vec![1, 1]];
        let dd = dual_description(2, &rows).unwrap();
        assert_eq!(dd.rays, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn dd_row_guard() {
        let rows: Vec<Vec<i64>> = (0..129).map(|_| vec![1]).collect();
        assert_eq!(dual_description(1, &rows), Err(LinalgError::TooManyConstraints(129)));
    }

    #[test]
    fn dd_zero_dim() {
        let dd = dual_description(0, &[]).unwrap();
        assert!(dd.lineality.is_empty());
        assert!(dd.rays.is_empty());
    }
}
