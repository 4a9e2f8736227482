//! Exact polyhedral oracle: faces, extremality, and simpliciality of
//! rational cones, by brute force.
//!
//! This module knows nothing about permutations or graphs.  It answers
//! questions about a cone σ = cone(g₁, …, g_s) ⊆ ℝ^D over the integers:
//! the dimension of σ, whether a subset of generators spans a face, the
//! list of all faces of dimension ≤ 3, and whether every 3-dimensional
//! face is simplicial (the *rigidity verdict*).  The combinatorial
//! shortcuts elsewhere in the crate are validated against these answers —
//! so this implementation deliberately takes the slow, certifiable route:
//!
//! 1. compute the extremal rays R of the dual cone
//!    σ* = {w : ⟨w, gᵢ⟩ ≥ 0 ∀i} by double description ([`crate::linalg`]);
//! 2. record, per generator, the set of dual rays vanishing on it;
//! 3. the minimal face containing a generator subset S is then read off:
//!    Z(S) = dual rays vanishing on all of S, on-set = generators killed
//!    by all of Z(S), and w = Σ_{r ∈ Z(S)} r is an exact certificate —
//!    zero on the face, ≥ 1 on every generator off it.
//!
//! Everything is integer arithmetic; there is no floating point and no
//! tolerance anywhere.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::linalg::{self, LinalgError};

/// Desk-scale guard for the face scan: at most this many extremal ray
/// classes.
pub const MAX_FACE_SCAN_RAYS: usize = 24;

// ======================================================================
// errors
// ======================================================================

/// Errors from the polyhedral oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// Cone generators must be nonzero.
    ZeroGenerator { index: usize },
    /// A vector has the wrong ambient dimension.
    VectorDimMismatch { index: usize, expected: usize, got: usize },
    /// The operation requires a pointed cone (no line through the origin).
    NotPointed { lineality_dim: usize },
    /// The face scan is limited to [`MAX_FACE_SCAN_RAYS`] extremal rays.
    TooManyRays { count: usize, limit: usize },
    /// The dual cone produced more rays than the 128-bit incidence masks
    /// can index.
    TooManyDualRays { count: usize },
    /// A subset refers to a generator index that does not exist.
    IndexOutOfRange { index: usize, count: usize },
    /// Propagated exact-arithmetic failure.
    Linalg(LinalgError),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ZeroGenerator { index } => {
                write!(f, "generator {index} is the zero vector")
            }
            PolyError::VectorDimMismatch { index, expected, got } => {
                write!(f, "vector {index} has dimension {got}, expected {expected}")
            }
            PolyError::NotPointed { lineality_dim } => {
                write!(f, "cone is not pointed (lineality dimension {lineality_dim})")
            }
            PolyError::TooManyRays { count, limit } => {
                write!(f, "face scan supports at most {limit} extremal rays, got {count}")
            }
            PolyError::TooManyDualRays { count } => {
                write!(f, "dual cone has {count} rays, more than the 128 the incidence masks hold")
            }
            PolyError::IndexOutOfRange { index, count } => {
                write!(f, "generator index {index} out of range (cone has {count})")
            }
            PolyError::Linalg(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for PolyError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            PolyError::Linalg(e) => Some(e),
            _ => None,
        }
    }
}

impl From<LinalgError> for PolyError {
    fn from(e: LinalgError) -> Self {
        PolyError::Linalg(e)
    }
}

// ======================================================================
// domain types
// ======================================================================

/// A rational polyhedral cone given by integer generators in ℤ^D.
/// Generator order is preserved — face results refer to generators by
/// their index here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalCone {
    ambient_dim: usize,
    generators: Vec<Vec<i64>>,
}

/// A face of a cone, reported by the oracle.
///
/// `certificate` is an integer functional that pairs to 0 with every
/// generator in `zero_set` and to ≥ 1 with every generator off it, so the
/// face is re-verifiable by direct arithmetic.  (The one exception: when
/// the whole cone appears as its own 3-dimensional face, the certificate
/// is the zero vector and `zero_set` is everything.)
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleFace {
    /// Indices of all generators lying on the face.
    pub zero_set: BTreeSet<usize>,
    /// Dimension of the linear span of those generators.
    pub dim: usize,
    /// Exact supporting functional (see above).
    pub certificate: Vec<i64>,
}

// ======================================================================
// construction
// ======================================================================

impl RationalCone {
    /// Build a cone from generators, validating dimensions and that no
    /// generator is zero.
    pub fn from_generators<I, V>(ambient_dim: usize, generators: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = V>,
        V: Into<Vec<i64>>,
    {
        let mut gens = Vec::new();
        for (index, g) in generators.into_iter().enumerate() {
            let g: Vec<i64> = g.into();
            if g.len() != ambient_dim {
                return Err(PolyError::VectorDimMismatch {
                    index,
                    expected: ambient_dim,
                    got: g.len(),
                });
            }
            if g.iter().all(|&x| x == 0) {
                return Err(PolyError::ZeroGenerator { index });
            }
            gens.push(g);
        }
        Ok(RationalCone { ambient_dim, generators: gens })
    }

    /// Build the cone {x : ⟨aᵢ, x⟩ ≥ 0} from inequality rows, converting it
    /// to generator form by double description.  The resulting generators
    /// are the extremal rays — primitive, sorted, deduplicated — so the
    /// construction is deterministic.  A cone containing a line is refused.
    pub fn from_inequalities<I, V>(ambient_dim: usize, rows: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = V>,
        V: Into<Vec<i64>>,
    {
        let mut checked = Vec::new();
        for (index, r) in rows.into_iter().enumerate() {
            let r: Vec<i64> = r.into();
            if r.len() != ambient_dim {
                return Err(PolyError::VectorDimMismatch {
                    index,
                    expected: ambient_dim,
                    got: r.len(),
                });
            }
            checked.push(r);
        }
        let dd = linalg::dual_description(ambient_dim, &checked)?;
        if !dd.lineality.is_empty() {
            return Err(PolyError::NotPointed { lineality_dim: dd.lineality.len() });
        }
        Ok(RationalCone { ambient_dim, generators: dd.rays })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    // ------------------------------------------------------------------
    // dual machinery
    // ------------------------------------------------------------------

    /// Extremal rays of σ* (its lineality span(G)^⊥ is irrelevant to
    /// vanishing patterns on the generators) plus, per generator, the
    /// 128-bit mask of dual rays vanishing on it.
    fn dual_machine(&self) -> Result<(Vec<Vec<i64>>, Vec<u128>), PolyError> {
        let dd = linalg::dual_description(self.ambient_dim, &self.generators)?;
        let rays = dd.rays;
        if rays.len() > 128 {
            return Err(PolyError::TooManyDualRays { count: rays.len() });
        }
        let masks = self
            .generators
            .iter()
            .map(|g| {
                let mut mask = 0u128;
                for (r, ray) in rays.iter().enumerate() {
                    if linalg::dot(ray, g) == 0 {
                        mask |= 1 << r;
                    }
                }
                mask
            })
            .collect();
        Ok((rays, masks))
    }

    fn face_from_zero_mask(
        &self,
        z: u128,
        rays: &[Vec<i64>],
        masks: &[u128],
    ) -> Result<OracleFace, PolyError> {
        let zero_set: BTreeSet<usize> = (0..self.generators.len())
            .filter(|&i| z & !masks[i] == 0)
            .collect();
        let dim = linalg::rank(zero_set.iter().map(|&i| &self.generators[i]));
        let mut acc = vec![0i128; self.ambient_dim];
        for (r, ray) in rays.iter().enumerate() {
            if z >> r & 1 == 1 {
                for (a, &x) in acc.iter_mut().zip(ray) {
                    *a += x as i128;
                }
            }
        }
        let certificate = acc
            .into_iter()
            .map(i64::try_from)
            .collect::<Result<Vec<i64>, _>>()
            .map_err(|_| PolyError::Linalg(LinalgError::ScaleExceeded))?;
        Ok(OracleFace { zero_set, dim, certificate })
    }

    // ------------------------------------------------------------------
    // queries
    // ------------------------------------------------------------------

    /// Dimension of the cone: the rank of the generator matrix.
    pub fn cone_dim(&self) -> usize {
        linalg::rank(self.generators.iter())
    }

    /// The minimal face of σ containing the given generators, with its full
    /// on-set, dimension, and certificate.  The empty subset yields the
    /// minimal face of the whole cone (the apex {0} when σ is pointed); if
    /// no dual ray vanishes on all of `subset`, the minimal face is σ
    /// itself (zero certificate).
    pub fn minimal_face(&self, subset: &BTreeSet<usize>) -> Result<OracleFace, PolyError> {
        if let Some(&index) = subset.iter().find(|&&i| i >= self.generators.len()) {
            return Err(PolyError::IndexOutOfRange { index, count: self.generators.len() });
        }
        let (rays, masks) = self.dual_machine()?;
        let full: u128 = if rays.len() == 128 { !0 } else { (1u128 << rays.len()) - 1 };
        let z = subset.iter().fold(full, |acc, &i| acc & masks[i]);
        self.face_from_zero_mask(z, &rays, &masks)
    }

    /// Does `subset` span a face with exactly these generators on it?
    /// Present iff the minimal face containing the subset has `subset` as
    /// its full on-set *and* a nonzero certificate exists (the improper
    /// face σ itself is excluded — a zero functional certifies nothing).
    /// The empty subset asks for the apex: present iff σ is pointed, with
    /// a strictly positive interior certificate.
    pub fn is_face(&self, subset: &BTreeSet<usize>) -> Result<Option<OracleFace>, PolyError> {
        let face = self.minimal_face(subset)?;
        let ok = face.zero_set == *subset && face.certificate.iter().any(|&x| x != 0);
        Ok(ok.then_some(face))
    }

    /// Check pointedness: σ is pointed iff the sum of the dual-cone rays
    /// pairs strictly positively with every generator.  Returns the
    /// generator-index set spanning the lineality space when it fails.
    fn lineality_generators(&self) -> Result<Vec<usize>, PolyError> {
        let (rays, _masks) = self.dual_machine()?;
        let mut w = vec![0i128; self.ambient_dim];
        for ray in &rays {
            for (a, &x) in w.iter_mut().zip(ray) {
                *a += x as i128;
            }
        }
        Ok((0..self.generators.len())
            .filter(|&i| {
                self.generators[i]
                    .iter()
                    .zip(&w)
                    .map(|(&g, &ww)| g as i128 * ww)
                    .sum::<i128>()
                    == 0
            })
            .collect())
    }

    fn ensure_pointed(&self) -> Result<(), PolyError> {
        let lin = self.lineality_generators()?;
        if lin.is_empty() {
            Ok(())
        } else {
            let dim = linalg::rank(lin.iter().map(|&i| &self.generators[i]));
            Err(PolyError::NotPointed { lineality_dim: dim })
        }
    }

    /// Indices of generators lying on 1-dimensional faces, i.e. the
    /// extremal rays of σ.  Requires a pointed cone.  If several
    /// generators are positive multiples of each other they all lie on the
    /// same 1-face and are all reported; callers that want ray *classes*
    /// deduplicate by primitive vector.  A generator that is a nonnegative
    /// combination of independent others lies on no 1-face and is dropped.
    pub fn extremal_rays(&self) -> Result<Vec<usize>, PolyError> {
        self.ensure_pointed()?;
        let (_, masks) = self.dual_machine()?;
        let mut out = Vec::new();
        for i in 0..self.generators.len() {
            let on = (0..self.generators.len()).filter(|&j| masks[i] & !masks[j] == 0);
            if linalg::rank(on.map(|j| &self.generators[j])) == 1 {
                out.push(i);
            }
        }
        Ok(out)
    }

    /// All faces of σ of dimension 1, 2, and 3, each with its full on-set
    /// and certificate, sorted by (dim, zero_set).  When dim σ = 3 the cone
    /// itself is included as a 3-face (that convention is what makes the
    /// quadric cone non-rigid).  Requires a pointed cone with at most
    /// [`MAX_FACE_SCAN_RAYS`] extremal ray classes.
    ///
    /// The scan visits subsets of ≤ 3 extremal ray classes and takes the
    /// minimal face containing each; every face of dimension ≤ 3 arises
    /// this way.
    pub fn faces_up_to_dim3(&self) -> Result<Vec<OracleFace>, PolyError> {
        use itertools::Itertools;
        let ext = self.extremal_rays()?;
        // one representative index per primitive ray class
        let mut seen = BTreeSet::new();
        let mut classes = Vec::new();
        for &i in &ext {
            let mut p = self.generators[i].clone();
            linalg::primitive_i64(&mut p);
            if seen.insert(p) {
                classes.push(i);
            }
        }
        if classes.len() > MAX_FACE_SCAN_RAYS {
            return Err(PolyError::TooManyRays {
                count: classes.len(),
                limit: MAX_FACE_SCAN_RAYS,
            });
        }
        let (rays, masks) = self.dual_machine()?;
        let mut found: BTreeMap<BTreeSet<usize>, OracleFace> = BTreeMap::new();
        for size in 1..=3.min(classes.len()) {
            for combo in classes.iter().combinations(size) {
                let z = combo.iter().fold(
                    if rays.len() == 128 { !0u128 } else { (1u128 << rays.len()) - 1 },
                    |acc, &&i| acc & masks[i],
                );
                let face = self.face_from_zero_mask(z, &rays, &masks)?;
                if face.dim <= 3 && !found.contains_key(&face.zero_set) {
                    found.insert(face.zero_set.clone(), face);
                }
            }
        }
        let mut out: Vec<OracleFace> = found.into_values().collect();
        out.sort_by(|a, b| (a.dim, &a.zero_set).cmp(&(b.dim, &b.zero_set)));
        Ok(out)
    }

    /// True iff every 3-dimensional face of σ (σ itself included when
    /// dim σ = 3) is simplicial, i.e. carries exactly 3 extremal ray
    /// classes.
    pub fn rigid_verdict(&self) -> Result<bool, PolyError> {
        let ext: BTreeSet<usize> = self.extremal_rays()?.into_iter().collect();
        let class_of = |i: usize| {
            let mut p = self.generators[i].clone();
            linalg::primitive_i64(&mut p);
            p
        };
        for face in self.faces_up_to_dim3()? {
            if face.dim != 3 {
                continue;
            }
            let classes: BTreeSet<Vec<i64>> = face
                .zero_set
                .iter()
                .filter(|i| ext.contains(i))
                .map(|&i| class_of(i))
                .collect();
            if classes.len() != 3 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

// ======================================================================
// tests
// ======================================================================
