//! SO(3) math: rotation matrices, the 6D rotation encoding, geodesic
//! distance, Haar-uniform sampling, farthest-point sampling and rotation-set
//! transforms.
//!
//! Conventions (normative for every on-disk format in this workspace):
//! - Matrices are row-major `[f64; 9]`.
//! - The 6D encoding is the column-major concatenation of the first and
//!   second matrix columns.
//! - Geodesic angle is `arccos((trace(R1ᵀR2) − 1) / 2)`, clamped to `[−1, 1]`
//!   before `arccos` because the trace drifts past the bounds in float
//!   arithmetic.

use rand::Rng;
use thiserror::Error;

use crate::rng::normal01;

/// Tolerance used by the validity checks on rotation matrices.
pub const ROTATION_TOL: f64 = 1e-6;

#[derive(Debug, Error, PartialEq)]
pub enum So3Error {
    /// Gram-Schmidt projection hit a zero/collinear column pair.
    #[error("degenerate 6D input: {0}")]
    DegenerateInput(&'static str),
    /// Farthest-point sampling asked for an out-of-range count.
    #[error("bad sample count {k} for set of {len}")]
    BadCount { k: usize, len: usize },
}

/// A 3×3 orthonormal matrix with determinant +1, stored row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationMatrix([f64; 9]);

/// The 6D rotation encoding: first two matrix columns, column-major.
///
/// Arbitrary 6-vectors are valid inputs to [`project_so3`]; only values
/// produced by [`rot6d_from_matrix`] carry the orthonormality guarantees.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rot6D(pub [f64; 6]);

impl RotationMatrix {
    pub const IDENTITY: RotationMatrix =
        RotationMatrix([1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0]);

    /// Wrap a row-major array. The caller upholds the orthonormality
    /// invariant; see [`RotationMatrix::is_valid`] for the check.
    pub fn from_array(m: [f64; 9]) -> Self {
        RotationMatrix(m)
    }

    pub fn as_array(&self) -> &[f64; 9] {
        &self.0
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.0[row * 3 + col]
    }

    pub fn col(&self, c: usize) -> [f64; 3] {
        [self.0[c], self.0[3 + c], self.0[6 + c]]
    }

    pub fn rot_x(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        RotationMatrix([1.0, 0.0, 0.0, 0.0, c, -s, 0.0, s, c])
    }

    pub fn rot_y(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        RotationMatrix([c, 0.0, s, 0.0, 1.0, 0.0, -s, 0.0, c])
    }

    pub fn rot_z(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        RotationMatrix([c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0])
    }

    /// Matrix product `self · other`.
    pub fn multiply(&self, other: &RotationMatrix) -> RotationMatrix {
        let a = &self.0;
        let b = &other.0;
        let mut out = [0.0; 9];
        for r in 0..3 {
            for c in 0..3 {
                out[r * 3 + c] =
                    a[r * 3] * b[c] + a[r * 3 + 1] * b[3 + c] + a[r * 3 + 2] * b[6 + c];
            }
        }
        RotationMatrix(out)
    }

    pub fn transpose(&self) -> RotationMatrix {
        let m = &self.0;
        RotationMatrix([m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8]])
    }

    pub fn det(&self) -> f64 {
        let m = &self.0;
        m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6])
            + m[2] * (m[3] * m[7] - m[4] * m[6])
    }

    /// Rotate a 3-vector: `R · v`.
    pub fn apply(&self, v: [f64; 3]) -> [f64; 3] {
        let m = &self.0;
        [
            m[0] * v[0] + m[1] * v[1] + m[2] * v[2],
            m[3] * v[0] + m[4] * v[1] + m[5] * v[2],
            m[6] * v[0] + m[7] * v[1] + m[8] * v[2],
        ]
    }

    /// Max-abs entry of `MᵀM − I`.
    pub fn orthonormality_defect(&self) -> f64 {
        let t = self.transpose().multiply(self);
        let mut worst: f64 = 0.0;
        for r in 0..3 {
            for c in 0..3 {
                let expect = if r == c { 1.0 } else { 0.0 };
                worst = worst.max((t.get(r, c) - expect).abs());
            }
        }
        worst
    }

    /// Orthonormality defect ≤ tol and det within tol of +1.
    pub fn is_valid(&self, tol: f64) -> bool {
        self.orthonormality_defect() <= tol && (self.det() - 1.0).abs() <= tol
    }

    /// Build from a unit quaternion `(w, x, y, z)`.
    pub fn from_quaternion(w: f64, x: f64, y: f64, z: f64) -> RotationMatrix {
        RotationMatrix([
            1.0 - 2.0 * (y * y + z * z),
            2.0 * (x * y - w * z),
            2.0 * (x * z + w * y),
            2.0 * (x * y + w * z),
            1.0 - 2.0 * (x * x + z * z),
            2.0 * (y * z - w * x),
            2.0 * (x * z - w * y),
            2.0 * (y * z + w * x),
            1.0 - 2.0 * (x * x + y * y),
        ])
    }
}

impl Rot6D {
    pub fn as_array(&self) -> &[f64; 6] {
        &self.0
    }
}

/// First two columns of the matrix, concatenated column-major.
pub fn rot6d_from_matrix(r: &RotationMatrix) -> Rot6D {
    let c0 = r.col(0);
    let c1 = r.col(1);
    Rot6D([c0[0], c0[1], c0[2], c1[0], c1[1], c1[2]])
}

fn norm3(v: [f64; 3]) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Gram-Schmidt projection of an arbitrary 6-vector onto SO(3).
///
/// `a1 = normalize(v[0..3])`, `a2 = normalize(v[3..6] − (a1·v[3..6])a1)`,
/// `a3 = a1 × a2`; the result has columns `(a1, a2, a3)`.
pub fn project_so3(v: &Rot6D) -> Result<RotationMatrix, So3Error> {
    let u = [v.0[0], v.0[1], v.0[2]];
    let w = [v.0[3], v.0[4], v.0[5]];
    let nu = norm3(u);
    if nu <= 1e-12 {
        return Err(So3Error::DegenerateInput("first column has ~zero norm"));
    }
    let a1 = [u[0] / nu, u[1] / nu, u[2] / nu];
    let proj = dot3(a1, w);
    let r = [w[0] - proj * a1[0], w[1] - proj * a1[1], w[2] - proj * a1[2]];
    let nr = norm3(r);
    if nr <= 1e-12 {
        return Err(So3Error::DegenerateInput(
            "second column collinear with first",
        ));
    }
    let a2 = [r[0] / nr, r[1] / nr, r[2] / nr];
    let a3 = cross3(a1, a2);
    Ok(RotationMatrix([
        a1[0], a2[0], a3[0], a1[1], a2[1], a3[1], a1[2], a2[2], a3[2],
    ]))
}

/// Angle of the relative rotation `R1ᵀR2`, in radians within `[0, π]`.
pub fn geodesic_angle(r1: &RotationMatrix, r2: &RotationMatrix) -> f64 {
    let a = r1.as_array();
    let b = r2.as_array();
    // trace(R1ᵀ R2) = Σ_ij a_ij b_ij
    let trace: f64 = a.iter().zip(b.iter()).map(|(x, y)| x * y).sum();
    ((trace - 1.0) / 2.0).clamp(-1.0, 1.0).acos()
}

/// Haar-uniform rotation via a normalized 4-Gaussian quaternion.
pub fn random_rotation<R: Rng>(rng: &mut R) -> RotationMatrix {
    loop {
        let q = [
            normal01(rng),
            normal01(rng),
            normal01(rng),
            normal01(rng),
        ];
        let n = (q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]).sqrt();
        if n > 1e-12 {
            return RotationMatrix::from_quaternion(q[0] / n, q[1] / n, q[2] / n, q[3] / n);
        }
    }
}

/// Greedy farthest-point sampling under [`geodesic_angle`].
///
/// The first pick is index 0; each subsequent pick maximizes the minimum
/// distance to the already-picked set, ties broken by lowest index.
pub fn fps_select(rots: &[RotationMatrix], k: usize) -> Result<Vec<usize>, So3Error> {
    if k == 0 || k > rots.len() {
        return Err(So3Error::BadCount { k, len: rots.len() });
    }
    let mut picked = Vec::with_capacity(k);
    picked.push(0);
    let mut min_dist: Vec<f64> = rots.iter().map(|r| geodesic_angle(&rots[0], r)).collect();
    while picked.len() < k {
        let mut best = 0;
        let mut best_d = f64::NEG_INFINITY;
        for (i, &d) in min_dist.iter().enumerate() {
            if d > best_d {
                best_d = d;
                best = i;
            }
        }
        picked.push(best);
        for (i, d) in min_dist.iter_mut().enumerate() {
            let nd = geodesic_angle(&rots[best], &rots[i]);
            if nd < *d {
                *d = nd;
            }
        }
    }
    Ok(picked)
}

/// Right-multiply every rotation in the set by `r`, preserving all relative
/// rotations exactly.
pub fn apply_shared_rotation(rots: &[RotationMatrix], r: &RotationMatrix) -> Vec<RotationMatrix> {
    rots.iter().map(|m| m.multiply(r)).collect()
}
