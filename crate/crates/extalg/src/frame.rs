//! Coordinate frames: invertible matrices inducing monomial bases.
//!
//! A frame F = (f_1 | … | f_n) induces the basis f_A = ⋀_{a∈A} f_a of each
//! Λ^r. Frames carry an opaque identity token; mixing two frames in a wedge
//! or span is an error, never an implicit conversion. Compounds of F and
//! F⁻¹ are cached per degree behind a lock, so shared frames stay cheap.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;

static NEXT_FRAME_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FrameId {
    /// The identity matrix; any two standard frames of equal dimension are
    /// the same frame.
    Standard,
    Custom(u64),
}

struct FrameInner {
    ground_n: usize,
    matrix: RatMatrix,
    id: FrameId,
    inverse: OnceLock<RatMatrix>,
    compounds: Mutex<HashMap<usize, Arc<RatMatrix>>>,
    inverse_compounds: Mutex<HashMap<usize, Arc<RatMatrix>>>,
}

#[derive(Clone)]
pub struct BasisFrame(Arc<FrameInner>);

impl BasisFrame {
    /// The standard frame E: the identity matrix on ℚ^n.
    pub fn standard(ground_n: usize) -> Self {
        BasisFrame(Arc::new(FrameInner {
            ground_n,
            matrix: RatMatrix::identity(ground_n),
            id: FrameId::Standard,
            inverse: OnceLock::new(),
            compounds: Mutex::new(HashMap::new()),
            inverse_compounds: Mutex::new(HashMap::new()),
        }))
    }

    /// Frame from an explicit matrix; rejects non-square or singular input.
    pub fn from_matrix(matrix: RatMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NonSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        if matrix.det()?.is_zero() {
            return Err(Error::Singular);
        }
        let n = matrix.rows();
        Ok(BasisFrame(Arc::new(FrameInner {
            ground_n: n,
            matrix,
            id: FrameId::Custom(NEXT_FRAME_ID.fetch_add(1, Ordering::Relaxed)),
            inverse: OnceLock::new(),
            compounds: Mutex::new(HashMap::new()),
            inverse_compounds: Mutex::new(HashMap::new()),
        })))
    }

    pub fn ground_n(&self) -> usize {
        self.0.ground_n
    }

    pub fn id(&self) -> FrameId {
        self.0.id
    }

    pub fn is_standard(&self) -> bool {
        self.0.id == FrameId::Standard
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.0.matrix
    }

    pub fn inverse(&self) -> &RatMatrix {
        self.0
            .inverse
            .get_or_init(|| self.0.matrix.invert().expect("frame is invertible"))
    }

    /// compound(F, r): column B holds the standard monomial coordinates of
    /// the frame monomial f_B.
    pub fn compound(&self, r: usize) -> Result<Arc<RatMatrix>> {
        let mut cache = self.0.compounds.lock().unwrap();
        if let Some(c) = cache.get(&r) {
            return Ok(c.clone());
        }
        let c = Arc::new(self.0.matrix.compound(r)?);
        cache.insert(r, c.clone());
        Ok(c)
    }

    /// compound(F⁻¹, r), which equals compound(F, r)⁻¹ by multiplicativity
    /// of compounds; used to pull standard coordinates back into F.
    pub fn inverse_compound(&self, r: usize) -> Result<Arc<RatMatrix>> {
        let mut cache = self.0.inverse_compounds.lock().unwrap();
        if let Some(c) = cache.get(&r) {
            return Ok(c.clone());
        }
        let c = Arc::new(self.inverse().compound(r)?);
        cache.insert(r, c.clone());
        Ok(c)
    }

    pub fn same_frame(&self, other: &BasisFrame) -> bool {
        self.0.ground_n == other.0.ground_n && self.0.id == other.0.id
    }

    pub fn check_compatible(&self, other: &BasisFrame) -> Result<()> {
        if self.same_frame(other) {
            Ok(())
        } else {
            Err(Error::FrameMismatch)
        }
    }
}

impl std::fmt::Debug for BasisFrame {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BasisFrame(n={}, id={:?})", self.0.ground_n, self.0.id)
    }
}

impl PartialEq for BasisFrame {
    fn eq(&self, other: &Self) -> bool {
        self.same_frame(other)
    }
}

impl Eq for BasisFrame {}
