//! Symmetry-tied 3x3 kernel parameterizations.
//!
//! A symmetry level partitions the nine positions of a 3x3 kernel into tie
//! classes that share one free parameter each. Level 0 leaves all nine
//! positions free; each higher level ties more positions and induces more
//! network invariances, down to level 4 with a shared border value and a
//! center value:
//!
//! | level | free params | kernel form                     | induced invariances            |
//! |-------|-------------|---------------------------------|--------------------------------|
//! | 0     | 9           | `[a b c; d e f; g h i]`         | none                           |
//! | 1     | 6           | `[a b a; d e d; g h g]`         | horizontal flip                |
//! | 2     | 4           | `[a b a; d e d; a b a]`         | + vertical flip                |
//! | 3     | 3           | `[a b a; b e b; a b a]`         | + quarter-turn rotations       |
//! | 4     | 2           | `[a a a; a e a; a a a]`         | + approximate other rotations  |
//!
//! `expand_kernel` maps free parameters to the full 3x3 kernel;
//! `fold_gradient` is its adjoint, summing a full-kernel gradient over each
//! tie class. Free parameters are ordered alphabetically by the letters above,
//! which fixes the checkpoint layout.

use crate::error::{Error, Result};
use crate::tensor::Tensor;
use crate::transforms;

/// One of the five kernel symmetry levels (0..=4).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymmetryLevel(u8);

/// Kernel positions in row-major order: position `3*row + col`.
type TieClasses = &'static [&'static [usize]];

const CLASSES_L0: TieClasses = &[&[0], &[1], &[2], &[3], &[4], &[5], &[6], &[7], &[8]];
const CLASSES_L1: TieClasses = &[&[0, 2], &[1], &[3, 5], &[4], &[6, 8], &[7]];
const CLASSES_L2: TieClasses = &[&[0, 2, 6, 8], &[1, 7], &[3, 5], &[4]];
const CLASSES_L3: TieClasses = &[&[0, 2, 6, 8], &[1, 3, 5, 7], &[4]];
const CLASSES_L4: TieClasses = &[&[0, 1, 2, 3, 5, 6, 7, 8], &[4]];

impl SymmetryLevel {
    pub const ALL: [SymmetryLevel; 5] = [
        SymmetryLevel(0),
        SymmetryLevel(1),
        SymmetryLevel(2),
        SymmetryLevel(3),
        SymmetryLevel(4),
    ];

    pub fn new(level: u8) -> Result<SymmetryLevel> {
        if level > 4 {
            return Err(Error::InvalidLevel(level));
        }
        Ok(SymmetryLevel(level))
    }

    pub fn index(self) -> u8 {
        self.0
    }

    /// Tie classes of this level, each a sorted list of kernel positions.
    pub fn tie_classes(self) -> TieClasses {
        match self.0 {
            0 => CLASSES_L0,
            1 => CLASSES_L1,
            2 => CLASSES_L2,
            3 => CLASSES_L3,
            _ => CLASSES_L4,
        }
    }

    /// Number of free parameters per 3x3 kernel: 9, 6, 4, 3, 2 for levels 0-4.
    pub fn free_param_count(self) -> usize {
        self.tie_classes().len()
    }
}

impl std::fmt::Display for SymmetryLevel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Expand free parameters to the full 3x3 kernel (row-major).
///
/// Every position takes the value of its tie class, so the map is linear in
/// `params`.
pub fn expand_kernel(params: &[f64], level: SymmetryLevel) -> Result<[f64; 9]> {
    let classes = level.tie_classes();
    if params.len() != classes.len() {
        return Err(Error::ParamCount {
            level: level.index(),
            expected: classes.len(),
            actual: params.len(),
        });
    }
    let mut kernel = [0.0; 9];
    for (value, class) in params.iter().zip(classes) {
        for &pos in *class {
            kernel[pos] = *value;
        }
    }
    Ok(kernel)
}

/// Adjoint of [`expand_kernel`]: sum a full 3x3 kernel gradient over each tie
/// class, yielding one gradient component per free parameter.
pub fn fold_gradient(full_grad: &[f64; 9], level: SymmetryLevel) -> Vec<f64> {
    level
        .tie_classes()
        .iter()
        .map(|class| class.iter().map(|&pos| full_grad[pos]).sum())
        .collect()
}

/// True iff all positions within each tie class of `level` hold equal values.
pub fn is_symmetric(kernel: &[f64; 9], level: SymmetryLevel) -> bool {
    level
        .tie_classes()
        .iter()
        .all(|class| class.iter().all(|&pos| kernel[pos] == kernel[class[0]]))
}

/// An element of the dihedral group of the square grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GridTransform {
    Identity,
    HFlip,
    VFlip,
    Rot90,
    Rot180,
    Rot270,
    Transpose,
    AntiTranspose,
}

const GROUP_TRIVIAL: &[GridTransform] = &[GridTransform::Identity];
const GROUP_HFLIP: &[GridTransform] = &[GridTransform::Identity, GridTransform::HFlip];
const GROUP_FLIPS: &[GridTransform] = &[
    GridTransform::Identity,
    GridTransform::HFlip,
    GridTransform::VFlip,
    GridTransform::Rot180,
];
const GROUP_DIHEDRAL: &[GridTransform] = &[
    GridTransform::Identity,
    GridTransform::HFlip,
    GridTransform::VFlip,
    GridTransform::Rot90,
    GridTransform::Rot180,
    GridTransform::Rot270,
    GridTransform::Transpose,
    GridTransform::AntiTranspose,
];

/// The grid transforms a network built at `level` is invariant under.
///
/// Level 0 induces nothing beyond the identity; level 1 adds the horizontal
/// flip; level 2 both flips (hence the half-turn); levels 3 and 4 the full
/// eight-element group generated by the horizontal flip and the quarter turn.
pub fn symmetry_group(level: SymmetryLevel) -> &'static [GridTransform] {
    match level.index() {
        0 => GROUP_TRIVIAL,
        1 => GROUP_HFLIP,
        2 => GROUP_FLIPS,
        _ => GROUP_DIHEDRAL,
    }
}

impl GridTransform {
    /// Apply to a rank-3 image tensor. Rotations and diagonal reflections
    /// error on non-square spatial extents.
    pub fn apply(self, t: &Tensor) -> Result<Tensor> {
        match self {
            GridTransform::Identity => Ok(t.clone()),
            GridTransform::HFlip => Ok(transforms::hflip(t)),
            GridTransform::VFlip => Ok(transforms::vflip(t)),
            GridTransform::Rot90 => transforms::rot90(t),
            GridTransform::Rot180 => Ok(transforms::rot180(t)),
            GridTransform::Rot270 => transforms::rot270(t),
            GridTransform::Transpose => transforms::transpose(t),
            GridTransform::AntiTranspose => transforms::anti_transpose(t),
        }
    }

    /// Apply to a 3x3 kernel (row-major).
    pub fn apply_to_kernel(self, kernel: &[f64; 9]) -> [f64; 9] {
        let map = |y: usize, x: usize| -> (usize, usize) {
            match self {
                GridTransform::Identity => (y, x),
                GridTransform::HFlip => (y, 2 - x),
                GridTransform::VFlip => (2 - y, x),
                GridTransform::Rot90 => (x, 2 - y),
                GridTransform::Rot180 => (2 - y, 2 - x),
                GridTransform::Rot270 => (2 - x, y),
                GridTransform::Transpose => (x, y),
                GridTransform::AntiTranspose => (2 - x, 2 - y),
            }
        };
        let mut out = [0.0; 9];
        for y in 0..3 {
            for x in 0..3 {
                let (sy, sx) = map(y, x);
                out[y * 3 + x] = kernel[sy * 3 + sx];
            }
        }
        out
    }
}

/// The free parameters of one convolution layer, stored tied.
///
/// `values` has shape `(out_channels, in_channels, free_param_count)`; the
/// full 3x3 kernels exist only when expanded on demand.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricKernelParams {
    level: SymmetryLevel,
    out_channels: usize,
    in_channels: usize,
    values: Tensor,
}

impl SymmetricKernelParams {
    pub fn zeros(level: SymmetryLevel, out_channels: usize, in_channels: usize) -> Result<Self> {
        let values = Tensor::zeros(&[out_channels, in_channels, level.free_param_count()])?;
        Ok(SymmetricKernelParams {
            level,
            out_channels,
            in_channels,
            values,
        })
    }

    pub fn from_values(
        level: SymmetryLevel,
        out_channels: usize,
        in_channels: usize,
        values: Tensor,
    ) -> Result<Self> {
        let expected = [out_channels, in_channels, level.free_param_count()];
        if values.shape() != expected {
            return Err(Error::ShapeMismatch {
                expected: format!("{expected:?}"),
                actual: format!("{:?}", values.shape()),
            });
        }
        Ok(SymmetricKernelParams {
            level,
            out_channels,
            in_channels,
            values,
        })
    }

    pub fn level(&self) -> SymmetryLevel {
        self.level
    }

    pub fn out_channels(&self) -> usize {
        self.out_channels
    }

    pub fn in_channels(&self) -> usize {
        self.in_channels
    }

    pub fn values(&self) -> &Tensor {
        &self.values
    }

    pub(crate) fn values_mut(&mut self) -> &mut Tensor {
        &mut self.values
    }

    /// Free parameters of the `(out, in)` kernel slice.
    #[inline]
    pub fn slice(&self, out: usize, in_: usize) -> &[f64] {
        let n = self.level.free_param_count();
        let base = (out * self.in_channels + in_) * n;
        &self.values.data()[base..base + n]
    }

    /// Expanded 3x3 kernel of the `(out, in)` slice.
    pub fn expanded(&self, out: usize, in_: usize) -> [f64; 9] {
        expand_kernel(self.slice(out, in_), self.level).expect("stored params match level")
    }
}
