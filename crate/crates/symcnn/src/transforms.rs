//! Grid transforms of rank-3 image tensors.
//!
//! These are the maps the symmetry levels induce invariance under: horizontal
//! and vertical flips, quarter-turn rotations, and the diagonal reflections
//! that complete the dihedral group of the square. Rotations and diagonal
//! reflections require square spatial extents.

use crate::error::{Error, Result};
use crate::tensor::Tensor;

fn remap(t: &Tensor, out_hw: (usize, usize), f: impl Fn(usize, usize) -> (usize, usize)) -> Tensor {
    let (c, h, w) = t.dims3().expect("rank-3 input");
    let (oh, ow) = out_hw;
    let src = t.data();
    let mut data = vec![0.0; c * oh * ow];
    for ci in 0..c {
        let src_plane = &src[ci * h * w..(ci + 1) * h * w];
        let dst_plane = &mut data[ci * oh * ow..(ci + 1) * oh * ow];
        for y in 0..oh {
            for x in 0..ow {
                let (sy, sx) = f(y, x);
                dst_plane[y * ow + x] = src_plane[sy * w + sx];
            }
        }
    }
    Tensor::from_values(&[c, oh, ow], data).expect("valid shape")
}

fn require_square(t: &Tensor, what: &str) -> Result<(usize, usize, usize)> {
    let (c, h, w) = t.dims3()?;
    if h != w {
        return Err(Error::ShapeMismatch {
            expected: format!("square spatial extents for {what}"),
            actual: format!("{h}x{w}"),
        });
    }
    Ok((c, h, w))
}

/// Reverse the width axis of each channel.
pub fn hflip(t: &Tensor) -> Tensor {
    let (_, _, w) = t.dims3().expect("rank-3 input");
    remap(t, spatial(t), |y, x| (y, w - 1 - x))
}

/// Reverse the height axis of each channel.
pub fn vflip(t: &Tensor) -> Tensor {
    let (_, h, _) = t.dims3().expect("rank-3 input");
    remap(t, spatial(t), |y, x| (h - 1 - y, x))
}

/// Rotate each channel 90 degrees counterclockwise. Square input only.
pub fn rot90(t: &Tensor) -> Result<Tensor> {
    let (_, _, w) = require_square(t, "rot90")?;
    Ok(remap(t, spatial(t), |y, x| (x, w - 1 - y)))
}

/// Rotate each channel 180 degrees.
pub fn rot180(t: &Tensor) -> Tensor {
    let (_, h, w) = t.dims3().expect("rank-3 input");
    remap(t, spatial(t), |y, x| (h - 1 - y, w - 1 - x))
}

/// Rotate each channel 270 degrees counterclockwise. Square input only.
pub fn rot270(t: &Tensor) -> Result<Tensor> {
    let (_, h, _) = require_square(t, "rot270")?;
    Ok(remap(t, spatial(t), |y, x| (h - 1 - x, y)))
}

/// Reflect each channel across the main diagonal. Square input only.
pub fn transpose(t: &Tensor) -> Result<Tensor> {
    require_square(t, "transpose")?;
    Ok(remap(t, spatial(t), |y, x| (x, y)))
}

/// Reflect each channel across the anti-diagonal. Square input only.
pub fn anti_transpose(t: &Tensor) -> Result<Tensor> {
    let (_, h, w) = require_square(t, "anti-transpose")?;
    Ok(remap(t, spatial(t), |y, x| (w - 1 - x, h - 1 - y)))
}

fn spatial(t: &Tensor) -> (usize, usize) {
    let (_, h, w) = t.dims3().expect("rank-3 input");
    (h, w)
}
