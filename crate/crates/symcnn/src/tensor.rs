//! Dense row-major `f64` tensors of rank 1 to 4.
//!
//! The last axis is fastest. Images use the axis convention
//! `(channels, height, width)`, batches `(batch, channels, height, width)`.
//! There is no broadcasting and there are no views: every operation returns a
//! freshly owned tensor, and a tensor is treated as immutable once built.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<f64>,
}

fn validate_shape(shape: &[usize]) -> Result<()> {
    if shape.is_empty() || shape.len() > 4 {
        return Err(Error::InvalidShape {
            shape: shape.to_vec(),
            reason: "rank must be 1..=4".into(),
        });
    }
    if shape.iter().any(|&d| d == 0) {
        return Err(Error::InvalidShape {
            shape: shape.to_vec(),
            reason: "extents must be positive".into(),
        });
    }
    Ok(())
}

impl Tensor {
    /// All-zero tensor of the given shape.
    pub fn zeros(shape: &[usize]) -> Result<Tensor> {
        validate_shape(shape)?;
        let len = shape.iter().product();
        Ok(Tensor {
            shape: shape.to_vec(),
            data: vec![0.0; len],
        })
    }

    /// Wrap `values` in a tensor of the given shape.
    pub fn from_values(shape: &[usize], values: Vec<f64>) -> Result<Tensor> {
        validate_shape(shape)?;
        let len: usize = shape.iter().product();
        if values.len() != len {
            return Err(Error::ShapeMismatch {
                expected: format!("{len} values for shape {shape:?}"),
                actual: format!("{} values", values.len()),
            });
        }
        Ok(Tensor {
            shape: shape.to_vec(),
            data: values,
        })
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub(crate) fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<f64> {
        self.data
    }

    /// Extents of a rank-3 tensor as `(channels, height, width)`.
    pub fn dims3(&self) -> Result<(usize, usize, usize)> {
        match self.shape[..] {
            [c, h, w] => Ok((c, h, w)),
            _ => Err(Error::ShapeMismatch {
                expected: "rank-3 tensor".into(),
                actual: format!("shape {:?}", self.shape),
            }),
        }
    }

    /// Element `(c, h, w)` of a rank-3 tensor, at flat offset `c*H*W + h*W + w`.
    #[inline]
    pub fn at3(&self, c: usize, h: usize, w: usize) -> f64 {
        debug_assert_eq!(self.rank(), 3);
        let (hh, ww) = (self.shape[1], self.shape[2]);
        self.data[(c * hh + h) * ww + w]
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Stack two rank-3 tensors along the channel axis; `a`'s channels first.
    pub fn concat_channels(a: &Tensor, b: &Tensor) -> Result<Tensor> {
        let (ca, ha, wa) = a.dims3()?;
        let (cb, hb, wb) = b.dims3()?;
        if (ha, wa) != (hb, wb) {
            return Err(Error::ShapeMismatch {
                expected: format!("spatial extents {ha}x{wa}"),
                actual: format!("{hb}x{wb}"),
            });
        }
        let mut data = Vec::with_capacity((ca + cb) * ha * wa);
        data.extend_from_slice(&a.data);
        data.extend_from_slice(&b.data);
        Tensor::from_values(&[ca + cb, ha, wa], data)
    }

    /// Channels `lo..hi` of a rank-3 tensor as a new tensor.
    pub fn slice_channels(&self, lo: usize, hi: usize) -> Result<Tensor> {
        let (c, h, w) = self.dims3()?;
        if lo >= hi || hi > c {
            return Err(Error::ShapeMismatch {
                expected: format!("channel range within 0..{c}"),
                actual: format!("{lo}..{hi}"),
            });
        }
        let plane = h * w;
        Tensor::from_values(&[hi - lo, h, w], self.data[lo * plane..hi * plane].to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeros_examples() {
        assert_eq!(Tensor::zeros(&[2, 2]).unwrap().data(), &[0.0; 4]);
        assert_eq!(Tensor::zeros(&[3]).unwrap().data(), &[0.0; 3]);
        assert_eq!(Tensor::zeros(&[1, 1, 1, 1]).unwrap().data(), &[0.0]);
    }

    #[test]
    fn zeros_rejects_bad_shapes() {
        assert!(Tensor::zeros(&[]).is_err());
        assert!(Tensor::zeros(&[2, 0]).is_err());
        assert!(Tensor::zeros(&[1, 1, 1, 1, 1]).is_err());
    }

    #[test]
    fn from_values_examples() {
        let v = Tensor::from_values(&[3], vec![1.0, 2.0, 3.0]).unwrap();
        assert_eq!(v.data(), &[1.0, 2.0, 3.0]);
        let m = Tensor::from_values(&[1, 2, 2], vec![1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(m.at3(0, 1, 0), 3.0);
        assert!(Tensor::from_values(&[2], vec![1.0]).is_err());
    }

    #[test]
    fn ramp_indexing_convention() {
        let (c, h, w) = (2, 3, 4);
        let ramp: Vec<f64> = (0..c * h * w).map(|i| i as f64).collect();
        let t = Tensor::from_values(&[c, h, w], ramp).unwrap();
        for ci in 0..c {
            for hi in 0..h {
                for wi in 0..w {
                    assert_eq!(t.at3(ci, hi, wi), (ci * h * w + hi * w + wi) as f64);
                }
            }
        }
    }

    #[test]
    fn concat_channels_examples() {
        let a = Tensor::from_values(&[1, 2, 2], vec![1.0; 4]).unwrap();
        let b = Tensor::from_values(&[1, 2, 2], vec![0.0; 4]).unwrap();
        let c = Tensor::concat_channels(&a, &b).unwrap();
        assert_eq!(c.shape(), &[2, 2, 2]);
        assert_eq!(&c.data()[..4], &[1.0; 4]);
        assert_eq!(&c.data()[4..], &[0.0; 4]);

        let big = Tensor::concat_channels(
            &Tensor::zeros(&[3, 32, 32]).unwrap(),
            &Tensor::zeros(&[30, 32, 32]).unwrap(),
        )
        .unwrap();
        assert_eq!(big.shape(), &[33, 32, 32]);

        let bad = Tensor::concat_channels(
            &Tensor::zeros(&[1, 2, 2]).unwrap(),
            &Tensor::zeros(&[1, 3, 3]).unwrap(),
        );
        assert!(bad.is_err());
    }

    #[test]
    fn concat_then_slice_recovers_inputs() {
        let a = Tensor::from_values(&[2, 2, 2], (0..8).map(f64::from).collect()).unwrap();
        let b = Tensor::from_values(&[1, 2, 2], (8..12).map(f64::from).collect()).unwrap();
        let c = Tensor::concat_channels(&a, &b).unwrap();
        assert_eq!(c.slice_channels(0, 2).unwrap(), a);
        assert_eq!(c.slice_channels(2, 3).unwrap(), b);
    }
}
