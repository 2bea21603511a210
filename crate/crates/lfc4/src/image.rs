//! HDR image and 4D light-field data model.
//!
//! Samples are scene-referred linear light, stored as `f64` for all math
//! paths; files hold 32-bit floats (see [`crate::pfm`]). Images are
//! immutable after construction and safe to share across threads.

use crate::{Error, Result};

/// A scene-referred HDR image. Row-major, channel-interleaved, top row first.
#[derive(Debug, Clone, PartialEq)]
pub struct HdrImage {
    width: usize,
    height: usize,
    channels: usize,
    data: Vec<f64>,
}

impl HdrImage {
    /// Builds an image from interleaved samples, validating shape and
    /// finiteness. `channels` must be 1 (grayscale) or 3 (RGB).
    pub fn new(width: usize, height: usize, channels: usize, data: Vec<f64>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::Dimension(format!(
                "image dimensions must be positive, got {width}x{height}"
            )));
        }
        if channels != 1 && channels != 3 {
            return Err(Error::Invalid(format!(
                "channel count must be 1 or 3, got {channels}"
            )));
        }
        let expected = width * height * channels;
        if data.len() != expected {
            return Err(Error::Dimension(format!(
                "sample count {} does not match {width}x{height}x{channels} = {expected}",
                data.len()
            )));
        }
        if let Some(pos) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::Invalid(format!(
                "non-finite sample {} at index {pos}",
                data[pos]
            )));
        }
        Ok(Self {
            width,
            height,
            channels,
            data,
        })
    }

    /// Constant-valued image.
    pub fn filled(width: usize, height: usize, channels: usize, value: f64) -> Result<Self> {
        Self::new(width, height, channels, vec![value; width * height * channels])
    }

    /// Builds an image by evaluating `f(x, y, channel)` at every sample.
    pub fn from_fn(
        width: usize,
        height: usize,
        channels: usize,
        mut f: impl FnMut(usize, usize, usize) -> f64,
    ) -> Result<Self> {
        let mut data = Vec::with_capacity(width * height * channels);
        for y in 0..height {
            for x in 0..width {
                for c in 0..channels {
                    data.push(f(x, y, c));
                }
            }
        }
        Self::new(width, height, channels, data)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    /// Interleaved samples, row-major from the top row.
    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn sample(&self, x: usize, y: usize, channel: usize) -> f64 {
        debug_assert!(x < self.width && y < self.height && channel < self.channels);
        self.data[(y * self.width + x) * self.channels + channel]
    }

    /// Extracts one channel as a contiguous plane.
    pub fn channel_plane(&self, channel: usize) -> Vec<f64> {
        assert!(channel < self.channels, "channel {channel} out of range");
        self.data
            .iter()
            .skip(channel)
            .step_by(self.channels)
            .copied()
            .collect()
    }

    /// Reassembles an image from per-channel planes.
    pub fn from_planes(width: usize, height: usize, planes: &[Vec<f64>]) -> Result<Self> {
        let channels = planes.len();
        for (c, plane) in planes.iter().enumerate() {
            if plane.len() != width * height {
                return Err(Error::Dimension(format!(
                    "plane {c} has {} samples, expected {}",
                    plane.len(),
                    width * height
                )));
            }
        }
        let mut data = Vec::with_capacity(width * height * channels);
        for i in 0..width * height {
            for plane in planes {
                data.push(plane[i]);
            }
        }
        Self::new(width, height, channels, data)
    }

    /// Same shape, every sample clamped to be non-negative. Used when lossy
    /// decode output re-enters the linear-light domain.
    pub fn clamped_non_negative(&self) -> Self {
        Self {
            width: self.width,
            height: self.height,
            channels: self.channels,
            data: self.data.iter().map(|v| v.max(0.0)).collect(),
        }
    }

    pub(crate) fn same_shape(&self, other: &Self) -> bool {
        self.width == other.width
            && self.height == other.height
            && self.channels == other.channels
    }
}

/// An M-view HDR light field on an S x T angular grid. View (s, t) is the
/// sub-aperture image for aperture position row `s`, column `t`; the grid is
/// stored row-major in `s`.
#[derive(Debug, Clone, PartialEq)]
pub struct LightField4D {
    angular_rows: usize,
    angular_cols: usize,
    views: Vec<HdrImage>,
}

impl LightField4D {
    /// Assembles a light field, enforcing that every view has identical
    /// spatial dimensions and channel count.
    pub fn new(angular_rows: usize, angular_cols: usize, views: Vec<HdrImage>) -> Result<Self> {
        if angular_rows == 0 || angular_cols == 0 {
            return Err(Error::Dimension(
                "angular grid must have at least one view".into(),
            ));
        }
        if views.len() != angular_rows * angular_cols {
            return Err(Error::Dimension(format!(
                "expected {} views for a {}x{} grid, got {}",
                angular_rows * angular_cols,
                angular_rows,
                angular_cols,
                views.len()
            )));
        }
        let first = &views[0];
        for (i, view) in views.iter().enumerate() {
            if !view.same_shape(first) {
                return Err(Error::Dimension(format!(
                    "view ({}, {}) is {}x{}x{}, expected {}x{}x{}",
                    i / angular_cols,
                    i % angular_cols,
                    view.width(),
                    view.height(),
                    view.channels(),
                    first.width(),
                    first.height(),
                    first.channels()
                )));
            }
        }
        Ok(Self {
            angular_rows,
            angular_cols,
            views,
        })
    }

    pub fn angular_rows(&self) -> usize {
        self.angular_rows
    }

    pub fn angular_cols(&self) -> usize {
        self.angular_cols
    }

    /// Total view count M = S x T.
    pub fn num_views(&self) -> usize {
        self.views.len()
    }

    pub fn spatial_width(&self) -> usize {
        self.views[0].width()
    }

    pub fn spatial_height(&self) -> usize {
        self.views[0].height()
    }

    pub fn channels(&self) -> usize {
        self.views[0].channels()
    }

    pub fn view(&self, s: usize, t: usize) -> &HdrImage {
        assert!(s < self.angular_rows && t < self.angular_cols);
        &self.views[s * self.angular_cols + t]
    }

    /// Views in row-major (s, t) order.
    pub fn views(&self) -> &[HdrImage] {
        &self.views
    }

    /// Clamps every view to non-negative samples.
    pub fn clamped_non_negative(&self) -> Self {
        Self {
            angular_rows: self.angular_rows,
            angular_cols: self.angular_cols,
            views: self.views.iter().map(HdrImage::clamped_non_negative).collect(),
        }
    }
}
