/// Mixed relative/absolute comparison used for every floating point law.
///
/// Two quantities `a` and `b` are close when
/// `|a - b| <= abs + rel * max(|a|, |b|)`. For arrays the scale is the
/// largest magnitude found in either operand, so small entries of a large
/// matrix are judged against the size of the matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            rel: 1e-9,
            abs: 1e-12,
        }
    }
}

impl Tolerance {
    pub fn new(rel: f64) -> Self {
        Tolerance {
            rel,
            ..Default::default()
        }
    }

    pub fn close(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.bound(a.abs().max(b.abs()))
    }

    pub fn close_slices(&self, a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && max_abs_diff(a, b) <= self.bound(max_abs(a).max(max_abs(b)))
    }

    /// Like [`close_slices`](Self::close_slices) but with an extra scale,
    /// for identities whose two sides may both be far smaller than the
    /// terms that produced them.
    pub fn close_slices_scaled(&self, a: &[f64], b: &[f64], scale: f64) -> bool {
        a.len() == b.len()
            && max_abs_diff(a, b) <= self.bound(max_abs(a).max(max_abs(b)).max(scale))
    }

    pub fn bound(&self, scale: f64) -> f64 {
        self.abs + self.rel * scale
    }
}

pub fn max_abs(a: &[f64]) -> f64 {
    a.iter().fold(0.0, |m, x| m.max(x.abs()))
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}
