use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::{Error, Result};

/// Dense complex matrix in the truncated eigenbasis `{ψ₀, …, ψ_{N−1}}`.
///
/// `bandwidth` is the coupling range of the exact (untruncated) operator and
/// `trust_margin` counts the trailing rows/columns that truncation may have
/// corrupted. Products propagate both; residual norms ignore the margin.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    label: String,
    size: usize,
    data: Vec<Complex64>,
    bandwidth: usize,
    trust_margin: usize,
}

impl OperatorMatrix {
    pub fn zeros(label: &str, size: usize) -> Self {
        Self {
            label: label.into(),
            size,
            data: vec![Complex64::new(0.0, 0.0); size * size],
            bandwidth: 0,
            trust_margin: 0,
        }
    }

    pub fn identity(size: usize) -> Self {
        Self::from_diagonal("I", &vec![1.0; size])
    }

    pub fn from_diagonal(label: &str, diag: &[f64]) -> Self {
        let mut m = Self::zeros(label, diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, Complex64::new(d, 0.0));
        }
        m
    }

    /// Matrix with entries `f(i, j)` and the declared structure.
    pub fn from_fn<F>(label: &str, size: usize, bandwidth: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> Complex64,
    {
        let mut m = Self::zeros(label, size);
        for i in 0..size {
            for j in 0..size {
                m.data[i * size + j] = f(i, j);
            }
        }
        m.bandwidth = bandwidth;
        m
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = label.into();
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn bandwidth(&self) -> usize {
        self.bandwidth
    }

    pub fn trust_margin(&self) -> usize {
        self.trust_margin
    }

    pub fn with_structure(mut self, bandwidth: usize, trust_margin: usize) -> Self {
        self.bandwidth = bandwidth;
        self.trust_margin = trust_margin;
        self
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.size + j] = v;
    }

    /// Main diagonal, real parts.
    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.size).map(|i| self.get(i, i).re).collect()
    }

    fn check_size(&self, other: &Self) -> Result<()> {
        if self.size == other.size {
            Ok(())
        } else {
            Err(Error::SizeMismatch { left: self.size, right: other.size })
        }
    }

    fn zip_with<F: Fn(Complex64, Complex64) -> Complex64>(&self, other: &Self, f: F) -> Result<Self> {
        self.check_size(other)?;
        Ok(Self {
            label: String::new(),
            size: self.size,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect(),
            bandwidth: self.bandwidth.max(other.bandwidth),
            trust_margin: self.trust_margin.max(other.trust_margin),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            label: String::new(),
            data: self.data.iter().map(|&a| a * factor).collect(),
            ..self.clone()
        }
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    /// Product; the missing intermediate states only reach rows/columns
    /// within `min(bandwidths)` of the truncation edge.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.check_size(other)?;
        let n = self.size;
        let mut data = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                let row = &other.data[k * n..(k + 1) * n];
                for (out, &b) in data[i * n..(i + 1) * n].iter_mut().zip(row) {
                    *out += a * b;
                }
            }
        }
        Ok(Self {
            label: String::new(),
            size: n,
            data,
            bandwidth: self.bandwidth + other.bandwidth,
            trust_margin: self.trust_margin.max(other.trust_margin) + self.bandwidth.min(other.bandwidth),
        })
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.size;
        let mut out = Self { label: String::new(), ..self.clone() };
        for i in 0..n {
            for j in 0..n {
                out.data[i * n + j] = self.data[j * n + i].conj();
            }
        }
        out
    }

    /// Rows/columns kept by residual norms: `size − max(trust_margin, min_margin)`.
    pub fn trusted_size(&self, min_margin: usize) -> usize {
        self.size.saturating_sub(self.trust_margin.max(min_margin))
    }

    fn trusted_entries(&self, min_margin: usize) -> impl Iterator<Item = Complex64> + '_ {
        let t = self.trusted_size(min_margin);
        (0..t).flat_map(move |i| (0..t).map(move |j| self.get(i, j)))
    }

    /// Largest `|aᵢⱼ|` on the trusted block.
    pub fn max_abs_trusted(&self, min_margin: usize) -> f64 {
        self.trusted_entries(min_margin).map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_trusted(&self, min_margin: usize) -> f64 {
        libm::sqrt(self.trusted_entries(min_margin).map(|z| z.norm_sqr()).sum())
    }

    /// `max |A − A†|` on the trusted block.
    pub fn hermiticity_residual(&self, min_margin: usize) -> f64 {
        let t = self.trusted_size(min_margin);
        let mut worst = 0.0f64;
        for i in 0..t {
            for j in 0..t {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }
}

/// `AB − BA`.
pub fn commutator(a: &OperatorMatrix, b: &OperatorMatrix) -> Result<OperatorMatrix> {
    let ab = a.matmul(b)?;
    let ba = b.matmul(a)?;
    Ok(ab.sub(&ba)?.with_label("commutator"))
}
