//! Positive rational weight functions on the faces of a complex.
//!
//! Weights are kept as exact rationals so that degree matrices, boundary
//! products, and rank computations can run without rounding; floating-point
//! views are derived on demand where square roots are unavoidable.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, ToPrimitive, Zero};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

pub(crate) fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub(crate) fn rat_to_f64(r: &BigRational) -> Result<f64> {
    r.to_f64()
        .filter(|v| v.is_finite())
        .ok_or_else(|| Error::InvalidParameter(format!("rational {r} is not representable as f64")))
}

/// A map assigning a positive rational weight to every face of a complex,
/// including `∅`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightFunction {
    values: BTreeMap<Face, BigRational>,
}

impl WeightFunction {
    /// The constant weight 1 on every face.
    pub fn constant(x: &SimplicialComplex) -> Self {
        let values = x.all_faces().map(|f| (f.clone(), BigRational::one())).collect();
        WeightFunction { values }
    }

    /// The top-cofacet count: `w(σ) = |{τ ∈ X(d) : σ ⊆ τ}|`.
    ///
    /// Requires the complex to be pure of dimension `d`, which guarantees
    /// every face sits under at least one top face, so all weights are
    /// positive. Top faces themselves get weight 1.
    pub fn pure_cofacet(x: &SimplicialComplex, d: i32) -> Result<Self> {
        if !x.is_pure(d)? {
            return Err(Error::NotPure { d });
        }
        let mut counts: BTreeMap<Face, u64> = BTreeMap::new();
        for top in x.faces_of_dim(d) {
            for s in top.all_subsets() {
                *counts.entry(s).or_insert(0) += 1;
            }
        }
        let values = counts
            .into_iter()
            .map(|(f, c)| (f, rat_int(c as i64)))
            .collect();
        Ok(WeightFunction { values })
    }

    /// Weight 1 everywhere except on the explicitly listed faces.
    ///
    /// Every listed face must belong to the complex and carry a positive
    /// value.
    pub fn with_overrides(
        x: &SimplicialComplex,
        overrides: &BTreeMap<Face, BigRational>,
    ) -> Result<Self> {
        let mut w = Self::constant(x);
        for (f, v) in overrides {
            if !x.contains(f) {
                return Err(Error::MissingFace(f.to_string()));
            }
            if *v <= BigRational::zero() {
                return Err(Error::NonPositiveWeight {
                    face: f.to_string(),
                    value: v.to_string(),
                });
            }
            w.values.insert(f.clone(), v.clone());
        }
        Ok(w)
    }

    pub fn get(&self, f: &Face) -> Result<&BigRational> {
        self.values.get(f).ok_or_else(|| Error::MissingFace(f.to_string()))
    }

    pub fn get_f64(&self, f: &Face) -> Result<f64> {
        rat_to_f64(self.get(f)?)
    }

    /// The induced weight on `lk(X, η)`: `w_η(σ) = w(σ ∪ η)`.
    pub fn link(&self, x: &SimplicialComplex, eta: &Face) -> Result<WeightFunction> {
        let lk = x.link(eta)?;
        let mut values = BTreeMap::new();
        for f in lk.all_faces() {
            values.insert(f.clone(), self.get(&f.union(eta))?.clone());
        }
        Ok(WeightFunction { values })
    }

    /// The diagonal of `W_k`: weights of the faces of dimension `k` in face
    /// order.
    pub fn diag(&self, x: &SimplicialComplex, k: i32) -> Result<Vec<BigRational>> {
        x.faces_of_dim(k).iter().map(|f| self.get(f).cloned()).collect()
    }
}
