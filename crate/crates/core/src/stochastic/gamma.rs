use rand::Rng;
use rand_distr::StandardNormal;

use super::StochasticError;

/// Marsaglia–Tsang squeeze/rejection sampler for `Γ(shape, 1)`.
/// Shapes below one sample `Γ(shape+1)` and multiply by `U^{1/shape}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaSampler {
    shape: f64,
    d: f64,
    c: f64,
    boost: Option<f64>,
}

impl GammaSampler {
    pub fn new(shape: f64) -> Result<Self, StochasticError> {
        if !(shape > 0.0 && shape.is_finite()) {
            return Err(StochasticError::NonPositiveShape(shape.to_string()));
        }
        let (base, boost) = if shape < 1.0 { (shape + 1.0, Some(shape.recip())) } else { (shape, None) };
        let d = base - 1.0 / 3.0;
        Ok(GammaSampler {
            shape,
            d,
            c: 1.0 / (9.0 * d).sqrt(),
            boost,
        })
    }

    pub fn shape(&self) -> f64 {
        self.shape
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let x = self.sample_base(rng);
        match self.boost {
            Some(inv_shape) => x * rng.random::<f64>().powf(inv_shape),
            None => x,
        }
    }

    fn sample_base<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        loop {
            let z: f64 = rng.sample(StandardNormal);
            let v = 1.0 + self.c * z;
            if v <= 0.0 {
                continue;
            }
            let v = v * v * v;
            let u: f64 = rng.random();
            let z2 = z * z;
            if u < 1.0 - 0.0331 * z2 * z2 {
                return self.d * v;
            }
            if u.ln() < 0.5 * z2 + self.d * (1.0 - v + v.ln()) {
                return self.d * v;
            }
        }
    }
}

/// One draw from `Γ(shape, 1)`.
pub fn sample_gamma<R: Rng + ?Sized>(shape: f64, rng: &mut R) -> Result<f64, StochasticError> {
    Ok(GammaSampler::new(shape)?.sample(rng))
}
