/// Count, compensated sum and centered second moment of a sample.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct SampleStats {
    count: u64,
    sum: f64,
    compensation: f64,
    m2: f64,
}

/// Neumaier's variant of Kahan summation: adds `x` into `(sum, comp)`.
fn neumaier_add(sum: &mut f64, comp: &mut f64, x: f64) {
    let t = *sum + x;
    if sum.abs() >= x.abs() {
        *comp += (*sum - t) + x;
    } else {
        *comp += (x - t) + *sum;
    }
    *sum = t;
}

impl SampleStats {
    /// Two passes: compensated mean, then squared deviations from it.
    pub fn from_values(values: &[f64]) -> Self {
        let mut s = SampleStats::default();
        for &v in values {
            neumaier_add(&mut s.sum, &mut s.compensation, v);
        }
        s.count = values.len() as u64;
        if s.count > 0 {
            let mean = s.mean();
            let (mut m2, mut c) = (0.0, 0.0);
            for &v in values {
                neumaier_add(&mut m2, &mut c, (v - mean) * (v - mean));
            }
            s.m2 = m2 + c;
        }
        s
    }

    /// Chan et al. pairwise update.
    pub fn merge(&mut self, other: &SampleStats) {
        if other.count == 0 {
            return;
        }
        if self.count == 0 {
            *self = *other;
            return;
        }
        let (na, nb) = (self.count as f64, other.count as f64);
        let delta = other.mean() - self.mean();
        self.m2 += other.m2 + delta * delta * na * nb / (na + nb);
        neumaier_add(&mut self.sum, &mut self.compensation, other.sum);
        neumaier_add(&mut self.sum, &mut self.compensation, other.compensation);
        self.count += other.count;
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn mean(&self) -> f64 {
        (self.sum + self.compensation) / self.count as f64
    }

    /// Unbiased sample variance.
    pub fn variance(&self) -> f64 {
        if self.count < 2 {
            0.0
        } else {
            self.m2 / (self.count - 1) as f64
        }
    }

    pub fn stderr(&self) -> f64 {
        (self.variance() / self.count as f64).sqrt()
    }
}
