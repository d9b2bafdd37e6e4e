//! Synthetic bivariate samples on the unit square with known cdfs.
//!
//! | family                    | cdf `F(s, t)`                         |
//! |---------------------------|---------------------------------------|
//! | `independent_uniform`     | `s t`                                 |
//! | `comonotone_uniform`      | `min(s, t)`                           |
//! | `countermonotone_uniform` | `max(0, s + t - 1)`                   |
//! | `scaled_uniform:c`        | `min(s / c, 1) min(t / c, 1)`         |
//! | `gaussian_copula:rho`     | bivariate normal cdf at `(q(s), q(t))` |

use std::fmt;
use std::str::FromStr;

use rand::distributions::Open01;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::sample::BivariateSample;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GeneratorFamily {
    IndependentUniform,
    ComonotoneUniform,
    CountermonotoneUniform,
    /// `c (U, V)` with independent uniforms, `0 < c <= 1`.
    ScaledUniform(f64),
    /// Gaussian copula with correlation `rho` and uniform marginals.
    GaussianCopula(f64),
}

impl GeneratorFamily {
    pub fn validate(&self) -> Result<()> {
        match *self {
            GeneratorFamily::ScaledUniform(c) if !(c > 0.0 && c <= 1.0) => Err(
                Error::InvalidGenerator(format!("scale must lie in (0, 1], got {c}")),
            ),
            GeneratorFamily::GaussianCopula(rho) if !(rho > -1.0 && rho < 1.0) => Err(
                Error::InvalidGenerator(format!("correlation must lie in (-1, 1), got {rho}")),
            ),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for GeneratorFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorFamily::IndependentUniform => f.write_str("independent_uniform"),
            GeneratorFamily::ComonotoneUniform => f.write_str("comonotone_uniform"),
            GeneratorFamily::CountermonotoneUniform => f.write_str("countermonotone_uniform"),
            GeneratorFamily::ScaledUniform(c) => write!(f, "scaled_uniform:{c}"),
            GeneratorFamily::GaussianCopula(rho) => write!(f, "gaussian_copula:{rho}"),
        }
    }
}

/// Accepts `name`, `name:param` or `name(param)`.
impl FromStr for GeneratorFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, param) = match s.find([':', '(']) {
            Some(i) => (&s[..i], Some(s[i + 1..].trim_end_matches(')').trim())),
            None => (s, None),
        };
        let number = |p: Option<&str>| -> Result<f64> {
            let p =
                p.ok_or_else(|| Error::InvalidGenerator(format!("{name} needs a parameter")))?;
            p.parse()
                .map_err(|_| Error::InvalidGenerator(format!("bad parameter {p:?} for {name}")))
        };
        let family = match (name, param) {
            ("independent_uniform", None) => GeneratorFamily::IndependentUniform,
            ("comonotone_uniform", None) => GeneratorFamily::ComonotoneUniform,
            ("countermonotone_uniform", None) => GeneratorFamily::CountermonotoneUniform,
            ("scaled_uniform", p) => GeneratorFamily::ScaledUniform(number(p)?),
            ("gaussian_copula", p) => GeneratorFamily::GaussianCopula(number(p)?),
            _ => return Err(Error::InvalidGenerator(format!("unknown generator {s:?}"))),
        };
        family.validate()?;
        Ok(family)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeneratorSpec {
    pub family: GeneratorFamily,
    pub seed: u64,
}

/// `n` i.i.d. draws, reproducible from `spec.seed`.
pub fn generate<T: Scalar>(spec: &GeneratorSpec, n: usize) -> Result<BivariateSample<T>> {
    spec.family.validate()?;
    if n == 0 {
        return Err(Error::InvalidGenerator(
            "sample size must be positive".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let points = (0..n)
        .map(|_| {
            let u: f64 = rng.sample(Open01);
            let v: f64 = rng.sample(Open01);
            let (x, y) = match spec.family {
                GeneratorFamily::IndependentUniform => (u, v),
                GeneratorFamily::ComonotoneUniform => (u, u),
                GeneratorFamily::CountermonotoneUniform => (u, 1.0 - u),
                GeneratorFamily::ScaledUniform(c) => (c * u, c * v),
                GeneratorFamily::GaussianCopula(rho) => {
                    let z =
                        rho * normal_quantile(u) + (1.0 - rho * rho).sqrt() * normal_quantile(v);
                    (u, normal_cdf(z))
                }
            };
            (T::lit(x), T::lit(y).min(T::one()).max(T::zero()))
        })
        .collect();
    BivariateSample::new(points)
}

/// Standard normal cdf through the complementary error function.
///
/// `erfc` uses the Chebyshev-fitted approximation of Numerical Recipes
/// (`erfcc`), fractional error below 1.2e-7 everywhere.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * erfc(-x / std::f64::consts::SQRT_2)
}

fn erfc(x: f64) -> f64 {
    let z = x.abs();
    let t = 1.0 / (1.0 + 0.5 * z);
    let poly = -1.265_512_23
        + t * (1.000_023_68
            + t * (0.374_091_96
                + t * (0.096_784_18
                    + t * (-0.186_288_06
                        + t * (0.278_868_07
                            + t * (-1.135_203_98
                                + t * (1.488_515_87 + t * (-0.822_152_23 + t * 0.170_872_77))))))));
    let ans = t * (-z * z + poly).exp();
    if x >= 0.0 {
        ans
    } else {
        2.0 - ans
    }
}

/// Standard normal quantile, Acklam's rational approximation (relative error
/// below 1.15e-9) on `(0, 1)`.
pub fn normal_quantile(p: f64) -> f64 {
    const A: [f64; 6] = [
        -3.969_683_028_665_376e1,
        2.209_460_984_245_205e2,
        -2.759_285_104_469_687e2,
        1.383_577_518_672_69e2,
        -3.066_479_806_614_716e1,
        2.506_628_277_459_239,
    ];
    const B: [f64; 5] = [
        -5.447_609_879_822_406e1,
        1.615_858_368_580_409e2,
        -1.556_989_798_598_866e2,
        6.680_131_188_771_972e1,
        -1.328_068_155_288_572e1,
    ];
    const C: [f64; 6] = [
        -7.784_894_002_430_293e-3,
        -3.223_964_580_411_365e-1,
        -2.400_758_277_161_838,
        -2.549_732_539_343_734,
        4.374_664_141_464_968,
        2.938_163_982_698_783,
    ];
    const D: [f64; 4] = [
        7.784_695_709_041_462e-3,
        3.224_671_290_700_398e-1,
        2.445_134_137_142_996,
        3.754_408_661_907_416,
    ];
    const P_LOW: f64 = 0.024_25;

    let tail = |q: f64| {
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    };
    if p <= 0.0 {
        return f64::NEG_INFINITY;
    }
    if p >= 1.0 {
        return f64::INFINITY;
    }
    if p < P_LOW {
        tail((-2.0 * p.ln()).sqrt())
    } else if p <= 1.0 - P_LOW {
        let q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    } else {
        -tail((-2.0 * (1.0 - p).ln()).sqrt())
    }
}
