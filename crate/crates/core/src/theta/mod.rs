//! Slopes on a torus, θ-graphs as Farey triangles, flips, the action of GL₂(ℤ), and lens
//! space complexity.

mod distance;
mod gl2;
mod lens;
mod slope;

pub use distance::{any_triangle_containing, flip_distance, flip_path, star_distance};
pub use gl2::Gl2;
pub use lens::{
    digit_sum, lens_census, lens_complexity, lens_complexity_by_flips, scan_bound, LensCensus, LensSpace,
    MAX_CENSUS_COMPLEXITY,
};
pub use slope::{is_theta, Slope, ThetaGraph};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ThetaError {
    #[error("{0}/{1} is not a primitive vector")]
    NotPrimitive(i64, i64),
    #[error("slopes {0:?} are not a Farey triangle")]
    NotTheta([Slope; 3]),
    #[error("slope {0} is not in {1}")]
    NotInTheta(Slope, ThetaGraph),
    #[error("determinant {0} is not ±1")]
    NotUnimodular(i64),
    #[error("L({0},{1}) is not a lens space")]
    NotLens(u64, u64),
    #[error("complexity bound {0} exceeds the census limit")]
    CensusBound(usize),
    #[error("cannot parse {0:?}")]
    Parse(String),
}
