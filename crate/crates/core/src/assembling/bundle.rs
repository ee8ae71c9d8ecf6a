//! Torus bundles over the circle.

use crate::assembling::{AssemblyError, Geometry};
use crate::theta::Gl2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct BundleClass {
    pub geometry: Geometry,
    /// Least `k` with `Aᵏ = I`, for periodic monodromy.
    pub order: Option<u32>,
    /// Conjugacy normal form of the monodromy.
    pub normal_form: Gl2,
    /// Normal form of the bundle: `A` and `A⁻¹` give the same manifold, so the smaller of
    /// their normal forms.
    pub monodromy: Gl2,
}

/// Periodic monodromy gives a flat manifold; otherwise `|tr| = 2` with `det = 1` gives Nil and
/// everything else is Anosov and gives Sol.
pub fn classify_torus_bundle(a: [[i64; 2]; 2]) -> Result<BundleClass, AssemblyError> {
    let a = Gl2::new(a).map_err(AssemblyError::Theta)?;
    let order = a.order();
    let geometry = match order {
        Some(_) => Geometry::Flat,
        None if a.det() == 1 && a.trace().abs() == 2 => Geometry::Nil,
        None => Geometry::Sol,
    };
    let normal_form = a.conjugacy_normal_form();
    let inverse_form = a.inverse().conjugacy_normal_form();
    let monodromy = [normal_form, inverse_form].into_iter().min_by_key(|g| g.normal_key()).expect("two forms");
    Ok(BundleClass { geometry, order, normal_form, monodromy })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bundles() {
        let golden = classify_torus_bundle([[1, 1], [1, 0]]).unwrap();
        assert_eq!(golden.geometry, Geometry::Sol);
        assert_eq!(golden.normal_form.entries(), [[1, 1], [1, 0]]);
        let inverse = classify_torus_bundle([[0, 1], [1, -1]]).unwrap();
        assert_eq!(inverse.normal_form.entries(), [[0, 1], [1, -1]]);
        assert_eq!(inverse.monodromy.entries(), [[1, 1], [1, 0]]);
        let swap = classify_torus_bundle([[0, 1], [1, 0]]).unwrap();
        assert_eq!((swap.geometry, swap.order), (Geometry::Flat, Some(2)));
        assert_eq!(classify_torus_bundle([[1, 1], [0, 1]]).unwrap().geometry, Geometry::Nil);
        assert_eq!(classify_torus_bundle([[2, 1], [1, 1]]).unwrap().geometry, Geometry::Sol);
        assert!(classify_torus_bundle([[2, 0], [0, 1]]).is_err());
    }
}
