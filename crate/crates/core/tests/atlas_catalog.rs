use geodex::atlas::{atlas_get, pg2_incidence, symplectic_quadrangle, CATALOG};
use geodex::symmetry::are_isomorphic;

#[test]
fn every_catalog_entry_validates() {
    for name in CATALOG {
        let record = atlas_get(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(record.name, name);
    }
}

#[test]
fn hexagon_is_not_a_plane_or_quadrangle() {
    let hex = atlas_get("hexagon-q2").unwrap().graph;
    assert!(hex.is_generalized_polygon(6));
    assert!(!are_isomorphic(&hex, &pg2_incidence(2).unwrap()));
    assert!(!are_isomorphic(&hex, &symplectic_quadrangle(2).unwrap()));
}
