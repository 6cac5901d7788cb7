use catalog::{build, default_catalog, load, save, AlgebraSpec, CatalogError, Family, HopfFile, Num};
use exactla::{Field, SparseVec};
use hopfcore::Twist;

const Q: Field = Field::Rational;
const F7: Field = Field::Prime(7);

#[test]
fn every_catalog_algebra_passes_the_axioms() {
    for spec in default_catalog() {
        let h = build(&spec).unwrap();
        assert!(h.verify().all_pass(), "{}", spec.name());
    }
    for spec in [AlgebraSpec::group(&[2, 2], Q), AlgebraSpec::dual_group(&[4], Q), AlgebraSpec::group(&[1], F7)] {
        assert!(build(&spec).unwrap().verify().all_pass());
    }
}

#[test]
fn group_algebra_c2() {
    let h = build(&AlgebraSpec::group(&[2], Q)).unwrap();
    assert_eq!(h.dim(), 2);
    assert!(h.is_cocommutative());
    assert!(h.antipode().is_identity());
}

#[test]
fn dual_of_group_algebra_is_the_function_algebra() {
    for (orders, f) in [(vec![2], Q), (vec![3], F7), (vec![2, 2], Q), (vec![4], Q)] {
        let d = build(&AlgebraSpec::group(&orders, f)).unwrap().dual();
        assert_eq!(d, build(&AlgebraSpec::dual_group(&orders, f)).unwrap());
    }
}

#[test]
fn taft_at_minus_one_is_sweedler() {
    for f in [Q, F7] {
        let t = build(&AlgebraSpec::taft(2, -1, f)).unwrap();
        assert_eq!(t, build(&AlgebraSpec::sweedler(f)).unwrap());
    }
}

#[test]
fn sweedler_square_of_antipode() {
    let h = build(&AlgebraSpec::sweedler(Q)).unwrap();
    assert_eq!(h.dim(), 4);
    let x = h.basis_vector(2);
    assert_eq!(h.antipode_of(&h.antipode_of(&x)), x.neg());
    assert_eq!(h.antipode_order(8), Some(4));
}

#[test]
fn taft_3_over_gf7() {
    let h = build(&AlgebraSpec::taft(3, 2, F7)).unwrap();
    assert_eq!(h.dim(), 9);
    assert!(h.antipode_inv().mul(h.antipode()).is_identity());
    let s2 = h.antipode().mul(h.antipode());
    assert!(!s2.is_identity());
    // S² is conjugation h ↦ g⁻¹hg, so S²(x) = q·x and S has order 2n
    let x = h.basis_vector(3);
    assert_eq!(s2.apply(&x), x.scale(&F7.from_i64(2)));
    assert_eq!(h.antipode_order(20), Some(6));
    assert!(!h.is_commutative() && !h.is_cocommutative());
}

#[test]
fn twists_of_catalog_algebras_verify() {
    let h = build(&AlgebraSpec::taft(3, 2, F7)).unwrap();
    for w in [Twist::Op, Twist::Cop, Twist::OpCop] {
        assert!(h.twist(w).verify().all_pass());
    }
}

#[test]
fn taft_rejects_bad_parameters() {
    assert!(matches!(build(&AlgebraSpec::taft(3, 1, F7)), Err(CatalogError::NotPrimitiveRoot { .. })));
    assert!(matches!(build(&AlgebraSpec::taft(3, 2, Q)), Err(CatalogError::FieldTooSmall { .. })));
    assert!(matches!(build(&AlgebraSpec::taft(4, 2, F7)), Err(CatalogError::FieldTooSmall { .. })));
    assert!(matches!(build(&AlgebraSpec::taft(2, 1, Q)), Err(CatalogError::NotPrimitiveRoot { .. })));
    assert!(build(&AlgebraSpec::group(&[0], Q)).is_err());
    assert!(build(&AlgebraSpec { family: Family::Sweedler4, field: "p=8".into() }).is_err());
}

#[test]
fn spec_json_forms() {
    let s: AlgebraSpec = serde_json::from_str(r#"{"family":"taft","n":3,"q":"2","field":"p=7"}"#).unwrap();
    assert_eq!(s.family, Family::Taft { n: 3, q: Num::Text("2".into()) });
    assert_eq!(build(&s).unwrap().dim(), 9);
    let g: AlgebraSpec = serde_json::from_str(r#"{"family":"group_algebra","orders":[2]}"#).unwrap();
    assert_eq!(g, AlgebraSpec::group(&[2], Q));
}

#[test]
fn save_load_round_trip() {
    for spec in default_catalog() {
        let h = build(&spec).unwrap();
        assert_eq!(load(&save(&h)).unwrap(), h, "{}", spec.name());
    }
}

#[test]
fn saved_taft_file_shape() {
    let bytes = save(&build(&AlgebraSpec::taft(3, 2, F7)).unwrap());
    let v: serde_json::Value = serde_json::from_slice(&bytes).unwrap();
    assert_eq!(v["dim"], 9);
    assert_eq!(v["field"], "p=7");
    assert_eq!(v["mult"].as_array().unwrap().len(), 9);
}

#[test]
fn rational_entries_survive_transport() {
    // a fraction that reduces to an integer must land on the same exact scalar
    let h = build(&AlgebraSpec::group(&[2], Q)).unwrap();
    let mut f = HopfFile::from_tables(h.tables());
    f.unit = vec![Num::Text("2/2".into()), Num::Int(0)];
    assert_eq!(f.to_tables().unwrap(), *h.tables());
}

#[test]
fn corrupted_antipode_is_rejected() {
    let h = build(&AlgebraSpec::sweedler(Q)).unwrap();
    let mut f = HopfFile::from_tables(h.tables());
    f.antipode[3][2] = Num::Int(0);
    f.antipode[2][2] = Num::Int(1);
    let err = load(&serde_json::to_vec(&f).unwrap()).unwrap_err();
    assert!(err.to_string().contains("antipode"), "{err}");
}

#[test]
fn malformed_inputs() {
    assert!(matches!(load(b"{ not json"), Err(CatalogError::Json(_))));
    let h = build(&AlgebraSpec::group(&[2], Q)).unwrap();
    let mut f = HopfFile::from_tables(h.tables());
    f.field = "R".into();
    assert!(matches!(load(&serde_json::to_vec(&f).unwrap()), Err(CatalogError::LinAlg(_))));
    let mut f = HopfFile::from_tables(h.tables());
    f.dim = 3;
    assert!(load(&serde_json::to_vec(&f).unwrap()).is_err());
}

#[test]
fn grouplikes_of_group_algebra() {
    let h = build(&AlgebraSpec::group(&[4], Q)).unwrap();
    for i in 0..4 {
        assert!(h.coalgebra().is_grouplike(&h.basis_vector(i)));
    }
    assert!(!h.coalgebra().is_grouplike(&SparseVec::from_dense(&[Q.one(), Q.one(), Q.zero(), Q.zero()])));
}
