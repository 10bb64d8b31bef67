mod common;

use common::{w, SYSTEMS};
use weylrigid::rigidity::supp::dual_gap;
use weylrigid::rigidity::{reconstruct_up_to, BoundaryOracle, CaseTag};
use weylrigid::weylchar::freudenthal_char;
use weylrigid::{Error, RootSystem, Series};

#[test]
fn matches_freudenthal_at_cutoff_three() {
    for (series, rank) in SYSTEMS {
        let rs = RootSystem::new(series, rank).unwrap();
        let mut oracle = BoundaryOracle::freudenthal(&rs);
        let fam = reconstruct_up_to(&rs, &mut oracle, 3).unwrap_or_else(|e| panic!("{series}{rank}: {e}"));
        for (lambda, row) in fam.rows() {
            assert_eq!(*row, freudenthal_char(&rs, lambda).unwrap(), "{series}{rank} {lambda}");
        }
    }
}

#[test]
fn duality_routes_are_sound() {
    for (series, rank) in SYSTEMS {
        let rs = RootSystem::new(series, rank).unwrap();
        let mut oracle = BoundaryOracle::freudenthal(&rs);
        let fam = reconstruct_up_to(&rs, &mut oracle, 3).unwrap();
        for ((lambda, mu), tag) in fam.provenance() {
            let Some(i) = tag.duality_index() else { continue };
            assert_ne!(lambda.at(i), 0);
            let gap = dual_gap(&rs, i).unwrap().to_ints().unwrap();
            let beta = rs.root_coords_int((lambda - mu).coords()).unwrap();
            let size = gap.iter().zip(&beta).filter(|(g, b)| *g - *b > 0).count();
            match tag {
                CaseTag::Duality(_) => assert!(size < rank, "{series}{rank} {lambda} {mu}"),
                // only taken when the support lemma fails for this beta
                CaseTag::InductiveDuality(_) => assert_eq!(size, rank, "{series}{rank} {lambda} {mu}"),
                _ => unreachable!(),
            }
        }
    }
}

#[test]
fn inductive_fallback_sites() {
    let mut sites = Vec::new();
    for (series, rank) in SYSTEMS {
        let rs = RootSystem::new(series, rank).unwrap();
        let mut oracle = BoundaryOracle::freudenthal(&rs);
        let fam = reconstruct_up_to(&rs, &mut oracle, 3).unwrap();
        for ((lambda, mu), tag) in fam.provenance() {
            if let CaseTag::InductiveDuality(i) = tag {
                sites.push(format!("{series}{rank} {lambda} {mu} {i}"));
            }
        }
    }
    assert_eq!(
        sites,
        [
            "B3 (0,2,0) (1,0,0) 2",
            "B3 (0,2,1) (1,0,1) 2",
            "B3 (0,3,0) (1,0,2) 2",
            "B3 (0,3,0) (1,1,0) 2",
            "C3 (0,3,0) (1,0,1) 2",
            "D4 (0,3,0,0) (1,0,1,1) 2",
        ]
    );
}

#[test]
fn deterministic() {
    for (series, rank) in [(Series::B, 3), (Series::D, 4)] {
        let rs = RootSystem::new(series, rank).unwrap();
        let a = reconstruct_up_to(&rs, &mut BoundaryOracle::freudenthal(&rs), 3).unwrap();
        let b = reconstruct_up_to(&rs, &mut BoundaryOracle::freudenthal(&rs), 3).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn frugal_from_cutoff_two() {
    for (series, rank) in SYSTEMS {
        let rs = RootSystem::new(series, rank).unwrap();
        for cutoff in [2, 3] {
            let mut oracle = BoundaryOracle::freudenthal(&rs);
            let fam = reconstruct_up_to(&rs, &mut oracle, cutoff).unwrap();
            assert!(oracle.distinct_queries() < fam.provenance().len(), "{series}{rank} cutoff {cutoff}");
        }
    }
}

#[test]
fn minuscule_rows_are_singletons() {
    for (series, rank, i) in [(Series::A, 3, 2), (Series::B, 3, 3), (Series::C, 3, 1), (Series::D, 4, 4)] {
        let rs = RootSystem::new(series, rank).unwrap();
        let omega = rs.fundamental(i);
        let fam = reconstruct_up_to(&rs, &mut BoundaryOracle::freudenthal(&rs), 1).unwrap();
        assert_eq!(fam.get(&omega).unwrap().len(), 1);
    }
}

#[test]
fn c2_hits_the_corner_guard() {
    let rs = RootSystem::new(Series::C, 2).unwrap();
    let err = reconstruct_up_to(&rs, &mut BoundaryOracle::freudenthal(&rs), 1).unwrap_err();
    assert_eq!(err, Error::InternalCaseGap { lambda: w(&[0, 1]), mu: w(&[0, 0]) });
}

#[test]
fn wrong_boundary_data_propagates() {
    // a source that lies about one boundary value yields a different family
    let rs = RootSystem::new(Series::A, 2).unwrap();
    let mut table = weylrigid::CharacterTable::new();
    let liar = |rs: &RootSystem, l: &weylrigid::Weight, m: &weylrigid::Weight| -> weylrigid::Result<i64> {
        let v = table.ensure(rs, l)?.get(m);
        Ok(if *l == w(&[2, 0]) && *m == w(&[0, 1]) { v + 1 } else { v })
    };
    let mut oracle = BoundaryOracle::new(&rs, liar);
    let fam = reconstruct_up_to(&rs, &mut oracle, 2).unwrap();
    assert_eq!(fam.get(&w(&[2, 0])).unwrap().get(&w(&[0, 1])), 2);
}
