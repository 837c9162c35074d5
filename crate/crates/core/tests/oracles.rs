use monodelta::decompose::standard_prime_decomposition;
use monodelta::oracle::{
    self, bounded_closure_decide, box_polys, decomposition_grid_check, delta_decide, grid_vectors,
    random_generators, random_vector, rwm_closure_decide, wm_closure_decide, WmClosureTable,
};
use monodelta::text::parse_monomial;
use monodelta::{
    CharVector, ClosureCheck, ClosureKind, ClosureProperty, ClosureSearchCaps, ExpPoly, ExpVector,
    IdealPresentation, OracleCaps, Verdict,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn m(s: &str, n: usize) -> ExpVector {
    parse_monomial(s, n).unwrap()
}

fn caps() -> OracleCaps {
    OracleCaps::default()
}

#[test]
fn example_4_1_by_fixpoint() {
    let gens = [m("y1^2", 2), m("y2^2", 2)];
    let expect = [
        ("y1^{x+1}", true),
        ("y2^{x+1}", true),
        ("1", false),
        ("y1", false),
        ("y1^x", false),
        ("y2", false),
        ("y2^x", false),
        ("y1*y2", false),
    ];
    for (v, want) in expect {
        assert_eq!(
            wm_closure_decide(&m(v, 2), &gens, &caps()).unwrap(),
            want,
            "{v}"
        );
    }
}

#[test]
fn fixpoint_agrees_with_fast_well_mixed_at_wider_caps() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let polys = box_polys(3, 6);
    for _ in 0..300 {
        let n = rng.gen_range(1..=2);
        let gens = random_generators(&mut rng, n, 3, 4, 3);
        let ideal = IdealPresentation::new(n, ClosureKind::WellMixed, gens.clone()).unwrap();
        let v = random_vector(&mut rng, n, &polys);
        assert_eq!(
            wm_closure_decide(&v, &gens, &caps()).unwrap(),
            ideal.member(&v).unwrap(),
            "{v} against {gens:?}"
        );
    }
}

#[test]
fn table_agrees_with_single_queries() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10 {
        let gens = random_generators(&mut rng, 2, 2, 3, 3);
        let table = WmClosureTable::new(2, 2, 3, &gens, 1_000_000).unwrap();
        for v in grid_vectors(2, 2, 3) {
            assert_eq!(
                table.contains(&v).unwrap(),
                wm_closure_decide(&v, &gens, &caps()).unwrap()
            );
        }
        let listed = table.members();
        assert!(listed
            .iter()
            .all(|v| wm_closure_decide(v, &gens, &caps()).unwrap()));
    }
}

#[test]
fn factored_radical_oracle_agrees_with_scaled_fixpoint() {
    // √⟨S⟩ ∋ v iff some m·v lies in ⟨S⟩; check against the vector fixpoint
    // whenever the multiples fit the caps
    let wide = OracleCaps {
        max_degree: 3,
        max_coeff_sum: 9,
        max_states: 2_000_000,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let polys = box_polys(2, 2);
    for _ in 0..200 {
        let n = rng.gen_range(1..=2);
        let gens = random_generators(&mut rng, n, 2, 3, 2);
        let v = random_vector(&mut rng, n, &polys);
        let bound = gens
            .iter()
            .flat_map(|u| u.coords())
            .map(|c| c.weight() as u64)
            .max()
            .unwrap()
            .max(1);
        let literal = (1..=bound).any(|k| {
            let kv = v.checked_scale(k).unwrap();
            wm_closure_decide(&kv, &gens, &wide).unwrap()
        });
        assert_eq!(
            rwm_closure_decide(&v, &gens, &caps()).unwrap(),
            literal,
            "{v} against {gens:?}"
        );
    }
}

#[test]
fn bounded_searches_agree_with_fast_paths() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let polys = box_polys(3, 3);
    let wide = OracleCaps {
        max_degree: 6,
        max_coeff_sum: 6,
        max_states: 1_000_000,
    };
    for _ in 0..500 {
        let n = rng.gen_range(1..=3);
        let gens = random_generators(&mut rng, n, 3, 3, 3);
        let v = random_vector(&mut rng, n, &polys);
        for kind in [
            ClosureKind::Radical,
            ClosureKind::Reflexive,
            ClosureKind::Perfect,
        ] {
            let fast = IdealPresentation::new(n, kind, gens.clone())
                .unwrap()
                .member(&v)
                .unwrap();
            let verdict = bounded_closure_decide(&v, &gens, kind, &wide).unwrap();
            let expected = if fast {
                Verdict::Member
            } else {
                Verdict::NotMember
            };
            assert_eq!(verdict, expected, "{kind} {v} against {gens:?}");
        }
        let delta = IdealPresentation::new(n, ClosureKind::Delta, gens.clone()).unwrap();
        assert_eq!(delta.member(&v).unwrap(), delta_decide(&v, &gens).unwrap());
    }
}

#[test]
fn enlarging_caps_never_loses_members() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let polys = box_polys(2, 2);
    for _ in 0..300 {
        let n = rng.gen_range(1..=2);
        let gens = random_generators(&mut rng, n, 3, 3, 2);
        let v = random_vector(&mut rng, n, &polys);
        for kind in [ClosureKind::Reflexive, ClosureKind::Perfect] {
            let mut previous = false;
            for d in 2..=6 {
                let c = OracleCaps {
                    max_degree: d,
                    max_coeff_sum: d as u64,
                    max_states: 1_000_000,
                };
                let now = bounded_closure_decide(&v, &gens, kind, &c)
                    .unwrap()
                    .is_member();
                assert!(!previous || now, "{kind} {v} flipped at caps {d}");
                previous = now;
            }
        }
        let small = OracleCaps {
            max_degree: 2,
            max_coeff_sum: 2,
            max_states: 1_000_000,
        };
        if wm_closure_decide(&v, &gens, &small).unwrap() {
            assert!(wm_closure_decide(&v, &gens, &caps()).unwrap());
        }
    }
}

#[test]
fn false_at_caps_is_reported_when_the_search_is_short() {
    let gens = [m("y1^{x^3}*y2", 2)];
    let short = OracleCaps {
        max_degree: 2,
        max_coeff_sum: 6,
        max_states: 1_000_000,
    };
    assert_eq!(
        bounded_closure_decide(&m("y2^x", 2), &gens, ClosureKind::Perfect, &short).unwrap(),
        Verdict::FalseAtCaps
    );
    assert_eq!(
        bounded_closure_decide(&m("y1", 2), &gens, ClosureKind::Reflexive, &short).unwrap(),
        Verdict::FalseAtCaps
    );
    // g = 1 + x + x^2 + x^3 is needed to cover both x^3 and 1
    assert_eq!(
        bounded_closure_decide(&m("y1*y2", 2), &gens, ClosureKind::Perfect, &short).unwrap(),
        Verdict::FalseAtCaps
    );
    assert_eq!(
        bounded_closure_decide(&m("y1*y2", 2), &gens, ClosureKind::Perfect, &caps()).unwrap(),
        Verdict::Member
    );
}

/// Oracle membership in the closure of `kind`, definitive at the caps used.
fn closure_oracle(kind: ClosureKind, v: &ExpVector, gens: &[ExpVector]) -> bool {
    let wide = OracleCaps {
        max_degree: 8,
        max_coeff_sum: 8,
        max_states: 1_000_000,
    };
    match kind {
        ClosureKind::RadicalWellMixed => rwm_closure_decide(v, gens, &wide).unwrap(),
        k => {
            let verdict = bounded_closure_decide(v, gens, k, &wide).unwrap();
            assert_ne!(verdict, Verdict::FalseAtCaps);
            verdict.is_member()
        }
    }
}

#[test]
fn closure_checks_are_confirmed_by_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let probes1 = grid_vectors(1, 2, 2);
    let probes2 = grid_vectors(2, 2, 2);
    let props = [
        ClosureProperty::Radical,
        ClosureProperty::Reflexive,
        ClosureProperty::Perfect,
        ClosureProperty::RadicalWellMixed,
    ];
    let mut outcomes = [0usize; 3];
    for round in 0..120 {
        let n = 1 + round % 2;
        let gens = random_generators(&mut rng, n, 2, 2, 3);
        let ideal = IdealPresentation::new(n, ClosureKind::Delta, gens.clone()).unwrap();
        for prop in props {
            match ideal
                .is_closed_under(prop, &ClosureSearchCaps::default())
                .unwrap()
            {
                ClosureCheck::No(w) => {
                    outcomes[0] += 1;
                    assert!(closure_oracle(prop.kind(), &w, &gens), "{prop} {w}");
                    assert!(!delta_decide(&w, &gens).unwrap(), "{prop} {w}");
                }
                ClosureCheck::Yes => {
                    outcomes[1] += 1;
                    let probes = if n == 1 { &probes1 } else { &probes2 };
                    for v in probes {
                        if closure_oracle(prop.kind(), v, &gens) {
                            assert!(delta_decide(v, &gens).unwrap(), "{prop} claims closed, {v}");
                        }
                    }
                }
                ClosureCheck::Inconclusive => outcomes[2] += 1,
            }
        }
    }
    assert!(outcomes[0] > 0 && outcomes[1] > 0, "{outcomes:?}");
}

#[test]
fn primes_are_recognized() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    let polys = box_polys(3, 3);
    for _ in 0..200 {
        let n = rng.gen_range(1..=3);
        let b: Vec<i64> = (0..n).map(|_| rng.gen_range(-1..=2)).collect();
        if b.iter().all(|&e| e < 0) {
            continue;
        }
        let b = CharVector::new(b).unwrap();
        let mut gens: Vec<ExpVector> = (0..n)
            .filter(|&i| b.get(i) >= 0)
            .map(|i| ExpVector::single(n, i, ExpPoly::x_pow(b.get(i) as usize)))
            .collect();
        for _ in 0..3 {
            let w = random_vector(&mut rng, n, &polys);
            let inside = (0..n).any(|i| b.get(i) >= 0 && w.coord(i).deg() >= b.get(i));
            if inside {
                gens.push(w);
            }
        }
        let ideal = IdealPresentation::new(n, ClosureKind::Delta, gens).unwrap();
        assert_eq!(ideal.is_prime().unwrap(), Some(b.clone()));
        // and membership is exactly the threshold test
        for v in grid_vectors(n, 3, 1) {
            let inside = (0..n).any(|i| b.get(i) >= 0 && v.coord(i).deg() >= b.get(i));
            assert_eq!(ideal.member(&v).unwrap(), inside);
        }
    }
}

#[test]
fn non_primes_are_rejected() {
    for (n, gens) in [
        (2, vec!["y1*y2"]),
        (2, vec!["y1", "y2^2"]),
        (1, vec!["y1^2"]),
        (1, vec!["y1^{x+1}"]),
        (2, vec!["y1^x", "y1*y2"]),
    ] {
        let gens = gens.iter().map(|g| m(g, n)).collect();
        let ideal = IdealPresentation::new(n, ClosureKind::Delta, gens).unwrap();
        assert_eq!(ideal.is_prime().unwrap(), None, "{ideal:?}");
    }
}

#[test]
fn decomposition_grid_check_on_random_ideals() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let grid_caps = OracleCaps {
        max_degree: 3,
        max_coeff_sum: 1,
        max_states: 1_000_000,
    };
    for _ in 0..40 {
        let n = rng.gen_range(1..=3);
        let gens = random_generators(&mut rng, n, 3, 3, 4);
        let ideal = IdealPresentation::new(n, ClosureKind::RadicalWellMixed, gens).unwrap();
        let d = standard_prime_decomposition(&ideal).unwrap();
        assert!(decomposition_grid_check(&ideal, &d, &grid_caps)
            .unwrap()
            .is_empty());
    }
    let big = OracleCaps {
        max_degree: 3,
        max_coeff_sum: 6,
        max_states: 1000,
    };
    let ideal = IdealPresentation::new(3, ClosureKind::RadicalWellMixed, vec![m("y1", 3)]).unwrap();
    let d = standard_prime_decomposition(&ideal).unwrap();
    assert!(matches!(
        decomposition_grid_check(&ideal, &d, &big),
        Err(monodelta::Error::CapExceeded(_))
    ));
}

#[test]
fn verification_report_is_seed_deterministic() {
    let config = oracle::VerifyConfig {
        arities: vec![2],
        max_degree: 2,
        max_coeff_sum: 2,
        sets_per_arity: 4,
        seed: 5,
        ..Default::default()
    };
    let a = oracle::run_verification(&config, 1).unwrap();
    let b = oracle::run_verification(&config, 1).unwrap();
    assert_eq!(a, b);
    assert!(a.disagreements.is_empty());
}
