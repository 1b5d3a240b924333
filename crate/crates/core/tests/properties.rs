//! Randomized properties spanning several modules.

mod common;

use common::Gen;
use daxcalc::{
    compare, concat, dax_value, equal_mod_kernel, negate_data, normalize, phi, reduce,
    spin_composition_value, validate, DoublePointList, GroupElement, GroupSpec, KernelSpec,
    ManifoldModel, Outcome, PresetId, RingElement, SrData, SrDisc,
};
use rand::Rng;

const CASES: u64 = 500;

fn assert_normalized(d: &SrData, m: &ManifoldModel) {
    assert!(validate(d, m).is_ok());
    let mut tubes = d.double_tubes.clone();
    tubes.dedup();
    assert_eq!(tubes, d.double_tubes, "tubes distinct and sorted");
    assert!(d.double_tubes.windows(2).all(|w| w[0] < w[1]));
    for (i, a) in d.sr_discs.iter().enumerate() {
        for b in &d.sr_discs[i + 1..] {
            assert!(
                !(a.element == b.element && a.sign == -b.sign),
                "uncancelled pair"
            );
        }
    }
    assert!(d.sr_discs.windows(2).all(|w| w[0].element <= w[1].element));
}

#[test]
fn normalize_is_idempotent_and_canonical() {
    let mut g = Gen::new(1);
    for _ in 0..CASES {
        let m = g.manifold();
        let d = g.data(&m);
        let n = normalize(&d, &m).unwrap();
        assert_normalized(&n, &m);
        assert_eq!(normalize(&n, &m).unwrap(), n);
        let mut shuffled = d.clone();
        shuffled.sr_discs.reverse();
        shuffled.double_tubes.reverse();
        assert_eq!(normalize(&shuffled, &m).unwrap(), n);
    }
}

#[test]
fn phi_is_move_invariant_and_additive() {
    let mut g = Gen::new(2);
    for _ in 0..CASES {
        let m = g.manifold();
        let (a, b) = (g.data(&m), g.data(&m));
        let pa = phi(&a, &m).unwrap();
        let pb = phi(&b, &m).unwrap();
        assert_eq!(phi(&normalize(&a, &m).unwrap(), &m).unwrap(), pa);
        let sum = phi(&concat(&a, &b, &m).unwrap(), &m).unwrap();
        assert!(equal_mod_kernel(&sum, &(&pa + &pb), &m.kernel, &m.group).unwrap());
        assert_eq!(reduce(&pa, &m.kernel, &m.group).unwrap(), pa);
    }
}

#[test]
fn concat_commutes_up_to_normalization() {
    let mut g = Gen::new(3);
    for _ in 0..CASES {
        let m = g.manifold();
        let (a, b) = (g.data(&m), g.data(&m));
        assert_eq!(
            normalize(&concat(&a, &b, &m).unwrap(), &m).unwrap(),
            normalize(&concat(&b, &a, &m).unwrap(), &m).unwrap()
        );
    }
}

#[test]
fn negated_data_cancels_in_phi() {
    let mut g = Gen::new(4);
    for _ in 0..CASES {
        let m = g.manifold();
        let d = g.data(&m);
        let inv = negate_data(&d);
        assert!(validate(&inv, &m).is_ok());
        let total = concat(&d, &inv, &m).unwrap();
        assert!(phi(&total, &m).unwrap().is_zero());
        // Without double tubes the data itself cancels.
        if d.double_tubes.is_empty() {
            assert!(normalize(&total, &m).unwrap().is_empty());
        }
    }
}

#[test]
fn compare_is_reflexive_and_symmetric() {
    let mut g = Gen::new(5);
    for _ in 0..CASES {
        let m = g.manifold();
        let (a, b) = (g.data(&m), g.data(&m));
        assert_eq!(compare(&a, &a, &m).unwrap().outcome, Outcome::Isotopic);
        let ab = compare(&a, &b, &m).unwrap();
        let ba = compare(&b, &a, &m).unwrap();
        assert_eq!(ab.outcome, ba.outcome);
        assert_eq!(ab.rule, ba.rule);
        match ab.outcome {
            Outcome::NotIsotopic => {
                assert!(!ab.difference.is_zero());
                assert_eq!(
                    reduce(&ab.difference, &m.kernel, &m.group).unwrap(),
                    ab.difference
                );
                assert!(
                    equal_mod_kernel(&ab.difference, &-&ba.difference, &m.kernel, &m.group)
                        .unwrap()
                );
            }
            _ => assert!(ab.difference.is_zero()),
        }
    }
}

#[test]
fn simply_connected_admits_only_base_disc() {
    let m = PresetId::SimplyConnected.instantiate();
    let d = SrData {
        double_tubes: vec![],
        sr_discs: vec![SrDisc::new(1, GroupElement::identity())],
    };
    assert!(validate(&d, &m).is_err());
    assert_eq!(
        compare(&SrData::empty(), &SrData::empty(), &m)
            .unwrap()
            .outcome,
        Outcome::Isotopic
    );
}

#[test]
fn knotted_discs_have_distinct_invariants() {
    let m = PresetId::BoundaryConnectSum.instantiate();
    let values: Vec<RingElement> = (1..=20)
        .map(|i| {
            let g = m.group.pow(&m.group.generator("t").unwrap(), i).unwrap();
            phi(&SrData::sr_disc(1, g), &m).unwrap()
        })
        .collect();
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            assert_ne!(values[i], values[j]);
        }
    }
}

#[test]
fn pairing_is_additive_and_matches_spins() {
    let mut g = Gen::new(6);
    for _ in 0..CASES {
        let spec = g.group();
        let (a, b) = (g.points(&spec), g.points(&spec));
        let va = dax_value(&a, &spec).unwrap();
        let vb = dax_value(&b, &spec).unwrap();
        let vab = dax_value(&a.then(&b), &spec).unwrap();
        assert_eq!(vab.value, &va.value + &vb.value);
        assert_eq!(vab.dropped, va.dropped + vb.dropped);

        let spins: Vec<(i8, GroupElement)> = a
            .points
            .iter()
            .filter(|p| !p.loop_element.is_identity())
            .map(|p| (p.sign, p.loop_element.clone()))
            .collect();
        assert_eq!(spin_composition_value(&spins, &spec).unwrap(), va.value);
    }
}

/// Values of kernel maps feed an explicit kernel; later kernel maps in their
/// span must reduce to zero.
#[test]
fn kernel_map_values_land_in_explicit_kernel() {
    let mut g = Gen::new(7);
    for _ in 0..100 {
        let spec: GroupSpec = g.group();
        let maps: Vec<DoublePointList> = (0..g.rng.gen_range(1..=3))
            .map(|_| g.points(&spec))
            .collect();
        let d3: Vec<RingElement> = maps
            .iter()
            .map(|l| dax_value(l, &spec).unwrap().value)
            .filter(|v| !v.is_zero())
            .collect();
        if d3.is_empty() {
            continue;
        }
        let kernel = KernelSpec::ExplicitList(d3.clone());
        // A composite kernel map: concatenate all maps, some twice.
        let mut composite = DoublePointList::default();
        for l in &maps {
            for _ in 0..g.rng.gen_range(0..=2) {
                composite = composite.then(l);
            }
        }
        let v = dax_value(&composite, &spec).unwrap().value;
        assert!(reduce(&v, &kernel, &spec).unwrap().is_zero());
    }
}
