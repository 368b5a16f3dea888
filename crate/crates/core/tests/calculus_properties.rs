use std::collections::BTreeSet;

use fock_spectra::*;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Scalar> {
    (-12i64..=12, 1i64..=4).prop_map(|(p, q)| Scalar::ratio(p, q))
}

fn multiplicity() -> impl Strategy<Value = Multiplicity> {
    prop_oneof![
        4 => (1u64..=3).prop_map(|m| Multiplicity::finite(m).unwrap()),
        1 => Just(Multiplicity::Infinite),
    ]
}

fn point_entries(max: usize) -> impl Strategy<Value = Vec<(Scalar, Multiplicity)>> {
    prop::collection::btree_map(rational(), multiplicity(), 1..=max).prop_map(|m| m.into_iter().collect())
}

fn point_spectrum(max: usize) -> impl Strategy<Value = PointSpectrum> {
    point_entries(max).prop_map(|e| PointSpectrum::new(e).unwrap())
}

fn interval() -> impl Strategy<Value = Interval> {
    (rational(), 0i64..=6, 1i64..=4).prop_map(|(lo, len, q)| {
        let hi = &lo + &Scalar::ratio(len, q);
        Interval::new(lo, hi).unwrap()
    })
}

fn spectral_data() -> impl Strategy<Value = SpectralData> {
    (
        point_spectrum(3),
        prop::collection::vec(interval(), 0..=2),
        prop::collection::vec(rational(), 0..=1),
    )
        .prop_map(|(p, iv, ep)| SpectralData::new(p, iv, ep))
}

fn shifted(data: &SpectralData, s: &Scalar) -> SpectralData {
    let points = PointSpectrum::new(data.points().entries().iter().map(|(v, m)| (v + s, *m))).unwrap();
    let intervals = data
        .essential()
        .intervals()
        .iter()
        .map(|iv| Interval::new(iv.lo() + s, iv.hi() + s).unwrap())
        .collect();
    let epoints = data.essential().points().iter().map(|p| p + s).collect();
    SpectralData::new(points, intervals, epoints)
}

fn scaled(data: &SpectralData, c: &Scalar) -> SpectralData {
    let points = PointSpectrum::new(data.points().entries().iter().map(|(v, m)| (v * c, *m))).unwrap();
    let intervals = data
        .essential()
        .intervals()
        .iter()
        .map(|iv| Interval::new(iv.lo() * c, iv.hi() * c).unwrap())
        .collect();
    let epoints = data.essential().points().iter().map(|p| p * c).collect();
    SpectralData::new(points, intervals, epoints)
}

fn as_set(u: &RealSetUnion) -> BTreeSet<Scalar> {
    assert!(u.is_finite());
    u.points().iter().cloned().collect()
}

proptest! {
    #[test]
    fn selections_respect_caps_and_sum(entries in point_entries(4), n in 0u64..=6) {
        let mults: Vec<Multiplicity> = entries.iter().map(|(_, m)| *m).collect();
        let all: Vec<SelectionCounts> = multiset_selections(&mults, n).collect();
        let distinct: BTreeSet<_> = all.iter().cloned().collect();
        prop_assert_eq!(distinct.len(), all.len());
        prop_assert!(all.windows(2).all(|w| w[0] < w[1]));
        for sel in &all {
            prop_assert_eq!(sel.total(), n);
            for (c, m) in sel.counts.iter().zip(&mults) {
                if let Some(cap) = m.cap() {
                    prop_assert!(*c <= cap);
                }
            }
        }
    }

    #[test]
    fn permutation_invariance(entries in point_entries(4), n in 0u64..=4, rot in 0usize..4) {
        let mut reordered = entries.clone();
        reordered.reverse();
        let len = reordered.len();
        reordered.rotate_left(rot % len);
        let a = PointSpectrum::new(entries).unwrap();
        let b = PointSpectrum::new(reordered).unwrap();
        prop_assert_eq!(point_spectrum_nfold_sum(&a, n).unwrap(), point_spectrum_nfold_sum(&b, n).unwrap());
        prop_assert_eq!(point_spectrum_nfold_product(&a, n).unwrap(), point_spectrum_nfold_product(&b, n).unwrap());
    }

    #[test]
    fn shift_covariance(data in spectral_data(), s in rational(), n in 0u64..=4) {
        let base = spectrum_nfold_sum(&data, n).unwrap();
        let moved = spectrum_nfold_sum(&shifted(&data, &s), n).unwrap();
        let offset = &s * &Scalar::from_integer(n as i64);
        prop_assert_eq!(moved, base.shift(&offset));
    }

    #[test]
    fn scale_covariance(data in spectral_data(), p in 1i64..=5, q in 1i64..=3, n in 0u64..=4) {
        let c = Scalar::ratio(p, q);
        let scaled_data = scaled(&data, &c);
        let sums = spectrum_nfold_sum(&scaled_data, n).unwrap();
        prop_assert_eq!(sums, spectrum_nfold_sum(&data, n).unwrap().scale(&c));
        let products = spectrum_nfold_product(&scaled_data, n).unwrap();
        prop_assert_eq!(products, spectrum_nfold_product(&data, n).unwrap().scale(&c.pow(n)));
    }

    #[test]
    fn point_spectrum_included_in_spectrum(data in spectral_data(), n in 0u64..=6) {
        let full = spectrum_nfold_sum(&data, n).unwrap();
        for x in point_spectrum_nfold_sum(data.points(), n).unwrap() {
            prop_assert!(full.contains(&x), "{} missing from {}", x, full);
        }
    }

    #[test]
    fn raising_a_multiplicity_never_removes_values(entries in point_entries(4), pick in 0usize..4, n in 0u64..=5) {
        let idx = pick % entries.len();
        let mut raised = entries.clone();
        raised[idx].1 = match raised[idx].1 {
            Multiplicity::Finite(m) => Multiplicity::finite(m.get() + 1).unwrap(),
            Multiplicity::Infinite => Multiplicity::Infinite,
        };
        let a = PointSpectrum::new(entries).unwrap();
        let b = PointSpectrum::new(raised).unwrap();
        prop_assert!(point_spectrum_nfold_sum(&a, n).unwrap().is_subset(&point_spectrum_nfold_sum(&b, n).unwrap()));
        prop_assert!(point_spectrum_nfold_product(&a, n).unwrap().is_subset(&point_spectrum_nfold_product(&b, n).unwrap()));
        let full_a = spectrum_nfold_sum(&SpectralData::discrete(a), n).unwrap();
        let full_b = spectrum_nfold_sum(&SpectralData::discrete(b), n).unwrap();
        prop_assert!(full_a.points().iter().all(|x| full_b.contains(x)));
    }

    #[test]
    fn discrete_data_coincides(p in point_spectrum(4), n in 0u64..=5) {
        let data = SpectralData::discrete(p.clone());
        prop_assert_eq!(as_set(&spectrum_nfold_sum(&data, n).unwrap()), point_spectrum_nfold_sum(&p, n).unwrap());
        prop_assert_eq!(as_set(&spectrum_nfold_product(&data, n).unwrap()), point_spectrum_nfold_product(&p, n).unwrap());
    }

    #[test]
    fn outputs_are_canonical(data in spectral_data(), n in 0u64..=4) {
        prop_assert!(spectrum_nfold_sum(&data, n).unwrap().is_canonical());
        prop_assert!(spectrum_nfold_product(&data, n).unwrap().is_canonical());
        let (d, _) = dgamma_spectrum(&data, n, None).unwrap();
        prop_assert!(d.is_canonical());
        prop_assert!(gamma_spectrum(&data, n).unwrap().is_canonical());
    }

    #[test]
    fn interval_products_associate(a in interval(), b in interval(), c in interval()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn canonicalize_preserves_membership(
        points in prop::collection::vec(rational(), 0..5),
        intervals in prop::collection::vec(interval(), 0..4),
        probe in -80i64..=80,
    ) {
        let x = Scalar::ratio(probe, 4);
        let raw = points.contains(&x) || intervals.iter().any(|iv| iv.contains(&x));
        let set = canonicalize(points, intervals);
        prop_assert!(set.is_canonical());
        prop_assert_eq!(set.contains(&x), raw);
    }

    #[test]
    fn rendering_round_trips(
        points in prop::collection::vec(rational(), 0..5),
        intervals in prop::collection::vec(interval(), 0..4),
    ) {
        let set = canonicalize(points, intervals);
        prop_assert_eq!(set.to_string().parse::<RealSetUnion>().unwrap(), set);
    }

    #[test]
    fn spectral_file_round_trips(data in spectral_data()) {
        prop_assert_eq!(parse_spectral_data(&data.to_string()).unwrap(), data);
    }

    #[test]
    fn tensor_of_copies_contains_fermionic_sector(p in point_spectrum(3), n in 1usize..=4) {
        let copies = vec![p.clone(); n];
        let free = tensor_point_spectrum_sum(&copies).unwrap();
        let fermionic = point_spectrum_nfold_sum(&p, n as u64).unwrap();
        prop_assert!(fermionic.is_subset(&free));
    }
}
