use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use qtrig_core::reference::trig_matrix;
use qtrig_core::{apply_transform, Complex64, Error, TransformKind};

fn reference(kind: TransformKind, n: u32, x: &[f64]) -> Vec<f64> {
    let m = trig_matrix(kind, n).unwrap();
    let xc: Vec<_> = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    m.mul_vec(&xc).unwrap().iter().map(|z| z.re).collect()
}

#[test]
fn random_unit_vectors_match_the_reference_product() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for kind in TransformKind::ALL {
        for n in 1..=6 {
            let len = kind.size(n);
            for _ in 0..100 {
                let mut x: Vec<f64> = (0..len).map(|_| rng.random_range(-1.0..1.0)).collect();
                let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
                x.iter_mut().for_each(|v| *v /= norm);
                let got = apply_transform(kind, &x).unwrap();
                let want = reference(kind, n, &x);
                let err = got
                    .iter()
                    .zip(&want)
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max);
                assert!(err <= 1e-10, "{kind} n={n}: {err:e}");
            }
        }
    }
}

#[test]
fn unnormalized_input_is_scaled_back() {
    let x = [3.0, -1.0, 0.5, 2.0, 0.0, 7.0, -4.0, 1.0];
    for kind in TransformKind::ALL.into_iter().filter(|k| k.size(3) == 8) {
        let got = apply_transform(kind, &x).unwrap();
        let want = reference(kind, 3, &x);
        for (a, b) in got.iter().zip(&want) {
            assert!((a - b).abs() <= 1e-12, "{kind}");
        }
    }
}

#[test]
fn dct2_of_first_basis_vector() {
    let got = apply_transform("dct2".parse().unwrap(), &[1.0, 0.0]).unwrap();
    for v in got {
        assert!((v - std::f64::consts::FRAC_1_SQRT_2).abs() <= 1e-15);
    }
}

#[test]
fn bad_lengths_are_rejected() {
    let dct1: TransformKind = "dct1".parse().unwrap();
    assert!(matches!(
        apply_transform(dct1, &[0.0; 4]),
        Err(Error::InvalidLength { len: 4, .. })
    ));
    let dst1: TransformKind = "dst1".parse().unwrap();
    assert_eq!(apply_transform(dst1, &[2.0]).unwrap().len(), 1);
    let dst4: TransformKind = "dst4".parse().unwrap();
    assert!(apply_transform(dst4, &[1.0]).is_err());
    assert!(apply_transform(dst4, &[]).is_err());
}

#[test]
fn zero_vector_maps_to_zero() {
    let dct3: TransformKind = "dct3".parse().unwrap();
    assert_eq!(apply_transform(dct3, &[0.0; 4]).unwrap(), vec![0.0; 4]);
}
