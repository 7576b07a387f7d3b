use qtrig_core::{scaling_table, CostModel, Variant};

#[test]
fn linear_mcx_counts_fit_a_quadratic() {
    let t = scaling_table(&Variant::ALL, 2..=10, CostModel::LinearMcx).unwrap();
    assert_eq!(t.fits.len(), 4);
    for f in &t.fits {
        assert!(f.max_relative_residual <= 0.05, "{f:?}");
    }
}

#[test]
fn abstract_count_over_n_squared_is_nonincreasing_past_six() {
    let t = scaling_table(&Variant::ALL, 6..=16, CostModel::Abstract).unwrap();
    for v in Variant::ALL {
        let ratios: Vec<f64> = t
            .rows
            .iter()
            .filter(|r| r.variant == v)
            .map(|r| r.abstract_count as f64 / (r.n * r.n) as f64)
            .collect();
        assert!(ratios.windows(2).all(|w| w[1] <= w[0]), "{v}: {ratios:?}");
    }
}

#[test]
fn all_variants_small_range_has_twelve_rows() {
    let t = scaling_table(&Variant::ALL, 2..=4, CostModel::Abstract).unwrap();
    assert_eq!(t.rows.len(), 12);
}
