//! Inverse standard normal CDF.
//!
//! Confidence intervals need normal quantiles and nothing else from
//! statistics land, so the crate carries its own rational-approximation
//! inverse CDF instead of a dependency. The algorithm splits `(0, 1)` into
//! a central region and two tail regions, each served by a degree-7
//! rational polynomial; absolute error is below 1e-9 everywhere (in fact
//! near machine precision).

// The published coefficients are kept digit for digit.
#![allow(clippy::excessive_precision)]

/// Quantile function of the standard normal distribution.
///
/// Defined for `p` in the open interval `(0, 1)`; returns negative or
/// positive infinity at the endpoints and NaN outside.
pub fn inverse_normal_cdf(p: f64) -> f64 {
    if !(0.0..=1.0).contains(&p) {
        return f64::NAN;
    }
    if p == 0.0 {
        return f64::NEG_INFINITY;
    }
    if p == 1.0 {
        return f64::INFINITY;
    }

    const A: [f64; 8] = [
        3.387_132_872_796_366_608e0,
        1.331_416_678_917_843_774_5e2,
        1.971_590_950_306_551_442_7e3,
        1.373_169_376_550_946_112_5e4,
        4.592_195_393_154_987_145_7e4,
        6.726_577_092_700_870_085_3e4,
        3.343_057_558_358_812_810_5e4,
        2.509_080_928_730_122_672_7e3,
    ];
    const B: [f64; 8] = [
        1.0,
        4.231_333_070_160_091_125_2e1,
        6.871_870_074_920_579_083e2,
        5.394_196_021_424_751_107_7e3,
        2.121_379_430_158_659_586_7e4,
        3.930_789_580_009_271_061e4,
        2.872_908_573_572_194_267_4e4,
        5.226_495_278_852_854_561e3,
    ];
    const C: [f64; 8] = [
        1.423_437_110_749_683_577_34e0,
        4.630_337_846_156_545_295_9e0,
        5.769_497_221_460_691_405_5e0,
        3.647_848_324_763_204_605_04e0,
        1.270_458_252_452_368_382_58e0,
        2.417_807_251_774_506_117_7e-1,
        2.272_384_498_926_918_458_33e-2,
        7.745_450_142_783_414_076_4e-4,
    ];
    const D: [f64; 8] = [
        1.0,
        2.053_191_626_637_758_821_87e0,
        1.676_384_830_183_803_849_4e0,
        6.897_673_349_851_000_045_5e-1,
        1.481_039_764_274_800_745_9e-1,
        1.519_866_656_361_645_719_66e-2,
        5.475_938_084_995_344_946e-4,
        1.050_750_071_644_416_843_24e-9,
    ];
    const E: [f64; 8] = [
        6.657_904_643_501_103_777_2e0,
        5.463_784_911_164_114_369_9e0,
        1.784_826_539_917_291_335_8e0,
        2.965_605_718_285_048_912_3e-1,
        2.653_218_952_657_612_309_3e-2,
        1.242_660_947_388_078_438_6e-3,
        2.711_555_568_743_487_578_15e-5,
        2.010_334_399_292_288_132_65e-7,
    ];
    const F: [f64; 8] = [
        1.0,
        5.998_322_065_558_879_376_9e-1,
        1.369_298_809_227_358_053_1e-1,
        1.487_536_129_085_061_485_25e-2,
        7.868_691_311_456_132_591e-4,
        1.846_318_317_510_054_681_8e-5,
        1.421_511_758_316_445_888_7e-7,
        2.044_263_103_389_939_785_64e-15,
    ];

    fn rational(num: &[f64; 8], den: &[f64; 8], r: f64) -> f64 {
        let mut n = num[7];
        let mut d = den[7];
        for k in (0..7).rev() {
            n = n * r + num[k];
            d = d * r + den[k];
        }
        n / d
    }

    let q = p - 0.5;
    if q.abs() <= 0.425 {
        let r = 0.180625 - q * q;
        return q * rational(&A, &B, r);
    }

    let tail_p = if q < 0.0 { p } else { 1.0 - p };
    let mut r = (-tail_p.ln()).sqrt();
    let value = if r <= 5.0 {
        r -= 1.6;
        rational(&C, &D, r)
    } else {
        r -= 5.0;
        rational(&E, &F, r)
    };
    if q < 0.0 {
        -value
    } else {
        value
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use statrs::distribution::{ContinuousCDF, Normal};

    #[test]
    fn matches_reference_quantiles() {
        assert!((inverse_normal_cdf(0.975) - 1.959963984540054).abs() < 1e-9);
        assert!((inverse_normal_cdf(1.0 - 0.05 / 6.0) - 2.394).abs() < 5e-4);
        assert!((inverse_normal_cdf(0.5)).abs() < 1e-15);
    }

    #[test]
    fn agrees_with_independent_oracle_on_a_grid() {
        let normal = Normal::new(0.0, 1.0).unwrap();
        let mut grid = vec![
            1e-12, 1e-9, 1e-6, 1e-4, 0.001, 0.01, 0.025, 0.05, 0.1, 0.25, 0.4, 0.5,
        ];
        let upper: Vec<f64> = grid.iter().map(|p| 1.0 - p).collect();
        grid.extend(upper);
        grid.push(1.0 - 0.05 / 6.0);
        for &p in &grid {
            let ours = inverse_normal_cdf(p);
            let reference = normal.inverse_cdf(p);
            assert!(
                (ours - reference).abs() < 1e-9,
                "p = {p}: {ours} vs {reference}"
            );
        }
    }

    #[test]
    fn round_trips_through_the_cdf() {
        let normal = Normal::new(0.0, 1.0).unwrap();
        for k in 1..200 {
            let p = k as f64 / 200.0;
            let back = normal.cdf(inverse_normal_cdf(p));
            // Tolerance is set by the oracle's erf accuracy, not ours.
            assert!((back - p).abs() < 1e-9, "p = {p}: round trip {back}");
        }
    }

    #[test]
    fn endpoints_and_bad_inputs() {
        assert_eq!(inverse_normal_cdf(0.0), f64::NEG_INFINITY);
        assert_eq!(inverse_normal_cdf(1.0), f64::INFINITY);
        assert!(inverse_normal_cdf(-0.1).is_nan());
        assert!(inverse_normal_cdf(1.1).is_nan());
        assert!(inverse_normal_cdf(f64::NAN).is_nan());
    }

    #[test]
    fn antisymmetric_in_p() {
        for &p in &[0.001, 0.023, 0.2, 0.41, 0.499] {
            let lo = inverse_normal_cdf(p);
            let hi = inverse_normal_cdf(1.0 - p);
            assert!((lo + hi).abs() < 1e-9, "p = {p}: {lo} vs {hi}");
        }
    }
}
