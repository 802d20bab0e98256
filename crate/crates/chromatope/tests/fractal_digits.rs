//! Box-set iteration checked against the digit characterization: a cell
//! survives level n of rule (d, m) exactly when every base-3 digit
//! position has at most m middle digits across the axes. The oracle
//! enumerates the full 3^(d*n) grid and tests digits directly.

use chromatope::exact::rat;
use chromatope::fractal::{
    fractal_color_rep, fractal_dimension, iterate, level_ceiling, measure_proxy, product,
    MengerRule, TriadicBoxSet,
};

/// Direct digit-test enumeration of level n of rule (d, m).
fn digit_oracle(d: usize, m: usize, n: u32) -> Vec<Vec<u16>> {
    let grid = 3u32.pow(n) as u16;
    let mut kept = Vec::new();
    let mut cell = vec![0u16; d];
    loop {
        let survives = (0..n).all(|pos| {
            let divisor = 3u16.pow(pos);
            let middles = cell.iter().filter(|&&c| (c / divisor) % 3 == 1).count();
            middles <= m
        });
        if survives {
            kept.push(cell.clone());
        }
        let mut j = d;
        loop {
            if j == 0 {
                return kept;
            }
            j -= 1;
            cell[j] += 1;
            if cell[j] < grid {
                break;
            }
            cell[j] = 0;
        }
    }
}

#[test]
fn iteration_matches_the_digit_oracle_at_the_ceilings() {
    for d in 1..=4 {
        for m in 0..d {
            let rule = MengerRule::new(d, m).unwrap();
            let n = level_ceiling(d);
            let set = iterate(&rule, n).unwrap();
            assert_eq!(set.cells(), digit_oracle(d, m, n), "rule ({d},{m})");
        }
    }
}

#[test]
fn cell_counts_follow_the_power_law() {
    let named = [(2, 1, 8u64), (3, 1, 20), (3, 2, 26), (4, 2, 72)];
    for (d, m, want) in named {
        assert_eq!(MengerRule::new(d, m).unwrap().keep_count(), want);
    }
    for d in 1..=4 {
        for m in 0..d {
            let rule = MengerRule::new(d, m).unwrap();
            let per_level = rule.keep_count();
            for n in 1..=level_ceiling(d) {
                assert_eq!(
                    iterate(&rule, n).unwrap().len() as u64,
                    per_level.pow(n),
                    "rule ({d},{m}) level {n}"
                );
            }
        }
    }
}

#[test]
fn cantor_products_reassemble_the_dust() {
    let cantor = |n| iterate(&MengerRule::new(1, 0).unwrap(), n).unwrap();
    for n in 1..=3 {
        let mut assembled: TriadicBoxSet = cantor(n);
        for d in 2..=4 {
            assembled = product(&assembled, &cantor(n)).unwrap();
            let dust = iterate(&MengerRule::new(d, 0).unwrap(), n).unwrap();
            assert_eq!(assembled.cells(), dust.cells(), "dim {d} level {n}");
        }
    }
}

#[test]
fn measure_proxies_witness_the_dimension_gap() {
    // The 4-dimensional rule keeps more than a factor 27 of cells per
    // subdivision, so 3-volume grows while 4-volume shrinks.
    let rule = MengerRule::new(4, 2).unwrap();
    let three: Vec<_> = (1..=3).map(|n| measure_proxy(&rule, 3, n)).collect();
    let four: Vec<_> = (1..=3).map(|n| measure_proxy(&rule, 4, n)).collect();
    assert_eq!(three, vec![rat(8, 3), rat(64, 9), rat(512, 27)]);
    assert!(three.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(four[0], rat(72, 81));
    assert!(four.windows(2).all(|w| w[0] > w[1]));

    let cantor = MengerRule::new(1, 0).unwrap();
    assert_eq!(measure_proxy(&cantor, 1, 3), rat(8, 27));

    assert!(fractal_dimension(&rule) > 3.0);
    assert!((fractal_dimension(&rule) - 72f64.ln() / 3f64.ln()).abs() < 1e-12);
    assert!(
        (fractal_dimension(&MengerRule::new(3, 1).unwrap()) - 2.726_833_027_860_842).abs() < 1e-12
    );
}

#[test]
fn color_rep_lifts_are_cell_exact() {
    for (d, m, n) in [(2, 0, 1), (3, 1, 1), (4, 2, 1), (3, 1, 2), (4, 2, 2)] {
        let rule = MengerRule::new(d, m).unwrap();
        let rep = fractal_color_rep(&rule, n).unwrap();
        let direct = iterate(&rule, n).unwrap();
        assert_eq!(
            rep.lift().cells(),
            direct.cells(),
            "rule ({d},{m}) level {n}"
        );
        assert_eq!(rep.base().dim(), d - 1);
    }
}
