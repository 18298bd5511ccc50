//! The `verify` subcommands: run the brute-force oracle against every
//! closed formula and report per-check results.

use num_bigint::{BigInt, BigUint};

use colorlie::oracle::bicharacter::{BicharacterTable, FiniteAbelianGroup};
use colorlie::oracle::{
    lyndon_count, pbw_count, super_commutator, FreeAlgebraElement, LieBasis, SubalgebraBasis,
};
use colorlie::{
    color_schreier_rank, color_witt_dim, enveloping_growth_matches, enveloping_series,
    free_lie_series_from_alphabet, lie_schreier_series, restricted_enveloping_series, witt_dim,
    witt_series, Generator, GradedAlphabet, SignedDimensionSequence, TruncatedSeries,
};

use crate::output::Check;
use crate::CliError;

pub fn verify_witt(max_rank: u64, max_degree: u64) -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::new();
    for r in 1..=max_rank {
        let mut passed = true;
        let mut detail = String::new();
        for n in 1..=max_degree {
            let closed = witt_dim(r, n);
            let enumerated = lyndon_count(r as usize, n as usize).map_err(CliError::from)?;
            if closed != enumerated {
                passed = false;
                detail = format!("witt_dim({r}, {n}) = {closed} but {enumerated} Lyndon words");
                break;
            }
        }
        if passed {
            detail = format!("witt_dim({r}, n) = lyndon_count({r}, n) for n <= {max_degree}");
        }
        checks.push(Check {
            name: format!("witt-lyndon rank {r}"),
            passed,
            detail,
        });
    }
    Ok(checks)
}

pub fn verify_color_witt(max_degree: usize) -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::new();
    for (r, s) in [(1u64, 1u64), (2, 1), (1, 2)] {
        let alphabet = GradedAlphabet::free_super(r as usize, s as usize);
        let basis = LieBasis::build(&alphabet, max_degree).map_err(CliError::from)?;
        let mut passed = true;
        let mut detail = String::new();
        for n in 1..=max_degree {
            let closed = color_witt_dim(r, s, n as u64);
            let spanned = BigUint::from(basis.dim(n));
            if closed != spanned {
                passed = false;
                detail = format!("degree {n}: formula {closed}, oracle {spanned}");
                break;
            }
        }
        if passed {
            let dims: Vec<usize> = (1..=max_degree).map(|n| basis.dim(n)).collect();
            detail = format!("dims {dims:?} agree through degree {max_degree}");
        }
        checks.push(Check {
            name: format!("color-witt ({r}, {s})"),
            passed,
            detail,
        });
    }
    Ok(checks)
}

pub fn verify_pbw() -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::new();

    let order = 20;
    let mut passed = true;
    let mut detail = format!("E(H(L)) = 1/(1 - r t) at order {order} for r <= 3");
    for r in 0..=3u64 {
        let enveloping = witt_series(r, order)
            .euler_transform()
            .map_err(CliError::from)?;
        let free_assoc = TruncatedSeries::monomial(r, 1, order)
            .geom_inverse()
            .map_err(CliError::from)?;
        if enveloping != free_assoc {
            passed = false;
            detail = format!("rank {r}: Euler transform of the Witt series is not 1/(1 - {r}t)");
            break;
        }
    }
    checks.push(Check {
        name: "pbw-euler-witt".into(),
        passed,
        detail,
    });

    let alphabet = GradedAlphabet::free_super(1, 1);
    let basis = LieBasis::build(&alphabet, 5).map_err(CliError::from)?;
    let series = enveloping_series(&basis.signed_dims(), 5);
    let expected = TruncatedSeries::monomial(2, 1, 5)
        .geom_inverse()
        .map_err(CliError::from)?;
    checks.push(Check {
        name: "pbw-super (1,1)".into(),
        passed: series == expected,
        detail: format!("U(L(1,1)) series {series}"),
    });

    let sd =
        SignedDimensionSequence::from_counts(&[2, 1, 3], &[1, 2, 0]).map_err(CliError::from)?;
    let series = enveloping_series(&sd, 8);
    let mut passed = true;
    let mut detail = "monomial DP matches the Euler product through degree 8".to_string();
    for n in 0..=8usize {
        if BigInt::from(pbw_count(&sd, None, n)) != series.coeff(n) {
            passed = false;
            detail = format!("degree {n}: DP count differs from the Euler product");
            break;
        }
    }
    checks.push(Check {
        name: "pbw-count".into(),
        passed,
        detail,
    });

    let a1 = SignedDimensionSequence::from_counts(&[1], &[0]).map_err(CliError::from)?;
    let restricted = restricted_enveloping_series(&a1, 3, 4, true).map_err(CliError::from)?;
    let ok_series = restricted == TruncatedSeries::from_i64(&[1, 1, 1, 0, 0]);
    let ok_counts =
        (0..=4usize).all(|n| BigInt::from(pbw_count(&a1, Some(2), n)) == restricted.coeff(n));
    checks.push(Check {
        name: "pbw-restricted".into(),
        passed: ok_series && ok_counts,
        detail: format!("u(L) series for a1 = 1, p = 3: {restricted}"),
    });

    Ok(checks)
}

pub fn verify_jacobi_identities(
    seed: u64,
    trials: u32,
    max_degree: usize,
) -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::new();

    let group = FiniteAbelianGroup::new(vec![2, 2]).map_err(CliError::from)?;
    let table = BicharacterTable::from_generator_signs(group, vec![vec![-1, 1], vec![1, -1]])
        .map_err(CliError::from)?;
    let g = |r: Vec<u64>| table.group().element_from_residues(r).unwrap();
    let color = GradedAlphabet::new(
        table.clone(),
        vec![
            Generator {
                label: "u".into(),
                weight: 1,
                degree: g(vec![1, 0]),
            },
            Generator {
                label: "v".into(),
                weight: 1,
                degree: g(vec![0, 1]),
            },
            Generator {
                label: "w".into(),
                weight: 1,
                degree: g(vec![1, 1]),
            },
        ],
    )
    .map_err(CliError::from)?;

    let setups: [(&str, GradedAlphabet); 3] = [
        ("jacobi classical (2,0)", GradedAlphabet::classical(2)),
        ("jacobi super (1,1)", GradedAlphabet::free_super(1, 1)),
        ("jacobi color Z2xZ2", color),
    ];
    for (name, alphabet) in setups {
        let report =
            colorlie::verify_jacobi(&alphabet, trials, max_degree, seed).map_err(CliError::from)?;
        let detail = if report.passed() {
            format!(
                "{} trials at max degree {} (seed {})",
                report.trials, report.max_degree, report.seed
            )
        } else {
            let f = &report.failures[0];
            format!("trial {} violated {}: {}", f.trial, f.identity, f.witness)
        };
        checks.push(Check {
            name: name.into(),
            passed: report.passed(),
            detail,
        });
    }
    Ok(checks)
}

pub fn verify_schreier_consistency() -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::new();
    let order = 15;
    let h_x = TruncatedSeries::monomial(2, 1, order);
    let witt = witt_series(2, order);

    for (name, quotient, describe) in [
        (
            "schreier commutator",
            TruncatedSeries::monomial(2, 1, order),
            "K = [L, L]",
        ),
        (
            "schreier codim-1",
            TruncatedSeries::monomial(1, 1, order),
            "Lazard elimination",
        ),
    ] {
        let z = lie_schreier_series(&h_x, &quotient).map_err(CliError::from)?;
        let alphabet = GradedAlphabet::even_from_series(&z).map_err(CliError::from)?;
        let k_series = free_lie_series_from_alphabet(&alphabet, order).map_err(CliError::from)?;
        let passed = z.is_nonnegative() && k_series == &witt - &quotient;
        checks.push(Check {
            name: name.into(),
            passed,
            detail: format!("{describe}: free Lie algebra on Z matches dim L_n - dim (L/K)_n"),
        });
    }

    let mut passed = (1..=5u64).all(|r| color_schreier_rank(r + 1, 1) == BigUint::from(2 * r + 1));
    let alphabet = GradedAlphabet::free_super(1, 1);
    let x = FreeAlgebraElement::generator(0);
    let y = FreeAlgebraElement::generator(1);
    let gens = vec![
        x.clone(),
        super_commutator(&x, &y, &alphabet).map_err(CliError::from)?,
        super_commutator(&y, &y, &alphabet).map_err(CliError::from)?,
    ];
    let k = SubalgebraBasis::build(&alphabet, &gens, 4).map_err(CliError::from)?;
    let l = LieBasis::build(&alphabet, 4).map_err(CliError::from)?;
    for n in 1..=4usize {
        if k.dim(n) + usize::from(n == 1) != l.dim(n) {
            passed = false;
        }
    }
    checks.push(Check {
        name: "schreier color example".into(),
        passed,
        detail: "rank(K) = 2^s (rank(L) - 1) + 1 and dim(K cap L_n) = dim L_n - [n = 1]".into(),
    });

    Ok(checks)
}

pub fn verify_growth_rate() -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::new();
    for (r, s) in [(2u64, 1u64), (1, 1)] {
        let report = enveloping_growth_matches(r, s, 200).map_err(CliError::from)?;
        checks.push(Check {
            name: format!("growth match ({r}, {s})"),
            passed: report.passes,
            detail: format!(
                "Lie rate {:.4}, enveloping rate {:.4}, difference {:.4} (tolerance {})",
                report.lie_estimate.rate,
                report.enveloping_estimate.rate,
                report.difference,
                report.tolerance
            ),
        });
    }

    let mut passed = true;
    for n in 40..=200u64 {
        let num = BigInt::from(n) * BigInt::from(color_witt_dim(2, 1, n));
        let den = BigInt::from(3u32).pow(n as u32);
        let diff = (&num - &den).magnitude() * BigUint::from(100u32);
        if diff >= den.magnitude().clone() {
            passed = false;
            break;
        }
    }
    checks.push(Check {
        name: "growth witt limit".into(),
        passed,
        detail: "|n dim L_n / 3^n - 1| < 0.01 for 40 <= n <= 200".into(),
    });

    Ok(checks)
}
