//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigUint;
use num_integer::binomial;
use tetraposet::arrays::{
    count_arrays, enumerate_arrays, enumerate_row_shuffles, fiber_size, sort_to_tsscpp, tsscpp_tournament_check,
    ASM_COLORS, SORTED_TOURNAMENT_COLORS, TOURNAMENT_COLORS, TSSCPP_COLORS,
};
use tetraposet::identities::{
    array_stats, asm_expansion_rhs, asm_stats, column_weights, robbins_rumsey_rhs, schur_staircase_check,
    tsscpp_expansion_rhs, tsscpp_lambda_count,
};
use tetraposet::poly::formulas::carlitz_riordan_table;
use tetraposet::poly::{
    asm_number, catalan_product, q_binomial_product, q_factorial_product, three_color_product, tournament_gf,
    tspp_number,
};
use tetraposet::{
    Asm, Budget, ColorSet, Method, MonotoneTriangle, QPoly, StaircaseArray, Subposet, Tournament, Tsscpp,
};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn set(s: &str) -> ColorSet {
    s.parse().unwrap()
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn enumerated_count(p: &Subposet) -> BigUint {
    p.count_ideals_by(Method::Enumerate, &Budget::unlimited()).unwrap()
}

fn enumerated_gf(p: &Subposet) -> QPoly {
    p.rank_gf_by(Method::Enumerate, &Budget::unlimited()).unwrap()
}

const OPPOSITE: [&str; 3] = ["go", "rs", "by"];
const CATALAN_S1: [&str; 4] = ["bg", "bs", "yo", "gs"];
const CATALAN_S2: [&str; 4] = ["ry", "rg", "yg", "bo"];
const THREE_COLOR: [&str; 9] = ["osb", "syg", "ory", "brg", "rgs", "oby", "ygo", "bgo", "ygb"];

fn closed_form_counts() -> Outcome {
    let asm = [1u64, 2, 7, 42, 429];
    let tspp = [2u64, 5, 16, 66];
    let mut checked = 0;
    for n in 2..=5 {
        let c2 = (n * (n - 1) / 2) as u32;
        for s in ColorSet::all_admissible() {
            let expected = match s.len() {
                1 => q_factorial_product(n).at_one().to_biguint().unwrap(),
                2 if OPPOSITE.iter().any(|x| set(x) == s) => q_binomial_product(n).at_one().to_biguint().unwrap(),
                2 => catalan_product(n).0,
                3 if THREE_COLOR.iter().any(|x| set(x) == s) => BigUint::from(2u32).pow(c2),
                4 => big(asm[n - 1]),
                6 => big(tspp[n - 2]),
                _ => continue,
            };
            let p = Subposet::build(n, s).unwrap();
            let got = enumerated_count(&p);
            ensure!(got == expected, "T_{n}({s}): enumerated {got}, formula {expected}");
            if s.len() == 4 {
                ensure!(asm_number(n).unwrap() == expected, "asm_number({n})");
            }
            if s.len() == 6 {
                ensure!(tspp_number(n).unwrap() == expected, "tspp_number({n})");
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (n, S) pairs"))
}

fn rank_generating_functions() -> Outcome {
    let mut checked = 0;
    for n in 2..=5 {
        let catalan: QPoly = carlitz_riordan_table(n)[1..].iter().cloned().product();
        let cases: Vec<(&str, bool, QPoly)> = ["r", "b", "g", "o", "y", "s"]
            .iter()
            .map(|s| (*s, false, q_factorial_product(n)))
            .chain(OPPOSITE.iter().map(|s| (*s, false, q_binomial_product(n))))
            .chain(CATALAN_S1.iter().map(|s| (*s, false, catalan.clone())))
            .chain(CATALAN_S2.iter().map(|s| (*s, true, catalan.clone())))
            .chain(THREE_COLOR.iter().map(|s| (*s, false, three_color_product(n))))
            .collect();
        for (s, dual, expected) in cases {
            let mut p = Subposet::build(n, set(s)).unwrap();
            if dual {
                p = p.dual();
            }
            let got = enumerated_gf(&p);
            ensure!(
                got == expected,
                "F(J(T_{n}({s}){})): got {got}, expected {expected}",
                if dual { "*" } else { "" }
            );
            checked += 1;
        }
    }
    Ok(format!("{checked} rank generating functions"))
}

fn rgy_sequence_and_dual() -> Outcome {
    let expected = [1u64, 2, 9, 96, 2498];
    let rgy = set("rgy");
    let dual_set = set("bgs");
    ensure!(count_arrays(1, rgy).unwrap() == big(1), "|Y_1({{r,g,y}})| != 1");
    for n in 2..=5 {
        let p = Subposet::build(n, rgy).unwrap();
        let q = Subposet::build(n, dual_set).unwrap();
        let e = big(expected[n - 1]);
        ensure!(enumerated_count(&p) == e, "|J(T_{n}(rgy))| enumerated != {e}");
        ensure!(p.count_ideals().unwrap() == e, "|J(T_{n}(rgy))| by DP != {e}");
        ensure!(enumerated_count(&q) == e, "|J(T_{n}(bgs))| != {e}");
        ensure!(
            enumerated_gf(&q) == enumerated_gf(&p.dual()),
            "F(J(T_{n}(bgs))) != F(J(T_{n}(rgy)*))"
        );
    }
    let n6 = Subposet::build(6, rgy).unwrap().count_ideals().unwrap();
    ensure!(n6 == big(161422), "|J(T_6(rgy))| = {n6}");
    let n6d = Subposet::build(6, dual_set).unwrap().count_ideals().unwrap();
    ensure!(n6d == big(161422), "|J(T_6(bgs))| = {n6d}");
    Ok("1, 2, 9, 96, 2498, 161422; dual {b,g,s} agrees".into())
}

fn bijection_round_trips() -> Outcome {
    // ASM <-> monotone triangle <-> array, against brute-force ASMs.
    let brute = common::brute_asms(4);
    ensure!(brute.len() == 42, "brute-force ASM count {}", brute.len());
    let mut asm_arrays = BTreeSet::new();
    for m in &brute {
        let a = Asm::new(m.clone()).map_err(|e| e.to_string())?;
        let t = a.to_monotone_triangle();
        ensure!(t.to_asm() == a, "ASM -> MT -> ASM failed for {m:?}");
        let arr = t.to_array();
        ensure!(arr.validate(ASM_COLORS).unwrap(), "ASM array fails {{g,y,o,b}}");
        ensure!(MonotoneTriangle::from_array(&arr).unwrap() == t, "MT <-> array");
        ensure!(Asm::from_array(&arr).unwrap() == a, "ASM <-> array");
        asm_arrays.insert(arr);
    }
    let listed: BTreeSet<_> = enumerate_arrays(4, ASM_COLORS, &Budget::default()).unwrap().collect();
    ensure!(listed == asm_arrays, "ASM arrays are not exactly Y_4({{g,y,o,b}})");

    // TSSCPP <-> array, against brute-force TSSCPPs.
    let brute = common::brute_tsscpps(4);
    ensure!(brute.len() == 42, "brute-force TSSCPP count {}", brute.len());
    let mut tsscpp_arrays = BTreeSet::new();
    for h in &brute {
        let t = Tsscpp::new(h.clone()).map_err(|e| e.to_string())?;
        let arr = t.to_array();
        ensure!(arr.validate(TSSCPP_COLORS).unwrap(), "TSSCPP array fails {{g,y,o,r}}");
        ensure!(Tsscpp::from_array(&arr).unwrap() == t, "TSSCPP <-> array");
        tsscpp_arrays.insert(arr);
    }
    let listed: BTreeSet<_> = enumerate_arrays(4, TSSCPP_COLORS, &Budget::default())
        .unwrap()
        .collect();
    ensure!(
        listed == tsscpp_arrays,
        "TSSCPP arrays are not exactly Y_4({{g,y,o,r}})"
    );

    // Tournament <-> array.
    let mut tournament_arrays = BTreeSet::new();
    for t in Tournament::enumerate(4) {
        let arr = t.to_array();
        ensure!(
            arr.validate(TOURNAMENT_COLORS).unwrap(),
            "tournament array fails {{b,r,g}}"
        );
        ensure!(Tournament::from_array(&arr).unwrap() == t, "tournament <-> array");
        tournament_arrays.insert(arr);
    }
    ensure!(tournament_arrays.len() == 64, "tournament arrays not distinct");
    let listed: BTreeSet<_> = enumerate_arrays(4, TOURNAMENT_COLORS, &Budget::default())
        .unwrap()
        .collect();
    ensure!(
        listed == tournament_arrays,
        "tournament arrays are not exactly Y_4({{b,r,g}})"
    );

    // Ideal <-> array for every four-color subposet of T_4, ideals by subset filtering.
    let mut ideals = 0;
    for s in ColorSet::all_admissible().filter(|s| s.len() == 4) {
        let p = Subposet::build(4, s).unwrap();
        let mut images = BTreeSet::new();
        for members in common::brute_ideals(&p) {
            let ideal = tetraposet::OrderIdeal::new(&p, members.clone()).unwrap();
            let arr = p.ideal_to_array(&ideal).unwrap();
            ensure!(arr.weight() == members.len() as u64, "weight != |I| for {s}");
            ensure!(p.array_to_ideal(&arr).unwrap() == ideal, "ideal <-> array for {s}");
            images.insert(arr);
            ideals += 1;
        }
        let listed: BTreeSet<_> = enumerate_arrays(4, s, &Budget::default()).unwrap().collect();
        ensure!(images == listed, "ideal images are not exactly Y_4({s})");
    }

    // The two worked examples.
    let a = Asm::new(vec![
        vec![0, 1, 0, 0],
        vec![1, -1, 0, 1],
        vec![0, 0, 1, 0],
        vec![0, 1, 0, 0],
    ])
    .unwrap();
    let t = a.to_monotone_triangle();
    ensure!(
        t.rows() == [vec![2], vec![1, 4], vec![1, 3, 4], vec![1, 2, 3, 4]],
        "worked ASM example: {:?}",
        t.rows()
    );
    let h = vec![
        vec![8, 8, 8, 8, 6, 6, 4, 4],
        vec![8, 8, 8, 8, 6, 5, 4, 4],
        vec![8, 8, 7, 6, 5, 4, 3, 2],
        vec![8, 8, 6, 5, 4, 3, 2, 2],
        vec![6, 6, 5, 4, 3, 2, 0, 0],
        vec![6, 5, 4, 3, 2, 1, 0, 0],
        vec![4, 4, 3, 2, 0, 0, 0, 0],
        vec![4, 4, 2, 2, 0, 0, 0, 0],
    ];
    let arr = Tsscpp::new(h.clone()).unwrap().to_array();
    ensure!(
        arr.rows() == [vec![1, 1, 2, 4], vec![2, 2, 4], vec![3, 3], vec![4]],
        "worked TSSCPP example: {arr}"
    );
    ensure!(
        Tsscpp::from_array(&arr).unwrap().heights() == h.as_slice(),
        "worked TSSCPP example reconstruction"
    );

    Ok(format!(
        "42 ASMs, 42 TSSCPPs, 64 tournaments, {ideals} ideals, 2 worked examples"
    ))
}

fn identity_suite() -> Outcome {
    let b = Budget::default();
    for n in 1..=5 {
        let lhs = tournament_gf(n, &b).unwrap();
        ensure!(
            robbins_rumsey_rhs(n, &b).unwrap() == lhs,
            "ASM inversion expansion differs at n={n}"
        );
        ensure!(
            asm_expansion_rhs(n, &b).unwrap() == lhs,
            "ASM array expansion differs at n={n}"
        );
        ensure!(
            tsscpp_expansion_rhs(n, &b).unwrap() == lhs,
            "TSSCPP expansion differs at n={n}"
        );
        ensure!(
            schur_staircase_check(n, &b).unwrap(),
            "staircase Schur identity fails at n={n}"
        );
    }
    for n in 1..=6 {
        let expected = QPoly::one_plus_q_pow(1).pow((n * (n - 1) / 2) as u32);
        ensure!(
            tsscpp_lambda_count(n, &b).unwrap() == expected,
            "lambda count differs at n={n}"
        );
    }
    Ok("four expansions n<=5, lambda count n<=6, Schur n<=5".into())
}

fn statistic_identities() -> Outcome {
    let mut asms = 0;
    for n in 1..=5 {
        for m in common::brute_asms(n) {
            let a = Asm::new(m).unwrap();
            let s = asm_stats(&a);
            let st = array_stats(&a.to_array());
            ensure!(
                s.inversions - s.negatives as i64 == st.equalities as i64,
                "I - N != E for {a:?}"
            );
            ensure!(s.negatives == st.strict_between, "N(A) != N(alpha) for {a:?}");
            let w = column_weights(&a);
            for (c, wj) in st.content[1..=n].iter().zip(&w[1..=n]) {
                ensure!(*c as i64 - 1 == *wj, "C_j - 1 != column weight for {a:?}");
            }
            asms += 1;
        }
    }
    let mut tournaments = 0;
    for n in 1..=5 {
        let mut fibers: BTreeMap<StaircaseArray, usize> = BTreeMap::new();
        for t in Tournament::enumerate(n) {
            let arr = t.to_array();
            ensure!(array_stats(&arr).equalities == t.upset_count(), "upsets != E for {t:?}");
            *fibers.entry(sort_to_tsscpp(&arr).unwrap()).or_default() += 1;
            tournaments += 1;
        }
        let sorted: Vec<StaircaseArray> = enumerate_arrays(n, SORTED_TOURNAMENT_COLORS, &Budget::default())
            .unwrap()
            .collect();
        ensure!(sorted.len() == fibers.len(), "fibers do not cover Y_{n}({{b,r,g,y}})");
        for alpha in &sorted {
            let size = fibers.get(alpha).copied().unwrap_or(0);
            let s = array_stats(alpha);
            let product: BigUint = (1..n)
                .flat_map(|i| (i..n).map(move |k| (i, k)))
                .map(|(i, k)| {
                    binomial(
                        big(s.row_content[i + 1][k] as u64),
                        big(s.row_value_equalities[i][k] as u64),
                    )
                })
                .product();
            ensure!(
                big(size as u64) == product,
                "fiber of {alpha} has {size}, binomial product {product}"
            );
            ensure!(fiber_size(alpha).unwrap() == product, "fiber_size({alpha})");
            let listed: BTreeSet<_> = enumerate_row_shuffles(alpha).unwrap().collect();
            ensure!(listed.len() == size, "row shuffles of {alpha}");
            ensure!(
                listed.iter().all(|b| sort_to_tsscpp(b).unwrap() == *alpha),
                "row shuffle leaves its fiber"
            );
        }
    }
    Ok(format!("{asms} ASMs, {tournaments} tournaments"))
}

fn tsscpp_tournament_condition() -> Outcome {
    let mut counts = Vec::new();
    for n in 1..=5 {
        let passing = Tournament::enumerate(n).filter(tsscpp_tournament_check).count();
        ensure!(big(passing as u64) == asm_number(n).unwrap(), "n={n}: {passing} pass");
        counts.push(passing.to_string());
    }
    ensure!(counts[2] == "7" && counts[3] == "42", "n=3,4 counts {counts:?}");
    let total: Vec<String> = (1..=5).map(|n| (1u64 << (n * (n - 1) / 2)).to_string()).collect();
    Ok(format!("{} of {}", counts.join(", "), total.join(", ")))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 closed-form counts", closed_form_counts),
        ("2 rank generating functions", rank_generating_functions),
        ("3 rgy sequence and dual", rgy_sequence_and_dual),
        ("4 bijection round trips", bijection_round_trips),
        ("5 identity suite", identity_suite),
        ("6 statistic identities", statistic_identities),
        ("7 TSSCPP tournament condition", tsscpp_tournament_condition),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let started = Instant::now();
        let outcome = panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail} ({secs:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why} ({secs:.2}s)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
