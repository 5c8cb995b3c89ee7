//! Acceptance criteria. Runs as a plain binary (`harness = false`) and prints
//! one PASS/FAIL line per criterion; exits non-zero if any fails.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use catalan_core::counting::{
    catalan_closed, catalan_convolution_table, catalan_linear, catalan_series,
};
use catalan_core::hub::{decode, encode, Family};
use catalan_core::sequence::{enumerate, rank, unrank, validate, CatalanSequence};
use catalan_core::trees::{
    decode_expression, decode_tree, encode_tree, parse_rpn, render_rpn, rpn_paper_decode,
    rpn_paper_encode,
};
use catalan_core::{chords, lattice};
use num_bigint::BigUint;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn within(limit: Duration, start: Instant) -> Outcome {
    let took = start.elapsed();
    ensure!(took < limit, "took {took:?}, limit {limit:?}");
    Ok(())
}

fn seq(s: &str) -> CatalanSequence {
    s.parse().expect("valid literal")
}

fn brute_force(n: usize) -> Vec<CatalanSequence> {
    (0u64..1 << (2 * n))
        .filter_map(|mask| {
            // most significant bit first, so numeric order is lexicographic order
            let bits: Vec<bool> = (0..2 * n).rev().map(|i| mask >> i & 1 == 1).collect();
            validate(&bits).ok()
        })
        .collect()
}

fn c1_enumerate_three() -> Outcome {
    let start = Instant::now();
    let got: Vec<String> = enumerate(3).map_err(|e| e.to_string())?.iter().map(ToString::to_string).collect();
    within(Duration::from_millis(10), start)?;
    ensure!(
        got == ["000111", "001011", "001101", "010011", "010101"],
        "got {got:?}"
    );
    Ok(())
}

fn c2_counting_agreement() -> Outcome {
    let start = Instant::now();
    let limit = 300;
    let convolution = catalan_convolution_table(limit);
    let series = catalan_series(limit + 1);
    for (n, (conv, ser)) in convolution.iter().zip(&series.coefficients).enumerate() {
        let closed = catalan_closed(n);
        ensure!(closed == catalan_linear(n), "linear differs at n = {n}");
        ensure!(closed.value() == conv, "convolution differs at n = {n}");
        ensure!(
            closed.value() == ser,
            "series differs at n = {n}"
        );
    }
    within(Duration::from_secs(1), start)?;
    ensure!(catalan_closed(0) == 1, "C_0");
    ensure!(catalan_closed(3) == 5, "C_3");
    let c10 = brute_force(10).len() as u64;
    ensure!(c10 == 16796, "brute force C_10 = {c10}");
    ensure!(catalan_closed(10) == c10, "C_10");
    Ok(())
}

fn c3_append_one_postfix_example() -> Outcome {
    let e = parse_rpn("aaa*a**").map_err(|e| e.to_string())?;
    let code = rpn_paper_encode(&e);
    ensure!(code.to_string() == "00010111", "encoded {code}");
    let back = rpn_paper_decode(&code).map_err(|e| e.to_string())?;
    ensure!(render_rpn(&back) == "aaa*a**", "decoded {}", render_rpn(&back));
    Ok(())
}

fn c4_decoding_coherence() -> Outcome {
    let s = seq("00010111");
    let tree = decode_tree(&s);
    ensure!(tree.to_string() == "((. (. .)) (. .))", "tree {tree}");
    ensure!(tree.node_count() == 4, "node count {}", tree.node_count());
    let d = chords::decode_chords(&s);
    ensure!(d.to_string() == "1-8,2-7,3-4,5-6", "chords {d}");
    let e = decode_expression(&s);
    ensure!(e.leaf_count() == 5, "factors {}", e.leaf_count());
    let p = lattice::decode_path(&s);
    ensure!(p.to_string() == "HHHVHVVV", "path {p}");

    ensure!(encode_tree(&tree) == s, "tree re-encode");
    ensure!(chords::encode_chords(&d) == s, "chords re-encode");
    ensure!(catalan_core::trees::encode_expression(&e) == s, "expression re-encode");
    ensure!(lattice::encode_path(&p) == s, "path re-encode");
    // the expression is the tree with every missing child filled by a factor
    ensure!(catalan_core::trees::strip_leaves(&e) == tree, "expression vs tree");
    Ok(())
}

fn c5_exhaustive_bijections() -> Outcome {
    let start = Instant::now();
    let expected = [1usize, 1, 2, 5, 14, 42, 132, 429];
    for family in Family::total() {
        for (n, &count) in expected.iter().enumerate() {
            let all = enumerate(n).map_err(|e| e.to_string())?;
            ensure!(all.len() == count, "C_{n} = {}", all.len());
            let mut objects = HashSet::with_capacity(count);
            for s in &all {
                let text = decode(family, s).map_err(|e| format!("{family} {s}: {e}"))?;
                let back = encode(family, &text).map_err(|e| format!("{family} {text}: {e}"))?;
                ensure!(&back == s, "{family}: {s} -> {text} -> {back}");
                objects.insert(text);
            }
            ensure!(objects.len() == count, "{family} n = {n}: {} distinct", objects.len());
        }
    }
    within(Duration::from_secs(10), start)
}

fn c6_partial_codec_image() -> Outcome {
    for n in 1..=8 {
        let decodable = enumerate(n)
            .map_err(|e| e.to_string())?
            .iter()
            .filter(|s| rpn_paper_decode(s).is_ok())
            .count();
        ensure!(
            catalan_closed(n - 1) == decodable as u64,
            "n = {n}: {decodable} decodable"
        );
    }
    Ok(())
}

fn c7_oracle_equivalence() -> Outcome {
    let start = Instant::now();
    for n in 0..=8 {
        let listed = enumerate(n).map_err(|e| e.to_string())?;
        ensure!(listed == brute_force(n), "enumerate({n}) differs from brute force");
        for (k, s) in listed.iter().enumerate() {
            let k = BigUint::from(k);
            ensure!(rank(s) == k, "rank({s}) != {k}");
            ensure!(unrank(n, &k).as_ref() == Ok(s), "unrank({n}, {k}) != {s}");
        }
        ensure!(
            unrank(n, &BigUint::from(listed.len())).is_err(),
            "unrank accepted C_{n}"
        );
    }
    within(Duration::from_secs(30), start)
}

fn c8_series_fixed_point() -> Outcome {
    let series = catalan_series(50);
    ensure!(series.len() == 50, "length {}", series.len());
    for (n, c) in series.coefficients.iter().enumerate() {
        ensure!(catalan_closed(n).value() == c, "coefficient {n}");
    }
    // the series satisfies z C^2 = C - 1 on the computed prefix
    for k in 1..50 {
        let conv: BigUint = (0..k)
            .map(|i| &series.coefficients[i] * &series.coefficients[k - 1 - i])
            .sum();
        ensure!(conv == series.coefficients[k], "z C^2 coefficient {k}");
    }
    Ok(())
}

fn c9_cli_transcripts() -> Outcome {
    let run = |args: &[&str]| {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = catalan_core::cli::run(
            std::iter::once("catalan").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    };
    let (code, out, _) = run(&["count", "--n", "3"]);
    ensure!(code == 0 && out == "5\n", "count: {code} {out:?}");
    let (code, out, _) = run(&["decode", "--family", "rpn-paper", "00010111"]);
    ensure!(code == 0 && out == "aaa*a**\n", "decode: {code} {out:?}");
    let (code, out, err) = run(&["decode", "--family", "rpn-paper", "010011"]);
    ensure!(
        code == 2 && out.is_empty() && err.contains("domain error"),
        "domain error: {code} {out:?} {err:?}"
    );
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("enumerate(3) lists the five sequences in order", c1_enumerate_three),
        ("four counting methods agree for n <= 300", c2_counting_agreement),
        ("aaa*a** <-> 00010111 in the append-1 postfix code", c3_append_one_postfix_example),
        ("00010111 decodes coherently as tree, chords, expression, path", c4_decoding_coherence),
        ("every total codec is a bijection for n <= 7", c5_exhaustive_bijections),
        ("append-1 postfix image has C_(n-1) members for 1 <= n <= 8", c6_partial_codec_image),
        ("enumerate matches brute force; rank/unrank inverse for n <= 8", c7_oracle_equivalence),
        ("series fixed point matches closed form for 50 terms", c8_series_fixed_point),
        ("CLI golden transcripts", c9_cli_transcripts),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("PASS  {:>2}  {name}  ({:.1?})", i + 1, start.elapsed()),
            Err(why) => {
                failures += 1;
                println!("FAIL  {:>2}  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
