//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line with
//! its running time; the test fails if any criterion fails or runs over its
//! time limit. Runs without the libtest harness so the lines always show.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use levelsq::assemble::{parse_table3, TABLE3_TSV};
use levelsq::brute::{count_circular_square_free, exists_circular_square_free};
use levelsq::link::{is_usable, search_link, table2, verify_table2};
use levelsq::morphism::{ambiguous_words_of_even_length, apply_h, block_decode_table};
use levelsq::pansiot::{decode_digits, square_factor_witness_delta, square_witness_delta};
use levelsq::shur::check_shur;
use levelsq::square::{circular_square_naive, find_square_naive, is_square};
use levelsq::walks::{is_closed_walk_d2, walk_endpoint_d2, PairVertex};
use levelsq::word::{all_words, all_words_up_to, word};
use levelsq::{build, delta, letter_counts, pi, Bit, Digit, Error, Letter, TernaryWord};

const EXCLUDED: [usize; 6] = [5, 7, 9, 10, 14, 17];

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Level and circular square-free, checked without the library's fast scanners.
fn independently_valid(w: &[Letter]) -> bool {
    let counts = letter_counts(w);
    let spread = counts.iter().max().unwrap() - counts.iter().min().unwrap();
    spread <= 1 && circular_square_naive(w).is_none()
}

fn golden_codes() -> Outcome {
    let code = pi(&word::<Letter>("abcbacbcabcbacb")).map_err(|e| e.to_string())?;
    ensure(code == word::<Bit>("1011101110111"), || format!("pi gave {code}"))?;
    let d = delta(&word::<Bit>("101101")).into_word();
    ensure(d == word::<Letter>("abcbacab"), || format!("delta gave {d}"))
}

fn round_trips() -> Outcome {
    for u in all_words_up_to::<Bit>(14) {
        let back = pi(delta(&u).word()).map_err(|e| e.to_string())?;
        ensure(back == u, || format!("pi(delta({u})) = {back}"))?;
    }
    for n in 2..=12 {
        for v in all_words::<Letter>(n) {
            if v.starts_with(&[Letter::A, Letter::B]) && find_square_naive(&v).is_none() {
                let code = pi(&v).map_err(|e| e.to_string())?;
                let back = delta(&code).into_word();
                ensure(back == v, || format!("delta(pi({v})) = {back}"))?;
            }
        }
    }
    Ok(())
}

fn omega_criterion() -> Outcome {
    let mut mismatches = 0;
    for s in all_words_up_to::<Digit>(8) {
        for &start in &PairVertex::ALL {
            if (walk_endpoint_d2(start, &s) == start) != is_closed_walk_d2(&s) {
                mismatches += 1;
            }
        }
    }
    ensure(mismatches == 0, || format!("{mismatches} mismatches"))
}

fn pansiot_square() -> Outcome {
    for u in all_words_up_to::<Bit>(14) {
        let d = delta(&u).into_word();
        ensure(is_square(&d) == square_witness_delta(&u).is_some(), || format!("whole-word mismatch at {u}"))?;
        let direct = find_square_naive(&d).is_some();
        ensure(direct == square_factor_witness_delta(&u).is_some(), || format!("factor mismatch at {u}"))?;
    }
    Ok(())
}

fn shur_soundness() -> Outcome {
    let mut passing = 0;
    for u in all_words_up_to::<Digit>(8) {
        if check_shur(&u).passes() {
            passing += 1;
            let w = decode_digits(&u);
            ensure(circular_square_naive(&w).is_none(), || format!("{u} passes but decodes to [{w}]"))?;
        }
    }
    ensure(passing > 0, || "no word passed".into())
}

fn ambiguity() -> Outcome {
    let mut found: Vec<String> = ambiguous_words_of_even_length().iter().map(ToString::to_string).collect();
    found.sort();
    let mut expected: Vec<String> =
        ["12", "23", "31", "13", "32", "21", "1231", "3123", "1321", "3213", "3131", "1313", "313131", "131313"]
            .map(String::from)
            .to_vec();
    expected.sort();
    ensure(found.iter().all(|w| w.len() != 8), || "found a word of length 8".into())?;
    ensure(found == expected, || format!("found {found:?}"))
}

fn block_table() -> Outcome {
    let golden = ["abacabcbacbcacbabcab", "abacabcacbabcbacbcab", "abacabcacbcabcbabcab"];
    for (row, g) in block_decode_table().iter().zip(golden) {
        ensure(row.decode.to_string() == g, || format!("{:?}: {}", row.source, row.decode))?;
    }
    Ok(())
}

fn link_table_checker() -> Outcome {
    let rows = table2();
    ensure(rows.len() == 54, || format!("{} rows", rows.len()))?;
    let report = verify_table2(&rows);
    ensure(report.covers(54..=107), || "rows do not cover 54..=107".into())?;
    let bad: Vec<String> = report.failures().map(|r| format!("{} ({})", r.s, r.n)).collect();
    ensure(bad.is_empty(), || format!("failing rows: {bad:?}"))
}

fn link_search() -> Outcome {
    let omega = decode_digits(&apply_h(&word::<Letter>("ab")));
    for n in 54..=107 {
        let found = search_link(n).ok_or_else(|| format!("nothing found for {n}"))?;
        ensure(found.f_length == n && is_usable(&found.s), || format!("{} is not usable for {n}", found.s))?;
        let mut w: Vec<Letter> = found.psi().into_vec();
        w.extend(omega.iter());
        ensure(independently_valid(&w), || format!("{} does not link [ab]", found.s))?;
    }
    Ok(())
}

fn short_table() -> Outcome {
    let rows = parse_table3(TABLE3_TSV).map_err(|e| e.to_string())?;
    ensure(rows.len() == 81, || format!("{} rows", rows.len()))?;
    for row in rows {
        let w = decode_digits(&row.u);
        ensure(w.len() == row.n && independently_valid(&w), || format!("row {} ({})", row.n, row.u))?;
    }
    Ok(())
}

fn nonexistence() -> Outcome {
    for n in EXCLUDED {
        let level = exists_circular_square_free(n, true).map_err(|e| e.to_string())?;
        let any = exists_circular_square_free(n, false).map_err(|e| e.to_string())?;
        ensure(!level && !any, || format!("found a word of length {n}"))?;
    }
    Ok(())
}

fn build_sweep() -> Outcome {
    for n in 1..=300 {
        match build(n) {
            Ok(cert) => {
                ensure(!EXCLUDED.contains(&n), || format!("built a word of excluded length {n}"))?;
                let w: &TernaryWord = cert.word.canonical();
                ensure(w.len() == n && independently_valid(w), || format!("invalid word for {n}: {w}"))?;
            }
            Err(Error::NoSuchLength(m)) if m == n && EXCLUDED.contains(&n) => {}
            Err(e) => return Err(format!("{n}: {e}")),
        }
    }
    Ok(())
}

/// Necklaces as sets of rotations, every rotation scanned naively.
fn count_by_rotation_sets(n: usize) -> usize {
    let mut seen: HashSet<TernaryWord> = HashSet::new();
    for w in all_words::<Letter>(n) {
        let rotations = w.rotations();
        if rotations.iter().all(|r| find_square_naive(r).is_none()) {
            seen.insert(rotations.into_iter().min().unwrap());
        }
    }
    seen.len()
}

fn counting_oracle() -> Outcome {
    for n in 1..=20 {
        let count = count_circular_square_free(n).map_err(|e| e.to_string())?;
        ensure((count > 0) == !EXCLUDED.contains(&n), || format!("count({n}) = {count}"))?;
        if n <= 12 {
            let oracle = count_by_rotation_sets(n) as u64;
            ensure(count == oracle, || format!("count({n}) = {count}, oracle {oracle}"))?;
        }
    }
    Ok(())
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, name: "golden pi / delta values", limit: secs(1), run: golden_codes },
    Criterion { id: 2, name: "pi/delta round trips", limit: secs(10), run: round_trips },
    Criterion { id: 3, name: "omega closed-walk criterion vs simulation", limit: secs(30), run: omega_criterion },
    Criterion { id: 4, name: "square witness in the code vs square in the decode", limit: secs(60), run: pansiot_square },
    Criterion { id: 5, name: "Shur's conditions are sound up to length 8", limit: secs(300), run: shur_soundness },
    Criterion { id: 6, name: "even-length ambiguous words", limit: secs(60), run: ambiguity },
    Criterion { id: 7, name: "block decode table", limit: secs(1), run: block_table },
    Criterion { id: 8, name: "linking word table passes the checker", limit: secs(10), run: link_table_checker },
    Criterion { id: 8, name: "linking word re-search for 54..=107", limit: secs(3600), run: link_search },
    Criterion { id: 9, name: "short encoding table", limit: secs(10), run: short_table },
    Criterion { id: 10, name: "nonexistence at 5, 7, 9, 10, 14, 17", limit: secs(600), run: nonexistence },
    Criterion { id: 11, name: "build(n) for n = 1..=300", limit: secs(300), run: build_sweep },
    Criterion { id: 12, name: "circular square-free counts", limit: secs(300), run: counting_oracle },
];

fn main() {
    let mut failed = Vec::new();
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match &outcome {
            Err(e) => Err(e.clone()),
            Ok(()) if elapsed > c.limit => Err(format!("took {elapsed:.2?}, limit {:?}", c.limit)),
            Ok(()) => Ok(()),
        };
        match verdict {
            Ok(()) => println!("PASS  {:>2}  {} ({elapsed:.2?})", c.id, c.name),
            Err(e) => {
                println!("FAIL  {:>2}  {} ({elapsed:.2?}): {e}", c.id, c.name);
                failed.push(c.id);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
