use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use levelsq::assemble::{parse_table3, search_short, ShortRow, TABLE3_TSV};
use levelsq::brute::{count_circular_square_free, count_level_circular_square_free, exists_circular_square_free};
use levelsq::link::{parse_table2, search_link, verify_table2, LinkRow, TABLE2_TSV};
use levelsq::morphism::block_decode_table;
use levelsq::pansiot::{decode_digits, encode_circular_word, expand_f};
use levelsq::{
    circular_square, delta, is_level, letter_counts, BinaryWord, Builder, Error, Necklace, Recipe, SWord,
    TernaryWord, Word, EXCLUDED_LENGTHS,
};
use serde_json::json;

const EXIT_VERIFY: u8 = 1;
const EXIT_NO_SUCH_LENGTH: u8 = 2;
const EXIT_USAGE: u8 = 3;

/// Build and check level ternary circular square-free words.
#[derive(Parser, Debug)]
#[command(name = "levelsq", version)]
struct Cli {
    /// Directory holding table2.tsv / table3.tsv; the built-in tables are used otherwise.
    #[arg(long, global = true, value_name = "DIR")]
    data_dir: Option<PathBuf>,

    /// Worker threads for the searches (defaults to one per core).
    #[arg(long, global = true, value_name = "N")]
    workers: Option<usize>,

    /// Print JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a certified word of length N.
    Build { n: usize },
    /// Check a circular word for levelness and squares.
    Verify {
        #[arg(value_parser = parse_word::<levelsq::Letter>)]
        word: TernaryWord,
    },
    /// Circular Pansiot code of a circular word.
    Encode {
        #[arg(value_parser = parse_word::<levelsq::Letter>)]
        word: TernaryWord,
    },
    /// Decode a binary code, or an S-word through f with --s.
    Decode {
        #[arg(value_parser = parse_word::<levelsq::Bit>, required_unless_present = "s", conflicts_with = "s")]
        bits: Option<BinaryWord>,
        #[arg(long, value_parser = parse_word::<levelsq::Digit>, value_name = "U")]
        s: Option<SWord>,
    },
    /// Number of circular square-free words of length N, up to rotation.
    Count {
        n: usize,
        /// Count only level words.
        #[arg(long)]
        level: bool,
    },
    /// Search for an S-word decoding to a level circular square-free word of length N.
    SearchShort { n: usize },
    /// Search for a linking word with |f(s)| = N.
    SearchLink { n: usize },
    /// Recompute the block decode table.
    Table1,
    /// Print the linking word table, checking every row with --verify.
    Table2 {
        #[arg(long)]
        verify: bool,
    },
    /// Print and verify the table of short encodings.
    Table3,
    /// Exhaustively confirm that the excluded lengths have no circular square-free word.
    Nonexist,
}

fn parse_word<S: levelsq::Symbol>(s: &str) -> std::result::Result<Word<S>, String> {
    s.parse().map_err(|e: levelsq::word::ParseWordError| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::NoSuchLength(_) | Error::NoLinkingWord(_)) => EXIT_NO_SUCH_LENGTH,
        Some(Error::TooSmall { .. } | Error::OutOfRange { .. } | Error::CapacityExceeded { .. }) => EXIT_USAGE,
        Some(Error::Parse(_)) => EXIT_USAGE,
        _ => EXIT_VERIFY,
    }
}

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    if let Some(workers) = cli.workers {
        if workers == 0 {
            return Err(Error::OutOfRange { n: 0, min: 1, max: usize::MAX }).context("--workers");
        }
        rayon::ThreadPoolBuilder::new().num_threads(workers).build_global()?;
    }
    let tables = Tables::load(cli.data_dir.as_deref())?;
    let json = cli.json;
    match cli.command {
        Command::Build { n } => build(&tables, n, json),
        Command::Verify { word } => Ok(verify(&word, json)),
        Command::Encode { word } => encode(&word, json),
        Command::Decode { bits, s } => Ok(decode(bits, s, json)),
        Command::Count { n, level } => count(n, level, json),
        Command::SearchShort { n } => short(n, json),
        Command::SearchLink { n } => link(n, json),
        Command::Table1 => Ok(table1(json)),
        Command::Table2 { verify } => Ok(table2(&tables.links, verify, json)),
        Command::Table3 => Ok(table3(&tables.short, json)),
        Command::Nonexist => nonexist(json),
    }
}

struct Tables {
    links: Vec<LinkRow>,
    short: Vec<ShortRow>,
    /// Link rows from a data directory are only checked when building, so
    /// `table2 --verify` can still report the bad ones.
    custom: bool,
}

impl Tables {
    /// Embedded tables unless a data directory is given; a file missing there
    /// leaves that table empty, so builds fall back to search.
    fn load(dir: Option<&Path>) -> Result<Self> {
        let Some(dir) = dir else {
            return Ok(Tables { links: parse_table2(TABLE2_TSV)?, short: parse_table3(TABLE3_TSV)?, custom: false });
        };
        let read = |name: &str| -> Result<Option<String>> {
            let path = dir.join(name);
            if !path.exists() {
                return Ok(None);
            }
            std::fs::read_to_string(&path).map(Some).with_context(|| format!("reading {}", path.display()))
        };
        let links = match read("table2.tsv")? {
            Some(text) => parse_table2(&text).context("table2.tsv")?,
            None => Vec::new(),
        };
        let short = match read("table3.tsv")? {
            Some(text) => parse_table3(&text).context("table3.tsv")?,
            None => Vec::new(),
        };
        Ok(Tables { links, short, custom: true })
    }
}

fn print_json(value: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn recipe_text(recipe: &Recipe) -> String {
    match recipe {
        Recipe::BruteForce => "brute force".into(),
        Recipe::TableEntry { u } => format!("table entry U = {u}"),
        Recipe::ShortSearch { u } => format!("short search U = {u}"),
        Recipe::Composite { m, r, v, s } => format!("composite m = {m}, r = {r}, v = {v}, s = {s}"),
    }
}

fn build(tables: &Tables, n: usize, json: bool) -> Result<ExitCode> {
    let cert = if tables.custom { Builder::new(&tables.links, &tables.short)?.build(n)? } else { levelsq::build(n)? };
    if json {
        print_json(&cert);
    } else {
        println!("n: {}", cert.n);
        println!("word: {}", cert.word);
        println!("recipe: {}", recipe_text(&cert.recipe));
        println!("level: {}", cert.level);
        println!("circular square-free: {}", cert.circular_square_free);
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(word: &TernaryWord, json: bool) -> ExitCode {
    let level = is_level(word);
    let square = circular_square(word);
    let doubled: Vec<_> = word.iter().chain(word.iter()).copied().collect();
    let witness = square.map(|sq| {
        let factor = TernaryWord::from_slice(&doubled[sq.start..sq.start + 2 * sq.period]);
        (sq.start + 1, sq.period, factor)
    });
    if json {
        let square = witness.as_ref().map(|(start, period, factor)| json!({"start": start, "period": period, "factor": factor}));
        print_json(&json!({
            "word": word,
            "length": word.len(),
            "counts": letter_counts(word),
            "level": level,
            "circular_square_free": square.is_none(),
            "square": square,
        }));
    } else {
        println!("length: {}", word.len());
        println!("counts: {:?}", letter_counts(word));
        println!("level: {level}");
        println!("circular square-free: {}", witness.is_none());
        if let Some((start, period, factor)) = &witness {
            println!("square: start {start}, period {period} ({factor})");
        }
    }
    status(level && witness.is_none())
}

fn encode(word: &TernaryWord, json: bool) -> Result<ExitCode> {
    let code = encode_circular_word(word)?;
    if json {
        print_json(&json!({"word": word, "code": code, "circular_code": Necklace::new(&code)}));
    } else {
        println!("{code}");
    }
    Ok(ExitCode::SUCCESS)
}

fn decode(bits: Option<BinaryWord>, s: Option<SWord>, json: bool) -> ExitCode {
    let (code, source) = match (bits, s) {
        (_, Some(u)) => (expand_f(&u), Some(u)),
        (Some(b), None) => (b, None),
        (None, None) => unreachable!("clap requires one of the two"),
    };
    if code.len() < 2 {
        eprintln!("error: a code needs at least two letters");
        return ExitCode::from(EXIT_USAGE);
    }
    let d = delta(&code);
    let truncated = d.truncated();
    let circular = Necklace::new(&truncated);
    let level = is_level(&truncated);
    let square_free = circular_square(&truncated).is_none();
    if json {
        print_json(&json!({
            "s": source,
            "code": code,
            "delta": d.word(),
            "truncated": truncated,
            "circular": circular,
            "level": level,
            "circular_square_free": square_free,
        }));
    } else {
        if let Some(u) = &source {
            println!("f({u}): {code}");
        }
        println!("delta: {}", d.word());
        println!("truncated: {truncated}");
        println!("circular: {circular}");
        println!("level: {level}");
        println!("circular square-free: {square_free}");
    }
    ExitCode::SUCCESS
}

fn count(n: usize, level: bool, json: bool) -> Result<ExitCode> {
    let c = if level { count_level_circular_square_free(n)? } else { count_circular_square_free(n)? };
    if json {
        print_json(&json!({"n": n, "level": level, "count": c}));
    } else {
        println!("{c}");
    }
    Ok(ExitCode::SUCCESS)
}

fn short(n: usize, json: bool) -> Result<ExitCode> {
    let found = search_short(n)?;
    let decoded = found.as_ref().map(|u| Necklace::new(&decode_digits(u)));
    if json {
        print_json(&json!({"n": n, "u": found, "word": decoded}));
    } else {
        match (&found, &decoded) {
            (Some(u), Some(w)) => println!("{u}\t{w}"),
            _ => println!("none"),
        }
    }
    if found.is_none() {
        return Err(Error::NoSuchLength(n).into());
    }
    Ok(ExitCode::SUCCESS)
}

fn link(n: usize, json: bool) -> Result<ExitCode> {
    let Some(found) = search_link(n) else {
        bail!(Error::NoLinkingWord(n));
    };
    if json {
        print_json(&found);
    } else {
        println!("{}\t{}", found.s, found.f_length);
    }
    Ok(ExitCode::SUCCESS)
}

fn table1(json: bool) -> ExitCode {
    let rows = block_decode_table();
    if json {
        let rows: Vec<_> = rows
            .iter()
            .map(|b| json!({"letter": format!("{:?}", b.source).to_lowercase(), "image": b.image, "decode": b.decode}))
            .collect();
        print_json(&rows);
    } else {
        for b in &rows {
            println!("{}\t{}\t{}", format!("{:?}", b.source).to_lowercase(), b.image, b.decode);
        }
    }
    ExitCode::SUCCESS
}

fn table2(rows: &[LinkRow], verify: bool, json: bool) -> ExitCode {
    if !verify {
        if json {
            print_json(&rows);
        } else {
            for row in rows {
                println!("{}\t{}", row.s, row.n);
            }
        }
        return ExitCode::SUCCESS;
    }
    let report = verify_table2(rows);
    if json {
        print_json(&report);
    } else {
        for row in &report.rows {
            let verdict = if row.ok() { "ok" } else { "FAIL" };
            let failed = row.report.failed();
            let detail = if failed.is_empty() { String::new() } else { format!(" conditions {failed:?}") };
            println!("{verdict}\t{}\t{}\t|f(s)| = {}{detail}", row.s, row.n, row.f_length);
        }
        println!("{} of {} rows pass", report.rows.iter().filter(|r| r.ok()).count(), report.rows.len());
    }
    status(report.ok())
}

fn table3(rows: &[ShortRow], json: bool) -> ExitCode {
    // parse_table3 has already checked every row.
    if json {
        let rows: Vec<_> =
            rows.iter().map(|r| json!({"n": r.n, "u": r.u, "word": Necklace::new(&decode_digits(&r.u))})).collect();
        print_json(&rows);
    } else {
        for r in rows {
            println!("{}\t{}\t{}", r.n, r.u, Necklace::new(&decode_digits(&r.u)));
        }
    }
    ExitCode::SUCCESS
}

fn nonexist(json: bool) -> Result<ExitCode> {
    let mut results = Vec::new();
    for &n in EXCLUDED_LENGTHS.iter() {
        let any = exists_circular_square_free(n, false)?;
        results.push((n, any));
    }
    if json {
        let rows: Vec<_> = results.iter().map(|&(n, any)| json!({"n": n, "exists": any})).collect();
        print_json(&rows);
    } else {
        for &(n, any) in &results {
            println!("{n}\t{}", if any { "FOUND" } else { "none" });
        }
    }
    Ok(status(results.iter().all(|&(_, any)| !any)))
}
