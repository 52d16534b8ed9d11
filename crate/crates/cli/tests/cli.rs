use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use lingdist::editdist::{self, oc};
use lingdist::lexicon::parse_lexicon;
use lingdist::SubstitutionTable;
use lingdist_cli::{exit, CliError, RunConfig};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tempfile::TempDir;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn lingdist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lingdist"))
        .args(args)
        .output()
        .unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Value of a `key=value` line.
fn value(text: &str, key: &str) -> f64 {
    text.lines()
        .find_map(|l| l.strip_prefix(key)?.strip_prefix('='))
        .unwrap_or_else(|| panic!("{key} missing from\n{text}"))
        .parse()
        .unwrap()
}

const SMALL: &str = "\
#concepts: one,two,three
words(alpha,[un,deux,trwa]).
words(beta,[uno,dos,tres]).
words(gamma,[ein,zwai,drai]).
words(delta,[en,tva,tre]).
";

#[test]
fn usage_errors_exit_2() {
    let tmp = TempDir::new().unwrap();
    let lex = write(&tmp, "small.pl", SMALL);
    let out = tmp.path().join("out");
    for extra in [
        &["--k", "1"][..],
        &["--gap", "-1"],
        &["--table", "nosuchtable"],
    ] {
        let mut args = vec!["cluster", "--lexicon", s(&lex), "--out", s(&out)];
        args.extend_from_slice(extra);
        let res = lingdist(&args);
        assert_eq!(res.status.code(), Some(exit::USAGE), "{extra:?}");
        assert!(!out.exists());
    }
    // relationship without --geo
    let res = lingdist(&["relationship", "--lexicon", s(&lex), "--out", s(&out)]);
    assert_eq!(res.status.code(), Some(exit::USAGE));
    // clap's own parse errors share the code
    let res = lingdist(&["cluster", "--lexicon", s(&lex)]);
    assert_eq!(res.status.code(), Some(exit::USAGE));
}

#[test]
fn data_errors_exit_3_and_write_nothing() {
    let tmp = TempDir::new().unwrap();
    let out = tmp.path().join("out");
    let missing = tmp.path().join("missing.pl");
    let broken = write(&tmp, "broken.pl", "words(a,[x,y).\n");
    let empty = write(&tmp, "empty.pl", "% nothing here\n");
    let two = write(&tmp, "two.pl", "words(a,[ab]).\nwords(b,[ba]).\n");
    for lex in [&missing, &broken, &empty, &two] {
        let res = lingdist(&["cluster", "--lexicon", s(lex), "--out", s(&out)]);
        assert_eq!(res.status.code(), Some(exit::DATA), "{}", lex.display());
        assert!(String::from_utf8_lossy(&res.stderr).starts_with("error: "));
        assert!(!out.exists());
    }
}

#[test]
fn alignment_limit_exits_4() {
    let tmp = TempDir::new().unwrap();
    let table = write(&tmp, "t.table", "gap 1\ndefault 2\n");
    let res = lingdist(&[
        "align",
        "aaaaa",
        "bbbbb",
        "--table",
        s(&table),
        "--limit",
        "100",
    ]);
    assert_eq!(
        res.status.code(),
        Some(exit::LIMIT),
        "{}",
        String::from_utf8_lossy(&res.stderr)
    );
    let res = lingdist(&["align", "overa", "hofa"]);
    assert_eq!(res.status.code(), Some(exit::OK));
}

#[test]
fn missing_geo_pair_is_reported() {
    let tmp = TempDir::new().unwrap();
    let lex = write(&tmp, "small.pl", SMALL);
    let geo = write(
        &tmp,
        "geo.csv",
        "place_a,place_b,distance_km\nalpha,beta,10\nalpha,gamma,20\nbeta,gamma,30\n",
    );
    let mut cfg = RunConfig::new(&lex, tmp.path().join("out"));
    cfg.geo = Some(geo);
    match lingdist_cli::relationship(&cfg) {
        Err(CliError::MissingPair { a, b, .. }) => assert!(a == "delta" || b == "delta"),
        other => panic!("expected a missing pair, got {other:?}"),
    }
}

#[test]
fn geo_csv_validation() {
    let tmp = TempDir::new().unwrap();
    let lex = write(&tmp, "small.pl", SMALL);
    let cases = [
        "place_a,place_b\nalpha,beta\n",
        "place_a,place_b,distance_km\nalpha,alpha,3\n",
        "place_a,place_b,distance_km\nalpha,beta,-3\n",
        "place_a,place_b,distance_km\nalpha,beta,far\n",
        "place_a,place_b,distance_km\nalpha,beta,3\nbeta,alpha,4\n",
    ];
    for text in cases {
        let geo = write(&tmp, "geo.csv", text);
        let mut cfg = RunConfig::new(&lex, tmp.path().join("out"));
        cfg.geo = Some(geo);
        let err = lingdist_cli::relationship(&cfg).unwrap_err();
        assert_eq!(err.exit_code(), exit::DATA, "{text}: {err}");
    }
}

/// Geographic distances proportional to linguistic ones fit perfectly;
/// shuffled, they barely fit at all.
#[test]
fn relationship_fit_quality() {
    let tmp = TempDir::new().unwrap();
    let lex_path = data("sheep.pl");
    let lex = parse_lexicon(&fs::read_to_string(&lex_path).unwrap()).unwrap();
    let table = SubstitutionTable::builtin("editable").unwrap();
    let m = editdist::language_matrix(&lex, &table).unwrap();
    let n = m.len();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j, m.get(i, j) * 350.0 + 1.0));
        }
    }
    let render = |pairs: &[(usize, usize, f64)]| {
        let mut text = String::from("# synthetic\nplace_a,place_b,distance_km\n");
        for &(i, j, d) in pairs {
            text.push_str(&format!("{},{},{}\n", m.labels()[i], m.labels()[j], d));
        }
        text
    };

    let mut cfg = RunConfig::new(&lex_path, tmp.path().join("out"));
    cfg.geo = Some(write(&tmp, "exact.csv", &render(&pairs)));
    let outcome = lingdist_cli::relationship(&cfg).unwrap();
    let report = outcome.artifacts.get("regression.txt").unwrap();
    assert!(
        (value(report, "raw.r_squared") - 1.0).abs() < 1e-9,
        "{report}"
    );
    assert!(
        (value(report, "raw.slope") - 1.0 / 350.0).abs() < 1e-6,
        "{report}"
    );

    let mut shuffled = pairs.clone();
    let mut ds: Vec<f64> = pairs.iter().map(|p| p.2).collect();
    ds.shuffle(&mut ChaCha8Rng::seed_from_u64(7));
    for (p, d) in shuffled.iter_mut().zip(ds) {
        p.2 = d;
    }
    cfg.geo = Some(write(&tmp, "shuffled.csv", &render(&shuffled)));
    let outcome = lingdist_cli::relationship(&cfg).unwrap();
    let report = outcome.artifacts.get("regression.txt").unwrap();
    assert!(value(report, "raw.r_squared") < 0.1, "{report}");
}

#[test]
fn zero_geo_distance_fails_in_log_mode() {
    let tmp = TempDir::new().unwrap();
    let lex = write(&tmp, "small.pl", SMALL);
    let geo = write(
        &tmp,
        "geo.csv",
        "place_a,place_b,distance_km\nalpha,beta,0\nalpha,gamma,2\nalpha,delta,3\n\
         beta,gamma,4\nbeta,delta,5\ngamma,delta,6\n",
    );
    let mut cfg = RunConfig::new(&lex, tmp.path().join("out"));
    cfg.geo = Some(geo);
    let err = lingdist_cli::relationship(&cfg).unwrap_err();
    assert!(matches!(err, CliError::NonPositiveDistance { .. }), "{err}");
}

#[test]
fn forcing_k_to_n_gives_singletons() {
    let tmp = TempDir::new().unwrap();
    let lex = write(&tmp, "small.pl", SMALL);
    let mut cfg = RunConfig::new(&lex, tmp.path().join("out"));
    cfg.k = Some(4);
    let outcome = lingdist_cli::cluster(&cfg).unwrap();
    let csv = outcome.artifacts.get("clusters.csv").unwrap();
    let ids: Vec<&str> = csv
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap())
        .collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(ids.len(), 4);
    assert_eq!(sorted.len(), 4, "{csv}");
}

#[test]
fn k_beyond_language_count_is_rejected() {
    let tmp = TempDir::new().unwrap();
    let lex = write(&tmp, "small.pl", SMALL);
    let mut cfg = RunConfig::new(&lex, tmp.path().join("out"));
    cfg.k = Some(5);
    assert!(lingdist_cli::cluster(&cfg).is_err());
}

#[test]
fn all_to_all_matrix_covers_every_word() {
    let tmp = TempDir::new().unwrap();
    let lex = write(
        &tmp,
        "two.pl",
        "#concepts: a,b,c\nw(x,[pa,ti,ku]).\nw(y,[pe,to,ka]).\n",
    );
    let cfg = RunConfig::new(&lex, tmp.path().join("out"));
    let outcome = lingdist_cli::all_to_all(&cfg).unwrap();
    let m = oc::parse_oc(outcome.artifacts.get("all_to_all.oc").unwrap()).unwrap();
    assert_eq!(m.len(), 6);
    assert_eq!(m.labels()[0], "x:a");
    assert_eq!(m.labels()[5], "y:c");
}

#[test]
fn identical_languages_sort_perfectly_by_concept() {
    let tmp = TempDir::new().unwrap();
    let lex = write(
        &tmp,
        "same.pl",
        "#concepts: sun,moon,star\n\
         w(a,[solo,lunamar,estrelita]).\n\
         w(b,[solo,lunamar,estrelita]).\n\
         w(c,[solo,lunamar,estrelita]).\n",
    );
    let cfg = RunConfig::new(&lex, tmp.path().join("out"));
    let outcome = lingdist_cli::all_to_all(&cfg).unwrap();
    let purity = outcome.artifacts.get("forced_purity.csv").unwrap();
    assert!(outcome
        .summary
        .iter()
        .any(|l| l.contains("forced cut k = 3, overall purity 1.000000")));
    assert!(purity.lines().count() > 1);
}

#[test]
fn words_analyse_artifact_counts() {
    let tmp = TempDir::new().unwrap();
    let out = tmp.path().join("out");
    let res = lingdist(&[
        "words-analyse",
        "--lexicon",
        s(&data("colours.pl")),
        "--out",
        s(&out),
    ]);
    assert!(
        res.status.success(),
        "{}",
        String::from_utf8_lossy(&res.stderr)
    );
    let count = |dir: &str, ext: &str| {
        fs::read_dir(out.join(dir))
            .unwrap()
            .filter(|e| e.as_ref().unwrap().path().extension().unwrap() == ext)
            .count()
    };
    assert_eq!(count("concepts", "oc"), 6);
    assert_eq!(count("density", "svg"), 6);
    assert_eq!(count("density", "csv"), 6);
    let bc = fs::read_to_string(out.join("bhattacharyya.csv")).unwrap();
    assert_eq!(bc.lines().count(), 1 + 15);
    for file in [
        "mean_sd.csv",
        "mean_sd.svg",
        "tscores.csv",
        "bhattacharyya.nwk",
    ] {
        assert!(out.join(file).is_file(), "{file}");
    }
}

#[test]
fn truth_file_adds_purity() {
    let tmp = TempDir::new().unwrap();
    let mut cfg = RunConfig::new(data("sheep.pl"), tmp.path().join("out"));
    let plain = lingdist_cli::cluster(&cfg).unwrap();
    assert!(plain.artifacts.get("purity.csv").is_none());
    cfg.truth = Some(data("sheep_groups.csv"));
    let scored = lingdist_cli::cluster(&cfg).unwrap();
    assert!(scored.artifacts.get("purity.csv").is_some());
}

#[test]
fn truth_file_must_cover_every_label() {
    let tmp = TempDir::new().unwrap();
    let lex = write(&tmp, "small.pl", SMALL);
    let truth = write(&tmp, "truth.csv", "label,class\nalpha,x\nbeta,x\ngamma,y\n");
    let mut cfg = RunConfig::new(&lex, tmp.path().join("out"));
    cfg.truth = Some(truth);
    let err = lingdist_cli::cluster(&cfg).unwrap_err();
    assert_eq!(err.exit_code(), exit::DATA);
}

#[test]
fn csv_comments_and_blank_padding_are_ignored() {
    let tmp = TempDir::new().unwrap();
    let lex = write(&tmp, "small.pl", SMALL);
    let truth = write(
        &tmp,
        "truth.csv",
        "# hand-made grouping\nlabel,class\n alpha , x\n# beta is odd\nbeta,x\ngamma,y\ndelta,y\n",
    );
    let mut cfg = RunConfig::new(&lex, tmp.path().join("out"));
    cfg.truth = Some(truth);
    let outcome = lingdist_cli::cluster(&cfg).unwrap();
    assert!(outcome.artifacts.get("purity.csv").is_some());
}

#[test]
fn table_file_and_gap_override() {
    let tmp = TempDir::new().unwrap();
    let table = write(
        &tmp,
        "t.table",
        "gap 1\ndefault 1\npair f v 0.2\npair e o 0.2\n",
    );
    let res = lingdist(&["align", "overa", "hofa", "--table", s(&table)]);
    let stdout = String::from_utf8(res.stdout).unwrap();
    assert!(
        stdout.starts_with(
            "raw distance: 3.2\nnormalised distance: 0.64\nco-optimal alignments: 3\n"
        ),
        "{stdout}"
    );
    let res = lingdist(&["align", "ab", "b", "--gap", "0.5"]);
    let stdout = String::from_utf8(res.stdout).unwrap();
    assert!(stdout.starts_with("raw distance: 0.5\n"), "{stdout}");
}
