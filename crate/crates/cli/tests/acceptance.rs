//! Acceptance suite. Runs every criterion, prints one line each, and exits
//! non-zero if any fails.
//!
//! ```text
//! cargo test -p aristotle-cli --test acceptance
//! ```

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use aristotle_core::algebra::{verify_axioms, Law};
use aristotle_core::degree::{contradiction_degree, Contradiction, Implication};
use aristotle_core::diagram::{
    check_infomorphism, classify, informativity_leq, DiagramMap, RelationKind, RelationTable,
};
use aristotle_core::fuzzy_diagram::{
    verify_category_laws, CategoryReport, FuzzyAristotelianDiagram, FuzzyDiagramMap,
    FuzzyRelationTable,
};
use aristotle_core::iflattice::LatticeReport;
use aristotle_core::ifrel::OrderReport;
use aristotle_core::records::{DiagramRecord, Document, DocumentKind};
use aristotle_core::sample;
use aristotle_core::{BooleanAlgebra, Degree, FuzzySet, IFLattice, IFPair, OperatorChoice};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

use RelationKind::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn aristotle(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_aristotle"))
        .args(args)
        .env_remove("NO_COLOR")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 output"),
    )
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let took = start.elapsed();
    check(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn square_theses() -> Outcome {
    let start = Instant::now();
    let (code, json) = aristotle(&["canonical-square", "--format", "json"]);
    check(code == 0, || format!("exit status {code}"))?;
    let value: Value = serde_json::from_str(&json).map_err(|e| e.to_string())?;
    let table: RelationTable =
        serde_json::from_value(value["table"].clone()).map_err(|e| e.to_string())?;
    let (a, e, i, o) = (
        "Every S is P",
        "No S is P",
        "Some S is P",
        "Some S is not P",
    );
    let theses = [
        (a, o, CD),
        (e, i, CD),
        (a, e, C),
        (i, o, SC),
        (a, i, LI),
        (e, o, LI),
    ];
    for (x, y, kind) in theses {
        let got = table.between(x, y);
        check(got == Some(kind), || {
            format!("({x}, {y}) is {got:?}, expected {kind}")
        })?;
        let back = table.between(y, x);
        check(back == Some(kind.converse()), || {
            format!("({y}, {x}) is {back:?}")
        })?;
    }
    within(Duration::from_secs(1), start)?;
    Ok(format!("six theses reproduced in {:?}", start.elapsed()))
}

fn boolean_axioms() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for n in 1..=4 {
        let report = verify_axioms(&BooleanAlgebra::new(n).unwrap()).map_err(|e| e.to_string())?;
        let groups: std::collections::BTreeSet<u8> =
            report.laws.iter().map(|l| l.law.group()).collect();
        check(groups.into_iter().eq(1..=5), || {
            format!("n={n}: not all five groups checked")
        })?;
        for law in &report.laws {
            check(law.counterexample.is_none(), || {
                format!("n={n}: {:?} fails at {:?}", law.law, law.counterexample)
            })?;
            checked += law.checked;
        }
    }
    check(Law::ALL.len() == 16, || "law list changed".into())?;
    within(Duration::from_secs(5), start)?;
    Ok(format!(
        "{checked} instances, n = 1..4, zero counterexamples"
    ))
}

fn partition() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0;
    for n in 1..=4usize {
        let algebra = BooleanAlgebra::new(n).unwrap();
        let top = algebra.mask();
        for x in 1..top {
            for y in 1..top {
                if x == y {
                    continue;
                }
                let li = x & !y == 0;
                let ri = y & !x == 0;
                let cd = x & y == 0 && x | y == top;
                let c = x & y == 0 && x | y != top;
                let sc = x & y != 0 && x | y == top;
                let un = !(li || ri || cd || c || sc);
                let holds = [(LI, li), (RI, ri), (CD, cd), (C, c), (SC, sc), (Un, un)];
                let held: Vec<RelationKind> = holds.iter().filter(|h| h.1).map(|h| h.0).collect();
                check(held.len() == 1, || {
                    format!("n={n}, x={x:b}, y={y:b}: {held:?}")
                })?;
                let got = classify(
                    &algebra,
                    &algebra.element(x).unwrap(),
                    &algebra.element(y).unwrap(),
                )
                .map_err(|e| e.to_string())?;
                check(got == held[0], || {
                    format!("n={n}, x={x:b}, y={y:b}: classify says {got}")
                })?;
                pairs += 1;
            }
        }
    }
    within(Duration::from_secs(5), start)?;
    Ok(format!(
        "{pairs} ordered contingent pairs, each in exactly one class"
    ))
}

fn informativity() -> Outcome {
    let mut expected: Vec<(RelationKind, RelationKind)> =
        RelationKind::ALL.iter().map(|&r| (r, r)).collect();
    expected.extend([
        (Un, LI),
        (Un, RI),
        (Un, C),
        (Un, SC),
        (LI, BI),
        (RI, BI),
        (C, CD),
        (SC, CD),
        (Un, BI),
        (Un, CD),
    ]);
    let mut got = Vec::new();
    for &r in &RelationKind::ALL {
        for &s in &RelationKind::ALL {
            if informativity_leq(r, s) {
                got.push((r, s));
            }
        }
    }
    expected.sort_by_key(|&(r, s)| (r as u8, s as u8));
    got.sort_by_key(|&(r, s)| (r as u8, s as u8));
    check(got == expected, || format!("closure is {got:?}"))?;
    for &r in &RelationKind::ALL {
        for &s in &RelationKind::ALL {
            check(
                r == s || !(informativity_leq(r, s) && informativity_leq(s, r)),
                || format!("{r} and {s} are mutually below"),
            )?;
            for &t in &RelationKind::ALL {
                check(
                    !(informativity_leq(r, s) && informativity_leq(s, t))
                        || informativity_leq(r, t),
                    || format!("not transitive at {r}, {s}, {t}"),
                )?;
            }
        }
    }
    let mut rng = sample::rng(4);
    for k in 0..100 {
        let d = sample::crisp_diagram(&mut rng, 4, 6);
        check(check_infomorphism(&DiagramMap::identity(&d)), || {
            format!("diagram {k}: identity rejected")
        })?;
    }
    Ok(format!(
        "{} pairs in the closure; 100 identities pass",
        got.len()
    ))
}

fn associativity() -> Outcome {
    let start = Instant::now();
    let mut rng = sample::rng(5);
    for k in 0..1000 {
        let [r, s, t] = sample::composable_triple(&mut rng, 5);
        let left = r
            .compose(&s)
            .and_then(|rs| rs.compose(&t))
            .map_err(|e| e.to_string())?;
        let right = s
            .compose(&t)
            .and_then(|st| r.compose(&st))
            .map_err(|e| e.to_string())?;
        check(left == right, || format!("triple {k} differs"))?;
    }
    within(Duration::from_secs(10), start)?;
    Ok(format!(
        "1000 triples equal exactly in {:?}",
        start.elapsed()
    ))
}

fn de_morgan() -> Outcome {
    for n in 1..=3 {
        let lattice = IFLattice::from_powerset(&BooleanAlgebra::new(n).unwrap())
            .map_err(|e| e.to_string())?;
        let result = lattice.check_de_morgan();
        check(result == Ok(true), || format!("powerset n={n}: {result:?}"))?;
    }
    let mut rng = sample::rng(6);
    let (mut passed, mut drawn) = (0, 0);
    let mut sizes = std::collections::BTreeMap::new();
    while passed < 100 {
        drawn += 1;
        check(drawn <= 100_000, || {
            format!("only {passed} orders met the preconditions")
        })?;
        let order = sample::if_order(&mut rng, 8);
        let lattice = IFLattice::new(order).map_err(|e| e.to_string())?;
        let eligible = lattice.is_lattice()
            && lattice.is_complemented().unwrap_or(false)
            && lattice.is_distributive().unwrap_or(false);
        if !eligible {
            continue;
        }
        let result = lattice.check_de_morgan();
        check(result == Ok(true), || {
            format!("random order {drawn}: {result:?}")
        })?;
        passed += 1;
        *sizes.entry(lattice.len()).or_insert(0) += 1;
    }
    Ok(format!(
        "powersets n = 1..3 and 100 of {drawn} random IF orders (carrier size: count {sizes:?}) satisfy both laws"
    ))
}

fn crisp_embedding() -> Outcome {
    let mut rng = sample::rng(7);
    let mut cells = 0;
    for k in 0..50 {
        let diagram = sample::crisp_diagram(&mut rng, 4, 6);
        let fuzzy = FuzzyAristotelianDiagram::from_crisp(&diagram).map_err(|e| e.to_string())?;
        for i in 0..diagram.len() {
            for j in 0..diagram.len() {
                let rel = fuzzy.classify_fuzzy(i, j);
                let crisp = diagram.relation(i, j);
                check(rel.kind == crisp, || {
                    format!("diagram {k} ({i}, {j}): {} vs {crisp}", rel.kind)
                })?;
                check(rel.annotation == IFPair::certain(), || {
                    format!("diagram {k} ({i}, {j}): annotation {}", rel.annotation)
                })?;
                cells += 1;
            }
        }
    }
    Ok(format!(
        "50 diagrams, {cells} cells agree with annotation (1, 0)"
    ))
}

fn contradiction_degrees() -> Outcome {
    let ops = OperatorChoice::standard(Implication::KleeneDienes);
    let domain = ["x", "y", "z"];
    let half = FuzzySet::constant(&domain, Degree::half()).unwrap();
    let c = contradiction_degree(&half, &half, &ops).map_err(|e| e.to_string())?;
    check(c.scalar == Degree::half(), || {
        format!("constant 1/2 gives {}", c.scalar)
    })?;
    let a = FuzzySet::from_pairs([
        ("x", Degree::one()),
        ("y", Degree::zero()),
        ("z", Degree::one()),
    ])
    .unwrap();
    let not_a = FuzzySet::from_pairs([
        ("x", Degree::zero()),
        ("y", Degree::one()),
        ("z", Degree::zero()),
    ])
    .unwrap();
    let c = contradiction_degree(&a, &not_a, &ops).map_err(|e| e.to_string())?;
    check(c.scalar == Degree::one(), || {
        format!("complementary crisp sets give {}", c.scalar)
    })?;
    Ok("1/2 on constant 1/2, 1 on crisp complements".into())
}

fn category_laws() -> Outcome {
    let mut rng = sample::rng(9);
    let chains: Vec<sample::SampleChain> = (0..100)
        .map(|_| sample::infomorphism_chain(&mut rng, 3, 3))
        .collect();
    let triples: Vec<[FuzzyDiagramMap<'_>; 3]> = chains
        .iter()
        .map(|c| {
            let m = c.maps();
            [m[0].clone(), m[1].clone(), m[2].clone()]
        })
        .collect();
    let report = verify_category_laws(&triples);
    check(report.chains == 100, || format!("{} chains", report.chains))?;
    check(report.excluded.is_empty(), || {
        format!("excluded chains {:?}", report.excluded)
    })?;
    check(report.non_composable.is_empty(), || {
        format!("non-composable {:?}", report.non_composable)
    })?;
    for law in [&report.identity, &report.closure, &report.associativity] {
        check(law.checked > 0 && law.failures == 0, || {
            format!("{}: {} of {} failed", law.law, law.failures, law.checked)
        })?;
    }
    Ok(format!(
        "100 chains: identity {}, closure {}, associativity {} checks, zero failures",
        report.identity.checked, report.closure.checked, report.associativity.checked
    ))
}

fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(
    what: &str,
    text: &str,
) -> Result<(), String> {
    let first: T = serde_json::from_str(text).map_err(|e| format!("{what}: {e}"))?;
    let again = serde_json::to_string(&first).map_err(|e| format!("{what}: {e}"))?;
    let second: T = serde_json::from_str(&again).map_err(|e| format!("{what}: {e}"))?;
    check(first == second, || format!("{what}: changed on round trip"))
}

fn cli_round_trip() -> Outcome {
    let mut schemas = 0;
    // Input documents.
    let inputs = [
        ("algebra", r#"{"atoms": ["p", "q", "r"]}"#.to_string()),
        (
            "square",
            std::fs::read_to_string(data("square.json")).map_err(|e| e.to_string())?,
        ),
        (
            "relation",
            std::fs::read_to_string(data("identity.json")).map_err(|e| e.to_string())?,
        ),
        (
            "lattice",
            std::fs::read_to_string(data("graded-powerset.json")).map_err(|e| e.to_string())?,
        ),
        (
            "fuzzy set",
            std::fs::read_to_string(data("half.json")).map_err(|e| e.to_string())?,
        ),
        (
            "fuzzy diagram",
            std::fs::read_to_string(data("fuzzy-square.json")).map_err(|e| e.to_string())?,
        ),
    ];
    for (what, text) in &inputs {
        let value: Value = serde_json::from_str(text).map_err(|e| format!("{what}: {e}"))?;
        let kind =
            DocumentKind::detect(&value).ok_or_else(|| format!("{what}: kind not detected"))?;
        let first = Document::parse(text, kind).map_err(|e| format!("{what}: {e}"))?;
        let second = Document::parse(&first.to_json(), kind).map_err(|e| format!("{what}: {e}"))?;
        check(first == second, || format!("{what}: changed on round trip"))?;
        first.validate().map_err(|e| format!("{what}: {e}"))?;
        schemas += 1;
    }
    // Command outputs.
    let json = |args: &[&str]| -> Result<String, String> {
        let mut all = args.to_vec();
        all.extend(["--format", "json"]);
        let (code, out) = aristotle(&all);
        check(code == 0, || format!("{args:?}: exit {code}"))?;
        Ok(out)
    };
    let square = data("square.json");
    let square = square.to_str().unwrap();
    let canonical: Value =
        serde_json::from_str(&json(&["canonical-square"])?).map_err(|e| e.to_string())?;
    round_trip::<DiagramRecord>(
        "canonical-square diagram",
        &canonical["diagram"].to_string(),
    )?;
    round_trip::<RelationTable>("classify", &json(&["classify", square])?)?;
    round_trip::<OrderReport>(
        "ifrel-check",
        &json(&["ifrel-check", data("identity.json").to_str().unwrap()])?,
    )?;
    round_trip::<LatticeReport>(
        "lattice-check",
        &json(&[
            "lattice-check",
            data("graded-powerset.json").to_str().unwrap(),
        ])?,
    )?;
    round_trip::<FuzzyRelationTable>(
        "fuzzy-classify",
        &json(&[
            "fuzzy-classify",
            data("fuzzy-square.json").to_str().unwrap(),
        ])?,
    )?;
    let half = data("half.json");
    let contra: Value = serde_json::from_str(&json(&[
        "contradiction",
        half.to_str().unwrap(),
        half.to_str().unwrap(),
    ])?)
    .map_err(|e| e.to_string())?;
    round_trip::<Contradiction>("contradiction", &contra["contradiction"].to_string())?;
    let category: Value = serde_json::from_str(&json(&["category-check", "--chains", "10"])?)
        .map_err(|e| e.to_string())?;
    round_trip::<CategoryReport>("category-check", &category["report"].to_string())?;
    schemas += 8;

    // DOT stability: a seeded random diagram rendered twice, plus the fixed inputs.
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let seeded = dir.path().join("seeded.json");
    let d = sample::crisp_diagram(&mut sample::rng(10), 4, 6);
    std::fs::write(
        &seeded,
        Document::Diagram(DiagramRecord::from_diagram(&d)).to_json(),
    )
    .map_err(|e| e.to_string())?;
    let fuzzy_square = data("fuzzy-square.json");
    let runs: [&[&str]; 5] = [
        &["dot", seeded.to_str().unwrap()],
        &["dot", square],
        &["dot", fuzzy_square.to_str().unwrap()],
        &[
            "canonical-square",
            "--format",
            "dot",
            "--contradiction-nu",
            "1/4",
        ],
        &["category-check", "--seed", "3", "--chains", "10"],
    ];
    for args in runs {
        let first = aristotle(args);
        let second = aristotle(args);
        check(first.0 == 0 && first == second, || {
            format!("{args:?}: output differs between runs")
        })?;
        if args[0] == "dot" || args.contains(&"dot") {
            check(
                first.1.starts_with("digraph \"") && first.1.trim_end().ends_with('}'),
                || format!("{args:?}: not a digraph"),
            )?;
        }
    }
    Ok(format!(
        "{schemas} schemas round-trip; DOT and seeded output stable across runs"
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("traditional square reproduction", square_theses),
        ("Boolean axiom suite", boolean_axioms),
        ("relation partition", partition),
        ("informativity order", informativity),
        ("composition associativity", associativity),
        ("De Morgan laws", de_morgan),
        ("crisp-embedding faithfulness", crisp_embedding),
        ("contradiction degrees", contradiction_degrees),
        ("category laws", category_laws),
        ("CLI round trip", cli_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
