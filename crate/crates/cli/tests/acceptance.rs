//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Criteria listed in `KNOWN_UNATTAINABLE` still run and still print FAIL;
//! the process exits nonzero on any other failure, or if a listed one
//! starts passing.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::fs;
use std::time::{Duration, Instant};

use orthokit::checkers::{
    check_modular_inequality, check_order_implies_compatible, check_orthomodular, check_proof_step, defect_pairs,
};
use orthokit::crosscheck::cross_validate;
use orthokit::format::{export_dot, export_olf, parse_olf};
use orthokit::generators::{gen_boolean, gen_mo, gen_o6, gen_subspace_mo, greechie_paste, GenError, GreechieDiagram};
use orthokit::info::{capacity, is_relevance_preserving, defect_witness, CapacityOptions};
use orthokit::relevance::{is_irrelevant, relevance_witness, strictly_greater_relevant};
use orthokit::{FiniteLattice, OrthoLattice};

use common::naive::{labeled, naive_paste, raw_classes};

/// Criterion 8 asks for `gen_subspace_mo(3) ≅ gen_mo(4)` and
/// `gen_subspace_mo(7) ≅ gen_mo(8)`. The plane over GF(p) has p+1 lines,
/// which pair off into (p+1)/2 complementary pairs, so the subspace
/// lattices are MO_2 (6 elements) and MO_4 (10 elements).
const KNOWN_UNATTAINABLE: &[u32] = &[8];

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(checks: &[(&str, bool)]) -> Outcome {
    let failed: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(name, _)| *name).collect();
    Outcome {
        ok: failed.is_empty(),
        detail: if failed.is_empty() {
            format!("{} checks", checks.len())
        } else {
            format!("failed: {}", failed.join(", "))
        },
    }
}

fn names(l: &OrthoLattice, pairs: &[(orthokit::ElementId, orthokit::ElementId)]) -> Vec<(String, String)> {
    pairs.iter().map(|&(x, y)| (l.name(x), l.name(y))).collect()
}

fn criterion_1() -> Outcome {
    let o6 = gen_o6();
    let poset = o6.lattice().poset().clone();
    let revalidated = OrthoLattice::new(FiniteLattice::from_poset(poset).unwrap(), o6.ortho_map().to_vec()).is_ok();
    let defects = names(&o6, &defect_pairs(&o6));
    outcome(&[
        ("axioms (a)-(d)", revalidated),
        ("not orthomodular", !check_orthomodular(&o6).verdict),
        (
            "defects {(a,b),(b',a')}",
            defects == [("a".into(), "b".into()), ("b'".into(), "a'".into())],
        ),
    ])
}

fn criterion_2(corpus: &[OrthoLattice]) -> Outcome {
    let agree = corpus
        .iter()
        .all(|l| check_orthomodular(l).verdict == defect_pairs(l).is_empty());
    outcome(&[("definition iff defect-free", agree)])
}

fn criterion_3(corpus: &[OrthoLattice]) -> Outcome {
    outcome(&[
        (
            "inequality holds",
            corpus
                .iter()
                .all(|l| check_modular_inequality(l.lattice()).witnesses.is_empty()),
        ),
        (
            "proof step holds",
            corpus.iter().all(|l| check_proof_step(l).witnesses.is_empty()),
        ),
    ])
}

fn criterion_4(corpus: &[OrthoLattice]) -> Outcome {
    let oml_empty = corpus
        .iter()
        .filter(|l| check_orthomodular(l).verdict)
        .all(|l| l.elements().all(|a| strictly_greater_relevant(l, a).is_empty()));
    let o6 = gen_o6();
    let hexagon = strictly_greater_relevant(&o6, o6.find("a").unwrap()) == [o6.find("b").unwrap()];
    let formulations = corpus.iter().all(|l| {
        l.elements().all(|a| {
            l.elements()
                .all(|b| is_irrelevant(l, b, a) == relevance_witness(l, b, a).is_some())
        })
    });
    outcome(&[
        ("orthomodular: nothing strictly greater is relevant", oml_empty),
        ("O6: a -> [b]", hexagon),
        ("meet and witness formulations agree", formulations),
    ])
}

fn criterion_5(corpus: &[OrthoLattice]) -> Outcome {
    let agree = corpus
        .iter()
        .all(|l| check_order_implies_compatible(l).verdict == check_orthomodular(l).verdict);
    let o6 = gen_o6();
    let ab = [o6.find("a").unwrap(), o6.find("b").unwrap()];
    let o6_fails = check_order_implies_compatible(&o6).first_witness() == Some(&ab[..])
        && check_orthomodular(&o6).first_witness() == Some(&ab[..]);
    let mut families: Vec<OrthoLattice> = (1..=4).map(|k| gen_boolean(k).unwrap()).collect();
    families.extend((1..=6).map(|m| gen_mo(m).unwrap()));
    let families_pass = families
        .iter()
        .all(|l| check_order_implies_compatible(l).verdict && check_orthomodular(l).verdict);
    outcome(&[
        ("compatibility iff orthomodular", agree),
        ("O6 fails both at (a,b)", o6_fails),
        ("Boolean and MO pass both", families_pass),
    ])
}

fn criterion_6() -> Outcome {
    let limit = Duration::from_secs(10);
    let mut checks: Vec<(String, bool)> = Vec::new();
    let mut cases: Vec<(String, OrthoLattice, usize)> = (1..=4)
        .map(|n| (format!("2^{n}"), gen_boolean(n).unwrap(), n as usize))
        .collect();
    cases.extend((2..=4).map(|m| (format!("MO_{m}"), gen_mo(m).unwrap(), m + 1)));
    cases.push(("O6".into(), gen_o6(), 3));
    for (name, l, expected) in &cases {
        let start = Instant::now();
        let got = capacity(l, CapacityOptions::default()).map(|r| r.capacity);
        let fast = start.elapsed() < limit;
        checks.push((format!("{name} = {expected}"), got == Ok(*expected) && fast));
        let n = l.len();
        let reversed: Vec<usize> = (0..n).rev().collect();
        let rotated: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        for perm in [reversed, rotated] {
            let again = capacity(&l.relabel(&perm), CapacityOptions::default()).map(|r| r.capacity);
            checks.push((format!("{name} relabeled"), again == got));
        }
    }
    let refs: Vec<(&str, bool)> = checks.iter().map(|(s, ok)| (s.as_str(), *ok)).collect();
    outcome(&refs)
}

fn criterion_7(enumerated: &[OrthoLattice]) -> Outcome {
    let o6 = gen_o6();
    let hexagon = defect_witness(&o6).is_some_and(|w| {
        (o6.name(w.lower), o6.name(w.upper)) == ("a".into(), "b".into())
            && w.certificate.as_slice() == [w.lower, w.upper]
            && is_relevance_preserving(&o6, &w.certificate)
    });
    let exact = enumerated.iter().all(|l| match defect_witness(l) {
        Some(w) => {
            !check_orthomodular(l).verdict
                && l.lt(w.lower, w.upper)
                && l.meet(l.ortho(w.lower), w.upper) == l.bottom()
                && is_relevance_preserving(l, &w.certificate)
        }
        None => check_orthomodular(l).verdict,
    });
    outcome(&[
        ("O6 certificate [a,b]", hexagon),
        ("present iff not orthomodular", exact),
    ])
}

fn criterion_8() -> Outcome {
    let p3 = gen_subspace_mo(3).map(|l| l.canonical_form() == gen_mo(4).unwrap().canonical_form());
    let p5 = gen_subspace_mo(5);
    let p7 = gen_subspace_mo(7).map(|l| l.is_isomorphic(&gen_mo(8).unwrap()));
    let two = GreechieDiagram::new(&[vec!["p", "q", "r"], vec!["r", "s", "t"]]).unwrap();
    let two = greechie_paste(&two, false);
    let triangle_blocks = vec![vec!["a", "b", "c"], vec!["c", "d", "e"], vec!["e", "f", "a"]];
    let triangle = greechie_paste(&GreechieDiagram::new(&triangle_blocks).unwrap(), true);
    let oracle = naive_paste(&triangle_blocks);
    let classified = match (&triangle, &oracle) {
        (Err(_), Err(_)) => true,
        (Ok(l), Ok(raw)) => l.is_isomorphic(&common::naive::to_lattice(raw)),
        _ => false,
    };
    outcome(&[
        ("subspace(3) canonically equals MO_4", p3 == Ok(true)),
        (
            "subspace(5) isotropic at (1,2)",
            p5 == Err(GenError::IsotropicForm { vector: (1, 2) }),
        ),
        ("subspace(7) isomorphic to MO_8", p7 == Ok(true)),
        (
            "two-block pasting: 12 elements, orthomodular",
            two.as_ref()
                .is_ok_and(|l| l.len() == 12 && check_orthomodular(l).verdict),
        ),
        ("triangle matches brute-force oracle", classified),
    ])
}

type Listing = Vec<(String, Vec<u8>)>;
type Criterion<'a> = (u32, &'static str, Option<Duration>, Box<dyn Fn() -> Outcome + 'a>);

fn cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = orthokit_cli::run(
        std::iter::once("orthokit").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap())
}

fn criterion_9(enumerated: &[OrthoLattice]) -> Outcome {
    let six: Vec<&OrthoLattice> = enumerated.iter().filter(|l| l.len() == 6).collect();
    let (mo2, o6) = (gen_mo(2).unwrap(), gen_o6());
    let exactly =
        six.len() == 2 && six.iter().any(|l| l.is_isomorphic(&mo2)) && six.iter().any(|l| l.is_isomorphic(&o6));
    let counts = (1..=6).all(|n| raw_classes(n).len() == enumerated.iter().filter(|l| l.len() == n).count());
    let even = enumerated.iter().all(|l| l.len() % 2 == 0) && labeled(3).is_empty() && labeled(5).is_empty();
    let distinct = enumerated
        .iter()
        .map(|l| l.canonical_form())
        .collect::<BTreeSet<_>>()
        .len()
        == enumerated.len();
    let cross = cross_validate(enumerated).verdict();

    let dirs: Vec<tempfile::TempDir> = (0..3).map(|_| tempfile::tempdir().unwrap()).collect();
    let runs: Vec<(i32, String, Listing)> = ["1", "2", "4"]
        .iter()
        .zip(&dirs)
        .map(|(jobs, dir)| {
            let path = dir.path().to_str().unwrap();
            let (code, report) = cli(&["enumerate", "--max-size", "10", "--jobs", jobs, "--out", path]);
            let mut files: Listing = fs::read_dir(dir.path())
                .unwrap()
                .map(|e| {
                    let e = e.unwrap();
                    (
                        e.file_name().to_string_lossy().into_owned(),
                        fs::read(e.path()).unwrap(),
                    )
                })
                .collect();
            files.sort();
            (code, report, files)
        })
        .collect();
    let deterministic = runs.iter().all(|r| r.0 == 0 && r.1 == runs[0].1 && r.2 == runs[0].2);
    outcome(&[
        ("size 6 is {MO_2, O6}", exactly),
        ("counts match brute force for n <= 6", counts),
        ("all sizes even", even),
        ("forms pairwise distinct", distinct),
        ("cross-validation clean", cross),
        ("byte-identical across --jobs", deterministic),
    ])
}

fn criterion_10(corpus: &[OrthoLattice]) -> Outcome {
    let round_trip = corpus.iter().all(|l| {
        let text = export_olf(l);
        parse_olf(&text).is_ok_and(|back| back.canonical_form() == l.canonical_form() && export_olf(&back) == text)
    });
    let dir = tempfile::tempdir().unwrap();
    let o6 = dir.path().join("o6.olf");
    let mo4 = dir.path().join("mo4.olf");
    let broken = dir.path().join("broken.olf");
    fs::write(&o6, export_olf(&gen_o6())).unwrap();
    fs::write(&mo4, export_olf(&gen_mo(4).unwrap())).unwrap();
    fs::write(&broken, "olf 1\nn 2\ncover 0 1\northo 1 1\northo 0 0\n").unwrap();
    let (o6, mo4, broken) = (o6.to_str().unwrap(), mo4.to_str().unwrap(), broken.to_str().unwrap());
    let (code, report) = cli(&["check", o6, "--expect", "non-orthomodular"]);
    let expect_ok =
        code == 0 && report.contains("\northomodular false\n") && report.contains("defects (a,b);(b',a')\n");
    let expect_fail = cli(&["check", o6, "--expect", "orthomodular"]).0 == 2
        && cli(&["check", mo4, "--expect", "orthomodular"]).0 == 0
        && cli(&["check", mo4, "--expect", "non-orthomodular"]).0 == 2;
    let (broken_code, broken_out) = cli(&["check", broken, "--expect", "orthomodular"]);
    let dot = export_dot(&gen_o6());
    let nodes = dot.lines().filter(|l| l.contains("[label=")).count();
    let edges = dot.lines().filter(|l| l.contains("->")).count();
    outcome(&[
        ("round trip keeps canonical form", round_trip),
        ("--expect satisfied exits 0", expect_ok),
        ("--expect violated exits 2", expect_fail),
        (
            "invalid input exits 1 without a report",
            broken_code == 1 && broken_out.is_empty(),
        ),
        ("O6 DOT has 6 nodes and 6 edges", nodes == 6 && edges == 6),
    ])
}

fn main() {
    let setup = Instant::now();
    let enumerated = common::enumerated(10);
    let corpus = common::corpus();
    let setup = setup.elapsed();
    let criteria: Vec<Criterion> = vec![
        (
            1,
            "hexagon axioms and defects",
            Some(Duration::from_secs(1)),
            Box::new(criterion_1),
        ),
        (
            2,
            "two orthomodularity criteria agree",
            Some(Duration::from_secs(300)),
            Box::new(|| criterion_2(&corpus)),
        ),
        (
            3,
            "universal inequality and proof step",
            None,
            Box::new(|| criterion_3(&corpus)),
        ),
        (
            4,
            "relevance of strictly greater questions",
            None,
            Box::new(|| criterion_4(&corpus)),
        ),
        (
            5,
            "order-compatibility iff orthomodular",
            None,
            Box::new(|| criterion_5(&corpus)),
        ),
        (6, "capacities", None, Box::new(criterion_6)),
        (
            7,
            "defect witnesses with certificates",
            None,
            Box::new(|| criterion_7(&enumerated)),
        ),
        (8, "generators and pastings", None, Box::new(criterion_8)),
        (9, "enumeration soundness", None, Box::new(|| criterion_9(&enumerated))),
        (
            10,
            "file formats and exit codes",
            None,
            Box::new(|| criterion_10(&corpus)),
        ),
    ];
    let mut unexpected = Vec::new();
    for (id, title, limit, run) in &criteria {
        let start = Instant::now();
        let mut result = run();
        // The corpus is built once up front; criterion 2 bounds the full run.
        let elapsed = start.elapsed() + if *id == 2 { setup } else { Duration::ZERO };
        if let Some(limit) = limit {
            if elapsed > *limit {
                result.ok = false;
                result.detail = format!("{}; took longer than {limit:?}", result.detail);
            }
        }
        let known = KNOWN_UNATTAINABLE.contains(id);
        let status = if result.ok { "PASS" } else { "FAIL" };
        let note = if known && !result.ok {
            " (known unattainable)"
        } else {
            ""
        };
        println!(
            "{status} {id:>2} {title} [{:.3}s] {}{note}",
            elapsed.as_secs_f64(),
            result.detail
        );
        if result.ok == known {
            unexpected.push(*id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
