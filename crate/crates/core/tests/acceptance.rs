//! Acceptance gate: one line per criterion, non-zero exit if any fails.
//! Every criterion is exact; the only tolerances are the wall-clock budgets.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ore::report::Record;
use ore::verify;
use ore::zs::{check_ip_axioms, CorruptedV, Family, FamilyKind};

const SEED: u64 = 0;

struct Criterion {
    id: usize,
    title: &'static str,
    budget: Duration,
    run: fn() -> Vec<Record>,
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn c1() -> Vec<Record> {
    verify::normal_form_confluence(3, 8, 6, 10_000, SEED)
}

fn c2() -> Vec<Record> {
    verify::lattice_laws(6)
}

fn c3() -> Vec<Record> {
    let mut out = verify::ip_axioms(Family::binary(FamilyKind::T), 5);
    out.extend(verify::ip_axioms(Family::binary(FamilyKind::V), 5));
    out.extend(verify::ip_axioms(Family::binary(FamilyKind::BV), 4));
    out.extend(verify::bv_relations(4));
    // the checker must reject a table that breaks the axioms
    let control = check_ip_axioms(&CorruptedV, 4);
    out.push(Record::new("ip-axioms/negative-control", "corrupted V, degree <= 4", true, !control.passed()));
    out
}

fn c4() -> Vec<Record> {
    let mut out = verify::rotation_action();
    let expected = ["F(3;1)", "rot(2 mod 4)"];
    for (r, e) in out.clone().iter().zip(expected) {
        out.push(Record::new("rotation-action/literal", r.instance.clone(), e, r.got.clone()));
    }
    out
}

fn c5() -> Vec<Record> {
    verify::pi_equivariance(4, 3, 500, SEED)
}

fn c6() -> Vec<Record> {
    verify::group_arithmetic(1000, SEED)
}

fn c7() -> Vec<Record> {
    verify::e_complexes(8, 6).expect("E-complexes build")
}

fn c8() -> Vec<Record> {
    verify::connectivity(5, 12).expect("matching complexes fit the budget")
}

fn c9() -> Vec<Record> {
    verify::descending_links(7, 6).expect("descending links build")
}

fn c10() -> Vec<Record> {
    verify::basilica(3).expect("bad graphs build")
}

fn c11() -> Vec<Record> {
    let mut out = verify::braid_kernel(5);
    for n in 2..=5usize {
        let d = ore::units::BraidWord::delta(n);
        out.push(Record::new("braid/delta-length", format!("n={n}"), n * (n - 1) / 2, d.word.len()));
    }
    out
}

fn c12() -> Vec<Record> {
    let mut out = verify::components(3, 10);
    for m in 1..=10usize {
        for n in m..=10usize {
            out.push(Record::new(
                "components/congruence",
                format!("{m}->{n}"),
                (n - m) % 2 == 0,
                ore::forest::component_reachable(m, n, 3),
            ));
        }
    }
    out
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, title: "forest normal form confluence", budget: secs(10), run: c1 },
        Criterion { id: 2, title: "lattice laws on F(1,n), n <= 6", budget: secs(30), run: c2 },
        Criterion { id: 3, title: "IP1-IP8 for T, V, BV", budget: secs(120), run: c3 },
        Criterion { id: 4, title: "rotation acting on a caret in T", budget: secs(1), run: c4 },
        Criterion { id: 5, title: "pi-equivariance BV -> V", budget: secs(60), run: c5 },
        Criterion { id: 6, title: "group arithmetic and element orders", budget: secs(120), run: c6 },
        Criterion { id: 7, title: "E-complexes vs matching complexes", budget: secs(120), run: c7 },
        Criterion { id: 8, title: "matching complex connectivity", budget: secs(300), run: c8 },
        Criterion { id: 9, title: "descending links and sublevel complexes", budget: secs(120), run: c9 },
        Criterion { id: 10, title: "E(H) is a circle for the bad graphs", budget: secs(30), run: c10 },
        Criterion { id: 11, title: "braid kernel relations", budget: secs(60), run: c11 },
        Criterion { id: 12, title: "Higman-Thompson components of F_3", budget: secs(1), run: c12 },
    ];
    let mut all_ok = true;
    for c in &criteria {
        let start = Instant::now();
        let records = (c.run)();
        let took = start.elapsed();
        let failed: Vec<&Record> = records.iter().filter(|r| !r.pass).collect();
        let ok = !records.is_empty() && failed.is_empty() && took <= c.budget;
        all_ok &= ok;
        println!(
            "criterion {:>2} {} | {} | {} checks, {} failed | {:.2?} (budget {:?})",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            records.len(),
            failed.len(),
            took,
            c.budget,
        );
        for r in failed.iter().take(5) {
            println!("    {} [{}]: expected {}, got {}", r.name, r.instance, r.expected, r.got);
        }
    }
    if all_ok { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
