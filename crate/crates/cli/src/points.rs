use std::path::Path;

use anyhow::Context;
use dlab::disjointness::build_dgraph;
use dlab::geometry::PointSet;
use dlab::hamilton::HamiltonResult;
use dlab::ordertype::{canonical_signature, parse_point_set};
use serde_json::json;

use crate::report::{fixture_record, read_fixture, Reporter};
use crate::theorem::analyse;
use crate::Status;

fn load(path: &Path) -> anyhow::Result<(PointSet, crate::report::Fixture)> {
    let fixture = read_fixture(path)?;
    let text = String::from_utf8(fixture.bytes.clone()).with_context(|| format!("{} is not UTF-8", path.display()))?;
    let points = parse_point_set(&text).with_context(|| format!("reading {}", path.display()))?;
    Ok((points, fixture))
}

pub fn ham_check(path: &Path, reporter: &mut Reporter) -> anyhow::Result<Status> {
    let (points, fixture) = load(path)?;
    reporter.emit(&fixture_record(path, &fixture));
    let a = analyse(&points)?;
    let verdict = match &a.hamilton {
        _ if !a.connected => "DISCONNECTED",
        HamiltonResult::Cycle(..) => "HAMILTONIAN",
        HamiltonResult::Exhausted(_) => "NOT HAMILTONIAN",
        HamiltonResult::Unknown(_) => "UNKNOWN",
    };
    println!("{verdict}");
    println!("{}", a.witness_or_reason());
    println!("alpha={} kappa={} bound={}", a.alpha, a.kappa, a.bound);

    let problems = a.contradictions();
    reporter.emit(&json!({
        "record": "verdict",
        "n": a.n,
        "signature": canonical_signature(&points, true).to_hex(),
        "convex": a.convex,
        "connected": a.connected,
        "hamiltonian": a.hamilton.is_hamiltonian() == Some(true),
        "witness_or_reason": a.witness_or_reason(),
        "alpha": a.alpha,
        "kappa": a.kappa,
        "bound": a.bound,
        "consistent": problems.is_empty(),
    }));
    for p in &problems {
        reporter.failure("contradiction", p);
    }
    Ok(if problems.is_empty() { Status::Consistent } else { Status::Contradiction })
}

pub fn export(path: &Path, out: Option<&Path>) -> anyhow::Result<Status> {
    let (points, _) = load(path)?;
    let text = build_dgraph(&points)?.export();
    match out {
        Some(o) => std::fs::write(o, text).with_context(|| format!("cannot write {}", o.display()))?,
        None => print!("{text}"),
    }
    Ok(Status::Consistent)
}
