use std::collections::BTreeSet;

use anyhow::{bail, Context};
use dlab::ordertype::{canonical_signature, census, database_file_name, known_order_type_count, read_database};
use dlab::geometry::PointSet;
use serde_json::json;

use crate::report::{fixture_record, read_fixture, Reporter};
use crate::{Common, Status};

pub struct Params {
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    pub reflection: bool,
    pub range: i64,
    pub list: bool,
}

/// `x,y` pairs separated by spaces.
fn points_text(p: &PointSet) -> String {
    p.points().iter().map(|q| format!("{},{}", q.x, q.y)).collect::<Vec<_>>().join(" ")
}

pub fn run(common: &Common, params: &Params, reporter: &mut Reporter) -> anyhow::Result<Status> {
    let n = params.n;
    if !(3..=8).contains(&n) {
        bail!("census supports 3 <= n <= 8, got {n}");
    }
    if params.range < 4 || params.range > 1 << 30 {
        bail!("coordinate range must lie in [4, 2^30], got {}", params.range);
    }
    let result = census(n, params.trials, params.seed, params.range, params.reflection);
    let known = known_order_type_count(n).expect("known for n <= 8");
    let mut status = Status::Consistent;

    println!("n={n} trials={} seed={} reflection={}", params.trials, params.seed, if params.reflection { "on" } else { "off" });
    println!("distinct signatures: {}", result.distinct());
    for (t, d) in result.saturation_curve() {
        println!("  after {t:>10} trials: {d}");
    }
    let curve: Vec<(u64, usize)> = result.saturation_curve();

    // The table counts mirror images as one order type.
    let mut in_database = None;
    if params.reflection {
        if result.distinct() == known {
            println!("table value {known}: saturated");
        } else {
            println!("table value {known}: partial ({} of {known})", result.distinct());
        }
        if result.distinct() > known {
            status = Status::Contradiction;
            reporter.failure("contradiction", &format!("{} signatures exceed the known count {known}", result.distinct()));
        }
        let path = common.db_dir.join(database_file_name(n));
        if path.exists() {
            let fixture = read_fixture(&path)?;
            reporter.emit(&fixture_record(&path, &fixture));
            let db: BTreeSet<_> = read_database(&path, n)
                .with_context(|| format!("ingesting {}", path.display()))?
                .iter()
                .map(|p| canonical_signature(p, true))
                .collect();
            let missing: Vec<_> = result.entries.keys().filter(|s| !db.contains(s)).collect();
            println!("found in database: {} of {}", result.distinct() - missing.len(), result.distinct());
            for s in &missing {
                status = Status::Contradiction;
                reporter.failure("contradiction", &format!("signature {} is absent from the database", s.to_hex()));
            }
            in_database = Some(missing.is_empty());
        }
    } else {
        println!("table value {known} counts mirror images once; no comparison without reflection");
    }

    if params.list {
        for (sig, entry) in &result.entries {
            println!("{}\t{}", sig.to_hex(), points_text(&entry.representative));
        }
    }

    reporter.emit(&json!({
        "record": "census",
        "n": n,
        "trials": params.trials,
        "seed": params.seed,
        "reflection": params.reflection,
        "range": params.range,
        "distinct": result.distinct(),
        "table": if params.reflection { Some(known) } else { None },
        "saturation_curve": curve,
        "last_discovery": result.last_discovery(),
        "all_in_database": in_database,
    }));
    for (sig, entry) in &result.entries {
        reporter.emit(&json!({
            "record": "signature",
            "signature": sig.to_hex(),
            "trial": entry.trial,
            "representative": points_text(&entry.representative),
        }));
    }
    Ok(status)
}
