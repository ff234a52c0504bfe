use std::time::Instant;

use anyhow::{bail, Context};
use dlab::ordertype::{database_file_name, enumerate_order_types, write_database};
use serde_json::json;

use crate::report::{fixture_record, read_fixture, Reporter};
use crate::{Common, Status};

pub fn build(common: &Common, max_n: usize, grid: i64, seed: u64, reporter: &mut Reporter) -> anyhow::Result<Status> {
    if !(3..=8).contains(&max_n) {
        bail!("--max-n must lie in 3..=8, got {max_n}");
    }
    if !(8..=256).contains(&grid) {
        bail!("--grid must lie in 8..=256 to fit one byte per coordinate, got {grid}");
    }
    std::fs::create_dir_all(&common.db_dir).with_context(|| format!("cannot create {}", common.db_dir.display()))?;
    let start = Instant::now();
    let levels = enumerate_order_types(max_n, grid, seed, |p| {
        eprintln!(
            "n={} found {}/{} bases extended {} pending {} ({:.1?})",
            p.n,
            p.found,
            p.target.map_or("?".into(), |t| t.to_string()),
            p.bases_extended,
            p.bases_pending,
            start.elapsed()
        );
    });
    for (k, sets) in levels.iter().enumerate() {
        let n = k + 3;
        let path = common.db_dir.join(database_file_name(n));
        write_database(&path, n, sets)?;
        let fixture = read_fixture(&path)?;
        println!("{}: {} order types", path.display(), sets.len());
        reporter.emit(&fixture_record(&path, &fixture));
        reporter.emit(&json!({ "record": "database", "n": n, "order_types": sets.len(), "grid": grid, "seed": seed }));
    }
    Ok(Status::Consistent)
}
