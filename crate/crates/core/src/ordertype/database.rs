//! Binary order-type database files.
//!
//! A file for `n` points is a flat sequence of records. Each record holds `n`
//! points, each point two unsigned coordinates `x y`: one byte per coordinate
//! for `n <= 8`, two little-endian bytes for `n` in `{9, 10}`.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use super::known_order_type_count;
use crate::error::{Error, Result};
use crate::geometry::{Point, PointSet};

fn coordinate_width(n: usize) -> Result<usize> {
    match n {
        3..=8 => Ok(1),
        9 | 10 => Ok(2),
        _ => Err(Error::UnsupportedDatabaseSize(n)),
    }
}

/// Conventional file name, e.g. `otypes08.b08` or `otypes09.b16`.
pub fn database_file_name(n: usize) -> String {
    let bits = if n <= 8 { 8 } else { 16 };
    format!("otypes{n:02}.b{bits:02}")
}

/// Record count a complete database must hold, where known.
pub fn expected_record_count(n: usize) -> Option<usize> {
    known_order_type_count(n).filter(|_| n >= 3)
}

/// Streams the point sets stored in a database file.
#[derive(Debug)]
pub struct DatabaseReader<R = BufReader<File>> {
    reader: R,
    n: usize,
    width: usize,
    records: usize,
    next: usize,
    failed: bool,
}

impl<R: Read> DatabaseReader<R> {
    /// Wraps an already opened stream of `len` bytes. With `expected` set the
    /// record count must match it.
    pub fn new(reader: R, len: usize, n: usize, expected: Option<usize>) -> Result<Self> {
        let width = coordinate_width(n)?;
        let record_size = 2 * width * n;
        if !len.is_multiple_of(record_size) {
            return Err(Error::TruncatedDatabase {
                len,
                record_size,
                offset: len - len % record_size,
            });
        }
        let records = len / record_size;
        if let Some(expected) = expected {
            if records != expected {
                return Err(Error::RecordCountMismatch { n, found: records, expected });
            }
        }
        Ok(DatabaseReader { reader, n, width, records, next: 0, failed: false })
    }

    pub fn record_count(&self) -> usize {
        self.records
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn read_record(&mut self) -> Result<PointSet> {
        let record_size = 2 * self.width * self.n;
        let offset = self.next * record_size;
        let mut buf = vec![0u8; record_size];
        self.reader.read_exact(&mut buf).map_err(|source| Error::Io {
            path: PathBuf::from(format!("<record at byte offset {offset}>")),
            source,
        })?;
        let coord = |k: usize| -> i64 {
            if self.width == 1 {
                buf[k] as i64
            } else {
                u16::from_le_bytes([buf[2 * k], buf[2 * k + 1]]) as i64
            }
        };
        let points = (0..self.n).map(|i| Point::new(coord(2 * i), coord(2 * i + 1))).collect();
        PointSet::new(points)
            .map_err(|source| Error::DegenerateRecord { offset, source: Box::new(source) })
    }
}

impl<R: Read> Iterator for DatabaseReader<R> {
    type Item = Result<PointSet>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed || self.next >= self.records {
            return None;
        }
        let item = self.read_record();
        self.failed = item.is_err();
        self.next += 1;
        Some(item)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = if self.failed { 0 } else { self.records - self.next };
        (0, Some(left))
    }
}

/// Opens a database file for `n`-point sets. For `n <= 8` the record count
/// must equal the known number of order types.
pub fn ingest_database(path: &Path, n: usize) -> Result<DatabaseReader> {
    coordinate_width(n)?;
    let io = |source| Error::Io { path: path.to_path_buf(), source };
    let file = File::open(path).map_err(io)?;
    let len = file.metadata().map_err(io)?.len() as usize;
    DatabaseReader::new(BufReader::new(file), len, n, expected_record_count(n))
}

/// Reads a whole database into memory.
pub fn read_database(path: &Path, n: usize) -> Result<Vec<PointSet>> {
    ingest_database(path, n)?.collect()
}

/// Writes point sets in the database layout. Every coordinate must fit the
/// unsigned width used for `n`.
pub fn write_database(path: &Path, n: usize, sets: &[PointSet]) -> Result<()> {
    let width = coordinate_width(n)?;
    let max = if width == 1 { u8::MAX as i64 } else { u16::MAX as i64 };
    let io = |source| Error::Io { path: path.to_path_buf(), source };
    let mut out = BufWriter::new(File::create(path).map_err(io)?);
    for (r, set) in sets.iter().enumerate() {
        if set.len() != n {
            return Err(Error::InvalidArgument(format!(
                "record {r} has {} points, expected {n}",
                set.len()
            )));
        }
        for p in set.points() {
            for c in [p.x, p.y] {
                if !(0..=max).contains(&c) {
                    return Err(Error::InvalidArgument(format!(
                        "record {r}: coordinate {c} does not fit {width} byte(s)"
                    )));
                }
                if width == 1 {
                    out.write_all(&[c as u8]).map_err(io)?;
                } else {
                    out.write_all(&(c as u16).to_le_bytes()).map_err(io)?;
                }
            }
        }
    }
    out.flush().map_err(io)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reader(bytes: &[u8], n: usize, expected: Option<usize>) -> Result<DatabaseReader<&[u8]>> {
        DatabaseReader::new(bytes, bytes.len(), n, expected)
    }

    #[test]
    fn one_byte_records() {
        let bytes = [0, 0, 10, 0, 0, 10, 1, 1, 9, 2, 3, 8];
        let sets: Vec<_> = reader(&bytes, 3, None).unwrap().collect::<Result<_>>().unwrap();
        assert_eq!(sets.len(), 2);
        assert_eq!(sets[1].point(2), Point::new(3, 8));
    }

    #[test]
    fn two_byte_records() {
        let coords: Vec<(u16, u16)> =
            vec![(0, 0), (1000, 3), (2, 700), (500, 500), (900, 40), (30, 50), (260, 610), (400, 90), (77, 333)];
        let bytes: Vec<u8> = coords
            .iter()
            .flat_map(|&(x, y)| x.to_le_bytes().into_iter().chain(y.to_le_bytes()))
            .collect();
        let mut r = reader(&bytes, 9, None).unwrap();
        let p = r.next().unwrap().unwrap();
        assert_eq!(p.point(1), Point::new(1000, 3));
        assert!(r.next().is_none());
    }

    #[test]
    fn truncated_file() {
        let bytes = [0u8; 13];
        match reader(&bytes, 3, None) {
            Err(Error::TruncatedDatabase { offset: 12, record_size: 6, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn count_mismatch() {
        let bytes = [0, 0, 10, 0, 0, 10];
        assert!(matches!(
            reader(&bytes, 3, Some(2)),
            Err(Error::RecordCountMismatch { found: 1, expected: 2, .. })
        ));
    }

    #[test]
    fn degenerate_record_reports_offset() {
        let bytes = [0, 0, 10, 0, 0, 10, 0, 0, 1, 1, 2, 2];
        let mut r = reader(&bytes, 3, None).unwrap();
        assert!(r.next().unwrap().is_ok());
        match r.next().unwrap() {
            Err(Error::DegenerateRecord { offset: 6, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(r.next().is_none());
    }

    #[test]
    fn unsupported_sizes() {
        assert!(matches!(reader(&[], 2, None), Err(Error::UnsupportedDatabaseSize(2))));
        assert!(matches!(reader(&[], 11, None), Err(Error::UnsupportedDatabaseSize(11))));
        assert_eq!(database_file_name(6), "otypes06.b08");
        assert_eq!(database_file_name(10), "otypes10.b16");
    }

    #[test]
    fn write_then_read() {
        let dir = std::env::temp_dir().join(format!("dlab-db-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("t.b08");
        let sets = vec![
            PointSet::from_coords(&[(0, 0), (255, 0), (0, 255)]).unwrap(),
        ];
        write_database(&path, 3, &sets).unwrap();
        assert_eq!(read_database(&path, 3).unwrap(), sets);
        let too_big = vec![PointSet::from_coords(&[(0, 0), (256, 0), (0, 255)]).unwrap()];
        assert!(write_database(&path, 3, &too_big).is_err());
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
