//! Runs the approximations and the exact oracle over every instance file in
//! a directory and tabulates the ratios.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Context;
use rayon::prelude::*;
use star_routing::io::instance_from_json;
use star_routing::{Algorithm, Budget, Error, GraphKind, Instance, TspBackend};

use crate::failure::Failure;

#[derive(Debug, Clone, PartialEq)]
struct Row {
    instance: String,
    algo: String,
    length: Option<usize>,
    opt: Option<usize>,
    ratio: Option<f64>,
    note: String,
}

/// `length / opt`, with `0 / 0` read as 1.
fn ratio(length: usize, opt: usize) -> Option<f64> {
    match (length, opt) {
        (0, 0) => Some(1.0),
        (_, 0) => None,
        _ => Some(length as f64 / opt as f64),
    }
}

fn algorithms(inst: &Instance) -> Vec<Algorithm> {
    let mut algos = vec![
        Algorithm::MatchingTsp(TspBackend::DoubleTree),
        Algorithm::MatchingTsp(TspBackend::Christofides),
    ];
    if matches!(inst.graph().kind(), GraphKind::Grid { .. }) {
        algos.push(Algorithm::DenseGrid);
    }
    algos
}

fn algo_name(a: Algorithm) -> String {
    match a {
        Algorithm::MatchingTsp(b) => format!("matching-tsp/{b}"),
        Algorithm::DenseGrid => "dense-grid".into(),
        Algorithm::Exact => "exact".into(),
    }
}

fn note_for(err: &Error) -> String {
    match err {
        Error::BudgetExceeded { what, size, limit } => {
            format!("budget skip: {what} {size} > {limit}")
        }
        other => format!("error: {other}"),
    }
}

fn rows_for(id: String, path: &Path, budget: &Budget) -> Vec<Row> {
    let parsed = fs::read_to_string(path)
        .map_err(|e| Error::Parse(e.to_string()))
        .and_then(|text| instance_from_json(&text));
    let inst = match parsed {
        Ok(inst) => inst,
        Err(e) => {
            return vec![Row {
                instance: id,
                algo: String::new(),
                length: None,
                opt: None,
                ratio: None,
                note: note_for(&e),
            }]
        }
    };
    let exact = Algorithm::Exact.solve_within(&inst, budget);
    algorithms(&inst)
        .into_iter()
        .map(|algo| {
            let mut row = Row {
                instance: id.clone(),
                algo: algo_name(algo),
                length: None,
                opt: None,
                ratio: None,
                note: String::new(),
            };
            match algo.solve_within(&inst, budget) {
                Ok(report) => {
                    row.length = Some(report.length());
                    if report.algorithm.to_string() != row.algo {
                        row.note = format!("ran as {}", report.algorithm);
                    }
                }
                Err(e) => row.note = note_for(&e),
            }
            match &exact {
                Ok(opt) => {
                    row.opt = Some(opt.length());
                    row.ratio = row.length.and_then(|len| ratio(len, opt.length()));
                }
                Err(e) if row.note.is_empty() => row.note = format!("no opt, {}", note_for(e)),
                Err(_) => {}
            }
            row
        })
        .collect()
}

fn corpus_files(dir: &Path) -> anyhow::Result<Vec<(String, PathBuf)>> {
    let mut files = Vec::new();
    for entry in fs::read_dir(dir).with_context(|| format!("cannot read {}", dir.display()))? {
        let path = entry?.path();
        if path.extension().is_some_and(|e| e == "json") {
            let id = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            files.push((id, path));
        }
    }
    files.sort();
    Ok(files)
}

pub fn run(corpus: &Path, out: &Path) -> Result<(), Failure> {
    let files = corpus_files(corpus).map_err(Failure::Parse)?;
    let budget = Budget::from_env();
    // par_iter + collect keeps the input order.
    let rows: Vec<Row> = files
        .into_par_iter()
        .flat_map_iter(|(id, path)| rows_for(id, &path, &budget))
        .collect();

    let write = || -> anyhow::Result<()> {
        let mut w = csv::Writer::from_path(out)?;
        w.write_record(["instance", "algo", "length", "opt", "ratio", "note"])?;
        let cell = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        for r in &rows {
            w.write_record([
                r.instance.clone(),
                r.algo.clone(),
                cell(r.length),
                cell(r.opt),
                r.ratio.map(|x| format!("{x:.4}")).unwrap_or_default(),
                r.note.clone(),
            ])?;
        }
        w.flush()?;
        Ok(())
    };
    write()
        .with_context(|| format!("cannot write {}", out.display()))
        .map_err(Failure::Solver)?;

    let max = rows
        .iter()
        .filter_map(|r| r.ratio)
        .fold(None, |acc: Option<f64>, x| {
            Some(acc.map_or(x, |a| a.max(x)))
        });
    let skipped = rows
        .iter()
        .filter(|r| !r.note.is_empty() && r.ratio.is_none())
        .count();
    match max {
        Some(m) => println!("max ratio: {m:.4}"),
        None => println!("max ratio: n/a"),
    }
    if skipped > 0 {
        println!("rows without a ratio: {skipped}");
    }
    Ok(())
}
