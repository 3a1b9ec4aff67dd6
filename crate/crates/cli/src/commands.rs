use std::fs;
use std::path::Path;

use anyhow::Context;
use star_routing::io::{
    instance_from_json, instance_to_json, rect_from_json, report_to_json, walk_from_json,
};
use star_routing::{
    reduce_rect_tsp_to_grid_star, verify_feasible, Algorithm, Budget, ExperimentConfig, Instance,
};

use crate::failure::Failure;

pub fn read_input(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(Failure::Parse)
}

pub fn read_instance(path: &Path) -> Result<Instance, Failure> {
    let text = read_input(path)?;
    instance_from_json(&text)
        .with_context(|| format!("invalid instance {}", path.display()))
        .map_err(Failure::Parse)
}

fn write_output(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, format!("{text}\n"))
        .with_context(|| format!("cannot write {}", path.display()))
        .map_err(Failure::Solver)
}

pub fn generate(config: &ExperimentConfig, out: &Path) -> Result<(), Failure> {
    let inst = config.generate().map_err(Failure::from_solver)?;
    write_output(out, &instance_to_json(&inst))
}

pub fn solve(algo: Algorithm, input: &Path, out: &Path) -> Result<(), Failure> {
    let inst = read_instance(input)?;
    let report = algo
        .solve_within(&inst, &Budget::from_env())
        .map_err(Failure::from_solver)?;
    // Solvers are expected to be correct; this guards the output file.
    verify_feasible(&inst, &report.walk)
        .map_err(|v| Failure::Solver(anyhow::anyhow!("solver produced an infeasible walk: {v}")))?;
    write_output(out, &report_to_json(&report))?;
    println!("{}: length {}", report.algorithm, report.length());
    Ok(())
}

pub fn verify(instance: &Path, walk: &Path) -> Result<(), Failure> {
    let inst = read_instance(instance)?;
    let walk = walk_from_json(&read_input(walk)?)
        .with_context(|| format!("invalid walk {}", walk.display()))
        .map_err(Failure::Parse)?;
    verify_feasible(&inst, &walk).map_err(Failure::Infeasible)?;
    println!("feasible: length {}", walk.length());
    Ok(())
}

pub fn reduce_tsp(points: &Path, out: &Path) -> Result<(), Failure> {
    let rect = rect_from_json(&read_input(points)?).map_err(Failure::from_input)?;
    let red = reduce_rect_tsp_to_grid_star(&rect).map_err(Failure::from_solver)?;
    write_output(out, &instance_to_json(&red.instance))?;
    let ids: Vec<String> = red.id_map.iter().map(ToString::to_string).collect();
    println!("c = {}", red.scale);
    println!("K = {}", red.k);
    println!("id_map = [{}]", ids.join(","));
    Ok(())
}
