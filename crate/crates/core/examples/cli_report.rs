//! Runs a command from the CLI layer on an inline document and prints both output formats.

use polycurv::cli::{emit_json, emit_text, parse_input, run, Command, RunOptions};

fn main() -> polycurv::Result<()> {
    let doc = parse_input(include_str!("data/l_shape.json"), "l_shape.json")?;
    let report = run(Command::GaussBonnet, &doc, &RunOptions::default())?;
    let mut out = std::io::stdout();
    emit_text(&report, &mut out).expect("stdout");
    emit_json(&report, &mut out).expect("stdout");
    Ok(())
}
