use std::process::ExitCode;

use anyhow::Result;
use clap::Parser;

use eislag::par::Exec;
use eislag_cli::config::{Command, RunConfig};
use eislag_cli::output::{discard_pending, emit, render};
use eislag_cli::{commands, plot, verify};

fn run(cfg: &RunConfig) -> Result<bool> {
    if let Some(n) = cfg.effective_threads()? {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    let exec = Exec::best();
    let places = cfg.places();
    let fmt = cfg.format;
    let (bytes, ok) = match &cfg.command {
        Command::Triples { max_c } => (render(&commands::triples(*max_c, exec), fmt)?, true),
        Command::Expand { x, y } => (render(&commands::expand(x, y)?, fmt)?, true),
        Command::Verify { deep } => {
            let r = verify::verify(*deep, exec)?;
            (render(&r, fmt)?, r.passed())
        }
        Command::Plot { target, max_norm, svg } => (render(&plot::plot(target, *max_norm, svg, exec)?, fmt)?, true),
        Command::Delta { target, z } => (render(&commands::delta(target, z, places)?, fmt)?, true),
        Command::Scan { target, max_c, top } => {
            (render(&commands::scan(target, *max_c, *top, places, exec)?, fmt)?, true)
        }
        Command::Lagrange { word } => (render(&commands::lagrange(word, places)?, fmt)?, true),
        Command::Spectrum { k } => (render(&commands::spectrum(*k as usize, places)?, fmt)?, true),
        Command::Necklaces { max_period, all } => (
            render(&commands::necklaces(*max_period as usize, *all, places, exec)?, fmt)?,
            true,
        ),
    };
    emit(&bytes, cfg.output.as_deref())?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cfg = RunConfig::parse();
    if let Err(e) = ctrlc::set_handler(|| {
        discard_pending();
        std::process::exit(130);
    }) {
        eprintln!("warning: no Ctrl-C handler: {e}");
    }
    match run(&cfg) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
