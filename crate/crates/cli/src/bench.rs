//! Timing and operation counts of the escalier run for growing point sets.

use std::io::Write;
use std::time::Instant;

use escalier_core::{FieldSpec, LexGame};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::verify::distinct_points;
use crate::CliError;

pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub n: usize,
    pub lo: i64,
    pub hi: i64,
    pub seed: u64,
    pub field: FieldSpec,
}

pub fn run<W: Write>(cfg: &BenchConfig, out: W) -> Result<(), CliError> {
    if cfg.n == 0 || cfg.lo > cfg.hi || cfg.sizes.contains(&0) {
        return Err(CliError::Input("bench needs n >= 1, lo <= hi and positive sizes".into()));
    }
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["N", "n", "r", "wall_ms", "trie_ops", "bar_ops"])
        .map_err(|e| CliError::Internal(e.to_string()))?;
    for &size in &cfg.sizes {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ size as u64);
        let points = distinct_points(&mut rng, cfg.n, size, cfg.lo, cfg.hi, cfg.field);
        let start = Instant::now();
        let g = LexGame::full_run(cfg.n, cfg.field, &points)?;
        let wall = start.elapsed().as_secs_f64() * 1000.0;
        let trie = g.trie();
        let r = trie.children(trie.root()).len();
        w.write_record([
            points.len().to_string(),
            cfg.n.to_string(),
            r.to_string(),
            format!("{wall:.3}"),
            g.trie_ops().to_string(),
            g.bar_ops().to_string(),
        ])
        .map_err(|e| CliError::Internal(e.to_string()))?;
    }
    w.flush().map_err(|e| CliError::Internal(e.to_string()))
}
