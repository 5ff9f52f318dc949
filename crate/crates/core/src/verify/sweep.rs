//! Config-driven sweep over an `n` range with CSV and Markdown output.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use super::audit::{audit_cell, run_identity_catalog};
use super::{collect_cells, theorem_from_cells, Check, MaximizerRecord, VerifyError, THEOREM_MIN_N};
use crate::exec::Exec;

pub const CSV_HEADER: &str = "n,alpha,class_size,c1,c2,c3,max_g6,rho_lo,rho_hi,unique,matches_family";

/// Largest `n` allowed without `allow_large = true`.
const DEFAULT_N_LIMIT: usize = 12;
const HARD_N_LIMIT: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaMode {
    /// Every nonempty `alpha` cell.
    All,
    /// Only `alpha >= (n-2)/2` up to `n - 3`, the cells the theorem covers.
    Theorem,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub alpha_mode: AlphaMode,
    /// Worker threads; 0 uses every core, 1 runs sequentially.
    pub threads: usize,
    pub out_dir: PathBuf,
    pub allow_large: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            n_min: 10,
            n_max: 12,
            alpha_mode: AlphaMode::All,
            threads: 0,
            out_dir: PathBuf::from("sweep-out"),
            allow_large: false,
        }
    }
}

impl SweepConfig {
    /// Parses `key = value` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, VerifyError> {
        let mut cfg = SweepConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| VerifyError::Config(format!("line {}: expected key = value", lineno + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |what: &str| VerifyError::Config(format!("key {key}: {what}, got {value:?}"));
            let int = || value.parse::<usize>().map_err(|_| bad("expected a non-negative integer"));
            match key {
                "n_min" => cfg.n_min = int()?,
                "n_max" => cfg.n_max = int()?,
                "threads" => cfg.threads = int()?,
                "out_dir" => cfg.out_dir = PathBuf::from(value),
                "alpha_mode" => {
                    cfg.alpha_mode = match value {
                        "all" => AlphaMode::All,
                        "theorem" => AlphaMode::Theorem,
                        _ => return Err(bad("expected all or theorem")),
                    }
                }
                "allow_large" => cfg.allow_large = value.parse().map_err(|_| bad("expected true or false"))?,
                _ => return Err(VerifyError::Config(format!("unknown key {key}"))),
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.n_min < 4 || self.n_min > self.n_max {
            return Err(VerifyError::Config(format!(
                "key n_min: need 4 <= n_min <= n_max, got {}..{}",
                self.n_min, self.n_max
            )));
        }
        let limit = if self.allow_large { HARD_N_LIMIT } else { DEFAULT_N_LIMIT };
        if self.n_max > limit {
            return Err(VerifyError::Config(format!(
                "key n_max: {} exceeds {limit} (set allow_large = true for up to {HARD_N_LIMIT})",
                self.n_max
            )));
        }
        Ok(())
    }

    fn keeps(&self, n: usize, alpha: usize) -> bool {
        match self.alpha_mode {
            AlphaMode::All => true,
            AlphaMode::Theorem => 2 * alpha + 2 >= n && alpha + 3 <= n,
        }
    }
}

/// Everything a sweep produced.
#[derive(Debug, Clone)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub records: Vec<MaximizerRecord>,
    pub identity_results: Vec<Check>,
    pub lemma_audits: Vec<Check>,
}

impl SweepReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.identity_results.iter().chain(&self.lemma_audits).filter(|c| c.is_failure())
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn csv(&self) -> String {
        let mut s = String::from(CSV_HEADER);
        s.push('\n');
        for r in &self.records {
            s.push_str(&r.csv_row());
            s.push('\n');
        }
        s
    }

    pub fn markdown(&self) -> String {
        let c = &self.config;
        let mut s = String::new();
        let _ = writeln!(s, "# Sweep n = {}..{}\n", c.n_min, c.n_max);
        let _ = writeln!(s, "Overall: **{}**\n", if self.passed() { "PASS" } else { "FAIL" });
        let _ = writeln!(s, "## Maximizers\n");
        let _ = writeln!(s, "| n | alpha | class size | C1 | C2 | C3 | rho | unique | family | note |");
        let _ = writeln!(s, "|---|---|---|---|---|---|---|---|---|---|");
        for r in &self.records {
            let note = if r.n < THEOREM_MIN_N {
                "below theorem range"
            } else if r.alpha + 2 == r.n {
                "alpha = n-2, report only"
            } else if 2 * r.alpha + 2 < r.n {
                "outside theorem range"
            } else {
                ""
            };
            let _ = writeln!(
                s,
                "| {} | {} | {} | {} | {} | {} | {:.10} | {} | {} | {} |",
                r.n,
                r.alpha,
                r.class_size,
                r.c1,
                r.c2,
                r.c3,
                r.rho,
                r.unique,
                r.matches_family.map_or_else(|| "-".into(), |f| f.to_string()),
                note
            );
        }
        for (title, checks) in [("Identity catalog", &self.identity_results), ("Lemma audits", &self.lemma_audits)] {
            let _ = writeln!(s, "\n## {title}\n");
            let _ = writeln!(s, "| check | result | detail |");
            let _ = writeln!(s, "|---|---|---|");
            for ch in checks {
                let result = match (ch.passed, ch.asserted) {
                    (true, true) => "pass",
                    (false, true) => "**FAIL**",
                    (true, false) => "pass (report only)",
                    (false, false) => "fails (report only)",
                };
                let _ = writeln!(s, "| {} | {} | {} |", ch.name, result, ch.detail.replace('|', "\\|"));
            }
        }
        s
    }

    /// Writes `sweep.csv` and `summary.md` into the configured directory.
    pub fn write(&self) -> Result<(), VerifyError> {
        fs::create_dir_all(&self.config.out_dir)?;
        fs::write(self.config.out_dir.join("sweep.csv"), self.csv())?;
        fs::write(self.config.out_dir.join("summary.md"), self.markdown())?;
        Ok(())
    }
}

fn sweep_with(cfg: &SweepConfig, exec: Exec) -> Result<SweepReport, VerifyError> {
    let mut records = Vec::new();
    let mut lemma_audits = Vec::new();
    for n in cfg.n_min..=cfg.n_max {
        let cells = collect_cells(n, exec)?;
        let theorem = theorem_from_cells(n, &cells, exec)?;
        records.extend(theorem.records.into_iter().filter(|r| cfg.keeps(n, r.alpha)));
        lemma_audits.extend(theorem.checks);
        for (&alpha, entries) in &cells {
            if cfg.keeps(n, alpha) {
                lemma_audits.extend(audit_cell(n, alpha, entries));
            }
        }
    }
    Ok(SweepReport {
        config: cfg.clone(),
        records,
        identity_results: run_identity_catalog(cfg.n_min.max(8), cfg.n_max.max(8)),
        lemma_audits,
    })
}

/// Runs the sweep and writes its outputs.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport, VerifyError> {
    cfg.validate()?;
    let report = if cfg.threads == 1 {
        sweep_with(cfg, Exec::Sequential)?
    } else {
        run_in_pool(cfg)?
    };
    report.write()?;
    Ok(report)
}

#[cfg(feature = "parallel")]
fn run_in_pool(cfg: &SweepConfig) -> Result<SweepReport, VerifyError> {
    if cfg.threads == 0 {
        return sweep_with(cfg, Exec::Parallel);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| VerifyError::Config(format!("key threads: {e}")))?;
    pool.install(|| sweep_with(cfg, Exec::Parallel))
}

#[cfg(not(feature = "parallel"))]
fn run_in_pool(cfg: &SweepConfig) -> Result<SweepReport, VerifyError> {
    sweep_with(cfg, Exec::Sequential)
}

/// Reads a config file and runs the sweep.
pub fn run_sweep_file(path: &Path) -> Result<SweepReport, VerifyError> {
    let text = fs::read_to_string(path)?;
    run_sweep(&SweepConfig::parse(&text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_config() {
        let cfg = SweepConfig::parse("n_min = 8\nn_max=9 # small\nalpha_mode=theorem\nthreads=1\nout_dir=/tmp/x\n").unwrap();
        assert_eq!((cfg.n_min, cfg.n_max, cfg.threads), (8, 9, 1));
        assert_eq!(cfg.alpha_mode, AlphaMode::Theorem);
        let err = SweepConfig::parse("n_min=10\nbogus=3\n").unwrap_err();
        assert!(err.to_string().contains("bogus"));
        let err = SweepConfig::parse("threads=many").unwrap_err();
        assert!(err.to_string().contains("threads"));
        assert!(SweepConfig::parse("n_max=13").is_err());
        assert!(SweepConfig::parse("n_max=13\nallow_large=true").is_ok());
        assert!(SweepConfig::parse("n_min=12\nn_max=10").is_err());
    }

    #[test]
    fn small_sweep_is_deterministic() {
        let dir = std::env::temp_dir().join(format!("bicyclic-sweep-{}", std::process::id()));
        let cfg = SweepConfig {
            n_min: 6,
            n_max: 8,
            out_dir: dir.clone(),
            ..SweepConfig::default()
        };
        let a = run_sweep(&cfg).unwrap();
        let first = fs::read(dir.join("sweep.csv")).unwrap();
        run_sweep(&SweepConfig { threads: 1, ..cfg }).unwrap();
        assert_eq!(first, fs::read(dir.join("sweep.csv")).unwrap());
        assert!(a.records.iter().all(|r| r.n < THEOREM_MIN_N));
        assert!(fs::read_to_string(dir.join("summary.md")).unwrap().contains("below theorem range"));
        fs::remove_dir_all(dir).ok();
    }
}
