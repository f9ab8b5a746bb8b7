//! Result cache for exact generating functions: one human-readable text
//! file per (kind, L) with decimal-string integers. A version mismatch or
//! any parse problem invalidates the entry; cached results must round-trip
//! to identical exact integers, which the loader re-verifies.

use anyhow::{Context, Result};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};
use tlbe_core::genfun::GenFun;
use tlbe_core::pattern::BoundaryKind;

const CACHE_VERSION: u32 = 1;

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: &Path) -> Result<Self> {
        std::fs::create_dir_all(dir)
            .with_context(|| format!("creating cache directory {}", dir.display()))?;
        Ok(Cache { dir: dir.to_path_buf() })
    }

    /// Cache directory from --cache-dir or the CACHE_DIR environment
    /// variable; None disables caching.
    pub fn from_flag(flag: Option<&Path>) -> Result<Option<Self>> {
        match flag {
            Some(d) => Ok(Some(Cache::new(d)?)),
            None => match std::env::var_os("CACHE_DIR") {
                Some(d) => Ok(Some(Cache::new(Path::new(&d))?)),
                None => Ok(None),
            },
        }
    }

    fn path(&self, kind: BoundaryKind, l: usize, oracle: bool) -> PathBuf {
        let suffix = if oracle { "-oracle" } else { "" };
        self.dir.join(format!("genfun-{}-L{}{}.txt", kind.tag(), l, suffix))
    }

    pub fn load(&self, kind: BoundaryKind, l: usize, oracle: bool) -> Option<GenFun> {
        let text = std::fs::read_to_string(self.path(kind, l, oracle)).ok()?;
        let mut version_ok = false;
        let mut body = String::new();
        for line in text.lines() {
            if let Some(rest) = line.strip_prefix("version =") {
                version_ok = rest.trim().parse::<u32>().ok() == Some(CACHE_VERSION);
            } else if !line.starts_with('#') {
                body.push_str(line);
                body.push('\n');
            }
        }
        if !version_ok {
            return None;
        }
        let g = GenFun::from_text(&body).ok()?;
        if g.kind != kind || g.l != l {
            return None;
        }
        // round-trip integrity: serialize again and compare
        if GenFun::from_text(&g.to_text()).ok()? != g {
            return None;
        }
        Some(g)
    }

    pub fn store(&self, g: &GenFun, oracle: bool) -> Result<()> {
        let created = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
        let text = format!(
            "# generating function cache entry\n# tool = tlbe {}\n# created = {}\nversion = {}\n{}",
            env!("CARGO_PKG_VERSION"),
            created,
            CACHE_VERSION,
            g.to_text()
        );
        let path = self.path(g.kind, g.l, oracle);
        std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
        Ok(())
    }
}
