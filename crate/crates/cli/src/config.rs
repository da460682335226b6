//! Run settings: built-in defaults, then the environment, then a
//! `key = value` file, then command-line flags.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

pub const OUTPUT_DIR_ENV: &str = "ETAINEQ_OUTPUT_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format '{other}' (json or csv)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Config {
    pub n_max: usize,
    pub precision_bits: u32,
    pub float_bits: u32,
    /// 0 lets the pool pick one thread per core.
    pub threads: usize,
    pub output_dir: Option<PathBuf>,
    pub format: Format,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            n_max: 30,
            precision_bits: 128,
            float_bits: 113,
            threads: 0,
            output_dir: None,
            format: Format::Json,
        }
    }
}

#[derive(Debug, PartialEq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Settings given on the command line; `None` leaves the lower layer alone.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub n_max: Option<usize>,
    pub precision_bits: Option<u32>,
    pub float_bits: Option<u32>,
    pub threads: Option<usize>,
    pub output_dir: Option<PathBuf>,
    pub format: Option<Format>,
}

impl Config {
    pub fn resolve(env_dir: Option<PathBuf>, file: Option<&Path>, flags: &Overrides) -> Result<Config, ConfigError> {
        let mut cfg = Config::default();
        if let Some(dir) = env_dir.filter(|d| !d.as_os_str().is_empty()) {
            cfg.output_dir = Some(dir);
        }
        if let Some(path) = file {
            let text = fs::read_to_string(path)
                .map_err(|e| ConfigError(format!("config {}: {e}", path.display())))?;
            cfg.apply_file(&parse_pairs(&text)?)?;
        }
        cfg.apply(flags);
        cfg.validate()?;
        Ok(cfg)
    }

    fn apply_file(&mut self, pairs: &BTreeMap<String, String>) -> Result<(), ConfigError> {
        fn num<T: FromStr>(key: &str, v: &str) -> Result<T, ConfigError> {
            v.parse().map_err(|_| ConfigError(format!("config key '{key}': cannot parse '{v}'")))
        }
        for (k, v) in pairs {
            match k.as_str() {
                "n_max" => self.n_max = num(k, v)?,
                "precision_bits" => self.precision_bits = num(k, v)?,
                "float_bits" => self.float_bits = num(k, v)?,
                "threads" => self.threads = num(k, v)?,
                "output_dir" => self.output_dir = Some(PathBuf::from(v)),
                "format" => self.format = v.parse().map_err(ConfigError)?,
                other => return Err(ConfigError(format!("unknown config key '{other}'"))),
            }
        }
        Ok(())
    }

    fn apply(&mut self, o: &Overrides) {
        if let Some(v) = o.n_max {
            self.n_max = v;
        }
        if let Some(v) = o.precision_bits {
            self.precision_bits = v;
        }
        if let Some(v) = o.float_bits {
            self.float_bits = v;
        }
        if let Some(v) = o.threads {
            self.threads = v;
        }
        if let Some(v) = &o.output_dir {
            self.output_dir = Some(v.clone());
        }
        if let Some(v) = o.format {
            self.format = v;
        }
    }

    fn validate(&self) -> Result<(), ConfigError> {
        if self.n_max < 2 {
            return Err(ConfigError(format!("n_max must be at least 2, got {}", self.n_max)));
        }
        if self.precision_bits < 16 {
            return Err(ConfigError(format!("precision_bits must be at least 16, got {}", self.precision_bits)));
        }
        if self.float_bits < 24 {
            return Err(ConfigError(format!("float_bits must be at least 24, got {}", self.float_bits)));
        }
        Ok(())
    }
}

/// `key = value` lines; `#` starts a comment.
fn parse_pairs(text: &str) -> Result<BTreeMap<String, String>, ConfigError> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| ConfigError(format!("config line {}: expected key = value", i + 1)))?;
        out.insert(k.trim().replace('-', "_"), v.trim().to_string());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layering() {
        let dir = std::env::temp_dir().join(format!("etaineq-cfg-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let file = dir.join("run.conf");
        fs::write(&file, "# demo\nn_max = 40\nfloat-bits=200\noutput_dir = from_file\n").unwrap();
        let flags = Overrides { n_max: Some(50), ..Default::default() };
        let cfg = Config::resolve(Some("from_env".into()), Some(&file), &flags).unwrap();
        assert_eq!(cfg.n_max, 50);
        assert_eq!(cfg.float_bits, 200);
        assert_eq!(cfg.output_dir, Some(PathBuf::from("from_file")));
        let cfg = Config::resolve(Some("from_env".into()), None, &Overrides::default()).unwrap();
        assert_eq!(cfg.output_dir, Some(PathBuf::from("from_env")));
        fs::write(&file, "bogus = 1\n").unwrap();
        assert!(Config::resolve(None, Some(&file), &Overrides::default()).is_err());
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn invariants() {
        let flags = Overrides { n_max: Some(1), ..Default::default() };
        assert!(Config::resolve(None, None, &flags).is_err());
        let flags = Overrides { precision_bits: Some(8), ..Default::default() };
        assert!(Config::resolve(None, None, &flags).is_err());
    }
}
