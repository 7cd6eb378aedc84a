//! Run configuration: defaults, an optional key=value file, then flags.

use std::fmt;
use std::path::Path;

use tropdiff::exec::Strategy;
use tropdiff::series::is_prime;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairName {
    /// 𝔹[[t]] → 𝕋 with the strict shift.
    Boolean,
    /// 𝕋[[t]] → 𝕋₂ with the p-adic weighted differential.
    Rank2,
}

impl PairName {
    pub fn parse(s: &str) -> Result<Self, String> {
        match s {
            "B" | "b" => Ok(PairName::Boolean),
            "T2" | "t2" => Ok(PairName::Rank2),
            other => Err(format!("unknown pair `{other}` (expected B or T2)")),
        }
    }
}

impl fmt::Display for PairName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairName::Boolean => "B",
            PairName::Rank2 => "T2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Output {
    Json,
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    /// `None` lets the verb pick its natural pair.
    pub pair: Option<PairName>,
    pub prime: u64,
    pub trunc_deg: u32,
    pub output: Output,
    pub strategy: Strategy,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { pair: None, prime: 2, trunc_deg: 16, output: Output::Json, strategy: Strategy::Parallel }
    }
}

impl RunConfig {
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        match key {
            "pair" => self.pair = Some(PairName::parse(value)?),
            "prime" => self.prime = value.parse().map_err(|_| format!("bad prime `{value}`"))?,
            "deg" | "trunc_deg" => self.trunc_deg = value.parse().map_err(|_| format!("bad degree `{value}`"))?,
            "output" => {
                self.output = match value {
                    "json" => Output::Json,
                    "text" => Output::Text,
                    other => return Err(format!("unknown output `{other}` (expected json or text)")),
                }
            }
            "strategy" => self.strategy = value.parse()?,
            other => return Err(format!("unknown config key `{other}`")),
        }
        Ok(())
    }

    /// Reads `key = value` lines; blank lines and `#` comments are skipped.
    pub fn load(&mut self, path: &Path) -> Result<(), String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| format!("{}:{}: expected key = value", path.display(), i + 1))?;
            self.set(k.trim(), v.trim()).map_err(|e| format!("{}:{}: {e}", path.display(), i + 1))?;
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), String> {
        if !is_prime(self.prime) {
            return Err(format!("{} is not prime", self.prime));
        }
        if self.trunc_deg < 1 {
            return Err("deg must be at least 1".into());
        }
        Ok(())
    }

    pub fn pair_or(&self, default: PairName) -> PairName {
        self.pair.unwrap_or(default)
    }
}
