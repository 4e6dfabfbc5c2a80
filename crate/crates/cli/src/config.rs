//! Run configuration files.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use hrschur::bundles::BundleJson;
use hrschur::{Partition, Space, SplitBundle};
use serde::Deserialize;

/// Output encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

/// Contents of a `--config` file.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    /// Factor dimensions of the product of projective spaces.
    pub space: Option<Vec<u32>>,
    #[serde(default)]
    pub bundles: BTreeMap<String, BundleJson>,
    #[serde(default)]
    pub partitions: BTreeMap<String, Vec<u32>>,
    pub seed: Option<u64>,
    pub output: Option<String>,
    pub format: Option<Format>,
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read config {}", path.display()))?;
        let cfg: RunConfig =
            serde_json::from_str(&text).map_err(|e| anyhow!("{}: {e}", path.display()))?;
        cfg.validate()
            .with_context(|| format!("invalid config {}", path.display()))?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<()> {
        if !self.bundles.is_empty() && self.space.is_none() {
            bail!("field `bundles` needs a `space`");
        }
        if let Some(space) = self.space()? {
            for name in self.bundles.keys() {
                self.bundle(name, &space)?;
            }
        }
        for (name, parts) in &self.partitions {
            Partition::new(parts.clone()).with_context(|| format!("partitions.{name}"))?;
        }
        Ok(())
    }

    pub fn space(&self) -> Result<Option<Space>> {
        self.space
            .as_ref()
            .map(|f| Space::new(f.clone()).context("field `space`"))
            .transpose()
    }

    pub fn bundle(&self, name: &str, space: &Space) -> Result<SplitBundle> {
        let j = self
            .bundles
            .get(name)
            .ok_or_else(|| anyhow!("no bundle named {name:?} in the config"))?;
        SplitBundle::from_json(space, j).with_context(|| format!("bundles.{name}"))
    }

    /// A named partition from the config, or a literal such as `2,1`.
    pub fn partition(&self, spec: &str) -> Result<Partition> {
        if let Some(parts) = self.partitions.get(spec) {
            return Ok(Partition::new(parts.clone())?);
        }
        Partition::parse(spec).with_context(|| format!("partition {spec:?}"))
    }
}
