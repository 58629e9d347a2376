//! Seeded search for binary self-dual `[36,18]` codes and their lifts over R1.
//!
//! Trial `t` draws its coefficients from its own ChaCha stream (`seed`,
//! stream `t`), so the output does not depend on how trials are split across
//! shards.

use std::collections::HashSet;
use std::ops::Range;

use rand::RngCore;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bitmat::BitMatrix;
use crate::codeanalysis::{analyze, CodeParams, Family, StandardForm, WeightProfile};
use crate::constructions::{pack_r1, planes_self_dual, rows_self_dual, ConstructionId, FirstRows, OmegaLayout};
use crate::error::{invalid, Error, Result};
use crate::r1ring::R1;
use crate::records::{CodeRecord, RingKind};

const COEFF_MASK: u32 = 0x3_FFFF;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub construction: ConstructionId,
    pub target_d: usize,
    pub budget: u64,
    pub seed: u64,
    pub shards: usize,
}

impl SearchConfig {
    pub fn new(construction: ConstructionId, target_d: usize, budget: u64, seed: u64) -> Self {
        SearchConfig { construction, target_d, budget, seed, shards: 1 }
    }

    fn validate(&self) -> Result<()> {
        if self.target_d != 6 && self.target_d != 8 {
            return invalid(format!("target distance must be 6 or 8, got {}", self.target_d));
        }
        if self.shards == 0 {
            return invalid("shard count must be positive");
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftMode {
    Exhaustive,
    Sampled(u64),
}

impl std::str::FromStr for LiftMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "exhaustive" {
            return Ok(LiftMode::Exhaustive);
        }
        if let Some(n) = s.strip_prefix("sampled:") {
            return n
                .parse()
                .map(LiftMode::Sampled)
                .map_err(|_| Error::InvalidArgument(format!("bad sample count {n:?}")));
        }
        invalid(format!("mode must be `exhaustive` or `sampled:N`, got {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LiftConfig {
    pub base: CodeRecord,
    pub mode: LiftMode,
    pub seed: u64,
    pub shards: usize,
    /// Lifts whose Gray image has smaller distance are dropped.
    pub min_d: usize,
}

impl LiftConfig {
    pub fn new(base: CodeRecord, mode: LiftMode, seed: u64) -> Self {
        LiftConfig { base, mode, seed, shards: 1, min_d: 12 }
    }
}

/// Coefficient mask drawn for one trial.
pub fn trial_mask(seed: u64, trial: u64) -> u32 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng.next_u32() & COEFF_MASK
}

/// Splits `0..total` into `shards` contiguous ranges, runs them in parallel
/// and concatenates the results in shard order.
fn run_sharded<T: Send>(total: u64, shards: usize, f: impl Fn(Range<u64>) -> Vec<T> + Sync) -> Vec<T> {
    let shards = shards.max(1) as u64;
    let chunk = total.div_ceil(shards);
    (0..shards)
        .into_par_iter()
        .map(|s| f((s * chunk).min(total)..((s + 1) * chunk).min(total)))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn first_unique(hits: Vec<(u64, u32)>) -> Vec<(u64, u32)> {
    let mut seen = HashSet::new();
    hits.into_iter().filter(|&(_, m)| seen.insert(m)).collect()
}

/// First rows over R1 from the two coefficient planes.
pub fn first_rows_from_masks(id: ConstructionId, a: u32, b: u32) -> FirstRows<R1> {
    let alphas: Vec<R1> = (0..18).map(|i| R1 { a: a >> i & 1 == 1, b: b >> i & 1 == 1 }).collect();
    FirstRows::from_alphas(id, &alphas).expect("18 coefficients")
}

fn below(sf: &StandardForm, d: usize) -> Result<bool> {
    if d < 3 {
        return Ok(false);
    }
    let cap = ((d - 2) / 2).min(sf.dimension());
    Ok(WeightProfile::compute(sf, cap)?.min_weight().is_some_and(|w| w < d))
}

fn binary_generator(layout: &OmegaLayout, a: u32) -> BitMatrix {
    BitMatrix::identity(18).hconcat(&layout.binary(a)).expect("rows agree")
}

/// Gray image of the R1 code generated by `[I | Ω]`.
pub fn lift_gray_generator(layout: &OmegaLayout, a: u32, b: u32) -> BitMatrix {
    layout.r1(a, b).prepend_identity().gray_image_generator()
}

/// Random search for self-dual codes `[I | Ω]` with `d ≥ target_d`.
/// Repeated draws of the same coefficients are reported once, at their first trial.
pub fn search_binary(cfg: &SearchConfig) -> Result<Vec<CodeRecord>> {
    cfg.validate()?;
    let layout = OmegaLayout::new(cfg.construction);
    let hits = run_sharded(cfg.budget, cfg.shards, |range| {
        range
            .filter_map(|t| {
                let m = trial_mask(cfg.seed, t);
                rows_self_dual(&layout.rows(m)).then_some((t, m))
            })
            .collect()
    });
    let found = first_unique(hits)
        .into_par_iter()
        .map(|(t, m)| -> Result<Option<CodeRecord>> {
            let g = binary_generator(&layout, m);
            if below(&StandardForm::from_systematic(&g)?, cfg.target_d)? {
                return Ok(None);
            }
            let params = analyze(&g)?;
            if params.d < cfg.target_d {
                return Ok(None);
            }
            let rows = first_rows_from_masks(cfg.construction, m, 0);
            let mut rec = CodeRecord::new(format!("{}-s{}-t{t}", cfg.construction, cfg.seed), &rows, RingKind::F2);
            rec.params = Some(params);
            rec.seed = Some(cfg.seed);
            Ok(Some(rec))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(found.into_iter().flatten().collect())
}

/// Lifts a binary record over R1 and keeps the lifts whose Gray image is
/// self-dual with distance at least `min_d`, ordered by `b`-plane mask.
pub fn lift_code(cfg: &LiftConfig) -> Result<Vec<CodeRecord>> {
    let base = &cfg.base;
    if base.ring != RingKind::F2 {
        return invalid(format!("{} is not a binary record", base.id));
    }
    let rows = base.first_rows()?;
    let (a, _) = pack_r1(&rows.alphas());
    let layout = OmegaLayout::new(rows.id());
    let a_rows = layout.rows(a);
    if !rows_self_dual(&a_rows) {
        return invalid(format!("{} is not self-dual", base.id));
    }
    let (total, draw): (u64, Box<dyn Fn(u64) -> u32 + Sync>) = match cfg.mode {
        LiftMode::Exhaustive => (1 << 18, Box::new(|t| t as u32)),
        LiftMode::Sampled(n) => (n, Box::new(move |t| trial_mask(cfg.seed, t))),
    };
    let candidates = run_sharded(total, cfg.shards, |range| {
        range
            .filter_map(|t| {
                let b = draw(t);
                planes_self_dual(&a_rows, &layout.rows(b)).then_some((t, b))
            })
            .collect()
    });
    let mut candidates = first_unique(candidates);
    candidates.sort_by_key(|&(_, b)| b);
    let lifted = candidates
        .into_par_iter()
        .map(|(_, b)| -> Result<Option<CodeRecord>> {
            let g = lift_gray_generator(&layout, a, b);
            if below(&StandardForm::from_generator(&g)?, cfg.min_d)? {
                return Ok(None);
            }
            let params = analyze(&g)?;
            if params.d < cfg.min_d {
                return Ok(None);
            }
            let fr = first_rows_from_masks(rows.id(), a, b);
            let mut rec = CodeRecord::new(format!("{}-L{b:05x}", base.id), &fr, RingKind::R1);
            rec.params = Some(params);
            rec.parent = Some(base.id.clone());
            rec.seed = Some(cfg.seed);
            Ok(Some(rec))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(lifted.into_iter().flatten().collect())
}

/// Dedup key. Equal fingerprints only suggest equivalent codes.
pub type Fingerprint = (usize, usize, usize, Option<Family>, Option<i64>, Option<i64>);

pub fn fingerprint(rec: &CodeRecord) -> Option<Fingerprint> {
    rec.params.as_ref().map(|p: &CodeParams| (p.n, p.k, p.d, p.family, p.gamma, p.beta))
}

/// Keeps the first record of each fingerprint; records without parameters are kept.
pub fn dedup_by_fingerprint(records: &[CodeRecord]) -> Vec<CodeRecord> {
    let mut seen = HashSet::new();
    records.iter().filter(|r| fingerprint(r).map_or(true, |f| seen.insert(f))).cloned().collect()
}
