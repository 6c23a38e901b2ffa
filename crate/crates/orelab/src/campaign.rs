//! Verification suites over a corpus.

use std::fmt::Write as _;

use orelab_core::discharge::{closing_inequalities, run_discharge};
use orelab_core::ore::{OreRecipe, OreRecognizer};
use orelab_core::packing::t_number;
use orelab_core::potential::{verify_extension_inequalities, verify_main_theorem, verify_ore5_bounds, ExtensionRecord, TheoremCase};
use orelab_core::{Graph, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use crate::corpus::{entry_key, CorpusEntry, Invariants, Provenance};
use crate::fuzz;
use crate::report::{Report, Slack};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Main,
    Ore5,
    Extensions,
    Lemma2,
    Discharge,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CampaignConfig {
    pub seed: u64,
    /// Most subsets examined per graph by the `ore5` suite.
    pub budget: usize,
    /// Extension records per graph in the `extensions` suite.
    pub records: usize,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig { seed: 0, budget: 256, records: 8 }
    }
}

/// Runs `suite` over every entry in parallel; the report lists entries in
/// the given order.
pub fn run(entries: &[CorpusEntry], suite: Suite, cfg: &CampaignConfig) -> Report {
    let parts: Vec<Report> = entries.par_iter().map_init(OreRecognizer::new, |rec, e| verify_entry(e, suite, cfg, rec)).collect();
    let mut report = Report::default();
    for part in parts {
        report.extend(part);
    }
    report
}

/// The seed for one entry: the campaign seed mixed with the entry key.
pub fn entry_seed(seed: u64, key: &str) -> u64 {
    seed ^ u64::from_str_radix(key, 16).unwrap_or_else(|_| key.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3)))
}

pub fn verify_entry(e: &CorpusEntry, suite: Suite, cfg: &CampaignConfig, rec: &mut OreRecognizer) -> Report {
    let mut report = Report::default();
    let key = e.key.as_str();
    let g = match e.parse_graph() {
        Ok(g) => g,
        Err(err) => {
            report.check("parse", key, false, Slack::None);
            report.info("parse", key, format!("{err:#}"));
            return report;
        }
    };
    let inv = Invariants::compute(&g, rec);
    let fresh = inv == e.invariants && entry_key(&g) == e.key;
    report.check("invariants", key, fresh, Slack::None);
    let run = |s: Suite| suite == s || suite == Suite::All;
    if run(Suite::Main) {
        main_suite(&g, key, inv, rec, &mut report);
    }
    if run(Suite::Ore5) {
        ore5_suite(&g, key, inv, cfg, rec, &mut report);
    }
    if run(Suite::Extensions) {
        extension_suite(&g, key, inv, cfg, &mut report);
    }
    if run(Suite::Lemma2) {
        composition_suite(&g, key, e, inv, rec, &mut report);
    }
    if run(Suite::Discharge) {
        discharge_suite(&g, key, inv, &mut report);
    }
    report
}

fn main_suite(g: &Graph, key: &str, inv: Invariants, rec: &mut OreRecognizer, report: &mut Report) {
    if !inv.five_critical {
        report.info("main", key, "skipped: not 5-critical");
        return;
    }
    let r = verify_main_theorem(g, rec).expect("5-critical input");
    let name = match r.case {
        TheoremCase::K5 => "main-k5",
        TheoremCase::Ore => "main-ore",
        TheoremCase::Other => "main-other",
    };
    report.check(name, key, r.holds, Slack::R21(r.slack()));
    if let Some(s) = r.triangle_free_slack {
        report.inequality("triangle-free", key, Slack::R84(s));
    }
}

/// Every proper subset with at least five vertices when there are few
/// enough, otherwise `budget` random ones.
pub fn subsets_for<R: Rng>(g: &Graph, budget: usize, rng: &mut R) -> Vec<VertexSet> {
    let n = g.n();
    if n < 6 {
        return Vec::new();
    }
    let full = g.vertices();
    if n < 20 && (1usize << n) <= budget {
        return (0u64..1 << n).map(VertexSet).filter(|&s| s.len() >= 5 && s != full).collect();
    }
    let mut verts: Vec<usize> = (0..n).collect();
    (0..budget)
        .map(|_| {
            verts.shuffle(rng);
            verts[..rng.gen_range(5..n)].iter().copied().collect()
        })
        .collect()
}

fn ore5_suite(g: &Graph, key: &str, inv: Invariants, cfg: &CampaignConfig, rec: &mut OreRecognizer, report: &mut Report) {
    if !inv.five_critical {
        report.info("ore5", key, "skipped: not 5-critical");
        return;
    }
    let mut rng = fuzz::rng(entry_seed(cfg.seed, key));
    let subsets = subsets_for(g, cfg.budget, &mut rng);
    let r = verify_ore5_bounds(g, rec, subsets).expect("5-critical input");
    report.inequality("ore5-bound", key, Slack::Int(5 - r.p_ky));
    report.check("ore5-recognizer", key, r.consistent, Slack::None);
    if r.is_5_ore {
        report.check("ore5-collapsible", key, r.violations.is_empty(), Slack::Int(-(r.violations.len() as i64)));
        report.info("ore5", key, format!("subsets={}", r.subsets_checked));
    }
}

fn extension_suite(g: &Graph, key: &str, inv: Invariants, cfg: &CampaignConfig, report: &mut Report) {
    if !inv.five_critical || inv.n <= 5 {
        report.info("extensions", key, "skipped: needs a 5-critical graph on more than 5 vertices");
        return;
    }
    let mut rng = fuzz::rng(entry_seed(cfg.seed, key));
    for i in 0..cfg.records {
        let id = format!("{key}#{i}");
        match fuzz::random_extension(g, None, &mut rng) {
            Ok(record) => extension_checks(g, &id, &record, report),
            Err(err) => {
                report.check("ext-build", &id, false, Slack::None);
                report.info("ext-build", &id, err.to_string());
            }
        }
    }
}

/// Inequality checks for one record plus an `INFO` summary of it.
pub fn extension_checks(g: &Graph, id: &str, record: &ExtensionRecord, report: &mut Report) {
    let checks = verify_extension_inequalities(g, record).expect("valid record");
    for c in checks {
        report.check(&format!("ext-{}", c.name), id, c.holds(), if c.name == "ky" { Slack::Int(c.slack.numerator() / 21) } else { Slack::R21(c.slack) });
    }
    let mut text = format!("r={} core={} complete={} spanning={}", list(record.r), record.core_size(), record.complete, record.spanning);
    if !record.identification.empty_classes.is_empty() {
        let classes: Vec<String> = record.identification.empty_classes.iter().map(u8::to_string).collect();
        write!(text, " empty-classes={}", classes.join(",")).expect("writing to a string");
    }
    report.info("ext-record", id, text);
}

pub fn list(s: VertexSet) -> String {
    let parts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    if parts.is_empty() {
        "-".into()
    } else {
        parts.join(",")
    }
}

fn composition_suite(g: &Graph, key: &str, e: &CorpusEntry, inv: Invariants, rec: &mut OreRecognizer, report: &mut Report) {
    if !inv.five_ore {
        report.info("composition", key, "skipped: not 5-Ore");
        return;
    }
    let recipe = match &e.provenance {
        Provenance::Recipe { recipe } => match recipe.parse::<OreRecipe>() {
            Ok(r) => Some(r),
            Err(err) => {
                report.check("recipe", key, false, Slack::None);
                report.info("recipe", key, err.to_string());
                return;
            }
        },
        _ => None,
    };
    let recipe = match recipe {
        Some(r) => {
            let same = r.materialize().is_ok_and(|m| m.graph == *g);
            report.check("recipe", key, same, Slack::None);
            r
        }
        None => rec.recognize(g).expect("5-Ore graphs have a recipe"),
    };
    report.check("ky-identity", key, inv.p_ky == 5, Slack::Int(5 - inv.p_ky));
    if inv.n > 5 {
        report.inequality("packing-lower", key, Slack::Int(4 * inv.t as i64 - inv.n as i64 - 7));
    }
    if let OreRecipe::Compose(c) = &recipe {
        let t1 = t_of(&c.edge_side);
        let t2 = t_of(&c.vertex_side);
        let t = inv.t as i64;
        report.inequality("compose-sum", key, Slack::Int(t - t1 - t2 + 2));
        if c.vertex_side == OreRecipe::Leaf {
            report.inequality("compose-k5", key, Slack::Int(t - t1 - 1));
        }
    }
}

fn t_of(recipe: &OreRecipe) -> i64 {
    t_number(&recipe.materialize().expect("recipe from a valid parent").graph).0 as i64
}

fn discharge_suite(g: &Graph, key: &str, inv: Invariants, report: &mut Report) {
    let ledger = run_discharge(g);
    report.check("conservation", key, ledger.conserved(), Slack::None);
    if !inv.five_critical {
        report.info("discharge", key, "closing counts skipped: not 5-critical");
        return;
    }
    let r = closing_inequalities(g).expect("5-critical input");
    report.inequality("edge-bound", key, Slack::R84(r.edge_bound_slack));
    report.inequality("cover", key, Slack::Int(r.cover_slack));
    if let (Some(holds), Some(s)) = (r.count_holds(), r.count_slack) {
        report.check("count", key, holds, Slack::R84(s));
    }
    report.info("charge-count", key, format!("S={} M={} slack={}", r.singles, r.pairs, r.charge_count_slack));
    for row in &r.receivers {
        report.info(
            "receiver",
            key,
            format!("v={} d={} final={} within={} counterexample-only bound, not asserted", row.vertex, row.degree, row.final_charge, row.within_bound),
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use orelab_core::families;

    fn entry(g: &Graph, p: Provenance) -> CorpusEntry {
        CorpusEntry::new(g, p, &mut OreRecognizer::new())
    }

    #[test]
    fn k5_passes_everything() {
        let e = entry(&families::complete(5), Provenance::Recipe { recipe: "(k5)".into() });
        let r = run(&[e], Suite::All, &CampaignConfig::default());
        assert!(r.passed(), "{r}");
        assert!(r.to_string().contains("CHECK main-k5 "));
    }

    #[test]
    fn stale_invariants_fail() {
        let mut e = entry(&families::c5_join_k2(), Provenance::Named { name: "c5_join_k2".into() });
        e.invariants.mic += 1;
        let r = run(&[e], Suite::Main, &CampaignConfig::default());
        assert_eq!(r.failures(), 1);
        assert!(r.to_string().starts_with("CHECK invariants "));
    }

    #[test]
    fn non_ore_witness_is_case_three() {
        let e = entry(&families::c5_join_k2(), Provenance::Named { name: "c5_join_k2".into() });
        let r = run(&[e], Suite::All, &CampaignConfig { records: 4, ..CampaignConfig::default() });
        assert!(r.passed(), "{r}");
        assert!(r.to_string().contains("CHECK main-other "));
        assert_eq!(r.to_string().matches("CHECK ext-main ").count(), 4);
    }

    #[test]
    fn subsets_respect_budget() {
        let g = families::c5_join_k2();
        let mut rng = fuzz::rng(0);
        assert_eq!(subsets_for(&g, 1 << 7, &mut rng).len(), (5..7).map(|k| [21, 7][k - 5]).sum::<usize>());
        assert_eq!(subsets_for(&g, 10, &mut rng).len(), 10);
    }
}
