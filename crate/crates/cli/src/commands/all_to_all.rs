use std::collections::HashMap;

use lingdist::cluster::{agglomerate, best_cut, cut, export_newick, export_svg, purity};
use lingdist::editdist::{self, oc};

use super::load;
use crate::artifacts::{Artifacts, Outcome};
use crate::config::RunConfig;
use crate::error::CliError;
use crate::inputs;

/// Clusters every word of every language together, at the best silhouette
/// cut and at a forced cluster count (the number of concepts by default).
pub fn all_to_all(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let inputs = load(cfg)?;
    let lex = &inputs.lexicon;
    let items = lex.len() * lex.arity();
    if items < 3 {
        return Err(CliError::Data(format!(
            "{}: all-to-all clustering needs at least 3 words, found {}",
            cfg.lexicon.display(),
            items
        )));
    }
    let forced_k = cfg.k.unwrap_or(lex.arity());
    let m = editdist::all_to_all_matrix(lex, &inputs.table)
        .map_err(CliError::distance("word distances"))?;
    let truth = match cfg.truth.as_deref() {
        Some(path) => inputs::load_truth(path)?,
        None => concept_classes(m.labels()),
    };
    let tree = agglomerate(&m, cfg.linkage).map_err(CliError::cluster("clustering"))?;
    let best = best_cut(&m, &tree).map_err(CliError::cluster("silhouette scan"))?;
    let forced = cut(&tree, forced_k).map_err(CliError::cluster("forced cut"))?;
    let best_purity =
        purity(&best.assignment, &truth).map_err(CliError::cluster("purity of best cut"))?;
    let forced_purity =
        purity(&forced, &truth).map_err(CliError::cluster("purity of forced cut"))?;

    let mut artifacts = Artifacts::new();
    artifacts.add("all_to_all.oc", oc::to_oc_string(&m));
    artifacts.add("dendrogram.nwk", export_newick(&tree) + "\n");
    artifacts.add("dendrogram.svg", export_svg(&tree, Some(&best.assignment)));
    artifacts.add("dendrogram_forced.svg", export_svg(&tree, Some(&forced)));
    artifacts.add("silhouette_scan.csv", best.scan_csv());
    artifacts.add("best_clusters.csv", best.assignment.to_csv());
    artifacts.add("best_purity.csv", best_purity.to_csv());
    artifacts.add("forced_clusters.csv", forced.to_csv());
    artifacts.add("forced_purity.csv", forced_purity.to_csv());

    Ok(Outcome {
        artifacts,
        summary: vec![
            format!("{} words", items),
            format!(
                "best cut k = {} (mean silhouette {:.6}), overall purity {:.6}",
                best.k, best.report.mean, best_purity.overall
            ),
            format!(
                "forced cut k = {}, overall purity {:.6}, {} of {} clusters pure",
                forced_k,
                forced_purity.overall,
                forced_purity.pure_clusters(),
                forced_k
            ),
        ],
        warnings: inputs.warnings,
    })
}

/// Truth classes taken from `language:concept` item labels. Concept labels
/// never contain ':', so the last one separates the two.
fn concept_classes(labels: &[String]) -> HashMap<String, String> {
    labels
        .iter()
        .map(|l| {
            let concept = l.rsplit_once(':').map_or(l.as_str(), |(_, c)| c);
            (l.clone(), concept.to_string())
        })
        .collect()
}
