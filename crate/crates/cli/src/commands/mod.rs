mod align;
mod all_to_all;
mod cluster;
mod relationship;
mod words;

pub use align::{align, AlignRequest};
pub use all_to_all::all_to_all;
pub use cluster::cluster;
pub use relationship::relationship;
pub use words::words_analyse;

use lingdist::{Lexicon, SubstitutionTable};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::inputs;

/// Validated configuration with its lexicon and table loaded.
struct Inputs {
    lexicon: Lexicon,
    table: SubstitutionTable,
    warnings: Vec<String>,
}

fn load(cfg: &RunConfig) -> Result<Inputs, CliError> {
    cfg.validate()?;
    let table = inputs::load_table(&cfg.table, cfg.gap)?;
    let lexicon = inputs::load_lexicon(&cfg.lexicon)?;
    let coverage = lexicon.validate_against_table(&table);
    let mut warnings = Vec::new();
    if !coverage.is_clean() {
        let symbols: Vec<String> = coverage.uncovered.iter().map(|s| s.to_string()).collect();
        warnings.push(format!(
            "{}: symbols with no rule in table `{}` fall back to the default cost: {}",
            cfg.lexicon.display(),
            cfg.table,
            symbols.join(" ")
        ));
    }
    Ok(Inputs {
        lexicon,
        table,
        warnings,
    })
}

fn require_languages(
    cfg: &RunConfig,
    lex: &Lexicon,
    needed: usize,
    why: &str,
) -> Result<(), CliError> {
    if lex.len() < needed {
        return Err(CliError::Data(format!(
            "{}: {} needs at least {} languages, found {}",
            cfg.lexicon.display(),
            why,
            needed,
            lex.len()
        )));
    }
    Ok(())
}
