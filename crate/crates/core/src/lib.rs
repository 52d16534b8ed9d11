/*!
Phonetic comparison of languages by word lists.

The crate is organised around the stages of a comparison run:

* [`lexicon`] parses word databases written as Prolog-style facts,
  `numbers(english,[wun,too,three,...]).`, where a nested list holds
  synonyms for one concept.
* [`subst`] holds symmetric substitution cost tables. The two built-in
  tables encode Grimm's-law consonant shifts and vowel similarity over a
  one-symbol-per-phoneme encoding.
* [`editdist`] computes weighted Levenshtein distances, enumerates every
  co-optimal alignment, and builds labeled distance matrices (per language,
  per concept or all-to-all). It also reads and writes the OC upper-triangle
  matrix format.
* [`cluster`] runs agglomerative hierarchical clustering, cuts the
  dendrogram, scores cuts by silhouette and measures cluster purity.
* [`stats`] has the column statistics used to compare concepts: mean and
  standard deviation, kernel density curves, t-scores, Bhattacharyya
  coefficients and simple linear regression.

```
use lingdist::{editdist, subst::SubstitutionTable, Word};

let table = SubstitutionTable::builder()
    .pair('f', 'v', 0.2)
    .pair('e', 'o', 0.2)
    .build()
    .unwrap();
let a: Word = "overa".parse().unwrap();
let b: Word = "hofa".parse().unwrap();
assert_eq!(editdist::raw_distance(&a, &b, &table), 3.2);
assert_eq!(editdist::normalized_distance(&a, &b, &table).unwrap(), 0.64);
```
*/

pub mod cluster;
pub mod editdist;
pub mod lexicon;
pub mod matrix;
pub mod stats;
pub mod subst;
pub mod svg;
mod text;

pub use cluster::{ClusterAssignment, Dendrogram, Linkage, SilhouetteReport};
pub use editdist::{Alignment, AlignmentColumn};
pub use lexicon::{Lexicon, Symbol, Word, WordEntry};
pub use matrix::DistanceMatrix;
pub use stats::{AnalysisFrame, DensityCurve, RegressionResult};
pub use subst::SubstitutionTable;
