//! String k-attractors through the truncated-suffix-tree set-cover
//! reduction: verification, minimality checking, minimal / greedy / exact
//! minimum construction, occurrence reporting, and sharp-attractor tools.
//!
//! Text offsets and suffix-array ranks are 0-based throughout the API;
//! [`AttractorSet`] converts to and from the 1-based positions used in files.

pub mod attractor;
pub mod combinatorics;
pub mod error;
pub mod minimality;
pub mod optimizer;
pub mod sharp;
pub mod text_index;
pub mod verify;

pub use attractor::{load_attractor, parse_attractor_file, AttractorSet, DArray, EquivClasses};
pub use error::{Error, Result};
pub use minimality::{is_minimal_k_attractor, MinimalityVerdict};
pub use optimizer::{build_marker_graph, find_minimal, find_minimum, greedy_approx, MarkerGraph};
pub use sharp::{build_gadget_attractor, gen_sharp_gadget, min_2_sharp_attractor, SetCoverInstance};
pub use text_index::{remap_alphabet, RemappedText, SuffixIndex, TruncatedEdge, Universe};
pub use verify::{is_k_attractor, is_k_sharp_attractor, report_occurrences, SharpVerdict, Verdict};
