//! GIT stability of boundary configurations.
//!
//! A configuration is stable, strictly semistable or unstable according to
//! the sizes `m₁` (largest group of equal boundary points) and `m₂` (how many
//! interior members fix the largest such group). [`stability_oracle`]
//! recomputes the verdict from Hilbert–Mumford weights, independently of the
//! grouping.

mod chart;
mod criterion;
mod hilbert_mumford;
pub mod identities;
mod limit;
pub mod suite;

pub use chart::{chart_generators, Chart, ChartPoint};
pub use criterion::{classify_stability, nilpotent_grouping, NilpotentGrouping, StabilityReport, Verdict};
pub use hilbert_mumford::{candidate_lines, conjugator_for_line, hm_mu, hm_mu_max_form, stability_oracle};
pub use limit::{one_ps_limit, orbit_witness, s1, s2, s_orbit};
