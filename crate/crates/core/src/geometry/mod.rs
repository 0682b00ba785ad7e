//! Front-ends for links (weighted linking graphs) and hyperplane-arrangement
//! classes.

pub mod arrangements;
pub mod links;

pub use arrangements::{arrangement_series, ArrangementReport, ArrangementSpec, LoopCandidates};
pub use links::{
    graph_connected, link_cohomology, link_report, link_verdict, rescale_link, LinkCohomology, LinkReport,
    WeightedLinkingGraph,
};
