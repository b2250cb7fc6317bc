//! Reproducible verification campaigns and their certificates.

pub mod certificate;
pub mod exec;
pub mod verify;

pub use certificate::{Certificate, Witness, FORMAT_TAG};
pub use exec::{item_rng, run_indexed};
pub use verify::{
    verify_choice_number, verify_equitable, verify_lemma_suite, CampaignConfig, ChoiceReport,
    EquitableReport, LemmaReport, LemmaSuiteConfig, Mode,
};
