//! Reducible configurations, their moves, and the block decomposition.

pub mod blocks;
pub mod fixtures;
pub mod matching;
pub mod moves;
pub mod pattern;
pub mod window;

pub use blocks::{block_decompose, Block, BlockSequence};
pub use fixtures::{planted_fixture, planted_fixture_with, Fixture};
pub use matching::{find_matches, hypothesis_holds, MatchOptions, Placement};
pub use moves::{apply_move, assert_config_free, ConfigHit, ConfigReport, MoveOutcome};
pub use pattern::{builtin_configs, parse_configs, Config, Hypothesis, Role};
pub use window::{improve_to_local_min, window_improve};
