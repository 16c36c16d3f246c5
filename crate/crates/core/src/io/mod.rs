//! Tabular export of potentials, states and spectra, and the subcommands of
//! the `isospec` binary.

mod commands;
mod config;
mod format;

pub use commands::{
    cmd_figures, cmd_potential, cmd_spectrum, cmd_states, cmd_verify, error_line, exit_code, run,
    FigureFile, FigureManifest, Verification, EXIT_INVALID_CONFIG, EXIT_NUMERICAL, EXIT_OK,
    EXIT_VERIFICATION_FAILED,
};
pub use config::{
    OutputFormat, RunConfig, Subcommand, DEFAULT_K, DEFAULT_TOLERANCE, FIGURE_GAMMAS,
    FIGURE_POINTS, FIGURE_R_MAX, FIGURE_R_MIN,
};
pub use format::{format_float, format_gamma, Document, Table};
