#pragma once

#include "csemit/config.hpp"
#include "csemit/results.hpp"

namespace csemit {

/// Diagonalizes per configured theta and writes spectrum artifacts
/// (spectrum.json / spectrum.csv, suffixed _NN for theta lists).
int run_spectrum(const RunConfig& config);

/// Computes decay/shift breakdowns per theta; writes rates.json and
/// convergence.csv, plus scan.json when several thetas are configured.
int run_rates(const RunConfig& config);

/// Runs the validation suite and writes validate.json; returns 0 only when
/// every check passes.
int run_validate(const RunConfig& config);

/// Scans both observables over the configured theta list into scan.json.
int run_scan_theta(const RunConfig& config);

}  // namespace csemit
