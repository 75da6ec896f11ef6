#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsim/analytic.hpp"
#include "qsim/concurrence.hpp"
#include "qsim/lindblad.hpp"

namespace qsim {

enum class TauSource { EngineNumeric, EngineAnalyticDensity, ClosedFormFormula };

TauSource tau_source_from_name(const std::string& name);  // numeric|analytic|formula
std::string tau_source_name(TauSource s);

struct TauCurveRow {
  double kt = 0.0;
  double tau_raw = 0.0;
  double tau_normalized = 0.0;
};

struct TauCurve {
  std::string state_id, channel_id;
  TauSource source = TauSource::EngineNumeric;
  std::vector<TauCurveRow> rows;  // strictly increasing kt
};

// Tau at a single kt. For EngineNumeric the density comes from propagate,
// for EngineAnalyticDensity from the closed-form catalog, for
// ClosedFormFormula from the printed tau expression (NotInCatalog if absent).
double tau_at(const std::string& state_id, const std::string& channel_id, double kt,
              TauSource source, double step = kDefaultStep);

// Uniform grid on [0, kt_max] including kt = 0.
TauCurve sweep(const std::string& state_id, const std::string& channel_id, double kt_max,
               int points, TauSource source, double step = kDefaultStep);

struct SuddenDeathReport {
  std::string state_id, channel_id;
  std::optional<double> kt_star;
  std::pair<double, double> bracket{0.0, 0.0};
  double tolerance = 1e-6;
};

// 201-point coarse scan on [0, kt_max] for a bracket of tau <= 1e-9, then
// bisection to width 1e-6; nullopt when tau stays above threshold everywhere.
SuddenDeathReport sudden_death(const std::string& state_id, const std::string& channel_id,
                               double kt_max = 5.0, TauSource source = TauSource::EngineNumeric,
                               double step = kDefaultStep);

struct CompareTable {
  std::vector<std::string> state_ids;
  std::vector<double> kt_grid;
  std::vector<std::vector<double>> normalized;  // [state][grid point]
  std::vector<std::string> argmax;              // ties resolved by list order
};

// Normalized engine (numeric) curves for several states under one channel.
CompareTable compare(const std::vector<std::string>& state_ids, const std::string& channel_id,
                     const std::vector<double>& kt_grid, double step = kDefaultStep);

struct VerifyReport {
  std::string state_id, channel_id;
  double max_deviation = 0.0;      // over entries with defined closed forms
  int hybrid_entries = 0;          // numerically filled entries, excluded above
  struct Row {
    double kt;
    double deviation;
    double trace_error;  // |Tr - 1| of the instantiated closed form
    double min_eigenvalue;
  };
  std::vector<Row> rows;
  bool passed(double tol = 1e-6) const { return max_deviation < tol; }
};

// Closed form vs propagate on a uniform grid (defaults to 21 points on [0,1]).
VerifyReport verify(const std::string& state_id, const std::string& channel_id,
                    double kt_max = 1.0, int points = 21, double step = kDefaultStep);

// --- flat-file formats -------------------------------------------------------

// Density-matrix file: "dim=<d>" then d^2 lines "row col re im" (0-based).
void write_density_file(const std::string& path, const DensityMatrix& rho);
// Validates Hermiticity (1e-10), trace (1e-10) and PSD (-1e-8) on read.
DensityMatrix read_density_file(const std::string& path);

// CSV with header kt,tau_raw,tau_normalized; 17 significant digits, LF endings.
void write_tau_curve_csv(const std::string& path, const TauCurve& curve);
TauCurve parse_tau_curve_csv(const std::string& path);

// CSV with header kt,<state>...,argmax.
void write_compare_csv(const std::string& path, const CompareTable& table);

}  // namespace qsim
