#include "qsim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qsim {
namespace {

constexpr double kDeathThreshold = 1e-9;

double tau_of_density(const DensityMatrix& rho) { return tau_lower_bound(rho).tau; }

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

TauSource tau_source_from_name(const std::string& name) {
  if (name == "numeric") return TauSource::EngineNumeric;
  if (name == "analytic") return TauSource::EngineAnalyticDensity;
  if (name == "formula") return TauSource::ClosedFormFormula;
  throw InvalidArgument("unknown tau source '" + name + "' (expected numeric|analytic|formula)");
}

std::string tau_source_name(TauSource s) {
  switch (s) {
    case TauSource::EngineNumeric: return "numeric";
    case TauSource::EngineAnalyticDensity: return "analytic";
    default: return "formula";
  }
}

double tau_at(const std::string& state_id, const std::string& channel_id, double kt,
              TauSource source, double step) {
  switch (source) {
    case TauSource::EngineNumeric: {
      const PureState psi = catalog_state(state_id);
      const NoiseChannel ch = NoiseChannel::from_name(channel_id, 1.0, psi.n_qubits);
      return tau_of_density(propagate(density(psi), ch, kt, step));
    }
    case TauSource::EngineAnalyticDensity:
      return tau_of_density(closed_form_density(state_id, channel_id, kt));
    default: {
      const std::optional<double> v = closed_form_tau(state_id, channel_id, kt);
      if (!v)
        throw NotInCatalog("no closed-form tau for (" + state_id + ", " + channel_id + ")");
      return *v;
    }
  }
}

TauCurve sweep(const std::string& state_id, const std::string& channel_id, double kt_max,
               int points, TauSource source, double step) {
  if (!(kt_max > 0.0)) throw InvalidArgument("sweep: kt_max must be positive");
  if (points < 2) throw InvalidArgument("sweep: need at least 2 points");

  TauCurve curve{state_id, channel_id, source, {}};
  curve.rows.reserve(static_cast<size_t>(points));
  std::vector<double> grid(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i)
    grid[static_cast<size_t>(i)] = kt_max * static_cast<double>(i) / (points - 1);

  std::vector<double> raw(static_cast<size_t>(points));
  if (source == TauSource::EngineNumeric) {
    const PureState psi = catalog_state(state_id);
    const NoiseChannel ch = NoiseChannel::from_name(channel_id, 1.0, psi.n_qubits);
    size_t idx = 0;
    propagate_sampled(density(psi), ch, grid, step, [&](double, const DensityMatrix& rho) {
      raw[idx++] = tau_of_density(rho);
    });
  } else {
    for (int i = 0; i < points; ++i)
      raw[static_cast<size_t>(i)] =
          tau_at(state_id, channel_id, grid[static_cast<size_t>(i)], source, step);
  }

  const double tau0 = raw.front();
  for (int i = 0; i < points; ++i) {
    const double r = raw[static_cast<size_t>(i)];
    curve.rows.push_back({grid[static_cast<size_t>(i)], r, tau0 > 0.0 ? r / tau0 : 0.0});
  }
  return curve;
}

SuddenDeathReport sudden_death(const std::string& state_id, const std::string& channel_id,
                               double kt_max, TauSource source, double step) {
  if (!(kt_max > 0.0)) throw InvalidArgument("sudden_death: kt_max must be positive");
  SuddenDeathReport rep{state_id, channel_id, std::nullopt, {0.0, kt_max}, 1e-6};

  const int scan_points = 201;
  const TauCurve scan = sweep(state_id, channel_id, kt_max, scan_points, source, step);
  int first_dead = -1;
  for (int i = 0; i < scan_points; ++i)
    if (scan.rows[static_cast<size_t>(i)].tau_raw <= kDeathThreshold) {
      first_dead = i;
      break;
    }
  if (first_dead < 0) return rep;
  if (first_dead == 0) {
    rep.kt_star = 0.0;
    rep.bracket = {0.0, 0.0};
    return rep;
  }

  double lo = scan.rows[static_cast<size_t>(first_dead) - 1].kt;  // alive
  double hi = scan.rows[static_cast<size_t>(first_dead)].kt;     // dead
  while (hi - lo > rep.tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (tau_at(state_id, channel_id, mid, source, step) <= kDeathThreshold)
      hi = mid;
    else
      lo = mid;
  }
  rep.bracket = {lo, hi};
  rep.kt_star = 0.5 * (lo + hi);
  return rep;
}

CompareTable compare(const std::vector<std::string>& state_ids, const std::string& channel_id,
                     const std::vector<double>& kt_grid, double step) {
  if (state_ids.empty()) throw InvalidArgument("compare: state list is empty");
  if (kt_grid.empty()) throw InvalidArgument("compare: kt grid is empty");
  for (size_t i = 1; i < kt_grid.size(); ++i)
    if (kt_grid[i] <= kt_grid[i - 1]) throw InvalidArgument("compare: grid must be increasing");

  CompareTable table;
  table.state_ids = state_ids;
  table.kt_grid = kt_grid;
  table.normalized.assign(state_ids.size(), std::vector<double>(kt_grid.size(), 0.0));

  for (size_t s = 0; s < state_ids.size(); ++s) {
    const PureState psi = catalog_state(state_ids[s]);
    const NoiseChannel ch = NoiseChannel::from_name(channel_id, 1.0, psi.n_qubits);
    const double tau0 = tau_of_density(density(psi));
    std::vector<double> grid = kt_grid;
    size_t idx = 0;
    propagate_sampled(density(psi), ch, grid, step, [&](double, const DensityMatrix& rho) {
      table.normalized[s][idx++] = tau0 > 0.0 ? tau_of_density(rho) / tau0 : 0.0;
    });
  }

  table.argmax.resize(kt_grid.size());
  for (size_t g = 0; g < kt_grid.size(); ++g) {
    size_t best = 0;
    for (size_t s = 1; s < state_ids.size(); ++s)
      if (table.normalized[s][g] > table.normalized[best][g]) best = s;
    table.argmax[g] = state_ids[best];
  }
  return table;
}

VerifyReport verify(const std::string& state_id, const std::string& channel_id, double kt_max,
                    int points, double step) {
  const ClosedFormEntry* entry = find_closed_form(state_id, channel_id);
  if (!entry)
    throw NotInCatalog("no closed-form density for (" + state_id + ", " + channel_id + ")");
  if (!(kt_max > 0.0) || points < 2) throw InvalidArgument("verify: bad grid");

  VerifyReport rep;
  rep.state_id = state_id;
  rep.channel_id = channel_id;
  rep.hybrid_entries = entry->hybrid_entry_count();

  std::vector<double> grid(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i)
    grid[static_cast<size_t>(i)] = kt_max * static_cast<double>(i) / (points - 1);

  const PureState psi = catalog_state(state_id);
  const NoiseChannel ch = NoiseChannel::from_name(channel_id, 1.0, psi.n_qubits);
  propagate_sampled(density(psi), ch, grid, step, [&](double kt, const DensityMatrix& num) {
    const DensityMatrix ana = entry->density(kt, step);
    double dev = 0.0;
    for (int r = 0; r < ana.dim(); ++r)
      for (int c = 0; c < ana.dim(); ++c)
        if (entry->entry_defined(r, c))
          dev = std::max(dev, std::abs(ana.matrix().at(r, c) - num.matrix().at(r, c)));
    const double trace_err = std::abs(ana.matrix().trace() - cdouble(1.0, 0.0));
    rep.rows.push_back({kt, dev, trace_err, ana.min_eigenvalue()});
    rep.max_deviation = std::max(rep.max_deviation, dev);
  });
  return rep;
}

void write_density_file(const std::string& path, const DensityMatrix& rho) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileFormatError("cannot open '" + path + "' for writing");
  out << "dim=" << rho.dim() << "\n";
  for (int r = 0; r < rho.dim(); ++r)
    for (int c = 0; c < rho.dim(); ++c) {
      const cdouble v = rho.matrix().at(r, c);
      out << r << " " << c << " " << fmt17(v.real()) << " " << fmt17(v.imag()) << "\n";
    }
  if (!out) throw FileFormatError("write failed for '" + path + "'");
}

DensityMatrix read_density_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileFormatError("cannot open '" + path + "'");
  std::string header;
  if (!std::getline(in, header) || header.rfind("dim=", 0) != 0)
    throw FileFormatError("density file must start with dim=<d>");
  int d = 0;
  try {
    d = std::stoi(header.substr(4));
  } catch (...) {
    throw FileFormatError("bad dimension in '" + header + "'");
  }
  if (d < 2 || d > 1024) throw FileFormatError("dimension out of range");

  ComplexMatrix m(d);
  std::vector<bool> seen(static_cast<size_t>(d) * d, false);
  std::string line;
  long count = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    int r, c;
    double re, im;
    if (!(ls >> r >> c >> re >> im))
      throw FileFormatError("bad entry line: '" + line + "'");
    if (r < 0 || r >= d || c < 0 || c >= d) throw FileFormatError("index out of range");
    if (seen[static_cast<size_t>(r) * d + c]) throw FileFormatError("duplicate entry");
    seen[static_cast<size_t>(r) * d + c] = true;
    m.at(r, c) = cdouble(re, im);
    ++count;
  }
  if (count != static_cast<long>(d) * d)
    throw FileFormatError("expected " + std::to_string(static_cast<long>(d) * d) + " entries, got " +
                          std::to_string(count));
  DensityMatrix rho = [&] {
    try {
      return DensityMatrix(std::move(m));
    } catch (const Error& e) {
      throw FileFormatError(std::string("density file invalid: ") + e.what());
    }
  }();
  const double min_eig = rho.min_eigenvalue();
  if (min_eig < -1e-8)
    throw FileFormatError("density file not PSD: min eigenvalue " + std::to_string(min_eig));
  return rho;
}

void write_tau_curve_csv(const std::string& path, const TauCurve& curve) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileFormatError("cannot open '" + path + "' for writing");
  out << "kt,tau_raw,tau_normalized\n";
  for (const TauCurveRow& row : curve.rows)
    out << fmt17(row.kt) << "," << fmt17(row.tau_raw) << "," << fmt17(row.tau_normalized) << "\n";
  if (!out) throw FileFormatError("write failed for '" + path + "'");
}

TauCurve parse_tau_curve_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileFormatError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line != "kt,tau_raw,tau_normalized")
    throw FileFormatError("bad tau curve header");
  TauCurve curve;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    TauCurveRow row;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    if (!(ls >> row.kt >> row.tau_raw >> row.tau_normalized))
      throw FileFormatError("bad tau curve row: '" + line + "'");
    curve.rows.push_back(row);
  }
  return curve;
}

void write_compare_csv(const std::string& path, const CompareTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileFormatError("cannot open '" + path + "' for writing");
  out << "kt";
  for (const std::string& s : table.state_ids) out << "," << s;
  out << ",argmax\n";
  for (size_t g = 0; g < table.kt_grid.size(); ++g) {
    out << fmt17(table.kt_grid[g]);
    for (size_t s = 0; s < table.state_ids.size(); ++s) out << "," << fmt17(table.normalized[s][g]);
    out << "," << table.argmax[g] << "\n";
  }
  if (!out) throw FileFormatError("write failed for '" + path + "'");
}

}  // namespace qsim
