#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qsim/lindblad.hpp"
#include "qsim/states.hpp"

namespace qsim {

// A solved (state, channel) pair: a symbol-valued entry pattern over the
// 16x16 grid plus real coefficient functions of kt. Entries whose closed form
// is not available are marked hybrid and filled from the numerical propagator
// at instantiation time.
class ClosedFormEntry {
 public:
  const std::string& state_id() const { return state_id_; }
  const std::string& channel_id() const { return channel_id_; }
  bool has_hybrid() const { return hybrid_count_ > 0; }
  int hybrid_entry_count() const { return hybrid_count_; }
  // False for hybrid-filled entries, true everywhere else (including zeros).
  bool entry_defined(int r, int c) const;

  DensityMatrix density(double kt, double step = kDefaultStep) const;

 private:
  friend class AnalyticCatalog;
  std::string state_id_, channel_id_;
  // code 0: structural zero; +k / -k: +-coefficient k-1; kHybridCode: numeric fill.
  static constexpr int kHybridCode = 9999;
  std::array<int, 256> code_{};
  std::vector<std::function<double(double)>> coef_;
  int hybrid_count_ = 0;
};

struct TauFormula {
  std::string state_id, channel_id;
  std::function<double(double)> eval;  // exact printed formula, max{0,.} included
};

// Solved density catalog: w4 x {x,y,z,iso}, phi2 x {x,y,z,iso},
// phi3 x {z,iso} closed-form, phi3 x {x,y} hybrid.
const ClosedFormEntry* find_closed_form(const std::string& state_id, const std::string& channel_id);
DensityMatrix closed_form_density(const std::string& state_id, const std::string& channel_id,
                                  double kt);  // throws NotInCatalog

// Tau formula catalog: w4-z, phi1 x {x,y,z,iso}, phi2 x {x,y,z,iso}, phi3-z.
// Pairs reported only graphically return nullopt.
const TauFormula* find_tau_formula(const std::string& state_id, const std::string& channel_id);
std::optional<double> closed_form_tau(const std::string& state_id, const std::string& channel_id,
                                      double kt);

// All pairs present in the density catalog, fixed order.
std::vector<std::pair<std::string, std::string>> closed_form_pairs();

}  // namespace qsim
