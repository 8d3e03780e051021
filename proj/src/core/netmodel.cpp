#include "core/netmodel.hpp"

#include <algorithm>
#include <cstddef>
#include <string>

#include "core/errors.hpp"

namespace udhn {

namespace {

bool load_in_domain(double load) {
  return load >= -kLoadEps && load <= 1.0 + kLoadEps;
}

void check_load(double load, const char* what) {
  if (!load_in_domain(load)) {
    throw DomainError(std::string(what) + ": load " + std::to_string(load) +
                      " outside [0, 1]");
  }
}

}  // namespace

std::string_view to_string(BSKind kind) {
  switch (kind) {
    case BSKind::Macro: return "macro";
    case BSKind::RRH: return "rrh";
    case BSKind::Micro: return "micro";
    case BSKind::Pico: return "pico";
    case BSKind::Femto: return "femto";
  }
  throw UsageError("unknown BSKind value");
}

BSKind bs_kind_from_string(std::string_view name) {
  if (name == "macro") return BSKind::Macro;
  if (name == "rrh") return BSKind::RRH;
  if (name == "micro") return BSKind::Micro;
  if (name == "pico") return BSKind::Pico;
  if (name == "femto") return BSKind::Femto;
  throw UsageError("unknown BS kind '" + std::string(name) + "'");
}

void PowerProfile::validate() const {
  if (!(p_circuit > 0.0)) throw UsageError("PowerProfile: p_circuit must be > 0");
  if (!(load_slope > 0.0)) throw UsageError("PowerProfile: load_slope must be > 0");
  if (!(p_tx > 0.0)) throw UsageError("PowerProfile: p_tx must be > 0");
  if (n_rb <= 0) throw UsageError("PowerProfile: n_rb must be > 0");
  if (p_sleep) {
    if (!(*p_sleep > 0.0)) throw UsageError("PowerProfile: p_sleep must be > 0");
    if (!(*p_sleep < p_circuit)) {
      throw UsageError("PowerProfile: p_sleep must be below p_circuit");
    }
  }
}

PowerProfile default_profile(BSKind kind) {
  switch (kind) {
    case BSKind::Macro: return {130.0, 4.7, 20.0, std::nullopt, 100};
    case BSKind::RRH:   return {84.0, 2.8, 20.0, 56.0, 75};
    case BSKind::Micro: return {56.0, 2.6, 6.3, 39.0, 50};
    case BSKind::Pico:  return {6.8, 4.0, 0.13, 4.3, 25};
    case BSKind::Femto: return {4.8, 8.0, 0.05, 2.9, 15};
  }
  throw UsageError("unknown BSKind value");
}

void MacroCell::validate() const {
  mbs_profile.validate();
  if (!(mbs_max_load > 0.0) || mbs_max_load > 1.0 + kLoadEps) {
    throw UsageError("MacroCell: mbs_max_load must lie in (0, 1]");
  }
  for (std::size_t i = 0; i < small_cells.size(); ++i) {
    const SmallCell& sc = small_cells[i];
    if (sc.id != static_cast<int>(i)) {
      throw UsageError("MacroCell: small-cell ids must be dense 0..N-1");
    }
    if (sc.kind == BSKind::Macro) {
      throw UsageError("MacroCell: a macro BS cannot appear as a small cell");
    }
    sc.profile.validate();
    if (!sc.profile.p_sleep) {
      throw UsageError("MacroCell: small cells need a sleep power entry");
    }
  }
}

double bs_power(const PowerProfile& profile, double load, bool active) {
  check_load(load, "bs_power");
  if (!active) {
    if (!profile.p_sleep) {
      throw DomainError("bs_power: profile has no sleep state");
    }
    return *profile.p_sleep;
  }
  return profile.p_circuit + load * profile.load_slope * profile.p_tx;
}

double rb_equivalent(double load, const PowerProfile& profile) {
  check_load(load, "rb_equivalent");
  return load * profile.n_rb;
}

std::optional<SwitchDecision> offload(std::span<const int> off_candidate,
                                      std::span<const double> sbs_loads,
                                      double mbs_load,
                                      const MacroCell& cell) {
  const int n = cell.n_sbs();
  if (static_cast<int>(sbs_loads.size()) != n) {
    throw UsageError("offload: sbs_loads size does not match the cell");
  }
  check_load(mbs_load, "offload (mbs)");
  for (double load : sbs_loads) check_load(load, "offload (sbs)");

  std::vector<int> off(off_candidate.begin(), off_candidate.end());
  std::sort(off.begin(), off.end());
  if (std::adjacent_find(off.begin(), off.end()) != off.end()) {
    throw UsageError("offload: duplicate small-cell id in candidate set");
  }
  for (int id : off) {
    if (id < 0 || id >= n) {
      throw UsageError("offload: unknown small-cell id " + std::to_string(id));
    }
  }

  double moved_rb = 0.0;
  for (int id : off) {
    moved_rb += sbs_loads[id] * cell.small_cells[id].profile.n_rb;
  }
  const double after = mbs_load + moved_rb / cell.mbs_profile.n_rb;
  if (after > cell.mbs_max_load + kLoadEps) return std::nullopt;
  return SwitchDecision{std::move(off), after};
}

double cell_power(const MacroCell& cell, std::span<const double> sbs_loads,
                  const SwitchDecision& decision) {
  const int n = cell.n_sbs();
  if (static_cast<int>(sbs_loads.size()) != n) {
    throw UsageError("cell_power: sbs_loads size does not match the cell");
  }
  for (double load : sbs_loads) check_load(load, "cell_power");
  if (!std::is_sorted(decision.off_ids.begin(), decision.off_ids.end()) ||
      std::adjacent_find(decision.off_ids.begin(), decision.off_ids.end()) !=
          decision.off_ids.end()) {
    throw ContractError("cell_power: decision off_ids not sorted unique");
  }
  for (int id : decision.off_ids) {
    if (id < 0 || id >= n) {
      throw ContractError("cell_power: decision references unknown id " +
                          std::to_string(id));
    }
  }
  if (decision.mbs_load_after < -kLoadEps ||
      decision.mbs_load_after > cell.mbs_max_load + kLoadEps) {
    throw ContractError("cell_power: infeasible decision (MBS load " +
                        std::to_string(decision.mbs_load_after) + ")");
  }

  // Accumulation order is part of the contract: MBS first, then small cells
  // by ascending id. The subset searcher mirrors it so candidate powers
  // compare bit-identically with the returned decision's power.
  double total = bs_power(cell.mbs_profile, decision.mbs_load_after, true);
  std::size_t oi = 0;
  for (int j = 0; j < n; ++j) {
    const bool off =
        oi < decision.off_ids.size() && decision.off_ids[oi] == j;
    if (off) ++oi;
    total += bs_power(cell.small_cells[j].profile, sbs_loads[j], !off);
  }
  return total;
}

}  // namespace udhn
