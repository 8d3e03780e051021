#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace udhn {

// Tolerance applied to load-domain and MBS-capacity comparisons. Resource
// block conversions introduce representable-fraction noise; an absolute
// epsilon keeps feasibility checks stable without silently clamping values.
inline constexpr double kLoadEps = 1e-9;

enum class BSKind { Macro, RRH, Micro, Pico, Femto };

std::string_view to_string(BSKind kind);
BSKind bs_kind_from_string(std::string_view name);

/// Static power/capacity profile of one base station class.
struct PowerProfile {
  double p_circuit = 0.0;           // W, fixed draw while active
  double load_slope = 0.0;          // dimensionless load-dependent factor
  double p_tx = 0.0;                // W, transmit power
  std::optional<double> p_sleep;    // W while switched off; absent => no sleep state
  int n_rb = 0;                     // resource blocks (capacity unit)

  void validate() const;
};

/// Built-in profile constants per kind. The macro profile has no sleep
/// state: the MBS is modeled always-on.
PowerProfile default_profile(BSKind kind);

struct SmallCell {
  int id = 0;
  BSKind kind = BSKind::Femto;
  PowerProfile profile;
};

/// One macro BS plus the ordered small cells under its control. This is the
/// unit every switching policy operates on.
struct MacroCell {
  PowerProfile mbs_profile = default_profile(BSKind::Macro);
  double mbs_max_load = 1.0;
  std::vector<SmallCell> small_cells;  // ids dense 0..N-1

  int n_sbs() const { return static_cast<int>(small_cells.size()); }
  void validate() const;
};

/// Per-slot switch-off choice: which small cells sleep, and the MBS load
/// after absorbing their traffic.
struct SwitchDecision {
  std::vector<int> off_ids;      // sorted ascending, unique
  double mbs_load_after = 0.0;
};

/// Power draw of a single BS at the given normalized load.
/// Active: p_circuit + load * load_slope * p_tx. Inactive: p_sleep.
double bs_power(const PowerProfile& profile, double load, bool active);

/// Normalized load expressed in this BS's resource blocks. The common
/// currency for moving traffic between stations of different capacities.
double rb_equivalent(double load, const PowerProfile& profile);

/// Move the candidate set's traffic up to the MBS. Returns nullopt when the
/// resulting MBS load would exceed its capacity; that is a normal outcome,
/// not an error. Served traffic is conserved in RB-equivalents.
std::optional<SwitchDecision> offload(std::span<const int> off_candidate,
                                      std::span<const double> sbs_loads,
                                      double mbs_load,
                                      const MacroCell& cell);

/// Total power of the macro cell under a decision: MBS at its post-offload
/// load plus every small cell (active at its own load, off at sleep power).
double cell_power(const MacroCell& cell, std::span<const double> sbs_loads,
                  const SwitchDecision& decision);

}  // namespace udhn
