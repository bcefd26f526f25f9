#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chaincalc/chain.hpp"
#include "chaincalc/dot_diagram.hpp"
#include "chaincalc/wahl.hpp"

namespace chaincalc {

/// mk1A data (b_1,...,b_i,...,b_r): a class-W resolution chain with the
/// (-1)-curve C meeting the exceptional curve E_underline. underline is
/// 1-based.
struct MK1AData {
  HJChain chain;
  std::size_t underline = 0;
};

/// Type Delta/Omega of the contraction of C: the value of the chain with
/// b_underline decremented, evaluated by continuants (entries may drop to 1).
Fraction contraction_invariant(const MK1AData& data);

/// Result of one flip with the (-1)-curve at the last entry. `wahl` is empty
/// when the flipped side is smooth. c_plus_weight is the self-intersection of
/// C+ (e.g. -2).
struct FlipResult {
  std::optional<WahlParams> wahl;
  std::int64_t c_plus_weight = 0;
};

/// Closed-form flip: with i the largest index such that b_i >= 3 and b_j = 2
/// for i < j <= r, the new Wahl chain is [b_2,...,b_i - 1] (smooth when
/// i = 1) and C+ is the image of E_1.
FlipResult flip_last(const MK1AData& data);

/// Same flip computed on the dot diagram: delete the last column, reserve the
/// first row of what remains for C+, and read the rest as a chain. Must agree
/// with flip_last.
FlipResult flip_last_by_diagram(const MK1AData& data);

enum class Role { B, C, A, CPlus };

struct RoleTag {
  Role role = Role::B;
  std::int64_t index = 0;  // B_k / A_k / C+_t; 0 for C

  friend bool operator==(const RoleTag&, const RoleTag&) = default;
};

/// Weighted chain with per-entry role labels. Valid layouts match
/// CPlus* B* C? A*, with at most one C whose weight is 1.
struct ConfigurationChain {
  std::vector<std::int64_t> weights;
  std::vector<RoleTag> roles;

  void validate() const;
  std::optional<std::size_t> c_position() const;
  std::vector<std::int64_t> b_weights() const;

  /// Equality on weights and role kinds; numeric role labels are
  /// presentation only (A labels are not recoverable from the text form).
  friend bool operator==(const ConfigurationChain& a,
                         const ConfigurationChain& b);
};

/// The chain [b_1..b_r, 1, a_e, ..., a_{j(delta)+2}] with roles B_1..B_r, C,
/// A_e..A_{j(delta)+2}; the tail is empty when j(delta)+2 > e.
ConfigurationChain full_configuration(std::int64_t p, std::int64_t q);

struct FlipStep {
  ConfigurationChain before;
  std::vector<std::size_t> blow_downs;  // 0-based position of each blow-down
  ConfigurationChain after;
  std::optional<WahlParams> new_wahl;  // empty = smooth
  std::int64_t c_plus_weight = 0;
  std::vector<std::vector<std::int64_t>> intermediates;  // chain after each blow-down
};

/// One flip at the minimal-resolution level: blow down the C curve and each
/// newly created (-1)-curve on the B side; the step ends when the A side
/// yields the new C (or nothing is left to contract). Relabels former B_1 as
/// C+ and the former A_e, if any, as the new C.
FlipStep flip_oracle_step(const ConfigurationChain& config);

struct FlipTrace {
  WahlParams source;
  HJChain dual;
  DeltaPosition delta;
  HJChain delta_half_chain;
  std::vector<FlipStep> steps;
  HJChain final_chain;
};

/// Iterate flip_oracle_step from full_configuration(p, q) until no (-1)-curve
/// remains. Every step is cross-checked against the closed-form flip; any
/// mismatch raises DisagreementWithFormula. The final chain must equal the
/// delta-half chain.
FlipTrace flip_sequence(std::int64_t p, std::int64_t q);

struct Bn1Reduction {
  Bn1Report report;
  ReductionTrace trace;  // [n+2, 1, 2 x (n-3)] blown down to [4]
};

/// Certificate for the identity [n+2, 1, 2, ..., 2] = [4] (the contraction
/// invariant of ([n+2, 2 x (n-2)], underline 2)), bundled with the parity
/// classification of B_{n,1}. n >= 3.
Bn1Reduction bn1_reduction(std::int64_t n);

namespace detail {
/// Fault-injection knob for the verification suite: added to the decrement in
/// flip_last's closed form. Keep 0 in normal operation.
extern std::int64_t flip_formula_bias;
}  // namespace detail

}  // namespace chaincalc
