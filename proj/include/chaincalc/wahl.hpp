#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "chaincalc/chain.hpp"

namespace chaincalc {

/// Parameters of a class-W (Wahl) chain: the chain of p^2/(pq-1) with
/// 1 <= q < p and gcd(p,q) = 1, i.e. the resolution chain of the Wahl
/// singularity 1/p^2(1, pq-1).
struct WahlParams {
  std::int64_t p = 0;
  std::int64_t q = 0;
  HJChain chain;

  friend bool operator==(const WahlParams&, const WahlParams&) = default;
};

struct NotClassW {
  std::string reason;
};

using ClassWResult = std::variant<WahlParams, NotClassW>;

/// Arithmetic recognition: value n/a is class W iff n = p^2, p | a+1,
/// q = (a+1)/p lies in [1, p) and gcd(p,q) = 1. Diagram symmetry is never
/// used as a criterion (it is necessary but not sufficient).
ClassWResult classify_class_w(const HJChain& chain);

bool is_class_w(const HJChain& chain);

/// classify_class_w that throws CalcError(NotClassW) on failure.
WahlParams require_class_w(const HJChain& chain);

/// expand(p^2, pq-1).
HJChain wahl_chain(std::int64_t p, std::int64_t q);

/// Prepend a 2 and increment the last entry: (p,q) -> (2p-q, p).
HJChain wahl_move_l(const HJChain& chain);

/// Append a 2 and increment the first entry: (p,q) -> (p+q, q).
HJChain wahl_move_r(const HJChain& chain);

/// Breadth-first closure of {[4]} under the two moves, pruned at p > max_p
/// (both moves strictly increase p, which is re-checked at runtime). Result
/// is deduplicated and sorted by (p, q).
std::vector<WahlParams> generate_class_w(std::int64_t max_p);

enum class NeighborhoodKind { Flipping, Divisorial };

struct Bn1Report {
  std::int64_t n = 0;
  NeighborhoodKind kind = NeighborhoodKind::Flipping;
  std::string statement;  // the embedding certificate for B_{n,1}
};

/// Parity classification of the B_{n,1} family, n >= 3: odd n is flipping
/// (B_{n,1} embeds in V_{-4}), even n is divisorial (B_{n,1} embeds in
/// B_{2,1} blown up once).
Bn1Report bn1_kind(std::int64_t n);

}  // namespace chaincalc
