#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chaincalc/chain.hpp"

namespace chaincalc {

struct DotRow {
  std::int64_t start_col = 1;  // 1-based column of the row's first dot
  std::int64_t len = 1;        // number of dots (= b_i - 1)

  friend bool operator==(const DotRow&, const DotRow&) = default;
};

/// Riemenschneider dot diagram: row i holds b_i - 1 dots, the first one
/// directly under the last dot of row i-1.
struct DotDiagram {
  std::vector<DotRow> rows;
  std::int64_t n_cols = 0;
  std::int64_t n_dots = 0;
};

struct DeltaPosition {
  std::int64_t row = 0;
  std::int64_t col = 0;

  friend bool operator==(const DeltaPosition&, const DeltaPosition&) = default;
};

DotDiagram build_diagram(const HJChain& chain);

/// Dual chain read off the diagram: entry j = (dots in column j) + 1.
HJChain dual_from_diagram(const DotDiagram& diagram);

/// Staircase point symmetry about the middle dot. True iff the dot count is
/// odd and the dot path reversed onto itself is a half-turn of the staircase:
/// either the move word is a palindrome (the literal planar half-turn), or it
/// is letter-flipped anti-palindromic away from two equal central moves (the
/// half-turn composed with the row/column transpose, which is the shape of
/// every class-W staircase).
bool is_symmetric(const DotDiagram& diagram);

/// Row/column of the middle dot when the diagram is symmetric.
std::optional<DeltaPosition> symmetry_center(const DotDiagram& diagram);

/// Middle dot of the diagram in row-major order; defined for class-W chains
/// only (throws NotClassW otherwise).
DeltaPosition delta_position(const HJChain& chain);

/// Sub-chain read from the diagram restricted to rows <= i(delta) and columns
/// <= j(delta): [b_1,...,b_{i-1}, j(delta) - start_col(i) + 2]. Class W only.
HJChain delta_half(const HJChain& chain);

/// Fixed-width ASCII grid: dot = 'o', marked dot = '@', empty = '.'.
std::string render_ascii(const DotDiagram& diagram,
                         std::optional<DeltaPosition> mark = std::nullopt);

}  // namespace chaincalc
