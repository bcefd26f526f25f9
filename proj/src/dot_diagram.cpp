#include "chaincalc/dot_diagram.hpp"

#include <string>

#include "chaincalc/wahl.hpp"

namespace chaincalc {

namespace {

constexpr std::int64_t kMaxRenderCells = 4'000'000;

// Move word of the dot path: 'R' between consecutive dots of a row, 'D' on
// each row transition (the next row starts directly under the current last
// dot). Length = n_dots - 1.
std::string move_word(const DotDiagram& d) {
  if (d.n_dots > kMaxRenderCells)
    fail(Errc::Overflow, "dot diagram too large");
  std::string w;
  w.reserve(static_cast<std::size_t>(d.n_dots - 1));
  for (std::size_t i = 0; i < d.rows.size(); ++i) {
    w.append(static_cast<std::size_t>(d.rows[i].len - 1), 'R');
    if (i + 1 < d.rows.size()) w.push_back('D');
  }
  return w;
}

// (row, col) of the k-th dot (1-based) in row-major order.
DeltaPosition dot_at(const DotDiagram& d, std::int64_t k) {
  std::int64_t seen = 0;
  for (std::size_t i = 0; i < d.rows.size(); ++i) {
    if (k <= seen + d.rows[i].len)
      return DeltaPosition{static_cast<std::int64_t>(i) + 1,
                           d.rows[i].start_col + (k - seen - 1)};
    seen += d.rows[i].len;
  }
  fail(Errc::IndexOutOfRange, "dot index beyond diagram");
}

}  // namespace

DotDiagram build_diagram(const HJChain& chain) {
  DotDiagram d;
  d.rows.reserve(chain.size());
  std::int64_t start = 1;
  for (std::int64_t b : chain.entries()) {
    std::int64_t len = b - 1;
    d.rows.push_back(DotRow{start, len});
    d.n_dots += len;
    start += len - 1;
  }
  d.n_cols = d.rows.back().start_col + d.rows.back().len - 1;
  return d;
}

HJChain dual_from_diagram(const DotDiagram& diagram) {
  // Column counts via a difference array over [1, n_cols].
  std::vector<std::int64_t> diff(static_cast<std::size_t>(diagram.n_cols) + 1,
                                 0);
  for (const DotRow& row : diagram.rows) {
    diff[static_cast<std::size_t>(row.start_col - 1)] += 1;
    diff[static_cast<std::size_t>(row.start_col - 1 + row.len)] -= 1;
  }
  std::vector<std::int64_t> entries;
  entries.reserve(static_cast<std::size_t>(diagram.n_cols));
  std::int64_t count = 0;
  for (std::int64_t j = 0; j < diagram.n_cols; ++j) {
    count += diff[static_cast<std::size_t>(j)];
    entries.push_back(count + 1);
  }
  return HJChain(std::move(entries));
}

bool is_symmetric(const DotDiagram& diagram) {
  if (diagram.n_dots % 2 == 0) return false;
  if (diagram.n_dots == 1) return true;
  const std::string w = move_word(diagram);
  const std::size_t m = w.size();  // even
  bool palindrome = true;
  for (std::size_t k = 0; k < m / 2; ++k) {
    if (w[k] != w[m - 1 - k]) {
      palindrome = false;
      break;
    }
  }
  if (palindrome) return true;
  if (w[m / 2 - 1] != w[m / 2]) return false;
  for (std::size_t k = 0; k + 1 < m / 2; ++k) {
    if (w[k] == w[m - 1 - k]) return false;  // must be opposite letters
  }
  return true;
}

std::optional<DeltaPosition> symmetry_center(const DotDiagram& diagram) {
  if (!is_symmetric(diagram)) return std::nullopt;
  return dot_at(diagram, (diagram.n_dots + 1) / 2);
}

DeltaPosition delta_position(const HJChain& chain) {
  require_class_w(chain);
  DotDiagram d = build_diagram(chain);
  // Both class-W moves extend the dot path by one dot at each end, so the
  // middle dot of [4]'s diagram stays the center throughout the recursion.
  return dot_at(d, (d.n_dots + 1) / 2);
}

HJChain delta_half(const HJChain& chain) {
  DeltaPosition delta = delta_position(chain);
  DotDiagram d = build_diagram(chain);
  std::vector<std::int64_t> entries(
      chain.entries().begin(),
      chain.entries().begin() + (delta.row - 1));
  entries.push_back(delta.col -
                    d.rows[static_cast<std::size_t>(delta.row - 1)].start_col +
                    2);
  return HJChain(std::move(entries));
}

std::string render_ascii(const DotDiagram& diagram,
                         std::optional<DeltaPosition> mark) {
  std::int64_t cells =
      diagram.n_cols * static_cast<std::int64_t>(diagram.rows.size());
  if (diagram.n_cols > kMaxRenderCells || cells > kMaxRenderCells)
    fail(Errc::Overflow, "dot diagram too large to render");
  std::string out;
  out.reserve(static_cast<std::size_t>(cells + diagram.rows.size()));
  for (std::size_t i = 0; i < diagram.rows.size(); ++i) {
    const DotRow& row = diagram.rows[i];
    for (std::int64_t j = 1; j <= diagram.n_cols; ++j) {
      bool dot = j >= row.start_col && j < row.start_col + row.len;
      bool marked = mark && mark->row == static_cast<std::int64_t>(i) + 1 &&
                    mark->col == j;
      out.push_back(marked ? '@' : (dot ? 'o' : '.'));
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace chaincalc
