#include "chaincalc/flips.hpp"

#include <algorithm>
#include <string>

#include "chaincalc/format.hpp"

namespace chaincalc {

namespace detail {
std::int64_t flip_formula_bias = 0;
}

namespace {

void check_mk1a(const MK1AData& data) {
  if (data.underline < 1 || data.underline > data.chain.size())
    fail(Errc::IndexOutOfRange,
         "underline " + std::to_string(data.underline) +
             " out of range for a chain of length " +
             std::to_string(data.chain.size()));
  require_class_w(data.chain);
}

// Largest 1-based index i with b_i >= 3 (so b_j = 2 for i < j <= r).
std::size_t flip_index(const std::vector<std::int64_t>& b) {
  for (std::size_t i = b.size(); i > 0; --i) {
    if (b[i - 1] >= 3) return i;
  }
  fail(Errc::AllTwos, "chain has no entry >= 3");
}

// In-place blow-down mirroring the public operation, for the oracle walk.
void blow_down_at(std::vector<std::int64_t>& w, std::vector<RoleTag>& roles,
                  std::size_t pos) {
  if (w.size() == 1) {
    w.clear();
    roles.clear();
    return;
  }
  if (pos == 0) {
    w.erase(w.begin());
    w.front() -= 1;
  } else if (pos + 1 == w.size()) {
    w.pop_back();
    w.back() -= 1;
  } else {
    w[pos - 1] -= 1;
    w[pos + 1] -= 1;
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(pos));
  }
  roles.erase(roles.begin() + static_cast<std::ptrdiff_t>(pos));
}

}  // namespace

Fraction contraction_invariant(const MK1AData& data) {
  check_mk1a(data);
  std::vector<std::int64_t> v = data.chain.entries();
  v[data.underline - 1] -= 1;
  return evaluate(GeneralChain(std::move(v)));
}

FlipResult flip_last(const MK1AData& data) {
  check_mk1a(data);
  if (data.underline != data.chain.size())
    fail(Errc::UnderlineNotLast,
         "the closed-form flip needs the (-1)-curve at the last entry");
  const std::vector<std::int64_t>& b = data.chain.entries();
  const std::size_t i = flip_index(b);
  if (i == 1) {
    // [b_2,...,b_i - 1] degenerates to nothing: the flipped side is smooth
    // and C+ ends with self-intersection -(b_1 - 1).
    return FlipResult{std::nullopt, -(b[0] - 1)};
  }
  std::vector<std::int64_t> next(b.begin() + 1, b.begin() + static_cast<std::ptrdiff_t>(i));
  next.back() -= 1 + detail::flip_formula_bias;
  HJChain next_chain(std::move(next));
  return FlipResult{require_class_w(next_chain), -b[0]};
}

FlipResult flip_last_by_diagram(const MK1AData& data) {
  check_mk1a(data);
  if (data.underline != data.chain.size())
    fail(Errc::UnderlineNotLast,
         "the diagram flip needs the (-1)-curve at the last entry");
  DotDiagram d = build_diagram(data.chain);

  // Delete the last column: every trailing row of length 1 sitting in it goes
  // away and the row reaching it loses its last dot.
  std::vector<DotRow> rows = d.rows;
  while (!rows.empty() && rows.back().len == 1 &&
         rows.back().start_col == d.n_cols)
    rows.pop_back();
  if (rows.empty()) fail(Errc::AllTwos, "chain has no entry >= 3");
  rows.back().len -= 1;
  if (rows.back().len == 0) fail(Errc::AllTwos, "chain has no entry >= 3");

  // The first row of what remains is reserved for C+.
  std::int64_t c_plus_weight = -(rows.front().len + 1);
  rows.erase(rows.begin());
  if (rows.empty()) return FlipResult{std::nullopt, c_plus_weight};

  // Read the surviving rows as a fresh staircase.
  std::vector<std::int64_t> entries;
  entries.reserve(rows.size());
  for (const DotRow& row : rows) entries.push_back(row.len + 1);
  HJChain next_chain(std::move(entries));
  return FlipResult{require_class_w(next_chain), c_plus_weight};
}

void ConfigurationChain::validate() const {
  if (weights.size() != roles.size() || weights.empty())
    fail(Errc::InvalidEntry, "configuration weights and roles do not line up");
  // Layout CPlus* B* C? A*, one C at most, C weight 1.
  int stage = 0;  // 0 = CPlus, 1 = B, 2 = A (after C)
  std::size_t c_count = 0;
  for (std::size_t k = 0; k < roles.size(); ++k) {
    switch (roles[k].role) {
      case Role::CPlus:
        if (stage > 0)
          fail(Errc::InvalidEntry, "C+ entries must lead the configuration");
        break;
      case Role::B:
        if (stage > 1) fail(Errc::InvalidEntry, "B entries must precede C");
        stage = 1;
        break;
      case Role::C:
        if (stage > 1 || ++c_count > 1)
          fail(Errc::MultipleMinusOnes, "more than one C curve");
        if (weights[k] != 1)
          fail(Errc::InvalidEntry, "the C curve must have weight 1");
        stage = 2;
        break;
      case Role::A:
        if (stage < 2)
          fail(Errc::InvalidEntry, "A entries must follow the C curve");
        break;
    }
  }
}

std::optional<std::size_t> ConfigurationChain::c_position() const {
  for (std::size_t k = 0; k < roles.size(); ++k)
    if (roles[k].role == Role::C) return k;
  return std::nullopt;
}

std::vector<std::int64_t> ConfigurationChain::b_weights() const {
  std::vector<std::int64_t> out;
  for (std::size_t k = 0; k < roles.size(); ++k)
    if (roles[k].role == Role::B) out.push_back(weights[k]);
  return out;
}

bool operator==(const ConfigurationChain& a, const ConfigurationChain& b) {
  if (a.weights != b.weights) return false;
  if (a.roles.size() != b.roles.size()) return false;
  for (std::size_t k = 0; k < a.roles.size(); ++k)
    if (a.roles[k].role != b.roles[k].role) return false;
  return true;
}

ConfigurationChain full_configuration(std::int64_t p, std::int64_t q) {
  HJChain chain = wahl_chain(p, q);
  HJChain dual = dual_chain(chain);
  DeltaPosition delta = delta_position(chain);
  const auto e = static_cast<std::int64_t>(dual.size());

  ConfigurationChain config;
  std::int64_t bi = 0;
  for (std::int64_t b : chain.entries()) {
    config.weights.push_back(b);
    config.roles.push_back(RoleTag{Role::B, ++bi});
  }
  config.weights.push_back(1);
  config.roles.push_back(RoleTag{Role::C, 0});
  for (std::int64_t j = e; j >= delta.col + 2; --j) {
    config.weights.push_back(dual.at(static_cast<std::size_t>(j - 1)));
    config.roles.push_back(RoleTag{Role::A, j});
  }
  config.validate();
  return config;
}

FlipStep flip_oracle_step(const ConfigurationChain& config) {
  config.validate();
  std::size_t ones = 0;
  for (std::int64_t w : config.weights) ones += w == 1 ? 1 : 0;
  if (ones > 1)
    fail(Errc::MultipleMinusOnes, "configuration has several (-1)-curves");
  auto c = config.c_position();
  if (ones == 0 || !c)
    fail(Errc::NoMinusOne, "configuration has no C-labeled (-1)-curve");

  std::vector<std::int64_t> w = config.weights;
  std::vector<RoleTag> roles = config.roles;
  std::vector<std::size_t> blow_downs;
  std::vector<std::vector<std::int64_t>> intermediates;

  std::size_t pos = *c;
  std::optional<std::size_t> new_c;
  for (;;) {
    blow_downs.push_back(pos);
    blow_down_at(w, roles, pos);
    intermediates.push_back(w);
    const bool left_one = pos > 0 && w[pos - 1] == 1;
    const bool right_one = pos < w.size() && w[pos] == 1;
    if (left_one && right_one)
      fail(Errc::MultipleMinusOnes,
           "blow-down exposed two (-1)-curves at once");
    if (left_one) {
      if (roles[pos - 1].role != Role::B)
        fail(Errc::InvalidEntry, "a non-B curve dropped to weight -1");
      pos -= 1;  // keep contracting through the B side
      continue;
    }
    if (right_one) {
      if (roles[pos].role != Role::A)
        fail(Errc::InvalidEntry, "a non-A curve dropped to weight -1");
      new_c = pos;  // the former A_e becomes the new C
    }
    break;
  }

  // Relabel: the surviving former B_1 becomes the next C+.
  std::size_t first_b = 0;
  bool have_b = false;
  std::int64_t max_cplus = 0;
  for (std::size_t k = 0; k < roles.size(); ++k) {
    if (roles[k].role == Role::CPlus) max_cplus = std::max(max_cplus, roles[k].index);
    if (roles[k].role == Role::B && !have_b) {
      first_b = k;
      have_b = true;
    }
  }
  if (!have_b)
    fail(Errc::DisagreementWithFormula, "blow-downs consumed the whole chain");
  roles[first_b] = RoleTag{Role::CPlus, max_cplus + 1};
  std::int64_t c_plus_weight = -w[first_b];
  std::int64_t bi = 0;
  std::vector<std::int64_t> new_b;
  for (std::size_t k = first_b + 1; k < roles.size(); ++k) {
    if (roles[k].role != Role::B) break;
    roles[k].index = ++bi;
    new_b.push_back(w[k]);
  }
  if (new_c) roles[*new_c] = RoleTag{Role::C, 0};

  ConfigurationChain after{std::move(w), std::move(roles)};
  after.validate();

  std::optional<WahlParams> new_wahl;
  if (!new_b.empty()) new_wahl = require_class_w(HJChain(std::move(new_b)));
  return FlipStep{config,  std::move(blow_downs),     std::move(after),
                  std::move(new_wahl), c_plus_weight, std::move(intermediates)};
}

FlipTrace flip_sequence(std::int64_t p, std::int64_t q) {
  HJChain chain = wahl_chain(p, q);
  WahlParams source{p, q, chain};
  FlipTrace trace{source,
                  dual_chain(chain),
                  delta_position(chain),
                  delta_half(chain),
                  {},
                  delta_half(chain)};

  ConfigurationChain config = full_configuration(p, q);
  std::int64_t prev_p = p;
  while (config.c_position()) {
    HJChain b_chain(config.b_weights());
    const std::size_t r = b_chain.size();
    const std::size_t i = flip_index(b_chain.entries());
    FlipResult formula = flip_last(MK1AData{b_chain, r});

    FlipStep step = flip_oracle_step(config);

    // The blow-down oracle and the closed form must tell the same story.
    const bool same_wahl =
        step.new_wahl.has_value() == formula.wahl.has_value() &&
        (!step.new_wahl || (step.new_wahl->chain == formula.wahl->chain &&
                            step.new_wahl->p == formula.wahl->p &&
                            step.new_wahl->q == formula.wahl->q));
    if (!same_wahl || step.c_plus_weight != formula.c_plus_weight ||
        step.blow_downs.size() != r - i + 1)
      fail(Errc::DisagreementWithFormula,
           "oracle and closed-form flip differ on " +
               render_chain(b_chain));
    if (step.new_wahl) {
      if (step.new_wahl->p >= prev_p)
        fail(Errc::DisagreementWithFormula, "flip did not decrease p");
      prev_p = step.new_wahl->p;
      if (!step.after.c_position())
        fail(Errc::DisagreementWithFormula,
             "flip produced a singularity but no curve to contract");
    } else if (step.after.c_position()) {
      fail(Errc::DisagreementWithFormula,
           "flip reached the smooth stage with a (-1)-curve left");
    }
    config = step.after;
    trace.steps.push_back(std::move(step));
  }

  HJChain final_chain(config.weights);
  if (!(final_chain == trace.delta_half_chain))
    fail(Errc::DisagreementWithFormula,
         "flip sequence ended at " + render_chain(final_chain) +
             " instead of the delta-half chain " +
             render_chain(trace.delta_half_chain));
  trace.final_chain = std::move(final_chain);
  return trace;
}

Bn1Reduction bn1_reduction(std::int64_t n) {
  Bn1Report report = bn1_kind(n);  // validates n >= 3
  std::vector<std::int64_t> entries{n + 2, 1};
  entries.insert(entries.end(), static_cast<std::size_t>(n - 3), 2);
  GeneralChain start(std::move(entries));

  // Two independent routes to [4]: the continuant value and the blow-down
  // reduction must agree.
  Fraction value = evaluate(start);
  ReductionTrace trace = reduce_zero(start);
  const bool reduced_to_4 =
      trace.final_chain.size() == 1 && trace.final_chain.at(0) == 4;
  if (!reduced_to_4 || !(value == Fraction{4, 1}))
    fail(Errc::DisagreementWithFormula,
         "[n+2,1,2,...,2] did not contract to [4] for n = " +
             std::to_string(n));
  return Bn1Reduction{std::move(report), std::move(trace)};
}

}  // namespace chaincalc
