// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Every tolerance is exact equality; each criterion also carries a wall-clock
// budget that is enforced.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chaincalc/chain.hpp"
#include "chaincalc/cli.hpp"
#include "chaincalc/dot_diagram.hpp"
#include "chaincalc/flips.hpp"
#include "chaincalc/format.hpp"
#include "chaincalc/wahl.hpp"

using namespace chaincalc;

namespace {

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<void()> body;  // throws std::runtime_error on failure
};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

template <typename T>
void require_eq(const T& got, const T& want, const std::string& what) {
  if (!(got == want)) throw std::runtime_error(what);
}

std::size_t largest_ge3(const std::vector<std::int64_t>& b) {
  for (std::size_t i = b.size(); i > 0; --i)
    if (b[i - 1] >= 3) return i;
  return 0;
}

// ---- criterion bodies -----------------------------------------------------

void golden_49_34() {
  require_eq(render_chain(expand(49, 34)), std::string("2,2,5,4"), "expand");
  require_eq(render_chain(dual_chain(expand(49, 34))),
             std::string("4,2,2,3,2,2"), "dual");
  require(delta_position(expand(49, 34)) == DeltaPosition{3, 3},
          "delta position");
  require_eq(render_chain(delta_half(expand(49, 34))), std::string("2,2,4"),
             "delta half");

  FlipResult flip = flip_last(parse_mk1a("2,2,5,*4"));
  require(flip.wahl && render_chain(flip.wahl->chain) == "2,5,3",
          "flip of (...,*4)");

  FlipTrace trace = flip_sequence(7, 5);
  require(trace.steps.size() == 3, "three flips");
  const std::vector<std::string> rows{"2,2,5,4,1,2,2", "2,2,5,3,1,2",
                                      "2,2,5,2,1", "2,2,4"};
  for (std::size_t k = 0; k < trace.steps.size(); ++k)
    require_eq(render_entries(trace.steps[k].before.weights), rows[k],
               "figure row " + std::to_string(k + 1));
  require_eq(render_chain(trace.final_chain), rows.back(), "figure final row");
  require(trace.steps[0].new_wahl && trace.steps[0].new_wahl->p == 5 &&
              trace.steps[0].new_wahl->q == 3,
          "first params (5,3)");
  require(trace.steps[1].new_wahl && trace.steps[1].new_wahl->p == 3 &&
              trace.steps[1].new_wahl->q == 1,
          "second params (3,1)");
  require(!trace.steps[2].new_wahl, "last flip smooth");
}

void zero_chain_identity() {
  for (std::int64_t n = 2; n <= 500; ++n) {
    for (std::int64_t a = 1; a < n; ++a) {
      if (std::gcd(n, a) != 1) continue;
      HJChain chain = expand(n, a);
      HJChain dual = dual_chain(chain);
      std::vector<std::int64_t> glued = chain.entries();
      glued.push_back(1);
      glued.insert(glued.end(), dual.entries().rbegin(),
                   dual.entries().rend());
      if (!reduce_zero(GeneralChain(std::move(glued))).is_zero)
        throw std::runtime_error("zero chain failed for " +
                                 std::to_string(n) + "/" + std::to_string(a));
    }
  }
}

void class_w_three_way() {
  std::set<std::vector<std::int64_t>> direct;
  for (std::int64_t p = 2; p <= 40; ++p)
    for (std::int64_t q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1) direct.insert(wahl_chain(p, q).entries());

  std::vector<WahlParams> generated = generate_class_w(40);
  std::set<std::vector<std::int64_t>> bfs;
  for (const WahlParams& w : generated) bfs.insert(w.chain.entries());
  require(bfs == direct, "generation set == direct-expansion set");

  for (const WahlParams& w : generated) {
    DotDiagram d = build_diagram(w.chain);
    require(d.n_dots % 2 == 1, "odd dot count for " + render_chain(w.chain));
    require(is_symmetric(d), "symmetry for " + render_chain(w.chain));
    WahlParams back = require_class_w(w.chain);
    require(back.p == w.p && back.q == w.q,
            "recognition round-trip for " + render_chain(w.chain));
  }
}

void flip_triple_agreement() {
  for (const WahlParams& w : generate_class_w(40)) {
    MK1AData data{w.chain, w.chain.size()};
    FlipResult formula = flip_last(data);
    FlipResult diagram = flip_last_by_diagram(data);
    FlipStep oracle = flip_oracle_step(full_configuration(w.p, w.q));

    const std::string name = render_chain(w.chain);
    require(formula.wahl.has_value() == diagram.wahl.has_value() &&
                formula.wahl.has_value() == oracle.new_wahl.has_value(),
            "smooth/Wahl agreement for " + name);
    if (formula.wahl) {
      require(formula.wahl->chain == diagram.wahl->chain &&
                  formula.wahl->chain == oracle.new_wahl->chain,
              "chain agreement for " + name);
      require(formula.wahl->p == oracle.new_wahl->p &&
                  formula.wahl->q == oracle.new_wahl->q &&
                  diagram.wahl->p == oracle.new_wahl->p,
              "parameter agreement for " + name);
    }
    require(formula.c_plus_weight == diagram.c_plus_weight &&
                formula.c_plus_weight == oracle.c_plus_weight,
            "C+ agreement for " + name);
  }
}

void flip_sequence_targets() {
  for (const WahlParams& w : generate_class_w(40)) {
    FlipTrace trace = flip_sequence(w.p, w.q);
    const std::string name = render_chain(w.chain);
    require(trace.final_chain == delta_half(w.chain),
            "delta-half target for " + name);
    std::int64_t e = static_cast<std::int64_t>(dual_chain(w.chain).size());
    require(static_cast<std::int64_t>(trace.steps.size()) ==
                e - trace.delta.col,
            "step count e - j(delta) for " + name);
    std::int64_t prev_p = w.p;
    for (const FlipStep& step : trace.steps) {
      std::vector<std::int64_t> b = step.before.b_weights();
      std::size_t i = largest_ge3(b);
      require(i >= 1, "flip index exists for " + name);
      require(step.blow_downs.size() == b.size() - i + 1,
              "blow-down count r-i+1 for " + name);
      if (step.new_wahl) {
        require(step.new_wahl->p < prev_p, "p decreases for " + name);
        prev_p = step.new_wahl->p;
      }
    }
  }
}

void bn1_family() {
  for (std::int64_t n = 2; n <= 50; ++n) {
    std::vector<std::int64_t> want{n + 2};
    want.insert(want.end(), static_cast<std::size_t>(n - 2), 2);
    require(wahl_chain(n, 1).entries() == want,
            "wahl_chain(n,1) shape for n = " + std::to_string(n));
    HJChain half = delta_half(wahl_chain(n, 1));
    require(half.size() == 1 && half.at(0) == n + 1,
            "delta-half [n+1] for n = " + std::to_string(n));
  }
  for (std::int64_t n = 3; n <= 200; ++n) {
    Bn1Reduction r = bn1_reduction(n);
    require(render_chain(r.trace.final_chain) == "4",
            "[n+2,1,2,...,2] -> [4] for n = " + std::to_string(n));
    require((n % 2 == 1) ==
                (r.report.kind == NeighborhoodKind::Flipping),
            "parity kind for n = " + std::to_string(n));
  }
}

void round_trip_duality() {
  for (std::int64_t n = 2; n <= 2000; ++n) {
    for (std::int64_t a = 1; a < n; ++a) {
      if (std::gcd(n, a) != 1) continue;
      HJChain chain = expand(n, a);
      if (!(evaluate(chain) == Fraction{n, a}))
        throw std::runtime_error("evaluate(expand) failed at " +
                                 std::to_string(n) + "/" + std::to_string(a));
      if (!(dual_chain(dual_chain(chain)) == chain))
        throw std::runtime_error("dual involution failed at " +
                                 std::to_string(n) + "/" + std::to_string(a));
      Fraction rev = evaluate(reverse_chain(chain));
      if (rev.num != n || (a * rev.den) % n != 1)
        throw std::runtime_error("reversal inverse failed at " +
                                 std::to_string(n) + "/" + std::to_string(a));
      if (!(dual_from_diagram(build_diagram(chain)) == dual_chain(chain)))
        throw std::runtime_error("diagram duality failed at " +
                                 std::to_string(n) + "/" + std::to_string(a));
    }
  }
}

void verify_paper_gate() {
  std::ostringstream out, err;
  require(run_cli({"verify-paper"}, out, err) == 0,
          "verify-paper must exit 0 on a correct build");

  detail::flip_formula_bias = 1;
  std::ostringstream out2, err2;
  int status = run_cli({"verify-paper"}, out2, err2);
  detail::flip_formula_bias = 0;
  require(status == 1, "verify-paper must exit 1 under fault injection");
  require(err2.str().find("flip of 49/34") != std::string::npos,
          "the failing 49/34 flip check must be named");
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "golden 49/34 suite", 1.0, golden_49_34},
      {2, "zero-chain identity, n <= 500", 10.0, zero_chain_identity},
      {3, "class-W three-way consistency, p <= 40", 30.0, class_w_three_way},
      {4, "flip triple agreement, p <= 40", 60.0, flip_triple_agreement},
      {5, "flip-sequence target and counts, p <= 40", 60.0,
       flip_sequence_targets},
      {6, "B_{n,1} family certificates", 5.0, bn1_family},
      {7, "round-trip and duality sweeps, n <= 2000", 60.0,
       round_trip_duality},
      {8, "verify-paper gate and fault injection", 30.0, verify_paper_gate},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      c.body();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && seconds > c.budget_seconds) {
      ok = false;
      detail = "exceeded the " + std::to_string(c.budget_seconds) +
               "s budget";
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (ok ? "PASS" : "FAIL") << "  criterion " << c.number << "  "
         << c.title << "  (" << seconds << "s)";
    if (!ok) line << "  -- " << detail;
    std::cout << line.str() << "\n";
    failed += ok ? 0 : 1;
  }
  if (failed != 0)
    std::cout << failed << " criterion(s) failed" << std::endl;
  return failed == 0 ? 0 : 1;
}
