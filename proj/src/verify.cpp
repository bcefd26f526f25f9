#include "chaincalc/verify.hpp"

#include <functional>
#include <sstream>

#include "chaincalc/chain.hpp"
#include "chaincalc/dot_diagram.hpp"
#include "chaincalc/flips.hpp"
#include "chaincalc/format.hpp"
#include "chaincalc/wahl.hpp"

namespace chaincalc {

namespace {

std::string diff_msg(const std::string& what, const std::string& expected,
                     const std::string& got) {
  return what + ": expected " + expected + ", got " + got;
}

std::string eq_chain(const HJChain& got, const std::string& expected,
                     const std::string& what) {
  if (render_chain(got) != expected)
    return diff_msg(what, expected, render_chain(got));
  return {};
}

struct Runner {
  std::vector<CheckResult> results;

  void run(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r{name, false, {}};
    try {
      r.detail = body();
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
};

}  // namespace

std::vector<CheckResult> verify_paper() {
  Runner runner;

  runner.run("expand 49/34", [] {
    return eq_chain(expand(49, 34), "2,2,5,4", "expand(49,34)");
  });

  runner.run("evaluate [2,2,5,4]", []() -> std::string {
    Fraction f = evaluate(parse_hj_chain("2,2,5,4"));
    if (!(f == Fraction{49, 34}))
      return diff_msg("evaluate", "49/34", to_string(f));
    return {};
  });

  runner.run("dual chain of 49/34", [] {
    return eq_chain(dual_chain(parse_hj_chain("2,2,5,4")), "4,2,2,3,2,2",
                    "dual");
  });

  runner.run("dot diagram of 49/34", []() -> std::string {
    DotDiagram d = build_diagram(parse_hj_chain("2,2,5,4"));
    std::vector<DotRow> want{{1, 1}, {1, 1}, {1, 4}, {4, 3}};
    if (d.rows != want || d.n_cols != 6 || d.n_dots != 9)
      return "diagram rows/cols/dots differ from the worked example";
    return {};
  });

  runner.run("dual read off the 49/34 diagram", [] {
    return eq_chain(dual_from_diagram(build_diagram(parse_hj_chain("2,2,5,4"))),
                    "4,2,2,3,2,2", "columns");
  });

  runner.run("49/34 diagram symmetry", []() -> std::string {
    if (!is_symmetric(build_diagram(parse_hj_chain("2,2,5,4"))))
      return "the 49/34 diagram must be symmetric about its delta dot";
    return {};
  });

  runner.run("delta position of 49/34", []() -> std::string {
    DeltaPosition d = delta_position(parse_hj_chain("2,2,5,4"));
    if (!(d == DeltaPosition{3, 3}))
      return diff_msg("delta", "(3,3)",
                      "(" + std::to_string(d.row) + "," +
                          std::to_string(d.col) + ")");
    return {};
  });

  runner.run("delta-half of 49/34", [] {
    return eq_chain(delta_half(parse_hj_chain("2,2,5,4")), "2,2,4",
                    "delta-half");
  });

  runner.run("delta-half of n^2/(n-1)", []() -> std::string {
    for (std::int64_t n = 2; n <= 10; ++n) {
      HJChain half = delta_half(wahl_chain(n, 1));
      if (half.size() != 1 || half.at(0) != n + 1)
        return diff_msg("delta-half of n^2/(n-1), n=" + std::to_string(n),
                        std::to_string(n + 1), render_chain(half));
    }
    return {};
  });

  runner.run("blow-down of the flip figure rows 1->2", []() -> std::string {
    GeneralChain out = blow_down(parse_general_chain("2,2,5,4,1,2,2"), 4);
    if (render_chain(out) != "2,2,5,3,1,2")
      return diff_msg("blow-down", "2,2,5,3,1,2", render_chain(out));
    return {};
  });

  runner.run("zero chain of the 49/34 pair", []() -> std::string {
    ReductionTrace t =
        reduce_zero(parse_general_chain("2,2,5,4,1,2,2,3,2,2,4"));
    if (!t.is_zero)
      return diff_msg("reduction", "0", render_chain(t.final_chain));
    return {};
  });

  runner.run("class-W recognition of 49/34", []() -> std::string {
    WahlParams w = require_class_w(parse_hj_chain("2,2,5,4"));
    if (w.p != 7 || w.q != 5)
      return diff_msg("params", "(7,5)",
                      "(" + std::to_string(w.p) + "," + std::to_string(w.q) +
                          ")");
    return {};
  });

  runner.run("class-W base chain [4]", []() -> std::string {
    WahlParams w = require_class_w(parse_hj_chain("4"));
    if (w.p != 2 || w.q != 1) return "base chain [4] must have params (2,1)";
    return {};
  });

  runner.run("wahl chain from (7,5)", [] {
    return eq_chain(wahl_chain(7, 5), "2,2,5,4", "wahl_chain(7,5)");
  });

  runner.run("wahl chain from (2,1)", [] {
    return eq_chain(wahl_chain(2, 1), "4", "wahl_chain(2,1)");
  });

  runner.run("class-W generation up to p = 2", []() -> std::string {
    std::vector<WahlParams> set = generate_class_w(2);
    if (set.size() != 1 || render_chain(set[0].chain) != "4")
      return "generation up to p = 2 must yield exactly {[4]}";
    return {};
  });

  runner.run("B_{n,1} parity, odd case", []() -> std::string {
    if (bn1_kind(3).kind != NeighborhoodKind::Flipping)
      return "n = 3 must be flipping";
    return {};
  });

  runner.run("B_{n,1} parity, even case", []() -> std::string {
    if (bn1_kind(4).kind != NeighborhoodKind::Divisorial)
      return "n = 4 must be divisorial";
    return {};
  });

  runner.run("flip of 49/34 (formula)", []() -> std::string {
    FlipResult r = flip_last(parse_mk1a("2,2,5,*4"));
    if (!r.wahl) return "flip of 49/34 must keep a Wahl singularity";
    if (render_chain(r.wahl->chain) != "2,5,3" || r.wahl->p != 5 ||
        r.wahl->q != 3 || r.c_plus_weight != -2)
      return diff_msg("flip of [2,2,5,*4]", "[2,5,3] with params (5,3)",
                      render_chain(r.wahl->chain));
    return {};
  });

  runner.run("flip of 49/34 (dot diagram)", []() -> std::string {
    FlipResult r = flip_last_by_diagram(parse_mk1a("2,2,5,*4"));
    if (!r.wahl || render_chain(r.wahl->chain) != "2,5,3")
      return "diagram flip of [2,2,5,*4] must give [2,5,3]";
    return {};
  });

  runner.run("flip figure row 2 -> row 3", []() -> std::string {
    FlipResult r = flip_last(parse_mk1a("2,5,*3"));
    if (!r.wahl || render_chain(r.wahl->chain) != "5,2" || r.wahl->p != 3 ||
        r.wahl->q != 1)
      return "flip of [2,5,*3] must give [5,2] with params (3,1)";
    return {};
  });

  runner.run("flip figure final row", []() -> std::string {
    FlipResult r = flip_last(parse_mk1a("5,*2"));
    if (r.wahl || r.c_plus_weight != -4)
      return "flip of [5,*2] must be smooth with C+ of weight -4";
    return {};
  });

  runner.run("full configuration of (7,5)", []() -> std::string {
    ConfigurationChain c = full_configuration(7, 5);
    if (render_configuration(c) != "2,2,5,4;1;2,2")
      return diff_msg("configuration", "2,2,5,4;1;2,2",
                      render_configuration(c));
    return {};
  });

  runner.run("flip oracle on the figure rows", []() -> std::string {
    ConfigurationChain c = full_configuration(7, 5);
    const std::vector<std::string> rows{"2,2,5,4,1,2,2", "2,2,5,3,1,2",
                                        "2,2,5,2,1", "2,2,4"};
    for (std::size_t k = 0; k + 1 < rows.size(); ++k) {
      if (render_entries(c.weights) != rows[k])
        return diff_msg("figure row " + std::to_string(k + 1), rows[k],
                        render_entries(c.weights));
      c = flip_oracle_step(c).after;
    }
    if (render_entries(c.weights) != rows.back())
      return diff_msg("figure final row", rows.back(),
                      render_entries(c.weights));
    return {};
  });

  runner.run("flip sequence of (7,5)", []() -> std::string {
    FlipTrace t = flip_sequence(7, 5);
    if (t.steps.size() != 3) return "flip sequence of (7,5) must take 3 steps";
    if (!t.steps[0].new_wahl || t.steps[0].new_wahl->p != 5 ||
        t.steps[0].new_wahl->q != 3)
      return "first flip must reach params (5,3)";
    if (!t.steps[1].new_wahl || t.steps[1].new_wahl->p != 3 ||
        t.steps[1].new_wahl->q != 1)
      return "second flip must reach params (3,1)";
    if (t.steps[2].new_wahl) return "third flip must reach the smooth stage";
    return eq_chain(t.final_chain, "2,2,4", "final chain");
  });

  runner.run("contraction identity [n+2,1,2,...,2] = [4]", []() -> std::string {
    for (std::int64_t n : {3, 4, 5, 6}) {
      Bn1Reduction r = bn1_reduction(n);
      if (render_chain(r.trace.final_chain) != "4")
        return "identity failed for n = " + std::to_string(n);
    }
    return {};
  });

  runner.run("CLI text: expand 49 34", []() -> std::string {
    if (render_chain(expand(49, 34)) != "2,2,5,4")
      return "expand text output must be 2,2,5,4";
    return {};
  });

  runner.run("CLI text: delta-half 2,2,5,4", []() -> std::string {
    if (render_chain(delta_half(parse_hj_chain("2,2,5,4"))) != "2,2,4")
      return "delta-half text output must be 2,2,4";
    return {};
  });

  runner.run("ASCII dot rendering of 49/34", []() -> std::string {
    HJChain chain = parse_hj_chain("2,2,5,4");
    std::string got =
        render_ascii(build_diagram(chain), delta_position(chain));
    const std::string want = "o.....\no.....\noo@o..\n...ooo\n";
    if (got != want) return "ASCII rendering differs from the worked example";
    return {};
  });

  return runner.results;
}

}  // namespace chaincalc
