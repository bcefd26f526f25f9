#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chaincalc/flips.hpp"
#include "chaincalc/format.hpp"

using namespace chaincalc;

namespace {

std::size_t largest_ge3(const std::vector<std::int64_t>& b) {
  for (std::size_t i = b.size(); i > 0; --i)
    if (b[i - 1] >= 3) return i;
  return 0;
}

}  // namespace

TEST_CASE("contraction invariant examples") {
  // frozen by hand from the continuant recursion
  CHECK(contraction_invariant(parse_mk1a("2,2,5,*4")) == Fraction{36, 25});
  CHECK(contraction_invariant(parse_mk1a("2,2,*5,4")) == Fraction{37, 26});
  CHECK(contraction_invariant(parse_mk1a("*4")) == Fraction{3, 1});
}

TEST_CASE("flip_last worked examples") {
  FlipResult a = flip_last(parse_mk1a("2,2,5,*4"));
  REQUIRE(a.wahl.has_value());
  CHECK(render_chain(a.wahl->chain) == "2,5,3");
  CHECK(a.wahl->p == 5);
  CHECK(a.wahl->q == 3);
  CHECK(a.c_plus_weight == -2);

  FlipResult b = flip_last(parse_mk1a("2,5,*3"));
  REQUIRE(b.wahl.has_value());
  CHECK(render_chain(b.wahl->chain) == "5,2");
  CHECK(b.wahl->p == 3);
  CHECK(b.wahl->q == 1);

  FlipResult c = flip_last(parse_mk1a("5,*2"));
  CHECK_FALSE(c.wahl.has_value());
  CHECK(c.c_plus_weight == -4);
}

TEST_CASE("mk1A data must carry a class-W chain") {
  CHECK_THROWS_AS(contraction_invariant(parse_mk1a("2,*3")), CalcError);
  CHECK_THROWS_AS(flip_last(parse_mk1a("3,*3")), CalcError);
  try {
    contraction_invariant(parse_mk1a("2,*3"));
    FAIL("expected NotClassW");
  } catch (const CalcError& e) {
    CHECK(e.code() == Errc::NotClassW);
  }
}

TEST_CASE("flip_last requires the underline at the end") {
  CHECK_THROWS_AS(flip_last(parse_mk1a("2,2,*5,4")), CalcError);
  try {
    flip_last(parse_mk1a("2,2,*5,4"));
    FAIL("expected UnderlineNotLast");
  } catch (const CalcError& e) {
    CHECK(e.code() == Errc::UnderlineNotLast);
  }
}

TEST_CASE("flip_last_by_diagram worked examples") {
  FlipResult a = flip_last_by_diagram(parse_mk1a("2,2,5,*4"));
  REQUIRE(a.wahl.has_value());
  CHECK(render_chain(a.wahl->chain) == "2,5,3");

  FlipResult b = flip_last_by_diagram(parse_mk1a("2,5,*3"));
  REQUIRE(b.wahl.has_value());
  CHECK(render_chain(b.wahl->chain) == "5,2");

  FlipResult c = flip_last_by_diagram(parse_mk1a("*4"));
  CHECK_FALSE(c.wahl.has_value());
  CHECK(c.c_plus_weight == -3);
}

TEST_CASE("full_configuration worked examples") {
  ConfigurationChain a = full_configuration(7, 5);
  CHECK(render_configuration(a) == "2,2,5,4;1;2,2");
  REQUIRE(a.roles.size() == 7);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(a.roles[k].role == Role::B);
    CHECK(a.roles[k].index == static_cast<std::int64_t>(k) + 1);
  }
  CHECK(a.roles[4].role == Role::C);
  CHECK(a.roles[5] == RoleTag{Role::A, 6});
  CHECK(a.roles[6] == RoleTag{Role::A, 5});

  CHECK(render_configuration(full_configuration(2, 1)) == "4;1;");
  CHECK(render_configuration(full_configuration(3, 2)) == "2,5;1;2");
}

TEST_CASE("flip_oracle_step follows the figure rows") {
  ConfigurationChain c = full_configuration(7, 5);

  FlipStep s1 = flip_oracle_step(c);
  CHECK(render_entries(s1.after.weights) == "2,2,5,3,1,2");
  CHECK(s1.blow_downs == std::vector<std::size_t>{4});
  REQUIRE(s1.new_wahl.has_value());
  CHECK(s1.new_wahl->p == 5);
  CHECK(render_configuration(s1.after) == "2;2,5,3;1;2");

  FlipStep s2 = flip_oracle_step(s1.after);
  CHECK(render_entries(s2.after.weights) == "2,2,5,2,1");
  CHECK(s2.blow_downs == std::vector<std::size_t>{4});
  REQUIRE(s2.new_wahl.has_value());
  CHECK(s2.new_wahl->p == 3);

  FlipStep s3 = flip_oracle_step(s2.after);
  CHECK(render_entries(s3.after.weights) == "2,2,4");
  CHECK(s3.blow_downs == std::vector<std::size_t>{4, 3});
  CHECK_FALSE(s3.new_wahl.has_value());
  CHECK(s3.c_plus_weight == -4);
  CHECK(render_configuration(s3.after) == "2,2,4;;;");
}

TEST_CASE("flip_oracle_step structural errors") {
  ConfigurationChain no_c = flip_oracle_step(
      flip_oracle_step(flip_oracle_step(full_configuration(7, 5)).after).after)
                               .after;
  CHECK_THROWS_AS(flip_oracle_step(no_c), CalcError);
  try {
    flip_oracle_step(no_c);
    FAIL("expected NoMinusOne");
  } catch (const CalcError& e) {
    CHECK(e.code() == Errc::NoMinusOne);
  }
  // a stray (-1)-curve outside C is malformed
  try {
    flip_oracle_step(parse_configuration("1,2;1;"));
    FAIL("expected MultipleMinusOnes");
  } catch (const CalcError& e) {
    CHECK(e.code() == Errc::MultipleMinusOnes);
  }
}

TEST_CASE("flip_sequence worked examples") {
  FlipTrace a = flip_sequence(7, 5);
  REQUIRE(a.steps.size() == 3);
  CHECK(a.steps[0].new_wahl->p == 5);
  CHECK(a.steps[0].new_wahl->q == 3);
  CHECK(a.steps[1].new_wahl->p == 3);
  CHECK(a.steps[1].new_wahl->q == 1);
  CHECK_FALSE(a.steps[2].new_wahl.has_value());
  CHECK(render_chain(a.final_chain) == "2,2,4");

  FlipTrace b = flip_sequence(2, 1);
  REQUIRE(b.steps.size() == 1);
  CHECK(render_chain(b.final_chain) == "3");

  FlipTrace c = flip_sequence(3, 2);
  REQUIRE(c.steps.size() == 2);
  REQUIRE(c.steps[0].new_wahl.has_value());
  CHECK(c.steps[0].new_wahl->p == 2);
  CHECK(c.steps[0].new_wahl->q == 1);
  CHECK(render_entries(c.steps[0].after.weights) == "2,4,1");
  CHECK(render_chain(c.final_chain) == "2,3");
}

TEST_CASE("triple agreement and sequence invariants up to p = 25") {
  for (const WahlParams& w : generate_class_w(25)) {
    // formula vs diagram on the standalone flip
    MK1AData data{w.chain, w.chain.size()};
    FlipResult formula = flip_last(data);
    FlipResult diagram = flip_last_by_diagram(data);
    REQUIRE(formula.wahl.has_value() == diagram.wahl.has_value());
    if (formula.wahl) {
      REQUIRE(formula.wahl->chain == diagram.wahl->chain);
      REQUIRE(formula.wahl->p == diagram.wahl->p);
      REQUIRE(formula.wahl->q == diagram.wahl->q);
    }
    REQUIRE(formula.c_plus_weight == diagram.c_plus_weight);

    // the oracle's first step agrees too (flip_sequence cross-checks all)
    FlipTrace trace = flip_sequence(w.p, w.q);
    REQUIRE(trace.steps.front().new_wahl.has_value() ==
            formula.wahl.has_value());

    // value conservation across every recorded intermediate chain
    Fraction value = evaluate(GeneralChain(trace.steps.front().before.weights));
    for (const FlipStep& step : trace.steps)
      for (const auto& mid : step.intermediates)
        REQUIRE(evaluate(GeneralChain(mid)) == value);

    // final chain, step count, per-step blow-down counts
    REQUIRE(trace.final_chain == delta_half(w.chain));
    std::int64_t e = static_cast<std::int64_t>(dual_chain(w.chain).size());
    REQUIRE(static_cast<std::int64_t>(trace.steps.size()) ==
            e - trace.delta.col);
    for (const FlipStep& step : trace.steps) {
      std::vector<std::int64_t> b = step.before.b_weights();
      std::size_t i = largest_ge3(b);
      REQUIRE(step.blow_downs.size() == b.size() - i + 1);
      if (step.new_wahl) REQUIRE(is_class_w(step.new_wahl->chain));
    }
  }
}

TEST_CASE("bn1_reduction worked examples") {
  Bn1Reduction three = bn1_reduction(3);
  CHECK(render_chain(three.trace.initial) == "5,1");
  CHECK(render_chain(three.trace.final_chain) == "4");
  CHECK(three.report.kind == NeighborhoodKind::Flipping);

  Bn1Reduction four = bn1_reduction(4);
  CHECK(render_chain(four.trace.initial) == "6,1,2");
  CHECK(render_chain(four.trace.final_chain) == "4");
  CHECK(four.report.kind == NeighborhoodKind::Divisorial);

  Bn1Reduction fifty = bn1_reduction(50);
  CHECK(render_chain(fifty.trace.final_chain) == "4");

  CHECK_THROWS_AS(bn1_reduction(2), CalcError);
}

TEST_CASE("fault injection breaks the closed-form flip") {
  detail::flip_formula_bias = 1;
  CHECK_THROWS_AS(flip_last(parse_mk1a("2,2,5,*4")), CalcError);
  detail::flip_formula_bias = 0;
  CHECK(render_chain(flip_last(parse_mk1a("2,2,5,*4")).wahl->chain) == "2,5,3");
}
