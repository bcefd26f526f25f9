#include "chaincalc/cli.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chaincalc/chain.hpp"
#include "chaincalc/dot_diagram.hpp"
#include "chaincalc/flips.hpp"
#include "chaincalc/format.hpp"
#include "chaincalc/verify.hpp"
#include "chaincalc/wahl.hpp"

namespace chaincalc {

namespace {

using json = nlohmann::ordered_json;

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

json wahl_json(const std::optional<WahlParams>& w) {
  if (!w) return json("smooth");
  return json{{"p", w->p}, {"q", w->q}};
}

json trace_json(const FlipTrace& t) {
  json steps = json::array();
  for (const FlipStep& s : t.steps) {
    steps.push_back(json{{"before", render_configuration(s.before)},
                         {"blow_downs", s.blow_downs},
                         {"after", render_configuration(s.after)},
                         {"wahl", wahl_json(s.new_wahl)},
                         {"c_plus_weight", s.c_plus_weight}});
  }
  return json{{"p", t.source.p},
              {"q", t.source.q},
              {"chain", render_chain(t.source.chain)},
              {"dual", render_chain(t.dual)},
              {"delta", json{{"row", t.delta.row}, {"col", t.delta.col}}},
              {"delta_half", render_chain(t.delta_half_chain)},
              {"steps", steps}};
}

int exit_code_for(const CalcError& e) {
  switch (e.code()) {
    case Errc::Overflow: return 3;
    case Errc::DisagreementWithFormula: return 1;
    default: return 2;
  }
}

struct Cli {
  CLI::App app{"Linear chain calculus for rational blow-downs: "
               "Hirzebruch-Jung fractions, Riemenschneider diagrams, "
               "Wahl chains and mk1A flips"};
  std::function<int(std::ostream&, std::ostream&)> action;

  // Per-subcommand argument slots.
  std::int64_t n = 0, a = 0, p = 0, q = 0, max_p = 0;
  std::string chain_text, mk1a_text;
  bool json_mode = false;

  CLI::App* add(const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_flag("--json", json_mode, "emit JSON instead of text");
    return sub;
  }
};

void build_commands(Cli& cli) {
  cli.app.require_subcommand(1);

  auto* expand_cmd =
      cli.add("expand", "Hirzebruch-Jung expansion of n/a");
  expand_cmd->add_option("n", cli.n)->required();
  expand_cmd->add_option("a", cli.a)->required();
  expand_cmd->callback([&cli] {
    cli.action = [&cli](std::ostream& out, std::ostream&) {
      HJChain chain = expand(cli.n, cli.a);
      if (cli.json_mode)
        emit(out, json{{"n", cli.n}, {"a", cli.a},
                       {"chain", render_chain(chain)}});
      else
        out << render_chain(chain) << "\n";
      return 0;
    };
  });

  auto* evaluate_cmd =
      cli.add("evaluate", "value of a chain as a reduced fraction");
  evaluate_cmd->add_option("chain", cli.chain_text)->required();
  evaluate_cmd->callback([&cli] {
    cli.action = [&cli](std::ostream& out, std::ostream&) {
      Fraction f = evaluate(parse_general_chain(cli.chain_text));
      if (cli.json_mode)
        emit(out, json{{"chain", cli.chain_text}, {"num", f.num},
                       {"den", f.den}});
      else
        out << to_string(f) << "\n";
      return 0;
    };
  });

  auto* dual_cmd = cli.add("dual", "dual chain (value n/(n-a))");
  dual_cmd->add_option("chain", cli.chain_text)->required();
  dual_cmd->callback([&cli] {
    cli.action = [&cli](std::ostream& out, std::ostream&) {
      HJChain dual = dual_chain(parse_hj_chain(cli.chain_text));
      if (cli.json_mode)
        emit(out, json{{"chain", cli.chain_text},
                       {"dual", render_chain(dual)}});
      else
        out << render_chain(dual) << "\n";
      return 0;
    };
  });

  auto* dot_cmd = cli.add("dot-render", "ASCII Riemenschneider dot diagram");
  dot_cmd->add_option("chain", cli.chain_text)->required();
  dot_cmd->callback([&cli] {
    cli.action = [&cli](std::ostream& out, std::ostream&) {
      HJChain chain = parse_hj_chain(cli.chain_text);
      DotDiagram d = build_diagram(chain);
      std::optional<DeltaPosition> mark;
      if (is_class_w(chain)) mark = delta_position(chain);
      if (cli.json_mode) {
        json rows = json::array();
        for (const DotRow& r : d.rows)
          rows.push_back(json{{"start_col", r.start_col}, {"len", r.len}});
        json j{{"chain", cli.chain_text},
               {"rows", rows},
               {"n_cols", d.n_cols},
               {"n_dots", d.n_dots}};
        if (mark) j["delta"] = json{{"row", mark->row}, {"col", mark->col}};
        emit(out, j);
      } else {
        out << render_ascii(d, mark);
      }
      return 0;
    };
  });

  auto* check_cmd = cli.add("wahl-check", "test a chain for class W");
  check_cmd->add_option("chain", cli.chain_text)->required();
  check_cmd->callback([&cli] {
    cli.action = [&cli](std::ostream& out, std::ostream&) {
      ClassWResult r = classify_class_w(parse_hj_chain(cli.chain_text));
      if (auto* w = std::get_if<WahlParams>(&r)) {
        if (cli.json_mode)
          emit(out, json{{"chain", cli.chain_text}, {"class_w", true},
                         {"p", w->p}, {"q", w->q}});
        else
          out << "class-W p=" << w->p << " q=" << w->q << "\n";
      } else {
        const std::string& reason = std::get<NotClassW>(r).reason;
        if (cli.json_mode)
          emit(out, json{{"chain", cli.chain_text}, {"class_w", false},
                         {"reason", reason}});
        else
          out << "not class-W: " << reason << "\n";
      }
      return 0;
    };
  });

  auto* frompq_cmd = cli.add("wahl-from-pq", "class-W chain of p^2/(pq-1)");
  frompq_cmd->add_option("p", cli.p)->required();
  frompq_cmd->add_option("q", cli.q)->required();
  frompq_cmd->callback([&cli] {
    cli.action = [&cli](std::ostream& out, std::ostream&) {
      HJChain chain = wahl_chain(cli.p, cli.q);
      if (cli.json_mode)
        emit(out, json{{"p", cli.p}, {"q", cli.q},
                       {"chain", render_chain(chain)}});
      else
        out << render_chain(chain) << "\n";
      return 0;
    };
  });

  auto* gen_cmd = cli.add("wahl-gen", "all class-W chains with p <= max-p");
  gen_cmd->add_option("--max-p", cli.max_p)->required();
  gen_cmd->callback([&cli] {
    cli.action = [&cli](std::ostream& out, std::ostream&) {
      std::vector<WahlParams> set = generate_class_w(cli.max_p);
      if (cli.json_mode) {
        json chains = json::array();
        for (const WahlParams& w : set) chains.push_back(render_chain(w.chain));
        emit(out, json{{"max_p", cli.max_p}, {"chains", chains}});
      } else {
        for (const WahlParams& w : set) out << render_chain(w.chain) << "\n";
      }
      return 0;
    };
  });

  auto* half_cmd = cli.add("delta-half", "delta-half chain of a class-W chain");
  half_cmd->add_option("chain", cli.chain_text)->required();
  half_cmd->callback([&cli] {
    cli.action = [&cli](std::ostream& out, std::ostream&) {
      HJChain chain = parse_hj_chain(cli.chain_text);
      HJChain half = delta_half(chain);
      if (cli.json_mode) {
        DeltaPosition d = delta_position(chain);
        emit(out, json{{"chain", cli.chain_text},
                       {"delta", json{{"row", d.row}, {"col", d.col}}},
                       {"delta_half", render_chain(half)}});
      } else {
        out << render_chain(half) << "\n";
      }
      return 0;
    };
  });

  auto* contract_cmd =
      cli.add("contract", "contraction invariant of mk1A data (entry marked *)");
  contract_cmd->add_option("data", cli.mk1a_text)->required();
  contract_cmd->callback([&cli] {
    cli.action = [&cli](std::ostream& out, std::ostream&) {
      Fraction f = contraction_invariant(parse_mk1a(cli.mk1a_text));
      if (cli.json_mode)
        emit(out, json{{"data", cli.mk1a_text}, {"num", f.num},
                       {"den", f.den}});
      else
        out << to_string(f) << "\n";
      return 0;
    };
  });

  auto* once_cmd =
      cli.add("flip-once", "one flip of mk1A data with the * on the last entry");
  once_cmd->add_option("data", cli.mk1a_text)->required();
  once_cmd->callback([&cli] {
    cli.action = [&cli](std::ostream& out, std::ostream&) {
      FlipResult r = flip_last(parse_mk1a(cli.mk1a_text));
      if (cli.json_mode) {
        json j{{"data", cli.mk1a_text}, {"wahl", wahl_json(r.wahl)}};
        if (r.wahl) j["chain"] = render_chain(r.wahl->chain);
        j["c_plus_weight"] = r.c_plus_weight;
        emit(out, j);
      } else if (r.wahl) {
        out << "wahl " << render_chain(r.wahl->chain) << " p=" << r.wahl->p
            << " q=" << r.wahl->q << " c-plus " << r.c_plus_weight << "\n";
      } else {
        out << "smooth c-plus " << r.c_plus_weight << "\n";
      }
      return 0;
    };
  });

  auto* seq_cmd = cli.add("flip-seq", "full flip sequence down to the delta-half chain");
  seq_cmd->add_option("p", cli.p)->required();
  seq_cmd->add_option("q", cli.q)->required();
  seq_cmd->callback([&cli] {
    cli.action = [&cli](std::ostream& out, std::ostream&) {
      FlipTrace t = flip_sequence(cli.p, cli.q);
      if (cli.json_mode) {
        emit(out, trace_json(t));
        return 0;
      }
      out << "chain " << render_chain(t.source.chain) << "\n";
      out << "dual " << render_chain(t.dual) << "\n";
      out << "delta " << t.delta.row << "," << t.delta.col << "\n";
      for (std::size_t k = 0; k < t.steps.size(); ++k) {
        const FlipStep& s = t.steps[k];
        out << "step " << k + 1 << ": " << render_configuration(s.before)
            << " -> " << render_configuration(s.after);
        if (s.new_wahl)
          out << " wahl " << s.new_wahl->p << "," << s.new_wahl->q;
        else
          out << " smooth";
        out << " c-plus " << s.c_plus_weight << "\n";
      }
      out << "final " << render_chain(t.final_chain) << "\n";
      return 0;
    };
  });

  auto* bn1_cmd = cli.add("bn1", "B_{n,1} parity certificate and [n+2,1,2,..] = [4]");
  bn1_cmd->add_option("n", cli.n)->required();
  bn1_cmd->callback([&cli] {
    cli.action = [&cli](std::ostream& out, std::ostream&) {
      Bn1Reduction r = bn1_reduction(cli.n);
      const char* kind =
          r.report.kind == NeighborhoodKind::Flipping ? "flipping" : "divisorial";
      if (cli.json_mode) {
        emit(out, json{{"n", cli.n},
                       {"kind", kind},
                       {"statement", r.report.statement},
                       {"chain", render_chain(r.trace.initial)},
                       {"reduced", render_chain(r.trace.final_chain)}});
      } else {
        out << "n=" << cli.n << " " << r.report.statement << "\n";
        out << "reduction " << render_chain(r.trace.initial) << " -> "
            << render_chain(r.trace.final_chain) << "\n";
      }
      return 0;
    };
  });

  auto* verify_cmd =
      cli.add("verify-paper", "run every worked-example check");
  verify_cmd->callback([&cli] {
    cli.action = [&cli](std::ostream& out, std::ostream& err) {
      std::vector<CheckResult> results = verify_paper();
      std::size_t failed = 0;
      const CheckResult* first_fail = nullptr;
      if (cli.json_mode) {
        json report = json::array();
        for (const CheckResult& r : results) {
          report.push_back(json{{"name", r.name}, {"pass", r.pass},
                                {"detail", r.detail}});
          if (!r.pass && first_fail == nullptr) first_fail = &r;
          failed += r.pass ? 0 : 1;
        }
        emit(out, report);
      } else {
        for (const CheckResult& r : results) {
          if (r.pass) {
            out << "ok " << r.name << "\n";
          } else {
            out << "FAIL " << r.name << ": " << r.detail << "\n";
            if (first_fail == nullptr) first_fail = &r;
            ++failed;
          }
        }
        out << (failed == 0 ? "all " : "FAILED ")
            << (failed == 0 ? std::to_string(results.size()) + " checks passed"
                            : std::to_string(failed) + " of " +
                                  std::to_string(results.size()) + " checks")
            << "\n";
      }
      if (failed != 0) {
        err << "first failing check: " << first_fail->name << "\n";
        return 1;
      }
      return 0;
    };
  });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Cli cli;
  build_commands(cli);

  std::vector<const char*> argv;
  argv.push_back("chaincalc");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    cli.app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << cli.app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    return cli.action ? cli.action(out, err) : 2;
  } catch (const CalcError& e) {
    err << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
}

}  // namespace chaincalc
