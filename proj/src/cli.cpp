#include "nmr/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "nmr/defaults.hpp"
#include "nmr/errors.hpp"
#include "nmr/oracle.hpp"
#include "nmr/semantics.hpp"

namespace nmr::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Maps library exceptions to exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageOrParse;
  } catch (const ResourceCapError& e) {
    err << "resource cap: " << e.what() << '\n';
    return kResourceCap;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrParse;
  }
}

Limits limits_for(std::size_t max_atoms) {
  Limits limits;
  limits.max_atoms = max_atoms;
  return limits;
}

Json world_json(const Vocabulary& v, World w) { return true_atoms(v, w); }

Json set_json(const Vocabulary& v, const WorldSet& s) {
  Json out = Json::array();
  s.for_each([&](World w) { out.push_back(world_json(v, w)); });
  return out;
}

Json state_json(const Vocabulary& v, const PartialBeliefState& p) {
  return Json{{"pp", set_json(v, p.pp())}, {"cp", set_json(v, p.cp())}};
}

// Entailed literals of a total state, atoms in vocabulary order; "false" for
// the empty state.
std::vector<std::string> consequences(const Vocabulary& v, const BeliefState& b) {
  if (b.is_empty()) return {"false"};
  std::vector<std::string> out;
  for (std::size_t a = 0; a < v.size(); ++a) {
    bool all_true = true;
    bool all_false = true;
    b.for_each([&](World w) { (w.holds(a) ? all_false : all_true) = false; });
    if (all_true) out.push_back(v.name(a));
    if (all_false) out.push_back("~" + v.name(a));
  }
  return out;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

struct Solved {
  Vocabulary vocabulary;
  SemanticsResult result;
};

Solved solve_request(const SolveRequest& req, Logic logic) {
  const std::string& s = req.semantics;
  const Limits limits = limits_for(req.max_atoms);
  const std::string text = read_file(req.input);
  if (logic == Logic::ael) {
    if (s == "reiter" || s == "weak") throw UsageError("semantics '" + s + "' requires --logic dl");
    SemanticsKind kind;
    if (s == "kk") kind = SemanticsKind::kripke_kleene;
    else if (s == "expansion") kind = SemanticsKind::expansion;
    else if (s == "stable") kind = SemanticsKind::stable;
    else if (s == "wf") kind = SemanticsKind::well_founded;
    else throw UsageError("unknown semantics '" + s + "'");
    Theory theory = parse_theory(text);
    Vocabulary v = theory.vocabulary;
    const OperatorContext ctx(std::move(theory), req.truth, limits);
    return {std::move(v), solve(ctx, kind)};
  }
  DefaultTheory dt = parse_default_theory(text);
  if (s == "reiter") {
    SemanticsResult r{SemanticsKind::stable, req.truth, {}, {}};
    for (const auto& b : reiter_extensions(dt, limits)) r.results.push_back(PartialBeliefState::total(b));
    return {dt.vocabulary, std::move(r)};
  }
  DlSemantics kind;
  if (s == "kk") kind = DlSemantics::kk;
  else if (s == "expansion" || s == "weak") kind = DlSemantics::weak;
  else if (s == "stable") kind = DlSemantics::reiter;
  else if (s == "wf") kind = DlSemantics::wf;
  else throw UsageError("unknown semantics '" + s + "'");
  return {dt.vocabulary, dl_semantics(dt, kind, req.truth, limits)};
}

Json trace_json(const Vocabulary& v, const DerivationTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    steps.push_back(Json{{"kind", std::string(to_string(s.kind))},
                         {"made_possible", set_json(v, s.made_possible)},
                         {"made_impossible", set_json(v, s.made_impossible)},
                         {"state", state_json(v, s.state)}});
  }
  return Json{{"initial", state_json(v, t.initial)}, {"steps", std::move(steps)}};
}

void print_json(std::ostream& out, const SolveRequest& req, Logic logic, const Solved& solved) {
  const auto& v = solved.vocabulary;
  Json results = Json::array();
  Json cons = Json::array();
  for (const auto& r : solved.result.results) {
    Json item = state_json(v, r);
    item = Json{{"kind", r.is_total() ? "total" : "partial"}, {"pp", item["pp"]}, {"cp", item["cp"]}};
    results.push_back(std::move(item));
    cons.push_back(r.is_total() ? Json(consequences(v, r.pp())) : Json(nullptr));
  }
  Json doc{{"vocabulary", v.names()},
           {"logic", logic == Logic::ael ? "ael" : "dl"},
           {"semantics", req.semantics},
           {"truth", std::string(to_string(req.truth))},
           {"results", std::move(results)},
           {"objective_consequences", std::move(cons)}};
  if (req.trace) {
    Json traces = Json::array();
    for (const auto& t : solved.result.traces) traces.push_back(trace_json(v, t));
    doc["traces"] = std::move(traces);
  }
  out << doc.dump(2) << '\n';
}

void print_human(std::ostream& out, const SolveRequest& req, const Solved& solved) {
  const auto& v = solved.vocabulary;
  const auto& results = solved.result.results;
  if (results.empty()) out << req.semantics << ": none\n";
  for (const auto& r : results) {
    if (r.is_total()) {
      out << req.semantics << ": TOTAL " << format_belief_state(v, r.pp()) << '\n';
      const auto c = consequences(v, r.pp());
      out << "  entails: " << (c.empty() ? std::string("no literals") : join(c, ", ")) << '\n';
    } else {
      out << req.semantics << ": PARTIAL " << format_partial(v, r) << '\n';
    }
  }
  if (!req.trace) return;
  for (std::size_t i = 0; i < solved.result.traces.size(); ++i) {
    const auto& t = solved.result.traces[i];
    out << "trace " << i + 1 << ":\n  start " << format_partial(v, t.initial) << '\n';
    for (std::size_t k = 0; k < t.steps.size(); ++k) {
      const auto& s = t.steps[k];
      out << "  " << k + 1 << ". " << to_string(s.kind) << ": possible " << format_belief_state(v, s.made_possible)
          << ", impossible " << format_belief_state(v, s.made_impossible) << " -> " << format_partial(v, s.state)
          << '\n';
    }
  }
}

// Greedily drops items while the failure persists.
template <class T>
std::vector<T> minimize(std::vector<T> items, const std::function<bool(const std::vector<T>&)>& fails) {
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (std::size_t i = 0; i < items.size(); ++i) {
      std::vector<T> smaller = items;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
      if (fails(smaller)) {
        items = std::move(smaller);
        shrunk = true;
        break;
      }
    }
  }
  return items;
}

std::string count_line(const char* label, std::size_t fast, std::size_t brute) {
  return std::string(label) + ": fast " + std::to_string(fast) + (fast == brute ? " = " : " != ") + "brute " +
         std::to_string(brute);
}

struct AelCheck {
  std::vector<std::string> lines;
  bool agree = true;
};

AelCheck check_theory(const Theory& theory, const CheckRequest& req) {
  OperatorContext ctx(theory, req.truth, limits_for(req.max_atoms));
  ctx.inject_fault(req.inject_fault);
  const OperatorContext oracle_ctx(theory, req.truth, limits_for(req.max_atoms));
  const oracle::OracleBudget budget{req.oracle_atoms};
  AelCheck report;

  auto totals = [](const SemanticsResult& r) {
    std::vector<BeliefState> out;
    for (const auto& s : r.results) out.push_back(s.pp());
    return out;
  };
  const auto fast_exp = totals(expansions(ctx));
  const auto brute_exp = oracle::brute_expansions(oracle_ctx, budget);
  report.lines.push_back(count_line("expansions", fast_exp.size(), brute_exp.size()));
  if (fast_exp != brute_exp) report.agree = false;

  const auto fast_stable = totals(stable_extensions(ctx));
  const auto brute_stable = oracle::brute_stable(oracle_ctx, budget);
  report.lines.push_back(count_line("stable", fast_stable.size(), brute_stable.size()));
  if (fast_stable != brute_stable) report.agree = false;

  std::string wf_line;
  try {
    const auto process = well_founded_extension(ctx).results.front();
    const auto algebraic = oracle::algebraic_wf(oracle_ctx, budget);
    wf_line = process == algebraic ? "wf: process = algebraic" : "wf: process != algebraic";
    if (process != algebraic) report.agree = false;
  } catch (const InternalError& e) {
    wf_line = std::string("wf: ") + e.what();
    report.agree = false;
  }
  report.lines.push_back(wf_line);
  return report;
}

int check_ael(const Theory& theory, const CheckRequest& req, std::ostream& out) {
  const AelCheck report = check_theory(theory, req);
  for (const auto& l : report.lines) out << l << '\n';
  if (report.agree) return kOk;
  const auto fails = [&](const std::vector<Formula>& fs) {
    return !check_theory(make_theory(fs, theory.vocabulary), req).agree;
  };
  const auto minimal = minimize(theory.formulas, std::function<bool(const std::vector<Formula>&)>(fails));
  out << "counterexample:\n" << to_string(make_theory(minimal, theory.vocabulary));
  return kDisagreement;
}

bool dl_aligned(const DefaultTheory& dt, const Limits& limits) { return align_check(dt, limits).aligned; }

int check_dl(const DefaultTheory& dt, const CheckRequest& req, std::ostream& out) {
  const Limits limits = limits_for(req.max_atoms);
  const AlignmentReport report = align_check(dt, limits);
  out << "aligned: " << report.reiter.size() << (report.aligned ? " = " : " != ") << report.stable.size()
      << " extensions\n";
  if (!report.aligned) {
    // Drop facts first, then defaults.
    std::vector<Formula> facts = dt.facts;
    std::vector<Default> defaults = dt.defaults;
    facts = minimize(facts, std::function<bool(const std::vector<Formula>&)>([&](const std::vector<Formula>& fs) {
                       return !dl_aligned(make_default_theory(fs, defaults, dt.vocabulary), limits);
                     }));
    defaults = minimize(
        defaults, std::function<bool(const std::vector<Default>&)>([&](const std::vector<Default>& ds) {
          return !dl_aligned(make_default_theory(facts, ds, dt.vocabulary), limits);
        }));
    out << "counterexample:\n" << to_string(make_default_theory(facts, defaults, dt.vocabulary));
    return kDisagreement;
  }
  return check_ael(konolige(dt), req, out);
}

}  // namespace

Logic infer_logic(const std::string& path) {
  return path.size() >= 3 && path.compare(path.size() - 3, 3, ".dt") == 0 ? Logic::dl : Logic::ael;
}

int run_solve(const SolveRequest& req, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Logic logic = req.logic.value_or(infer_logic(req.input));
    const Solved solved = solve_request(req, logic);
    for (const auto& t : solved.result.traces) {
      if (t.steps.empty() ? t.initial != t.replay() : t.replay() != t.steps.back().state)
        throw InternalError("trace does not replay");
    }
    if (req.json) print_json(out, req, logic, solved);
    else print_human(out, req, solved);
    return kOk;
  });
}

int run_translate(const std::string& input, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << to_string(konolige(parse_default_theory(read_file(input))));
    return kOk;
  });
}

int run_check(const CheckRequest& req, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Logic logic = req.logic.value_or(infer_logic(req.input));
    const std::string text = read_file(req.input);
    if (logic == Logic::dl) return check_dl(parse_default_theory(text), req, out);
    return check_ael(parse_theory(text), req, out);
  });
}

}  // namespace nmr::cli
