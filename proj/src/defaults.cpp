#include "nmr/defaults.hpp"

#include <algorithm>

#include "nmr/errors.hpp"
#include "parser.hpp"

namespace nmr {

namespace {

void require_objective(const Formula& f, const char* role) {
  if (!f.objective()) throw PreconditionError(std::string(role) + " '" + to_string(f) + "' mentions K");
}

std::vector<Formula> all_formulas(const std::vector<Formula>& facts, const std::vector<Default>& defaults) {
  std::vector<Formula> out = facts;
  for (const auto& d : defaults) {
    out.push_back(d.prerequisite);
    out.insert(out.end(), d.justifications.begin(), d.justifications.end());
    out.push_back(d.consequent);
  }
  return out;
}

}  // namespace

DefaultTheory make_default_theory(std::vector<Formula> facts, std::vector<Default> defaults,
                                  std::optional<Vocabulary> vocabulary) {
  for (const auto& f : facts) require_objective(f, "fact");
  for (const auto& d : defaults) {
    require_objective(d.prerequisite, "prerequisite");
    for (const auto& j : d.justifications) require_objective(j, "justification");
    require_objective(d.consequent, "consequent");
  }
  auto atoms = atoms_in_order(all_formulas(facts, defaults));
  if (!vocabulary) {
    vocabulary = Vocabulary(std::move(atoms));
  } else {
    for (const auto& a : atoms) {
      if (!vocabulary->find(a)) throw VocabularyMismatch("atom '" + a + "' is not in the vocabulary");
    }
  }
  return DefaultTheory{std::move(*vocabulary), std::move(facts), std::move(defaults)};
}

DefaultTheory parse_default_theory(std::string_view text) {
  using detail::Tok;
  const auto lines = detail::content_lines(text);
  std::optional<Vocabulary> header;
  std::vector<Formula> facts;
  std::vector<Default> defaults;
  std::vector<Formula> in_line_order;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i == 0) {
      if (auto names = detail::parse_vocab_header(lines[i])) {
        header = Vocabulary(std::move(*names));
        continue;
      }
    }
    const auto tokens = detail::tokenize(lines[i].text, lines[i].number);
    detail::FormulaParser parser(tokens);
    parser.forbid_modal = true;
    const std::size_t first_new = in_line_order.size();
    if (lines[i].text.find('/') == std::string_view::npos) {
      facts.push_back(parser.parse_formula());
      in_line_order.push_back(facts.back());
    } else {
      Default d;
      if (!parser.at(Tok::colon)) d.prerequisite = parser.parse_formula();
      parser.expect(Tok::colon);
      if (!parser.at(Tok::slash)) {
        d.justifications.push_back(parser.parse_formula());
        while (parser.at(Tok::comma)) {
          parser.advance();
          d.justifications.push_back(parser.parse_formula());
        }
      }
      parser.expect(Tok::slash);
      d.consequent = parser.parse_formula();
      in_line_order.push_back(d.prerequisite);
      in_line_order.insert(in_line_order.end(), d.justifications.begin(), d.justifications.end());
      in_line_order.push_back(d.consequent);
      defaults.push_back(std::move(d));
    }
    if (!parser.at(Tok::end))
      parser.fail(parser.peek(), "unexpected " + std::string(detail::describe(parser.peek().kind)));
    if (header) {
      const std::vector<Formula> added(in_line_order.begin() + static_cast<std::ptrdiff_t>(first_new),
                                       in_line_order.end());
      for (const auto& a : atoms_in_order(added)) {
        if (!header->find(a)) throw ParseError(lines[i].number, 1, "atom '" + a + "' is not declared in the vocab header");
      }
    }
  }
  Vocabulary vocab = header ? std::move(*header) : Vocabulary(atoms_in_order(in_line_order));
  return make_default_theory(std::move(facts), std::move(defaults), std::move(vocab));
}

std::string to_string(const Default& d) {
  std::string out;
  if (d.prerequisite.kind() != Connective::top) out += to_string(d.prerequisite) + " ";
  out += ":";
  for (std::size_t i = 0; i < d.justifications.size(); ++i) out += (i ? ", " : " ") + to_string(d.justifications[i]);
  out += " / " + to_string(d.consequent);
  return out;
}

std::string to_string(const DefaultTheory& dt) {
  std::string out;
  if (dt.vocabulary.names() != atoms_in_order(all_formulas(dt.facts, dt.defaults))) {
    out += "vocab:";
    for (const auto& n : dt.vocabulary.names()) out += " " + n;
    out += '\n';
  }
  for (const auto& f : dt.facts) out += to_string(f) + '\n';
  for (const auto& d : dt.defaults) out += to_string(d) + '\n';
  return out;
}

Formula konolige(const Default& d) {
  std::optional<Formula> antecedent;
  auto conjoin = [&](Formula f) {
    antecedent = antecedent ? Formula::conjunction(std::move(*antecedent), std::move(f)) : std::move(f);
  };
  if (d.prerequisite.kind() != Connective::top) conjoin(Formula::knows(d.prerequisite));
  for (const auto& j : d.justifications) conjoin(Formula::negation(Formula::knows(Formula::negation(j))));
  if (!antecedent) return d.consequent;
  return Formula::implication(std::move(*antecedent), d.consequent);
}

Theory konolige(const DefaultTheory& dt) {
  std::vector<Formula> formulas = dt.facts;
  for (const auto& d : dt.defaults) formulas.push_back(konolige(d));
  return make_theory(std::move(formulas), dt.vocabulary);
}

// Direct Reiter extensions

namespace {

struct CompiledDefault {
  WorldSet prerequisite;
  std::vector<WorldSet> justifications;
  WorldSet consequent;
};

struct CompiledDefaults {
  WorldSet facts;
  std::vector<CompiledDefault> defaults;
};

WorldSet models_of(const Vocabulary& v, const Formula& f) { return models(v, std::span<const Formula>(&f, 1)); }

CompiledDefaults compile_defaults(const DefaultTheory& dt) {
  CompiledDefaults out{models(dt.vocabulary, dt.facts), {}};
  for (const auto& d : dt.defaults) {
    CompiledDefault cd{models_of(dt.vocabulary, d.prerequisite), {}, models_of(dt.vocabulary, d.consequent)};
    for (const auto& j : d.justifications) cd.justifications.push_back(models_of(dt.vocabulary, j));
    out.defaults.push_back(std::move(cd));
  }
  return out;
}

WorldSet gamma(const CompiledDefaults& cd, const BeliefState& e) {
  WorldSet b = cd.facts;
  std::vector<bool> applied(cd.defaults.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cd.defaults.size(); ++i) {
      if (applied[i]) continue;
      const auto& d = cd.defaults[i];
      if (!b.is_subset_of(d.prerequisite)) continue;
      const bool consistent = std::all_of(d.justifications.begin(), d.justifications.end(),
                                          [&](const WorldSet& j) { return !(e & j).is_empty(); });
      if (!consistent) continue;
      b &= d.consequent;
      applied[i] = true;
      changed = true;
    }
  }
  return b;
}

}  // namespace

BeliefState reiter_gamma(const DefaultTheory& dt, const BeliefState& e) { return gamma(compile_defaults(dt), e); }

std::vector<BeliefState> reiter_extensions(const DefaultTheory& dt, const Limits& limits) {
  check_atom_cap(dt.vocabulary.size(), limits.max_atoms);
  const std::size_t n = dt.defaults.size();
  if (n > limits.max_defaults)
    throw ResourceCapError(std::to_string(n) + " defaults exceed the cap of " + std::to_string(limits.max_defaults));
  const CompiledDefaults cd = compile_defaults(dt);
  std::vector<BeliefState> out;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    WorldSet candidate = cd.facts;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) candidate &= cd.defaults[i].consequent;
    }
    if (gamma(cd, candidate) == candidate) out.push_back(std::move(candidate));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string_view to_string(DlSemantics s) {
  switch (s) {
    case DlSemantics::kk: return "kk";
    case DlSemantics::weak: return "weak";
    case DlSemantics::reiter: return "reiter";
    case DlSemantics::wf: return "wf";
  }
  return "?";
}

SemanticsResult dl_semantics(const DefaultTheory& dt, DlSemantics kind, TruthFunction truth, const Limits& limits) {
  const OperatorContext ctx(konolige(dt), truth, limits);
  switch (kind) {
    case DlSemantics::kk: return kripke_kleene_extension(ctx);
    case DlSemantics::weak: return expansions(ctx);
    case DlSemantics::reiter: return stable_extensions(ctx);
    case DlSemantics::wf: return well_founded_extension(ctx);
  }
  throw std::invalid_argument("unknown default-logic semantics");
}

AlignmentReport align_check(const DefaultTheory& dt, const Limits& limits) {
  AlignmentReport report{reiter_extensions(dt, limits),
                         {},
                         false,
                         dl_semantics(dt, DlSemantics::kk, TruthFunction::kleene, limits),
                         dl_semantics(dt, DlSemantics::wf, TruthFunction::kleene, limits),
                         dl_semantics(dt, DlSemantics::weak, TruthFunction::kleene, limits)};
  for (const auto& s : dl_semantics(dt, DlSemantics::reiter, TruthFunction::kleene, limits).results)
    report.stable.push_back(s.pp());
  report.aligned = report.reiter == report.stable;
  return report;
}

}  // namespace nmr
