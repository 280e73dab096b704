#include "incmon/cli.hpp"

#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "incmon/expr.hpp"
#include "incmon/invariants.hpp"
#include "incmon/kgroup.hpp"
#include "incmon/modengine.hpp"
#include "incmon/monomial.hpp"
#include "incmon/ncseries.hpp"

namespace incmon::cli {

using json = nlohmann::ordered_json;

namespace {

json int_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return json(x.convert_to<long long>());
  return json(x.str());
}

json envelope(const std::string& kind) {
  json j;
  j["schema_version"] = 1;
  j["kind"] = kind;
  return j;
}

json kelement_json(const KElement& x) {
  json j = envelope("kelement");
  j["text"] = x.str();
  j["terms"] = json::array();
  for (const auto& [w, c] : x.ordered_terms()) j["terms"].push_back({{"word", w.str()}, {"coefficient", int_json(c)}});
  return j;
}

json factor_json(const RationalFactor& f) {
  json num = json::array();
  for (const Integer& c : f.numerator()) num.push_back(int_json(c));
  return {{"num", num}, {"dm", f.dm()}, {"dp", f.dp()}};
}

json series_terms_json(const NCSeries& s) {
  json terms = json::array();
  for (const NCTerm& t : s.terms()) {
    json fs = json::array();
    for (const RationalFactor& f : t.factors) fs.push_back(factor_json(f));
    terms.push_back({{"factors", fs}});
  }
  return terms;
}

std::string word_text(const Word& w) { return w.pretty(); }

Word parse_word_arg(const std::string& s) {
  if (s == "1") return {};
  try {
    return Word::parse(s);
  } catch (const std::invalid_argument&) {
    throw SyntaxError("not a word over {a,b}: '" + s + "'", 0);
  }
}

int parse_nonneg(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw SyntaxError("expected a non-negative integer for " + what + ", got '" + s + "'", 0);
  if (s.size() > 6) throw std::domain_error(what + " is too large");
  return std::stoi(s);
}

void check_degree(int D) {
  if (D > max_degree())
    throw std::domain_error("degree " + std::to_string(D) + " exceeds INCMON_MAX_DEGREE=" + std::to_string(max_degree()));
}

Module build_spec(const std::string& spec, int D) {
  std::size_t colon = spec.find(':');
  if (colon == std::string::npos) {
    if (spec == "triv" || spec == "trivial") return modengine::trivial<Rational>(D);
    if (spec == "zero") return modengine::zero_module<Rational>(D);
    throw SyntaxError("module spec must look like kind:arg, got '" + spec + "'", 0);
  }
  std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  if (kind == "std") return modengine::std_module<Rational>(parse_word_arg(arg.empty() ? "1" : arg), D);
  if (kind == "inj") return modengine::injective_module<Rational>(parse_word_arg(arg.empty() ? "1" : arg), D);
  if (kind == "prin") return modengine::principal<Rational>(parse_nonneg(arg, "principal rank"), D);
  if (kind == "simple") return modengine::simple<Rational>(parse_nonneg(arg, "simple degree"), D);
  if (kind == "J") return modengine::jmodule<Rational>(parse_nonneg(arg, "J index"), D);
  throw SyntaxError("unknown module kind '" + kind + "'", 0);
}

json module_json(const Module& M) {
  json j = envelope("module");
  j["D"] = M.D();
  j["dims"] = M.dims();
  json alpha = json::object();
  for (int n = 0; n < M.D(); ++n)
    for (int i = 1; i <= n; ++i) {
      Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> d(M.alpha(n, i));
      json rows = json::array();
      for (int r = 0; r < d.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < d.cols(); ++c) row.push_back(to_string(d(r, c)));
        rows.push_back(row);
      }
      alpha[std::to_string(n) + "," + std::to_string(i)] = rows;
    }
  j["alpha"] = alpha;
  return j;
}

std::string list_text(const std::vector<long>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

std::vector<long> to_long(const std::vector<int>& v) { return std::vector<long>(v.begin(), v.end()); }

std::vector<int> list_arg(const std::string& s) {
  try {
    return monomial::parse_int_list(s);
  } catch (const std::exception& e) {
    throw SyntaxError(std::string("bad integer list: ") + e.what(), 0);
  }
}

Rational rational_arg(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::exception& e) {
    throw SyntaxError(e.what(), 0);
  }
}

std::vector<MonomialTuple> parse_tuple_set(const std::string& s) {
  std::vector<MonomialTuple> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) out.push_back(list_arg(item));
  return out;
}

}  // namespace

int max_degree() {
  const char* v = std::getenv("INCMON_MAX_DEGREE");
  if (!v || !*v) return 16;
  try {
    return std::stoi(v);
  } catch (...) {
    return 16;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of representations of the increasing monoid", "incmon"};
  app.require_subcommand(1);

  bool as_json = false, smooth = false;
  std::function<void()> action;

  auto leaf = [&](CLI::App* sub, bool with_smooth) {
    sub->add_flag("--json", as_json, "JSON output");
    if (with_smooth) sub->add_flag("--smooth", smooth, "use the smooth (ungraded) variant");
    return sub;
  };

  // Output helper: JSON object or text line.
  auto emit = [&](const json& j, const std::string& text) {
    if (as_json)
      out << j.dump(2) << "\n";
    else
      out << text << "\n";
  };

  std::string expr, word_arg, left_word, spec, spec2;
  std::vector<std::string> exprs, op;
  int expand_len = -1, bound = -1, deg = -1;

  // kgroup
  auto* kg = app.add_subcommand("kgroup", "Grothendieck ring arithmetic and operators");
  kg->require_subcommand(1);
  {
    auto* ev = leaf(kg->add_subcommand("eval", "evaluate and normalize an expression"), false);
    ev->add_option("EXPR", expr)->required();
    ev->callback([&] { action = [&] {
      KElement x = parse_kelement(expr);
      emit(kelement_json(x), x.str());
    }; });
    for (std::string name : {"psi", "gamma", "xi", "xires", "xicor", "sigma", "dual", "transpose", "pi", "kappa",
                             "beta_a", "beta_b"}) {
      auto* s = leaf(kg->add_subcommand(name, "apply the " + name + " operator"), false);
      s->add_option("EXPR", expr)->required();
      s->callback([&, name] { action = [&, name] {
        KElement y = kgroup::unary_op(name)(parse_kelement(expr));
        json j = kelement_json(y);
        j["operator"] = name;
        emit(j, y.str());
      }; });
    }
  }

  // series
  auto* se = app.add_subcommand("series", "G- and F-series");
  se->require_subcommand(1);
  for (std::string which : {"g", "f"}) {
    auto* s = leaf(se->add_subcommand(which, which == "g" ? "multiplicity series" : "pairing series"), true);
    s->add_option("EXPR", expr)->required();
    s->add_option("--expand", expand_len, "also list coefficients of words up to this length")->check(CLI::NonNegativeNumber);
    s->callback([&, which] { action = [&, which] {
      KElement x = parse_kelement(expr);
      auto& eng = invariants::shared_engine();
      NCSeries S = which == "g" ? (smooth ? eng.gser_smooth(x) : eng.gser(x))
                                : (smooth ? eng.fser_smooth(x) : eng.fser(x));
      json j = envelope("series");
      j["text"] = S.str();
      j["terms"] = series_terms_json(S);
      std::string text = S.str();
      if (expand_len >= 0) {
        check_degree(expand_len);
        json ex = json::array();
        KElement as_k;
        for (const auto& [w, c] : ncseries::expand(S, std::size_t(expand_len))) {
          as_k.add_term(w, c);
          ex.push_back({{"word", w.str()}, {"coefficient", int_json(c)}});
        }
        j["expand_length"] = expand_len;
        j["expansion"] = ex;
        text += "\nexpansion to length " + std::to_string(expand_len) + ": " + as_k.str();
      }
      emit(j, text);
    }; });
  }

  {
    auto* h = leaf(app.add_subcommand("hilbert", "Hilbert series and its pole order at t=1"), true);
    h->add_option("EXPR", expr)->required();
    h->callback([&] { action = [&] {
      HilbertResult r = invariants::hilbert(parse_kelement(expr), smooth);
      json j = envelope("hilbert");
      j["text"] = r.series.str('t');
      j["series"] = factor_json(r.series);
      j["pole_order"] = r.pole_order;
      emit(j, r.series.str('t') + "  (pole order " + std::to_string(r.pole_order) + ")");
    }; });
  }

  {
    auto* l = leaf(app.add_subcommand("level", "largest rank occurring in the class"), false);
    l->add_option("EXPR", expr)->required();
    l->callback([&] { action = [&] {
      long lev = invariants::level_upper(parse_kelement(expr));
      json j = envelope("level");
      j["level"] = lev == kMinusInfinity ? json(nullptr) : json(lev);
      emit(j, lev == kMinusInfinity ? "-inf" : std::to_string(lev));
    }; });
  }

  {
    auto* m = leaf(app.add_subcommand("mult", "multiplicity of a word in a class"), true);
    m->add_option("EXPR", expr)->required();
    m->add_option("WORD", word_arg)->required();
    m->callback([&] { action = [&] {
      Integer v = invariants::mult(parse_kelement(expr), parse_word_arg(word_arg), smooth);
      json j = envelope("integer");
      j["value"] = int_json(v);
      emit(j, v.str());
    }; });
  }

  {
    auto* p = leaf(app.add_subcommand("pair", "Euler characteristic pairing"), true);
    p->add_option("EXPRS", exprs, "LEFT RIGHT, or only RIGHT with --left-word")->required()->expected(1, 2);
    p->add_option("--left-word", left_word, "pair a word on the left against RIGHT");
    p->callback([&, p] { action = [&, p] {
      Integer v;
      if (p->count("--left-word")) {
        if (exprs.size() != 1) throw SyntaxError("with --left-word give exactly one expression", 0);
        v = invariants::pair_left(parse_word_arg(left_word), parse_kelement(exprs[0]), smooth);
      } else {
        if (exprs.size() != 2) throw SyntaxError("pair needs LEFT and RIGHT expressions", 0);
        v = invariants::pair(parse_kelement(exprs[0]), parse_kelement(exprs[1]), smooth);
      }
      json j = envelope("integer");
      j["value"] = int_json(v);
      emit(j, v.str());
    }; });
  }

  {
    auto* e = leaf(app.add_subcommand("effective", "bounded effectivity test"), true);
    e->add_option("EXPR", expr)->required();
    e->add_option("--bound", bound, "maximum word length examined")->required()->check(CLI::NonNegativeNumber);
    e->callback([&] { action = [&] {
      check_degree(bound);
      EffectivityVerdict v = invariants::effective(parse_kelement(expr), std::size_t(bound), smooth);
      json j = envelope("effectivity");
      std::string text;
      if (auto* ne = std::get_if<NotEffective>(&v)) {
        j["verdict"] = "not_effective";
        j["witness"] = ne->witness.str();
        j["coefficient"] = int_json(ne->coefficient);
        text = "NOT effective; witness " + word_text(ne->witness) + " (coefficient " + ne->coefficient.str() + ")";
      } else {
        j["verdict"] = "effective_up_to";
        j["bound"] = std::get<EffectiveUpTo>(v).bound;
        text = "effective up to length " + std::to_string(std::get<EffectiveUpTo>(v).bound);
      }
      emit(j, text);
    }; });
  }

  // module
  auto* mo = app.add_subcommand("module", "explicit truncated modules");
  mo->require_subcommand(1);
  auto add_module_args = [&](CLI::App* s) {
    s->add_option("SPEC", spec, "std:WORD, prin:R, simple:N, inj:WORD, J:N, triv")->required();
    s->add_option("--deg", deg, "truncation degree D")->required()->check(CLI::NonNegativeNumber);
  };
  auto add_op = [&](CLI::App* s) {
    s->add_option("--op", op, "shift | smooth-shift | transpose | coind | ind | concat SPEC2 | tau R | xi")
        ->expected(1, 2);
  };
  // Builds SPEC, applies --op. Returns either a module or graded dims (for tau / xi).
  struct Built {
    std::optional<Module> module;
    GradedDims dims;
  };
  auto build = [&]() -> Built {
    check_degree(deg);
    Module M = build_spec(spec, deg);
    if (op.empty()) return {M, {}};
    const std::string& name = op[0];
    auto need = [&](std::size_t n) {
      if (op.size() != n) throw SyntaxError("--op " + name + " takes " + std::to_string(n - 1) + " argument(s)", 0);
    };
    if (name == "shift") return need(1), Built{modengine::shift(M), {}};
    if (name == "smooth-shift") return need(1), Built{modengine::smooth_shift(M), {}};
    if (name == "transpose") return need(1), Built{modengine::transpose(M), {}};
    if (name == "coind") return need(1), Built{modengine::coinduction(M), {}};
    if (name == "ind") return need(1), Built{modengine::induction(M), {}};
    if (name == "concat") return need(2), Built{modengine::concat(M, build_spec(op[1], deg)), {}};
    if (name == "tau") {
      need(2);
      return {std::nullopt, modengine::canonical_grading_pieces(M, parse_nonneg(op[1], "tau degree"))};
    }
    if (name == "xi") return need(1), Built{std::nullopt, modengine::xi_truncated(M)};
    throw SyntaxError("unknown --op '" + name + "'", 0);
  };
  auto dims_json = [&](const GradedDims& g) {
    json j = envelope("graded_dims");
    j["dims"] = g.dims;
    j["reliable_degree"] = g.reliable_degree;
    return j;
  };
  auto dims_text = [&](const GradedDims& g) {
    return "dims " + list_text(g.dims) + "  (reliable through degree " + std::to_string(g.reliable_degree) + ")";
  };
  {
    auto* b = leaf(mo->add_subcommand("build", "construct a module and print it"), false);
    add_module_args(b);
    add_op(b);
    b->callback([&] { action = [&] {
      Built r = build();
      if (!r.module) return emit(dims_json(r.dims), dims_text(r.dims));
      const Module& M = *r.module;
      std::string text = "D = " + std::to_string(M.D()) + "\ndims " + list_text(to_long(M.dims()));
      for (int n = 0; n < M.D(); ++n)
        for (int i = 1; i <= n; ++i) {
          if (M.dim(n) == 0 || M.dim(n + 1) == 0) continue;
          Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> d(M.alpha(n, i));
          text += "\nalpha[" + std::to_string(n) + "," + std::to_string(i) + "] =";
          for (int row = 0; row < d.rows(); ++row) {
            text += "\n  ";
            for (int c = 0; c < d.cols(); ++c) text += (c ? " " : "") + to_string(d(row, c));
          }
        }
      emit(module_json(M), text);
    }; });
  }
  {
    auto* d = leaf(mo->add_subcommand("dims", "dimensions per degree"), false);
    add_module_args(d);
    add_op(d);
    d->callback([&] { action = [&] {
      Built r = build();
      if (!r.module) return emit(dims_json(r.dims), dims_text(r.dims));
      json j = envelope("dims");
      j["D"] = r.module->D();
      j["dims"] = r.module->dims();
      emit(j, list_text(to_long(r.module->dims())));
    }; });
  }
  {
    auto* b = leaf(mo->add_subcommand("betti", "Betti table from Koszul homology"), false);
    add_module_args(b);
    add_op(b);
    b->callback([&] { action = [&] {
      Built r = build();
      if (!r.module) throw std::domain_error("betti needs a module, not graded dimensions");
      BettiTable t = modengine::koszul_betti(*r.module);
      json j = envelope("betti");
      j["reliable_degree"] = t.reliable_degree;
      j["entries"] = json::array();
      std::map<int, std::vector<long>> rows;
      for (const auto& [ij, v] : t.entries) {
        j["entries"].push_back({{"i", ij.first}, {"j", ij.second}, {"value", v}});
        auto& row = rows[ij.first];
        row.resize(std::size_t(t.reliable_degree - ij.first) + 1, 0);
        row[std::size_t(ij.second)] = v;
      }
      std::string text = "reliable through i+j <= " + std::to_string(t.reliable_degree);
      for (auto& [i, row] : rows) {
        row.resize(std::size_t(t.reliable_degree - i) + 1, 0);
        text += "\nrow " + std::to_string(i) + ": " + list_text(row);
      }
      emit(j, text);
    }; });
  }
  {
    auto* h = leaf(mo->add_subcommand("hom", "dimension of graded Hom"), false);
    h->add_option("SPEC1", spec)->required();
    h->add_option("SPEC2", spec2)->required();
    h->add_option("--deg", deg, "truncation degree D")->required()->check(CLI::NonNegativeNumber);
    h->callback([&] { action = [&] {
      check_degree(deg);
      HomResult r = modengine::hom_dim(build_spec(spec, deg), build_spec(spec2, deg));
      json j = envelope("hom");
      j["dim"] = r.dim;
      j["reliable"] = r.reliable;
      j["generator_degree"] = r.generator_degree;
      j["relation_degree"] = r.relation_degree;
      emit(j, std::to_string(r.dim) + (r.reliable ? "  (reliable)" : "  (unreliable: increase --deg)"));
    }; });
  }
  {
    auto* v = leaf(mo->add_subcommand("verify", "check the defining relations"), false);
    add_module_args(v);
    add_op(v);
    v->callback([&] { action = [&] {
      Built r = build();
      if (!r.module) throw std::domain_error("verify needs a module");
      auto bad = modengine::verify_module(*r.module);
      json j = envelope("verify");
      j["violations"] = bad;
      std::string text = bad.empty() ? "ok" : "";
      for (const auto& s : bad) text += (text.empty() ? "" : "\n") + s;
      emit(j, text);
    }; });
  }

  // monomial
  auto* mn = app.add_subcommand("monomial", "principal module / monomial ideal dictionary");
  mn->require_subcommand(1);
  std::string tuple_arg, gens_arg;
  {
    auto* s = leaf(mn->add_subcommand("to-exponents", "tuple 2,3,5 -> exponents"), false);
    s->add_option("TUPLE", tuple_arg)->required();
    s->callback([&] { action = [&] {
      auto e = monomial::tuple_to_exponents(list_arg(tuple_arg));
      json j = envelope("exponents");
      j["exponents"] = e;
      emit(j, monomial::format_int_list(e));
    }; });
  }
  {
    auto* s = leaf(mn->add_subcommand("to-tuple", "exponents 1,0,1 -> tuple"), false);
    s->add_option("EXPS", tuple_arg)->required();
    s->callback([&] { action = [&] {
      auto t = monomial::exponents_to_tuple(list_arg(tuple_arg));
      json j = envelope("tuple");
      j["tuple"] = t;
      emit(j, monomial::format_int_list(t));
    }; });
  }
  {
    auto* s = leaf(mn->add_subcommand("member", "membership in a monomial submodule"), false);
    s->add_option("--gens", gens_arg, "generators separated by ';', e.g. 1,2;2,3")->required();
    s->add_option("--tuple", tuple_arg)->required();
    s->callback([&] { action = [&] {
      bool m = monomial::submodule_member(parse_tuple_set(gens_arg), list_arg(tuple_arg));
      json j = envelope("membership");
      j["member"] = m;
      emit(j, m ? "true" : "false");
    }; });
  }
  {
    auto* s = leaf(mn->add_subcommand("initial", "lex initial tuple of COEF:TUPLE;COEF:TUPLE..."), false);
    s->add_option("TERMS", tuple_arg)->required();
    s->callback([&] { action = [&] {
      TupleCombination v;
      std::stringstream ss(tuple_arg);
      std::string item;
      while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        std::size_t colon = item.find(':');
        if (colon == std::string::npos) throw SyntaxError("term must be COEF:TUPLE, got '" + item + "'", 0);
        v[list_arg(item.substr(colon + 1))] += rational_arg(item.substr(0, colon));
      }
      auto t = monomial::initial_tuple(v);
      json j = envelope("tuple");
      j["tuple"] = t;
      emit(j, monomial::format_int_list(t));
    }; });
  }

  // CLI11 reads "-a" or "-b^2 + 1" as short options. The only short option here is -h, so
  // other single-dash tokens are hidden behind a marker during parsing and restored after.
  const char kMark = '\x1f';
  auto unmark = [&](std::string& s) {
    if (!s.empty() && s[0] == kMark) s.erase(0, 1);
  };
  try {
    std::vector<std::string> rev;
    for (auto it = args.rbegin(); it != args.rend(); ++it) {
      const std::string& a = *it;
      bool dashed = a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h";
      rev.push_back(dashed ? kMark + a : a);
    }
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kSyntaxError;
  }
  for (std::string* s : {&expr, &word_arg, &left_word, &spec, &spec2, &tuple_arg, &gens_arg}) unmark(*s);
  for (auto& s : exprs) unmark(s);
  for (auto& s : op) unmark(s);
  if (!action) {
    err << "error: no command\n";
    return kSyntaxError;
  }
  try {
    action();
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
    return kSyntaxError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kOk;
}

}  // namespace incmon::cli
