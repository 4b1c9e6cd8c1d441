#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <iterator>
#include <nlohmann/json.hpp>
#include <sstream>

#include "flagkey/serialize.hpp"

namespace flagkey::cli {

namespace {

struct CommonOut {
  bool text = false;
  bool assert_positive = false;
};

Partition parse_partition(const std::string& s) {
  if (s.empty()) return Partition{};
  return Partition(parse_int_list(s));
}

Flag parse_flag(const std::string& s) { return Flag(parse_int_list(s)); }

void emit_expansion_text(std::ostream& out, const KeyExpansion& e) {
  if (e.empty()) {
    out << "0\n";
    return;
  }
  bool first = true;
  for (const auto& [a, c] : e.terms()) {
    if (!first) out << " ";
    if (c < 0)
      out << "- ";
    else if (!first)
      out << "+ ";
    Int abs = c < 0 ? -c : c;
    if (abs != 1) out << abs.str() << "*";
    out << "k[" << format_int_list(a.parts()) << "]";
    first = false;
  }
  out << "\n";
}

int finish_positivity(std::ostream& out, const CommonOut& opts, const json& payload,
                      bool key_positive) {
  if (opts.text) {
    out << payload["summary"].get<std::string>();
  } else {
    json j = payload;
    j.erase("summary");
    out << j.dump(2) << "\n";
  }
  if (opts.assert_positive && !key_positive) return 2;
  return 0;
}

std::string expansion_summary(const KeyExpansion& e, bool positive) {
  std::ostringstream text;
  emit_expansion_text(text, e);
  text << "key positive: " << (positive ? "yes" : "no") << "\n";
  return text.str();
}

std::shared_ptr<const Shape> shape_from_options(const std::string& lambda,
                                                const std::string& mu,
                                                const std::string& nu,
                                                const std::string& rho) {
  SkewShape first(parse_partition(lambda), parse_partition(mu));
  if (nu.empty() && rho.empty()) return Shape::make(first);
  return Shape::make(ShuffleShape(first, SkewShape(parse_partition(nu),
                                                   parse_partition(rho))));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"flagged Schur / key polynomial toolkit"};
  app.require_subcommand(1);

  std::string lambda, mu, nu, rho, flag_s, alpha_s, tau_s, word_s;
  int vars = 0, max_entry = 0, nval = 0;
  CommonOut opts;
  int exit_code = 0;

  auto add_common = [&](CLI::App* cmd, bool positivity) {
    cmd->add_flag("--text", opts.text, "human-readable output instead of JSON");
    if (positivity)
      cmd->add_flag("--assert-positive", opts.assert_positive,
                    "exit 2 when the expansion is not key positive");
  };

  // schur
  auto* schur = app.add_subcommand("schur", "flagged skew Schur polynomial, both methods");
  schur->add_option("--lambda", lambda)->required();
  schur->add_option("--mu", mu);
  schur->add_option("--flag", flag_s)->required();
  schur->add_option("--vars", vars);
  add_common(schur, false);
  schur->callback([&] {
    Partition lam = parse_partition(lambda), m = parse_partition(mu);
    Flag b = parse_flag(flag_s);
    int tv = vars > 0 ? vars : b.max_bound();
    Polynomial tab = flagged_schur(SkewShape(lam, m), b, tv);
    Polynomial det = flagged_skew_schur_det(lam, m, b, tv);
    if (opts.text) {
      out << "tableaux:     " << tab.pretty_text() << "\n";
      out << "determinant:  " << det.pretty_text() << "\n";
      out << "agree: " << (tab == det ? "yes" : "no") << "\n";
    } else {
      out << json{{"lambda", lam.parts()},
                  {"mu", m.parts()},
                  {"flag", b.bounds()},
                  {"vars", tv},
                  {"tableaux", tab.canonical_text()},
                  {"determinant", det.canonical_text()},
                  {"agree", tab == det}}
                 .dump(2)
          << "\n";
    }
  });

  // key
  auto* key = app.add_subcommand("key", "key polynomial kappa_alpha");
  key->add_option("--alpha", alpha_s)->required();
  key->add_option("--vars", vars);
  add_common(key, false);
  key->callback([&] {
    Composition alpha(parse_int_list(alpha_s));
    int tv = vars > 0 ? vars : alpha.size();
    Polynomial p = key_polynomial(alpha, tv);
    if (opts.text)
      out << p.pretty_text() << "\n";
    else
      out << json{{"alpha", alpha.parts()}, {"vars", tv},
                  {"polynomial", p.canonical_text()}}
                 .dump(2)
          << "\n";
  });

  // key-expand
  auto* kexp = app.add_subcommand("key-expand",
                                  "expand a polynomial (stdin) in the key basis");
  kexp->add_option("--vars", vars)->required();
  add_common(kexp, true);
  kexp->callback([&] {
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    Polynomial p = Polynomial::parse(text, vars);
    KeyExpansion e = key_expand(p);
    bool pos = is_key_positive(e);
    json payload{{"expansion", key_expansion_to_json(e)},
                 {"key_positive", pos},
                 {"summary", expansion_summary(e, pos)}};
    exit_code = finish_positivity(out, opts, payload, pos);
  });

  // immanant
  auto* imm = app.add_subcommand(
      "immanant", "key expansion of a Temperley-Lieb immanant of the flagged "
                  "Jacobi-Trudi matrix");
  imm->add_option("--lambda", lambda)->required();
  imm->add_option("--mu", mu)->required();
  imm->add_option("--flag", flag_s)->required();
  imm->add_option("--tau", tau_s)->required();
  imm->add_option("--vars", vars);
  add_common(imm, true);
  imm->callback([&] {
    Partition lam = parse_partition(lambda), m = parse_partition(mu);
    Flag b = parse_flag(flag_s);
    TLDiagram tau = TLDiagram::parse_pair_list(tau_s);
    int tv = vars > 0 ? vars : b.max_bound();
    auto t0 = std::chrono::steady_clock::now();
    PositivityReport r = immanant_key_expansion(lam, m, b, tau, tv);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    json payload{{"lambda", lam.parts()},
                 {"mu", m.parts()},
                 {"flag", b.bounds()},
                 {"tau", tau.pair_list()},
                 {"vars", tv},
                 {"expansion", key_expansion_to_json(r.expansion)},
                 {"key_positive", r.key_positive},
                 {"hypotheses_hold", r.hypotheses_hold},
                 {"elapsed_ms", ms},
                 {"summary", expansion_summary(r.expansion, r.key_positive)}};
    exit_code = finish_positivity(out, opts, payload, r.key_positive);
  });

  // product
  auto* prod = app.add_subcommand(
      "product", "key expansion of a product of flagged skew Schur polynomials");
  prod->add_option("--lambda", lambda)->required();
  prod->add_option("--mu", mu);
  prod->add_option("--nu", nu)->required();
  prod->add_option("--rho", rho);
  prod->add_option("--flag", flag_s)->required();
  prod->add_option("--vars", vars);
  add_common(prod, true);
  prod->callback([&] {
    SkewPair pair{SkewShape(parse_partition(lambda), parse_partition(mu)),
                  SkewShape(parse_partition(nu), parse_partition(rho))};
    Flag b = parse_flag(flag_s);
    int tv = vars > 0 ? vars : b.max_bound();
    auto t0 = std::chrono::steady_clock::now();
    ProductResult r = product_key_expansion(pair, b, tv);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    bool pos = is_key_positive(r.direct);
    json payload{{"flag", b.bounds()},
                 {"vars", tv},
                 {"expansion", key_expansion_to_json(r.direct)},
                 {"crystal_expansion", key_expansion_to_json(r.crystal)},
                 {"paths_agree", r.paths_agree},
                 {"hypotheses_hold", r.hypotheses_hold},
                 {"key_positive", pos},
                 {"elapsed_ms", ms},
                 {"summary", expansion_summary(r.direct, pos)}};
    exit_code = finish_positivity(out, opts, payload, pos);
  });

  // logconcave
  auto* lc = app.add_subcommand(
      "logconcave", "key expansion of the join/meet log-concavity difference");
  lc->add_option("--lambda", lambda)->required();
  lc->add_option("--mu", mu);
  lc->add_option("--nu", nu)->required();
  lc->add_option("--rho", rho);
  lc->add_option("--flag", flag_s)->required();
  lc->add_option("--vars", vars);
  add_common(lc, true);
  lc->callback([&] {
    SkewPair pair{SkewShape(parse_partition(lambda), parse_partition(mu)),
                  SkewShape(parse_partition(nu), parse_partition(rho))};
    Flag b = parse_flag(flag_s);
    int tv = vars > 0 ? vars : b.max_bound();
    PositivityReport r = logconcavity_difference(pair, b, tv);
    json payload{{"flag", b.bounds()},
                 {"vars", tv},
                 {"expansion", key_expansion_to_json(r.expansion)},
                 {"key_positive", r.key_positive},
                 {"hypotheses_hold", r.hypotheses_hold},
                 {"summary", expansion_summary(r.expansion, r.key_positive)}};
    exit_code = finish_positivity(out, opts, payload, r.key_positive);
  });

  // demazure-check
  auto* dem = app.add_subcommand(
      "demazure-check", "run the Demazure axiom checks on a flagged set or B_w");
  dem->add_option("--lambda", lambda)->required();
  dem->add_option("--mu", mu);
  dem->add_option("--nu", nu);
  dem->add_option("--rho", rho);
  dem->add_option("--flag", flag_s);
  dem->add_option("--word", word_s);
  dem->add_option("--n", nval);
  dem->add_option("--max-entry", max_entry);
  add_common(dem, false);
  dem->callback([&] {
    DemazureSubset X;
    if (!word_s.empty() || nval > 0) {
      if (flag_s.size() || !nu.empty())
        throw CLI::ValidationError("demazure-check",
                                   "--word/--n and --flag are mutually exclusive");
      std::vector<int> word = word_s.empty() ? std::vector<int>{} : parse_int_list(word_s);
      if (nval <= 0) throw CLI::ValidationError("demazure-check", "--n required");
      X = demazure_subset(parse_partition(lambda), word, nval);
    } else {
      if (flag_s.empty())
        throw CLI::ValidationError("demazure-check", "need --flag or --word/--n");
      Flag b = parse_flag(flag_s);
      int m = max_entry > 0 ? max_entry : b.max_bound();
      X = flagged_subset(shape_from_options(lambda, mu, nu, rho), m, b);
    }
    AxiomReport r = run_axiom_checks(X);
    json j = axiom_report_to_json(r);
    j["members"] = X.member_count();
    j["ambient"] = X.ambient.size();
    if (opts.text) {
      auto line = [&](const char* name, const CheckOutcome& c) {
        out << name << ": " << (c.ok ? "pass" : "FAIL");
        if (!c.ok && c.witness) out << "  (" << c.witness->note << ")";
        out << "\n";
      };
      line("extremal ", r.extremal);
      line("ideal    ", r.ideal);
      line("principal", r.principal);
      line("extension", r.extension);
      line("gluing   ", r.gluing);
    } else {
      out << j.dump(2) << "\n";
    }
  });

  // crystal-graph
  auto* graph = app.add_subcommand("crystal-graph",
                                   "emit a crystal graph as JSON or text");
  graph->add_option("--lambda", lambda)->required();
  graph->add_option("--mu", mu);
  graph->add_option("--nu", nu);
  graph->add_option("--rho", rho);
  graph->add_option("--max-entry", max_entry)->required();
  graph->add_option("--flag", flag_s);
  add_common(graph, false);
  graph->callback([&] {
    auto shape = shape_from_options(lambda, mu, nu, rho);
    CrystalGraph g = full_crystal(shape, max_entry);
    if (!flag_s.empty()) {
      // restrict to the flagged subset, keeping edges inside it
      DemazureSubset X = flagged_subset(shape, max_entry, parse_flag(flag_s));
      std::vector<Tableau> members;
      for (int i : X.member_indices()) members.push_back(X.ambient.elements[i]);
      CrystalGraph restricted;
      restricted.shape = shape;
      restricted.max_entry = max_entry;
      restricted.elements = members;
      restricted.lower_to.assign(members.size(),
                                 std::vector<int>(std::max(0, max_entry - 1), -1));
      restricted.raise_to = restricted.lower_to;
      for (int e = 0; e < restricted.size(); ++e)
        for (int i = 1; i < max_entry; ++i)
          if (auto low = lower(restricted.elements[e], i)) {
            int to = restricted.index_of(*low);
            if (to >= 0) {
              restricted.lower_to[e][i - 1] = to;
              restricted.raise_to[to][i - 1] = e;
            }
          }
      g = std::move(restricted);
    }
    if (opts.text)
      out << crystal_graph_to_text(g);
    else
      out << crystal_graph_to_json(g).dump(2) << "\n";
  });

  // lowest
  auto* low = app.add_subcommand("lowest",
                                 "greedy lowest-weight trace of a flagged crystal");
  low->add_option("--lambda", lambda)->required();
  low->add_option("--mu", mu);
  low->add_option("--nu", nu);
  low->add_option("--rho", rho);
  low->add_option("--flag", flag_s)->required();
  low->add_option("--max-entry", max_entry);
  add_common(low, false);
  low->callback([&] {
    Flag b = parse_flag(flag_s);
    int m = max_entry > 0 ? max_entry : b.max_bound();
    auto shape = shape_from_options(lambda, mu, nu, rho);
    DemazureSubset X = flagged_subset(shape, m, b);
    auto comps = decompose(X);
    json items = json::array();
    for (const auto& c : comps) {
      // rerun the greedy walk on the component to expose the trace
      std::vector<char> mask(X.ambient.size(), 0);
      for (int e : c.members) mask[e] = 1;
      int top = -1;
      for (int e : c.members) {
        bool is_top = true;
        for (int i = 1; i < m && is_top; ++i)
          if (X.ambient.raise_to[e][i - 1] >= 0) is_top = false;
        if (is_top) top = e;
      }
      GreedyResult gr = greedy_lowest(X.ambient, mask, top);
      json blocks = json::array();
      for (const auto& blk : gr.chain.blocks())
        blocks.push_back({{"top", blk.top}, {"bottom", blk.bottom}});
      json weights = json::array();
      for (const auto& w : gr.intermediate_weights) weights.push_back(w.parts());
      items.push_back(
          {{"highest_weight", c.highest_weight.parts()},
           {"key_index", format_int_list(c.lowest_weight.parts())},
           {"principal", c.principal_ok},
           {"chain", blocks},
           {"intermediate_weights", weights},
           {"lowest", tableau_to_json(X.ambient.elements[gr.element])}});
    }
    if (opts.text) {
      for (const auto& item : items) {
        out << "component hw=" << item["highest_weight"].dump()
            << " key=" << item["key_index"].get<std::string>() << " chain=";
        for (const auto& blk : item["chain"])
          if (blk["bottom"].get<int>() > 0)
            out << " F(" << blk["top"].get<int>() << "," << blk["bottom"].get<int>()
                << ")";
        out << "\n";
      }
    } else {
      out << json{{"components", items}}.dump(2) << "\n";
    }
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help goes to stdout per convention
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace flagkey::cli
