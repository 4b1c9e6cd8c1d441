#include "flagkey/serialize.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace flagkey {

namespace {

json shape_to_json(const Shape& s) {
  json j;
  if (s.is_shuffle()) {
    j["kind"] = "shuffle";
    j["first"] = {{"outer", s.shuffle().first.outer.parts()},
                  {"inner", s.shuffle().first.inner.parts()}};
    j["second"] = {{"outer", s.shuffle().second.outer.parts()},
                   {"inner", s.shuffle().second.inner.parts()}};
  } else {
    j["kind"] = "skew";
    j["outer"] = s.skew().outer.parts();
    j["inner"] = s.skew().inner.parts();
  }
  return j;
}

}  // namespace

json tableau_to_json(const Tableau& t) {
  const Shape& s = t.shape();
  json rows = json::array();
  int max_row = s.abs_rows();
  for (int r = 1; r <= max_row; ++r) {
    int max_col = 0;
    for (const Cell& c : s.cells())
      if (c.row == r) max_col = std::max(max_col, c.col);
    json row = json::array();
    for (int c = 1; c <= max_col; ++c) {
      int idx = s.cell_index(r, c);
      if (idx < 0)
        row.push_back(nullptr);
      else
        row.push_back(t.entry(idx));
    }
    rows.push_back(std::move(row));
  }
  return json{{"shape", shape_to_json(s)}, {"rows", std::move(rows)}};
}

json crystal_graph_to_json(const CrystalGraph& g) {
  json nodes = json::array();
  for (int e = 0; e < g.size(); ++e) {
    json n = tableau_to_json(g.elements[e]);
    n["index"] = e;
    n["weight"] = g.elements[e].weight(g.max_entry).parts();
    nodes.push_back(std::move(n));
  }
  json edges = json::array();
  for (int e = 0; e < g.size(); ++e)
    for (int i = 1; i < g.max_entry; ++i)
      if (g.lower_to[e][i - 1] >= 0)
        edges.push_back({{"from", e}, {"op", i}, {"to", g.lower_to[e][i - 1]}});
  return json{{"max_entry", g.max_entry}, {"nodes", nodes}, {"edges", edges}};
}

std::string crystal_graph_to_text(const CrystalGraph& g) {
  std::ostringstream out;
  for (int e = 0; e < g.size(); ++e) {
    out << "node " << e << " weight " << format_int_list(g.elements[e].weight(g.max_entry).parts())
        << " word";
    for (int v : g.elements[e].reading_word()) out << ' ' << v;
    out << '\n';
  }
  for (int e = 0; e < g.size(); ++e)
    for (int i = 1; i < g.max_entry; ++i)
      if (g.lower_to[e][i - 1] >= 0)
        out << "edge " << e << " -f" << i << "-> " << g.lower_to[e][i - 1] << '\n';
  return out.str();
}

json key_expansion_to_json(const KeyExpansion& e) {
  json j = json::object();
  for (const auto& [a, c] : e.terms()) j[format_int_list(a.parts())] = c.str();
  return j;
}

json witness_to_json(const Witness& w) {
  json j;
  j["note"] = w.note;
  j["params"] = w.params;
  j["tableaux"] = json::array();
  for (const auto& t : w.tableaux) j["tableaux"].push_back(tableau_to_json(t));
  return j;
}

namespace {

json outcome_to_json(const CheckOutcome& c) {
  json j;
  j["ok"] = c.ok;
  if (c.witness) j["witness"] = witness_to_json(*c.witness);
  return j;
}

}  // namespace

json axiom_report_to_json(const AxiomReport& r) {
  return json{{"extremal", outcome_to_json(r.extremal)},
              {"ideal", outcome_to_json(r.ideal)},
              {"principal", outcome_to_json(r.principal)},
              {"extension", outcome_to_json(r.extension)},
              {"gluing", outcome_to_json(r.gluing)},
              {"all_ok", r.all_ok()}};
}

json jt_matrix_to_json(const JTMatrix& m) {
  json grid = json::array();
  for (const auto& row : m.entries) {
    json r = json::array();
    for (const auto& p : row) r.push_back(p.canonical_text());
    grid.push_back(std::move(r));
  }
  return json{{"lambda", m.lambda.parts()},
              {"mu", m.mu.parts()},
              {"flag", m.flag.bounds()},
              {"entries", std::move(grid)}};
}

json component_keys_to_json(const std::vector<ComponentKey>& comps,
                            const CrystalGraph& ambient) {
  json out = json::array();
  for (const auto& c : comps) {
    json j;
    j["highest_weight"] = c.highest_weight.parts();
    j["key_index"] = format_int_list(c.lowest_weight.parts());
    j["principal"] = c.principal_ok;
    j["size"] = c.members.size();
    out.push_back(std::move(j));
  }
  (void)ambient;
  return out;
}

}  // namespace flagkey
