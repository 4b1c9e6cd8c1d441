#include "flagkey/demazure.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace flagkey {

int DemazureSubset::member_count() const {
  return static_cast<int>(std::count(member.begin(), member.end(), 1));
}

std::vector<int> DemazureSubset::member_indices() const {
  std::vector<int> out;
  for (int i = 0; i < ambient.size(); ++i)
    if (member[i]) out.push_back(i);
  return out;
}

bool DemazureSubset::is_member(const Tableau& t) const {
  int idx = ambient.index_of(t);
  return idx >= 0 && member[idx];
}

DemazureSubset demazure_subset(const Partition& lambda, const std::vector<int>& word,
                               int n) {
  if (n < lambda.rows())
    throw std::invalid_argument("demazure_subset: need n >= number of rows");
  for (int i : word)
    if (i < 1 || i >= n) throw std::invalid_argument("word letter out of range");
  if (!is_reduced_word(word, n))
    throw std::invalid_argument("demazure_subset requires a reduced word");

  auto shape = Shape::make(SkewShape(lambda, Partition{}));
  // superstandard highest weight element: row i filled with i
  std::vector<std::uint8_t> vals;
  vals.reserve(shape->cell_count());
  for (const Cell& c : shape->cells()) vals.push_back(static_cast<std::uint8_t>(c.row));
  Tableau top(shape, std::move(vals));

  std::set<Tableau> members{top};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    std::vector<Tableau> frontier(members.begin(), members.end());
    for (const auto& t : frontier) {
      Tableau cur = t;
      while (auto next = lower(cur, *it)) {
        cur = std::move(*next);
        members.insert(cur);
      }
    }
  }

  DemazureSubset X;
  X.ambient = full_crystal(shape, n);
  X.member.assign(X.ambient.size(), 0);
  for (const auto& t : members) {
    int idx = X.ambient.index_of(t);
    if (idx < 0) throw std::logic_error("demazure_subset element missing from ambient");
    X.member[idx] = 1;
  }
  return X;
}

DemazureSubset flagged_subset(const std::shared_ptr<const Shape>& shape, int max_entry,
                              const std::vector<int>& row_bounds) {
  DemazureSubset X;
  X.ambient = full_crystal(shape, max_entry);
  X.member.assign(X.ambient.size(), 0);
  for (int i = 0; i < X.ambient.size(); ++i)
    if (X.ambient.elements[i].respects(row_bounds)) X.member[i] = 1;
  return X;
}

DemazureSubset flagged_subset(const std::shared_ptr<const Shape>& shape, int max_entry,
                              const Flag& flag) {
  return flagged_subset(shape, max_entry, shape->row_bounds(flag));
}

CheckOutcome check_extremal(const DemazureSubset& X) {
  const CrystalGraph& g = X.ambient;
  for (int i = 1; i < g.max_entry; ++i) {
    for (int top = 0; top < g.size(); ++top) {
      if (g.raise_to[top][i - 1] >= 0) continue;  // not a string top
      std::vector<int> string_elems;
      for (int cur = top; cur >= 0; cur = g.lower_to[cur][i - 1])
        string_elems.push_back(cur);
      int inside = 0;
      for (int e : string_elems) inside += X.member[e];
      if (inside == 0 || inside == static_cast<int>(string_elems.size())) continue;
      if (inside == 1 && X.member[string_elems.front()]) continue;
      Witness w;
      w.note = "i-string meets the subset in more than its top but not fully";
      w.params = {i};
      for (int e : string_elems)
        if (X.member[e]) w.tableaux.push_back(g.elements[e]);
      return {false, w};
    }
  }
  return {};
}

namespace {

struct AmbientComponents {
  std::vector<int> comp_of;                 // per element
  std::vector<Composition> hw_weight;      // per component, the partition weight
  std::vector<int> hw_elem;                // per component
};

AmbientComponents ambient_components(const CrystalGraph& g) {
  AmbientComponents ac;
  ac.comp_of.assign(g.size(), -1);
  int ncomp = 0;
  for (int s = 0; s < g.size(); ++s) {
    if (ac.comp_of[s] >= 0) continue;
    int id = ncomp++;
    std::queue<int> q;
    q.push(s);
    ac.comp_of[s] = id;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int i = 1; i < g.max_entry; ++i) {
        for (int v : {g.lower_to[u][i - 1], g.raise_to[u][i - 1]}) {
          if (v >= 0 && ac.comp_of[v] < 0) {
            ac.comp_of[v] = id;
            q.push(v);
          }
        }
      }
    }
  }
  ac.hw_weight.assign(ncomp, Composition{});
  ac.hw_elem.assign(ncomp, -1);
  for (int e = 0; e < g.size(); ++e) {
    bool top = true;
    for (int i = 1; i < g.max_entry && top; ++i)
      if (g.raise_to[e][i - 1] >= 0) top = false;
    if (top) {
      ac.hw_elem[ac.comp_of[e]] = e;
      ac.hw_weight[ac.comp_of[e]] = g.elements[e].weight(g.max_entry);
    }
  }
  return ac;
}

bool weight_is_extremal(const Composition& wt, const Composition& hw) {
  return wt.sorted_decreasing() == hw.sorted_decreasing();
}

// Ascending saturated run f_lo^* ... f_hi^* (f_lo^* first).
Tableau run_up(const Tableau& t, int lo, int hi) {
  Tableau cur = t;
  for (int j = lo; j <= hi; ++j) cur = lower_star(cur, j);
  return cur;
}

// Descending saturated run f_hi^* ... f_lo^* (f_hi^* first).
Tableau run_down(const Tableau& t, int hi, int lo) {
  Tableau cur = t;
  for (int j = hi; j >= lo; --j) cur = lower_star(cur, j);
  return cur;
}

}  // namespace

CheckOutcome check_ideal_direct(const DemazureSubset& X) {
  const CrystalGraph& g = X.ambient;
  AmbientComponents ac = ambient_components(g);
  auto extremal = [&](int e) {
    return weight_is_extremal(g.elements[e].weight(g.max_entry),
                              ac.hw_weight[ac.comp_of[e]]);
  };

  std::vector<int> seq;
  CheckOutcome out;
  auto dfs = [&](auto&& self, int y, int cur) -> bool {
    if (seq.size() >= 2 && X.member[cur] && extremal(cur)) {
      // x = e_{a_k}^* ... e_{a_1}^*(y); drop the last raise, lower back.
      Tableau back = g.elements[cur];
      for (int p = static_cast<int>(seq.size()) - 2; p >= 0; --p)
        back = lower_star(back, seq[p]);
      if (!X.is_member(back)) {
        Witness w;
        w.note = "ideal implication fails for a raising-star factorization";
        w.params = seq;
        w.tableaux = {g.elements[y], g.elements[cur], back};
        out = {false, w};
        return false;
      }
    }
    for (int i = 1; i < g.max_entry; ++i) {
      if (!seq.empty() && seq.back() == i) continue;
      if (g.raise_to[cur][i - 1] < 0) continue;  // e_i^* acts trivially
      int nxt = cur;
      while (g.raise_to[nxt][i - 1] >= 0) nxt = g.raise_to[nxt][i - 1];
      seq.push_back(i);
      bool keep = self(self, y, nxt);
      seq.pop_back();
      if (!keep) return false;
    }
    return true;
  };

  for (int y = 0; y < g.size(); ++y) {
    if (!X.member[y] || !extremal(y)) continue;
    seq.clear();
    if (!dfs(dfs, y, y)) return out;
  }
  return {};
}

CheckOutcome check_gluing(const DemazureSubset& X) {
  const CrystalGraph& g = X.ambient;
  AmbientComponents ac = ambient_components(g);
  int max_idx = g.max_entry - 1;
  for (int e = 0; e < g.size(); ++e) {
    if (!X.member[e]) continue;
    const Tableau& x = g.elements[e];
    if (!weight_is_extremal(x.weight(g.max_entry), ac.hw_weight[ac.comp_of[e]])) continue;
    for (int a = 2; a <= max_idx; ++a) {
      for (int k = 0; a + k <= max_idx; ++k) {
        for (int m = 1; m < a; ++m) {
          bool raises_vanish = true;
          for (int i = a - m; i <= a + k && raises_vanish; ++i)
            if (g.raise_to[e][i - 1] >= 0) raises_vanish = false;
          if (!raises_vanish) continue;
          if (!X.is_member(run_up(x, a, a + k))) continue;
          if (!X.is_member(run_down(x, a - 1, a - m))) continue;
          bool c1 = X.is_member(run_up(lower_star(x, a - 1), a, a + k));
          bool c2 = X.is_member(run_down(lower_star(x, a), a - 1, a - m));
          if (!c1 && !c2) {
            Witness w;
            w.note = "gluing fails: neither glued chain stays in the subset";
            w.params = {k, m, a};
            w.tableaux = {x};
            return {false, w};
          }
        }
      }
    }
  }
  return {};
}

CheckOutcome check_extension(const DemazureSubset& X) {
  const CrystalGraph& g = X.ambient;
  AmbientComponents ac = ambient_components(g);
  int max_idx = g.max_entry - 1;
  for (int e = 0; e < g.size(); ++e) {
    if (!X.member[e]) continue;
    const Tableau& x = g.elements[e];
    if (!weight_is_extremal(x.weight(g.max_entry), ac.hw_weight[ac.comp_of[e]])) continue;
    for (int n = 1; n < max_idx; ++n) {
      bool raises_vanish = true;
      for (int i = 1; i <= std::min(n + 1, max_idx) && raises_vanish; ++i)
        if (g.raise_to[e][i - 1] >= 0) raises_vanish = false;
      if (!raises_vanish) continue;
      for (int b = 1; b <= n; ++b) {
        Tableau after_b = run_up(x, b, n + 1);  // F_{n+1,b}
        Tableau after_b1 = b == 1 ? x : run_up(x, b - 1, n + 1);
        bool hyp2 = b == 1 ? true : X.is_member(after_b1);
        if (!hyp2) continue;
        for (int a = b; a <= n; ++a) {
          if (!X.is_member(run_up(after_b, a, n))) continue;  // F_{n,a}F_{n+1,b}
          Tableau conclusion = run_up(b == 1 ? x : after_b1, a, n);
          if (!X.is_member(conclusion)) {
            Witness w;
            w.note = "extension fails: F_{n,a}F_{n+1,b-1} leaves the subset";
            w.params = {n, a, b};
            w.tableaux = {x, conclusion};
            return {false, w};
          }
        }
      }
    }
  }
  return {};
}

CheckOutcome check_ideal_decomposed(const DemazureSubset& X) {
  const CrystalGraph& g = X.ambient;
  int max_idx = g.max_entry - 1;
  for (int e = 0; e < g.size(); ++e) {
    if (!X.member[e]) continue;
    const Tableau& x = g.elements[e];
    // (ii) ascending chains drop their first operator
    for (int hi = 1; hi <= max_idx; ++hi) {
      for (int lo = 1; lo < hi; ++lo) {
        if (X.is_member(run_up(x, lo, hi)) && !X.is_member(run_up(x, lo + 1, hi))) {
          Witness w;
          w.note = "ideal property (ii) fails for an ascending chain";
          w.params = {hi, hi - lo};
          w.tableaux = {x};
          return {false, w};
        }
      }
    }
    // (iii) descending chains drop their first operator
    for (int lo = 1; lo <= max_idx; ++lo) {
      for (int hi = lo + 1; hi <= max_idx; ++hi) {
        if (X.is_member(run_down(x, hi, lo)) && !X.is_member(run_down(x, hi - 1, lo))) {
          Witness w;
          w.note = "ideal property (iii) fails for a descending chain";
          w.params = {lo, hi - lo};
          w.tableaux = {x};
          return {false, w};
        }
      }
    }
  }
  CheckOutcome glue = check_gluing(X);
  if (!glue.ok) {
    glue.witness->note = "ideal decomposition fails through the gluing property";
    return glue;
  }
  return {};
}

std::vector<std::vector<int>> member_components(const DemazureSubset& X) {
  const CrystalGraph& g = X.ambient;
  std::vector<int> comp(g.size(), -1);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < g.size(); ++s) {
    if (!X.member[s] || comp[s] >= 0) continue;
    comps.emplace_back();
    std::queue<int> q;
    q.push(s);
    comp[s] = static_cast<int>(comps.size()) - 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comps.back().push_back(u);
      for (int i = 1; i < g.max_entry; ++i) {
        for (int v : {g.lower_to[u][i - 1], g.raise_to[u][i - 1]}) {
          if (v >= 0 && X.member[v] && comp[v] < 0) {
            comp[v] = comp[u];
            q.push(v);
          }
        }
      }
    }
    std::sort(comps.back().begin(), comps.back().end());
  }
  return comps;
}

CheckOutcome check_principal(const DemazureSubset& X) {
  const CrystalGraph& g = X.ambient;
  AmbientComponents ac = ambient_components(g);
  for (const auto& comp : member_components(X)) {
    std::vector<int> extremal;
    for (int e : comp)
      if (weight_is_extremal(g.elements[e].weight(g.max_entry),
                             ac.hw_weight[ac.comp_of[e]]))
        extremal.push_back(e);
    bool found = false;
    for (int cand : extremal) {
      Composition wc = g.elements[cand].weight(g.max_entry);
      bool minimum = true;
      for (int other : extremal) {
        if (!dominance_leq(wc, g.elements[other].weight(g.max_entry))) {
          minimum = false;
          break;
        }
      }
      if (minimum) {
        found = true;
        break;
      }
    }
    if (!found) {
      Witness w;
      w.note = "component has no dominance-minimum extremal element";
      for (int e : extremal) w.tableaux.push_back(g.elements[e]);
      return {false, w};
    }
  }
  return {};
}

AxiomReport run_axiom_checks(const DemazureSubset& X) {
  AxiomReport r;
  r.extremal = check_extremal(X);
  r.ideal = check_ideal_decomposed(X);
  r.principal = check_principal(X);
  r.extension = check_extension(X);
  r.gluing = check_gluing(X);
  return r;
}

GreedyResult greedy_lowest(const CrystalGraph& ambient, const std::vector<char>& member,
                           int start) {
  if (start < 0 || start >= ambient.size() || !member[start])
    throw std::invalid_argument("greedy_lowest: start must be a member element");
  auto in_x = [&](const Tableau& t) {
    int idx = ambient.index_of(t);
    return idx >= 0 && member[idx];
  };
  GreedyResult res;
  Tableau cur = ambient.elements[start];
  std::vector<OperatorChain::Block> blocks;
  for (int n = ambient.max_entry - 1; n >= 1; --n) {
    int chosen = 0;
    Tableau next = cur;
    for (int a = 1; a <= n; ++a) {
      Tableau end = run_up(cur, a, n);
      if (in_x(end) && !(end == cur)) {
        chosen = a;
        next = end;
        break;
      }
    }
    blocks.push_back({n, chosen});
    if (chosen > 0) {
      cur = next;
      res.intermediate_weights.push_back(cur.weight(ambient.max_entry));
    }
  }
  res.chain = OperatorChain(std::move(blocks));
  res.element = ambient.index_of(cur);
  return res;
}

std::vector<ComponentKey> decompose(const DemazureSubset& X) {
  const CrystalGraph& g = X.ambient;
  AmbientComponents ac = ambient_components(g);
  std::vector<ComponentKey> out;
  for (const auto& comp : member_components(X)) {
    ComponentKey ck;
    ck.members = comp;
    std::vector<int> tops;
    for (int e : comp) {
      bool top = true;
      for (int i = 1; i < g.max_entry && top; ++i)
        if (g.raise_to[e][i - 1] >= 0) top = false;
      if (top) tops.push_back(e);
    }
    if (tops.size() != 1) ck.principal_ok = false;
    int hw = tops.empty() ? comp.front() : tops.front();
    Composition hw_wt = g.elements[hw].weight(g.max_entry);
    ck.highest_weight = hw_wt.sorted_decreasing();

    std::vector<char> comp_member(g.size(), 0);
    for (int e : comp) comp_member[e] = 1;
    GreedyResult gr = greedy_lowest(g, comp_member, hw);
    ck.lowest_weight = g.elements[gr.element].weight(g.max_entry).trimmed();

    // validity: the greedy result must be the dominance minimum over the
    // component's extremal members
    for (int e : comp) {
      Composition wt = g.elements[e].weight(g.max_entry);
      if (!weight_is_extremal(wt, ac.hw_weight[ac.comp_of[e]])) continue;
      if (!dominance_leq(g.elements[gr.element].weight(g.max_entry), wt))
        ck.principal_ok = false;
    }
    out.push_back(std::move(ck));
  }
  return out;
}

}  // namespace flagkey
