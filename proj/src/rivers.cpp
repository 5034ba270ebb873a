#include "triform/rivers.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include <json.hpp>

#include "triform/watson.hpp"

namespace triform {

std::vector<std::pair<Form, Int>> successors(const Form& e, Int coeff_cap) {
  const Form s = sorted(e);
  if (s.size() != 3 && s.size() != 4) {
    throw PreconditionError("successors requires rank 3 or 4");
  }
  std::vector<std::pair<Form, Int>> out;
  for (Int p : {3, 5, 7}) {
    for (const Form& b : reduce_preimage(s, p, coeff_cap)) {
      const bool listed =
          s.size() == 3 ? in_ternary_table(b) : in_quaternary_table(b);
      if (!listed) continue;
      if (is_p_stable(b, p)) continue;
      out.emplace_back(b, p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

River build_river(const Form& mouth, Int coeff_cap) {
  const Form m = sorted(mouth);
  const bool listed =
      m.size() == 3 ? in_ternary_table(m) : in_quaternary_table(m);
  if (!listed || !is_stable(m)) {
    throw PreconditionError("build_river requires a stable table-listed mouth");
  }

  River river;
  river.mouth = m;
  std::set<Form> nodes{m};
  std::set<std::tuple<Form, Form, Int, bool>> edges;
  std::deque<Form> queue{m};

  while (!queue.empty()) {
    const Form v = queue.front();
    queue.pop_front();
    for (const auto& [b, p] : successors(v, coeff_cap)) {
      edges.insert({b, v, p, false});
      if (nodes.insert(b).second) queue.push_back(b);
    }
    if (v.size() == 3) {
      for (const DropRecord& d : drop_table()) {
        if (d.bottom != v) continue;
        if (*std::max_element(d.top.begin(), d.top.end()) > coeff_cap) continue;
        edges.insert({d.top, v, d.p, true});
        if (nodes.insert(d.top).second) queue.push_back(d.top);
      }
    }
  }

  river.nodes.assign(nodes.begin(), nodes.end());
  std::sort(river.nodes.begin(), river.nodes.end(),
            [](const Form& a, const Form& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  for (const auto& [from, to, p, collapse] : edges) {
    river.edges.push_back({from, to, p, collapse});
  }
  return river;
}

namespace {

// w arises from u by scaling exactly one coefficient by q^2, q in {3,5,7}.
bool scaled_once(const Form& u, const Form& w) {
  std::vector<Int> du, dw;
  std::size_t i = 0, j = 0;
  while (i < u.size() && j < w.size()) {
    if (u[i] == w[j]) {
      ++i;
      ++j;
    } else if (u[i] < w[j]) {
      du.push_back(u[i++]);
    } else {
      dw.push_back(w[j++]);
    }
  }
  while (i < u.size()) du.push_back(u[i++]);
  while (j < w.size()) dw.push_back(w[j++]);
  if (du.size() != 1 || dw.size() != 1) return false;
  for (Int q : {3, 5, 7}) {
    if (dw[0] == du[0] * q * q) return true;
  }
  return false;
}

struct Tree {
  std::vector<Form> node;
  std::vector<int> parent;
  std::vector<int> depth;
  std::vector<std::vector<int>> children;
};

Tree grow_tree(const Form& root, Int coeff_cap) {
  Tree t;
  t.node.push_back(sorted(root));
  t.parent.push_back(-1);
  t.depth.push_back(0);
  t.children.emplace_back();
  std::map<Form, int> index{{t.node[0], 0}};
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const auto& [b, p] : successors(t.node[v], coeff_cap)) {
      if (index.count(b)) continue;
      const int id = static_cast<int>(t.node.size());
      index.emplace(b, id);
      t.node.push_back(b);
      t.parent.push_back(v);
      t.depth.push_back(t.depth[v] + 1);
      t.children.emplace_back();
      t.children[v].push_back(id);
      queue.push_back(id);
    }
  }
  return t;
}

}  // namespace

StreamCounts describe_streams(const Form& root, Int coeff_cap) {
  const Tree t = grow_tree(root, coeff_cap);
  const int n = static_cast<int>(t.node.size());

  // Maximal root-to-leaf paths that are periodic along their whole length:
  // every node two levels up is the same form with one coefficient scaled
  // by a square prime power.
  std::vector<char> spine(n, 0);
  int mainstreams = 0;
  {
    std::vector<int> path{0};
    auto dfs = [&](auto&& self, int v) -> void {
      if (t.children[v].empty()) {
        bool periodic = path.size() >= 3;
        for (std::size_t d = 0; d + 2 < path.size() && periodic; ++d) {
          if (!scaled_once(t.node[path[d]], t.node[path[d + 2]])) periodic = false;
        }
        if (periodic) {
          ++mainstreams;
          for (int u : path) spine[u] = 1;
        }
        return;
      }
      for (int c : t.children[v]) {
        path.push_back(c);
        self(self, c);
        path.pop_back();
      }
    };
    dfs(dfs, 0);
  }
  spine[0] = 1;  // the root anchors everything attached to it

  // Alignment: spine nodes two levels apart on a common path are aligned;
  // children of aligned nodes that differ by one squared scaling are aligned
  // (and hence periodic).  Processed by ascending depth.
  std::vector<std::pair<int, int>> aligned;
  for (int v = 0; v < n; ++v) {
    if (!spine[v]) continue;
    int up = t.parent[v] >= 0 ? t.parent[t.parent[v]] : -1;
    if (up >= 0 && spine[up] && scaled_once(t.node[up], t.node[v])) {
      aligned.emplace_back(up, v);
    }
  }
  std::vector<char> periodic(n, 0);
  for (std::size_t head = 0; head < aligned.size(); ++head) {
    const auto [x, y] = aligned[head];
    for (int cx : t.children[x]) {
      if (spine[cx]) continue;
      for (int cy : t.children[y]) {
        if (spine[cy]) continue;
        if (scaled_once(t.node[cx], t.node[cy])) {
          periodic[cx] = periodic[cy] = 1;
          aligned.emplace_back(cx, cy);
        }
      }
    }
  }

  // Group periodic non-spine nodes into hanging components (tree adjacency),
  // then merge components linked by alignment into families.
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int v = 1; v < n; ++v) {
    if (spine[v] || !periodic[v]) continue;
    if (!spine[t.parent[v]] && periodic[t.parent[v]] && comp[t.parent[v]] >= 0) {
      comp[v] = comp[t.parent[v]];
    } else {
      comp[v] = ncomp++;
    }
  }
  std::vector<int> family(ncomp);
  for (int i = 0; i < ncomp; ++i) family[i] = i;
  auto find = [&](int x) {
    while (family[x] != x) x = family[x] = family[family[x]];
    return x;
  };
  for (const auto& [x, y] : aligned) {
    if (comp[x] >= 0 && comp[y] >= 0) family[find(comp[x])] = find(comp[y]);
  }
  std::set<int> families;
  for (int i = 0; i < ncomp; ++i) families.insert(find(i));

  // Remaining nodes form sporadic components.
  int sporadics = 0;
  for (int v = 1; v < n; ++v) {
    if (spine[v] || periodic[v]) continue;
    const int pv = t.parent[v];
    if (pv == 0 || spine[pv] || periodic[pv]) ++sporadics;
  }

  return {mainstreams, static_cast<int>(families.size()), sporadics};
}

namespace {

std::string node_name(const Form& a) {
  std::string s = "T(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  s += ")";
  return s;
}

}  // namespace

std::string to_dot(const River& river) {
  std::string out = "digraph river {\n";
  out += "  rankdir=TB;\n";
  out += "  node [shape=box];\n";
  for (const Form& v : river.nodes) {
    out += "  \"" + node_name(v) + "\";\n";
  }
  for (const RiverEdge& e : river.edges) {
    out += "  \"" + node_name(e.from) + "\" -> \"" + node_name(e.to) +
           "\" [label=\"p=" + std::to_string(e.p) + "\"";
    if (e.collapse) out += ", arrowhead=\"normalnormal\"";
    out += "];\n";
  }
  out += "}\n";
  return out;
}

std::string to_json(const River& river) {
  nlohmann::json j;
  j["mouth"] = river.mouth;
  j["nodes"] = river.nodes;
  j["edges"] = nlohmann::json::array();
  for (const RiverEdge& e : river.edges) {
    j["edges"].push_back({{"from", e.from},
                          {"to", e.to},
                          {"p", e.p},
                          {"collapse", e.collapse}});
  }
  return j.dump(2);
}

}  // namespace triform
