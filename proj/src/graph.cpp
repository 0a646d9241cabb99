#include "idd/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

namespace idd {

DirectedGraph::DirectedGraph(int node_count, const std::vector<std::pair<int, int>>& edges)
    : node_count_(node_count), out_(node_count), in_(node_count) {
  for (auto [src, dst] : edges) {
    if (src < 0 || src >= node_count_ || dst < 0 || dst >= node_count_)
      throw std::out_of_range("edge endpoint out of range");
    if (src == dst) continue;
    out_[src].push_back(dst);
  }
  for (auto& ch : out_) {
    std::sort(ch.begin(), ch.end());
    ch.erase(std::unique(ch.begin(), ch.end()), ch.end());
  }
  for (int i = 0; i < node_count_; ++i) {
    for (int j : out_[i]) in_[j].push_back(i);
    edge_count_ += out_[i].size();
  }
  for (auto& pa : in_) std::sort(pa.begin(), pa.end());
}

std::vector<std::pair<int, int>> DirectedGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int i = 0; i < node_count_; ++i)
    for (int j : out_[i]) out.emplace_back(i, j);
  return out;
}

Neighborhoods neighborhoods(const DirectedGraph& g, int i) {
  if (i < 0 || i >= g.node_count()) throw std::out_of_range("node index out of range");
  Neighborhoods nb;
  nb.parents = g.parents(i);
  nb.children = g.children(i);
  nb.parent_family = nb.parents;
  nb.parent_family.insert(std::lower_bound(nb.parent_family.begin(), nb.parent_family.end(), i), i);
  nb.child_family = nb.children;
  nb.child_family.insert(std::lower_bound(nb.child_family.begin(), nb.child_family.end(), i), i);
  nb.family_size = static_cast<int>(nb.parent_family.size());
  return nb;
}

GraphStats graph_stats(const DirectedGraph& g, int diameter_node_cap) {
  GraphStats s;
  s.nodes = static_cast<std::size_t>(g.node_count());
  s.edges = g.edge_count();
  std::size_t zero_in = 0, zero_out = 0;
  for (int i = 0; i < g.node_count(); ++i) {
    bool no_in = g.parents(i).empty();
    bool no_out = g.children(i).empty();
    if (no_in) ++zero_in;
    if (no_out) ++zero_out;
    if (no_in && no_out) ++s.isolated_nodes;
  }
  if (s.nodes > 1)
    s.density = static_cast<double>(s.edges) /
                (static_cast<double>(s.nodes) * static_cast<double>(s.nodes - 1));
  if (s.nodes > 0) {
    s.avg_total_degree = static_cast<double>(s.edges) / static_cast<double>(s.nodes);
    s.frac_zero_indegree = static_cast<double>(zero_in) / static_cast<double>(s.nodes);
    s.frac_zero_outdegree = static_cast<double>(zero_out) / static_cast<double>(s.nodes);
  }
  if (g.node_count() > 0 && g.node_count() <= diameter_node_cap) {
    int diameter = 0;
    std::vector<int> dist(g.node_count());
    std::queue<int> q;
    for (int src = 0; src < g.node_count(); ++src) {
      std::fill(dist.begin(), dist.end(), -1);
      dist[src] = 0;
      q.push(src);
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        diameter = std::max(diameter, dist[u]);
        for (int v : g.children(u))
          if (dist[v] < 0) {
            dist[v] = dist[u] + 1;
            q.push(v);
          }
      }
    }
    s.diameter = diameter;
  }
  return s;
}

EdgeListResult load_edge_list(std::istream& in) {
  EdgeListResult r;
  std::vector<std::pair<int, int>> edges;
  std::string line;
  std::size_t line_no = 0;
  auto intern = [&](const std::string& id) {
    auto [it, inserted] = r.index.try_emplace(id, static_cast<int>(r.ids.size()));
    if (inserted) r.ids.push_back(id);
    return it->second;
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a) || a[0] == '#') continue;
    if (!(ls >> b) || (ls >> extra))
      throw ParseError("line " + std::to_string(line_no) + ": expected two tokens");
    int src = intern(a);
    int dst = intern(b);
    if (src == dst) {
      ++r.self_loops;
      continue;
    }
    edges.emplace_back(src, dst);
  }
  std::vector<std::pair<int, int>> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  r.duplicate_edges = edges.size() - static_cast<std::size_t>(std::distance(
                                         sorted.begin(), std::unique(sorted.begin(), sorted.end())));
  r.graph = DirectedGraph(static_cast<int>(r.ids.size()), edges);
  return r;
}

EdgeListResult load_edge_list_string(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

EdgeListResult load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return load_edge_list(in);
}

void write_edge_list(const DirectedGraph& g, const std::vector<std::string>& ids,
                     std::ostream& out) {
  for (auto [src, dst] : g.edges()) out << ids.at(src) << ' ' << ids.at(dst) << '\n';
}

std::uint64_t graph_fingerprint(const DirectedGraph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t v) {
    for (int k = 0; k < 8; ++k) {
      h ^= (v >> (8 * k)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(g.node_count()));
  for (auto [src, dst] : g.edges()) {
    mix(static_cast<std::uint64_t>(src));
    mix(static_cast<std::uint64_t>(dst));
  }
  return h;
}

}  // namespace idd
