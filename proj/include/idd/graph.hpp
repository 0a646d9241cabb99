#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace idd {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Immutable directed graph with dense node indices. No self-loops, no
// duplicate edges. Construction is single-threaded; reads are safe to share.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  // Drops self-loops and duplicate edges silently; throws std::out_of_range on
  // an endpoint >= node_count.
  DirectedGraph(int node_count, const std::vector<std::pair<int, int>>& edges);

  int node_count() const { return node_count_; }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<int>& children(int i) const { return out_.at(i); }
  const std::vector<int>& parents(int i) const { return in_.at(i); }

  // All edges as (src, dst), ordered by src then dst.
  std::vector<std::pair<int, int>> edges() const;

 private:
  int node_count_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

struct Neighborhoods {
  std::vector<int> parents;        // Pa(i)
  std::vector<int> children;       // Ch(i)
  std::vector<int> parent_family;  // PF(i) = Pa(i) ∪ {i}
  std::vector<int> child_family;   // CF(i) = Ch(i) ∪ {i}
  int family_size = 0;             // k_i = |PF(i)|
};

Neighborhoods neighborhoods(const DirectedGraph& g, int i);

struct GraphStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t isolated_nodes = 0;
  double density = 0.0;  // edges / (nodes * (nodes - 1))
  std::optional<int> diameter;
  double avg_total_degree = 0.0;  // edges / nodes
  double frac_zero_indegree = 0.0;
  double frac_zero_outdegree = 0.0;
};

// Diameter (longest finite directed shortest path) is computed by BFS from
// every node and skipped above diameter_node_cap.
GraphStats graph_stats(const DirectedGraph& g, int diameter_node_cap = 5000);

struct EdgeListResult {
  DirectedGraph graph;
  std::vector<std::string> ids;  // index -> original identifier
  std::unordered_map<std::string, int> index;
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
};

// Parses "src dst" lines; '#' comments and blank lines ignored. Identifiers
// are interned in first-appearance order. Throws ParseError with the line
// number on a line that does not hold exactly two tokens.
EdgeListResult load_edge_list(std::istream& in);
EdgeListResult load_edge_list_string(const std::string& text);
EdgeListResult load_edge_list_file(const std::string& path);

void write_edge_list(const DirectedGraph& g, const std::vector<std::string>& ids,
                     std::ostream& out);

// FNV-1a over the edge list; part of generated-game provenance.
std::uint64_t graph_fingerprint(const DirectedGraph& g);

}  // namespace idd
