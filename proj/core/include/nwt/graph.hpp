#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nwt/weight.hpp"

namespace nwt {

// Simple undirected graph with one exact weight per vertex. Vertex ids are
// dense 0..n-1; no self-loops, no duplicate edges. Immutable once built, so
// instances are safe to share across threads read-only.
template <class W>
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(int n) : weights_(n), adjacency_(n) {}

  int vertex_count() const { return static_cast<int>(weights_.size()); }
  std::size_t edge_count() const { return edges_.size(); }

  const W& weight(int v) const { return weights_[v]; }
  void set_weight(int v, const W& w) { weights_[v] = w; }

  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool has_edge(int u, int v) const {
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
  }

  void add_edge(int u, int v) {
    const int n = vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::out_of_range("add_edge: endpoint out of range");
    if (u == v) throw std::invalid_argument("add_edge: self-loop");
    if (has_edge(u, v)) throw std::invalid_argument("add_edge: duplicate edge");
    insert_sorted(adjacency_[u], v);
    insert_sorted(adjacency_[v], u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }

  // Equality up to edge order.
  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.weights_ == b.weights_ && a.adjacency_ == b.adjacency_;
  }

 private:
  static void insert_sorted(std::vector<int>& adj, int v) {
    adj.insert(std::lower_bound(adj.begin(), adj.end(), v), v);
  }

  std::vector<W> weights_;
  std::vector<std::vector<int>> adjacency_;       // sorted ascending
  std::vector<std::pair<int, int>> edges_;        // u < v
};

// A triangle certificate. The three ids are pairwise distinct, all three
// edges exist in the source graph, and weight_sum is the exact node-weight
// sum.
template <class W>
struct TriangleWitness {
  int x = -1;
  int y = -1;
  int z = -1;
  W weight_sum{};
};

struct ParseError : std::runtime_error {
  ParseError(int line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " +
                           message),
        line(line_number) {}
  int line;
};

namespace detail {

inline bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') continue;
    return c == '#';
  }
  return true;
}

inline std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream iss(line);
  std::vector<std::string> out;
  std::string tok;
  while (iss >> tok) out.push_back(std::move(tok));
  return out;
}

inline std::optional<std::int64_t> parse_int(const std::string& tok) {
  std::int64_t v = 0;
  if (WeightTraits<std::int64_t>::parse(tok, v) != WeightParseStatus::ok)
    return std::nullopt;
  return v;
}

}  // namespace detail

// Text graph format: header "n m", then n lines "vertex_id weight", then m
// lines "u v". Lines whose first non-blank character is '#' are comments.
// Vertex labels may be arbitrary integers; they are canonicalized to dense
// ids 0..n-1 in order of appearance. Malformed input is rejected with the
// offending line number; duplicate edges and self-loops are errors rather
// than being silently dropped, because they would change triangle counts.
template <class W>
WeightedGraph<W> parse_graph(std::istream& in) {
  using Traits = WeightTraits<W>;
  std::string line;
  int line_no = 0;

  auto next_tokens = [&](const char* what) {
    while (std::getline(in, line)) {
      ++line_no;
      if (detail::is_comment_or_blank(line)) continue;
      return detail::tokens_of(line);
    }
    ++line_no;
    throw ParseError(line_no, std::string("unexpected end of input, expected ") +
                                  what);
  };

  const auto header = next_tokens("header \"n m\"");
  if (header.size() != 2)
    throw ParseError(line_no, "malformed header, expected \"n m\"");
  const auto n_val = detail::parse_int(header[0]);
  const auto m_val = detail::parse_int(header[1]);
  if (!n_val || !m_val || *n_val < 0 || *m_val < 0)
    throw ParseError(line_no, "malformed header, expected \"n m\"");
  const std::int64_t n = *n_val;
  const std::int64_t m = *m_val;

  WeightedGraph<W> g(static_cast<int>(n));
  std::unordered_map<std::int64_t, int> label_to_id;
  label_to_id.reserve(static_cast<std::size_t>(n));

  for (std::int64_t i = 0; i < n; ++i) {
    const auto toks = next_tokens("a vertex line \"vertex_id weight\"");
    if (toks.size() != 2)
      throw ParseError(line_no, "malformed vertex line, expected \"vertex_id weight\"");
    const auto label = detail::parse_int(toks[0]);
    if (!label) throw ParseError(line_no, "malformed vertex id '" + toks[0] + "'");
    if (label_to_id.count(*label))
      throw ParseError(line_no, "duplicate vertex id " + toks[0]);
    W w{};
    switch (Traits::parse(toks[1], w)) {
      case WeightParseStatus::ok:
        break;
      case WeightParseStatus::overflow:
        throw ParseError(line_no, "weight overflow in '" + toks[1] + "'");
      case WeightParseStatus::malformed:
        throw ParseError(line_no, "malformed weight '" + toks[1] + "'");
    }
    const int id = static_cast<int>(label_to_id.size());
    label_to_id.emplace(*label, id);
    g.set_weight(id, w);
  }

  for (std::int64_t i = 0; i < m; ++i) {
    const auto toks = next_tokens("an edge line \"u v\"");
    if (toks.size() != 2)
      throw ParseError(line_no, "malformed edge line, expected \"u v\"");
    int ends[2];
    for (int k = 0; k < 2; ++k) {
      const auto label = detail::parse_int(toks[k]);
      if (!label)
        throw ParseError(line_no, "malformed vertex id '" + toks[k] + "'");
      const auto it = label_to_id.find(*label);
      if (it == label_to_id.end())
        throw ParseError(line_no, "edge endpoint " + toks[k] +
                                      " is not a declared vertex");
      ends[k] = it->second;
    }
    if (ends[0] == ends[1])
      throw ParseError(line_no, "self-loop at vertex " + toks[0]);
    if (g.has_edge(ends[0], ends[1]))
      throw ParseError(line_no, "duplicate edge " + toks[0] + " " + toks[1]);
    g.add_edge(ends[0], ends[1]);
  }

  while (std::getline(in, line)) {
    ++line_no;
    if (!detail::is_comment_or_blank(line))
      throw ParseError(line_no, "trailing content after edge list");
  }
  return g;
}

template <class W>
WeightedGraph<W> parse_graph_text(const std::string& text) {
  std::istringstream iss(text);
  return parse_graph<W>(iss);
}

// Canonical serialization: vertices 0..n-1 in order, edges sorted ascending.
// parse(serialize(g)) reproduces g exactly (up to edge order by definition).
template <class W>
void serialize_graph(const WeightedGraph<W>& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (int v = 0; v < g.vertex_count(); ++v)
    out << v << ' ' << WeightTraits<W>::format(g.weight(v)) << '\n';
  auto edges = g.edges();
  std::sort(edges.begin(), edges.end());
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

template <class W>
std::string serialize_graph_text(const WeightedGraph<W>& g) {
  std::ostringstream oss;
  serialize_graph(g, oss);
  return oss.str();
}

// Erdős–Rényi instance with weights drawn from the requested distribution.
// Identical arguments give bit-identical graphs on every run and platform.
template <class W>
WeightedGraph<W> generate_random(int n, double p, const W& weight_low,
                                 const W& weight_high, std::uint64_t seed,
                                 WeightDistribution dist) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("generate_random: p must be in [0, 1]");
  if (weight_high < weight_low)
    throw std::invalid_argument("generate_random: weight_low > weight_high");
  if (n < 0) throw std::invalid_argument("generate_random: negative n");

  detail::SplitMix64 rng(seed);
  WeightedGraph<W> g(n);
  for (int v = 0; v < n; ++v)
    g.set_weight(v, WeightTraits<W>::sample(rng, weight_low, weight_high, dist));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.unit() < p) g.add_edge(u, v);
  return g;
}

template <class W>
struct InducedSubgraph {
  WeightedGraph<W> graph;
  std::vector<int> old_to_new;  // -1 for vertices outside S
  std::vector<int> new_to_old;
};

// Subgraph induced by S with weights preserved, plus the id mapping.
template <class W>
InducedSubgraph<W> induced_subgraph(const WeightedGraph<W>& g,
                                    std::span<const int> s) {
  InducedSubgraph<W> out;
  out.old_to_new.assign(g.vertex_count(), -1);
  std::vector<int> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  out.new_to_old = sorted;
  out.graph = WeightedGraph<W>(static_cast<int>(sorted.size()));
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    out.old_to_new[sorted[i]] = static_cast<int>(i);
    out.graph.set_weight(static_cast<int>(i), g.weight(sorted[i]));
  }
  for (const auto& [u, v] : g.edges()) {
    const int nu = out.old_to_new[u];
    const int nv = out.old_to_new[v];
    if (nu >= 0 && nv >= 0) out.graph.add_edge(nu, nv);
  }
  return out;
}

}  // namespace nwt
