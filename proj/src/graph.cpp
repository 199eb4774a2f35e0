// Copyright 2026 The bipartest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bipartest/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace bipartest {
namespace {

void check_endpoint(Vertex n, Vertex x, const char* what) {
  if (x >= n) {
    throw ParameterError(std::string(what) + ": endpoint " + std::to_string(x) +
                         " out of range for " + std::to_string(n) + " vertices");
  }
}

}  // namespace

Graph::Graph(Vertex n) : Graph(n, {}) {}

Graph::Graph(Vertex n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  std::vector<std::size_t> deg(n_, 0);
  for (const auto& e : edges_) {
    check_endpoint(n_, e.u, "Graph");
    check_endpoint(n_, e.v, "Graph");
    ++deg[e.u];
    if (e.u != e.v) ++deg[e.v];
  }
  offsets_.assign(n_ + 1, 0);
  for (Vertex v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adjacency_.resize(offsets_[n_]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    adjacency_[fill[e.u]++] = e.v;
    if (e.u != e.v) adjacency_[fill[e.v]++] = e.u;
  }
  for (Vertex v = 0; v < n_; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_endpoint(n_, v, "Graph::neighbors");
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::size_t Graph::min_degree() const {
  if (n_ == 0) return 0;
  std::size_t best = degree(0);
  for (Vertex v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::size_t Graph::multiplicity(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  check_endpoint(n_, v, "Graph::multiplicity");
  const auto [lo, hi] = std::equal_range(nb.begin(), nb.end(), v);
  return static_cast<std::size_t>(hi - lo);
}

bool Graph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.u == e.v; });
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<Vertex> local(n_, n_);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_endpoint(n_, vertices[i], "Graph::induced");
    if (local[vertices[i]] != n_) throw ParameterError("Graph::induced: repeated vertex");
    local[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> kept;
  for (const auto& e : edges_) {
    if (local[e.u] != n_ && local[e.v] != n_) kept.push_back({local[e.u], local[e.v]});
  }
  return Graph(static_cast<Vertex>(vertices.size()), std::move(kept));
}

Graph Graph::doubled() const {
  std::vector<Edge> twice;
  twice.reserve(2 * edges_.size());
  for (const auto& e : edges_) {
    twice.push_back(e);
    twice.push_back(e);
  }
  return Graph(n_, std::move(twice));
}

const char* to_string(Label label) { return label == Label::Eq ? "=" : "!="; }

XorGame::XorGame(Vertex n) : XorGame(n, {}) {}

XorGame::XorGame(Vertex n, std::vector<Constraint> constraints)
    : n_(n), constraints_(std::move(constraints)) {
  std::vector<std::size_t> deg(n_, 0);
  for (const auto& c : constraints_) {
    check_endpoint(n_, c.u, "XorGame");
    check_endpoint(n_, c.v, "XorGame");
    ++deg[c.u];
    if (c.u != c.v) ++deg[c.v];
  }
  offsets_.assign(n_ + 1, 0);
  for (Vertex v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adjacency_.resize(offsets_[n_]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& c : constraints_) {
    adjacency_[fill[c.u]++] = {c.v, c.label};
    if (c.u != c.v) adjacency_[fill[c.v]++] = {c.u, c.label};
  }
  for (Vertex v = 0; v < n_; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]),
              [](const XorNeighbor& a, const XorNeighbor& b) {
                return a.vertex != b.vertex ? a.vertex < b.vertex : a.label < b.label;
              });
  }
}

std::span<const XorNeighbor> XorGame::neighbors(Vertex v) const {
  check_endpoint(n_, v, "XorGame::neighbors");
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t XorGame::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

Count XorGame::violations(std::span<const std::uint8_t> side) const {
  if (side.size() != n_) throw ParameterError("XorGame::violations: coloring size mismatch");
  Count bad = 0;
  for (const auto& c : constraints_) {
    const bool same = side[c.u] == side[c.v];
    if ((c.label == Label::Eq) != same) ++bad;
  }
  return bad;
}

XorGame XorGame::from_graph(const Graph& g) {
  std::vector<Constraint> cs;
  cs.reserve(g.edge_count());
  for (const auto& e : g.edges()) cs.push_back({e.u, e.v, Label::Neq});
  return XorGame(g.vertex_count(), std::move(cs));
}

Count Bipartition::monochromatic_edges(const Graph& g) const {
  if (side.size() != g.vertex_count()) {
    throw ParameterError("Bipartition: coloring size mismatch");
  }
  Count bad = 0;
  for (const auto& e : g.edges()) {
    if (side[e.u] == side[e.v]) ++bad;
  }
  return bad;
}

std::vector<std::uint8_t> bfs_two_coloring(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<std::uint8_t> color(n, 2);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] != 2) continue;
    color[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] == 2) {
          color[w] = static_cast<std::uint8_t>(1 - color[v]);
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return {};
        }
      }
    }
  }
  return color;
}

namespace {

std::pair<Vertex, std::size_t> read_header(std::istream& in, const char* what) {
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw ParameterError(std::string(what) + ": malformed header, expected \"n m\"");
  }
  return {static_cast<Vertex>(n), static_cast<std::size_t>(m)};
}

Vertex read_vertex(std::istream& in, const char* what) {
  long long x = -1;
  if (!(in >> x) || x < 0) throw ParameterError(std::string(what) + ": malformed edge line");
  return static_cast<Vertex>(x);
}

}  // namespace

Graph read_graph(std::istream& in) {
  const auto [n, m] = read_header(in, "read_graph");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex u = read_vertex(in, "read_graph");
    const Vertex v = read_vertex(in, "read_graph");
    edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

XorGame read_xor_game(std::istream& in) {
  const auto [n, m] = read_header(in, "read_xor_game");
  std::vector<Constraint> cs;
  cs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex u = read_vertex(in, "read_xor_game");
    const Vertex v = read_vertex(in, "read_xor_game");
    std::string label;
    if (!(in >> label) || (label != "=" && label != "!=")) {
      throw ParameterError("read_xor_game: label must be \"=\" or \"!=\"");
    }
    cs.push_back({u, v, label == "=" ? Label::Eq : Label::Neq});
  }
  return XorGame(n, std::move(cs));
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_xor_game(std::ostream& out, const XorGame& game) {
  out << game.vertex_count() << ' ' << game.constraint_count() << '\n';
  for (const auto& c : game.constraints()) {
    out << c.u << ' ' << c.v << ' ' << to_string(c.label) << '\n';
  }
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void dump(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace

Graph load_graph(const std::string& path) {
  std::istringstream in(slurp(path));
  return read_graph(in);
}

XorGame load_xor_game(const std::string& path) {
  std::istringstream in(slurp(path));
  return read_xor_game(in);
}

void save_graph(const std::string& path, const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  dump(path, out.str());
}

void save_xor_game(const std::string& path, const XorGame& game) {
  std::ostringstream out;
  write_xor_game(out, game);
  dump(path, out.str());
}

bool looks_like_xor_game(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) return false;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    return tokens.size() == 3;
  }
  return false;
}

}  // namespace bipartest
