#include "digraph_spectra/digraph.hpp"

#include <algorithm>
#include <sstream>

namespace dgs {

Digraph Digraph::from_arcs(int n, std::vector<Arc> arcs) {
  if (n < 0) throw DigraphError("vertex count must be non-negative");
  Digraph g;
  g.n_ = n;
  g.out_.assign(n, {});
  g.in_.assign(n, {});
  g.arc_set_.reserve(arcs.size() * 2);
  std::sort(arcs.begin(), arcs.end());
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw DigraphError("arc endpoint out of range: (" + std::to_string(u) + ", " +
                         std::to_string(v) + ") with n = " + std::to_string(n));
    if (u == v) throw DigraphError("self-loop at vertex " + std::to_string(u));
    if (!g.arc_set_.insert(key(u, v)).second)
      throw DigraphError("duplicate arc (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    g.out_[u].push_back(v);
    g.in_[v].push_back(u);
  }
  for (auto& nb : g.in_) std::sort(nb.begin(), nb.end());
  g.arcs_ = std::move(arcs);
  return g;
}

DegreeProfile degree_profile(const Digraph& g) {
  DegreeProfile p;
  p.out_degrees.reserve(g.order());
  p.in_degrees.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) {
    p.out_degrees.push_back(static_cast<int>(g.out_neighbors(v).size()));
    p.in_degrees.push_back(static_cast<int>(g.in_neighbors(v).size()));
  }
  return p;
}

long long zagreb_index(const Digraph& g) {
  long long z = 0;
  for (int v = 0; v < g.order(); ++v) {
    long long d = static_cast<long long>(g.out_neighbors(v).size());
    z += d * d;
  }
  return z;
}

long long closed_walks_2(const Digraph& g) {
  long long c2 = 0;
  for (auto [u, v] : g.arcs())
    if (g.has_arc(v, u)) ++c2;
  return c2;
}

namespace {

// Iterative Tarjan. Components are completed only after every component they
// reach, so the returned order is reverse topological in the condensation.
struct TarjanState {
  const Digraph& g;
  std::vector<int> index, lowlink;
  std::vector<bool> on_stack;
  std::vector<int> stack;
  std::vector<std::vector<int>> components;
  int counter = 0;

  explicit TarjanState(const Digraph& graph)
      : g(graph),
        index(graph.order(), -1),
        lowlink(graph.order(), 0),
        on_stack(graph.order(), false) {}

  void run(int root) {
    struct Frame {
      int v;
      std::size_t next_child;
    };
    std::vector<Frame> frames{{root, 0}};
    visit(root);
    while (!frames.empty()) {
      auto& [v, next_child] = frames.back();
      const auto& out = g.out_neighbors(v);
      if (next_child < out.size()) {
        int w = out[next_child++];
        if (index[w] < 0) {
          visit(w);
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
      } else {
        if (lowlink[v] == index[v]) {
          std::vector<int> comp;
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp.push_back(w);
          } while (w != v);
          std::sort(comp.begin(), comp.end());
          components.push_back(std::move(comp));
        }
        frames.pop_back();
        if (!frames.empty()) {
          int parent = frames.back().v;
          lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
        }
      }
    }
  }

  void visit(int v) {
    index[v] = lowlink[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
  }
};

}  // namespace

std::vector<std::vector<int>> strong_components(const Digraph& g) {
  TarjanState state(g);
  for (int v = 0; v < g.order(); ++v)
    if (state.index[v] < 0) state.run(v);
  return state.components;
}

bool is_dag(const Digraph& g) {
  for (const auto& comp : strong_components(g))
    if (comp.size() > 1) return false;
  return true;
}

bool is_symmetric(const Digraph& g) {
  for (auto [u, v] : g.arcs())
    if (!g.has_arc(v, u)) return false;
  return true;
}

bool is_out_regular(const Digraph& g) {
  if (g.order() == 0) return true;
  std::size_t d = g.out_neighbors(0).size();
  for (int v = 1; v < g.order(); ++v)
    if (g.out_neighbors(v).size() != d) return false;
  return true;
}

namespace {

int sorted_intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  auto it_a = a.begin();
  auto it_b = b.begin();
  while (it_a != a.end() && it_b != b.end()) {
    if (*it_a < *it_b)
      ++it_a;
    else if (*it_b < *it_a)
      ++it_b;
    else {
      ++count;
      ++it_a;
      ++it_b;
    }
  }
  return count;
}

}  // namespace

std::pair<int, int> common_neighbors(const Digraph& g, int u, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
    throw DigraphError("vertex out of range");
  if (u == v) throw DigraphError("common_neighbors requires distinct vertices");
  return {sorted_intersection_size(g.out_neighbors(u), g.out_neighbors(v)),
          sorted_intersection_size(g.in_neighbors(u), g.in_neighbors(v))};
}

Digraph parse_digraph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line()) throw DigraphError("empty input, expected header \"n m\"");
  int n, m;
  {
    std::istringstream hs(line);
    if (!(hs >> n >> m) || n < 0 || m < 0)
      throw DigraphError("malformed header, expected \"n m\"", line_no);
    std::string rest;
    if (hs >> rest) throw DigraphError("trailing content after header", line_no);
  }

  std::vector<Arc> arcs;
  arcs.reserve(m);
  for (int i = 0; i < m; ++i) {
    if (!next_line())
      throw DigraphError("expected " + std::to_string(m) + " arcs, got " + std::to_string(i));
    std::istringstream as(line);
    int u, v;
    if (!(as >> u >> v)) throw DigraphError("malformed arc line", line_no);
    std::string rest;
    if (as >> rest) throw DigraphError("trailing content after arc", line_no);
    try {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw DigraphError("arc endpoint out of range");
      if (u == v) throw DigraphError("self-loop");
      arcs.emplace_back(u, v);
    } catch (const DigraphError& e) {
      throw DigraphError(e.what(), line_no);
    }
  }
  if (next_line()) throw DigraphError("trailing content after arc list", line_no);

  try {
    return Digraph::from_arcs(n, std::move(arcs));
  } catch (const DigraphError& e) {
    throw DigraphError(e.what(), 0);
  }
}

std::string serialize_digraph(const Digraph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.arcs()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace dgs
