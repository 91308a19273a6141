#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace dgs {

using Arc = std::pair<int, int>;

/// Raised by parse_digraph and the Digraph constructor on invalid input.
/// `line` is 1-based when the error originates from a text file, 0 otherwise.
class DigraphError : public std::runtime_error {
public:
  DigraphError(std::string msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + std::move(msg)
                                    : std::move(msg)),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// Loop-free simple digraph on vertices 0..n-1. Immutable after construction;
/// safe to share across threads.
class Digraph {
public:
  /// Validates endpoints, rejects self-loops and duplicate arcs.
  static Digraph from_arcs(int n, std::vector<Arc> arcs);

  int order() const { return n_; }
  int size() const { return static_cast<int>(arcs_.size()); }

  bool has_arc(int u, int v) const {
    return arc_set_.count(key(u, v)) != 0;
  }

  const std::vector<int>& out_neighbors(int u) const { return out_[u]; }
  const std::vector<int>& in_neighbors(int u) const { return in_[u]; }

  /// Arcs in lexicographic order.
  const std::vector<Arc>& arcs() const { return arcs_; }

private:
  Digraph() = default;
  static std::uint64_t key(int u, int v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
  }

  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;  // sorted
  std::vector<std::vector<int>> in_;   // sorted
  std::unordered_set<std::uint64_t> arc_set_;
};

struct DegreeProfile {
  std::vector<int> out_degrees;
  std::vector<int> in_degrees;
};

DegreeProfile degree_profile(const Digraph& g);

/// First out-degree Zagreb index, sum of squared out-degrees.
long long zagreb_index(const Digraph& g);

/// Number of closed walks of length 2 (twice the digon count).
long long closed_walks_2(const Digraph& g);

/// Strongly connected components, listed so that every arc between distinct
/// components goes from a later-listed component to an earlier-listed one
/// (reverse topological order of the condensation). Vertices inside a
/// component are sorted ascending.
std::vector<std::vector<int>> strong_components(const Digraph& g);

bool is_dag(const Digraph& g);
bool is_symmetric(const Digraph& g);
bool is_out_regular(const Digraph& g);

/// (|N+(u) ∩ N+(v)|, |N-(u) ∩ N-(v)|). Requires u != v, both in range.
std::pair<int, int> common_neighbors(const Digraph& g, int u, int v);

/// Edge-list text format: first line "n m", then m lines "u v" (0-indexed).
Digraph parse_digraph(const std::string& text);
std::string serialize_digraph(const Digraph& g);

}  // namespace dgs
