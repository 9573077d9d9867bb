#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qfv {

struct Arrow {
  int tail = 0;
  int head = 0;
  bool operator==(const Arrow&) const = default;
};

enum class QuiverErrorKind {
  InvalidArrow,
  CycleDetected,
  NotUniqueSource,
  Disconnected,
  DegenerateRank,
};

struct QuiverError : std::runtime_error {
  QuiverErrorKind kind;
  int vertex = -1;                 // offending vertex where applicable
  std::vector<int> cycle_witness;  // for CycleDetected
  QuiverError(QuiverErrorKind k, std::string msg, int v = -1, std::vector<int> cyc = {})
      : std::runtime_error(std::move(msg)), kind(k), vertex(v), cycle_witness(std::move(cyc)) {}
  static const char* kind_name(QuiverErrorKind k);
};

// The input quiver: finite, connected, acyclic, with unique source 0 and
// at least two arrows into every other vertex. Arrow position in the input
// list is its ray index and fixes every downstream tie-break.
class Quiver {
 public:
  int vertex_count() const { return vertex_count_; }
  int num_vertices_above_source() const { return vertex_count_ - 1; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int ray) const { return arrows_.at(static_cast<size_t>(ray)); }

  // Some topological order of the vertices (constructive acyclicity witness).
  std::vector<int> topological_order() const;

  friend Quiver validate_quiver(int vertex_count, const std::vector<Arrow>& arrows);

 private:
  int vertex_count_ = 1;
  std::vector<Arrow> arrows_;
};

// Validates the raw description and returns the quiver, or throws a
// QuiverError naming the first violated condition.
Quiver validate_quiver(int vertex_count, const std::vector<Arrow>& arrows);

// Incoming-arrow counts s_i for i = 1..l. s(i) requires 1 <= i <= l.
struct RankData {
  std::vector<int> counts;  // counts[i-1] = s_i
  int s(int i) const { return counts.at(static_cast<size_t>(i - 1)); }
  int size() const { return static_cast<int>(counts.size()); }
  bool operator==(const RankData&) const = default;
};

RankData rank_sums(const Quiver& q);

// Dimension of the associated variety: sum over i of (s_i - 1).
long long dimension(const Quiver& q);

}  // namespace qfv
