#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qfv/quiver.hpp"

namespace qfv {

// A lattice point (m_1,...,m_l) with 0 <= m_i <= s_i - 1.
using CuboidVertex = std::vector<int>;

// Total order on cuboid vertices: k < m when k_i < m_i at the largest
// index i where they differ.
std::strong_ordering compare_vertices(const CuboidVertex& k, const CuboidVertex& m);

std::string vertex_tuple_string(const CuboidVertex& m);
CuboidVertex parse_vertex_tuple(const std::string& s);

// Arrow of the tilting quiver: the translate of base arrow `ray` whose head
// sits at vertex rank `head`. Endpoints are stored as ranks in the total order.
struct TiltingArrow {
  int ray = 0;
  int head = 0;
  int tail = 0;
  bool operator==(const TiltingArrow&) const = default;
};

// The tilting quiver: vertices are the cuboid lattice points sorted by the
// total order, arrows are all box-fitting translates of the base arrows, in
// canonical order (head rank, then ray). A truncation keeps the downward
// closed vertex set {m : m <= bound}; because arrow order is head-major,
// truncation keeps an id-stable prefix of the arrow list, so arrow ids and
// point coordinates restrict by slicing.
class TiltingQuiver {
 public:
  static TiltingQuiver build(const Quiver& q);

  // Complete subquiver on {m : m <= k}. k must lie in the cuboid.
  TiltingQuiver truncate(const CuboidVertex& k) const;

  const Quiver& base() const { return base_; }
  const RankData& ranks() const { return s_; }
  int length() const { return s_.size(); }

  int num_vertices() const { return num_vertices_; }
  int num_arrows() const { return num_arrows_; }
  bool is_truncated() const { return num_vertices_ < static_cast<int>(vertices_.size()); }
  int full_num_vertices() const { return static_cast<int>(vertices_.size()); }

  const CuboidVertex& vertex(int rank) const { return vertices_.at(static_cast<size_t>(rank)); }
  const TiltingArrow& arrow(int id) const { return arrows_.at(static_cast<size_t>(id)); }

  // Rank in the total order of a tuple inside the cuboid bounds; ignores the
  // truncation cutoff. Throws if out of the cuboid.
  int full_rank_of(const CuboidVertex& m) const;
  bool in_cuboid(const CuboidVertex& m) const;
  // True when m is a vertex of this (possibly truncated) quiver.
  bool contains(const CuboidVertex& m) const;

  // Incoming arrow ids at a vertex (within range by construction).
  const std::vector<int>& arrows_into(int vertex_rank) const {
    return in_arrows_.at(static_cast<size_t>(vertex_rank));
  }
  // Outgoing arrow ids, filtered to the truncation range.
  std::vector<int> arrows_out_of(int vertex_rank) const;

  int find_arrow(int ray, int head_rank) const;  // -1 when absent

  // Base-quiver embedding: e_0 = origin, e_j = j-th unit vector.
  int base_vertex_rank(int j) const;  // -1 if truncated away
  bool is_base_vertex(int rank) const;
  // Arrow id of the base translate of `ray` (head at e_{h(ray)}); -1 if truncated away.
  int base_arrow_id(int ray) const;

  // Displacement of a ray: e_{h} - e_{t} with e_0 = 0.
  CuboidVertex du(int ray) const;

  // "r{ray+1}@(m_1,...,m_l)" — the cross-format arrow key (rays are 1-based
  // in all output).
  std::string arrow_key(int id) const;
  int parse_arrow_key(const std::string& key) const;  // -1 when unknown

 private:
  int find_arrow_full(int ray, int head_rank) const;

  Quiver base_;
  RankData s_;
  std::vector<long long> radix_;  // radix_[i] = prod of s_1..s_i
  std::vector<CuboidVertex> vertices_;
  std::vector<TiltingArrow> arrows_;
  std::vector<std::vector<int>> in_arrows_;
  std::vector<std::vector<int>> out_arrows_;
  std::vector<int> base_vertex_ranks_;
  std::vector<int> base_arrow_ids_;
  int num_vertices_ = 0;
  int num_arrows_ = 0;
};

}  // namespace qfv
