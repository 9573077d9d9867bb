#include "qfv/quiver.hpp"

#include <algorithm>
#include <numeric>

namespace qfv {

const char* QuiverError::kind_name(QuiverErrorKind k) {
  switch (k) {
    case QuiverErrorKind::InvalidArrow: return "InvalidArrow";
    case QuiverErrorKind::CycleDetected: return "CycleDetected";
    case QuiverErrorKind::NotUniqueSource: return "NotUniqueSource";
    case QuiverErrorKind::Disconnected: return "Disconnected";
    case QuiverErrorKind::DegenerateRank: return "DegenerateRank";
  }
  return "?";
}

namespace {

std::vector<int> find_cycle(int n, const std::vector<Arrow>& arrows,
                            const std::vector<char>& in_cycle_region) {
  // Every leftover vertex kept an incoming arrow from the leftover region
  // (that is why it was never removed), so a backward walk must close up.
  // Outgoing arrows can leave the region, so walking forward would not.
  std::vector<std::vector<int>> in(static_cast<size_t>(n));
  for (const auto& a : arrows)
    if (in_cycle_region[static_cast<size_t>(a.tail)] && in_cycle_region[static_cast<size_t>(a.head)])
      in[static_cast<size_t>(a.head)].push_back(a.tail);
  int start = -1;
  for (int v = 0; v < n; ++v)
    if (in_cycle_region[static_cast<size_t>(v)]) { start = v; break; }
  std::vector<int> walk;
  std::vector<int> pos(static_cast<size_t>(n), -1);
  int v = start;
  while (pos[static_cast<size_t>(v)] < 0) {
    pos[static_cast<size_t>(v)] = static_cast<int>(walk.size());
    walk.push_back(v);
    v = in[static_cast<size_t>(v)].front();
  }
  std::vector<int> cycle(walk.begin() + pos[static_cast<size_t>(v)], walk.end());
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

}  // namespace

Quiver validate_quiver(int vertex_count, const std::vector<Arrow>& arrows) {
  if (vertex_count < 1)
    throw QuiverError(QuiverErrorKind::InvalidArrow, "vertex count must be positive");
  for (size_t i = 0; i < arrows.size(); ++i) {
    const auto& a = arrows[i];
    if (a.tail < 0 || a.tail >= vertex_count || a.head < 0 || a.head >= vertex_count)
      throw QuiverError(QuiverErrorKind::InvalidArrow,
                        "arrow " + std::to_string(i) + " endpoint out of range");
    if (a.tail == a.head)
      throw QuiverError(QuiverErrorKind::CycleDetected,
                        "arrow " + std::to_string(i) + " is a loop at vertex " +
                            std::to_string(a.head),
                        a.head, {a.head});
  }

  const size_t n = static_cast<size_t>(vertex_count);

  // acyclicity via Kahn's algorithm; leftover vertices witness a cycle
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (const auto& a : arrows) {
    ++indeg[static_cast<size_t>(a.head)];
    out[static_cast<size_t>(a.tail)].push_back(a.head);
  }
  std::vector<int> queue;
  for (int v = 0; v < vertex_count; ++v)
    if (indeg[static_cast<size_t>(v)] == 0) queue.push_back(v);
  std::vector<char> removed(n, 0);
  size_t removed_count = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    removed[static_cast<size_t>(v)] = 1;
    ++removed_count;
    for (int h : out[static_cast<size_t>(v)])
      if (--indeg[static_cast<size_t>(h)] == 0) queue.push_back(h);
  }
  if (removed_count < n) {
    std::vector<char> region(n);
    for (size_t v = 0; v < n; ++v) region[v] = !removed[v];
    auto cyc = find_cycle(vertex_count, arrows, region);
    throw QuiverError(QuiverErrorKind::CycleDetected,
                      "cycle through vertex " + std::to_string(cyc.front()), cyc.front(), cyc);
  }

  // weak connectivity
  if (vertex_count > 1) {
    std::vector<std::vector<int>> und(n);
    for (const auto& a : arrows) {
      und[static_cast<size_t>(a.tail)].push_back(a.head);
      und[static_cast<size_t>(a.head)].push_back(a.tail);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    size_t reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : und[static_cast<size_t>(v)])
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached < n) {
      int witness = 0;
      for (int v = 0; v < vertex_count; ++v)
        if (!seen[static_cast<size_t>(v)]) { witness = v; break; }
      throw QuiverError(QuiverErrorKind::Disconnected,
                        "vertex " + std::to_string(witness) + " not connected to the source",
                        witness);
    }
  }

  // unique source 0
  std::vector<int> in_count(n, 0);
  for (const auto& a : arrows) ++in_count[static_cast<size_t>(a.head)];
  if (in_count[0] != 0)
    throw QuiverError(QuiverErrorKind::NotUniqueSource, "vertex 0 has incoming arrows", 0);
  for (int v = 1; v < vertex_count; ++v)
    if (in_count[static_cast<size_t>(v)] == 0)
      throw QuiverError(QuiverErrorKind::NotUniqueSource,
                        "vertex " + std::to_string(v) + " has no incoming arrow", v);

  // strictness: s_i >= 2 for every i >= 1
  for (int v = 1; v < vertex_count; ++v)
    if (in_count[static_cast<size_t>(v)] < 2)
      throw QuiverError(QuiverErrorKind::DegenerateRank,
                        "vertex " + std::to_string(v) + " has s = " +
                            std::to_string(in_count[static_cast<size_t>(v)]) + " < 2",
                        v);

  Quiver q;
  q.vertex_count_ = vertex_count;
  q.arrows_ = arrows;
  return q;
}

std::vector<int> Quiver::topological_order() const {
  const size_t n = static_cast<size_t>(vertex_count_);
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (const auto& a : arrows_) {
    ++indeg[static_cast<size_t>(a.head)];
    out[static_cast<size_t>(a.tail)].push_back(a.head);
  }
  std::vector<int> order;
  std::vector<int> ready;
  for (int v = 0; v < vertex_count_; ++v)
    if (indeg[static_cast<size_t>(v)] == 0) ready.push_back(v);
  while (!ready.empty()) {
    std::sort(ready.begin(), ready.end(), std::greater<>());
    int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (int h : out[static_cast<size_t>(v)])
      if (--indeg[static_cast<size_t>(h)] == 0) ready.push_back(h);
  }
  return order;
}

RankData rank_sums(const Quiver& q) {
  RankData r;
  r.counts.assign(static_cast<size_t>(q.num_vertices_above_source()), 0);
  for (const auto& a : q.arrows())
    if (a.head >= 1) ++r.counts[static_cast<size_t>(a.head - 1)];
  return r;
}

long long dimension(const Quiver& q) {
  long long d = 0;
  for (int c : rank_sums(q).counts) d += c - 1;
  return d;
}

}  // namespace qfv
