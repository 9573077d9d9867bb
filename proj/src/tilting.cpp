#include "qfv/tilting.hpp"

#include <algorithm>
#include <stdexcept>

namespace qfv {

std::strong_ordering compare_vertices(const CuboidVertex& k, const CuboidVertex& m) {
  if (k.size() != m.size())
    throw std::invalid_argument("compare_vertices: tuples of different length");
  for (size_t i = k.size(); i-- > 0;) {
    if (k[i] != m[i]) return k[i] <=> m[i];
  }
  return std::strong_ordering::equal;
}

std::string vertex_tuple_string(const CuboidVertex& m) {
  std::string out = "(";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(m[i]);
  }
  return out + ")";
}

CuboidVertex parse_vertex_tuple(const std::string& s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw std::invalid_argument("bad vertex tuple '" + s + "'");
  CuboidVertex out;
  std::string body = s.substr(1, s.size() - 2);
  if (body.empty()) return out;
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t comma = body.find(',', pos);
    std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    out.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

TiltingQuiver TiltingQuiver::build(const Quiver& q) {
  // The cuboid order machinery needs every arrow to increase the vertex
  // label; any acyclic unique-source quiver can be relabeled to satisfy this.
  for (size_t i = 0; i < q.arrows().size(); ++i)
    if (q.arrows()[i].tail >= q.arrows()[i].head)
      throw std::invalid_argument(
          "tilting quiver requires topologically labeled vertices (arrow " +
          std::to_string(i) + " goes from " + std::to_string(q.arrows()[i].tail) + " to " +
          std::to_string(q.arrows()[i].head) + "); relabel the input");

  TiltingQuiver tq;
  tq.base_ = q;
  tq.s_ = rank_sums(q);
  const int l = tq.s_.size();

  tq.radix_.assign(static_cast<size_t>(l) + 1, 1);
  for (int i = 1; i <= l; ++i)
    tq.radix_[static_cast<size_t>(i)] = tq.radix_[static_cast<size_t>(i - 1)] * tq.s_.s(i);
  long long total = tq.radix_[static_cast<size_t>(l)];

  // vertices in total order = mixed-radix counting with m_1 fastest
  tq.vertices_.reserve(static_cast<size_t>(total));
  CuboidVertex cur(static_cast<size_t>(l), 0);
  for (long long r = 0; r < total; ++r) {
    tq.vertices_.push_back(cur);
    for (int i = 0; i < l; ++i) {
      if (++cur[static_cast<size_t>(i)] < tq.s_.s(i + 1)) break;
      cur[static_cast<size_t>(i)] = 0;
    }
  }

  // Arrows in canonical order (head rank, then ray). Every box-fitting
  // translate is emitted outright: its label is a single prime divisor, and
  // a factorization through an intermediate summand would leave a factor
  // with empty label between distinct summands, which cannot exist.
  tq.in_arrows_.assign(tq.vertices_.size(), {});
  tq.out_arrows_.assign(tq.vertices_.size(), {});
  tq.base_arrow_ids_.assign(q.arrows().size(), -1);
  for (int head_rank = 0; head_rank < static_cast<int>(tq.vertices_.size()); ++head_rank) {
    const CuboidVertex& m = tq.vertices_[static_cast<size_t>(head_rank)];
    for (int ray = 0; ray < static_cast<int>(q.arrows().size()); ++ray) {
      int h = q.arrow(ray).head, t = q.arrow(ray).tail;
      if (m[static_cast<size_t>(h - 1)] < 1) continue;
      if (t >= 1 && m[static_cast<size_t>(t - 1)] > tq.s_.s(t) - 2) continue;
      CuboidVertex tail = m;
      --tail[static_cast<size_t>(h - 1)];
      if (t >= 1) ++tail[static_cast<size_t>(t - 1)];
      int tail_rank = tq.full_rank_of(tail);
      int id = static_cast<int>(tq.arrows_.size());
      tq.arrows_.push_back({ray, head_rank, tail_rank});
      tq.in_arrows_[static_cast<size_t>(head_rank)].push_back(id);
      tq.out_arrows_[static_cast<size_t>(tail_rank)].push_back(id);
    }
  }

  tq.base_vertex_ranks_.assign(static_cast<size_t>(l) + 1, 0);
  for (int j = 1; j <= l; ++j) {
    CuboidVertex ej(static_cast<size_t>(l), 0);
    ej[static_cast<size_t>(j - 1)] = 1;
    tq.base_vertex_ranks_[static_cast<size_t>(j)] = tq.full_rank_of(ej);
  }
  for (int ray = 0; ray < static_cast<int>(q.arrows().size()); ++ray) {
    int ej_rank = tq.base_vertex_ranks_[static_cast<size_t>(q.arrow(ray).head)];
    tq.base_arrow_ids_[static_cast<size_t>(ray)] = tq.find_arrow_full(ray, ej_rank);
  }

  tq.num_vertices_ = static_cast<int>(tq.vertices_.size());
  tq.num_arrows_ = static_cast<int>(tq.arrows_.size());
  return tq;
}

int TiltingQuiver::full_rank_of(const CuboidVertex& m) const {
  if (!in_cuboid(m)) throw std::out_of_range("vertex " + vertex_tuple_string(m) + " outside cuboid");
  long long r = 0;
  for (size_t i = 0; i < m.size(); ++i) r += m[i] * radix_[i];
  return static_cast<int>(r);
}

bool TiltingQuiver::in_cuboid(const CuboidVertex& m) const {
  if (static_cast<int>(m.size()) != length()) return false;
  for (size_t i = 0; i < m.size(); ++i)
    if (m[i] < 0 || m[i] > s_.s(static_cast<int>(i) + 1) - 1) return false;
  return true;
}

bool TiltingQuiver::contains(const CuboidVertex& m) const {
  return in_cuboid(m) && full_rank_of(m) < num_vertices_;
}

TiltingQuiver TiltingQuiver::truncate(const CuboidVertex& k) const {
  TiltingQuiver out = *this;
  int bound = full_rank_of(k);
  out.num_vertices_ = bound + 1;
  // arrows are head-major, so the retained set is a prefix
  int na = 0;
  while (na < static_cast<int>(arrows_.size()) && arrows_[static_cast<size_t>(na)].head <= bound)
    ++na;
  out.num_arrows_ = na;
  return out;
}

std::vector<int> TiltingQuiver::arrows_out_of(int vertex_rank) const {
  std::vector<int> out;
  for (int id : out_arrows_.at(static_cast<size_t>(vertex_rank)))
    if (id < num_arrows_) out.push_back(id);
  return out;
}

int TiltingQuiver::find_arrow_full(int ray, int head_rank) const {
  for (int id : in_arrows_.at(static_cast<size_t>(head_rank)))
    if (arrows_[static_cast<size_t>(id)].ray == ray) return id;
  return -1;
}

int TiltingQuiver::find_arrow(int ray, int head_rank) const {
  if (head_rank >= num_vertices_) return -1;
  int id = find_arrow_full(ray, head_rank);
  return id < num_arrows_ ? id : -1;
}

int TiltingQuiver::base_vertex_rank(int j) const {
  int r = base_vertex_ranks_.at(static_cast<size_t>(j));
  return r < num_vertices_ ? r : -1;
}

bool TiltingQuiver::is_base_vertex(int rank) const {
  for (int r : base_vertex_ranks_)
    if (r == rank) return true;
  return false;
}

int TiltingQuiver::base_arrow_id(int ray) const {
  int id = base_arrow_ids_.at(static_cast<size_t>(ray));
  return (id >= 0 && id < num_arrows_) ? id : -1;
}

CuboidVertex TiltingQuiver::du(int ray) const {
  CuboidVertex d(static_cast<size_t>(length()), 0);
  const Arrow& a = base_.arrow(ray);
  d[static_cast<size_t>(a.head - 1)] += 1;
  if (a.tail >= 1) d[static_cast<size_t>(a.tail - 1)] -= 1;
  return d;
}

std::string TiltingQuiver::arrow_key(int id) const {
  const TiltingArrow& a = arrow(id);
  return "r" + std::to_string(a.ray + 1) + "@" + vertex_tuple_string(vertex(a.head));
}

int TiltingQuiver::parse_arrow_key(const std::string& key) const {
  if (key.size() < 2 || key[0] != 'r') return -1;
  size_t at = key.find('@');
  if (at == std::string::npos) return -1;
  int ray;
  try {
    ray = std::stoi(key.substr(1, at - 1)) - 1;
    CuboidVertex m = parse_vertex_tuple(key.substr(at + 1));
    if (ray < 0 || ray >= static_cast<int>(base_.arrows().size()) || !in_cuboid(m)) return -1;
    int head = full_rank_of(m);
    return find_arrow(ray, head);
  } catch (const std::exception&) {
    return -1;
  }
}

}  // namespace qfv
