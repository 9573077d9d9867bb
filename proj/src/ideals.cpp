#include "qfv/ideals.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace qfv {

Binomial make_binomial(Monomial a, Monomial b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a == b) throw std::invalid_argument("make_binomial: monomials coincide");
  if (b < a) std::swap(a, b);
  return Binomial{std::move(a), std::move(b)};
}

std::vector<PathGroup> path_groups(const TiltingQuiver& tq, std::optional<int> max_len,
                                   long long cap) {
  using Key = std::tuple<int, int, std::vector<int>>;  // tail, head, divisor
  std::map<Key, std::vector<Path>> groups;
  long long count = 0;

  // depth-first over arrow continuations from each start vertex
  std::vector<int> stack_arrows;
  auto record = [&](int tail) {
    if (++count > cap)
      throw PathExplosion("path enumeration exceeded cap of " + std::to_string(cap));
    std::vector<int> divisor;
    divisor.reserve(stack_arrows.size());
    for (int id : stack_arrows) divisor.push_back(tq.arrow(id).ray);
    std::sort(divisor.begin(), divisor.end());
    int head = tq.arrow(stack_arrows.back()).head;
    groups[{tail, head, std::move(divisor)}].push_back(Path{stack_arrows});
  };

  auto extend = [&](auto&& self, int start, int at) -> void {
    if (max_len && static_cast<int>(stack_arrows.size()) >= *max_len) return;
    for (int id : tq.arrows_out_of(at)) {
      stack_arrows.push_back(id);
      record(start);
      self(self, start, tq.arrow(id).head);
      stack_arrows.pop_back();
    }
  };
  for (int v = 0; v < tq.num_vertices(); ++v) extend(extend, v, v);

  std::vector<PathGroup> out;
  out.reserve(groups.size());
  for (auto& [key, paths] : groups) {
    // canonical in-group order: by support monomial
    std::sort(paths.begin(), paths.end(), [](const Path& a, const Path& b) {
      auto sa = a.arrow_ids, sb = b.arrow_ids;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      return sa < sb;
    });
    out.push_back(PathGroup{std::get<0>(key), std::get<1>(key), std::get<2>(key),
                            std::move(paths)});
  }
  return out;
}

std::vector<Binomial> ideal_R_generators(const TiltingQuiver& tq, std::optional<int> max_len,
                                         long long cap) {
  std::set<Binomial> gens;
  for (const auto& g : path_groups(tq, max_len, cap)) {
    if (g.paths.size() < 2) continue;
    std::vector<Monomial> supports;
    supports.reserve(g.paths.size());
    for (const auto& p : g.paths) {
      Monomial m = p.arrow_ids;
      std::sort(m.begin(), m.end());
      supports.push_back(std::move(m));
    }
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    for (size_t i = 1; i < supports.size(); ++i)
      gens.insert(make_binomial(supports[0], supports[i]));
  }
  return {gens.begin(), gens.end()};
}

std::vector<std::vector<int>> irrelevant_ideal(const TiltingQuiver& tq) {
  std::vector<std::vector<int>> comps;
  comps.reserve(static_cast<size_t>(tq.num_vertices()) - 1);
  for (int v = 1; v < tq.num_vertices(); ++v) comps.push_back(tq.arrows_into(v));
  return comps;
}

IntMat pi_matrix(const TiltingQuiver& tq) {
  const int nv = tq.num_vertices();
  const int nr = static_cast<int>(tq.base().arrows().size());
  IntMat m(nv + nr, tq.num_arrows());
  for (int id = 0; id < tq.num_arrows(); ++id) {
    const TiltingArrow& a = tq.arrow(id);
    m.at(a.head, id) += 1;
    m.at(a.tail, id) -= 1;
    m.at(nv + a.ray, id) = 1;
  }
  return m;
}

LatticeBasis kernel_basis(const IntMat& pi) { return LatticeBasis{integer_kernel_basis(pi)}; }

std::vector<Binomial> lattice_binomials(const LatticeBasis& basis) {
  std::vector<Binomial> out;
  out.reserve(basis.vectors.size());
  for (const auto& u : basis.vectors) {
    Monomial pos, neg;
    for (size_t id = 0; id < u.size(); ++id) {
      if (u[id].is_zero()) continue;
      long long e = u[id].to_ll();
      for (long long i = 0; i < std::abs(e); ++i)
        (e > 0 ? pos : neg).push_back(static_cast<int>(id));
    }
    out.push_back(make_binomial(std::move(pos), std::move(neg)));
  }
  return out;
}

}  // namespace qfv
