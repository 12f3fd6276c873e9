#include "homalg/enumerate.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "homalg/error.hpp"
#include "homalg/iso.hpp"

namespace homalg {
namespace {

class RegularSearch {
public:
  RegularSearch(std::size_t n, std::size_t d) : n_(n), d_(d), g_(n), deg_(n, 0) {}

  template <class Emit>
  void run(Emit&& emit) {
    row(0, emit);
  }

private:
  template <class Emit>
  void row(Vertex i, Emit& emit) {
    if (i == n_) {
      emit(g_);
      return;
    }
    const std::size_t need = d_ - deg_[i];
    if (need == 0) {
      row(i + 1, emit);
      return;
    }
    // Candidates grouped by adjacency to rows already fixed; swapping two
    // members of a group is a symmetry of the partial matrix, so only
    // prefixes of each group are tried.
    std::vector<std::vector<Vertex>> groups;
    std::map<Word, std::size_t> group_of;
    const Word mask = (Word{1} << i) - 1;
    for (Vertex j = i + 1; j < n_; ++j) {
      if (deg_[j] >= d_) continue;
      const Word key = g_.row(j)[0] & mask;
      const auto [it, fresh] = group_of.try_emplace(key, groups.size());
      if (fresh) groups.emplace_back();
      groups[it->second].push_back(j);
    }
    std::size_t available = 0;
    for (const auto& grp : groups) available += grp.size();
    if (available < need) return;
    std::vector<std::size_t> take(groups.size(), 0);
    choose(i, 0, need, groups, take, emit);
  }

  template <class Emit>
  void choose(Vertex i, std::size_t k, std::size_t left,
              const std::vector<std::vector<Vertex>>& groups, std::vector<std::size_t>& take,
              Emit& emit) {
    if (k == groups.size()) {
      if (left != 0) return;
      std::vector<Vertex> picked;
      for (std::size_t g = 0; g < groups.size(); ++g)
        for (std::size_t t = 0; t < take[g]; ++t) picked.push_back(groups[g][t]);
      for (Vertex j : picked) {
        g_.add_edge(i, j);
        ++deg_[i];
        ++deg_[j];
      }
      bool feasible = true;
      for (Vertex j = i + 1; j < n_ && feasible; ++j)
        if (d_ - deg_[j] > n_ - i - 2) feasible = false;
      if (feasible) row(i + 1, emit);
      for (Vertex j : picked) {
        g_.remove_edge(i, j);
        --deg_[i];
        --deg_[j];
      }
      return;
    }
    const std::size_t hi = std::min(left, groups[k].size());
    for (std::size_t t = 0; t <= hi; ++t) {
      take[k] = t;
      choose(i, k + 1, left - t, groups, take, emit);
    }
    take[k] = 0;
  }

  std::size_t n_, d_;
  Graph g_;
  std::vector<std::size_t> deg_;
};

}  // namespace

std::vector<Graph> enumerate_regular(std::size_t n, std::size_t d, bool connected_only,
                                     std::size_t max_order) {
  if (n > max_order)
    throw ResourceError("regular enumeration limited to " + std::to_string(max_order) +
                        " vertices");
  if (d >= n && !(n == 0 && d == 0))
    throw ParameterError("degree " + std::to_string(d) + " needs more than " +
                         std::to_string(d) + " vertices");
  if ((n * d) % 2)
    throw ParameterError("no " + std::to_string(d) + "-regular graph on " + std::to_string(n) +
                         " vertices: n*d is odd");
  if (n > 63) throw ResourceError("regular enumeration supports at most 63 vertices");

  // Complements of (n-1-d)-regular graphs are d-regular; search the sparser side.
  const bool flip = n > 0 && 2 * d > n - 1;
  const std::size_t search_d = flip ? n - 1 - d : d;
  const std::size_t iso_cap = std::max(n, kDefaultIsoCap);
  std::map<CanonicalForm, Graph> found;
  RegularSearch(n, search_d).run([&](const Graph& g) {
    Graph h = flip ? complement(g) : g;
    if (connected_only && !is_connected(h)) return;
    auto c = canonicalize(h, iso_cap);
    if (found.count(c.form)) return;
    Graph canon = permute(h, c.labeling);
    found.emplace(std::move(c.form), std::move(canon));
  });
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [form, g] : found) out.push_back(std::move(g));
  return out;
}

void for_each_regular(std::size_t n, std::size_t d, bool connected_only,
                      const std::function<void(const Graph&)>& visit, std::size_t max_order) {
  for (const auto& g : enumerate_regular(n, d, connected_only, max_order)) visit(g);
}

std::vector<std::vector<Graph>> enumerate_graphs(std::size_t max_order, bool loops) {
  const std::size_t iso_cap = std::max(max_order, kDefaultIsoCap);
  std::vector<std::vector<Graph>> out(max_order + 1);
  out[0].push_back(Graph(0));
  for (std::size_t n = 1; n <= max_order; ++n) {
    std::map<CanonicalForm, Graph> found;
    const std::size_t options = std::size_t{1} << (loops ? n : n - 1);
    for (const auto& base : out[n - 1]) {
      for (std::size_t mask = 0; mask < options; ++mask) {
        Graph g(n);
        for (const auto& [u, v] : base.edges()) g.add_edge(u, v);
        for (Vertex u = 0; u < n; ++u)
          if ((mask >> u) & 1) g.add_edge(u, n - 1);
        auto c = canonicalize(g, iso_cap);
        if (found.count(c.form)) continue;
        Graph canon = permute(g, c.labeling);
        found.emplace(std::move(c.form), std::move(canon));
      }
    }
    for (auto& [form, g] : found) out[n].push_back(std::move(g));
  }
  return out;
}

}  // namespace homalg
