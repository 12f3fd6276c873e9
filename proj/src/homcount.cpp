#include "homalg/homcount.hpp"

#include <algorithm>
#include <map>
#include <thread>
#include <vector>

#include "homalg/algebra.hpp"
#include "homalg/error.hpp"

namespace homalg {
namespace {

using Acc = unsigned __int128;

HomCount from_acc(Acc x) {
  HomCount hi = static_cast<std::uint64_t>(x >> 64);
  return (hi << 64) + static_cast<std::uint64_t>(x);
}

/// Components of g grouped by identical relabeled adjacency, in order of
/// first appearance.
struct ComponentClass {
  Graph graph;
  std::size_t multiplicity;
};

std::vector<ComponentClass> component_classes(const Graph& g) {
  const auto comps = components(g);
  if (comps.size() == 1) return {{g, 1}};
  std::vector<ComponentClass> out;
  std::map<std::vector<Word>, std::size_t> index;
  for (const auto& c : comps) {
    Graph sub = induced_subgraph(g, c);
    std::vector<Word> key{static_cast<Word>(sub.order())};
    for (Vertex v = 0; v < sub.order(); ++v) {
      const auto r = sub.row(v);
      key.insert(key.end(), r.begin(), r.end());
    }
    const auto [it, fresh] = index.try_emplace(std::move(key), out.size());
    if (fresh)
      out.push_back({std::move(sub), 1});
    else
      ++out[it->second].multiplicity;
  }
  return out;
}

/// Backtracking count of homomorphisms from a connected g into h.
class ConnectedCounter {
public:
  ConnectedCounter(const Graph& g, const Graph& h) : h_(h), stride_(h.row_words()) {
    const std::size_t m = g.order();
    // Breadth-first order from a vertex of maximum degree (smallest index on ties).
    Vertex root = 0;
    for (Vertex v = 1; v < m; ++v)
      if (g.degree(v) - g.has_loop(v) > g.degree(root) - g.has_loop(root)) root = v;
    std::vector<std::size_t> position(m, m);
    order_.push_back(root);
    position[root] = 0;
    for (std::size_t head = 0; head < order_.size(); ++head)
      for (Vertex u : g.neighbors(order_[head]))
        if (position[u] == m) {
          position[u] = order_.size();
          order_.push_back(u);
        }
    back_.resize(m);
    looped_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      looped_[i] = g.has_loop(order_[i]);
      for (Vertex u : g.neighbors(order_[i]))
        if (position[u] < i) back_[i].push_back(position[u]);
    }
    all_.assign(stride_, 0);
    bits::fill(all_, h.order());
    looped_set_.assign(stride_, 0);
    for (Vertex v = 0; v < h.order(); ++v)
      if (h.has_loop(v)) bits::set(looped_set_, v);
  }

  HomCount count(unsigned parallelism) const {
    const std::size_t m = order_.size();
    if (m == 0) return 1;
    const auto& root_init = looped_[0] ? looped_set_ : all_;
    if (m == 1) return bits::count(root_init);
    const auto roots = bits::to_indices(root_init);
    const unsigned workers =
        std::max(1u, std::min<unsigned>(parallelism, static_cast<unsigned>(roots.size())));
    std::vector<Acc> partial(workers, 0);
    auto run = [&](unsigned w) {
      Scratch s(m, stride_);
      for (std::size_t r = w; r < roots.size(); r += workers) {
        s.image[0] = roots[r];
        partial[w] += descend(1, s);
      }
    };
    if (workers == 1) {
      run(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
      for (auto& t : pool) t.join();
    }
    HomCount total = 0;
    for (Acc p : partial) total += from_acc(p);
    return total;
  }

private:
  struct Scratch {
    Scratch(std::size_t m, std::size_t stride) : image(m), cand(m * stride), stride(stride) {}
    std::vector<Vertex> image;
    std::vector<Word> cand;
    std::size_t stride;
    std::span<Word> level(std::size_t i) { return {cand.data() + i * stride, stride}; }
  };

  Acc descend(std::size_t i, Scratch& s) const {
    auto cand = s.level(i);
    const auto& back = back_[i];
    if (!bits::assign_and(cand, looped_[i] ? looped_set_ : all_, h_.row(s.image[back[0]])))
      return 0;
    for (std::size_t k = 1; k < back.size(); ++k)
      if (!bits::and_into(cand, h_.row(s.image[back[k]]))) return 0;
    if (i + 1 == order_.size()) return bits::count(cand);
    Acc total = 0;
    bits::for_each(std::span<const Word>(cand), [&](std::size_t x) {
      s.image[i] = x;
      total += descend(i + 1, s);
    });
    return total;
  }

  const Graph& h_;
  std::size_t stride_;
  std::vector<Vertex> order_;
  std::vector<std::vector<std::size_t>> back_;
  std::vector<char> looped_;
  std::vector<Word> all_, looped_set_;
};

HomCount ipow(const HomCount& base, std::size_t e) { return boost::multiprecision::pow(base, e); }

}  // namespace

HomCount parse_decimal(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw FormatError("expected a decimal integer string, got '" + s + "'");
  return HomCount(s);
}

HomCount hom_bruteforce(const Graph& g, const Graph& h, std::uint64_t cap) {
  const std::size_t n = g.order(), q = h.order();
  const std::uint64_t total = checked_power(q, n);
  if (total > cap)
    throw ResourceError("brute force needs " + std::to_string(q) + "^" + std::to_string(n) +
                        " candidate maps (cap " + std::to_string(cap) + ")");
  if (n == 0) return 1;
  if (q == 0) return 0;
  const auto edges = g.edges();
  std::vector<Vertex> phi(n, 0);
  std::uint64_t count = 0;
  for (std::uint64_t t = 0; t < total; ++t) {
    bool ok = true;
    for (const auto& [u, v] : edges)
      if (!h.adjacent(phi[u], phi[v])) {
        ok = false;
        break;
      }
    count += ok;
    for (std::size_t i = 0; i < n && ++phi[i] == q; ++i) phi[i] = 0;
  }
  return count;
}

HomCount hom_count(const Graph& g, const Graph& h, const CountOptions& options) {
  if (g.order() == 0) return 1;
  if (h.order() == 0) return 0;
  const auto g_classes = component_classes(g);
  const auto h_classes = component_classes(h);
  HomCount total = 1;
  for (const auto& gc : g_classes) {
    HomCount per = 0;
    for (const auto& hc : h_classes) {
      const HomCount c = ConnectedCounter(gc.graph, hc.graph).count(options.parallelism);
      per += c * hc.multiplicity;
    }
    if (per == 0) return 0;
    total *= ipow(per, gc.multiplicity);
  }
  return total;
}

HomCount surjections(std::size_t a, std::size_t s) {
  if (s > a) return 0;
  // sum_j (-1)^(s-j) C(s, j) j^a
  boost::multiprecision::cpp_int total = 0, binom = 1;
  for (std::size_t j = 0; j <= s; ++j) {
    const auto term = binom * ipow(HomCount(j), a);
    if ((s - j) % 2) total -= term; else total += term;
    binom = binom * (s - j) / (j + 1);
  }
  return total;
}

HomCount hom_from_complete_bipartite(std::size_t a, std::size_t b, const Graph& h) {
  if (a == 0 || b == 0) throw ParameterError("K_{a,b} needs a, b >= 1");
  HomCount total = 0;
  for (const auto& hc : component_classes(h)) {
    const Graph& c = hc.graph;
    const std::size_t n = c.order(), stride = c.row_words();
    // tally[s][k]: subsets of size s whose common neighbourhood has k vertices
    std::vector<std::vector<std::uint64_t>> tally(a + 1, std::vector<std::uint64_t>(n + 1, 0));
    std::vector<Word> inter((a + 1) * stride), reach(stride);
    auto level = [&](std::size_t s) { return std::span<Word>(inter.data() + s * stride, stride); };
    auto dfs = [&](auto&& self, Vertex last, std::size_t s) -> void {
      const auto cur = level(s);
      ++tally[s][bits::count(cur)];
      if (s == a) return;
      // next element must have a neighbour in the current intersection
      std::fill(reach.begin(), reach.end(), 0);
      bits::for_each(std::span<const Word>(cur), [&](std::size_t x) {
        const auto r = c.row(x);
        for (std::size_t w = 0; w < stride; ++w) reach[w] |= r[w];
      });
      const auto nxt = bits::to_indices(reach);
      for (Vertex v : nxt) {
        if (v <= last) continue;
        if (bits::assign_and(level(s + 1), cur, c.row(v))) self(self, v, s + 1);
      }
    };
    for (Vertex v = 0; v < n; ++v) {
      const auto r = c.row(v);
      if (!bits::any(r)) continue;
      std::copy(r.begin(), r.end(), level(1).begin());
      dfs(dfs, v, 1);
    }
    HomCount sum = 0;
    for (std::size_t s = 1; s <= a; ++s) {
      HomCount inner = 0;
      for (std::size_t k = 1; k <= n; ++k)
        if (tally[s][k]) inner += HomCount(tally[s][k]) * ipow(HomCount(k), b);
      if (inner != 0) sum += inner * surjections(a, s);
    }
    total += sum * hc.multiplicity;
  }
  return total;
}

HomCount hom_from_complete(std::size_t q, const Graph& h) {
  if (q == 0) throw ParameterError("K_q needs q >= 1");
  if (q == 1) return h.order();
  HomCount total = 0;
  for (const auto& hc : component_classes(h)) {
    const Graph& c = hc.graph;
    const std::size_t stride = c.row_words();
    std::vector<Word> cand(q * stride);
    auto level = [&](std::size_t i) { return std::span<Word>(cand.data() + i * stride, stride); };
    // level(i) holds the common neighbourhood of the first i entries
    auto extend = [&](auto&& self, std::size_t i) -> Acc {
      const auto cur = level(i);
      if (i + 1 == q) return bits::count(cur);
      Acc sum = 0;
      bits::for_each(std::span<const Word>(cur), [&](std::size_t x) {
        if (bits::assign_and(level(i + 1), cur, c.row(x))) sum += self(self, i + 1);
      });
      return sum;
    };
    Acc sum = 0;
    for (Vertex v = 0; v < c.order(); ++v) {
      const auto r = c.row(v);
      std::copy(r.begin(), r.end(), level(1).begin());
      if (bits::any(r)) sum += extend(extend, 1);
    }
    total += from_acc(sum) * hc.multiplicity;
  }
  return total;
}

HomCount count_loops(const Graph& g) { return g.loop_count(); }

}  // namespace homalg
