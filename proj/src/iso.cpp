#include "homalg/iso.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "homalg/algebra.hpp"
#include "homalg/error.hpp"

namespace homalg {
namespace {

void check_cap(const Graph& g, std::size_t max_order) {
  if (g.order() > max_order)
    throw ResourceError("isomorphism search limited to " + std::to_string(max_order) +
                        " vertices, got " + std::to_string(g.order()));
}

std::size_t color_count(const std::vector<std::size_t>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

std::vector<std::size_t> loop_colors(const Graph& g) {
  std::vector<std::size_t> c(g.order());
  for (Vertex v = 0; v < g.order(); ++v) c[v] = g.has_loop(v) ? 1 : 0;
  return c;
}

std::vector<std::size_t> individualize(const std::vector<std::size_t>& colors, Vertex x,
                                       Vertex y) {
  std::vector<std::size_t> out(colors.size());
  for (std::size_t u = 0; u < colors.size(); ++u)
    out[u] = 2 * colors[u] + ((u == x || u == y) ? 0 : 1);
  return out;
}

/// Transposing u and v is an automorphism of g.
bool twins(const Graph& g, Vertex u, Vertex v) {
  if (g.has_loop(u) != g.has_loop(v)) return false;
  std::vector<Word> ru(g.row(u).begin(), g.row(u).end()), rv(g.row(v).begin(), g.row(v).end());
  for (auto* r : {&ru, &rv}) {
    bits::reset(*r, u);
    bits::reset(*r, v);
  }
  return ru == rv;
}

/// Smallest non-singleton cell in colour order.
std::vector<Vertex> target_cell(const std::vector<std::size_t>& colors, std::size_t k) {
  std::vector<std::size_t> size(k, 0);
  for (auto c : colors) ++size[c];
  std::size_t best = k;
  for (std::size_t c = 0; c < k; ++c)
    if (size[c] > 1 && (best == k || size[c] < size[best])) best = c;
  std::vector<Vertex> cell;
  for (Vertex v = 0; v < colors.size(); ++v)
    if (colors[v] == best) cell.push_back(v);
  return cell;
}

class CanonicalSearch {
public:
  explicit CanonicalSearch(const Graph& g) : g_(g) {}

  void run() { search(refine_colors(g_, loop_colors(g_))); }

  std::vector<std::uint8_t> best_code;
  std::vector<Vertex> best_perm;

private:
  void search(const std::vector<std::size_t>& colors) {
    const std::size_t n = g_.order(), k = color_count(colors);
    if (k == n) {
      leaf(colors);
      return;
    }
    const auto cell = target_cell(colors, k);
    std::vector<Vertex> tried;
    for (Vertex v : cell) {
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(g_, u, v); }))
        continue;
      tried.push_back(v);
      search(refine_colors(g_, individualize(colors, v, v)));
    }
  }

  void leaf(const std::vector<std::size_t>& perm) {
    const std::size_t n = g_.order();
    std::vector<Vertex> inv(n);
    for (Vertex v = 0; v < n; ++v) inv[perm[v]] = v;
    std::vector<std::uint8_t> code;
    code.reserve(n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) code.push_back(g_.adjacent(inv[i], inv[j]) ? 1 : 0);
    if (best_perm.empty() || code < best_code) {
      best_code = std::move(code);
      best_perm.assign(perm.begin(), perm.end());
    }
  }

  const Graph& g_;
};

class IsoSearch {
public:
  IsoSearch(const Graph& a, const Graph& b) : a_(a), b_(b), u_(disjoint_union(a, b)) {}

  std::vector<Vertex> run() {
    std::vector<std::size_t> colors = loop_colors(u_);
    if (search(colors)) return map_;
    return {};
  }

private:
  bool search(std::vector<std::size_t> colors) {
    colors = refine_colors(u_, std::move(colors));
    const std::size_t na = a_.order(), k = color_count(colors);
    std::vector<std::size_t> in_a(k, 0), in_b(k, 0);
    for (Vertex v = 0; v < u_.order(); ++v) ++(v < na ? in_a : in_b)[colors[v]];
    if (in_a != in_b) return false;
    if (k == na) return leaf(colors);
    std::size_t best = k;
    for (std::size_t c = 0; c < k; ++c)
      if (in_a[c] > 1 && (best == k || in_a[c] < in_a[best])) best = c;
    Vertex x = 0;
    while (colors[x] != best) ++x;
    std::vector<Vertex> tried;
    for (Vertex y = na; y < u_.order(); ++y) {
      if (colors[y] != best) continue;
      if (std::any_of(tried.begin(), tried.end(),
                      [&](Vertex t) { return twins(b_, t - na, y - na); }))
        continue;
      tried.push_back(y);
      if (search(individualize(colors, x, y))) return true;
    }
    return false;
  }

  bool leaf(const std::vector<std::size_t>& colors) {
    const std::size_t na = a_.order();
    std::vector<Vertex> by_color(na);
    for (Vertex y = na; y < u_.order(); ++y) by_color[colors[y]] = y - na;
    map_.assign(na, 0);
    for (Vertex x = 0; x < na; ++x) map_[x] = by_color[colors[x]];
    for (const auto& [u, v] : a_.edges())
      if (!b_.adjacent(map_[u], map_[v])) return false;
    return a_.edge_count() == b_.edge_count();
  }

  const Graph& a_;
  const Graph& b_;
  Graph u_;
  std::vector<Vertex> map_;
};

}  // namespace

std::vector<std::size_t> refine_colors(const Graph& g, std::vector<std::size_t> colors) {
  const std::size_t n = g.order();
  using Signature = std::pair<std::size_t, std::vector<std::size_t>>;
  std::size_t k = 0;
  // renumber once so the input colour values themselves do not leak through
  {
    std::vector<std::size_t> sorted(colors.begin(), colors.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto& c : colors) c = std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin();
    k = sorted.size();
  }
  std::vector<Signature> sig(n);
  std::vector<Vertex> idx(n);
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = colors[v];
      sig[v].second.clear();
      bits::for_each(g.row(v), [&](std::size_t u) { sig[v].second.push_back(colors[u]); });
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](Vertex x, Vertex y) { return sig[x] < sig[y]; });
    std::vector<std::size_t> next(n);
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++c;
      next[idx[i]] = c;
    }
    const std::size_t k2 = n ? c + 1 : 0;
    colors = std::move(next);
    if (k2 == k) return colors;
    k = k2;
  }
}

std::string CanonicalForm::id() const {
  static const char* hex = "0123456789abcdef";
  std::string out = std::to_string(order) + ":";
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    unsigned nibble = 0;
    for (std::size_t j = 0; j < 4; ++j)
      nibble = (nibble << 1) | ((i + j < bits.size() && bits[i + j]) ? 1u : 0u);
    out += hex[nibble];
  }
  return out;
}

CanonicalForm canonical_form(const Graph& g, std::size_t max_order) {
  check_cap(g, max_order);
  CanonicalSearch s(g);
  s.run();
  return {g.order(), std::move(s.best_code)};
}

std::vector<Vertex> canonical_labeling(const Graph& g, std::size_t max_order) {
  check_cap(g, max_order);
  CanonicalSearch s(g);
  s.run();
  return s.best_perm;
}

Canonicalization canonicalize(const Graph& g, std::size_t max_order) {
  check_cap(g, max_order);
  CanonicalSearch s(g);
  s.run();
  return {{g.order(), std::move(s.best_code)}, std::move(s.best_perm)};
}

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b,
                                                    std::size_t max_order) {
  check_cap(a, max_order);
  check_cap(b, max_order);
  if (a.order() != b.order() || a.edge_count() != b.edge_count() ||
      a.loop_count() != b.loop_count())
    return std::nullopt;
  if (a.order() == 0) return std::vector<Vertex>{};
  auto map = IsoSearch(a, b).run();
  if (map.empty()) return std::nullopt;
  return map;
}

bool is_isomorphic(const Graph& a, const Graph& b, std::size_t max_order) {
  check_cap(a, max_order);
  check_cap(b, max_order);
  return find_isomorphism(a, b, max_order).has_value();
}

}  // namespace homalg
