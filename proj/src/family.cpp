#include "homalg/family.hpp"

#include <string>

#include "homalg/error.hpp"

namespace homalg {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

}  // namespace

Graph make_family(const FamilyId& id) {
  return std::visit(
      overloaded{
          [](family::Complete f) {
            require(f.q >= 1, "Complete(q) needs q >= 1");
            Graph g(f.q);
            for (Vertex u = 0; u < f.q; ++u)
              for (Vertex v = u + 1; v < f.q; ++v) g.add_edge(u, v);
            return g;
          },
          [](family::CompleteBipartite f) {
            require(f.a >= 1 && f.b >= 1, "CompleteBipartite(a, b) needs a, b >= 1");
            Graph g(f.a + f.b);
            for (Vertex u = 0; u < f.a; ++u)
              for (Vertex v = 0; v < f.b; ++v) g.add_edge(u, f.a + v);
            return g;
          },
          [](family::Cycle f) {
            require(f.n >= 3, "Cycle(n) needs n >= 3");
            Graph g(f.n);
            for (Vertex v = 0; v < f.n; ++v) g.add_edge(v, (v + 1) % f.n);
            return g;
          },
          [](family::LoopedPoints f) {
            require(f.k >= 1, "LoopedPoints(k) needs k >= 1");
            Graph g(f.k);
            for (Vertex v = 0; v < f.k; ++v) g.add_edge(v, v);
            return g;
          },
          [](family::Empty f) { return Graph(f.n); },
          [](family::IndependentSetGraph) {
            Graph g(2);
            g.add_edge(0, 0);
            g.add_edge(0, 1);
            return g;
          },
          [](family::WidomRowlinson) {
            Graph g(3);
            for (Vertex v = 0; v < 3; ++v) g.add_edge(v, v);
            g.add_edge(0, 1);
            g.add_edge(1, 2);
            return g;
          },
      },
      id);
}

std::string family_name(const FamilyId& id) {
  return std::visit(
      overloaded{
          [](family::Complete f) { return "K_" + std::to_string(f.q); },
          [](family::CompleteBipartite f) {
            return "K_{" + std::to_string(f.a) + "," + std::to_string(f.b) + "}";
          },
          [](family::Cycle f) { return "C_" + std::to_string(f.n); },
          [](family::LoopedPoints f) { return "l_" + std::to_string(f.k); },
          [](family::Empty f) { return "E_" + std::to_string(f.n); },
          [](family::IndependentSetGraph) { return std::string("H_ind"); },
          [](family::WidomRowlinson) { return std::string("H_WR"); },
      },
      id);
}

Graph path(std::size_t n) {
  require(n >= 1, "path needs n >= 1");
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

}  // namespace homalg
