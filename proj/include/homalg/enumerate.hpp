#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "homalg/graph.hpp"

namespace homalg {

inline constexpr std::size_t kDefaultEnumCap = 10;

/// All loop-free d-regular graphs on n vertices, one per isomorphism class,
/// each in its canonical labeling, sorted by canonical form. Throws
/// ParameterError when n*d is odd or d >= n, ResourceError when n > max_order.
std::vector<Graph> enumerate_regular(std::size_t n, std::size_t d, bool connected_only = false,
                                     std::size_t max_order = kDefaultEnumCap);

/// Streaming form of enumerate_regular; same order.
void for_each_regular(std::size_t n, std::size_t d, bool connected_only,
                      const std::function<void(const Graph&)>& visit,
                      std::size_t max_order = kDefaultEnumCap);

/// result[n] holds every graph on n vertices up to isomorphism (loops allowed
/// when `loops` is set), canonical labeling, sorted by canonical form.
std::vector<std::vector<Graph>> enumerate_graphs(std::size_t max_order, bool loops = true);

}  // namespace homalg
