#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "homalg/enumerate.hpp"
#include "homalg/graph.hpp"
#include "homalg/homcount.hpp"
#include "homalg/verdict.hpp"

namespace homalg {

struct SurveyRow {
  Graph graph;
  std::string canonical_id;
  HomCount hom;
  InequalityVerdict kdd;
  InequalityVerdict kd1;
};

/// hom(G, h) for every d-regular G on n vertices, against both bounds.
struct SurveyReport {
  std::size_t n = 0, d = 0;
  Graph target;
  HomCount hom_kdd, hom_kd1;
  std::vector<SurveyRow> rows;          ///< sorted by canonical form
  std::vector<std::size_t> maximizers;  ///< rows attaining the largest hom

  /// Header "canonical_id,hom_count,verdict_kdd,verdict_kd1", one row per class.
  std::string to_csv() const;
  /// '#'-prefixed lines naming the maximizer(s) and both bound witnesses.
  std::string summary() const;
};

SurveyReport survey_maximizer(std::size_t n, std::size_t d, const Graph& h,
                              std::size_t enum_cap = kDefaultEnumCap,
                              const CountOptions& options = {});

}  // namespace homalg
