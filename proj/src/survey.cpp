#include "homalg/survey.hpp"

#include <algorithm>
#include <sstream>

#include "homalg/error.hpp"
#include "homalg/iso.hpp"

namespace homalg {

SurveyReport survey_maximizer(std::size_t n, std::size_t d, const Graph& h, std::size_t enum_cap,
                              const CountOptions& options) {
  if (d == 0) throw ParameterError("survey needs d >= 1");
  const auto graphs = enumerate_regular(n, d, false, enum_cap);
  SurveyReport r;
  r.n = n;
  r.d = d;
  r.target = h;
  r.hom_kdd = hom_from_complete_bipartite(d, d, h);
  r.hom_kd1 = hom_from_complete(d + 1, h);
  for (const auto& g : graphs) {
    SurveyRow row;
    row.graph = g;
    row.canonical_id = canonical_form(g, std::max(n, kDefaultIsoCap)).id();
    row.hom = hom_count(g, h, options);
    row.kdd = compare_powers(row.hom, 2 * d, r.hom_kdd, n);
    row.kd1 = compare_powers(row.hom, d + 1, r.hom_kd1, n);
    r.rows.push_back(std::move(row));
  }
  if (!r.rows.empty()) {
    const auto best = std::max_element(r.rows.begin(), r.rows.end(),
                                       [](const auto& a, const auto& b) { return a.hom < b.hom; })
                          ->hom;
    for (std::size_t i = 0; i < r.rows.size(); ++i)
      if (r.rows[i].hom == best) r.maximizers.push_back(i);
  }
  return r;
}

std::string SurveyReport::to_csv() const {
  std::ostringstream out;
  out << "canonical_id,hom_count,verdict_kdd,verdict_kd1\n";
  for (const auto& row : rows)
    out << row.canonical_id << ',' << to_decimal(row.hom) << ',' << to_string(row.kdd.relation)
        << ',' << to_string(row.kd1.relation) << '\n';
  return out.str();
}

std::string SurveyReport::summary() const {
  std::ostringstream out;
  out << "# classes: " << rows.size() << " (n=" << n << ", d=" << d << ")\n";
  out << "# hom(K_{d,d},H) = " << to_decimal(hom_kdd) << ", bound witness hom(K_{d,d},H)^n = "
      << to_decimal(boost::multiprecision::pow(hom_kdd, n)) << " vs hom(G,H)^(2d)\n";
  out << "# hom(K_{d+1},H) = " << to_decimal(hom_kd1) << ", bound witness hom(K_{d+1},H)^n = "
      << to_decimal(boost::multiprecision::pow(hom_kd1, n)) << " vs hom(G,H)^(d+1)\n";
  for (auto i : maximizers)
    out << "# maximizer: " << rows[i].canonical_id << " hom=" << to_decimal(rows[i].hom) << '\n';
  return out.str();
}

}  // namespace homalg
