#ifndef CERGM_TYPES_HPP
#define CERGM_TYPES_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace cergm {

// Dense case index, assigned at network build time. External string ids are
// mapped to dense ids by the io layer.
using CaseId = std::uint32_t;

// Court term (year). Totally ordered; every case has exactly one term.
using TermIndex = std::int32_t;

constexpr CaseId kInvalidCase = std::numeric_limits<CaseId>::max();

// Per-case covariates. Optional fields may be absent in the source data;
// how absence is handled (error vs. impute-zero) is a statistics-layer policy.
struct CaseAttributes {
  TermIndex decision_term = 0;
  std::optional<double> mq_median;          // Martin-Quinn score of median majority justice
  std::optional<int> issue_area;            // categorical, 1..14
  std::optional<int> author_id;             // dense author code, equality comparisons only
  std::optional<int> coalition_size;        // justices in majority, 1..9
  std::optional<double> ideo_breadth;       // max-min majority ideal points, >= 0
  std::optional<TermIndex> overruled_term;  // term the case was overruled in, if ever
};

// Statistic vector h, one entry per model term.
using StatVector = std::vector<double>;

}  // namespace cergm

#endif
