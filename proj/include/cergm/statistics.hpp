#ifndef CERGM_STATISTICS_HPP
#define CERGM_STATISTICS_HPP

#include <cstddef>
#include <string>
#include <unordered_map>

#include "cergm/citation_network.hpp"
#include "cergm/model_spec.hpp"
#include "cergm/types.hpp"

namespace cergm {

// Externally supplied dyadic covariate matrices, keyed by name. Entries not
// present are zero.
class UserMatrices {
 public:
  void set(const std::string& name, CaseId i, CaseId j, double value) {
    values_[name][key(i, j)] = value;
  }
  bool has(const std::string& name) const { return values_.count(name) != 0; }
  double value(const std::string& name, CaseId i, CaseId j) const {
    auto it = values_.find(name);
    if (it == values_.end()) return 0.0;
    auto v = it->second.find(key(i, j));
    return v == it->second.end() ? 0.0 : v->second;
  }

 private:
  static std::uint64_t key(CaseId i, CaseId j) {
    return (static_cast<std::uint64_t>(i) << 32) | j;
  }
  std::unordered_map<std::string, std::unordered_map<std::uint64_t, double>> values_;
};

enum class MissingPolicy {
  Strict,      // throw MissingAttribute
  ImputeZero,  // covariate value 0, counted
};

struct StatOptions {
  MissingPolicy missing = MissingPolicy::Strict;
  const UserMatrices* user = nullptr;
  // When set, incremented once per imputed covariate value.
  std::size_t* imputed_count = nullptr;
};

// Global statistic vector on the cumulative graph. Free-edge sums run over
// the present free dyads; gwidegree runs over cumulative indegrees, so its
// value carries a constant offset from the fixed part (the offset cancels in
// every likelihood ratio).
StatVector global_stats(const CitationNetwork& net, const ModelSpec& spec,
                        const StatOptions& opts = {});

// Change statistics for one free dyad: h(edge present) - h(edge absent) with
// every other dyad held at its current state. Computed incrementally; never
// mutates the network. Throws FixedDyad for non-free dyads.
StatVector change_stats(const CitationNetwork& net, const ModelSpec& spec, CaseId i, CaseId j,
                        const StatOptions& opts = {});
StatVector change_stats_index(const CitationNetwork& net, const ModelSpec& spec,
                              std::size_t dyad_index, const StatOptions& opts = {});

// Allocation-free variant for inner loops; `out` is resized to spec.size().
void change_stats_into(const CitationNetwork& net, const ModelSpec& spec, std::size_t dyad_index,
                       StatVector& out, const StatOptions& opts = {});

// Dyadic covariate value X_ij for one covariate-style term (DyadCovariate or
// ReceiverOutdegree). Used by the statistics above and by the exact
// factorized likelihood of dyad-independent models.
double covariate_value(const CitationNetwork& net, const TermSpec& term, CaseId i, CaseId j,
                       const StatOptions& opts = {});

}  // namespace cergm

#endif
