#ifndef CERGM_SAMPLER_HPP
#define CERGM_SAMPLER_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "cergm/citation_network.hpp"
#include "cergm/model_spec.hpp"
#include "cergm/statistics.hpp"

namespace cergm {

enum class Proposal {
  UniformDyad,  // uniform over all free dyads
  TieNoTie,     // half the time an existing edge, half the time any dyad
};

struct McmcControl {
  std::uint64_t seed = 0;
  // Proposals discarded before the first retained draw; negative means the
  // default 10 * interval * free-dyad-count.
  std::int64_t burnin = -1;
  // Proposals between retained draws; negative means the free-dyad count.
  std::int64_t interval = -1;
  int nsim = 10000;
  Proposal proposal = Proposal::TieNoTie;
  // Chains are independent and merged by concatenation; chain c uses the
  // stream derived from (seed, c), so results do not depend on scheduling.
  int chains = 1;
  bool retain_edges = false;

  std::int64_t effective_burnin(std::size_t n_free) const {
    return burnin >= 0 ? burnin
                       : 10 * effective_interval(n_free) * static_cast<std::int64_t>(n_free);
  }
  std::int64_t effective_interval(std::size_t n_free) const {
    return interval >= 1 ? interval : static_cast<std::int64_t>(n_free > 0 ? n_free : 1);
  }
};

struct SampleSet {
  std::vector<StatVector> stats;               // one per retained draw
  std::vector<std::uint32_t> edge_counts;      // present free edges per draw
  std::vector<std::vector<std::uint32_t>> edges;  // retained free-dyad indices (optional)
  std::size_t n_free_dyads = 0;

  std::size_t size() const { return stats.size(); }
  StatVector mean() const;
  StatVector sd() const;
};

// Conditional probability of the free dyad (i, j) being a citation given the
// rest of the network: 1 / (1 + exp(-theta' * change)), with the change
// statistic evaluated against the dyad-absent baseline.
double conditional_prob(const CitationNetwork& net, const ModelSpec& spec,
                        const std::vector<double>& theta, CaseId i, CaseId j,
                        const StatOptions& opts = {});

// Metropolis-Hastings simulation of the free-dyad configuration conditional
// on the fixed citations. The chain starts from the network's current free
// state; the input network is not modified. Statistics are tracked
// incrementally from single-dyad changes.
SampleSet simulate(const CitationNetwork& net, const ModelSpec& spec,
                   const std::vector<double>& theta, const McmcControl& control,
                   const StatOptions& opts = {});

// Visitor form: called once per retained draw with the draw index, the
// chain's network at that draw, and its statistic vector. Used where per-draw
// structure is needed (goodness-of-fit, data generation) without storing
// every draw.
using DrawVisitor = std::function<void(std::size_t, const CitationNetwork&, const StatVector&)>;
void simulate_visit(const CitationNetwork& net, const ModelSpec& spec,
                    const std::vector<double>& theta, const McmcControl& control,
                    const DrawVisitor& visit, const StatOptions& opts = {});

}  // namespace cergm

#endif
