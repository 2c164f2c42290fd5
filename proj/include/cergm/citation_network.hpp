#ifndef CERGM_CITATION_NETWORK_HPP
#define CERGM_CITATION_NETWORK_HPP

#include <algorithm>
#include <memory>
#include <utility>
#include <vector>

#include "cergm/errors.hpp"
#include "cergm/types.hpp"

namespace cergm {

// Layered directed citation graph for one focal term.
//
// Edges whose citing case was decided before the focal term are fixed
// context; the mutable state is exactly the set of free dyads (i, j) with
// term(i) == focal term, j != i. Degree queries run over the cumulative
// graph (fixed plus current free edges).
//
// Copying a network shares the immutable core and duplicates only the free
// state, so sampler chains can each own a cheap independent copy. A built
// network is safe for concurrent readers; toggling is single-writer.
class CitationNetwork {
 public:
  // Validates the structural constraints and assembles the layered graph.
  // Citations whose citing case is in the focal term become the initial free
  // state; all other citations are frozen. Throws ConstraintViolation on a
  // forward citation, self citation, duplicate edge, unknown case id, case
  // decided after the focal term, or an out-of-range attribute.
  static CitationNetwork build(std::vector<CaseAttributes> cases,
                               const std::vector<std::pair<CaseId, CaseId>>& citations,
                               TermIndex focal_term);

  std::size_t case_count() const { return core_->cases.size(); }
  TermIndex focal_term() const { return core_->focal_term; }
  const CaseAttributes& attrs(CaseId i) const {
    check_case(i);
    return core_->cases[i];
  }
  TermIndex term(CaseId i) const {
    check_case(i);
    return core_->cases[i].decision_term;
  }
  bool is_focal(CaseId i) const {
    check_case(i);
    return core_->focal_rank[i] != kInvalidCase;
  }
  const std::vector<CaseId>& focal_cases() const { return core_->focal_cases; }

  // -- free dyad addressing --------------------------------------------------

  std::size_t free_dyad_count() const { return core_->n_free; }
  std::size_t free_edge_count() const { return present_list_.size(); }

  bool is_free(CaseId i, CaseId j) const {
    return i < case_count() && j < case_count() && i != j &&
           core_->focal_rank[i] != kInvalidCase;
  }

  // Dense index of a free dyad; throws FixedDyad for anything else.
  std::size_t dyad_index(CaseId i, CaseId j) const;

  // Inverse of dyad_index.
  std::pair<CaseId, CaseId> dyad_at(std::size_t idx) const;

  bool dyad_present(std::size_t idx) const { return present_[idx] != 0; }

  // Indices of currently present free dyads, arbitrary order, O(1) sampling.
  const std::vector<std::uint32_t>& present_free_dyads() const { return present_list_; }

  // -- mutation ---------------------------------------------------------------

  // Flips the state of a free dyad; throws FixedDyad otherwise.
  void toggle(CaseId i, CaseId j) { toggle_index(dyad_index(i, j)); }

  void toggle_index(std::size_t idx);

  // Drops every free edge.
  void clear_free_edges();

  // Bulk-assigns the free state from a bit mask indexed by dyad index.
  void set_free_state(const std::vector<std::uint8_t>& mask);

  const std::vector<std::uint8_t>& free_state() const { return present_; }

  // -- degree and adjacency queries (cumulative graph) -------------------------

  std::size_t indegree(CaseId j) const {
    check_case(j);
    return core_->fixed_indeg[j] + free_indeg_[j];
  }
  std::size_t outdegree(CaseId i) const {
    check_case(i);
    const CaseId r = core_->focal_rank[i];
    return r == kInvalidCase ? core_->fixed_outdeg[i] : free_out_[r].size();
  }
  // Citations sent by cases decided before the focal term (zero for focal
  // cases, whose out-edges live in the free state).
  std::size_t fixed_outdegree(CaseId i) const {
    check_case(i);
    return core_->fixed_outdeg[i];
  }
  std::size_t fixed_indegree(CaseId j) const {
    check_case(j);
    return core_->fixed_indeg[j];
  }

  bool has_edge(CaseId i, CaseId j) const {
    check_case(i);
    check_case(j);
    if (i == j) return false;
    const CaseId r = core_->focal_rank[i];
    if (r != kInvalidCase) return present_[raw_index(r, j)] != 0;
    const auto row = fixed_out_row(i);
    return std::binary_search(row.first, row.second, j);
  }

  template <class F>
  void for_each_out(CaseId i, F f) const {
    check_case(i);
    const CaseId r = core_->focal_rank[i];
    if (r != kInvalidCase) {
      for (CaseId k : free_out_[r]) f(k);
    } else {
      const auto row = fixed_out_row(i);
      for (auto it = row.first; it != row.second; ++it) f(*it);
    }
  }

  template <class F>
  void for_each_in(CaseId j, F f) const {
    check_case(j);
    const auto row = fixed_in_row(j);
    for (auto it = row.first; it != row.second; ++it) f(*it);
    for (CaseId k : free_in_[j]) f(k);
  }

  std::vector<CaseId> out_neighbors(CaseId i) const {
    std::vector<CaseId> v;
    for_each_out(i, [&](CaseId k) { v.push_back(k); });
    return v;
  }
  std::vector<CaseId> in_neighbors(CaseId j) const {
    std::vector<CaseId> v;
    for_each_in(j, [&](CaseId k) { v.push_back(k); });
    return v;
  }

  std::size_t fixed_edge_count() const { return core_->fixed_targets.size(); }
  std::size_t edge_count() const { return fixed_edge_count() + free_edge_count(); }

 private:
  struct Core {
    std::vector<CaseAttributes> cases;
    TermIndex focal_term = 0;
    std::vector<CaseId> focal_cases;        // ascending
    std::vector<CaseId> focal_rank;         // case -> rank among focal, or kInvalidCase
    std::vector<std::size_t> fixed_out_off; // CSR over sorted targets
    std::vector<CaseId> fixed_targets;
    std::vector<std::size_t> fixed_in_off;
    std::vector<CaseId> fixed_sources;
    std::vector<std::uint32_t> fixed_outdeg;
    std::vector<std::uint32_t> fixed_indeg;
    std::size_t n_free = 0;
  };

  CitationNetwork(std::shared_ptr<const Core> core);

  void check_case(CaseId i) const {
    if (i >= core_->cases.size()) throw UnknownCase("unknown case id " + std::to_string(i));
  }

  std::size_t raw_index(CaseId focal_rank, CaseId j) const {
    const std::size_t cols = core_->cases.size() - 1;
    const CaseId i = core_->focal_cases[focal_rank];
    return static_cast<std::size_t>(focal_rank) * cols + (j < i ? j : j - 1);
  }

  std::pair<const CaseId*, const CaseId*> fixed_out_row(CaseId i) const {
    const CaseId* base = core_->fixed_targets.data();
    return {base + core_->fixed_out_off[i], base + core_->fixed_out_off[i + 1]};
  }
  std::pair<const CaseId*, const CaseId*> fixed_in_row(CaseId j) const {
    const CaseId* base = core_->fixed_sources.data();
    return {base + core_->fixed_in_off[j], base + core_->fixed_in_off[j + 1]};
  }

  std::shared_ptr<const Core> core_;

  // Free state. present_ is the authoritative bit per dyad; the remaining
  // members are caches kept in sync by toggle_index.
  std::vector<std::uint8_t> present_;
  std::vector<std::uint32_t> present_list_;
  std::vector<std::uint32_t> list_pos_;       // dyad index -> slot in present_list_
  std::vector<std::vector<CaseId>> free_out_; // by focal rank
  std::vector<std::vector<CaseId>> free_in_;  // by case id (sources are focal)
  std::vector<std::uint32_t> free_indeg_;     // by case id
};

}  // namespace cergm

#endif
