#include "cergm/citation_network.hpp"

#include <string>
#include <unordered_set>

namespace cergm {

namespace {

void validate_attributes(const CaseAttributes& a, CaseId id) {
  const std::string who = "case " + std::to_string(id);
  if (a.issue_area && (*a.issue_area < 1 || *a.issue_area > 14))
    throw ConstraintViolation(who + ": issue_area outside 1..14");
  if (a.coalition_size && (*a.coalition_size < 1 || *a.coalition_size > 9))
    throw ConstraintViolation(who + ": coalition_size outside 1..9");
  if (a.ideo_breadth && *a.ideo_breadth < 0.0)
    throw ConstraintViolation(who + ": negative ideo_breadth");
  if (a.overruled_term && *a.overruled_term < a.decision_term)
    throw ConstraintViolation(who + ": overruled before decision term");
}

}  // namespace

CitationNetwork::CitationNetwork(std::shared_ptr<const Core> core) : core_(std::move(core)) {
  const std::size_t n = core_->cases.size();
  present_.assign(core_->n_free, 0);
  list_pos_.assign(core_->n_free, kInvalidCase);
  free_out_.assign(core_->focal_cases.size(), {});
  free_in_.assign(n, {});
  free_indeg_.assign(n, 0);
}

CitationNetwork CitationNetwork::build(std::vector<CaseAttributes> cases,
                                       const std::vector<std::pair<CaseId, CaseId>>& citations,
                                       TermIndex focal_term) {
  auto core = std::make_shared<Core>();
  core->focal_term = focal_term;
  const std::size_t n = cases.size();

  core->focal_rank.assign(n, kInvalidCase);
  for (CaseId i = 0; i < n; ++i) {
    validate_attributes(cases[i], i);
    if (cases[i].decision_term > focal_term)
      throw ConstraintViolation("case " + std::to_string(i) + " decided after the focal term");
    if (cases[i].decision_term == focal_term) {
      core->focal_rank[i] = static_cast<CaseId>(core->focal_cases.size());
      core->focal_cases.push_back(i);
    }
  }
  core->cases = std::move(cases);
  core->n_free = n > 0 ? core->focal_cases.size() * (n - 1) : 0;

  core->fixed_outdeg.assign(n, 0);
  core->fixed_indeg.assign(n, 0);

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(citations.size() * 2);
  std::vector<std::pair<CaseId, CaseId>> fixed;
  std::vector<std::pair<CaseId, CaseId>> free_edges;
  for (const auto& [i, j] : citations) {
    if (i >= n || j >= n)
      throw ConstraintViolation("citation references unknown case id " +
                                std::to_string(i >= n ? i : j));
    if (i == j) throw ConstraintViolation("self citation at case " + std::to_string(i));
    const TermIndex ti = core->cases[i].decision_term;
    const TermIndex tj = core->cases[j].decision_term;
    if (ti < tj)
      throw ConstraintViolation("citation from case " + std::to_string(i) + " (term " +
                                std::to_string(ti) + ") to later case " + std::to_string(j) +
                                " (term " + std::to_string(tj) + ")");
    const std::uint64_t key = (static_cast<std::uint64_t>(i) << 32) | j;
    if (!seen.insert(key).second)
      throw ConstraintViolation("duplicate citation " + std::to_string(i) + " -> " +
                                std::to_string(j));
    if (ti == focal_term)
      free_edges.emplace_back(i, j);
    else
      fixed.emplace_back(i, j);
  }

  // CSR with sorted rows, both orientations, for the fixed part.
  for (const auto& e : fixed) {
    ++core->fixed_outdeg[e.first];
    ++core->fixed_indeg[e.second];
  }
  core->fixed_out_off.assign(n + 1, 0);
  core->fixed_in_off.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    core->fixed_out_off[v + 1] = core->fixed_out_off[v] + core->fixed_outdeg[v];
    core->fixed_in_off[v + 1] = core->fixed_in_off[v] + core->fixed_indeg[v];
  }
  core->fixed_targets.assign(fixed.size(), 0);
  core->fixed_sources.assign(fixed.size(), 0);
  {
    std::vector<std::size_t> out_fill(core->fixed_out_off.begin(), core->fixed_out_off.end() - 1);
    std::vector<std::size_t> in_fill(core->fixed_in_off.begin(), core->fixed_in_off.end() - 1);
    for (const auto& e : fixed) {
      core->fixed_targets[out_fill[e.first]++] = e.second;
      core->fixed_sources[in_fill[e.second]++] = e.first;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(core->fixed_targets.begin() + core->fixed_out_off[v],
              core->fixed_targets.begin() + core->fixed_out_off[v + 1]);
    std::sort(core->fixed_sources.begin() + core->fixed_in_off[v],
              core->fixed_sources.begin() + core->fixed_in_off[v + 1]);
  }

  CitationNetwork net(std::move(core));
  for (const auto& e : free_edges) net.toggle(e.first, e.second);
  return net;
}

std::size_t CitationNetwork::dyad_index(CaseId i, CaseId j) const {
  check_case(i);
  check_case(j);
  const CaseId r = core_->focal_rank[i];
  if (r == kInvalidCase)
    throw FixedDyad("dyad (" + std::to_string(i) + ", " + std::to_string(j) +
                    "): citing case not in focal term");
  if (i == j)
    throw FixedDyad("dyad (" + std::to_string(i) + ", " + std::to_string(j) +
                    "): self dyads are not modeled");
  return raw_index(r, j);
}

std::pair<CaseId, CaseId> CitationNetwork::dyad_at(std::size_t idx) const {
  if (idx >= core_->n_free) throw FixedDyad("free dyad index out of range");
  const std::size_t cols = core_->cases.size() - 1;
  const CaseId i = core_->focal_cases[idx / cols];
  const CaseId o = static_cast<CaseId>(idx % cols);
  return {i, o < i ? o : o + 1};
}

void CitationNetwork::toggle_index(std::size_t idx) {
  if (idx >= core_->n_free) throw FixedDyad("free dyad index out of range");
  const auto [i, j] = dyad_at(idx);
  const CaseId r = core_->focal_rank[i];
  if (present_[idx]) {
    present_[idx] = 0;
    const std::uint32_t slot = list_pos_[idx];
    const std::uint32_t last = present_list_.back();
    present_list_[slot] = last;
    list_pos_[last] = slot;
    present_list_.pop_back();
    list_pos_[idx] = kInvalidCase;

    auto& out = free_out_[r];
    out.erase(std::find(out.begin(), out.end(), j));
    auto& in = free_in_[j];
    in.erase(std::find(in.begin(), in.end(), i));
    --free_indeg_[j];
  } else {
    present_[idx] = 1;
    list_pos_[idx] = static_cast<std::uint32_t>(present_list_.size());
    present_list_.push_back(static_cast<std::uint32_t>(idx));
    free_out_[r].push_back(j);
    free_in_[j].push_back(i);
    ++free_indeg_[j];
  }
}

void CitationNetwork::clear_free_edges() {
  while (!present_list_.empty()) toggle_index(present_list_.back());
}

void CitationNetwork::set_free_state(const std::vector<std::uint8_t>& mask) {
  if (mask.size() != core_->n_free)
    throw FixedDyad("free state mask has wrong length");
  for (std::size_t d = 0; d < mask.size(); ++d)
    if ((mask[d] != 0) != (present_[d] != 0)) toggle_index(d);
}

}  // namespace cergm
