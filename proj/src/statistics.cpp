#include "cergm/statistics.hpp"

#include <cmath>
#include <unordered_set>

namespace cergm {

namespace {

double missing_value(const StatOptions& opts, CaseId id, const char* attr) {
  if (opts.missing == MissingPolicy::Strict)
    throw MissingAttribute(std::string("case ") + std::to_string(id) + " has no " + attr);
  if (opts.imputed_count) ++*opts.imputed_count;
  return 0.0;
}

// gwidegree weight of moving one node from indegree d to d+1:
// lambda*(w_{d+1} - w_d) with w_r = 1 - (1 - 1/lambda)^r.
double gwidegree_gain(double lambda, std::size_t d) {
  return std::pow(1.0 - 1.0 / lambda, static_cast<double>(d));
}

// gwesp weight of one edgewise pair with r shared partners:
// e^phi * (1 - (1 - e^-phi)^r).
double gwesp_weight(double phi, std::size_t r) {
  if (r == 0) return 0.0;
  return std::exp(phi) * (1.0 - std::pow(1.0 - std::exp(-phi), static_cast<double>(r)));
}

// gwesp weight gain from r to r+1 shared partners: (1 - e^-phi)^r.
double gwesp_gain(double phi, std::size_t r) {
  return std::pow(1.0 - std::exp(-phi), static_cast<double>(r));
}

// Number of common out-neighbors of a and b on the cumulative graph.
// Iterates the smaller out-neighborhood and probes the other side.
std::size_t shared_out_partners(const CitationNetwork& net, CaseId a, CaseId b) {
  CaseId u = a, v = b;
  if (net.outdegree(v) < net.outdegree(u)) std::swap(u, v);
  std::size_t count = 0;
  net.for_each_out(u, [&](CaseId k) {
    if (net.has_edge(v, k)) ++count;
  });
  return count;
}

// True when free edge (i, j) closes a transitive triangle through some case
// k decided in a different (hence earlier) term than i, with j also decided
// in a different term. `skip` excludes one intermediate from consideration.
bool has_diff_term_two_path(const CitationNetwork& net, CaseId i, CaseId j,
                            CaseId skip = kInvalidCase) {
  const TermIndex ti = net.term(i);
  if (net.term(j) == ti) return false;
  bool found = false;
  net.for_each_out(i, [&](CaseId k) {
    if (found || k == j || k == skip) return;
    if (net.term(k) != ti && net.has_edge(k, j)) found = true;
  });
  return found;
}

}  // namespace

double covariate_value(const CitationNetwork& net, const TermSpec& term, CaseId i, CaseId j,
                       const StatOptions& opts) {
  if (term.kind == TermKind::ReceiverOutdegree)
    return static_cast<double>(net.fixed_outdegree(j));
  if (term.kind != TermKind::DyadCovariate)
    throw Error("term '" + term.label() + "' is not a dyadic covariate");

  const CaseAttributes& ai = net.attrs(i);
  const CaseAttributes& aj = net.attrs(j);
  switch (term.cov) {
    case CovKind::MqMedianAbsDiff:
      if (!ai.mq_median) return missing_value(opts, i, "mq_median");
      if (!aj.mq_median) return missing_value(opts, j, "mq_median");
      return std::fabs(*ai.mq_median - *aj.mq_median);
    case CovKind::SameIssueArea:
      if (!ai.issue_area) return missing_value(opts, i, "issue_area");
      if (!aj.issue_area) return missing_value(opts, j, "issue_area");
      return *ai.issue_area == *aj.issue_area ? 1.0 : 0.0;
    case CovKind::SameAuthor:
      if (!ai.author_id) return missing_value(opts, i, "author_id");
      if (!aj.author_id) return missing_value(opts, j, "author_id");
      return *ai.author_id == *aj.author_id ? 1.0 : 0.0;
    case CovKind::CitedAge:
      return static_cast<double>(ai.decision_term - aj.decision_term);
    case CovKind::CitedAgeSquared: {
      const double age = static_cast<double>(ai.decision_term - aj.decision_term);
      return age * age;
    }
    case CovKind::CitedCoalitionSize:
      if (!aj.coalition_size) return missing_value(opts, j, "coalition_size");
      return static_cast<double>(*aj.coalition_size);
    case CovKind::CitedIdeoBreadth:
      if (!aj.ideo_breadth) return missing_value(opts, j, "ideo_breadth");
      return *aj.ideo_breadth;
    case CovKind::OverruledBefore:
      return (aj.overruled_term && *aj.overruled_term < ai.decision_term) ? 1.0 : 0.0;
    case CovKind::UserMatrix:
      return opts.user ? opts.user->value(term.user_name, i, j) : 0.0;
  }
  return 0.0;
}

StatVector global_stats(const CitationNetwork& net, const ModelSpec& spec,
                        const StatOptions& opts) {
  StatVector h(spec.size(), 0.0);

  for (std::size_t k = 0; k < spec.size(); ++k) {
    const TermSpec& term = spec.term(k);
    switch (term.kind) {
      case TermKind::Edges:
        h[k] = static_cast<double>(net.free_edge_count());
        break;

      case TermKind::Mutual: {
        // Mutual dyads require equal terms, so both directions are free
        // edges of the focal term; count each unordered pair once.
        std::size_t count = 0;
        for (std::uint32_t d : net.present_free_dyads()) {
          const auto [i, j] = net.dyad_at(d);
          if (i < j && net.is_focal(j) && net.has_edge(j, i)) ++count;
        }
        h[k] = static_cast<double>(count);
        break;
      }

      case TermKind::GwIdegree: {
        double sum = 0.0;
        const double lambda = term.decay;
        for (CaseId v = 0; v < net.case_count(); ++v) {
          const std::size_t d = net.indegree(v);
          if (d > 0)
            sum += lambda * (1.0 - std::pow(1.0 - 1.0 / lambda, static_cast<double>(d)));
        }
        h[k] = sum;
        break;
      }

      case TermKind::GwespOsp: {
        // Edgewise pairs: unordered pairs connected by at least one free
        // edge. Mutual pairs would be visited twice, so dedupe.
        double sum = 0.0;
        std::unordered_set<std::uint64_t> seen;
        for (std::uint32_t d : net.present_free_dyads()) {
          const auto [i, j] = net.dyad_at(d);
          const CaseId lo = i < j ? i : j;
          const CaseId hi = i < j ? j : i;
          if (!seen.insert((static_cast<std::uint64_t>(lo) << 32) | hi).second) continue;
          sum += gwesp_weight(term.decay, shared_out_partners(net, i, j));
        }
        h[k] = sum;
        break;
      }

      case TermKind::DiffTermTransitiveTies: {
        std::size_t count = 0;
        for (std::uint32_t d : net.present_free_dyads()) {
          const auto [i, j] = net.dyad_at(d);
          if (has_diff_term_two_path(net, i, j)) ++count;
        }
        h[k] = static_cast<double>(count);
        break;
      }

      case TermKind::ReceiverOutdegree:
      case TermKind::DyadCovariate: {
        double sum = 0.0;
        for (std::uint32_t d : net.present_free_dyads()) {
          const auto [i, j] = net.dyad_at(d);
          sum += covariate_value(net, term, i, j, opts);
        }
        h[k] = sum;
        break;
      }
    }
  }
  return h;
}

StatVector change_stats(const CitationNetwork& net, const ModelSpec& spec, CaseId i, CaseId j,
                        const StatOptions& opts) {
  return change_stats_index(net, spec, net.dyad_index(i, j), opts);
}

StatVector change_stats_index(const CitationNetwork& net, const ModelSpec& spec,
                              std::size_t dyad, const StatOptions& opts) {
  StatVector delta;
  change_stats_into(net, spec, dyad, delta, opts);
  return delta;
}

void change_stats_into(const CitationNetwork& net, const ModelSpec& spec, std::size_t dyad,
                       StatVector& delta, const StatOptions& opts) {
  const auto [a, b] = net.dyad_at(dyad);
  // All quantities below are evaluated against the baseline in which (a, b)
  // is absent; when the edge is currently present its own contributions are
  // subtracted analytically instead of mutating the network.
  const bool cur = net.dyad_present(dyad);
  const TermIndex focal = net.focal_term();

  delta.assign(spec.size(), 0.0);
  for (std::size_t k = 0; k < spec.size(); ++k) {
    const TermSpec& term = spec.term(k);
    switch (term.kind) {
      case TermKind::Edges:
        delta[k] = 1.0;
        break;

      case TermKind::Mutual:
        delta[k] = (net.is_focal(b) && net.has_edge(b, a)) ? 1.0 : 0.0;
        break;

      case TermKind::GwIdegree: {
        const std::size_t d0 = net.indegree(b) - (cur ? 1 : 0);
        delta[k] = gwidegree_gain(term.decay, d0);
        break;
      }

      case TermKind::GwespOsp: {
        const double phi = term.decay;
        double sum = 0.0;
        // The pair {a, b} itself enters the edgewise set unless already
        // connected through the reverse edge. Its shared-partner count is
        // unaffected by the toggled edge.
        const bool reverse = net.is_focal(b) && net.has_edge(b, a);
        if (!reverse) sum += gwesp_weight(phi, shared_out_partners(net, a, b));
        // Every connected pair {a, y} with y citing b gains b as a shared
        // partner.
        net.for_each_in(b, [&](CaseId y) {
          if (y == a) return;
          if (!net.has_edge(a, y) && !net.has_edge(y, a)) return;
          std::size_t r = shared_out_partners(net, a, y);
          if (cur) --r;  // current count includes b through the toggled edge
          sum += gwesp_gain(phi, r);
        });
        delta[k] = sum;
        break;
      }

      case TermKind::DiffTermTransitiveTies: {
        if (net.term(b) == focal) {
          delta[k] = 0.0;
          break;
        }
        double sum = 0.0;
        // (a, b) itself closes a triangle through an earlier intermediate;
        // the toggled edge cannot serve as its own intermediate.
        if (has_diff_term_two_path(net, a, b)) sum += 1.0;
        // b becomes an intermediate for edges (a, j) with j cited by b;
        // such an edge starts counting only if b is its sole intermediate.
        net.for_each_out(b, [&](CaseId j2) {
          if (!net.has_edge(a, j2)) return;
          if (!has_diff_term_two_path(net, a, j2, b)) sum += 1.0;
        });
        delta[k] = sum;
        break;
      }

      case TermKind::ReceiverOutdegree:
      case TermKind::DyadCovariate:
        delta[k] = covariate_value(net, term, a, b, opts);
        break;
    }
  }
}

}  // namespace cergm
