#include "cergm/model_spec.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cergm {

namespace {

std::string decay_suffix(double decay) {
  char buf[40];
  // trim trailing zeros so labels round-trip cleanly through config files
  std::snprintf(buf, sizeof(buf), "%.6g", decay);
  return std::string("(") + buf + ")";
}

const char* cov_name(CovKind k) {
  switch (k) {
    case CovKind::MqMedianAbsDiff: return "mq_median_abs_diff";
    case CovKind::SameIssueArea: return "same_issue_area";
    case CovKind::SameAuthor: return "same_author";
    case CovKind::CitedAge: return "cited_age";
    case CovKind::CitedAgeSquared: return "cited_age_sq";
    case CovKind::CitedCoalitionSize: return "cited_coalition_size";
    case CovKind::CitedIdeoBreadth: return "cited_ideo_breadth";
    case CovKind::OverruledBefore: return "overruled_before";
    case CovKind::UserMatrix: return "user_matrix";
  }
  return "?";
}

}  // namespace

std::string TermSpec::label() const {
  switch (kind) {
    case TermKind::Edges: return "edges";
    case TermKind::Mutual: return "mutual";
    case TermKind::GwIdegree: return "gwidegree" + decay_suffix(decay);
    case TermKind::GwespOsp: return "gwesp_osp" + decay_suffix(decay);
    case TermKind::DiffTermTransitiveTies: return "diff_term_transitive_ties";
    case TermKind::ReceiverOutdegree: return "receiver_outdegree";
    case TermKind::DyadCovariate:
      if (cov == CovKind::UserMatrix) return "user_matrix(" + user_name + ")";
      return cov_name(cov);
  }
  return "?";
}

bool TermSpec::integer_valued() const {
  switch (kind) {
    case TermKind::Edges:
    case TermKind::Mutual:
    case TermKind::DiffTermTransitiveTies:
    case TermKind::ReceiverOutdegree:
      return true;
    case TermKind::GwIdegree:
      return decay == 1.0;  // reduces to a count of cited-at-least-once cases
    case TermKind::GwespOsp:
      return false;
    case TermKind::DyadCovariate:
      switch (cov) {
        case CovKind::SameIssueArea:
        case CovKind::SameAuthor:
        case CovKind::CitedAge:
        case CovKind::CitedAgeSquared:
        case CovKind::CitedCoalitionSize:
        case CovKind::OverruledBefore:
          return true;
        default:
          return false;
      }
  }
  return false;
}

ModelSpec::ModelSpec(std::vector<TermSpec> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw Error("model spec needs at least one term");
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const TermSpec& t = terms_[k];
    if (t.kind == TermKind::GwIdegree) {
      if (!std::isfinite(t.decay) || t.decay <= 0.0)
        throw Error("gwidegree decay must be finite and positive");
    }
    if (t.kind == TermKind::GwespOsp) {
      if (!std::isfinite(t.decay) || t.decay < 0.0)
        throw Error("gwesp decay must be finite and nonnegative");
    }
    for (std::size_t m = 0; m < k; ++m)
      if (terms_[m] == t) throw Error("duplicate model term: " + t.label());
  }
}

ModelSpec ModelSpec::full() {
  return ModelSpec({
      TermSpec::edges(),
      TermSpec::mutual(),
      TermSpec::gwidegree(1.0),
      TermSpec::gwesp_osp(0.25),
      TermSpec::diff_term_transitive_ties(),
      TermSpec::receiver_outdegree(),
      TermSpec::covariate(CovKind::MqMedianAbsDiff),
      TermSpec::covariate(CovKind::SameIssueArea),
      TermSpec::covariate(CovKind::SameAuthor),
      TermSpec::covariate(CovKind::CitedAge),
      TermSpec::covariate(CovKind::CitedAgeSquared),
      TermSpec::covariate(CovKind::CitedCoalitionSize),
      TermSpec::covariate(CovKind::CitedIdeoBreadth),
      TermSpec::covariate(CovKind::OverruledBefore),
  });
}

ModelSpec ModelSpec::independent() {
  std::vector<TermSpec> keep;
  for (const TermSpec& t : full().terms()) {
    if (t.kind == TermKind::Mutual || t.kind == TermKind::GwIdegree ||
        t.kind == TermKind::GwespOsp || t.kind == TermKind::DiffTermTransitiveTies)
      continue;
    keep.push_back(t);
  }
  return ModelSpec(std::move(keep));
}

std::vector<std::string> ModelSpec::names() const {
  std::vector<std::string> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.label());
  return out;
}

bool ModelSpec::contains(TermKind kind) const { return index_of(kind) >= 0; }

bool ModelSpec::contains(CovKind cov) const {
  for (const auto& t : terms_)
    if (t.kind == TermKind::DyadCovariate && t.cov == cov) return true;
  return false;
}

int ModelSpec::index_of(TermKind kind) const {
  for (std::size_t k = 0; k < terms_.size(); ++k)
    if (terms_[k].kind == kind) return static_cast<int>(k);
  return -1;
}

bool ModelSpec::dyad_independent() const {
  for (const auto& t : terms_)
    if (!t.dyad_independent()) return false;
  return true;
}

TermSpec parse_term(const std::string& text) {
  auto strip = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::string name = strip(text);
  std::string arg;
  const auto paren = name.find('(');
  if (paren != std::string::npos) {
    if (name.back() != ')')
      throw ParseError("malformed model term '" + text + "'", 0, "model");
    arg = strip(name.substr(paren + 1, name.size() - paren - 2));
    name = strip(name.substr(0, paren));
  }

  auto decay_arg = [&](double dflt) {
    if (arg.empty()) return dflt;
    try {
      return std::stod(arg);
    } catch (const std::exception&) {
      throw ParseError("bad decay '" + arg + "' in model term '" + text + "'", 0, "model");
    }
  };

  if (name == "edges") return TermSpec::edges();
  if (name == "mutual") return TermSpec::mutual();
  if (name == "gwidegree") return TermSpec::gwidegree(decay_arg(1.0));
  if (name == "gwesp_osp") return TermSpec::gwesp_osp(decay_arg(0.25));
  if (name == "diff_term_transitive_ties") return TermSpec::diff_term_transitive_ties();
  if (name == "receiver_outdegree") return TermSpec::receiver_outdegree();
  if (name == "mq_median_abs_diff") return TermSpec::covariate(CovKind::MqMedianAbsDiff);
  if (name == "same_issue_area") return TermSpec::covariate(CovKind::SameIssueArea);
  if (name == "same_author") return TermSpec::covariate(CovKind::SameAuthor);
  if (name == "cited_age") return TermSpec::covariate(CovKind::CitedAge);
  if (name == "cited_age_sq") return TermSpec::covariate(CovKind::CitedAgeSquared);
  if (name == "cited_coalition_size") return TermSpec::covariate(CovKind::CitedCoalitionSize);
  if (name == "cited_ideo_breadth") return TermSpec::covariate(CovKind::CitedIdeoBreadth);
  if (name == "overruled_before") return TermSpec::covariate(CovKind::OverruledBefore);
  if (name == "user_matrix") {
    if (arg.empty())
      throw ParseError("user_matrix term needs a name argument", 0, "model");
    return TermSpec::user_matrix(arg);
  }
  throw ParseError("unknown model term '" + name + "'", 0, "model");
}

}  // namespace cergm
