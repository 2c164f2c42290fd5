#ifndef CERGM_ERRORS_HPP
#define CERGM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cergm {

// Base class for all cergm errors so callers can catch the whole family.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// -- network construction / mutation ---------------------------------------

// Input violates a structural constraint of the layered citation graph
// (forward citation, self citation, duplicate edge, bad case id, bad
// attribute range).
struct ConstraintViolation : Error {
  using Error::Error;
};

// Attempt to toggle or score a dyad outside the free set of the focal term.
struct FixedDyad : Error {
  using Error::Error;
};

struct UnknownCase : Error {
  using Error::Error;
};

// -- statistics -------------------------------------------------------------

// A covariate term references an attribute that is absent from a case and
// the evaluation policy is strict.
struct MissingAttribute : Error {
  using Error::Error;
};

// -- sampling ---------------------------------------------------------------

struct NonFiniteParameter : Error {
  using Error::Error;
};

// -- estimation ---------------------------------------------------------------

struct RankDeficient : Error {
  using Error::Error;
};

// A pseudo-likelihood coordinate diverges (its MLE is infinite). Carries the
// offending term and the direction of divergence.
struct Separation : Error {
  Separation(const std::string& msg, int term_idx, int dir)
      : Error(msg), term_index(term_idx), direction(dir) {}
  int term_index;
  int direction;  // +1 -> +inf, -1 -> -inf
};

// Observed statistics unreachable after the step-length floor was hit.
struct HullFailure : Error {
  using Error::Error;
};

// Simulated networks collapse to near-empty or near-full configurations.
struct DegenerateModel : Error {
  using Error::Error;
};

struct MaxIterations : Error {
  using Error::Error;
};

struct SingularInformation : Error {
  using Error::Error;
};

// -- io ----------------------------------------------------------------------

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t row_, const std::string& column_)
      : Error(msg), row(row_), column(column_) {}
  std::size_t row;     // 1-based data row in the offending file
  std::string column;
};

struct DanglingCitation : Error {
  using Error::Error;
};

struct ForwardCitation : Error {
  using Error::Error;
};

struct EmptyTerm : Error {
  using Error::Error;
};

}  // namespace cergm

#endif
