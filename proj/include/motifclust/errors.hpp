#ifndef MOTIFCLUST_ERRORS_HPP
#define MOTIFCLUST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace motifclust {

// Malformed input files (edge lists, community files, rational literals).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Parameter violations (probabilities out of range, size mismatches).
struct InvalidInputError : std::runtime_error {
  explicit InvalidInputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A subset with zero motif volume on a side, or a spectral problem whose
// positive-weight subgraph is disconnected. Callers that scan many subsets
// catch these and skip.
struct DegenerateInputError : std::runtime_error {
  explicit DegenerateInputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Eigensolver failed to reach the requested residual within max_iter.
struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace motifclust

#endif
