#pragma once

#include <stdexcept>
#include <string>

namespace zlab {

enum class ErrorCode {
  indeterminate,       // 0 * inf, strict inf + inf
  domain,              // strict-mode power of zero/infinity
  singularity,         // log-derivative at a zero or pole
  degenerate,          // constant function where a nonconstant one is required
  invalid_spec,        // violated data-model invariant
  unsupported_form,    // candidate outside every descriptor grammar
  target_mismatch,     // recipe parameters outside the classified set
  no_root,             // bracket without sign change
  invalid_theta,       // interior angle outside the open window
  newton_divergence,
  infeasible_target,   // A1 argument not allowed on the chosen ray
  empty_subsequence,
  inconsistent_target,
  config,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace zlab
