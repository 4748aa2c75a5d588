#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace rcsim {

// Agents are labeled 1..n.
using AgentId = std::int32_t;
using AgentSet = std::set<AgentId>;

// Discrete time step.
using Step = std::int64_t;

// Raised when an operation is called outside its domain (bad ids, steps
// before t0, malformed parameters).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised by checkers whose hypotheses cannot be verified on the requested
// interval. The message names the failed hypothesis.
class HypothesisError : public DomainError {
 public:
  HypothesisError(std::string hypothesis, const std::string& detail)
      : DomainError(hypothesis + ": " + detail), hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

}  // namespace rcsim
