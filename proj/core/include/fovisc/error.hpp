#pragma once

#include <stdexcept>
#include <string>

namespace fovisc {

// Precondition violated: parameter outside its admissible domain.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A linear solve or transfer-function denominator vanished.
class SingularError : public std::runtime_error {
 public:
  explicit SingularError(const std::string& what) : std::runtime_error(what) {}
};

// Least-squares regressors do not span the parameter space.
class RankDeficientError : public std::runtime_error {
 public:
  explicit RankDeficientError(const std::string& what)
      : std::runtime_error(what) {}
};

// A boundary search whose endpoints do not straddle a transition.
class NoBracketError : public std::runtime_error {
 public:
  explicit NoBracketError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fovisc
