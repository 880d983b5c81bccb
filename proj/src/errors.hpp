#pragma once

#include <stdexcept>
#include <string>

namespace bratu {

// q at or above the fold: the mu-relation has no root there.
class NoRootError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A direct linear solve met a pivot below the admissible floor.
class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A grid-refinement study could not complete; level() is the failing grid.
class StudyError : public std::runtime_error {
 public:
  StudyError(const std::string& what, int level)
      : std::runtime_error(what), level_(level) {}
  int level() const noexcept { return level_; }

 private:
  int level_;
};

}  // namespace bratu
