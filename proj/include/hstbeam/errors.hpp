#pragma once

#include <stdexcept>
#include <string>

namespace hstbeam {

// Input that cannot be parsed or fails validation. The CLI maps this to
// exit code 2.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Scenario that cannot be served at all, for example more requested beams
// than the array provides. The CLI maps this to exit code 3.
class infeasible_error : public std::runtime_error {
 public:
  explicit infeasible_error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

}  // namespace hstbeam
