#pragma once

#include <stdexcept>
#include <string>

namespace hg {

// Error taxonomy, mirrored by the CLI exit codes:
//   input_error  -> exit 3: malformed or precondition-violating input.
//   budget_error -> exit 2: a bounded search gave up; never a silent failure.
//   defect_error -> exit 4: an internal invariant that mathematics guarantees
//                   was observed to fail; always a bug, never recoverable.
// A verified mathematical negative (exit 1) is an ordinary return value, not
// an exception.

class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

class defect_error : public std::runtime_error {
 public:
  explicit defect_error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail_input(const std::string& what) { throw input_error(what); }
[[noreturn]] inline void fail_budget(const std::string& what) { throw budget_error(what); }
[[noreturn]] inline void fail_defect(const std::string& what) { throw defect_error(what); }

// Internal consistency checks that must hold by proved facts. Kept on in all
// build types: every caller treats a failure as a reportable contradiction.
inline void check_defect(bool ok, const char* what) {
  if (!ok) throw defect_error(std::string("internal defect: ") + what);
}

}  // namespace hg
