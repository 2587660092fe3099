#pragma once

// Numeric cross-check for the combinatorial intersection kernel.
//
// The oracle realizes the surface group as a discrete cocompact group of
// disk isometries: side pairings of the regular 4g-gon with all vertices
// identified. Machine verification replaces convention chasing — the built
// representation must map the relator to +-identity within certified interval
// bounds, and every generator must be certified hyperbolic.
//
// Intersection numbers are then counted the classical way: i(alpha, beta) is
// the number of cosets g<alpha> whose translated axis crosses one fundamental
// segment of beta's axis, and the self-intersection count is the same with
// the identity coset excluded. Candidate cosets come from tracing both axis
// segments through the tessellation (a crossing lift must share a tile with
// the crossed segment). Every tile carries the exact word of its deck
// transformation, so element identity, coset membership, and commutation are
// decided exactly in the group — only genuinely geometric questions (which
// side of a geodesic, which exit side of a tile) go through certified
// interval sign tests with outward rounding. Two interval backends share the
// geometric code: hardware doubles widened one ulp per operation (fast,
// limited headroom) and MPFR at escalating precision. Anything uncertifiable
// escalates through the backend ladder, then retries with conjugated
// representatives, and finally reports inconclusive — the oracle never
// guesses.
//
// Inputs must represent primitive (non-power) classes; powers are routed
// through multiplicativity formulas by the callers and are out of scope here.
// This is test-only code: it shares the word/conjugacy utilities with the
// engine but none of the combinatorial counting machinery.

#include <string>

#include "hg/model.h"
#include "hg/word.h"

namespace hgtest {

struct OracleOutcome {
  bool conclusive = false;
  long value = -1;
  std::string note;  // failure reason when inconclusive
};

// How much of the escalation ladder to climb before giving up. kQuick stops
// after the hardware backend plus a short MPFR pass; kStandard grinds through
// the entire ladder of precisions and base-point offsets.
enum class OracleEffort { kQuick, kStandard };

class HyperbolicOracle {
 public:
  explicit HyperbolicOracle(const hg::SplittingModel& m);
  ~HyperbolicOracle();
  HyperbolicOracle(const HyperbolicOracle&) = delete;
  HyperbolicOracle& operator=(const HyperbolicOracle&) = delete;

  // Geometric intersection number of two primitive classes in minimal
  // position. The classes should not be conjugate (coincident axes never
  // certify and come back inconclusive).
  OracleOutcome intersection(const hg::Word& u, const hg::Word& v,
                             OracleEffort effort = OracleEffort::kStandard);

  // Self-intersection number of a primitive class.
  OracleOutcome self_intersection(
      const hg::Word& u, OracleEffort effort = OracleEffort::kStandard);

 private:
  struct Impl;
  Impl* impl_;
};

}  // namespace hgtest
