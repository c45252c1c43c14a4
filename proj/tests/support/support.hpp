#pragma once

// Oracles, generators and property suites shared by the test binaries.

#include <random>
#include <string>
#include <vector>

#include "eqsing/limits.hpp"
#include "eqsing/rolle.hpp"

namespace testsupport {

struct CorpusCase {
  std::string name;
  eqsing::Parametrization param;
};

/// Every parametrization file of the shipped corpus, sorted by name.
std::vector<CorpusCase> corpus();

/// Entries a^i t^j with i <= 8, 1 <= j <= 8, 3 <= N <= 5 and at least one
/// pure power of t.
eqsing::Parametrization random_monomial_family(std::mt19937& rng);

/// Product of (t - r_i)^{m_i} over distinct small integer roots, including 0.
eqsing::UPolyQ random_rolle_polynomial(std::mt19937& rng);

/// Numerical limit of the direction of vec along an arc with c = `c`:
/// samples at s = 10^-3 .. 10^-6 with t = s^q, Euclidean normalisation and
/// Aitken extrapolation of the last three samples.
std::vector<long double> numeric_arc_limit(const std::vector<eqsing::BiPoly>& vec, const eqsing::Arc& arc);

/// Max distance between two directions after normalising both and matching sign.
long double projective_distance(const std::vector<long double>& x, const std::vector<long double>& y);

std::vector<long double> to_long_double(const std::vector<eqsing::Scalar>& v);

/// Replaces the free arc coefficient by a number.
eqsing::Arc specialise(const eqsing::Arc& arc, const eqsing::Scalar& c);

struct SuiteResult {
  bool ok = true;
  unsigned cases = 0;
  std::string detail;  // first failure
  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

SuiteResult plucker_quadric_suite(unsigned random_cases, unsigned seed);
SuiteResult b_implies_a_suite(unsigned random_cases, unsigned seed);
SuiteResult pruning_invariance_suite();
SuiteResult semicontinuity_suite(unsigned random_cases, unsigned seed);
SuiteResult rolle_suite(unsigned count, unsigned seed);
SuiteResult arc_oracle_suite();

struct FuzzStats {
  unsigned families = 0;
  unsigned agree = 0;
  unsigned undecided = 0;
  unsigned disagree = 0;
  unsigned verified = 0;  // decisive agreements on Verified
  unsigned refuted = 0;
  std::string first_disagreement;
};

/// Whitney and Zariski verdicts on `count` random monomial families plus the corpus.
FuzzStats equivalence_fuzz(unsigned count, unsigned seed);

}  // namespace testsupport
