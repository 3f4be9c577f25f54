#pragma once

// Brute-force machinery kept apart from the constructions it checks:
// tableau enumeration, hook-length counts, slide-order-randomized
// rectification, and the exhaustive verification drivers.

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "webfold/tableau.hpp"

namespace webfold {

enum class Filter { all, rotationally_symmetric, domino };

Filter parse_filter(const std::string& name);
std::string to_string(Filter f);

struct EnumerationFilter {
  Shape shape;
  Filter predicate = Filter::all;
};

/// Visits every standard tableau of the shape once, in lexicographic order of
/// row words, by backtracking with lattice-prefix pruning.
void enumerate(const EnumerationFilter& filter, const std::function<void(const Tableau&)>& visit);
std::vector<Tableau> enumerate(const Shape& shape, Filter predicate = Filter::all);

/// f^lambda = N! / prod(hooks) for a straight shape.
boost::multiprecision::cpp_int hook_length_count(const Shape& shape);

/// Rectifies by sliding into inner corners chosen at random.
Tableau rectify_random_order(const Tableau& t, std::mt19937_64& rng);

struct VerificationFailure {
  std::string word;
  std::string detail;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string theorem;
  int max_n = 0;
  int rows = 0;  // 0 when every supported row count was run
  long long instances = 0;
  std::vector<VerificationFailure> failures;
  double elapsed_seconds = 0;

  bool passed() const { return failures.empty(); }
  /// JSON text. Timing is left out when `with_timing` is false so reports
  /// compare byte for byte.
  std::string to_json(bool with_timing = true) const;
  std::string to_text(bool with_timing = true) const;
};

const std::vector<std::string>& theorem_ids();

/// Runs the named property over every filtered tableau with n = 1..max_n.
/// `rows` selects the 2-row or 3-row family (0 runs all the theorem has).
VerificationReport verify(const std::string& theorem_id, int max_n, int rows = 0);

/// Worker threads for verify: WEBFOLD_WORKERS if set, else the hardware count.
int worker_count();

}  // namespace webfold
