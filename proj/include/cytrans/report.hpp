#pragma once

// Recomputes the reference data for the six hypersurface families and checks
// it against the expected values shipped in data/expected.

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cytrans/groebner.hpp"

namespace cytrans {

/// One expected value. Kinds:
///   eq     exact string equality
///   set    ", "-separated items, order ignored
///   cones  "; "-separated cones of space-separated rays, order ignored
///   span   ", "-separated polynomials in x1..x7 spanning the same space
///   prop   cubics in a,b,c equal up to a nonzero rational scalar
///   classes monomial lists whose normal forms in the entry's ring agree
///   note   like eq but reported only, never counted as a mismatch
struct Expectation {
  std::string kind;
  std::string value;
  std::size_t line = 0;
};

/// Parses lines "<kind> <key> = <value>"; '#' starts a comment line.
std::map<std::string, Expectation> read_expectations(const std::string& path);

/// Compares an actual value; throws std::invalid_argument on an unknown kind.
/// `ring` is needed only for the classes kind.
bool matches(const Expectation& e, const std::string& actual,
             const std::shared_ptr<const GradedQuotientRing>& ring = nullptr);

struct ReportEntry {
  std::string section;
  std::string key;
  std::string value;
  std::shared_ptr<const GradedQuotientRing> ring;  // set for quotient bases
};

/// Computes every reported quantity from the bundled data in `data_dir`.
std::vector<ReportEntry> compute_report(const std::string& data_dir);

struct ReportResult {
  std::string text;
  std::size_t checked = 0;
  std::size_t mismatches = 0;
};

/// format is "text" (values with ok/MISMATCH marks) or "kv" (key: value only,
/// followed by the mismatch count).
ReportResult paper_report(const std::string& data_dir, const std::string& format = "text");

}  // namespace cytrans
