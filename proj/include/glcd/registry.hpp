#pragma once

// Reproduction of the numbered worked examples. Each example recomputes every
// numeric claim and compares it with the printed value. A differing claim is
// "flagged" when the discrepancy manifest (data/discrepancies.json) lists the
// same paper value and the same oracle value; otherwise it is a mismatch.

#include <set>
#include <string>
#include <vector>

#include "glcd/linear_code.hpp"
#include "glcd/serialize.hpp"

namespace glcd {

enum class ClaimStatus { match, flagged, mismatch };

const char* to_string(ClaimStatus s);

struct Claim {
  std::string what;
  std::string paper;
  std::string computed;
  ClaimStatus status = ClaimStatus::match;
  std::string note;
};

struct ExampleReport {
  std::string id;
  std::string title;
  json inputs;
  std::vector<Claim> claims;
  /// Names of library operations the reproduction called.
  std::set<std::string> operations;

  bool passed() const;
  std::size_t count(ClaimStatus s) const;
};

/// "2.4", "3.8", "3.14", "3.15", "4.5", "4.8".
const std::vector<std::string>& example_ids();

/// Throws std::invalid_argument for an unknown id.
ExampleReport reproduce_example(const std::string& id, const DistanceOptions& options = {});

/// The parsed manifest, {"version": int, "entries": [...]}.
const json& discrepancy_manifest();

/// Every public operation the reproductions are expected to exercise.
const std::vector<std::string>& catalogued_operations();

json to_json(const ExampleReport& report);

}  // namespace glcd
