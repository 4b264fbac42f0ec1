#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spingraph/graph.hpp"
#include "spingraph/permutation.hpp"
#include "spingraph/rotation.hpp"

namespace spingraph {

struct CheckContext {
  int genus = 0;
  GraphKind kind = GraphKind::Standard;
  std::uint64_t seed = 0;  // task-local, derived from the run seed
};

struct CheckOutcome {
  bool passed = true;
  nlohmann::ordered_json counterexample;  // set on failure
  nlohmann::ordered_json notes;           // modes, sample sizes
};

struct CheckDef {
  std::string id;
  std::string reference;
  bool standard = true;
  bool weierstrass = false;
  int only_genus = 0;  // nonzero pins the check to a single genus
  std::function<CheckOutcome(const CheckContext&)> run;
};

const std::vector<CheckDef>& check_registry();
std::vector<std::string> check_ids();

struct CheckResult {
  std::string id;
  std::string reference;
  int genus = 0;
  GraphKind kind = GraphKind::Standard;
  bool passed = false;
  nlohmann::ordered_json notes;
  nlohmann::ordered_json counterexample;
  double elapsed_ms = 0.0;
};

struct VerificationReport {
  int genus_lo = 0;
  int genus_hi = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> checks_requested;
  std::vector<CheckResult> results;
  bool all_passed() const;
};

// Runs the requested checks over [genus_lo, genus_hi] for both graph
// kinds (standard from genus 3, Weierstrass from genus 2). Tasks are
// independent and run on a small worker pool; results come back in
// canonical order regardless of scheduling.
VerificationReport run_verification(int genus_lo, int genus_hi,
                                    const std::vector<std::string>& filter,
                                    std::uint64_t seed, bool parallel = true);

// Timing-free JSON rendering; byte-identical for identical inputs.
nlohmann::ordered_json report_to_json(const VerificationReport& report);

// Human-readable table, timings included.
std::string report_table(const VerificationReport& report);

namespace detail {

using RotationFn =
    std::function<Permutation(const SpinGraph&, const Face&, const OrientedEdge&)>;

// The parity suite with an injectable rotation, so a deliberately wrong
// rule can be shown to fail with a counterexample.
CheckOutcome parity_suite(const SpinGraph& g, const RotationFn& rot, int face_cap);

}  // namespace detail

}  // namespace spingraph
