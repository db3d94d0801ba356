#pragma once

#include <string>
#include <vector>

#include "iip/verifier.hpp"

namespace iip {

// The three worked examples: R1 (invariance fails), R2 (the theorem at work),
// R3 (M A != A N).
std::vector<Instance> fixtures();
Instance fixture(const std::string& label);
bool is_fixture_label(const std::string& label);

struct Mismatch {
  std::string fixture;
  std::string quantity;
  std::string expected;
  std::string actual;
};

struct FixtureCheck {
  std::string fixture;
  std::size_t quantities = 0;
  std::vector<Mismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Recomputes every quantity printed for the fixture named by inst.label()
// from inst's data and compares it with the printed value, exactly. Passing a
// perturbed copy of a fixture reports the quantities that moved.
FixtureCheck compare_with_printed_values(const Instance& inst);

}  // namespace iip
