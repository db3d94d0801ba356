#pragma once

#include <string>

#include "iip/verifier.hpp"

namespace iip {

// Human-readable report: verdict bits, the conditions, and with `lemmas` a
// ✓/✗ table of the lemma checks followed by their witnesses.
std::string render_report(const TheoremReport& r, bool lemmas);

}  // namespace iip
