#pragma once

#include <vector>

#include "iip/verifier.hpp"

namespace iip {

// verify_main over a batch. Reports come back in input order.
//
// verify_batch spreads instances over OpenMP threads (dynamic schedule; one
// instance per iteration). verify_batch_serial is the reference loop the
// parallel kernel is tested against. If any instance throws, the exception of
// the lowest failing index is rethrown after the loop.
std::vector<TheoremReport> verify_batch(const std::vector<Instance>& instances);
std::vector<TheoremReport> verify_batch_serial(const std::vector<Instance>& instances);

int batch_threads();

}  // namespace iip
