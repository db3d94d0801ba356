#include "iip/batch.hpp"

#include <omp.h>

#include <exception>

namespace iip {

std::vector<TheoremReport> verify_batch(const std::vector<Instance>& instances) {
  const auto count = static_cast<long>(instances.size());
  std::vector<TheoremReport> reports(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    try {
      reports[static_cast<std::size_t>(i)] = verify_main(instances[static_cast<std::size_t>(i)]);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }

  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return reports;
}

std::vector<TheoremReport> verify_batch_serial(const std::vector<Instance>& instances) {
  std::vector<TheoremReport> reports;
  reports.reserve(instances.size());
  for (const auto& inst : instances) {
    reports.push_back(verify_main(inst));
  }
  return reports;
}

int batch_threads() { return omp_get_max_threads(); }

}  // namespace iip
