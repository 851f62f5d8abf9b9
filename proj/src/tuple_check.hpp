#pragma once

#include "tlie/parallel.hpp"
#include "tlie/report.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace tlie::detail {

/// Evaluates one identity over an indexed tuple set, in parallel, with
/// deterministic (index-ordered) violation output.
inline Report run_tuple_check(std::string subject, std::size_t count,
                              const std::function<std::optional<Violation>(std::size_t)>& eval) {
  auto start = std::chrono::steady_clock::now();
  std::vector<std::optional<Violation>> slots(count);
  parallel_for(count, [&](std::size_t i) { slots[i] = eval(i); });

  Report report;
  report.subject = std::move(subject);
  report.tuples_checked = count;
  for (auto& slot : slots)
    if (slot) report.violations.push_back(std::move(*slot));
  report.outcome = report.violations.empty() ? Outcome::pass : Outcome::fail;
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace tlie::detail
