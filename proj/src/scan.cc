// Copyright 2026 The bvpcf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <atomic>
#include <thread>

#include "bvpcf/bvp_analyzer.hpp"
#include "bvpcf/error.hpp"

namespace bvpcf {

namespace {

struct CellOutput {
  ScanCell cell;
  std::vector<ViolationRecord> violations;
  bool skipped = false;
  bool failed = false;
};

CellOutput run_cell(const Integer& k, unsigned long m, const ScanRequest& request) {
  CellOutput out;
  out.cell.k = k;
  out.cell.m = m;
  std::optional<RadicandSpec> spec;
  try {
    spec = RadicandSpec::validate(k, m);
  } catch (const Error& e) {
    out.cell.error = e.what();
    out.skipped = true;
    return out;
  }
  out.cell.valid = true;
  try {
    TheoremReport report = verify_theorems(*spec, request.max_index, request.policy);
    out.cell.thresholds = report.thresholds;
    out.cell.checked = report.checks.size();
    out.cell.violation_count = report.violations.size();
    out.cell.precision_bits = report.precision_bits;
    out.violations = std::move(report.violations);
  } catch (const Error& e) {
    out.cell.error = e.what();
    out.failed = true;
  }
  return out;
}

}  // namespace

ScanResult scan(const ScanRequest& request) {
  std::vector<std::pair<Integer, unsigned long>> work;
  for (unsigned long m = request.m_lo; m <= request.m_hi; ++m) {
    for (Integer k = request.k_lo; k <= request.k_hi; ++k) work.emplace_back(k, m);
  }

  std::vector<CellOutput> outputs(work.size());
  unsigned threads = request.threads != 0 ? request.threads
                                          : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, work.size()));

  // Each worker writes only its own slots, so the merge below is independent
  // of scheduling.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      outputs[i] = run_cell(work[i].first, work[i].second, request);
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  if (!work.empty()) worker();
  pool.clear();

  ScanResult result;
  for (CellOutput& out : outputs) {
    result.skipped += out.skipped;
    result.failed += out.failed;
    result.cells.push_back(std::move(out.cell));
    for (ViolationRecord& v : out.violations) result.violations.push_back(std::move(v));
  }
  std::stable_sort(result.violations.begin(), result.violations.end(),
                   [](const ViolationRecord& a, const ViolationRecord& b) {
                     if (a.m != b.m) return a.m < b.m;
                     if (a.k != b.k) return a.k < b.k;
                     if (a.n != b.n) return a.n < b.n;
                     return a.quantity < b.quantity;
                   });
  return result;
}

}  // namespace bvpcf
