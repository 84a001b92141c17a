// Copyright 2026 The fixlat Authors
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

#ifndef FIXLAT_ACCEPTANCE_HPP_
#define FIXLAT_ACCEPTANCE_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fixlat/config.hpp"

namespace fixlat {

// End-to-end verification checks, each pairing the library with an
// independent brute-force computation.
struct Criterion {
  int id;
  std::string name;
  std::string summary;
  // Wall-clock limit in seconds; nullopt for checks with no time bound.
  std::optional<double> time_limit;
};

struct CriterionResult {
  Criterion criterion;
  bool pass = false;
  // Check outcome ignoring the time limit.
  bool checks_pass = false;
  double seconds = 0;
  std::vector<std::string> failures;
  std::string detail;
};

struct AcceptanceOptions {
  Caps caps;
  // Names or numeric ids; empty runs everything.
  std::vector<std::string> only;
  bool fail_fast = false;
  std::size_t workers = 1;
  // "fano-block" corrupts one block of the reference Fano system.
  std::optional<std::string> inject_fault;
};

const std::vector<Criterion>& acceptance_criteria();

// Results come back in criterion order whatever the worker count. With
// fail_fast, criteria not yet started after a failure are skipped.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

// "PASS  3 galois  (0.41 s, limit 5 s)" plus failure lines.
std::string format_result_line(const CriterionResult& r);

}  // namespace fixlat

#endif  // FIXLAT_ACCEPTANCE_HPP_
