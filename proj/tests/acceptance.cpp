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

// Runs every verification check and prints one line per check. Exit status
// is nonzero when any check fails.

#include <cstdlib>
#include <iostream>

#include "fixlat/acceptance.hpp"

int main(int argc, char** argv) {
  fixlat::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) options.only.emplace_back(argv[i]);
  const auto results = fixlat::run_acceptance(options);
  std::size_t passed = 0;
  for (const auto& r : results) {
    std::cout << fixlat::format_result_line(r) << "\n";
    passed += r.pass;
  }
  std::cout << passed << "/" << results.size() << " criteria passed\n";
  return passed == results.size() ? EXIT_SUCCESS : EXIT_FAILURE;
}
