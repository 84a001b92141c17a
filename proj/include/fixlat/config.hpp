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

#ifndef FIXLAT_CONFIG_HPP_
#define FIXLAT_CONFIG_HPP_

#include <cstddef>
#include <cstdint>

namespace fixlat {

// Configurable caps shared by every module. Violations raise CapacityError.
struct Caps {
  std::size_t max_degree = 4096;
  // Exhaustive enumeration oracles engage only up to this group order.
  std::size_t exhaustive_order = 1'000'000;
  std::size_t lattice_size = 200'000;
  std::size_t max_arity = 4;
  std::size_t tuple_count = 4'000'000;
  std::size_t lattice_automorphism_size = 128;
  std::size_t steiner_points = 64;
  std::size_t projective_points = 4096;
};

inline const Caps& default_caps() {
  static const Caps caps;
  return caps;
}

}  // namespace fixlat

#endif  // FIXLAT_CONFIG_HPP_
