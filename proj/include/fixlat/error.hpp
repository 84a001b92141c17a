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

#ifndef FIXLAT_ERROR_HPP_
#define FIXLAT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fixlat {

// Malformed input: bad permutation, out-of-range point, non-prime field...
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured cap was exceeded. Never silently truncated.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(std::string cap, std::size_t limit, std::size_t reached,
                const std::string& what)
      : std::runtime_error(what),
        cap_(std::move(cap)),
        limit_(limit),
        reached_(reached) {}

  const std::string& cap() const { return cap_; }
  std::size_t limit() const { return limit_; }
  // Partial count at the moment the cap was hit (or the requested size).
  std::size_t reached() const { return reached_; }

 private:
  std::string cap_;
  std::size_t limit_;
  std::size_t reached_;
};

// The operation's precondition does not hold for a well-formed input.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A result failed its own post-verification.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fixlat

#endif  // FIXLAT_ERROR_HPP_
