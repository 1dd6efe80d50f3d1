// Copyright 2026 The SCCG Toolkit Authors
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

#ifndef SCCG_SIZE_CAP_H_
#define SCCG_SIZE_CAP_H_

#include <cstdint>
#include <optional>
#include <string_view>

namespace sccg {

inline constexpr std::uint64_t kDefaultSizeCap = 10'000'000;

// Node cap from the SCCG_SIZE_CAP environment variable, or kDefaultSizeCap
// when unset. Throws InvalidArgument if the variable is not a positive
// integer.
std::uint64_t SizeCapFromEnvironment();

// Throws SizeCapExceeded if `predicted_nodes` exceeds `cap`, or if the
// prediction itself overflowed (nullopt).
void EnforceSizeCap(std::optional<std::uint64_t> predicted_nodes,
                    std::uint64_t cap, std::string_view what);

// Overflow-checked arithmetic on unsigned 64-bit values.
std::optional<std::uint64_t> CheckedAdd(std::uint64_t a, std::uint64_t b);
std::optional<std::uint64_t> CheckedMul(std::uint64_t a, std::uint64_t b);
std::optional<std::uint64_t> CheckedPow(std::uint64_t base,
                                        std::uint64_t exponent);

}  // namespace sccg

#endif  // SCCG_SIZE_CAP_H_
