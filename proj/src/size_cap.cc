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

#include "sccg/size_cap.h"

#include <charconv>
#include <cstdlib>
#include <string>

#include "sccg/error.h"

namespace sccg {

std::uint64_t SizeCapFromEnvironment() {
  const char* raw = std::getenv("SCCG_SIZE_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultSizeCap;
  const std::string_view text(raw);
  std::uint64_t cap = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc() || ptr != text.data() + text.size() || cap == 0) {
    throw InvalidArgument("SCCG_SIZE_CAP must be a positive integer, got '" +
                          std::string(text) + "'");
  }
  return cap;
}

void EnforceSizeCap(std::optional<std::uint64_t> predicted_nodes,
                    std::uint64_t cap, std::string_view what) {
  if (!predicted_nodes) {
    throw SizeCapExceeded(std::string(what) +
                          ": predicted node count overflows 64 bits");
  }
  if (*predicted_nodes > 0xFFFFFFFFull) {
    throw SizeCapExceeded(std::string(what) + ": predicted " +
                          std::to_string(*predicted_nodes) +
                          " nodes exceeds the 32-bit node id range");
  }
  if (*predicted_nodes > cap) {
    throw SizeCapExceeded(std::string(what) + ": predicted " +
                          std::to_string(*predicted_nodes) +
                          " nodes exceeds the cap of " + std::to_string(cap));
  }
}

std::optional<std::uint64_t> CheckedAdd(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) return std::nullopt;
  return out;
}

std::optional<std::uint64_t> CheckedMul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  return out;
}

std::optional<std::uint64_t> CheckedPow(std::uint64_t base,
                                        std::uint64_t exponent) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    auto next = CheckedMul(out, base);
    if (!next) return std::nullopt;
    out = *next;
    if (out == 0 || out == 1) break;
  }
  return out;
}

}  // namespace sccg
