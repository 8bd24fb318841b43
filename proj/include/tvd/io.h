// Copyright 2026 The tvd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TVD_IO_H
#define TVD_IO_H

#include <cstdint>
#include <string>
#include <string_view>

namespace tvd {

/// "0x" followed by lowercase hex digits.
std::string hex(uint32_t word);
/// Accepts an optional 0x prefix. Throws std::invalid_argument on junk.
uint32_t parse_hex(std::string_view text);

/// Shortest decimal that parses back to the same double.
std::string format_double(double x);

}  // namespace tvd

#endif  // TVD_IO_H
