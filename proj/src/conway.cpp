/*
   Copyright 2026 The scatplane authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "scatplane/field.hpp"

namespace scatplane {
namespace {

struct ConwayEntry {
    std::uint32_t p;
    std::uint32_t n;
    std::vector<std::uint32_t> coeffs;  // ascending
};

// Conway polynomials (canonical: primitive, norm-compatible with all
// proper-divisor entries, minimal in the standard word order).
const ConwayEntry kConway[] = {
    { 2, 1, {1, 1} },
    { 2, 2, {1, 1, 1} },
    { 2, 3, {1, 1, 0, 1} },
    { 2, 4, {1, 1, 0, 0, 1} },
    { 2, 5, {1, 0, 1, 0, 0, 1} },
    { 2, 6, {1, 1, 0, 1, 1, 0, 1} },
    { 2, 7, {1, 1, 0, 0, 0, 0, 0, 1} },
    { 2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1} },
    { 2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1} },
    { 2, 10, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1} },
    { 2, 11, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1} },
    { 2, 12, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1} },
    { 2, 13, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1} },
    { 2, 14, {1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1} },
    { 2, 15, {1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1} },
    { 2, 16, {1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1} },
    { 3, 1, {1, 1} },
    { 3, 2, {2, 2, 1} },
    { 3, 3, {1, 2, 0, 1} },
    { 3, 4, {2, 0, 0, 2, 1} },
    { 3, 5, {1, 2, 0, 0, 0, 1} },
    { 3, 6, {2, 2, 1, 0, 2, 0, 1} },
    { 3, 7, {1, 0, 2, 0, 0, 0, 0, 1} },
    { 3, 8, {2, 2, 2, 0, 1, 2, 0, 0, 1} },
    { 3, 9, {1, 1, 2, 2, 0, 0, 0, 0, 0, 1} },
    { 3, 10, {2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1} },
    { 5, 1, {3, 1} },
    { 5, 2, {2, 4, 1} },
    { 5, 3, {3, 3, 0, 1} },
    { 5, 4, {2, 4, 4, 0, 1} },
    { 5, 5, {3, 4, 0, 0, 0, 1} },
    { 5, 6, {2, 0, 1, 4, 1, 0, 1} },
    { 5, 7, {3, 3, 0, 0, 0, 0, 0, 1} },
    { 5, 8, {2, 4, 3, 0, 1, 0, 0, 0, 1} },
    { 7, 1, {4, 1} },
    { 7, 2, {3, 6, 1} },
    { 7, 3, {4, 0, 6, 1} },
    { 7, 4, {3, 4, 5, 0, 1} },
    { 7, 5, {4, 1, 0, 0, 0, 1} },
    { 7, 6, {3, 6, 4, 5, 1, 0, 1} },
    { 11, 1, {9, 1} },
    { 11, 2, {2, 7, 1} },
    { 11, 3, {9, 2, 0, 1} },
    { 11, 4, {2, 10, 8, 0, 1} },
    { 13, 1, {11, 1} },
    { 13, 2, {2, 12, 1} },
    { 13, 3, {11, 2, 0, 1} },
    { 13, 4, {2, 12, 3, 0, 1} },
};

}  // namespace

const std::vector<std::uint32_t>* conway_polynomial(std::uint32_t p, std::uint32_t n) {
    for (const auto& entry : kConway)
        if (entry.p == p && entry.n == n) return &entry.coeffs;
    return nullptr;
}

}  // namespace scatplane
