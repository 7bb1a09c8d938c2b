/*
   Copyright 2026 The orbilift authors

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

#ifndef ORBILIFT_COMMON_HPP
#define ORBILIFT_COMMON_HPP

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace orbilift {

/// Thrown by every engine operation on contract violation.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline void hash_combine(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

// Orders variable names so that z2 < z10: alphabetic prefix first, then the
// numeric suffix by value. Plain lexicographic otherwise.
inline bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
        const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
        if (da && db) {
            std::size_t i2 = i, j2 = j;
            while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
            while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
            // compare digit runs numerically: longer run (sans leading zeros) is bigger
            std::size_t ia = i, jb = j;
            while (ia < i2 - 1 && a[ia] == '0') ++ia;
            while (jb < j2 - 1 && b[jb] == '0') ++jb;
            const std::size_t la = i2 - ia, lb = j2 - jb;
            if (la != lb) return la < lb;
            for (std::size_t k = 0; k < la; ++k)
                if (a[ia + k] != b[jb + k]) return a[ia + k] < b[jb + k];
            i = i2;
            j = j2;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return (a.size() - i) < (b.size() - j);
}

struct NaturalLess {
    bool operator()(const std::string& a, const std::string& b) const { return natural_less(a, b); }
};

}  // namespace orbilift

#endif
