// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace texkit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {
inline void cat_one(std::ostringstream&) {}
template <typename A, typename... Rest>
void cat_one(std::ostringstream& os, A&& a, Rest&&... rest) {
    os << a;
    cat_one(os, std::forward<Rest>(rest)...);
}
} // namespace detail

template <typename... Args>
std::string cat(Args&&... args) {
    std::ostringstream os;
    detail::cat_one(os, std::forward<Args>(args)...);
    return os.str();
}

template <typename... Args>
[[noreturn]] void fail(Args&&... args) {
    throw Error(cat(std::forward<Args>(args)...));
}

#define TK_REQUIRE(cond, ...)                    \
    do {                                         \
        if (!(cond)) ::texkit::fail(__VA_ARGS__); \
    } while (0)

inline std::string shape_str(const std::vector<size_t>& s) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "]";
    return os.str();
}

// FNV-1a, used for content fingerprints and ids.
inline uint64_t fnv1a(const void* data, size_t n, uint64_t h = 0xcbf29ce484222325ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline uint64_t fnv1a_str(const std::string& s, uint64_t h = 0xcbf29ce484222325ull) {
    return fnv1a(s.data(), s.size(), h);
}

inline std::string hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

} // namespace texkit
