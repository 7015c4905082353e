#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

// Bitstrings are plain std::strings over '0'/'1'. The length-lexicographic
// order (shorter first, then dictionary with 0 < 1) is the order used
// everywhere a minimum over strings is taken.

namespace rtm {

using Bits = std::string;

inline bool is_bits(const std::string& s) {
    for (char c : s)
        if (c != '0' && c != '1') return false;
    return true;
}

inline bool llex_less(const Bits& a, const Bits& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// All strings of length exactly n, in dictionary order.
inline std::vector<Bits> strings_of_length(std::size_t n) {
    std::vector<Bits> out;
    out.reserve(std::size_t{1} << n);
    Bits cur(n, '0');
    while (true) {
        out.push_back(cur);
        std::size_t i = n;
        while (i > 0 && cur[i - 1] == '1') cur[--i] = '0';
        if (i == 0) break;
        cur[i - 1] = '1';
    }
    if (n == 0) out.resize(1);
    return out;
}

// All strings of length <= max_len, in llex order.
inline std::vector<Bits> strings_up_to(std::size_t max_len) {
    std::vector<Bits> out;
    for (std::size_t n = 0; n <= max_len; ++n)
        for (auto& s : strings_of_length(n)) out.push_back(s);
    return out;
}

// Successor in llex order over {0,1}*.
inline Bits llex_next(Bits s) {
    std::size_t i = s.size();
    while (i > 0 && s[i - 1] == '1') s[--i] = '0';
    if (i == 0) return Bits(s.size() + 1, '0');
    s[i - 1] = '1';
    return s;
}

inline Bits random_bits(std::mt19937_64& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::size_t n = len(rng);
    Bits s(n, '0');
    for (auto& c : s) c = (rng() & 1) ? '1' : '0';
    return s;
}

} // namespace rtm
