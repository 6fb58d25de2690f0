#include "brute_force.hpp"

#include <set>
#include <stdexcept>
#include <vector>

namespace brute {

namespace {

using Span = std::uint32_t;  // bitmask over the 2^n vectors of F_2^n

Span span_of(const std::vector<unsigned>& vecs) {
    Span s = 1;  // zero vector
    for (unsigned v : vecs) {
        Span shifted = 0;
        for (unsigned x = 0; x < 32; ++x)
            if (s >> x & 1U) shifted |= Span{1} << (x ^ v);
        s |= shifted;
    }
    return s;
}

void all_subspaces(unsigned n, unsigned k, std::set<Span>& out) {
    const unsigned size = 1U << n;
    std::vector<unsigned> pick(k, 0);
    // every k-tuple of vectors
    std::uint64_t total = 1;
    for (unsigned i = 0; i < k; ++i) total *= size;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t t = idx;
        for (unsigned i = 0; i < k; ++i) {
            pick[i] = static_cast<unsigned>(t % size);
            t /= size;
        }
        const Span s = span_of(pick);
        if (static_cast<unsigned>(__builtin_popcount(s)) == (1U << k)) out.insert(s);
    }
}

}  // namespace

std::uint64_t count_subspaces_f2(unsigned n, unsigned k) {
    if (n > 5) throw std::invalid_argument("brute force limited to n <= 5");
    if (k > n) return 0;
    std::set<Span> spaces;
    all_subspaces(n, k, spaces);
    return spaces.size();
}

std::uint64_t count_flags_f2(unsigned n, const unsigned* parts, unsigned count) {
    if (n > 5) throw std::invalid_argument("brute force limited to n <= 5");
    // Chain of dimensions n > d1 > d2 > ... with d_i = n - p1 - ... - p_i.
    std::vector<unsigned> dims;
    unsigned d = n;
    for (unsigned i = 0; i < count; ++i) {
        if (parts[i] > d) return 0;
        d -= parts[i];
        dims.push_back(d);
    }
    std::vector<std::set<Span>> levels;
    for (unsigned dim : dims) {
        std::set<Span> s;
        all_subspaces(n, dim, s);
        levels.push_back(std::move(s));
    }
    // count chains top-down: number of ways ending at each space of the current level
    std::vector<std::pair<Span, std::uint64_t>> current{{(n == 5 ? ~Span{0} : (Span{1} << (1U << n)) - 1), 1}};
    for (const auto& level : levels) {
        std::vector<std::pair<Span, std::uint64_t>> next;
        for (Span s : level) {
            std::uint64_t ways = 0;
            for (const auto& [parent, w] : current)
                if ((s & parent) == s) ways += w;
            if (ways != 0) next.emplace_back(s, ways);
        }
        current = std::move(next);
    }
    std::uint64_t total = 0;
    for (const auto& [s, w] : current) total += w;
    return total;
}

std::uint64_t q_integer_sum(unsigned n, unsigned q) {
    std::uint64_t sum = 0;
    std::uint64_t power = 1;
    for (unsigned i = 0; i < n; ++i) {
        sum += power;
        power *= q;
    }
    return sum;
}

}  // namespace brute
