#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "mixgauss/codes.hpp"
#include "mixgauss/errors.hpp"
#include "mixgauss/mgn.hpp"
#include "mixgauss/oracle.hpp"

using mixgauss::TypeProfile;
using namespace mixgauss::codes;

namespace {

MixedWord random_word(const Ambient& a, std::mt19937_64& rng) {
    MixedWord w = MixedWord::zero(a);
    for (auto& x : w.bin) x = static_cast<unsigned>(rng() % 2);
    for (auto& x : w.mod_part) x = static_cast<unsigned>(rng() % a.modulus());
    return w;
}

bool orthogonal_to_all(const std::vector<MixedWord>& rows, const std::vector<MixedWord>& gens) {
    for (const auto& h : rows)
        for (const auto& g : gens)
            if (inner_product(h, g) != 0) return false;
    return true;
}

/// Rank over F_2 by elimination on a copy.
unsigned rank_f2(const Block& b) {
    std::vector<std::vector<int>> m(b.rows(), std::vector<int>(b.cols()));
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m[i][j] = b(i, j) & 1;
    unsigned rank = 0;
    for (std::size_t col = 0; col < b.cols() && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != rank && m[i][col] != 0)
                for (std::size_t j = 0; j < b.cols(); ++j) m[i][j] ^= m[rank][j];
        ++rank;
    }
    return rank;
}

unsigned log2_size(std::size_t n) {
    unsigned k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
}

}  // namespace

TEST_SUITE("codes") {

TEST_CASE("ambient and words") {
    CHECK_THROWS_AS(Ambient(1, 1, 4), std::invalid_argument);
    const Ambient a(1, 2, 3);
    CHECK(a.bits() == 7);
    CHECK(a.modulus() == 8);
    const MixedWord u{{1}, {1, 2}, 3};
    const MixedWord v{{1}, {3, 1}, 3};
    CHECK(inner_product(u, v) == 1);  // 4*1 + 3 + 2 = 9
    CHECK(inner_product(u, u) == 1);  // 4 + 1 + 4
    CHECK((u + v) == MixedWord{{0}, {4, 3}, 3});
    CHECK((3U * u) == MixedWord{{1}, {3, 6}, 3});
    CHECK(u.order() == 8);
    CHECK(MixedWord{{1}, {0, 4}, 3}.order() == 2);
    CHECK(MixedWord{{0}, {2, 4}, 3}.order() == 4);
    CHECK(MixedWord::zero(a).order() == 1);
    CHECK_THROWS_AS((MixedWord{{2}, {0, 0}, 3}.check()), std::invalid_argument);
    CHECK_THROWS_AS(inner_product(u, MixedWord{{1}, {1}, 3}), std::invalid_argument);
    const MixedWord w4{{1}, {1, 2}, 2};
    CHECK(inner_product(w4, w4) == 3);  // 2 + 1 + 4 mod 4
}

TEST_CASE("packed arithmetic agrees with word arithmetic") {
    std::mt19937_64 rng(7);
    for (unsigned e : {2U, 3U})
        for (unsigned alpha = 0; alpha <= 3; ++alpha)
            for (unsigned beta = 0; beta <= 4; ++beta) {
                const Ambient a(alpha, beta, e);
                const WordSpace space(a);
                for (int trial = 0; trial < 50; ++trial) {
                    const MixedWord x = random_word(a, rng);
                    const MixedWord y = random_word(a, rng);
                    const auto px = space.pack(x);
                    const auto py = space.pack(y);
                    CHECK(space.unpack(px) == x);
                    CHECK(space.unpack(space.add(px, py)) == x + y);
                    const unsigned m = static_cast<unsigned>(rng() % 9);
                    CHECK(space.unpack(space.scale(px, m)) == m * x);
                    CHECK(space.inner(px, py) == inner_product(x, y));
                }
            }
    CHECK_THROWS_AS(WordSpace(Ambient(0, 21, 3)), mixgauss::ResourceGuardError);
}

TEST_CASE("packing preserves lexicographic order") {
    const Ambient a(1, 1, 3);
    const WordSpace space(a);
    const MixedWord lo{{0}, {7}, 3};
    const MixedWord hi{{1}, {0}, 3};
    CHECK(space.pack(lo) < space.pack(hi));
}

TEST_CASE("span and closure") {
    const Ambient a(1, 1, 3);
    const std::vector<MixedWord> gens{{{1}, {2}, 3}};
    const Code c = span(a, gens);
    CHECK(c.size() == 4);
    CHECK(c.contains(MixedWord{{0}, {4}, 3}));
    CHECK_FALSE(c.contains(MixedWord{{1}, {0}, 3}));
    CHECK(c.profile() == TypeProfile{1, 1, 0, 0, 1, 0});
    CHECK(span(a, std::vector<MixedWord>{}).size() == 1);
    CHECK(Code(a).size() == 1);
    const auto words = c.words();
    CHECK(Code::from_words(a, words) == c);
    const std::vector<MixedWord> broken{{{0}, {0}, 3}, {{0}, {1}, 3}, {{0}, {2}, 3}};
    CHECK_THROWS_AS(Code::from_words(a, broken), std::invalid_argument);
    const auto gp = c.generators_packed();
    std::vector<MixedWord> regen;
    const WordSpace space(a);
    for (auto g : gp) regen.push_back(space.unpack(g));
    CHECK(span(a, regen) == c);
}

TEST_CASE("classification examples") {
    const Ambient a(2, 2, 3);
    // (1,0 | 0,4), (0,0 | 1,0), (0,1 | 0,2): binary rank 1, one order-8 and one order-4 generator
    const std::vector<MixedWord> gens{{{1, 0}, {0, 4}, 3}, {{0, 0}, {1, 0}, 3}, {{0, 1}, {0, 2}, 3}};
    const Code c = span(a, gens);
    CHECK(c.size() == 2 * 8 * 4);
    CHECK(c.profile() == TypeProfile{2, 2, 1, 1, 1, 0});
    CHECK(classify_type(c) == c.profile());
    const WordSpace s(Ambient(0, 1, 3));
    CHECK_THROWS_AS(classify_packed(s, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("standard form assembly") {
    const TypeProfile p{2, 2, 1, 1, 1, 0};
    StandardFormMatrix m = zero_standard_form(p);
    m.abar(0, 0) = 1;
    m.s2(0, 0) = 1;
    m.a01(0, 0) = 3;
    const auto rows = assemble(m);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == MixedWord{{1, 1}, {0, 0}, 3});
    CHECK(rows[1] == MixedWord{{0, 0}, {1, 3}, 3});
    CHECK(rows[2] == MixedWord{{0, 1}, {0, 2}, 3});
    m.a01(0, 0) = 8;
    CHECK_THROWS_AS(assemble(m), std::invalid_argument);
    CHECK_THROWS_AS(zero_standard_form(TypeProfile{3, 2, 4, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(zero_standard_form(TypeProfile{2, 2, 0, 1, 0, 1}, 2), std::invalid_argument);
    CHECK_FALSE(valid_for(TypeProfile{2, 2, 0, 1, 0, 1}, 2));
    CHECK(valid_for(TypeProfile{2, 2, 0, 1, 0, 1}, 3));
}

TEST_CASE("random standard forms are deterministic") {
    const TypeProfile p{3, 3, 1, 1, 1, 1};
    const auto a = assemble(random_standard_form(p, 42));
    const auto b = assemble(random_standard_form(p, 42));
    CHECK(a == b);
    bool differs = false;
    for (std::uint64_t seed = 0; seed < 10 && !differs; ++seed)
        differs = assemble(random_standard_form(p, seed)) != a;
    CHECK(differs);
}

TEST_CASE("standard forms span codes of their type") {
    for (unsigned e : {3U, 2U})
        for (unsigned alpha = 0; alpha <= 3; ++alpha)
            for (unsigned beta = 0; beta <= 3; ++beta)
                for (const auto& p : mixgauss::mgn::profiles_for(alpha, beta)) {
                    if (!valid_for(p, e)) continue;
                    const unsigned expected_log =
                        e == 3 ? p.k0 + 3 * p.k1 + 2 * p.k2 + p.k3 : p.k0 + 2 * p.k1 + p.k2;
                    for (std::uint64_t seed = 0; seed < 20; ++seed) {
                        const Code c = span(Ambient(alpha, beta, e), assemble(random_standard_form(p, seed, e)));
                        CAPTURE(p);
                        CAPTURE(seed);
                        CHECK(c.size() == (std::size_t{1} << expected_log));
                        CHECK(c.profile() == p);
                    }
                }
}

TEST_CASE("parity check rows are orthogonal to the generators") {
    for (const TypeProfile& p : {TypeProfile{2, 2, 1, 1, 1, 0}, TypeProfile{3, 3, 1, 1, 1, 1},
                                 TypeProfile{2, 3, 0, 1, 1, 1}, TypeProfile{3, 2, 2, 0, 1, 0}}) {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const StandardFormMatrix m = random_standard_form(p, seed);
            const auto h = parity_check(m);
            CHECK(h.rows.size() == (p.alpha - p.k0) + (p.beta - p.l()) + p.k3 + p.k2);
            CHECK(orthogonal_to_all(h.rows, assemble(m)));
        }
    }
}

TEST_CASE("parity check is orthogonal for every block choice at a small profile") {
    const TypeProfile p{1, 2, 1, 1, 0, 0};
    for (int t = 0; t < 2; ++t)
        for (int a03 = 0; a03 < 8; ++a03) {
            StandardFormMatrix m = zero_standard_form(p);
            m.t(0, 0) = t;
            m.a03(0, 0) = a03;
            CHECK(orthogonal_to_all(parity_check(m).rows, assemble(m)));
        }
    const TypeProfile q{2, 2, 1, 0, 1, 1};
    // abar, s2, a12: 1x1 mod 2, 1x1 mod 2, 1x1 mod 4
    for (int abar = 0; abar < 2; ++abar)
        for (int s2 = 0; s2 < 2; ++s2)
            for (int a12 = 0; a12 < 4; ++a12) {
                StandardFormMatrix m = zero_standard_form(q);
                m.abar(0, 0) = abar;
                m.s2(0, 0) = s2;
                m.a12(0, 0) = a12;
                CHECK(orthogonal_to_all(parity_check(m).rows, assemble(m)));
            }
}

TEST_CASE("parity check spans the dual code") {
    for (unsigned alpha = 0; alpha <= 2; ++alpha)
        for (unsigned beta = 1; beta <= 2; ++beta)
            for (const auto& p : mixgauss::mgn::profiles_for(alpha, beta))
                for (std::uint64_t seed = 0; seed < 5; ++seed) {
                    const StandardFormMatrix m = random_standard_form(p, seed);
                    const Ambient a(alpha, beta, 3);
                    const Code c = span(a, assemble(m));
                    const Code d = span(a, parity_check(m).rows);
                    const unsigned rk = rank_f2(m.s2);
                    CAPTURE(p);
                    CHECK(d == dual_bruteforce(c));
                    CHECK(binary_rank_excess(c) == rk);
                    CHECK(d.profile() == mixgauss::mgn::dual_type(p, rk));
                }
    CHECK_THROWS_AS(parity_check(zero_standard_form(TypeProfile{1, 1, 0, 1, 0, 0}, 2)), std::invalid_argument);
}

TEST_CASE("duality laws on every subgroup of small ambients") {
    for (auto [alpha, beta] : {std::pair{1U, 1U}, {2U, 1U}, {1U, 2U}, {2U, 2U}}) {
        const Ambient a(alpha, beta, 3);
        for (const Code& c : mixgauss::oracle::enumerate_subgroups(alpha, beta, 3)) {
            const Code d = dual_bruteforce(c);
            const unsigned r = binary_rank_excess(c);
            CHECK(log2_size(c.size()) + log2_size(d.size()) == a.bits());
            CHECK(d.profile() == mixgauss::mgn::dual_type(c.profile(), r));
            CHECK((d.profile() == mixgauss::mgn::dual_type(c.profile())) == (r == 0));
            CHECK(binary_rank_excess(d) == r);
            CHECK(dual_bruteforce(d) == c);
        }
    }
    // <(1|2)> in Z2 x Z8 is self-dual, while the rank-free dual type is Z2 x Z2
    const Code c = span(Ambient(1, 1, 3), std::vector<MixedWord>{{{1}, {2}, 3}});
    CHECK(c.profile() == TypeProfile{1, 1, 0, 0, 1, 0});
    CHECK(binary_rank_excess(c) == 1);
    CHECK(dual_bruteforce(c) == c);
    CHECK(mixgauss::mgn::dual_type(c.profile()) == TypeProfile{1, 1, 1, 0, 0, 1});
    CHECK_THROWS_AS(dual_bruteforce(Code(Ambient(1, 8, 3))), mixgauss::ResourceGuardError);
}

TEST_CASE("reduction mod 4 moves binary rank of the order-4 rows") {
    for (unsigned alpha = 0; alpha <= 3; ++alpha)
        for (unsigned beta = 1; beta <= 3; ++beta)
            for (const auto& p : mixgauss::mgn::profiles_for(alpha, beta))
                for (std::uint64_t seed = 0; seed < 10; ++seed) {
                    const StandardFormMatrix m = random_standard_form(p, seed);
                    const Code c = span(Ambient(alpha, beta, 3), assemble(m));
                    const Code r = phi_reduce(c);
                    const unsigned rk = rank_f2(m.s2);
                    CAPTURE(p);
                    CHECK(r.ambient() == Ambient(alpha, beta, 2));
                    CHECK(r.profile() == TypeProfile{alpha, beta, p.k0 + rk, p.k1, p.k2 - rk, 0});
                    CHECK(binary_rank_excess(c) == rk);
                }
    CHECK_THROWS_AS(phi_reduce(Code(Ambient(1, 1, 2))), std::invalid_argument);
}

TEST_CASE("even codes correspond to Z2Z4 codes") {
    for (auto [alpha, beta] : {std::pair{1U, 1U}, {2U, 1U}, {1U, 2U}, {2U, 2U}}) {
        std::size_t even = 0;
        for (const Code& c : mixgauss::oracle::enumerate_subgroups(alpha, beta, 3)) {
            const TypeProfile p = c.profile();
            if (p.k1 != 0) {
                CHECK_THROWS_AS(halve_even(c), std::invalid_argument);
                continue;
            }
            ++even;
            const Code h = halve_even(c);
            CHECK(h.size() == c.size());
            CHECK(h.profile() == TypeProfile{alpha, beta, p.k0, p.k2, p.k3, 0});
        }
        CHECK(mixgauss::Nat(even) == mixgauss::oracle::census(alpha, beta, 2).total_subgroups);
    }
}

TEST_CASE("text format round trip") {
    const Ambient a(2, 2, 3);
    const Code c = span(a, assemble(random_standard_form(TypeProfile{2, 2, 1, 1, 0, 1}, 3)));
    const auto words = c.words();
    std::stringstream ss;
    write_words(ss, a, words);
    const std::string text = ss.str();
    CHECK(text.rfind("2 2 3\n", 0) == 0);
    std::istringstream in("# comment\n\n" + text);
    const WordList back = read_words(in);
    CHECK(back.ambient == a);
    CHECK(back.words == words);
    std::istringstream bad("1 1 3\n0 | 9\n");
    CHECK_THROWS_AS(read_words(bad), std::invalid_argument);
    std::istringstream short_row("1 2 3\n0 | 1\n");
    CHECK_THROWS_AS(read_words(short_row), std::invalid_argument);
}

}
