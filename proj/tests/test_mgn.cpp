#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "mixgauss/errors.hpp"
#include "mixgauss/mgn.hpp"
#include "mixgauss/qnum.hpp"

using mixgauss::Nat;
using mixgauss::TypeProfile;
using namespace mixgauss::mgn;

namespace {

template <class F>
void for_each_profile(unsigned max_alpha, unsigned max_beta, F&& f) {
    for (unsigned a = 0; a <= max_alpha; ++a)
        for (unsigned b = 0; b <= max_beta; ++b)
            for (const auto& p : profiles_for(a, b)) f(p);
}

}  // namespace

TEST_SUITE("mgn") {

TEST_CASE("worked example and its factors") {
    const TypeProfile p{2, 2, 1, 1, 1, 0};
    const CountBreakdown b = count_product(p);
    CHECK(b.total == 36);
    CHECK(b.n1 * b.n2 * b.n3 * b.n4 == b.total * b.d1 * b.d2 * b.d3 * b.d4);
    CHECK(count_closed_form(p) == 36);
    CHECK(count(p) == 36);
    CHECK(delta_exponents(p).delta == 2);
    CHECK(dual_type(p) == TypeProfile{2, 2, 1, 0, 0, 1});
    CHECK(count(dual_type(p)) == 18);
    CHECK(count_dual(p) == 18);
}

TEST_CASE("invalid profiles count zero") {
    CHECK(count(TypeProfile{1, 2, 2, 0, 0, 0}) == 0);
    CHECK(count(TypeProfile{1, 2, 0, 1, 1, 1}) == 0);
    CHECK(count_product(TypeProfile{1, 1, 0, 2, 0, 0}).total == 0);
    CHECK(count_closed_form(TypeProfile{3, 2, 4, 0, 0, 0}) == 0);
    CHECK(count_dual(TypeProfile{3, 2, 4, 0, 0, 0}) == 0);
    CHECK_THROWS_AS(dual_type(TypeProfile{3, 2, 4, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("zero and full codes are unique") {
    for (unsigned a = 0; a <= 6; ++a)
        for (unsigned b = 0; b <= 6; ++b) {
            CHECK(count(TypeProfile{a, b, 0, 0, 0, 0}) == 1);
            CHECK(count(TypeProfile{a, b, a, b, 0, 0}) == 1);
        }
}

TEST_CASE("product and closed form agree") {
    unsigned cases = 0;
    for_each_profile(6, 6, [&](const TypeProfile& p) {
        CAPTURE(p);
        CHECK(count_product(p).total == count_closed_form(p));
        ++cases;
    });
    CHECK(cases > 3000);
}

TEST_CASE("dual type is an involution and the dual closed form matches") {
    for_each_profile(5, 5, [](const TypeProfile& p) {
        CAPTURE(p);
        const TypeProfile d = dual_type(p);
        CHECK(d.valid());
        CHECK(dual_type(d) == p);
        CHECK(count_dual(p) == count(d));
        CHECK(dual_type(p, 0) == d);
        const unsigned max_r = std::min(p.k2, p.alpha - p.k0);
        for (unsigned r = 0; r <= max_r; ++r) {
            const TypeProfile dr = dual_type(p, r);
            CHECK(dr.valid());
            // the same rank reappears on the dual side
            CHECK(dual_type(dr, r) == p);
        }
        CHECK_THROWS_AS(dual_type(p, max_r + 1), std::invalid_argument);
        const DeltaExponents de = delta_exponents(p);
        CHECK(de.delta - de.delta_bar ==
              static_cast<std::int64_t>(p.alpha) * p.k2 - static_cast<std::int64_t>(p.k0) * (p.k2 + p.k3));
        CHECK(self_dual_count_condition(p) == (count(p) == count(d)));
    });
}

TEST_CASE("totals over all types") {
    CHECK(total_codes(1, 1) == 11);
    CHECK(total_codes(2, 1) == 38);
    CHECK(total_codes(1, 2) == 140);
    CHECK(total_codes(2, 2) == 671);
    CHECK(total_codes(0, 1) == 4);
    CHECK(total_codes(3, 0) == 16);
}

TEST_CASE("Z8 specialization") {
    // subgroups of Z8 by order: 1, 2, 4, 8
    CHECK(count_z8(1, 0, 0, 1) == 1);
    CHECK(count_z8(1, 0, 1, 0) == 1);
    CHECK(count_z8(1, 1, 0, 0) == 1);
    // cyclic subgroups of order 8 in Z8^2: 48 elements of order 8, 4 generators each
    CHECK(count_z8(2, 1, 0, 0) == 12);
    // subgroups of order 2 in Z8^2: the three nonzero elements of 4Z8^2
    CHECK(count_z8(2, 0, 0, 1) == 3);
    CHECK(count_z8(3, 2, 0, 0) == count_z8(3, 1, 0, 0));
    CHECK(count_z8(2, 3, 0, 0) == 0);
    CHECK_THROWS_AS(count_z8(0, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("Z2Z4 specialization") {
    CHECK(count_z2z4(2, 2, 1, 1, 1) == 18);
    CHECK(count_z2z4(1, 1, 0, 0, 0) == 1);
    CHECK(count_z2z4(0, 1, 0, 1, 0) == 1);
    CHECK(count_z2z4(0, 2, 0, 1, 0) == 6);
}

TEST_CASE("binary specialization") {
    for (unsigned n = 0; n <= 8; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(binary_binomial_identity(n, k) == mixgauss::qnum::q_binomial(n, k, 2));
    CHECK_THROWS_AS(binary_binomial_identity(2, 3), std::invalid_argument);
}

TEST_CASE("swap lemma") {
    for (unsigned r = 1; r <= 4; ++r)
        for (unsigned s = 1; s <= 4; ++s)
            for (unsigned m = 0; m <= r; ++m)
                for (unsigned k = 0; k <= s; ++k) CHECK(lemma_swap_k_l(r, s, m, k, s - k));
    CHECK_THROWS_AS(lemma_swap_k_l(2, 3, 1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(lemma_swap_k_l(2, 2, 3, 1, 1), std::invalid_argument);
}

TEST_CASE("profiles are listed in order") {
    const auto ps = profiles_for(1, 1);
    REQUIRE(ps.size() == 8);
    for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1] < ps[i]);
    CHECK(to_string(ps.front()) == "(1,1;0,0,0,0)");
}

TEST_CASE("identity report") {
    const IdentityReport rep = check_identities(4, 4);
    CHECK(rep.ok());
    for (const char* id : {"a", "b", "c", "d", "e", "f", "g", "h", "swap", "self-dual", "binary",
                           "full-binary-rank-corrected", "equal-dual-corollary-conditional", "t1-printed-term"}) {
        CAPTURE(id);
        const IdentityCheck* c = rep.find(id);
        REQUIRE(c != nullptr);
        CHECK(c->passed);
        CHECK(c->cases > 0);
    }
    const IdentityCheck* lit = rep.find("full-binary-rank-literal");
    REQUIRE(lit != nullptr);
    CHECK_FALSE(lit->passed);
    CHECK(lit->kind == CheckKind::literal);
    CHECK(lit->counterexample.find("48 != 24") != std::string::npos);
    const IdentityCheck* cor = rep.find("equal-dual-corollary-literal");
    REQUIRE(cor != nullptr);
    CHECK_FALSE(cor->passed);
    CHECK(rep.find("no-such-check") == nullptr);
}

}
