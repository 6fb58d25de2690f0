#include <algorithm>
#include <functional>
#include <sstream>

#include "mixgauss/mgn.hpp"
#include "mixgauss/qnum.hpp"

namespace mixgauss::mgn {

namespace {

class Sweep {
  public:
    Sweep(std::string id, std::string statement, CheckKind kind = CheckKind::identity) {
        check_.id = std::move(id);
        check_.statement = std::move(statement);
        check_.kind = kind;
    }

    // `describe` is only evaluated for the first failure.
    void expect(bool ok, const std::function<std::string()>& describe) {
        ++check_.cases;
        if (!ok && check_.passed) {
            check_.passed = false;
            check_.counterexample = describe();
        }
    }

    void expect_equal(const TypeProfile& where, const Nat& lhs, const Nat& rhs) {
        expect(lhs == rhs, [&] { return to_string(where) + ": " + to_decimal(lhs) + " != " + to_decimal(rhs); });
    }

    IdentityCheck done(std::string note = {}) {
        check_.note = std::move(note);
        return std::move(check_);
    }

  private:
    IdentityCheck check_;
};

Nat n_of(unsigned a, unsigned b, unsigned k0, unsigned k1, unsigned k2, unsigned k3) {
    return count({a, b, k0, k1, k2, k3});
}

}  // namespace

bool IdentityReport::ok() const {
    for (const auto& c : checks)
        if (c.kind != CheckKind::literal && !c.passed) return false;
    return true;
}

const IdentityCheck* IdentityReport::find(const std::string& id) const {
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

IdentityReport check_identities(unsigned max_alpha, unsigned max_beta) {
    IdentityReport report;
    report.max_alpha = max_alpha;
    report.max_beta = max_beta;
    auto& out = report.checks;

    {
        Sweep s("a", "N(r,s;r,s,0,0) = N(r,s;r,0,s,0) = N(r,s;r,0,0,s) = 1");
        for (unsigned r = 1; r <= max_alpha; ++r)
            for (unsigned t = 1; t <= max_beta; ++t) {
                s.expect_equal({r, t, r, t, 0, 0}, n_of(r, t, r, t, 0, 0), 1);
                s.expect_equal({r, t, r, 0, t, 0}, n_of(r, t, r, 0, t, 0), 1);
                s.expect_equal({r, t, r, 0, 0, t}, n_of(r, t, r, 0, 0, t), 1);
            }
        out.push_back(s.done());
    }
    {
        Sweep s("b", "N(r+1,s;1,1,1,0) (2^r - 1) = 4 (2^(r+1) - 1) N(r,s;1,1,1,0)");
        for (unsigned r = 1; r <= max_alpha; ++r)
            for (unsigned t = 1; t <= max_beta; ++t) {
                const Nat lhs = n_of(r + 1, t, 1, 1, 1, 0) * (pow2(r) - 1);
                const Nat rhs = 4 * (pow2(r + 1) - 1) * n_of(r, t, 1, 1, 1, 0);
                s.expect_equal({r + 1, t, 1, 1, 1, 0}, lhs, rhs);
            }
        out.push_back(s.done());
    }
    {
        Sweep s("c", "N(1,r;1,1,1,0) = 2^(4r-8) (2^(r-1) - 1)(2^r - 1), r >= 2");
        for (unsigned r = 2; r <= max_beta; ++r)
            s.expect_equal({1, r, 1, 1, 1, 0}, n_of(1, r, 1, 1, 1, 0),
                           pow2(4 * r - 8) * (pow2(r - 1) - 1) * (pow2(r) - 1));
        out.push_back(s.done("integer form of 2^(4r-9) (2^r - 2)(2^r - 1)"));
    }
    {
        Sweep s("d", "N(a+1,r;1,1,1,0) = 4 N(a,r;1,1,1,0) + (2^r-1)(2^(r-1)-1) 2^(3a+4(r-2)), a >= 1, r >= 2");
        for (unsigned a = 1; a <= max_alpha; ++a)
            for (unsigned r = 2; r <= max_beta; ++r)
                s.expect_equal({a + 1, r, 1, 1, 1, 0}, n_of(a + 1, r, 1, 1, 1, 0),
                               4 * n_of(a, r, 1, 1, 1, 0) +
                                   (pow2(r) - 1) * (pow2(r - 1) - 1) * pow2(3 * a + 4 * (r - 2)));
        out.push_back(s.done());
    }
    {
        Sweep s("e", "N(j,k;j,1,1,1) = 2^((k-3)(j-1)) N(1,k;1,1,1,1), k >= 3");
        for (unsigned j = 1; j <= max_alpha; ++j)
            for (unsigned k = 3; k <= max_beta; ++k)
                s.expect_equal({j, k, j, 1, 1, 1}, n_of(j, k, j, 1, 1, 1),
                               pow2((k - 3) * (j - 1)) * n_of(1, k, 1, 1, 1, 1));
        out.push_back(s.done());
    }
    {
        Sweep s("f", "N(r,s;r,0,1,s-1) = N(r,s;r,0,s-1,1) = N(r,s;r,s-1,1,0) = N(r,s;r,1,s-1,0) = 2^s - 1, s >= 2");
        for (unsigned r = 1; r <= max_alpha; ++r)
            for (unsigned t = 2; t <= max_beta; ++t) {
                const Nat want = pow2(t) - 1;
                s.expect_equal({r, t, r, 0, 1, t - 1}, n_of(r, t, r, 0, 1, t - 1), want);
                s.expect_equal({r, t, r, 0, t - 1, 1}, n_of(r, t, r, 0, t - 1, 1), want);
                s.expect_equal({r, t, r, t - 1, 1, 0}, n_of(r, t, r, t - 1, 1, 0), want);
                s.expect_equal({r, t, r, 1, t - 1, 0}, n_of(r, t, r, 1, t - 1, 0), want);
            }
        out.push_back(s.done("third member read as N(r,s;r,s-1,1,0)"));
    }
    {
        Sweep s("g", "N(r,s;r,0,k,s-k) = N(r,s;r,s-k,k,0) and N(r,s;r,k,0,s-k) = N(r,s;r,s-k,0,k)");
        for (unsigned r = 1; r <= max_alpha; ++r)
            for (unsigned t = 1; t <= max_beta; ++t)
                for (unsigned k = 0; k <= t; ++k) {
                    s.expect_equal({r, t, r, 0, k, t - k}, n_of(r, t, r, 0, k, t - k), n_of(r, t, r, t - k, k, 0));
                    s.expect_equal({r, t, r, k, 0, t - k}, n_of(r, t, r, k, 0, t - k), n_of(r, t, r, t - k, 0, k));
                }
        out.push_back(s.done());
    }
    {
        Sweep s("h", "delta - delta_bar = alpha k2 - k0 (k2 + k3) and count_dual(p) = count(dual_type(p))");
        for (unsigned a = 0; a <= max_alpha; ++a)
            for (unsigned b = 0; b <= max_beta; ++b)
                for (const auto& p : profiles_for(a, b)) {
                    const auto d = delta_exponents(p);
                    const std::int64_t want = static_cast<std::int64_t>(p.alpha) * p.k2 -
                                              static_cast<std::int64_t>(p.k0) * (p.k2 + p.k3);
                    s.expect(d.delta - d.delta_bar == want, [&] {
                        return to_string(p) + ": delta - delta_bar = " + std::to_string(d.delta - d.delta_bar) +
                               " != " + std::to_string(want);
                    });
                    s.expect_equal(p, count_dual(p), count(dual_type(p)));
                }
        out.push_back(s.done());
    }
    {
        Sweep s("swap", "N(r,s;m,k,l,0) = N(r,s;m,l,k,0) for m <= r, s = k + l");
        for (unsigned r = 1; r <= max_alpha; ++r)
            for (unsigned t = 1; t <= max_beta; ++t)
                for (unsigned m = 0; m <= r; ++m)
                    for (unsigned k = 0; k <= t; ++k)
                        s.expect(lemma_swap_k_l(r, t, m, k, t - k), [&] {
                            return to_string({r, t, m, k, t - k, 0}) + ": " + to_decimal(n_of(r, t, m, k, t - k, 0)) +
                                   " != " + to_decimal(n_of(r, t, m, t - k, k, 0));
                        });
        out.push_back(s.done());
    }
    {
        Sweep s("self-dual", "N(p) = N(dual_type(p)) exactly when alpha k2 = k0 (k2 + k3)");
        for (unsigned a = 0; a <= max_alpha; ++a)
            for (unsigned b = 0; b <= max_beta; ++b)
                for (const auto& p : profiles_for(a, b)) {
                    const Nat lhs = count(p);
                    const Nat rhs = count(dual_type(p));
                    const bool cond = self_dual_count_condition(p);
                    s.expect((lhs == rhs) == cond, [&] {
                        return to_string(p) + ": condition " + (cond ? "true" : "false") + " but counts " +
                               to_decimal(lhs) + ", " + to_decimal(rhs);
                    });
                }
        out.push_back(s.done("N(r,s;k0,k1,0,0) always satisfies the condition"));
    }
    {
        Sweep lit("full-binary-rank-literal", "N(a,b;a,k1,k2,k3) = N(1,b;1,k1,k2,k3) for a >= 1", CheckKind::literal);
        Sweep fix("full-binary-rank-corrected", "N(a,b;a,k1,k2,k3) = 2^((a-1)(b-l)) N(1,b;1,k1,k2,k3) for a >= 1",
                  CheckKind::corrected);
        auto visit = [&](const TypeProfile& p) {
            const TypeProfile one{1, p.beta, 1, p.k1, p.k2, p.k3};
            const Nat lhs = count(p);
            const Nat rhs = count(one);
            lit.expect_equal(p, lhs, rhs);
            fix.expect_equal(p, lhs, pow2(static_cast<std::uint64_t>(p.alpha - 1) * (p.beta - p.l())) * rhs);
        };
        if (max_alpha >= 2 && max_beta >= 2) visit({2, 2, 2, 1, 0, 0});
        for (unsigned a = 1; a <= max_alpha; ++a)
            for (unsigned b = 1; b <= max_beta; ++b)
                for (const auto& p : profiles_for(a, b))
                    if (p.k0 == a) visit(p);
        out.push_back(lit.done("holds only when b = k1 + k2 + k3"));
        out.push_back(fix.done());
    }
    {
        Sweep lit("equal-dual-corollary-literal", "N(r,s;k0,0,k2,s-k2) = N(dual type)", CheckKind::literal);
        Sweep fix("equal-dual-corollary-conditional", "N(r,s;k0,0,k2,s-k2) = N(dual type) when r k2 = s k0",
                  CheckKind::corrected);
        auto visit = [&](const TypeProfile& p) {
            const Nat lhs = count(p);
            const Nat rhs = count(dual_type(p));
            lit.expect_equal(p, lhs, rhs);
            if (p.alpha * p.k2 == p.beta * p.k0) fix.expect_equal(p, lhs, rhs);
        };
        if (max_alpha >= 1 && max_beta >= 2) visit({1, 2, 1, 0, 1, 1});
        for (unsigned r = 1; r <= max_alpha; ++r)
            for (unsigned t = 1; t <= max_beta; ++t)
                for (unsigned k0 = 0; k0 <= r; ++k0)
                    for (unsigned k2 = 0; k2 <= t; ++k2) visit({r, t, k0, 0, k2, t - k2});
        out.push_back(lit.done("requires r k2 = s k0"));
        out.push_back(fix.done());
    }
    {
        Sweep s("binary", "N(n,1;k,0,0,1) = [n;k]_2");
        const unsigned top = std::max(max_alpha, max_beta);
        for (unsigned n = 0; n <= top; ++n)
            for (unsigned k = 0; k <= n; ++k)
                s.expect_equal({n, 1, k, 0, 0, 1}, n_of(n, 1, k, 0, 0, 1), qnum::q_binomial(n, k, 2));
        out.push_back(s.done());
    }
    {
        Sweep s("t1-printed-term", "N(4,8;4,4,0,4) = 13158776832 (fourth printed term of the r = k diagonal)",
                CheckKind::literal);
        s.expect_equal({4, 8, 4, 4, 0, 4}, n_of(4, 8, 4, 4, 0, 4), Nat("13158776832"));
        out.push_back(s.done());
    }
    return report;
}

}  // namespace mixgauss::mgn
