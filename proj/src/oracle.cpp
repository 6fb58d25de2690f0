#include "mixgauss/oracle.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include <json.hpp>

#include "mixgauss/errors.hpp"
#include "mixgauss/mgn.hpp"

namespace mixgauss::oracle {

namespace {

struct WordSetHash {
    std::size_t operator()(const std::vector<std::uint64_t>& words) const noexcept {
        std::size_t h = words.size();
        for (std::uint64_t w : words) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

codes::Ambient guarded_ambient(unsigned alpha, unsigned beta, unsigned e) {
    const codes::Ambient a(alpha, beta, e);
    if (a.bits() > max_ambient_bits)
        throw ResourceGuardError("ambient Z2^" + std::to_string(alpha) + " x Z" + std::to_string(a.modulus()) + "^" +
                                 std::to_string(beta) + " has 2^16 or more elements");
    return a;
}

}  // namespace

std::vector<codes::Code> enumerate_subgroups(unsigned alpha, unsigned beta, unsigned e) {
    const codes::Ambient a = guarded_ambient(alpha, beta, e);
    const codes::WordSpace space(a);
    const std::uint64_t ambient_size = space.size();

    std::unordered_set<std::vector<std::uint64_t>, WordSetHash> seen;
    std::deque<std::vector<std::uint64_t>> frontier;
    std::vector<std::vector<std::uint64_t>> found;

    std::vector<std::uint64_t> zero{0};
    seen.insert(zero);
    found.push_back(zero);
    frontier.push_back(std::move(zero));

    std::uint64_t work = 0;
    // Words known to give an already computed extension of the current group:
    // the group itself and every h + m*g with m odd, since odd m is a unit.
    std::vector<char> covered(ambient_size, 0);
    std::vector<std::uint64_t> marked;
    while (!frontier.empty()) {
        const std::vector<std::uint64_t> group = std::move(frontier.front());
        frontier.pop_front();
        for (std::uint64_t x : group) covered[x] = 1;
        for (std::uint64_t g = 0; g < ambient_size; ++g) {
            if (covered[g]) continue;
            auto bigger = codes::extend_subgroup(space, group, g);
            work += bigger.size() + 4 * group.size();
            if (work > max_enumeration_work) throw ResourceGuardError("subgroup enumeration exceeded its work budget");
            for (unsigned m = 1; m < a.modulus(); m += 2) {
                const std::uint64_t mg = space.scale(g, m);
                for (std::uint64_t h : group) {
                    const std::uint64_t y = space.add(h, mg);
                    if (!covered[y]) {
                        covered[y] = 1;
                        marked.push_back(y);
                    }
                }
            }
            if (seen.insert(bigger).second) {
                found.push_back(bigger);
                frontier.push_back(std::move(bigger));
            }
        }
        for (std::uint64_t x : group) covered[x] = 0;
        for (std::uint64_t x : marked) covered[x] = 0;
        marked.clear();
    }

    std::sort(found.begin(), found.end(), [](const auto& l, const auto& r) {
        return l.size() != r.size() ? l.size() < r.size() : l < r;
    });
    std::vector<codes::Code> out;
    out.reserve(found.size());
    for (auto& words : found) out.emplace_back(a, std::move(words));
    return out;
}

TypeCensus census(unsigned alpha, unsigned beta, unsigned e) {
    TypeCensus c;
    c.ambient = guarded_ambient(alpha, beta, e);
    c.provenance = Provenance::enumeration;
    for (const auto& code : enumerate_subgroups(alpha, beta, e)) {
        c.counts[codes::classify_type(code)] += 1;
        c.total_subgroups += 1;
    }
    return c;
}

TypeCensus formula_census(unsigned alpha, unsigned beta, unsigned e) {
    TypeCensus c;
    c.ambient = codes::Ambient(alpha, beta, e);
    c.provenance = Provenance::formula;
    for (const auto& p : mgn::profiles_for(alpha, beta)) {
        if (!codes::valid_for(p, e)) continue;
        // For e = 2 the profile is the Z2Z4 type (k0, k1, k2).
        Nat n = e == 3 ? mgn::count(p) : mgn::count_z2z4(p.alpha, p.beta, p.k0, p.k1, p.k2);
        if (n == 0) continue;
        c.total_subgroups += n;
        c.counts.emplace(p, std::move(n));
    }
    return c;
}

bool VerifyReport::all_match() const {
    return totals_match() && std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.match(); });
}

std::size_t VerifyReport::mismatches() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const VerifyRow& r) { return !r.match(); }));
}

VerifyReport verify_formula(unsigned alpha, unsigned beta, unsigned e) {
    const TypeCensus observed = census(alpha, beta, e);
    const TypeCensus predicted = formula_census(alpha, beta, e);

    VerifyReport report;
    report.ambient = observed.ambient;
    report.oracle_total = observed.total_subgroups;
    report.formula_total = predicted.total_subgroups;

    std::map<TypeProfile, VerifyRow> merged;
    for (const auto& [p, n] : observed.counts) {
        merged[p].profile = p;
        merged[p].oracle = n;
    }
    for (const auto& [p, n] : predicted.counts) {
        merged[p].profile = p;
        merged[p].formula = n;
    }
    for (auto& [p, row] : merged) report.rows.push_back(std::move(row));
    return report;
}

std::vector<unsigned> profile_entries(const TypeProfile& p, unsigned e) {
    if (e == 2) return {p.alpha, p.beta, p.k0, p.k1, p.k2};
    return {p.alpha, p.beta, p.k0, p.k1, p.k2, p.k3};
}

std::string census_json(const TypeCensus& c, int indent) {
    nlohmann::ordered_json j;
    j["alpha"] = c.ambient.alpha;
    j["beta"] = c.ambient.beta;
    j["e"] = c.ambient.e;
    j["total"] = to_decimal(c.total_subgroups);
    j["provenance"] = c.provenance == Provenance::formula ? "formula" : "enumeration";
    auto rows = nlohmann::ordered_json::array();
    for (const auto& [p, n] : c.counts) {
        nlohmann::ordered_json row;
        row["profile"] = profile_entries(p, c.ambient.e);
        row["count"] = to_decimal(n);
        rows.push_back(std::move(row));
    }
    j["counts"] = std::move(rows);
    return j.dump(indent);
}

}  // namespace mixgauss::oracle
