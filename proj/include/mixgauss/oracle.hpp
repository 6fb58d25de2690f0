#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mixgauss/codes.hpp"
#include "mixgauss/nat.hpp"
#include "mixgauss/profile.hpp"

/// Exhaustive subgroup enumeration used as ground truth for the counting formulas.
namespace mixgauss::oracle {

/// Largest ambient (log2 of its size) the enumeration accepts: strictly
/// fewer than 2^16 words.
inline constexpr unsigned max_ambient_bits = 15;

/// Upper bound on codewords materialized by one enumeration.
inline constexpr std::uint64_t max_enumeration_work = std::uint64_t{1} << 32;

enum class Provenance { formula, enumeration };

struct TypeCensus {
    codes::Ambient ambient;
    std::map<TypeProfile, Nat> counts;
    Nat total_subgroups = 0;
    Provenance provenance = Provenance::enumeration;
};

/**
 * Every subgroup of Z2^alpha x Z_{2^e}^beta exactly once, found by
 * breadth-first search over the subgroup lattice from {0}: each known
 * subgroup is extended by each ambient word outside it, and the closures
 * are deduplicated on their sorted word lists.
 *
 * Throws ResourceGuardError when the ambient has 2^16 or more words, or
 * when the search materializes more than max_enumeration_work codewords.
 */
std::vector<codes::Code> enumerate_subgroups(unsigned alpha, unsigned beta, unsigned e);

/// Subgroups tallied by classify_type.
TypeCensus census(unsigned alpha, unsigned beta, unsigned e);

/// The same table computed from the formulas (mgn::count or mgn::count_z2z4).
TypeCensus formula_census(unsigned alpha, unsigned beta, unsigned e);

struct VerifyRow {
    TypeProfile profile;
    Nat oracle;
    Nat formula;
    [[nodiscard]] bool match() const { return oracle == formula; }
};

struct VerifyReport {
    codes::Ambient ambient;
    std::vector<VerifyRow> rows;  ///< union of profiles from both sources, sorted
    Nat oracle_total = 0;
    Nat formula_total = 0;

    [[nodiscard]] bool totals_match() const { return oracle_total == formula_total; }
    [[nodiscard]] bool all_match() const;
    [[nodiscard]] std::size_t mismatches() const;
};

VerifyReport verify_formula(unsigned alpha, unsigned beta, unsigned e);

/// Profile as printed in census output: six entries for e = 3, five for e = 2.
std::vector<unsigned> profile_entries(const TypeProfile& p, unsigned e);

/// {"alpha","beta","e","total","counts":[{"profile":[...],"count":"..."}]},
/// counts as decimal strings.
std::string census_json(const TypeCensus& c, int indent = 2);

}  // namespace mixgauss::oracle
