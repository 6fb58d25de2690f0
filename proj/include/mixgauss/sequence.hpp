#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mixgauss/nat.hpp"
#include "mixgauss/profile.hpp"

namespace mixgauss {

/// a*r + b in the free index r.
struct Affine {
    long long a = 0;
    long long b = 0;

    [[nodiscard]] long long at(long long r) const { return a * r + b; }
    friend bool operator==(const Affine&, const Affine&) = default;
};

/// Parses "3", "r", "2r", "r+1", "2r-3", "-r+4". Throws std::invalid_argument.
Affine parse_affine(const std::string& text);
std::string to_string(const Affine& f);

/**
 * A one-parameter family of profiles, one affine expression per slot
 * (alpha, beta, k0, k1, k2, k3). Instances with a negative slot or an
 * invalid profile evaluate to 0.
 */
struct SequenceFamily {
    std::string name;
    std::array<Affine, 6> slots;
    long long offset = 1;  ///< first index of the family
    std::string note;

    [[nodiscard]] std::optional<TypeProfile> profile_at(long long r) const;
    [[nodiscard]] Nat term(long long r) const;
    [[nodiscard]] std::vector<Nat> terms(long long first, long long last) const;
};

/// Parses "alpha,beta;k0,k1,k2,k3" of affine expressions, e.g. "r+1,2;r,1,1,0".
SequenceFamily parse_family(const std::string& text);

/// t1 ... t8.
const std::vector<SequenceFamily>& builtin_families();
std::optional<SequenceFamily> find_builtin(const std::string& name);

struct IndexedTerm {
    long long index = 0;
    Nat value;
    friend bool operator==(const IndexedTerm&, const IndexedTerm&) = default;
};

/// OEIS b-file: "n a(n)" per line, LF terminated.
void write_bfile(std::ostream& os, const std::vector<IndexedTerm>& terms);
/// Skips blank lines and '#' comments. Throws std::invalid_argument.
std::vector<IndexedTerm> read_bfile(std::istream& is);

}  // namespace mixgauss
