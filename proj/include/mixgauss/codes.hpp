#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "mixgauss/profile.hpp"

/// Words, codes and generator matrices over Z2^alpha x Z_{2^e}^beta, e in {2, 3}.
namespace mixgauss::codes {

struct Ambient {
    unsigned alpha = 0;
    unsigned beta = 0;
    unsigned e = 3;

    Ambient() = default;
    /// Throws std::invalid_argument unless e is 2 or 3.
    Ambient(unsigned alpha_, unsigned beta_, unsigned e_);

    [[nodiscard]] unsigned modulus() const { return 1U << e; }
    /// log2 of the number of ambient words.
    [[nodiscard]] unsigned bits() const { return alpha + e * beta; }

    friend bool operator==(const Ambient&, const Ambient&) = default;
};

/// One element of the ambient group: binary segment then modular segment.
struct MixedWord {
    std::vector<unsigned> bin;
    std::vector<unsigned> mod_part;
    unsigned e = 3;

    /// Zero word of the ambient.
    static MixedWord zero(const Ambient& a);

    [[nodiscard]] Ambient ambient() const;
    /// Throws std::invalid_argument if an entry is out of range.
    void check() const;

    /// Smallest m >= 1 with m * w = 0.
    [[nodiscard]] unsigned order() const;

    friend MixedWord operator+(const MixedWord& a, const MixedWord& b);
    friend MixedWord operator*(unsigned m, const MixedWord& w);
    friend bool operator==(const MixedWord&, const MixedWord&) = default;
};

/// 2^(e-1) * sum(bin products) + sum(mod products), reduced mod 2^e.
/// Throws std::invalid_argument on a dimension or ring mismatch.
unsigned inner_product(const MixedWord& u, const MixedWord& v);

/**
 * Packs words into integers: residues concatenated with the first binary
 * coordinate most significant, so integer order is lexicographic word order.
 * Arithmetic runs lane-parallel on the packed form.
 */
class WordSpace {
  public:
    explicit WordSpace(const Ambient& a);

    [[nodiscard]] const Ambient& ambient() const { return ambient_; }
    /// Number of ambient words.
    [[nodiscard]] std::uint64_t size() const { return std::uint64_t{1} << ambient_.bits(); }

    [[nodiscard]] std::uint64_t pack(const MixedWord& w) const;
    [[nodiscard]] MixedWord unpack(std::uint64_t x) const;

    [[nodiscard]] std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        return (((a & ~high_) + (b & ~high_)) ^ ((a ^ b) & high_)) & all_;
    }
    [[nodiscard]] std::uint64_t scale(std::uint64_t a, unsigned m) const;
    /// Mask of the binary segment.
    [[nodiscard]] std::uint64_t binary_mask() const { return binary_; }
    [[nodiscard]] unsigned inner(std::uint64_t a, std::uint64_t b) const;

  private:
    Ambient ambient_;
    std::uint64_t high_ = 0;  // top bit of every lane
    std::uint64_t all_ = 0;
    std::uint64_t binary_ = 0;
    std::uint64_t lane_ = 0;  // mask of one modular lane
};

/**
 * A subgroup of the ambient group, stored as its sorted packed words.
 * Immutable; the type classification is computed once at construction.
 */
class Code {
  public:
    /// The zero code.
    explicit Code(const Ambient& a);

    /// Trusted constructor: `sorted_words` must be a sorted subgroup.
    Code(const Ambient& a, std::vector<std::uint64_t> sorted_words);

    /// Validates closure; throws std::invalid_argument if `words` is not a subgroup.
    static Code from_words(const Ambient& a, std::span<const MixedWord> words);

    [[nodiscard]] const Ambient& ambient() const { return ambient_; }
    [[nodiscard]] std::size_t size() const { return words_.size(); }
    [[nodiscard]] const std::vector<std::uint64_t>& packed() const { return words_; }
    [[nodiscard]] std::vector<MixedWord> words() const;
    [[nodiscard]] bool contains(const MixedWord& w) const;
    [[nodiscard]] bool contains_packed(std::uint64_t x) const;
    [[nodiscard]] const TypeProfile& profile() const { return profile_; }
    /// A small generating set, chosen greedily in word order.
    [[nodiscard]] std::vector<std::uint64_t> generators_packed() const;

    friend bool operator==(const Code& a, const Code& b) {
        return a.ambient_ == b.ambient_ && a.words_ == b.words_;
    }

  private:
    Ambient ambient_;
    std::vector<std::uint64_t> words_;
    TypeProfile profile_;
};

/// Sorted closure of `group` (sorted subgroup) and the element g.
std::vector<std::uint64_t> extend_subgroup(const WordSpace& space, const std::vector<std::uint64_t>& group,
                                           std::uint64_t g);

/// Additive closure of the generators. The empty list spans {0}.
Code span(const Ambient& a, std::span<const MixedWord> generators);

/**
 * Type of a subgroup from the sizes of its 2- and 4-torsion and of its
 * order-2 words with zero binary part. For e = 2 the result is the Z2Z4
 * type (k0, k1, k2) with k3 = 0. Throws std::invalid_argument when a size
 * is not a power of two.
 */
TypeProfile classify_type(const Code& code);
TypeProfile classify_packed(const WordSpace& space, const std::vector<std::uint64_t>& words);

/**
 * dim bin(C[4]) - dim bin(C[2]), where bin projects onto the binary
 * coordinates: the F_2 rank of the s2 block of every standard form of the
 * code. Zero exactly when the dual has type mgn::dual_type(type). Requires e = 3.
 */
unsigned binary_rank_excess(const Code& code);

/// Ambient words orthogonal to every codeword, by exhaustive scan.
/// ResourceGuardError when the ambient has more than 2^24 words.
Code dual_bruteforce(const Code& code);

/// Reduces the Z8 segment of every codeword mod 4. Requires e = 3.
Code phi_reduce(const Code& code);

/// Halves the Z8 segment of a code whose Z8 entries are all even, giving the
/// isomorphic code over Z2^alpha x Z4^beta. Requires e = 3; throws
/// std::invalid_argument if some entry is odd.
Code halve_even(const Code& code);

// ---- standard form --------------------------------------------------------

/// Dense integer block, row-major.
class Block {
  public:
    Block() = default;
    Block(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] Block transpose() const;
    friend Block operator*(const Block& a, const Block& b);
    friend Block operator+(const Block& a, const Block& b);
    friend Block operator*(int s, const Block& b);
    friend bool operator==(const Block&, const Block&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<int> data_;
};

/**
 * Free blocks of the standard generator matrix. For e = 3 the row stripes
 * are (k0, k1, k2, k3) rows, the binary columns split as (k0, alpha-k0) and
 * the Z8 columns as (k1, k2, k3, beta-l):
 *
 *   [ I  abar | 0  0    0      4t    ]
 *   [ 0  s1   | I  a01  a02    a03   ]
 *   [ 0  s2   | 0  2I   2a12   2a13  ]
 *   [ 0  0    | 0  0    4I     4a23  ]
 *
 * For e = 2 the profile is a Z2Z4 type (k0, k1, k2) and the Z4 columns split
 * as (k1, k2, beta-k1-k2):
 *
 *   [ I  abar | 0  0    2t    ]
 *   [ 0  s1   | I  a01  a02   ]
 *   [ 0  0    | 0  2I   2a12  ]
 *
 * Blocks that do not occur for e = 2 (s2, a03, a13, a23) are empty.
 */
struct StandardFormMatrix {
    Ambient ambient;
    TypeProfile profile;
    Block abar, s1, s2, t;
    Block a01, a02, a03;
    Block a12, a13;
    Block a23;
};

/// Same profile for both rings; for e = 2 requires k3 == 0.
bool valid_for(const TypeProfile& p, unsigned e);

/// All free blocks zero. Throws std::invalid_argument for invalid profiles.
StandardFormMatrix zero_standard_form(const TypeProfile& p, unsigned e = 3);

/// Free blocks filled uniformly in their moduli from a seeded generator.
StandardFormMatrix random_standard_form(const TypeProfile& p, std::uint64_t seed, unsigned e = 3);

/// Generator rows. Throws std::invalid_argument on a block shape or range violation.
std::vector<MixedWord> assemble(const StandardFormMatrix& m);

struct ParityCheckMatrix {
    Ambient ambient;
    std::vector<MixedWord> rows;
};

/**
 * Generator matrix of the dual code, built from the blocks. Rows come in
 * stripes of alpha-k0, beta-l, k3, k2 rows over the same column layout:
 *
 *   [ -abar^t  I | P0  -2 s2^t              0       0 ]
 *   [ -t^t     0 | P1  -a13^t + a23^t a12^t -a23^t  I ]
 *   [  0       0 | P2  -2 a12^t             2I      0 ]
 *   [  0       0 | P3   4I                  0       0 ]
 *
 * with P0 = -4 s1^t + 2 s2^t a01^t,
 * P1 = -a03^t + a13^t a01^t + a23^t a02^t - a23^t a12^t a01^t,
 * P2 = -2 a02^t + 2 a12^t a01^t and P3 = -4 a01^t. Entries are reduced
 * mod 2 in binary columns and mod 8 in Z8 columns. Requires e = 3.
 */
ParityCheckMatrix parity_check(const StandardFormMatrix& m);

// ---- text format ----------------------------------------------------------

/// Header "alpha beta e", then one word per line: binary residues, "|",
/// modular residues, separated by single spaces.
void write_words(std::ostream& os, const Ambient& a, std::span<const MixedWord> words);

struct WordList {
    Ambient ambient;
    std::vector<MixedWord> words;
};

/// Inverse of write_words; skips blank lines and lines starting with '#'.
/// Throws std::invalid_argument on malformed input.
WordList read_words(std::istream& is);

}  // namespace mixgauss::codes
