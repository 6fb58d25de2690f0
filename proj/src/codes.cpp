#include "mixgauss/codes.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "mixgauss/errors.hpp"

namespace mixgauss::codes {

namespace {

// Ambient size at which span() refuses to materialize a closure.
constexpr std::uint64_t max_span_words = std::uint64_t{1} << 26;
constexpr unsigned max_dual_bits = 24;

void require_same_shape(const MixedWord& u, const MixedWord& v) {
    if (u.e != v.e || u.bin.size() != v.bin.size() || u.mod_part.size() != v.mod_part.size())
        throw std::invalid_argument("words live in different ambient groups");
}

unsigned log2_exact(std::size_t n) {
    if (!std::has_single_bit(n)) throw std::invalid_argument("not a subgroup: size " + std::to_string(n));
    return static_cast<unsigned>(std::countr_zero(n));
}

}  // namespace

Ambient::Ambient(unsigned alpha_, unsigned beta_, unsigned e_) : alpha(alpha_), beta(beta_), e(e_) {
    if (e != 2 && e != 3) throw std::invalid_argument("ring exponent must be 2 or 3");
}

// ---- MixedWord -------------------------------------------------------------

MixedWord MixedWord::zero(const Ambient& a) {
    return {std::vector<unsigned>(a.alpha, 0), std::vector<unsigned>(a.beta, 0), a.e};
}

Ambient MixedWord::ambient() const {
    return {static_cast<unsigned>(bin.size()), static_cast<unsigned>(mod_part.size()), e};
}

void MixedWord::check() const {
    const unsigned m = 1U << e;
    for (unsigned b : bin)
        if (b > 1) throw std::invalid_argument("binary entry out of range");
    for (unsigned v : mod_part)
        if (v >= m) throw std::invalid_argument("modular entry out of range");
}

unsigned MixedWord::order() const {
    const unsigned m = 1U << e;
    unsigned ord = 1;
    for (unsigned b : bin)
        if (b % 2 != 0) ord = std::max(ord, 2U);
    for (unsigned v : mod_part) {
        const unsigned r = v % m;
        if (r != 0) ord = std::max(ord, m >> std::countr_zero(r));
    }
    return ord;
}

MixedWord operator+(const MixedWord& a, const MixedWord& b) {
    require_same_shape(a, b);
    const unsigned m = 1U << a.e;
    MixedWord r = a;
    for (std::size_t i = 0; i < r.bin.size(); ++i) r.bin[i] = (r.bin[i] + b.bin[i]) % 2;
    for (std::size_t j = 0; j < r.mod_part.size(); ++j) r.mod_part[j] = (r.mod_part[j] + b.mod_part[j]) % m;
    return r;
}

MixedWord operator*(unsigned k, const MixedWord& w) {
    const unsigned m = 1U << w.e;
    MixedWord r = w;
    for (auto& b : r.bin) b = (b * k) % 2;
    for (auto& v : r.mod_part) v = static_cast<unsigned>((static_cast<unsigned long long>(v) * k) % m);
    return r;
}

unsigned inner_product(const MixedWord& u, const MixedWord& v) {
    require_same_shape(u, v);
    const unsigned m = 1U << u.e;
    unsigned long long bin_sum = 0;
    for (std::size_t i = 0; i < u.bin.size(); ++i) bin_sum += u.bin[i] * v.bin[i];
    unsigned long long mod_sum = 0;
    for (std::size_t j = 0; j < u.mod_part.size(); ++j) mod_sum += u.mod_part[j] * v.mod_part[j];
    return static_cast<unsigned>(((m / 2) * (bin_sum % 2) + mod_sum) % m);
}

// ---- WordSpace -------------------------------------------------------------

WordSpace::WordSpace(const Ambient& a) : ambient_(a) {
    if (a.bits() > 62) throw ResourceGuardError("ambient too large to pack into 64 bits");
    const unsigned e = a.e;
    lane_ = (std::uint64_t{1} << e) - 1;
    for (unsigned j = 0; j < a.beta; ++j) high_ |= std::uint64_t{1} << (e * j + e - 1);
    binary_ = ((std::uint64_t{1} << a.alpha) - 1) << (e * a.beta);
    high_ |= binary_;
    all_ = (std::uint64_t{1} << a.bits()) - 1;
}

std::uint64_t WordSpace::pack(const MixedWord& w) const {
    if (w.ambient() != ambient_) throw std::invalid_argument("word does not belong to this ambient");
    w.check();
    std::uint64_t x = 0;
    for (unsigned b : w.bin) x = (x << 1) | b;
    for (unsigned v : w.mod_part) x = (x << ambient_.e) | v;
    return x;
}

MixedWord WordSpace::unpack(std::uint64_t x) const {
    MixedWord w = MixedWord::zero(ambient_);
    for (unsigned j = ambient_.beta; j-- > 0;) {
        w.mod_part[j] = static_cast<unsigned>(x & lane_);
        x >>= ambient_.e;
    }
    for (unsigned i = ambient_.alpha; i-- > 0;) {
        w.bin[i] = static_cast<unsigned>(x & 1U);
        x >>= 1;
    }
    return w;
}

std::uint64_t WordSpace::scale(std::uint64_t a, unsigned m) const {
    std::uint64_t r = 0;
    while (m != 0) {
        if (m & 1U) r = add(r, a);
        a = add(a, a);
        m >>= 1;
    }
    return r;
}

unsigned WordSpace::inner(std::uint64_t a, std::uint64_t b) const {
    const unsigned e = ambient_.e;
    unsigned sum = (static_cast<unsigned>(std::popcount(a & b & binary_)) & 1U) << (e - 1);
    for (unsigned j = 0; j < ambient_.beta; ++j) {
        const unsigned shift = e * j;
        sum += static_cast<unsigned>(((a >> shift) & lane_) * ((b >> shift) & lane_));
    }
    return sum & static_cast<unsigned>(lane_);
}

// ---- Code ------------------------------------------------------------------

Code::Code(const Ambient& a) : ambient_(a), words_{0}, profile_{a.alpha, a.beta, 0, 0, 0, 0} {}

Code::Code(const Ambient& a, std::vector<std::uint64_t> sorted_words)
    : ambient_(a), words_(std::move(sorted_words)), profile_(classify_packed(WordSpace(a), words_)) {}

Code Code::from_words(const Ambient& a, std::span<const MixedWord> words) {
    const WordSpace space(a);
    std::vector<std::uint64_t> packed;
    packed.reserve(words.size());
    for (const auto& w : words) packed.push_back(space.pack(w));
    std::sort(packed.begin(), packed.end());
    packed.erase(std::unique(packed.begin(), packed.end()), packed.end());
    if (packed.empty() || packed.front() != 0) throw std::invalid_argument("not a subgroup: missing zero word");
    for (std::uint64_t x : packed)
        for (std::uint64_t y : packed)
            if (!std::binary_search(packed.begin(), packed.end(), space.add(x, y)))
                throw std::invalid_argument("not a subgroup: not closed under addition");
    return Code(a, std::move(packed));
}

std::vector<MixedWord> Code::words() const {
    const WordSpace space(ambient_);
    std::vector<MixedWord> out;
    out.reserve(words_.size());
    for (std::uint64_t x : words_) out.push_back(space.unpack(x));
    return out;
}

bool Code::contains_packed(std::uint64_t x) const { return std::binary_search(words_.begin(), words_.end(), x); }

bool Code::contains(const MixedWord& w) const {
    if (w.ambient() != ambient_) return false;
    return contains_packed(WordSpace(ambient_).pack(w));
}

std::vector<std::uint64_t> Code::generators_packed() const {
    const WordSpace space(ambient_);
    std::vector<std::uint64_t> gens;
    std::vector<std::uint64_t> current{0};
    for (std::uint64_t x : words_) {
        if (current.size() == words_.size()) break;
        if (std::binary_search(current.begin(), current.end(), x)) continue;
        gens.push_back(x);
        current = extend_subgroup(space, current, x);
    }
    return gens;
}

std::vector<std::uint64_t> extend_subgroup(const WordSpace& space, const std::vector<std::uint64_t>& group,
                                           std::uint64_t g) {
    auto inside = [&](std::uint64_t x) { return std::binary_search(group.begin(), group.end(), x); };
    if (inside(g)) return group;
    std::vector<std::uint64_t> out = group;
    // Cosets group + m*g are disjoint until m*g falls back into the group.
    for (std::uint64_t shift = g; !inside(shift); shift = space.add(shift, g)) {
        if (out.size() + group.size() > max_span_words) throw ResourceGuardError("span exceeds 2^26 words");
        for (std::uint64_t x : group) out.push_back(space.add(x, shift));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Code span(const Ambient& a, std::span<const MixedWord> generators) {
    const WordSpace space(a);
    std::vector<std::uint64_t> group{0};
    for (const auto& g : generators) group = extend_subgroup(space, group, space.pack(g));
    return Code(a, std::move(group));
}

TypeProfile classify_packed(const WordSpace& space, const std::vector<std::uint64_t>& words) {
    const Ambient& a = space.ambient();
    std::size_t two = 0, four = 0, two_modular = 0;
    for (std::uint64_t x : words) {
        const std::uint64_t x2 = space.add(x, x);
        if (x2 == 0) {
            ++two;
            if ((x & space.binary_mask()) == 0) ++two_modular;
        }
        if (space.add(x2, x2) == 0) ++four;
    }
    const int s_all = static_cast<int>(log2_exact(words.size()));
    const int s_two = static_cast<int>(log2_exact(two));
    const int z = static_cast<int>(log2_exact(two_modular));

    TypeProfile p{a.alpha, a.beta, 0, 0, 0, 0};
    int k0 = 0, k1 = 0, k2 = 0, k3 = 0;
    if (a.e == 3) {
        const int s_four = static_cast<int>(log2_exact(four));
        k1 = s_all - s_four;
        k2 = s_four - s_two - k1;
        k3 = z - k1 - k2;
        k0 = s_two - k1 - k2 - k3;
    } else {
        k1 = s_all - s_two;
        k2 = z - k1;
        k0 = s_two - k1 - k2;
    }
    if (k0 < 0 || k1 < 0 || k2 < 0 || k3 < 0) throw std::invalid_argument("not a subgroup: inconsistent torsion");
    p.k0 = static_cast<unsigned>(k0);
    p.k1 = static_cast<unsigned>(k1);
    p.k2 = static_cast<unsigned>(k2);
    p.k3 = static_cast<unsigned>(k3);
    return p;
}

TypeProfile classify_type(const Code& code) { return code.profile(); }

unsigned binary_rank_excess(const Code& code) {
    if (code.ambient().e != 3) throw std::invalid_argument("binary_rank_excess requires e = 3");
    const WordSpace space(code.ambient());
    std::vector<std::uint64_t> bin2, bin4;
    for (std::uint64_t x : code.packed()) {
        const std::uint64_t x2 = space.add(x, x);
        if (space.add(x2, x2) != 0) continue;
        bin4.push_back(x & space.binary_mask());
        if (x2 == 0) bin2.push_back(x & space.binary_mask());
    }
    for (auto* v : {&bin2, &bin4}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    return log2_exact(bin4.size()) - log2_exact(bin2.size());
}

Code dual_bruteforce(const Code& code) {
    const Ambient& a = code.ambient();
    if (a.bits() > max_dual_bits) throw ResourceGuardError("dual_bruteforce: ambient exceeds 2^24 words");
    const WordSpace space(a);
    const auto gens = code.generators_packed();
    std::vector<std::uint64_t> out;
    for (std::uint64_t v = 0; v < space.size(); ++v) {
        if (std::all_of(gens.begin(), gens.end(), [&](std::uint64_t g) { return space.inner(g, v) == 0; }))
            out.push_back(v);
    }
    return Code(a, std::move(out));
}

namespace {

template <typename F>
Code map_modular(const Code& code, F&& entry_map) {
    const Ambient& from = code.ambient();
    if (from.e != 3) throw std::invalid_argument("expected a code over Z2 x Z8");
    const Ambient to(from.alpha, from.beta, 2);
    const WordSpace src(from);
    const WordSpace dst(to);
    std::vector<std::uint64_t> out;
    out.reserve(code.size());
    for (std::uint64_t x : code.packed()) {
        MixedWord w = src.unpack(x);
        for (auto& v : w.mod_part) v = entry_map(v);
        w.e = 2;
        out.push_back(dst.pack(w));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return Code(to, std::move(out));
}

}  // namespace

Code phi_reduce(const Code& code) {
    return map_modular(code, [](unsigned v) { return v % 4; });
}

Code halve_even(const Code& code) {
    return map_modular(code, [](unsigned v) {
        if (v % 2 != 0) throw std::invalid_argument("halve_even: code has an odd Z8 entry");
        return v / 2;
    });
}

// ---- text format -----------------------------------------------------------

void write_words(std::ostream& os, const Ambient& a, std::span<const MixedWord> words) {
    os << a.alpha << ' ' << a.beta << ' ' << a.e << '\n';
    for (const auto& w : words) {
        if (w.ambient() != a) throw std::invalid_argument("write_words: word does not match the header");
        bool first = true;
        auto put = [&](const std::string& token) {
            if (!first) os << ' ';
            os << token;
            first = false;
        };
        for (unsigned b : w.bin) put(std::to_string(b));
        put("|");
        for (unsigned v : w.mod_part) put(std::to_string(v));
        os << '\n';
    }
}

WordList read_words(std::istream& is) {
    std::string line;
    auto next_line = [&]() -> bool {
        while (std::getline(is, line)) {
            const auto start = line.find_first_not_of(" \t\r");
            if (start != std::string::npos && line[start] != '#') return true;
        }
        return false;
    };
    if (!next_line()) throw std::invalid_argument("read_words: missing header");
    WordList out;
    {
        std::istringstream hs(line);
        unsigned alpha = 0, beta = 0, e = 0;
        if (!(hs >> alpha >> beta >> e)) throw std::invalid_argument("read_words: malformed header");
        out.ambient = Ambient(alpha, beta, e);
    }
    while (next_line()) {
        std::istringstream ls(line);
        MixedWord w;
        w.e = out.ambient.e;
        std::string token;
        bool after_bar = false;
        while (ls >> token) {
            if (token == "|") {
                if (after_bar) throw std::invalid_argument("read_words: repeated separator");
                after_bar = true;
                continue;
            }
            std::size_t used = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(token, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("read_words: bad entry '" + token + "'");
            }
            if (used != token.size()) throw std::invalid_argument("read_words: bad entry '" + token + "'");
            (after_bar ? w.mod_part : w.bin).push_back(static_cast<unsigned>(v));
        }
        if (!after_bar) throw std::invalid_argument("read_words: missing '|' separator");
        if (w.ambient() != out.ambient) throw std::invalid_argument("read_words: row length does not match header");
        w.check();
        out.words.push_back(std::move(w));
    }
    return out;
}

}  // namespace mixgauss::codes
