#include <random>
#include <stdexcept>
#include <string>

#include "mixgauss/codes.hpp"

namespace mixgauss::codes {

// ---- Block -----------------------------------------------------------------

Block Block::transpose() const {
    Block t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Block operator*(const Block& a, const Block& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("block product: inner dimensions differ");
    Block out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    return out;
}

Block operator+(const Block& a, const Block& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("block sum: shapes differ");
    Block out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
    return out;
}

Block operator*(int s, const Block& b) {
    Block out = b;
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) *= s;
    return out;
}

// ---- layout ----------------------------------------------------------------

namespace {

struct BlockSpec {
    Block StandardFormMatrix::*member;
    const char* name;
    std::size_t rows;
    std::size_t cols;
    int modulus;
};

std::vector<BlockSpec> block_specs(const TypeProfile& p, unsigned e) {
    const std::size_t free_bin = p.alpha - p.k0;
    using M = StandardFormMatrix;
    if (e == 3) {
        const std::size_t rest = p.beta - p.l();
        return {
            {&M::abar, "abar", p.k0, free_bin, 2}, {&M::s1, "s1", p.k1, free_bin, 2},
            {&M::s2, "s2", p.k2, free_bin, 2},     {&M::t, "t", p.k0, rest, 2},
            {&M::a01, "a01", p.k1, p.k2, 8},       {&M::a02, "a02", p.k1, p.k3, 8},
            {&M::a03, "a03", p.k1, rest, 8},       {&M::a12, "a12", p.k2, p.k3, 4},
            {&M::a13, "a13", p.k2, rest, 4},       {&M::a23, "a23", p.k3, rest, 2},
        };
    }
    const std::size_t rest = p.beta - p.k1 - p.k2;
    return {
        {&M::abar, "abar", p.k0, free_bin, 2}, {&M::s1, "s1", p.k1, free_bin, 2}, {&M::s2, "s2", 0, 0, 1},
        {&M::t, "t", p.k0, rest, 2},           {&M::a01, "a01", p.k1, p.k2, 4},   {&M::a02, "a02", p.k1, rest, 4},
        {&M::a03, "a03", 0, 0, 1},             {&M::a12, "a12", p.k2, rest, 2},   {&M::a13, "a13", 0, 0, 1},
        {&M::a23, "a23", 0, 0, 1},
    };
}

void require_valid(const TypeProfile& p, unsigned e) {
    if (e != 2 && e != 3) throw std::invalid_argument("ring exponent must be 2 or 3");
    if (!valid_for(p, e)) throw std::invalid_argument("invalid profile " + to_string(p));
}

void check_blocks(const StandardFormMatrix& m) {
    require_valid(m.profile, m.ambient.e);
    if (m.ambient.alpha != m.profile.alpha || m.ambient.beta != m.profile.beta)
        throw std::invalid_argument("standard form: ambient does not match profile");
    for (const auto& spec : block_specs(m.profile, m.ambient.e)) {
        const Block& b = m.*(spec.member);
        if (b.rows() != spec.rows || b.cols() != spec.cols)
            throw std::invalid_argument(std::string("standard form: block ") + spec.name + " has shape " +
                                        std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ", expected " +
                                        std::to_string(spec.rows) + "x" + std::to_string(spec.cols));
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(i, j) < 0 || b(i, j) >= spec.modulus)
                    throw std::invalid_argument(std::string("standard form: entry of ") + spec.name +
                                                " outside [0," + std::to_string(spec.modulus) + ")");
    }
}

unsigned residue(int v, int m) { return static_cast<unsigned>(((v % m) + m) % m); }

}  // namespace

bool valid_for(const TypeProfile& p, unsigned e) {
    if (!p.valid()) return false;
    return e == 3 || (e == 2 && p.k3 == 0);
}

StandardFormMatrix zero_standard_form(const TypeProfile& p, unsigned e) {
    require_valid(p, e);
    StandardFormMatrix m;
    m.ambient = Ambient(p.alpha, p.beta, e);
    m.profile = p;
    for (const auto& spec : block_specs(p, e)) m.*(spec.member) = Block(spec.rows, spec.cols);
    return m;
}

StandardFormMatrix random_standard_form(const TypeProfile& p, std::uint64_t seed, unsigned e) {
    StandardFormMatrix m = zero_standard_form(p, e);
    std::mt19937_64 rng(seed);
    for (const auto& spec : block_specs(p, e)) {
        std::uniform_int_distribution<int> entry(0, spec.modulus - 1);
        Block& b = m.*(spec.member);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = entry(rng);
    }
    return m;
}

std::vector<MixedWord> assemble(const StandardFormMatrix& m) {
    check_blocks(m);
    const TypeProfile& p = m.profile;
    const Ambient& a = m.ambient;
    const unsigned mod = a.modulus();
    std::vector<MixedWord> rows;

    if (a.e == 3) {
        const unsigned c2 = p.k1, c3 = p.k1 + p.k2, c4 = p.l();
        for (unsigned i = 0; i < p.k0; ++i) {
            MixedWord w = MixedWord::zero(a);
            w.bin[i] = 1;
            for (std::size_t c = 0; c < m.abar.cols(); ++c) w.bin[p.k0 + c] = m.abar(i, c);
            for (std::size_t c = 0; c < m.t.cols(); ++c) w.mod_part[c4 + c] = 4 * m.t(i, c) % mod;
            rows.push_back(std::move(w));
        }
        for (unsigned i = 0; i < p.k1; ++i) {
            MixedWord w = MixedWord::zero(a);
            for (std::size_t c = 0; c < m.s1.cols(); ++c) w.bin[p.k0 + c] = m.s1(i, c);
            w.mod_part[i] = 1;
            for (std::size_t c = 0; c < m.a01.cols(); ++c) w.mod_part[c2 + c] = m.a01(i, c);
            for (std::size_t c = 0; c < m.a02.cols(); ++c) w.mod_part[c3 + c] = m.a02(i, c);
            for (std::size_t c = 0; c < m.a03.cols(); ++c) w.mod_part[c4 + c] = m.a03(i, c);
            rows.push_back(std::move(w));
        }
        for (unsigned i = 0; i < p.k2; ++i) {
            MixedWord w = MixedWord::zero(a);
            for (std::size_t c = 0; c < m.s2.cols(); ++c) w.bin[p.k0 + c] = m.s2(i, c);
            w.mod_part[c2 + i] = 2;
            for (std::size_t c = 0; c < m.a12.cols(); ++c) w.mod_part[c3 + c] = 2 * m.a12(i, c) % mod;
            for (std::size_t c = 0; c < m.a13.cols(); ++c) w.mod_part[c4 + c] = 2 * m.a13(i, c) % mod;
            rows.push_back(std::move(w));
        }
        for (unsigned i = 0; i < p.k3; ++i) {
            MixedWord w = MixedWord::zero(a);
            w.mod_part[c3 + i] = 4;
            for (std::size_t c = 0; c < m.a23.cols(); ++c) w.mod_part[c4 + c] = 4 * m.a23(i, c) % mod;
            rows.push_back(std::move(w));
        }
        return rows;
    }

    const unsigned c2 = p.k1, c3 = p.k1 + p.k2;
    for (unsigned i = 0; i < p.k0; ++i) {
        MixedWord w = MixedWord::zero(a);
        w.bin[i] = 1;
        for (std::size_t c = 0; c < m.abar.cols(); ++c) w.bin[p.k0 + c] = m.abar(i, c);
        for (std::size_t c = 0; c < m.t.cols(); ++c) w.mod_part[c3 + c] = 2 * m.t(i, c) % mod;
        rows.push_back(std::move(w));
    }
    for (unsigned i = 0; i < p.k1; ++i) {
        MixedWord w = MixedWord::zero(a);
        for (std::size_t c = 0; c < m.s1.cols(); ++c) w.bin[p.k0 + c] = m.s1(i, c);
        w.mod_part[i] = 1;
        for (std::size_t c = 0; c < m.a01.cols(); ++c) w.mod_part[c2 + c] = m.a01(i, c);
        for (std::size_t c = 0; c < m.a02.cols(); ++c) w.mod_part[c3 + c] = m.a02(i, c);
        rows.push_back(std::move(w));
    }
    for (unsigned i = 0; i < p.k2; ++i) {
        MixedWord w = MixedWord::zero(a);
        w.mod_part[c2 + i] = 2;
        for (std::size_t c = 0; c < m.a12.cols(); ++c) w.mod_part[c3 + c] = 2 * m.a12(i, c) % mod;
        rows.push_back(std::move(w));
    }
    return rows;
}

ParityCheckMatrix parity_check(const StandardFormMatrix& m) {
    check_blocks(m);
    if (m.ambient.e != 3) throw std::invalid_argument("parity_check: only defined over Z2 x Z8");
    const TypeProfile& p = m.profile;
    const Ambient& a = m.ambient;
    const unsigned free_bin = p.alpha - p.k0;
    const unsigned rest = p.beta - p.l();
    const unsigned c2 = p.k1, c3 = p.k1 + p.k2, c4 = p.l();

    const Block abar_t = m.abar.transpose();
    const Block t_t = m.t.transpose();
    const Block s1_t = m.s1.transpose();
    const Block s2_t = m.s2.transpose();
    const Block a01_t = m.a01.transpose();
    const Block a02_t = m.a02.transpose();
    const Block a03_t = m.a03.transpose();
    const Block a12_t = m.a12.transpose();
    const Block a13_t = m.a13.transpose();
    const Block a23_t = m.a23.transpose();

    const Block p0 = -4 * s1_t + 2 * (s2_t * a01_t);
    const Block p1 = -1 * a03_t + a13_t * a01_t + a23_t * a02_t + -1 * (a23_t * a12_t * a01_t);
    const Block p2 = -2 * a02_t + 2 * (a12_t * a01_t);
    const Block p3 = -4 * a01_t;
    const Block h1_mid = -1 * a13_t + a23_t * a12_t;

    ParityCheckMatrix out;
    out.ambient = a;
    auto put_mod = [](MixedWord& w, unsigned offset, const Block& b, std::size_t row) {
        for (std::size_t c = 0; c < b.cols(); ++c) w.mod_part[offset + c] = residue(b(row, c), 8);
    };

    for (unsigned i = 0; i < free_bin; ++i) {
        MixedWord w = MixedWord::zero(a);
        for (std::size_t c = 0; c < abar_t.cols(); ++c) w.bin[c] = residue(-abar_t(i, c), 2);
        w.bin[p.k0 + i] = 1;
        put_mod(w, 0, p0, i);
        put_mod(w, c2, -2 * s2_t, i);
        out.rows.push_back(std::move(w));
    }
    for (unsigned i = 0; i < rest; ++i) {
        MixedWord w = MixedWord::zero(a);
        for (std::size_t c = 0; c < t_t.cols(); ++c) w.bin[c] = residue(-t_t(i, c), 2);
        put_mod(w, 0, p1, i);
        put_mod(w, c2, h1_mid, i);
        put_mod(w, c3, -1 * a23_t, i);
        w.mod_part[c4 + i] = 1;
        out.rows.push_back(std::move(w));
    }
    for (unsigned i = 0; i < p.k3; ++i) {
        MixedWord w = MixedWord::zero(a);
        put_mod(w, 0, p2, i);
        put_mod(w, c2, -2 * a12_t, i);
        w.mod_part[c3 + i] = 2;
        out.rows.push_back(std::move(w));
    }
    for (unsigned i = 0; i < p.k2; ++i) {
        MixedWord w = MixedWord::zero(a);
        put_mod(w, 0, p3, i);
        w.mod_part[c2 + i] = 4;
        out.rows.push_back(std::move(w));
    }
    return out;
}

}  // namespace mixgauss::codes
