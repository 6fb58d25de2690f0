#include "mixgauss/sequence.hpp"

#include <cctype>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "mixgauss/mgn.hpp"

namespace mixgauss {

Affine parse_affine(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty affine expression");

    Affine f;
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        long long sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw std::invalid_argument("bad affine expression '" + text + "'");
        }
        const std::size_t digits_start = i;
        long long value = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            if (value > (std::numeric_limits<long long>::max() - 9) / 10)
                throw std::invalid_argument("affine coefficient too large in '" + text + "'");
            value = value * 10 + (s[i] - '0');
            ++i;
        }
        const bool has_digits = i > digits_start;
        if (i < s.size() && s[i] == '*') ++i;
        if (i < s.size() && s[i] == 'r') {
            ++i;
            f.a += sign * (has_digits ? value : 1);
        } else if (has_digits) {
            f.b += sign * value;
        } else {
            throw std::invalid_argument("bad affine expression '" + text + "'");
        }
        first = false;
    }
    return f;
}

std::string to_string(const Affine& f) {
    std::ostringstream os;
    if (f.a == 0) {
        os << f.b;
        return os.str();
    }
    if (f.a == -1)
        os << "-r";
    else if (f.a != 1)
        os << f.a << 'r';
    else
        os << 'r';
    if (f.b > 0) os << '+' << f.b;
    if (f.b < 0) os << f.b;
    return os.str();
}

std::optional<TypeProfile> SequenceFamily::profile_at(long long r) const {
    std::array<unsigned, 6> v{};
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const long long x = slots[i].at(r);
        if (x < 0 || x > std::numeric_limits<unsigned>::max()) return std::nullopt;
        v[i] = static_cast<unsigned>(x);
    }
    return TypeProfile{v[0], v[1], v[2], v[3], v[4], v[5]};
}

Nat SequenceFamily::term(long long r) const {
    const auto p = profile_at(r);
    if (!p) return 0;
    return mgn::count(*p);
}

std::vector<Nat> SequenceFamily::terms(long long first, long long last) const {
    std::vector<Nat> out;
    for (long long r = first; r <= last; ++r) out.push_back(term(r));
    return out;
}

SequenceFamily parse_family(const std::string& text) {
    const auto semi = text.find(';');
    if (semi == std::string::npos || text.find(';', semi + 1) != std::string::npos)
        throw std::invalid_argument("family must look like 'alpha,beta;k0,k1,k2,k3'");
    std::vector<std::string> pieces;
    auto split = [&](const std::string& part) {
        std::stringstream ss(part);
        std::string item;
        while (std::getline(ss, item, ',')) pieces.push_back(item);
    };
    split(text.substr(0, semi));
    if (pieces.size() != 2) throw std::invalid_argument("family needs two ambient expressions before ';'");
    split(text.substr(semi + 1));
    if (pieces.size() != 6) throw std::invalid_argument("family needs four generator expressions after ';'");

    SequenceFamily f;
    f.name = text;
    for (std::size_t i = 0; i < 6; ++i) f.slots[i] = parse_affine(pieces[i]);
    f.offset = 1;
    return f;
}

const std::vector<SequenceFamily>& builtin_families() {
    static const std::vector<SequenceFamily> families = [] {
        struct Def {
            const char* name;
            const char* expr;
            long long offset;
            const char* note;
        };
        const Def defs[] = {
            {"t1", "r,2r;r,r,0,r", 1, "two-index row (r,2k;r,k,0,k) read on the diagonal r = k"},
            {"t2", "r+1,2;r,1,1,0", 1, ""},
            {"t3", "r+1,3;r,1,1,1", 1, ""},
            {"t4", "r+1,2r+1;r,0,r,r", 1, ""},
            {"t5", "r+2,2r+1;r,0,1,r", 1, ""},
            {"t6", "r,r+2;2,0,1,r", 2, ""},
            {"t7", "r,2r;r,r,r,0", 1, "A006098"},
            {"t8", "1,r;1,1,1,1", 3, ""},
        };
        std::vector<SequenceFamily> out;
        for (const auto& d : defs) {
            SequenceFamily f = parse_family(d.expr);
            f.name = d.name;
            f.offset = d.offset;
            f.note = d.note;
            out.push_back(std::move(f));
        }
        return out;
    }();
    return families;
}

std::optional<SequenceFamily> find_builtin(const std::string& name) {
    for (const auto& f : builtin_families())
        if (f.name == name) return f;
    return std::nullopt;
}

void write_bfile(std::ostream& os, const std::vector<IndexedTerm>& terms) {
    for (const auto& t : terms) os << t.index << ' ' << to_decimal(t.value) << '\n';
}

std::vector<IndexedTerm> read_bfile(std::istream& is) {
    std::vector<IndexedTerm> out;
    std::string line;
    while (std::getline(is, line)) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        long long index = 0;
        std::string value;
        std::string extra;
        if (!(ls >> index >> value) || (ls >> extra))
            throw std::invalid_argument("malformed b-file line '" + line + "'");
        if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed b-file value '" + value + "'");
        out.push_back({index, Nat(value)});
    }
    return out;
}

}  // namespace mixgauss
