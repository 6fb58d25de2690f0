#include "mixgauss/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mixgauss/codes.hpp"
#include "mixgauss/errors.hpp"
#include "mixgauss/mgn.hpp"
#include "mixgauss/oracle.hpp"
#include "mixgauss/sequence.hpp"

namespace mixgauss::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr long long max_sequence_span = 10000;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

unsigned non_negative(long long v, const char* flag) {
    if (v < 0) throw UsageError(std::string("--") + flag + " must be non-negative");
    if (v > 4096) throw UsageError(std::string("--") + flag + " is unreasonably large");
    return static_cast<unsigned>(v);
}

struct ProfileArgs {
    long long alpha = -1, beta = -1, k0 = 0, k1 = 0, k2 = 0, k3 = 0;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--alpha", alpha, "number of binary coordinates")->required();
        cmd->add_option("--beta", beta, "number of Z8 (or Z4) coordinates")->required();
        cmd->add_option("--k0", k0, "order-2 generators through the binary part");
        cmd->add_option("--k1", k1, "order-8 generators (order-4 over Z4)");
        cmd->add_option("--k2", k2, "order-4 generators (order-2 over Z4)");
        cmd->add_option("--k3", k3, "order-2 generators through the Z8 part");
    }

    [[nodiscard]] TypeProfile profile() const {
        return {non_negative(alpha, "alpha"), non_negative(beta, "beta"), non_negative(k0, "k0"),
                non_negative(k1, "k1"),       non_negative(k2, "k2"),     non_negative(k3, "k3")};
    }
};

std::string profile_text(const TypeProfile& p, unsigned e) {
    if (e == 3) return to_string(p);
    std::ostringstream os;
    os << '(' << p.alpha << ',' << p.beta << ';' << p.k0 << ',' << p.k1 << ',' << p.k2 << ')';
    return os.str();
}

json words_json(const std::vector<codes::MixedWord>& words) {
    auto rows = json::array();
    for (const auto& w : words) rows.push_back(json{{"bin", w.bin}, {"mod", w.mod_part}});
    return rows;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

// ---- commands --------------------------------------------------------------

void run_count(const ProfileArgs& args, bool breakdown, bool dual, const std::string& format, std::ostream& os) {
    const TypeProfile p = args.profile();
    const Nat n = mgn::count(p);
    if (format == "json") {
        json j;
        j["profile"] = oracle::profile_entries(p, 3);
        j["count"] = to_decimal(n);
        if (breakdown) {
            const auto b = mgn::count_product(p);
            const auto d = mgn::delta_exponents(p);
            j["breakdown"] = json{{"N1", to_decimal(b.n1)}, {"N2", to_decimal(b.n2)}, {"N3", to_decimal(b.n3)},
                                  {"N4", to_decimal(b.n4)}, {"D1", to_decimal(b.d1)}, {"D2", to_decimal(b.d2)},
                                  {"D3", to_decimal(b.d3)}, {"D4", to_decimal(b.d4)}, {"delta", d.delta}};
        }
        if (dual && p.valid()) {
            const TypeProfile q = mgn::dual_type(p);
            j["dual"] = json{{"profile", oracle::profile_entries(q, 3)}, {"count", to_decimal(mgn::count(q))}};
        }
        os << j.dump(2) << '\n';
        return;
    }
    os << to_decimal(n) << '\n';
    if (breakdown) {
        const auto b = mgn::count_product(p);
        os << "N1 " << b.n1 << "\nN2 " << b.n2 << "\nN3 " << b.n3 << "\nN4 " << b.n4 << '\n';
        os << "D1 " << b.d1 << "\nD2 " << b.d2 << "\nD3 " << b.d3 << "\nD4 " << b.d4 << '\n';
        if (p.valid()) os << "delta " << mgn::delta_exponents(p).delta << '\n';
    }
    if (dual) {
        if (!p.valid()) {
            os << "dual undefined for invalid profile\n";
        } else {
            const TypeProfile q = mgn::dual_type(p);
            os << "dual " << q << ' ' << to_decimal(mgn::count(q)) << '\n';
        }
    }
}

void run_sequence(const std::string& name, const std::string& expr, std::optional<long long> start,
                  std::optional<long long> end, const std::string& format, std::ostream& os) {
    if (name.empty() == expr.empty()) throw UsageError("give exactly one of a built-in family name or --expr");
    SequenceFamily family;
    if (!name.empty()) {
        auto found = find_builtin(name);
        if (!found) throw UsageError("unknown family '" + name + "' (built-ins are t1..t8)");
        family = *found;
    } else {
        try {
            family = parse_family(expr);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    const long long first = start.value_or(family.offset);
    const long long last = end.value_or(first + 9);
    if (last < first || last - first > max_sequence_span) throw UsageError("index range must satisfy 0 <= end - start <= 10000");

    std::vector<IndexedTerm> terms;
    for (long long r = first; r <= last; ++r) terms.push_back({r, family.term(r)});

    if (format == "bfile") {
        write_bfile(os, terms);
    } else if (format == "json") {
        auto arr = json::array();
        for (const auto& t : terms) arr.push_back(to_decimal(t.value));
        os << arr.dump() << '\n';
    } else {
        for (const auto& t : terms) os << to_decimal(t.value) << '\n';
    }
}

int run_verify(unsigned alpha, unsigned beta, unsigned e, const std::string& format, std::ostream& os) {
    const auto report = oracle::verify_formula(alpha, beta, e);
    if (format == "json") {
        json j;
        j["alpha"] = alpha;
        j["beta"] = beta;
        j["e"] = e;
        j["oracle_total"] = to_decimal(report.oracle_total);
        j["formula_total"] = to_decimal(report.formula_total);
        j["all_match"] = report.all_match();
        auto rows = json::array();
        for (const auto& r : report.rows)
            rows.push_back(json{{"profile", oracle::profile_entries(r.profile, e)},
                                {"oracle", to_decimal(r.oracle)},
                                {"formula", to_decimal(r.formula)},
                                {"match", r.match()}});
        j["rows"] = std::move(rows);
        os << j.dump(2) << '\n';
    } else {
        os << "ambient Z2^" << alpha << " x Z" << (1U << e) << '^' << beta << '\n';
        os << pad("profile", 20) << pad("oracle", 12) << pad("formula", 12) << "status\n";
        for (const auto& r : report.rows)
            os << pad(profile_text(r.profile, e), 20) << pad(to_decimal(r.oracle), 12) << pad(to_decimal(r.formula), 12)
               << (r.match() ? "ok" : "MISMATCH") << '\n';
        os << "total subgroups: oracle " << report.oracle_total << ", formula " << report.formula_total << '\n';
        if (report.all_match())
            os << "all " << report.rows.size() << " profiles match; total subgroups = " << report.oracle_total << '\n';
        else
            os << report.mismatches() << " of " << report.rows.size() << " profiles mismatch\n";
    }
    return report.all_match() ? exit_ok : exit_internal;
}

const char* kind_name(mgn::CheckKind k) {
    switch (k) {
        case mgn::CheckKind::identity: return "identity";
        case mgn::CheckKind::literal: return "as printed";
        case mgn::CheckKind::corrected: return "corrected";
    }
    return "";
}

int run_check_identities(unsigned max_alpha, unsigned max_beta, bool with_oracle, const std::string& format,
                         std::ostream& os) {
    auto report = mgn::check_identities(max_alpha, max_beta);
    if (with_oracle) {
        const auto c = oracle::census(2, 2, 3);
        const TypeProfile p{2, 2, 2, 1, 0, 0};
        const auto it = c.counts.find(p);
        const Nat seen = it == c.counts.end() ? Nat(0) : it->second;
        mgn::IdentityCheck row;
        row.id = "full-binary-rank-oracle";
        row.statement = "enumerated subgroups of Z2^2 x Z8^2 of type (2,2;2,1,0,0) = 2^((a-1)(b-l)) N(1,2;1,1,0,0)";
        row.cases = 1;
        const Nat want = pow2(1) * mgn::count({1, 2, 1, 1, 0, 0});
        row.passed = seen == want;
        if (!row.passed) row.counterexample = to_decimal(seen) + " != " + to_decimal(want);
        row.note = "oracle count " + to_decimal(seen);
        report.checks.push_back(std::move(row));
    }
    if (format == "json") {
        json j;
        j["max_alpha"] = max_alpha;
        j["max_beta"] = max_beta;
        j["ok"] = report.ok();
        auto rows = json::array();
        for (const auto& c : report.checks)
            rows.push_back(json{{"id", c.id},           {"statement", c.statement}, {"kind", kind_name(c.kind)},
                                {"passed", c.passed},   {"cases", c.cases},         {"counterexample", c.counterexample},
                                {"note", c.note}});
        j["checks"] = std::move(rows);
        os << j.dump(2) << '\n';
    } else {
        for (const auto& c : report.checks) {
            os << (c.passed ? "[PASS] " : "[FAIL] ") << pad(c.id, 34) << c.statement << "  (" << kind_name(c.kind)
               << ", " << c.cases << " cases)\n";
            if (!c.counterexample.empty()) os << "       counterexample: " << c.counterexample << '\n';
            if (!c.note.empty()) os << "       note: " << c.note << '\n';
        }
        os << (report.ok() ? "all identities hold" : "some identities FAILED") << '\n';
    }
    return report.ok() ? exit_ok : exit_internal;
}

void run_matrix(const ProfileArgs& args, unsigned e, std::uint64_t seed, bool zero, bool parity, bool with_span,
                const std::string& format, std::ostream& os) {
    const TypeProfile p = args.profile();
    if (!codes::valid_for(p, e)) throw UsageError("invalid profile " + profile_text(p, e) + " for e = " + std::to_string(e));
    if (parity && e != 3) throw UsageError("--parity requires --e 3");
    const auto m = zero ? codes::zero_standard_form(p, e) : codes::random_standard_form(p, seed, e);
    const auto rows = codes::assemble(m);
    std::optional<codes::ParityCheckMatrix> h;
    if (parity) h = codes::parity_check(m);
    std::optional<codes::Code> c;
    if (with_span) {
        if (m.ambient.bits() > 16) throw ResourceGuardError("--span needs an ambient of at most 2^16 words");
        c = codes::span(m.ambient, rows);
    }

    if (format == "json") {
        json j;
        j["alpha"] = p.alpha;
        j["beta"] = p.beta;
        j["e"] = e;
        j["profile"] = oracle::profile_entries(p, e);
        j["seed"] = zero ? json(nullptr) : json(seed);
        j["generator"] = words_json(rows);
        if (h) j["parity_check"] = words_json(h->rows);
        if (c) j["span"] = words_json(c->words());
        os << j.dump(2) << '\n';
        return;
    }
    os << "# generator " << profile_text(p, e);
    if (zero)
        os << " zero blocks\n";
    else
        os << " seed " << seed << '\n';
    codes::write_words(os, m.ambient, rows);
    if (h) {
        os << "# parity-check\n";
        codes::write_words(os, h->ambient, h->rows);
    }
    if (c) {
        os << "# span " << c->size() << " codewords\n";
        const auto words = c->words();
        codes::write_words(os, c->ambient(), words);
    }
}

void run_enumerate(unsigned alpha, unsigned beta, unsigned e, const std::string& format, std::ostream& os) {
    const auto subgroups = oracle::enumerate_subgroups(alpha, beta, e);
    if (format == "json") {
        auto arr = json::array();
        for (const auto& c : subgroups)
            arr.push_back(json{{"profile", oracle::profile_entries(c.profile(), e)}, {"words", words_json(c.words())}});
        os << arr.dump(2) << '\n';
        return;
    }
    std::size_t index = 0;
    for (const auto& c : subgroups) {
        os << "# subgroup " << index++ << " type " << profile_text(c.profile(), e) << " size " << c.size() << '\n';
        const auto words = c.words();
        codes::write_words(os, c.ambient(), words);
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Counts of Z2Z8-additive codes by type, with an exhaustive subgroup oracle"};
    app.require_subcommand(1);

    std::string format = "plain";
    std::string out_path;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"plain", "json", "bfile"}));
    app.add_option("--out", out_path, "write output to this file instead of stdout");

    ProfileArgs count_args;
    bool breakdown = false;
    bool dual = false;
    auto* count_cmd = app.add_subcommand("count", "number of distinct codes of one type");
    count_args.add_to(count_cmd);
    count_cmd->add_flag("--breakdown", breakdown, "print N1..N4, D1..D4 and delta");
    count_cmd->add_flag("--dual", dual, "also print the dual type and its count");

    std::string family_name;
    std::string family_expr;
    std::optional<long long> seq_start;
    std::optional<long long> seq_end;
    auto* seq_cmd = app.add_subcommand("sequence", "terms of a one-parameter family of types");
    seq_cmd->add_option("family", family_name, "built-in family t1..t8");
    seq_cmd->add_option("--expr", family_expr, "affine family, e.g. \"r+1,2;r,1,1,0\"");
    seq_cmd->add_option("--start", seq_start, "first index (default: family offset)");
    seq_cmd->add_option("--end", seq_end, "last index (default: start + 9)");

    long long amb_alpha = -1, amb_beta = -1, amb_e = 3;
    auto add_ambient = [&](CLI::App* cmd) {
        cmd->add_option("--alpha", amb_alpha)->required();
        cmd->add_option("--beta", amb_beta)->required();
        cmd->add_option("--e", amb_e, "ring exponent: 3 for Z8, 2 for Z4")->check(CLI::IsMember({2, 3}));
    };
    auto* verify_cmd = app.add_subcommand("verify", "compare formula counts with exhaustive enumeration");
    add_ambient(verify_cmd);
    auto* export_cmd = app.add_subcommand("census-export", "JSON census of all subgroups by type");
    add_ambient(export_cmd);
    auto* enum_cmd = app.add_subcommand("enumerate", "list every subgroup of a small ambient group");
    add_ambient(enum_cmd);

    long long max_alpha = 4, max_beta = 4;
    bool with_oracle = false;
    auto* ident_cmd = app.add_subcommand("check-identities", "sweep the structural identities of the counts");
    ident_cmd->add_option("--max-alpha", max_alpha);
    ident_cmd->add_option("--max-beta", max_beta);
    ident_cmd->add_flag("--oracle", with_oracle, "confirm the full-binary-rank correction by enumeration");

    ProfileArgs matrix_args;
    long long matrix_e = 3;
    std::uint64_t seed = 0;
    bool zero = false, parity = false, with_span = false;
    auto* matrix_cmd = app.add_subcommand("matrix", "emit a standard-form generator matrix");
    matrix_args.add_to(matrix_cmd);
    matrix_cmd->add_option("--e", matrix_e)->check(CLI::IsMember({2, 3}));
    matrix_cmd->add_option("--seed", seed, "seed for the free blocks");
    matrix_cmd->add_flag("--zero", zero, "all free blocks zero");
    matrix_cmd->add_flag("--parity", parity, "also emit the parity-check matrix");
    matrix_cmd->add_flag("--span", with_span, "also emit every codeword");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }

    std::ostringstream buffer;
    int code = exit_ok;
    try {
        if (count_cmd->parsed()) {
            run_count(count_args, breakdown, dual, format, buffer);
        } else if (seq_cmd->parsed()) {
            run_sequence(family_name, family_expr, seq_start, seq_end, format, buffer);
        } else if (verify_cmd->parsed()) {
            code = run_verify(non_negative(amb_alpha, "alpha"), non_negative(amb_beta, "beta"),
                              static_cast<unsigned>(amb_e), format, buffer);
        } else if (export_cmd->parsed()) {
            const auto c = oracle::census(non_negative(amb_alpha, "alpha"), non_negative(amb_beta, "beta"),
                                          static_cast<unsigned>(amb_e));
            buffer << oracle::census_json(c) << '\n';
        } else if (enum_cmd->parsed()) {
            run_enumerate(non_negative(amb_alpha, "alpha"), non_negative(amb_beta, "beta"),
                          static_cast<unsigned>(amb_e), format, buffer);
        } else if (ident_cmd->parsed()) {
            const unsigned a = non_negative(max_alpha, "max-alpha");
            const unsigned b = non_negative(max_beta, "max-beta");
            if (a < 1 || b < 1) throw UsageError("identity bounds must be at least 1");
            code = run_check_identities(a, b, with_oracle, format, buffer);
        } else if (matrix_cmd->parsed()) {
            run_matrix(matrix_args, static_cast<unsigned>(matrix_e), seed, zero, parity, with_span, format, buffer);
        }
    } catch (const ResourceGuardError& e) {
        err << "resource limit: " << e.what() << '\n';
        return exit_guard;
    } catch (const InconsistencyError& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return exit_internal;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }

    if (out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            err << "cannot open " << out_path << " for writing\n";
            return exit_usage;
        }
        file << buffer.str();
    }
    return code;
}

}  // namespace mixgauss::cli
