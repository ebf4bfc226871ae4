#pragma once

/**
 * @file cli.hpp
 * @brief Command implementations behind the latcov tool.
 *
 * Each command takes already-read input text and writes to the given
 * streams, returning the process exit code: 0 success/true, 1 predicate
 * false, 2 usage or parse error.
 */

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "latcov.hpp"

namespace latcov::cli {

inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;
inline constexpr int kUsage = 2;

enum class Format { table, json, csv };

struct EnumerateArgs {
    Int size = 0;
    bool only_strongly_minimal = false;
    std::optional<Int> lcm;
    Format format = Format::table;
    std::optional<std::string> dump_path;
    unsigned workers = 0;
};

namespace detail {

inline const char* yn(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

/// Reads a whole file; throws ParseError if it cannot be opened.
inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// key=value report of every predicate; exit 0 iff the input covers.
inline int cmd_verify(const std::string& text, std::ostream& out) {
    const Covering c = parse_covering(text);
    const bool cov = is_covering(c);
    out << "covering=" << detail::yn(cov) << "\n";
    const bool irr = cov && is_irredundant(c);
    out << "irredundant=" << (cov ? detail::yn(irr) : "n/a") << "\n";
    out << "minimal=" << detail::yn(is_minimal(c)) << "\n";
    out << "strongly_minimal=" << detail::yn(is_strongly_minimal(c)) << "\n";
    out << "size=" << c.size() << "\n";
    out << "lcm=" << c.lcm() << "\n";
    out << "weight=" << rational_to_string(c.weight()) << "\n";
    if (irr) {
        bool all = true;
        for (Int d : divisors(c.lcm()))
            if (d != c.lcm() && !simpson_bound_holds(c, d)) all = false;
        out << "simpson_bound=" << detail::yn(all) << "\n";
    } else {
        out << "simpson_bound=n/a\n";
    }
    out << "refinement=" << detail::yn(refinement_structure(c).has_value()) << "\n";
    out << "classification=" << classify(c) << "\n";
    return cov ? kOk : kFalse;
}

/// Prints the p-refined covering in text form.
inline int cmd_refine(const std::string& text, const std::string& member, Int prime, std::ostream& out,
                      std::ostream& err) {
    const Covering c = parse_covering(text);
    const CocyclicLattice l = parse_lattice(member);
    if (!is_prime(prime)) {
        err << "error: --prime must be prime\n";
        return kUsage;
    }
    if (!c.contains(l)) {
        err << "error: " << to_string(l) << " is not a member\n";
        return kUsage;
    }
    out << covering_to_text(p_refine(c, l, prime));
    return kOk;
}

/// Prints the index-structure label; exit 1 if the input is not minimal.
inline int cmd_classify(const std::string& text, std::ostream& out) {
    const Covering c = parse_covering(text);
    out << classify(c) << "\n";
    return is_minimal(c) ? kOk : kFalse;
}

inline int cmd_enumerate(const EnumerateArgs& args, std::ostream& out, std::ostream& err) {
    if (args.size < 1) {
        err << "error: --size must be >= 1\n";
        return kUsage;
    }
    if (args.lcm && *args.lcm < 1) {
        err << "error: --lcm must be >= 1\n";
        return kUsage;
    }
    EnumerationOptions opts;
    opts.only_strongly_minimal = args.only_strongly_minimal;
    opts.fixed_lcm = args.lcm;
    opts.workers = args.workers;
    const EnumerationReport rep = enumerate_minimal(args.size, opts);
    switch (args.format) {
        case Format::table: out << report_to_table(rep); break;
        case Format::json: out << report_to_json(rep, false).dump(2) << "\n"; break;
        case Format::csv: out << report_to_csv(rep); break;
    }
    if (args.dump_path) {
        std::ofstream f(*args.dump_path);
        if (!f) {
            err << "error: cannot write '" << *args.dump_path << "'\n";
            return kUsage;
        }
        f << report_to_json(rep, true).dump(2) << "\n";
    }
    return kOk;
}

/// One line per index multiset; the second column flags a coprime pair of indices.
inline int cmd_weight_solutions(Int size, std::ostream& out, std::ostream& err) {
    if (size < 1) {
        err << "error: --size must be >= 1\n";
        return kUsage;
    }
    out << "indices\tcoprime_pair\n";
    for (const auto& s : solve_weight_equation(size, size > 1)) {
        std::string label = "(";
        for (std::size_t i = 0; i < s.size(); ++i) label += (i ? "," : "") + std::to_string(s[i]);
        out << label << ")\t" << detail::yn(has_coprime_pair(s)) << "\n";
    }
    return kOk;
}

inline int cmd_congruence_verify(const std::string& text, std::ostream& out) {
    const CongruenceCovering c = parse_congruence(text);
    const bool cov = cc_is_covering(c);
    const bool irredundant = cc_is_irredundant(c);
    out << "covering=" << detail::yn(cov) << "\n";
    out << "irredundant=" << detail::yn(irredundant) << "\n";
    out << "minimal=" << detail::yn(cc_is_minimal(c)) << "\n";
    out << "strongly_minimal=" << detail::yn(cc_is_strongly_minimal(c)) << "\n";
    out << "size=" << c.size() << "\n";
    out << "lcm=" << c.lcm() << "\n";
    out << "weight=" << rational_to_string(c.weight()) << "\n";
    out << "simpson_lower_bound=" << cc_simpson_lower_bound(c) << "\n";
    out << "simpson_bound=" << (irredundant ? detail::yn(cc_simpson_bound(c)) : "n/a") << "\n";
    return cov ? kOk : kFalse;
}

}  // namespace latcov::cli
