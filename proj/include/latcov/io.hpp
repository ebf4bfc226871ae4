#pragma once

/**
 * @file io.hpp
 * @brief Text and JSON formats for lattices, coverings, congruence systems
 * and enumeration reports.
 *
 * Lattice text form is "c:d;N" with (c, d) canonical. A covering in text
 * form is one lattice per line; in JSON it is {"lattices": [{"c","d","n"}]}.
 * Writers always emit canonical order, so parse-then-write is a fixed point.
 */

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "congruence.hpp"
#include "covering.hpp"
#include "enumerate.hpp"

namespace latcov {

/// Malformed input text.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline Int parse_int(std::string_view s, std::string_view context) {
    s = trim(s);
    if (s.empty()) throw ParseError("empty number in '" + std::string(context) + "'");
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(std::string(s), &pos);
    } catch (const std::exception&) {
        throw ParseError("bad number '" + std::string(s) + "' in '" + std::string(context) + "'");
    }
    if (pos != s.size()) throw ParseError("bad number '" + std::string(s) + "' in '" + std::string(context) + "'");
    return v;
}

/// Non-empty lines with '#' comments removed.
inline std::vector<std::string> content_lines(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        auto t = trim(line);
        if (!t.empty()) out.emplace_back(t);
    }
    return out;
}

inline bool looks_like_json(std::string_view text) {
    const auto t = trim(text);
    return !t.empty() && t.front() == '{';
}

inline nlohmann::json parse_json(std::string_view text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

inline Int json_int(const nlohmann::json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_number_integer())
        throw ParseError(std::string("expected integer field '") + key + "'");
    return obj.at(key).get<Int>();
}

}  // namespace detail

/// Parses "c:d;N" (c, d may be negative or unreduced).
inline CocyclicLattice parse_lattice(std::string_view s) {
    const auto colon = s.find(':');
    const auto semi = s.find(';');
    if (colon == std::string_view::npos || semi == std::string_view::npos || semi < colon)
        throw ParseError("expected 'c:d;N', got '" + std::string(s) + "'");
    const Int c = detail::parse_int(s.substr(0, colon), s);
    const Int d = detail::parse_int(s.substr(colon + 1, semi - colon - 1), s);
    const Int n = detail::parse_int(s.substr(semi + 1), s);
    if (n < 1) throw ParseError("index must be >= 1 in '" + std::string(s) + "'");
    if (std::gcd(std::gcd(c, d), n) != 1) throw ParseError("gcd(c, d, N) != 1 in '" + std::string(s) + "'");
    return CocyclicLattice::make(c, d, n);
}

inline nlohmann::json lattice_to_json(const CocyclicLattice& l) {
    return {{"c", l.point().c()}, {"d", l.point().d()}, {"n", l.index()}};
}

inline CocyclicLattice lattice_from_json(const nlohmann::json& j) {
    const Int c = detail::json_int(j, "c");
    const Int d = detail::json_int(j, "d");
    const Int n = detail::json_int(j, "n");
    if (n < 1 || std::gcd(std::gcd(c, d), n) != 1)
        throw ParseError("invalid lattice " + j.dump());
    return CocyclicLattice::make(c, d, n);
}

inline nlohmann::json covering_to_json(const Covering& c) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& l : c) arr.push_back(lattice_to_json(l));
    return {{"lattices", arr}};
}

inline Covering covering_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("lattices") || !j.at("lattices").is_array())
        throw ParseError("expected {\"lattices\": [...]}");
    std::vector<CocyclicLattice> ls;
    for (const auto& e : j.at("lattices")) ls.push_back(lattice_from_json(e));
    try {
        return Covering(std::move(ls));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

/// One "c:d;N" per line, canonical order.
inline std::string covering_to_text(const Covering& c) {
    std::string out;
    for (const auto& l : c) out += to_string(l) + "\n";
    return out;
}

/// Accepts either the JSON or the text form. Lines may carry '#' comments.
inline Covering parse_covering(std::string_view text) {
    if (detail::looks_like_json(text)) return covering_from_json(detail::parse_json(text));
    std::vector<CocyclicLattice> ls;
    for (const auto& line : detail::content_lines(text)) ls.push_back(parse_lattice(line));
    try {
        return Covering(std::move(ls));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline nlohmann::json congruence_to_json(const CongruenceCovering& c) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : c) arr.push_back({{"a", r.a}, {"n", r.n}});
    return {{"classes", arr}};
}

/// "a mod N" per line.
inline std::string congruence_to_text(const CongruenceCovering& c) {
    std::string out;
    for (const auto& r : c) out += std::to_string(r.a) + " mod " + std::to_string(r.n) + "\n";
    return out;
}

inline CongruenceCovering parse_congruence(std::string_view text) {
    std::vector<ResidueClass> cs;
    if (detail::looks_like_json(text)) {
        const auto j = detail::parse_json(text);
        if (!j.is_object() || !j.contains("classes") || !j.at("classes").is_array())
            throw ParseError("expected {\"classes\": [...]}");
        for (const auto& e : j.at("classes")) {
            const Int n = detail::json_int(e, "n");
            if (n < 1) throw ParseError("modulus must be >= 1");
            cs.push_back(ResidueClass::make(detail::json_int(e, "a"), n));
        }
    } else {
        for (const auto& line : detail::content_lines(text)) {
            const auto pos = line.find(" mod ");
            if (pos == std::string::npos) throw ParseError("expected 'a mod N', got '" + line + "'");
            const Int a = detail::parse_int(std::string_view(line).substr(0, pos), line);
            const Int n = detail::parse_int(std::string_view(line).substr(pos + 5), line);
            if (n < 1) throw ParseError("modulus must be >= 1 in '" + line + "'");
            cs.push_back(ResidueClass::make(a, n));
        }
    }
    try {
        return CongruenceCovering(std::move(cs));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline std::string rational_to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Aligned table: index structure, multiplicity, strongly minimal?, with totals.
inline std::string report_to_table(const EnumerationReport& rep) {
    std::size_t width = std::string("total not strongly minimal").size();
    for (const auto& r : rep.rows) width = std::max(width, r.label.size());
    std::ostringstream os;
    auto line = [&] { os << std::string(width + 2 + 12 + 2 + 17, '-') << "\n"; };
    os << "Minimal lattice coverings of size " << rep.size << "\n";
    line();
    os << std::left << std::setw(static_cast<int>(width)) << "index structure" << "  " << std::setw(12)
       << "multiplicity" << "  " << "strongly minimal?" << "\n";
    line();
    for (bool strong : {true, false}) {
        for (const auto& r : rep.rows) {
            if (r.strongly_minimal != strong) continue;
            os << std::left << std::setw(static_cast<int>(width)) << r.label << "  " << std::right << std::setw(12)
               << r.multiplicity << "  " << (r.strongly_minimal ? "yes" : "no") << "\n";
        }
        os << std::left << std::setw(static_cast<int>(width))
           << (strong ? "total strongly minimal" : "total not strongly minimal") << "  " << std::right << std::setw(12)
           << (strong ? rep.total_strongly_minimal : rep.total - rep.total_strongly_minimal) << "\n";
        line();
    }
    os << std::left << std::setw(static_cast<int>(width)) << "total" << "  " << std::right << std::setw(12) << rep.total
       << "\n";
    line();
    return os.str();
}

/// Report rows and totals; the covering list is included when with_coverings is set.
inline nlohmann::json report_to_json(const EnumerationReport& rep, bool with_coverings) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : rep.rows)
        rows.push_back({{"structure", r.label}, {"multiplicity", r.multiplicity}, {"strongly_minimal", r.strongly_minimal}});
    nlohmann::json j{{"size", rep.size},
                     {"rows", rows},
                     {"total", rep.total},
                     {"total_strongly_minimal", rep.total_strongly_minimal}};
    if (with_coverings) {
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& c : rep.coverings) cs.push_back(covering_to_json(c));
        j["coverings"] = cs;
    }
    return j;
}

/// CSV with header structure,multiplicity,strongly_minimal.
inline std::string report_to_csv(const EnumerationReport& rep) {
    std::string out = "structure,multiplicity,strongly_minimal\n";
    for (const auto& r : rep.rows)
        out += "\"" + r.label + "\"," + std::to_string(r.multiplicity) + "," + (r.strongly_minimal ? "yes" : "no") + "\n";
    return out;
}

}  // namespace latcov
