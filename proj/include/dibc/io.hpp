#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "dibc/coloring.hpp"
#include "dibc/digraph.hpp"

namespace dibc {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

namespace io_detail {

inline bool next_line(std::istream& is, std::string& line, int& lineno) {
    if (!std::getline(is, line)) return false;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

inline long long parse_int(const std::string& tok, int lineno, const char* what) {
    size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(lineno, std::string("expected an integer for ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError(lineno, std::string("trailing characters in ") + what + " '" + tok + "'");
    return value;
}

}  // namespace io_detail

/// dgf format: `c` comment lines, one `p dib <n> <arc-count>` header, then
/// `a <u> <v>` arc lines with 1-based endpoints. Duplicate arc lines, loops,
/// out-of-range endpoints and count mismatches are rejected.
inline Digraph read_dgf(std::istream& is) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long long n = 0, declared = 0;
    std::vector<Arc> arcs;
    std::unordered_set<long long> seen;
    while (io_detail::next_line(is, line, lineno)) {
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            std::string format, tok_n, tok_m, extra;
            if (!(ss >> format >> tok_n >> tok_m)) throw ParseError(lineno, "malformed header, expected 'p dib <n> <arcs>'");
            if (ss >> extra) throw ParseError(lineno, "trailing tokens after header");
            if (format != "dib") throw ParseError(lineno, "unknown format '" + format + "', expected 'dib'");
            n = io_detail::parse_int(tok_n, lineno, "vertex count");
            declared = io_detail::parse_int(tok_m, lineno, "arc count");
            if (n < 1) throw ParseError(lineno, "vertex count must be at least 1");
            if (declared < 0) throw ParseError(lineno, "arc count must be nonnegative");
            have_header = true;
            continue;
        }
        if (tag == "a") {
            if (!have_header) throw ParseError(lineno, "arc line before header");
            std::string tok_u, tok_v, extra;
            if (!(ss >> tok_u >> tok_v)) throw ParseError(lineno, "malformed arc line, expected 'a <u> <v>'");
            if (ss >> extra) throw ParseError(lineno, "trailing tokens after arc");
            const long long u = io_detail::parse_int(tok_u, lineno, "arc tail");
            const long long v = io_detail::parse_int(tok_v, lineno, "arc head");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "arc endpoint out of range 1.." + std::to_string(n));
            if (u == v) throw ParseError(lineno, "loop at vertex " + std::to_string(u));
            if (!seen.insert((u - 1) * n + (v - 1)).second)
                throw ParseError(lineno, "duplicate arc " + std::to_string(u) + " -> " + std::to_string(v));
            arcs.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }
        throw ParseError(lineno, "unrecognized line type '" + tag + "'");
    }
    if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'p dib' header");
    if (static_cast<long long>(arcs.size()) != declared)
        throw ParseError(lineno, "arc count mismatch: header declares " + std::to_string(declared) +
                                     ", file has " + std::to_string(arcs.size()));
    return Digraph::build(static_cast<int>(n), std::move(arcs));
}

inline Digraph read_dgf_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_dgf(f);
}

/// Writer emits arcs sorted lexicographically, so write/read round-trips are
/// bit-exact.
inline void write_dgf(const Digraph& d, std::ostream& os,
                      const std::vector<std::string>& comments = {}) {
    for (const auto& comment : comments) os << "c " << comment << "\n";
    os << "p dib " << d.order() << " " << d.arc_count() << "\n";
    for (const auto& [u, v] : d.arcs()) os << "a " << (u + 1) << " " << (v + 1) << "\n";
}

inline std::string to_dgf(const Digraph& d, const std::vector<std::string>& comments = {}) {
    std::ostringstream os;
    write_dgf(d, os, comments);
    return os.str();
}

inline void write_dgf_file(const Digraph& d, const std::string& path,
                           const std::vector<std::string>& comments = {}) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    write_dgf(d, f, comments);
}

/// Coloring format: `<vertex> <color>` per line, both 1-based, one line per
/// vertex in any order. The writer emits vertex-sorted lines.
inline Coloring read_coloring(std::istream& is, int n) {
    std::string line;
    int lineno = 0;
    std::vector<int> assign(static_cast<size_t>(n), 0);
    std::vector<char> seen(static_cast<size_t>(n), 0);
    while (io_detail::next_line(is, line, lineno)) {
        std::istringstream ss(line);
        std::string tok_v, tok_c, extra;
        if (!(ss >> tok_v)) continue;
        if (!(ss >> tok_c)) throw ParseError(lineno, "expected '<vertex> <color>'");
        if (ss >> extra) throw ParseError(lineno, "trailing tokens");
        const long long v = io_detail::parse_int(tok_v, lineno, "vertex");
        const long long c = io_detail::parse_int(tok_c, lineno, "color");
        if (v < 1 || v > n) throw ParseError(lineno, "vertex out of range 1.." + std::to_string(n));
        if (c < 1) throw ParseError(lineno, "colors are 1-based");
        if (seen[static_cast<size_t>(v - 1)]) throw ParseError(lineno, "vertex " + std::to_string(v) + " colored twice");
        seen[static_cast<size_t>(v - 1)] = 1;
        assign[static_cast<size_t>(v - 1)] = static_cast<int>(c);
    }
    for (int v = 0; v < n; ++v)
        if (!seen[static_cast<size_t>(v)])
            throw ParseError(lineno == 0 ? 1 : lineno, "vertex " + std::to_string(v + 1) + " has no color");
    try {
        return Coloring::from_assignment(std::move(assign));
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno == 0 ? 1 : lineno, e.what());
    }
}

inline Coloring read_coloring_file(const std::string& path, int n) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_coloring(f, n);
}

inline void write_coloring(const Coloring& c, std::ostream& os) {
    for (int v = 0; v < c.size(); ++v) os << (v + 1) << " " << c.color_of(v) << "\n";
}

inline std::string to_coloring_text(const Coloring& c) {
    std::ostringstream os;
    write_coloring(c, os);
    return os.str();
}

inline void write_coloring_file(const Coloring& c, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    write_coloring(c, f);
}

}  // namespace dibc
