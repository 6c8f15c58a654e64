#pragma once

#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "kfam/errors.hpp"
#include "kfam/family.hpp"

namespace kfam {

// Facet file format:
//   line 1: "n k"
//   each further non-comment line: one facet, strictly increasing
//   space-separated integers; '#' starts a comment; duplicate facet
//   lines are rejected.
inline KFamily parse_facet_file(std::istream& in) {
    std::string line;
    int n = 0, k = 0;
    bool header = false;
    std::vector<Facet> facets;
    std::set<Facet> seen;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!header) {
            if (!(ls >> n >> k)) {
                // blank or comment-only lines may precede the header
                std::istringstream probe(line);
                std::string tok;
                if (probe >> tok) throw FormatError("facet file: malformed header line");
                continue;
            }
            std::string extra;
            if (ls >> extra) throw FormatError("facet file: trailing tokens on header line");
            if (n < 1 || k < 1 || k > n) throw FormatError("facet file: need 1 <= k <= n");
            header = true;
            continue;
        }
        Facet f;
        int v;
        while (ls >> v) f.push_back(v);
        if (!ls.eof()) throw FormatError("facet file: non-integer token on line " + std::to_string(lineno));
        if (f.empty()) continue;
        if (static_cast<int>(f.size()) != k) {
            throw FormatError("facet file: facet on line " + std::to_string(lineno) +
                              " has " + std::to_string(f.size()) + " vertices, expected " + std::to_string(k));
        }
        for (std::size_t i = 0; i + 1 < f.size(); ++i) {
            if (f[i] >= f[i + 1]) {
                throw FormatError("facet file: facet on line " + std::to_string(lineno) +
                                  " is not strictly increasing");
            }
        }
        for (int u : f) {
            if (u < 1 || u > n) {
                throw FormatError("facet file: vertex out of range on line " + std::to_string(lineno));
            }
        }
        if (!seen.insert(f).second) {
            throw FormatError("facet file: duplicate facet on line " + std::to_string(lineno));
        }
        facets.push_back(std::move(f));
    }
    if (!header) throw FormatError("facet file: missing header line");
    if (facets.empty()) return KFamily::empty(n, k);
    return from_facets(n, std::move(facets));
}

inline void write_facet_file(std::ostream& out, const KFamily& s) {
    out << s.n << ' ' << s.k << '\n';
    for (const auto& f : s.facets) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) out << ' ';
            out << f[i];
        }
        out << '\n';
    }
}

} // namespace kfam
