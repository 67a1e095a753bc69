#ifndef METDIM_CATALOG_HPP
#define METDIM_CATALOG_HPP

#include <chrono>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "metdim/distance.hpp"
#include "metdim/expr.hpp"
#include "metdim/graph.hpp"
#include "metdim/graph6.hpp"
#include "metdim/metric_dimension.hpp"

namespace metdim {

// One line of a manifest:
//   name | source | n | valency | diameter | dimension | table | budget-seconds
// source: constructor expression, "g6:<token>", "file:<relpath>:fnv1a64:<hex>",
//   or "external" for graphs with no available construction.
// dimension: integer, integer? (expected value is an upper bound), or
//   "unknown" (build and parameter-check only).
struct CatalogEntry {
    std::string name;
    std::string source;
    int n = 0;
    int valency = 0;
    int diameter = 0;
    int dimension = -1;     // -1 when "unknown"
    bool bound = false;     // trailing '?' on dimension
    std::string table;
    double budget = 0;
    std::string base_dir;   // directory of the manifest, for file: sources
};

struct VerifyReport {
    std::string name;
    std::string status;     // match mismatch bound-consistent timeout build-error skipped
    int found = -1;         // exact dimension when the search finished
    int lo = -1, hi = -1;   // best bounds when it did not
    std::string expected;   // expected-dimension field as written
    std::string detail;     // failure reason / notes
    double seconds = 0;
};

struct SuiteOptions {
    SearchOptions search;      // strategy, threads, deterministic; budget per entry
    double budget_scale = 1;   // multiplies each entry's budget
};

struct SuiteSummary {
    std::vector<VerifyReport> reports;
    int matches = 0, mismatches = 0, bound_consistent = 0;
    int timeouts = 0, build_errors = 0, skipped = 0;
    bool all_ok() const { return mismatches == 0 && build_errors == 0; }
};

inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char b : data) {
        h ^= b;
        h *= 0x100000001B3ull;
    }
    return h;
}

namespace catdetail {

inline std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

[[noreturn]] inline void parse_fail(const std::string& path, int line, const std::string& what) {
    throw std::invalid_argument("manifest " + path + ":" + std::to_string(line) + ": " + what);
}

inline int parse_int(const std::string& s, const std::string& path, int line,
                     const std::string& field) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) parse_fail(path, line, "bad " + field + " '" + s + "'");
        return v;
    } catch (const std::invalid_argument&) {
        parse_fail(path, line, "bad " + field + " '" + s + "'");
    } catch (const std::out_of_range&) {
        parse_fail(path, line, "bad " + field + " '" + s + "'");
    }
}

inline std::string dir_of(const std::string& path) {
    size_t cut = path.find_last_of('/');
    return cut == std::string::npos ? std::string(".") : path.substr(0, cut);
}

}  // namespace catdetail

inline std::vector<CatalogEntry> load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("manifest " + path + ": cannot open");
    std::vector<CatalogEntry> entries;
    std::string line;
    int lineno = 0;
    std::string base = catdetail::dir_of(path);
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = catdetail::trim(line);
        if (body.empty() || body[0] == '#') continue;
        auto fields = catdetail::split(body, '|');
        if (fields.size() != 8)
            catdetail::parse_fail(path, lineno,
                                  "expected 8 fields, got " + std::to_string(fields.size()));
        for (auto& f : fields) f = catdetail::trim(f);

        CatalogEntry e;
        e.name = fields[0];
        e.source = fields[1];
        if (e.name.empty()) catdetail::parse_fail(path, lineno, "empty name");
        if (e.source.empty()) catdetail::parse_fail(path, lineno, "empty source");
        for (auto& prev : entries)
            if (prev.name == e.name)
                catdetail::parse_fail(path, lineno, "duplicate name '" + e.name + "'");
        e.n = catdetail::parse_int(fields[2], path, lineno, "vertex count");
        e.valency = catdetail::parse_int(fields[3], path, lineno, "valency");
        e.diameter = catdetail::parse_int(fields[4], path, lineno, "diameter");
        if (e.n < 2) catdetail::parse_fail(path, lineno, "vertex count must be >= 2");
        if (e.valency < 1 || e.diameter < 1)
            catdetail::parse_fail(path, lineno, "valency and diameter must be >= 1");

        std::string dim = fields[5];
        if (dim == "unknown") {
            e.dimension = -1;
        } else {
            if (!dim.empty() && dim.back() == '?') {
                e.bound = true;
                dim.pop_back();
            }
            e.dimension = catdetail::parse_int(dim, path, lineno, "dimension");
            if (e.dimension < 1)
                catdetail::parse_fail(path, lineno, "dimension must be >= 1");
        }
        e.table = fields[6];
        try {
            size_t used = 0;
            e.budget = std::stod(fields[7], &used);
            if (used != fields[7].size()) throw std::invalid_argument("");
        } catch (...) {
            catdetail::parse_fail(path, lineno, "bad budget '" + fields[7] + "'");
        }
        if (e.budget <= 0) catdetail::parse_fail(path, lineno, "budget must be positive");
        e.base_dir = base;
        entries.push_back(std::move(e));
    }
    return entries;
}

namespace catdetail {

// Builds the graph for an entry; throws invalid_argument on any problem.
inline Graph build_source(const CatalogEntry& e) {
    if (e.source.rfind("g6:", 0) == 0) return parse_graph6(e.source.substr(3));
    if (e.source.rfind("file:", 0) == 0) {
        auto parts = split(e.source, ':');
        if (parts.size() != 4 || parts[2] != "fnv1a64")
            throw std::invalid_argument("bad file source '" + e.source + "'");
        std::string full = e.base_dir + "/" + parts[1];
        std::ifstream in(full, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot open '" + full + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        std::string data = buf.str();
        std::uint64_t want = 0;
        try {
            want = std::stoull(parts[3], nullptr, 16);
        } catch (...) {
            throw std::invalid_argument("bad checksum '" + parts[3] + "'");
        }
        std::uint64_t got = fnv1a64(data);
        if (got != want) {
            std::ostringstream msg;
            msg << "checksum mismatch for '" << parts[1] << "': got " << std::hex << got;
            throw std::invalid_argument(msg.str());
        }
        size_t eol = data.find_first_of("\r\n");
        return parse_graph6(eol == std::string::npos ? data : data.substr(0, eol));
    }
    return parse_expression(e.source);
}

}  // namespace catdetail

inline VerifyReport verify_entry(const CatalogEntry& e, const SuiteOptions& opts = {}) {
    VerifyReport r;
    r.name = e.name;
    if (e.dimension < 0) {
        r.expected = "unknown";
    } else {
        r.expected = std::to_string(e.dimension);
        if (e.bound) r.expected += "?";
    }
    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    if (e.source == "external") {
        r.status = "skipped";
        r.detail = "no construction available";
        return r;
    }
    Graph g;
    try {
        g = catdetail::build_source(e);
    } catch (const std::exception& ex) {
        r.status = "build-error";
        r.detail = ex.what();
        r.seconds = elapsed();
        return r;
    }

    // parameter stage: n, valency, diameter must match before any search
    int val = -1;
    bool regular = g.is_regular(&val);
    int diam = -1;
    if (g.num_vertices() > 0 && g.is_connected()) diam = diameter(distance_matrix(g));
    if (g.num_vertices() != e.n || !regular || val != e.valency || diam != e.diameter) {
        r.status = "mismatch";
        std::ostringstream msg;
        msg << "parameters: built n=" << g.num_vertices() << " valency=" << val
            << " diameter=" << diam << ", manifest says n=" << e.n << " valency="
            << e.valency << " diameter=" << e.diameter;
        r.detail = msg.str();
        r.seconds = elapsed();
        return r;
    }
    if (e.dimension < 0) {
        r.status = "skipped";
        r.detail = "dimension unknown; parameters verified";
        r.seconds = elapsed();
        return r;
    }

    SearchOptions so = opts.search;
    so.budget_seconds = e.budget * (opts.budget_scale > 0 ? opts.budget_scale : 1);
    DimResult res;
    try {
        res = metric_dimension(g, so);
    } catch (const std::exception& ex) {
        r.status = "build-error";
        r.detail = std::string("search failed: ") + ex.what();
        r.seconds = elapsed();
        return r;
    }
    r.seconds = elapsed();
    r.lo = res.lo;
    r.hi = res.hi;
    if (res.exact) {
        r.found = res.dimension;
        if (e.bound) {
            r.status = res.dimension <= e.dimension ? "bound-consistent" : "mismatch";
            if (r.status == "mismatch")
                r.detail = "computed dimension exceeds the stated upper bound";
        } else {
            r.status = res.dimension == e.dimension ? "match" : "mismatch";
            if (r.status == "mismatch") r.detail = "computed dimension differs";
        }
        return r;
    }
    // budget ran out: report bounds; mismatch only if they contradict the entry
    if (e.bound) {
        r.status = res.hi <= e.dimension ? "bound-consistent" : "timeout";
        if (r.status == "bound-consistent")
            r.detail = "witness of size " + std::to_string(res.hi) + " found within budget";
        return r;
    }
    if (res.lo > e.dimension || res.hi < e.dimension) {
        r.status = "mismatch";
        r.detail = "bounds [" + std::to_string(res.lo) + "," + std::to_string(res.hi) +
                   "] exclude the expected value";
        return r;
    }
    r.status = "timeout";
    return r;
}

inline SuiteSummary run_suite(const std::vector<CatalogEntry>& entries,
                              const SuiteOptions& opts = {}) {
    SuiteSummary s;
    for (const auto& e : entries) {
        VerifyReport r = verify_entry(e, opts);
        if (r.status == "match") ++s.matches;
        else if (r.status == "mismatch") ++s.mismatches;
        else if (r.status == "bound-consistent") ++s.bound_consistent;
        else if (r.status == "timeout") ++s.timeouts;
        else if (r.status == "build-error") ++s.build_errors;
        else ++s.skipped;
        s.reports.push_back(std::move(r));
    }
    return s;
}

// Machine-readable line: name <TAB> status <TAB> found <TAB> expected <TAB> seconds.
inline std::string report_line(const VerifyReport& r) {
    std::ostringstream out;
    out << r.name << '\t' << r.status << '\t';
    if (r.found >= 0) out << r.found;
    else if (r.lo >= 0) out << r.lo << ".." << r.hi;
    else out << '-';
    out << '\t' << (r.expected.empty() ? "-" : r.expected) << '\t';
    out.setf(std::ios::fixed);
    out.precision(2);
    out << r.seconds;
    return out.str();
}

}  // namespace metdim

#endif  // METDIM_CATALOG_HPP
