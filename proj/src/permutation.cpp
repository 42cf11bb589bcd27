#include "psiforge/permutation.hpp"

#include <fstream>
#include <sstream>

namespace psiforge {

Perm identity_perm(std::uint32_t degree) {
    Perm p(degree);
    for (std::uint32_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint16_t>(i);
    return p;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

Perm inverse_perm(const Perm& a) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint16_t>(i);
    return r;
}

std::string cycle_string(const Perm& p) {
    std::string out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == i) continue;
        out += "(";
        std::size_t j = i;
        bool first = true;
        do {
            seen[j] = true;
            if (!first) out += ",";
            out += std::to_string(j + 1);
            first = false;
            j = p[j];
        } while (j != i);
        out += ")";
    }
    return out.empty() ? "()" : out;
}

GroupPtr close_permutations(std::uint32_t degree, const std::vector<Perm>& gens, std::string name,
                            std::size_t cap) {
    for (const Perm& g : gens)
        require_internal(g.size() == degree, "generator degree mismatch");
    return close_over<Perm, Perm (*)(const Perm&, const Perm&), std::string (*)(const Perm&), PermHash>(
        identity_perm(degree), gens, &compose, &cycle_string, std::move(name), cap);
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, std::size_t col, const std::string& msg) {
    fail(Errc::parse_error,
         "generator file, line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

// One permutation per line: a sequence of parenthesized cycles over 1-based
// points, or "()" alone for the identity.  `i` starts past leading blanks so
// reported columns match the original line.
Perm parse_perm_line(const std::string& s, std::size_t i, std::size_t lineno, std::uint32_t degree) {
    Perm p = identity_perm(degree);
    std::vector<bool> used(degree, false);
    auto skip_ws = [&] {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    };
    skip_ws();
    bool any = false;
    while (i < s.size() && s[i] != '#') {
        if (s[i] != '(') parse_fail(lineno, i + 1, "expected '('");
        ++i;
        std::vector<std::uint32_t> cycle;
        skip_ws();
        while (i < s.size() && s[i] != ')') {
            if (!isdigit(static_cast<unsigned char>(s[i]))) parse_fail(lineno, i + 1, "expected a point number");
            std::size_t start = i;
            std::uint64_t v = 0;
            while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) {
                v = v * 10 + (s[i] - '0');
                if (v > 1000000) parse_fail(lineno, start + 1, "point number out of range");
                ++i;
            }
            if (v < 1 || v > degree)
                parse_fail(lineno, start + 1,
                           "point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
            if (used[v - 1]) parse_fail(lineno, start + 1, "point " + std::to_string(v) + " repeated; cycles must be disjoint");
            used[v - 1] = true;
            cycle.push_back(static_cast<std::uint32_t>(v - 1));
            skip_ws();
            if (i < s.size() && s[i] == ',') {
                ++i;
                skip_ws();
                if (i < s.size() && s[i] == ')') parse_fail(lineno, i + 1, "trailing comma in cycle");
            } else if (i < s.size() && s[i] != ')') {
                parse_fail(lineno, i + 1, "expected ',' or ')'");
            }
        }
        if (i >= s.size()) parse_fail(lineno, s.size() + 1, "unterminated cycle");
        ++i; // past ')'
        any = true;
        for (std::size_t k = 0; k < cycle.size(); ++k)
            p[cycle[k]] = static_cast<std::uint16_t>(cycle[(k + 1) % cycle.size()]);
        skip_ws();
    }
    if (!any) parse_fail(lineno, i + 1, "expected a permutation");
    return p;
}

} // namespace

GeneratorFile parse_generator_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    GeneratorFile out;
    bool have_degree = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t i = 0;
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size() || line[i] == '#') continue;
        if (!have_degree) {
            if (line.compare(i, 6, "degree") != 0) parse_fail(lineno, i + 1, "expected 'degree N'");
            i += 6;
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            if (i >= line.size() || !isdigit(static_cast<unsigned char>(line[i])))
                parse_fail(lineno, i + 1, "expected the degree value");
            std::uint64_t v = 0;
            std::size_t start = i;
            while (i < line.size() && isdigit(static_cast<unsigned char>(line[i]))) {
                v = v * 10 + (line[i] - '0');
                if (v > 65535) parse_fail(lineno, start + 1, "degree out of range (max 65535)");
                ++i;
            }
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            if (i < line.size() && line[i] != '#') parse_fail(lineno, i + 1, "unexpected text after degree");
            if (v < 1) parse_fail(lineno, start + 1, "degree must be >= 1");
            out.degree = static_cast<std::uint32_t>(v);
            have_degree = true;
            continue;
        }
        out.generators.push_back(parse_perm_line(line, i, lineno, out.degree));
    }
    if (!have_degree) parse_fail(lineno + 1, 1, "missing 'degree N' header");
    return out;
}

GeneratorFile load_generator_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::argument_error, "cannot open generator file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_generator_file(buf.str());
}

} // namespace psiforge
