#ifndef TURAN3_IO_HPP
#define TURAN3_IO_HPP

#include "hypergraph.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace turan3 {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

namespace detail {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    /// Next line with comments and surrounding blanks stripped; false at end of input.
    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_;
            if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
            const auto first = raw.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            const auto last = raw.find_last_not_of(" \t\r");
            out = raw.substr(first, last - first + 1);
            return true;
        }
        return false;
    }

    int line() const { return line_; }

private:
    std::istream& in_;
    int line_ = 0;
};

inline std::vector<long long> parse_integers(const std::string& text, int line) {
    std::istringstream ss(text);
    std::vector<long long> out;
    std::string tok;
    while (ss >> tok) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw ParseError(line, "expected an integer, found '" + tok + "'");
        }
        if (used != tok.size()) throw ParseError(line, "expected an integer, found '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

inline bool read_graph(LineReader& reader, Hypergraph3& out) {
    std::string text;
    if (!reader.next(text)) return false;
    const auto header = parse_integers(text, reader.line());
    if (header.size() != 2) throw ParseError(reader.line(), "header must be 'n m'");
    const long long n = header[0], m = header[1];
    if (n < 0 || n > max_vertices) throw ParseError(reader.line(), "vertex count must lie in [0, 16]");
    if (m < 0 || m > choose3(static_cast<int>(n))) throw ParseError(reader.line(), "edge count out of range");
    Hypergraph3 g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!reader.next(text)) throw ParseError(reader.line(), "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        const auto t = parse_integers(text, reader.line());
        if (t.size() != 3) throw ParseError(reader.line(), "an edge line needs exactly three vertices");
        if (!(0 <= t[0] && t[0] < t[1] && t[1] < t[2] && t[2] < n)) {
            throw ParseError(reader.line(), "edge '" + text + "' must list distinct ascending vertices below " + std::to_string(n));
        }
        const int a = static_cast<int>(t[0]), b = static_cast<int>(t[1]), c = static_cast<int>(t[2]);
        if (g.has_edge(a, b, c)) throw ParseError(reader.line(), "duplicate edge '" + text + "'");
        g.add_edge(a, b, c);
    }
    out = g;
    return true;
}

} // namespace detail

/// Reads one graph in the text format: "n m" followed by m lines "a b c"
/// with 0 <= a < b < c < n; '#' starts a comment.
inline Hypergraph3 read_graph(std::istream& in) {
    detail::LineReader reader(in);
    Hypergraph3 g;
    if (!detail::read_graph(reader, g)) throw ParseError(reader.line(), "empty input");
    std::string rest;
    if (reader.next(rest)) throw ParseError(reader.line(), "trailing content after the last edge");
    return g;
}

/// Reads a file holding any number of graphs back to back.
inline std::vector<Hypergraph3> read_graphs(std::istream& in) {
    detail::LineReader reader(in);
    std::vector<Hypergraph3> out;
    Hypergraph3 g;
    while (detail::read_graph(reader, g)) out.push_back(g);
    return out;
}

inline Hypergraph3 parse_graph(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

inline void write_graph(std::ostream& out, const Hypergraph3& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& t : g.edges()) out << t.a << ' ' << t.b << ' ' << t.c << '\n';
}

inline std::string format_graph(const Hypergraph3& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

} // namespace turan3

#endif // TURAN3_IO_HPP
