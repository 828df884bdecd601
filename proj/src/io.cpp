#include "ramsey/io.hpp"

#include "ramsey/errors.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next non-blank, non-comment line split into unsigned fields.
    std::optional<std::vector<std::uint64_t>> next()
    {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            const auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#')
                continue;
            return split(line);
        }
        return std::nullopt;
    }

    std::size_t line() const noexcept { return line_no_; }

private:
    std::vector<std::uint64_t> split(std::string_view line) const
    {
        std::vector<std::uint64_t> fields;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
                ++pos;
            if (pos == line.size())
                break;
            auto end = pos;
            while (end < line.size() && line[end] != ' ' && line[end] != '\t')
                ++end;
            const auto token = line.substr(pos, end - pos);
            std::uint64_t value = 0;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                throw ParseError(line_no_, "expected a non-negative integer, got '" + std::string(token) + "'");
            fields.push_back(value);
            pos = end;
        }
        return fields;
    }

    std::istream& in_;
    std::size_t line_no_ = 0;
};

void expect_fields(const std::vector<std::uint64_t>& fields, std::size_t count, std::size_t line,
                   const char* shape)
{
    if (fields.size() != count)
        throw ParseError(line, std::string("expected `") + shape + "`, got " + std::to_string(fields.size()) +
                                   " field(s)");
}

Colour checked_colour(std::uint64_t c, std::uint64_t k, std::size_t line)
{
    if (c > k)
        throw ParseError(line, "colour " + std::to_string(c) + " exceeds declared maximum " + std::to_string(k));
    return static_cast<Colour>(c);
}

std::uint64_t checked_k(std::uint64_t k, std::size_t line)
{
    if (k > std::numeric_limits<Colour>::max() - 1)
        throw ParseError(line, "maximum colour id " + std::to_string(k) + " is too large");
    return k;
}

} // namespace

Colouring read_colouring(std::istream& in, const Capacity& capacity)
{
    LineReader reader(in);
    const auto header = reader.next();
    if (!header)
        throw ParseError(reader.line(), "missing header `n k`");
    expect_fields(*header, 2, reader.line(), "n k");
    const auto n = (*header)[0];
    const auto k = checked_k((*header)[1], reader.line());
    try {
        capacity.check(static_cast<std::size_t>(n));
    } catch (const CapacityError& e) {
        throw ParseError(reader.line(), e.what());
    }

    const auto edges = choose2(n);
    std::vector<Colour> colours(edges, colourless);
    std::vector<std::size_t> seen_at(edges, 0);
    std::size_t filled = 0;
    while (const auto fields = reader.next()) {
        const auto line = reader.line();
        expect_fields(*fields, 3, line, "u v c");
        const auto u = (*fields)[0];
        const auto v = (*fields)[1];
        if (!(u < v && v < n))
            throw ParseError(line, "edge " + std::to_string(u) + " " + std::to_string(v) +
                                       " must satisfy 0 <= u < v < " + std::to_string(n));
        const auto idx = edge_index(n, u, v);
        if (seen_at[idx] != 0)
            throw ParseError(line, "duplicate edge " + std::to_string(u) + " " + std::to_string(v) +
                                       " (first given on line " + std::to_string(seen_at[idx]) + ")");
        seen_at[idx] = line;
        colours[idx] = checked_colour((*fields)[2], k, line);
        ++filled;
    }
    if (filled != edges) {
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (seen_at[edge_index(n, u, v)] == 0)
                    throw ParseError(reader.line(), "missing edge " + std::to_string(u) + " " + std::to_string(v) +
                                                        " (" + std::to_string(edges - filled) + " edge(s) missing)");
    }
    return Colouring(static_cast<std::size_t>(n), std::move(colours), capacity);
}

Colouring read_colouring_file(const std::string& path, const Capacity& capacity)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open " + path);
    return read_colouring(in, capacity);
}

void write_colouring(std::ostream& out, const Colouring& c)
{
    out << c.n() << ' ' << c.max_colour() << '\n';
    for (const auto& e : c.edges())
        out << e.u << ' ' << e.v << ' ' << e.colour << '\n';
}

BipartiteColouring read_bipartite(std::istream& in, const Capacity& capacity)
{
    LineReader reader(in);
    const auto header = reader.next();
    if (!header)
        throw ParseError(reader.line(), "missing header `p q k`");
    expect_fields(*header, 3, reader.line(), "p q k");
    const auto p = (*header)[0];
    const auto q = (*header)[1];
    const auto k = checked_k((*header)[2], reader.line());
    try {
        capacity.check(static_cast<std::size_t>(p + q));
    } catch (const CapacityError& e) {
        throw ParseError(reader.line(), e.what());
    }

    std::vector<Colour> colours(p * q, colourless);
    std::vector<std::size_t> seen_at(p * q, 0);
    std::size_t filled = 0;
    while (const auto fields = reader.next()) {
        const auto line = reader.line();
        expect_fields(*fields, 3, line, "u v c");
        const auto u = (*fields)[0];
        const auto v = (*fields)[1];
        if (u >= p || v >= q)
            throw ParseError(line, "edge " + std::to_string(u) + " " + std::to_string(v) + " outside " +
                                       std::to_string(p) + "x" + std::to_string(q));
        const auto idx = u * q + v;
        if (seen_at[idx] != 0)
            throw ParseError(line, "duplicate edge " + std::to_string(u) + " " + std::to_string(v) +
                                       " (first given on line " + std::to_string(seen_at[idx]) + ")");
        seen_at[idx] = line;
        colours[idx] = checked_colour((*fields)[2], k, line);
        ++filled;
    }
    if (filled != p * q) {
        for (std::size_t idx = 0; idx < p * q; ++idx)
            if (seen_at[idx] == 0)
                throw ParseError(reader.line(), "missing edge " + std::to_string(idx / q) + " " +
                                                    std::to_string(idx % q) + " (" +
                                                    std::to_string(p * q - filled) + " edge(s) missing)");
    }
    return BipartiteColouring(static_cast<std::size_t>(p), static_cast<std::size_t>(q), std::move(colours),
                              capacity);
}

BipartiteColouring read_bipartite_file(const std::string& path, const Capacity& capacity)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open " + path);
    return read_bipartite(in, capacity);
}

void write_bipartite(std::ostream& out, const BipartiteColouring& b)
{
    out << b.p() << ' ' << b.q() << ' ' << b.max_colour() << '\n';
    for (std::size_t u = 0; u < b.p(); ++u)
        for (std::size_t v = 0; v < b.q(); ++v)
            out << u << ' ' << v << ' ' << b(static_cast<Vertex>(u), static_cast<Vertex>(v)) << '\n';
}

} // namespace ramsey
