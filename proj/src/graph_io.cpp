#include <icf/graph_io.hpp>
#include <icf/errors.hpp>

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace icf
{
    auto to_string(ParseErrorKind kind) -> std::string
    {
        switch (kind) {
            case ParseErrorKind::malformed_header:      return "malformed header";
            case ParseErrorKind::malformed_edge:        return "malformed edge line";
            case ParseErrorKind::edge_order:            return "edge not in canonical order";
            case ParseErrorKind::duplicate_edge:        return "duplicate edge";
            case ParseErrorKind::endpoint_out_of_range: return "endpoint out of range";
            case ParseErrorKind::bipartite_split:       return "edge does not cross the bipartition";
            case ParseErrorKind::edge_count_mismatch:   return "edge count does not match header";
            case ParseErrorKind::missing_final_newline: return "missing final newline";
        }
        return "unknown parse error";
    }

    ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string & detail) :
        std::runtime_error("line " + std::to_string(line) + ": " + to_string(kind)
                + (detail.empty() ? "" : " (" + detail + ")")),
        _kind(kind),
        _line(line)
    {
    }

    namespace
    {
        // Parses a line of exactly `count` canonical base-10 integers separated by
        // single spaces. Leading zeros are rejected, except for "0" itself.
        auto parse_fields(std::string_view line, std::size_t count) -> std::optional<std::vector<std::size_t>>
        {
            std::vector<std::size_t> result;
            std::size_t pos = 0;
            while (true) {
                auto end = std::min(line.find(' ', pos), line.size());
                auto field = line.substr(pos, end - pos);
                if (field.empty() || (field.size() > 1 && field.front() == '0'))
                    return std::nullopt;
                std::size_t value = 0;
                auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
                if (ec != std::errc{} || ptr != field.data() + field.size())
                    return std::nullopt;
                result.push_back(value);
                if (end == line.size())
                    break;
                pos = end + 1;
            }
            if (result.size() != count)
                return std::nullopt;
            return result;
        }
    }

    auto parse_graph(std::string_view text) -> Graph
    {
        if (text.empty() || text.back() != '\n')
            throw ParseError(ParseErrorKind::missing_final_newline, 1, "");

        std::vector<std::string_view> lines;
        for (std::size_t pos = 0 ; pos < text.size() ; ) {
            auto end = text.find('\n', pos);
            lines.push_back(text.substr(pos, end - pos));
            pos = end + 1;
        }

        auto header = parse_fields(lines[0], 3);
        if (! header)
            throw ParseError(ParseErrorKind::malformed_header, 1, std::string(lines[0]));
        auto n = (*header)[0], m = (*header)[1], side_p = (*header)[2];
        if (side_p > n)
            throw ParseError(ParseErrorKind::malformed_header, 1, "side_p_size exceeds n");

        if (lines.size() - 1 != m)
            throw ParseError(ParseErrorKind::edge_count_mismatch, lines.size(),
                    "header declares " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));

        std::vector<Edge> edges;
        edges.reserve(m);
        for (std::size_t i = 1 ; i < lines.size() ; ++i) {
            auto line_no = i + 1;
            auto fields = parse_fields(lines[i], 2);
            if (! fields)
                throw ParseError(ParseErrorKind::malformed_edge, line_no, std::string(lines[i]));
            Edge e{ (*fields)[0], (*fields)[1] };
            if (e.u >= n || e.v >= n)
                throw ParseError(ParseErrorKind::endpoint_out_of_range, line_no, std::string(lines[i]));
            if (! edges.empty() && edges.back() == e)
                throw ParseError(ParseErrorKind::duplicate_edge, line_no, std::string(lines[i]));
            if (e.u >= e.v || (! edges.empty() && ! (edges.back() < e)))
                throw ParseError(ParseErrorKind::edge_order, line_no, std::string(lines[i]));
            if (side_p > 0 && ((e.u < side_p) == (e.v < side_p)))
                throw ParseError(ParseErrorKind::bipartite_split, line_no, std::string(lines[i]));
            edges.push_back(e);
        }

        return Graph::from_edges(n, edges, side_p);
    }

    auto write_graph(const Graph & g) -> std::string
    {
        std::string out;
        out.reserve(16 + g.m() * 12);
        out += std::to_string(g.n()) + ' ' + std::to_string(g.m()) + ' ' + std::to_string(g.side_p_size()) + '\n';
        for (auto [u, v] : g.edges()) {
            out += std::to_string(u);
            out += ' ';
            out += std::to_string(v);
            out += '\n';
        }
        return out;
    }

    auto read_graph_file(const std::filesystem::path & path) -> Graph
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw InvalidArgument("cannot open graph file " + path.string());
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return parse_graph(buffer.str());
    }

    auto write_graph_file(const Graph & g, const std::filesystem::path & path) -> void
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw InvalidArgument("cannot open " + path.string() + " for writing");
        out << write_graph(g);
    }

    auto graph_hash(const Graph & g) -> std::string
    {
        auto bytes = write_graph(g);
        unsigned char digest[EVP_MAX_MD_SIZE];
        unsigned int length = 0;
        if (! EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr))
            throw std::runtime_error("SHA-256 digest failed");

        static constexpr char hex[] = "0123456789abcdef";
        std::string result;
        result.reserve(2 * length);
        for (unsigned int i = 0 ; i < length ; ++i) {
            result += hex[digest[i] >> 4];
            result += hex[digest[i] & 0xf];
        }
        return result;
    }
}
