#include <icf/levi.hpp>
#include <icf/errors.hpp>

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

namespace icf
{
    auto is_prime(std::uint64_t q) -> bool
    {
        if (q < 2)
            return false;
        for (std::uint64_t d = 2 ; d <= q / d ; ++d)
            if (q % d == 0)
                return false;
        return true;
    }

    PrimeModulus::PrimeModulus(std::uint64_t q) :
        _q(q)
    {
        if (! is_prime(q))
            throw InvalidArgument("q = " + std::to_string(q) + " is not prime");
        // keeps (q-1)^2 and vertex indices inside 64 bits
        if (q > (std::uint64_t{1} << 31))
            throw InvalidArgument("q = " + std::to_string(q) + " is too large");
    }

    namespace
    {
        auto check_residue(PrimeModulus q, std::uint64_t a) -> void
        {
            if (a >= q.value())
                throw InvalidArgument("residue " + std::to_string(a) + " out of range for modulus "
                        + std::to_string(q.value()));
        }
    }

    auto field_add(PrimeModulus q, std::uint64_t a, std::uint64_t b) -> std::uint64_t
    {
        check_residue(q, a);
        check_residue(q, b);
        return (a + b) % q.value();
    }

    auto field_mul(PrimeModulus q, std::uint64_t a, std::uint64_t b) -> std::uint64_t
    {
        check_residue(q, a);
        check_residue(q, b);
        return (a * b) % q.value();
    }

    auto LeviIndexing::check(std::uint64_t r) const -> void
    {
        if (r >= _q)
            throw InvalidArgument("coordinate " + std::to_string(r) + " out of range for q = " + std::to_string(_q));
    }

    auto LeviIndexing::point(std::uint64_t x, std::uint64_t y) const -> Vertex
    {
        check(x);
        check(y);
        return x * _q + y;
    }

    auto LeviIndexing::slope_point(std::uint64_t a) const -> Vertex
    {
        check(a);
        return _q * _q + a;
    }

    auto LeviIndexing::vertical_point() const -> Vertex
    {
        return _q * _q + _q;
    }

    auto LeviIndexing::line(std::uint64_t a, std::uint64_t b) const -> Vertex
    {
        check(a);
        check(b);
        return side_size() + a * _q + b;
    }

    auto LeviIndexing::vertical_line(std::uint64_t x) const -> Vertex
    {
        check(x);
        return side_size() + _q * _q + x;
    }

    auto LeviIndexing::line_at_infinity() const -> Vertex
    {
        return 2 * _q * _q + 2 * _q + 1;
    }

    auto gen_levi(PrimeModulus modulus) -> Graph
    {
        LeviIndexing idx(modulus);
        auto q = modulus.value();

        std::vector<Edge> edges;
        edges.reserve(idx.side_size() * (q + 1));

        // Points in index order, each with its lines in ascending line index.
        for (std::uint64_t x = 0 ; x < q ; ++x)
            for (std::uint64_t y = 0 ; y < q ; ++y) {
                auto p = idx.point(x, y);
                for (std::uint64_t a = 0 ; a < q ; ++a) {
                    // a*x + b = y  <=>  b = y - a*x
                    auto ax = field_mul(modulus, a, x);
                    auto b = field_add(modulus, y, (q - ax) % q);
                    edges.push_back({ p, idx.line(a, b) });
                }
                edges.push_back({ p, idx.vertical_line(x) });
            }

        for (std::uint64_t a = 0 ; a < q ; ++a) {
            for (std::uint64_t b = 0 ; b < q ; ++b)
                edges.push_back({ idx.slope_point(a), idx.line(a, b) });
            edges.push_back({ idx.slope_point(a), idx.line_at_infinity() });
        }

        for (std::uint64_t x = 0 ; x < q ; ++x)
            edges.push_back({ idx.vertical_point(), idx.vertical_line(x) });
        edges.push_back({ idx.vertical_point(), idx.line_at_infinity() });

        std::sort(edges.begin(), edges.end());
        return Graph::from_edges(idx.vertex_count(), edges, idx.side_size());
    }

    namespace
    {
        struct SideStats
        {
            std::uint64_t degree_min = std::numeric_limits<std::uint64_t>::max(), degree_max = 0;
            std::uint64_t common_min = std::numeric_limits<std::uint64_t>::max(), common_max = 0;
            bool degree_ok = true;
            bool common_ok = true;
        };

        auto side_stats(const Graph & g, Vertex begin, Vertex end, std::uint64_t degree) -> SideStats
        {
            SideStats s;
            for (Vertex u = begin ; u < end ; ++u) {
                std::uint64_t d = g.degree(u);
                s.degree_min = std::min(s.degree_min, d);
                s.degree_max = std::max(s.degree_max, d);
                if (d != degree)
                    s.degree_ok = false;
                for (Vertex v = u + 1 ; v < end ; ++v) {
                    std::uint64_t c = intersection_count(g.neighbours(u), g.neighbours(v));
                    s.common_min = std::min(s.common_min, c);
                    s.common_max = std::max(s.common_max, c);
                    if (c != 1)
                        s.common_ok = false;
                }
            }
            return s;
        }
    }

    auto verify_levi_properties(const Graph & g, PrimeModulus modulus) -> LeviPropertyReport
    {
        LeviIndexing idx(modulus);
        auto q = modulus.value();

        LeviPropertyReport r;
        r.expected_n = idx.vertex_count();
        r.observed_n = g.n();
        r.expected_degree = q + 1;
        r.n_ok = g.n() == idx.vertex_count() && g.side_p_size() == idx.side_size();

        // An empty side is reported as failing; the properties quantify over
        // nonempty sides of a fixed size.
        auto p = side_stats(g, 0, g.side_p_size(), q + 1);
        auto l = side_stats(g, g.side_p_size(), g.n(), q + 1);

        r.p_degree_ok = p.degree_ok && g.side_p_size() > 0;
        r.p_common_ok = p.common_ok && g.side_p_size() > 0;
        r.l_degree_ok = l.degree_ok && g.n() > g.side_p_size();
        r.l_common_ok = l.common_ok && g.n() > g.side_p_size();

        r.p_degree_min = p.degree_min;  r.p_degree_max = p.degree_max;
        r.l_degree_min = l.degree_min;  r.l_degree_max = l.degree_max;
        r.p_common_min = p.common_min;  r.p_common_max = p.common_max;
        r.l_common_min = l.common_min;  r.l_common_max = l.common_max;
        return r;
    }

    auto infer_levi_order(const Graph & g) -> std::optional<PrimeModulus>
    {
        auto s = g.side_p_size();
        for (std::uint64_t q = 2 ; q * q + q + 1 <= s ; ++q)
            if (q * q + q + 1 == s && is_prime(q) && g.n() == 2 * s)
                return PrimeModulus(q);
        return std::nullopt;
    }
}
