#pragma once

#include <icf/graph.hpp>

#include <cstdint>
#include <optional>

namespace icf
{
    class PrimeModulus
    {
        public:
            /// Throws InvalidArgument unless q is prime.
            explicit PrimeModulus(std::uint64_t q);

            auto value() const -> std::uint64_t { return _q; }

            auto operator==(const PrimeModulus &) const -> bool = default;

        private:
            std::uint64_t _q;
    };

    auto is_prime(std::uint64_t q) -> bool;

    /// Arithmetic in Z_q. Operands must already be reduced.
    auto field_add(PrimeModulus q, std::uint64_t a, std::uint64_t b) -> std::uint64_t;
    auto field_mul(PrimeModulus q, std::uint64_t a, std::uint64_t b) -> std::uint64_t;

    /**
     * Vertex numbering of the point-line incidence graph of the projective
     * plane over Z_q. All q^2 + q + 1 points come first, then all lines.
     *
     *   affine point (x, y)            x*q + y
     *   point at infinity of slope a   q^2 + a
     *   point at infinity of verticals q^2 + q
     *   line y = a*x + b               eta + a*q + b
     *   vertical line at x             eta + q^2 + x
     *   line at infinity               eta + q^2 + q
     *
     * where eta = q^2 + q + 1.
     */
    class LeviIndexing
    {
        public:
            explicit LeviIndexing(PrimeModulus q) : _q(q.value()) { }

            auto side_size() const -> std::uint64_t { return _q * _q + _q + 1; }
            auto vertex_count() const -> std::uint64_t { return 2 * side_size(); }

            auto point(std::uint64_t x, std::uint64_t y) const -> Vertex;
            auto slope_point(std::uint64_t a) const -> Vertex;
            auto vertical_point() const -> Vertex;
            auto line(std::uint64_t a, std::uint64_t b) const -> Vertex;
            auto vertical_line(std::uint64_t x) const -> Vertex;
            auto line_at_infinity() const -> Vertex;

        private:
            std::uint64_t _q;

            auto check(std::uint64_t r) const -> void;
    };

    /// The incidence graph, flagged bipartite with side_p_size = q^2 + q + 1.
    auto gen_levi(PrimeModulus q) -> Graph;

    struct LeviPropertyReport
    {
        bool n_ok = false;
        bool p_degree_ok = false;
        bool p_common_ok = false;
        bool l_degree_ok = false;
        bool l_common_ok = false;

        std::uint64_t expected_n = 0;
        std::uint64_t observed_n = 0;
        std::uint64_t expected_degree = 0;
        // Observed ranges; min > max means the side was empty.
        std::uint64_t p_degree_min = 0, p_degree_max = 0;
        std::uint64_t l_degree_min = 0, l_degree_max = 0;
        std::uint64_t p_common_min = 0, p_common_max = 0;
        std::uint64_t l_common_min = 0, l_common_max = 0;

        auto all_ok() const -> bool
        {
            return n_ok && p_degree_ok && p_common_ok && l_degree_ok && l_common_ok;
        }
    };

    /// Exhaustive check that g is a (q^2+q+1, q+1, 1)-graph with sides split at
    /// g.side_p_size(). Failures are reported through the flags, never thrown.
    auto verify_levi_properties(const Graph & g, PrimeModulus q) -> LeviPropertyReport;

    /// The prime q with q^2 + q + 1 = side_p_size, if there is one.
    auto infer_levi_order(const Graph & g) -> std::optional<PrimeModulus>;
}
