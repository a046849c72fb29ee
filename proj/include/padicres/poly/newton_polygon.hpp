#pragma once

#include <cstddef>
#include <vector>

#include "padicres/poly/integer.hpp"
#include "padicres/poly/uni_poly.hpp"

namespace padicres::poly {

/// Lower convex hull of {(i, v_p(a_i)) : a_i != 0}.
///
/// Sign convention: a segment of slope -w accounts for exactly `length` roots
/// (in C_p, with multiplicity) of p-adic valuation w. Zero roots (a_0 = 0)
/// are not represented; the lengths sum to deg f minus the lowest index with
/// a nonzero coefficient.
struct NewtonPolygon {
    struct Vertex {
        std::size_t index;
        unsigned long valuation;
    };
    struct Segment {
        Rational slope;
        std::size_t length;
    };

    std::vector<Vertex> vertices;
    std::vector<Segment> segments;

    /// Number of roots with valuation strictly greater than w.
    std::size_t roots_with_valuation_above(const Rational& w) const;
};

NewtonPolygon newton_polygon(const IntPoly& f, Prime p);

} // namespace padicres::poly
