#include "padicres/poly/newton_polygon.hpp"

#include "padicres/error.hpp"

namespace padicres::poly {

namespace {

// Cross product sign of (b - a) x (c - a); <= 0 means b is on or above the
// segment a-c and must be dropped from the lower hull.
bool keeps_middle(const NewtonPolygon::Vertex& a, const NewtonPolygon::Vertex& b, const NewtonPolygon::Vertex& c)
{
    const Integer dx1 = Integer(static_cast<unsigned long>(b.index - a.index));
    const Integer dy1 = Integer(b.valuation) - Integer(a.valuation);
    const Integer dx2 = Integer(static_cast<unsigned long>(c.index - a.index));
    const Integer dy2 = Integer(c.valuation) - Integer(a.valuation);
    return dx1 * dy2 - dy1 * dx2 > 0;
}

} // namespace

std::size_t NewtonPolygon::roots_with_valuation_above(const Rational& w) const
{
    std::size_t n = 0;
    for (const auto& s : segments)
        if (-s.slope > w)
            n += s.length;
    return n;
}

NewtonPolygon newton_polygon(const IntPoly& f, Prime p)
{
    if (f.is_zero())
        throw DomainError("Newton polygon of the zero polynomial");
    NewtonPolygon np;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        Integer c = f.coeffs()[i];
        if (c == 0)
            continue;
        const NewtonPolygon::Vertex v{i, remove_factor(c, p)};
        while (np.vertices.size() >= 2 && !keeps_middle(np.vertices[np.vertices.size() - 2], np.vertices.back(), v))
            np.vertices.pop_back();
        np.vertices.push_back(v);
    }
    for (std::size_t k = 1; k < np.vertices.size(); ++k) {
        const auto& a = np.vertices[k - 1];
        const auto& b = np.vertices[k];
        Rational slope(Integer(b.valuation) - Integer(a.valuation), Integer(static_cast<unsigned long>(b.index - a.index)));
        slope.canonicalize();
        np.segments.push_back({slope, b.index - a.index});
    }
    return np;
}

} // namespace padicres::poly
