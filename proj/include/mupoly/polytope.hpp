#pragma once

#include "mupoly/arith.hpp"
#include "mupoly/linalg.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace mupoly {

// Affine-lattice isomorphism aff(P) meet Z^N  ->  Z^d. `basis_cols` columns
// are a basis of the saturated direction lattice, so chart coordinates of
// every lattice point on the affine hull are integers and lattice geometry is
// preserved both ways.
struct Chart {
    IntVec base;      // an ambient vertex (lex-min); maps to the chart origin
    IntMat basis_cols; // N x d
    RatMat left_inv;   // d x N, left inverse of basis_cols over Q

    std::size_t ambient_dim() const { return base.size(); }
    std::size_t dim() const { return basis_cols.cols; }

    // Lattice point on the affine hull -> integer chart coordinates.
    IntVec to_chart(const IntVec& ambient) const;
    // Rational point -> chart coordinates, or nullopt when off the hull.
    std::optional<RatVec> to_chart_rat(const RatVec& ambient) const;
    IntVec to_ambient(const IntVec& chart_pt) const;
    RatVec to_ambient_rat(const RatVec& chart_pt) const;
};

// One facet inequality a . x <= b in chart coordinates, gcd(a, b) = 1.
struct Facet {
    IntVec a;
    Int b;
};

// Irredundant facet description of the chart image (full-dimensional).
struct HRep {
    std::vector<Facet> facets;
};

// The graded cone over P: generators are the lifted chart vertices (v, 1) and
// facet normals c satisfy <c, (x, n)> >= 0 exactly on the cone. A point (x, n)
// with n >= 1 lies in the cone iff x lies in the n-th dilation of P.
struct GradedConeRep {
    std::vector<IntVec> generators;
    std::vector<IntVec> facet_normals;
};

// Integral convex polytope, canonical: vertices only, lex-sorted, ambient
// coordinates. Chart and facet data are computed on construction; the object
// is immutable afterwards, so sharing across threads is safe.
class Polytope {
public:
    // Convex hull of arbitrary lattice points; non-extreme points dropped.
    static Polytope from_points(const std::vector<IntVec>& pts);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return chart_.dim(); }
    const std::vector<IntVec>& vertices() const { return vertices_; }
    const std::vector<IntVec>& chart_vertices() const { return chart_vertices_; }
    const Chart& chart() const { return chart_; }
    const HRep& hrep() const { return hrep_; }

    bool is_simplex() const { return vertices_.size() == dim() + 1; }

    bool contains(const RatVec& ambient_pt) const;
    // x in k*P, tested in chart coordinates with pure integer arithmetic.
    bool chart_contains_dilated(const IntVec& chart_pt, const Int& k) const;
    // strict version: x in the relative interior of k*P
    bool chart_interior_dilated(const IntVec& chart_pt, const Int& k) const;

    Polytope dilate(const Int& k) const;

    // Ambient coordinates of a chart point of the k-th dilation (the dilation
    // shares this polytope's chart basis, anchored at k times the base).
    IntVec chart_to_ambient_dilated(const IntVec& chart_pt, const Int& k) const;

    // Exact per-coordinate ranges of the chart image (attained at vertices).
    const IntVec& chart_min() const { return chart_min_; }
    const IntVec& chart_max() const { return chart_max_; }

    // Normalized volume of the chart image (d! times Euclidean volume).
    Int normalized_volume() const;

private:
    Polytope() = default;
    std::size_t ambient_dim_ = 0;
    std::vector<IntVec> vertices_;
    std::vector<IntVec> chart_vertices_;
    Chart chart_;
    HRep hrep_;
    IntVec chart_min_, chart_max_;
};

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

GradedConeRep graded_cone(const Polytope& p);

// Generators (in chart coordinates) of the cone of P at vertex v: {w - v}.
// v must be a chart vertex of P.
std::vector<IntVec> vertex_cone(const Polytope& p, const IntVec& chart_vertex);

// Double-description core: extreme rays of the dual cone
// {y : <g, y> >= 0 for all generators g}. Requires the generators to span
// R^dim (so the dual is pointed). Rays come back primitive and lex-sorted,
// each with the set of generators it is tight on.
struct DualRay {
    IntVec y;
    std::vector<std::size_t> tight; // indices into the generator list passed in
};
std::vector<DualRay> dual_extreme_rays(const std::vector<IntVec>& generators, std::size_t dim);

} // namespace mupoly
