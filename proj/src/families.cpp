#include "mupoly/families.hpp"

#include "mupoly/errors.hpp"

namespace mupoly {

namespace {

IntVec unit(std::size_t n, std::size_t i) {
    IntVec v(n, Int(0));
    v[i] = 1;
    return v;
}

}  // namespace

Polytope berkeley(int d, int j) {
    if (d < 3) throw BadParameters("berkeley requires d >= 3");
    if (j < 2 || j > d - 1) throw BadParameters("berkeley requires 2 <= j <= d-1");
    const std::size_t n = static_cast<std::size_t>(d);
    std::vector<IntVec> pts;
    pts.push_back(IntVec(n, Int(0)));
    for (std::size_t i = 0; i + 1 < n; ++i) pts.push_back(unit(n, i));
    IntVec tail(n, Int(0));
    for (int i = 0; i < j; ++i) tail[static_cast<std::size_t>(i)] = 1;
    tail[n - 1] = j;
    pts.push_back(tail);
    return Polytope::from_points(pts);
}

Polytope example_2_4(int m) {
    if (m < 4) throw BadParameters("example_2_4 requires m >= 4");
    const std::size_t n = static_cast<std::size_t>(2 * m - 1);
    std::vector<IntVec> pts;
    pts.push_back(IntVec(n, Int(0)));
    for (std::size_t i = 0; i + 1 < n; ++i) pts.push_back(unit(n, i));
    IntVec tail(n, Int(m - 1));
    tail[n - 1] = m;
    pts.push_back(tail);
    return Polytope::from_points(pts);
}

Polytope example_2_5(int d) {
    if (d < 3) throw BadParameters("example_2_5 requires d >= 3");
    const std::size_t n = static_cast<std::size_t>(d);
    std::vector<IntVec> pts;
    pts.push_back(IntVec(n, Int(0)));
    for (std::size_t i = 0; i + 1 < n; ++i) pts.push_back(unit(n, i));
    IntVec tail(n, Int(d + 1));
    tail[n - 1] = d + 2;
    pts.push_back(tail);
    return Polytope::from_points(pts);
}

Polytope example_2_6() {
    const std::size_t n = 13;
    std::vector<IntVec> pts;
    pts.push_back(IntVec(n, Int(0)));
    // first block: coordinates 0..6, the example_2_4(4) simplex
    for (std::size_t i = 0; i < 6; ++i) pts.push_back(unit(n, i));
    IntVec a(n, Int(0));
    for (std::size_t i = 0; i < 6; ++i) a[i] = 3;
    a[6] = 4;
    pts.push_back(a);
    // second block: coordinates 7..12, tail (1,1,1,1,1,2)
    for (std::size_t i = 7; i < 12; ++i) pts.push_back(unit(n, i));
    IntVec b(n, Int(0));
    for (std::size_t i = 7; i < 12; ++i) b[i] = 1;
    b[12] = 2;
    pts.push_back(b);
    return Polytope::from_points(pts);
}

Polytope boston(int d) {
    if (d < 4) throw BadParameters("boston requires d >= 4");
    const std::size_t n = static_cast<std::size_t>(d);
    const Int M = Int(d) * (d - 2) + 1;
    std::vector<IntVec> base;
    base.push_back(IntVec(n, Int(0)));
    for (std::size_t i = 0; i + 1 < n; ++i) base.push_back(unit(n, i));
    IntVec vd(n, Int(1));
    vd[n - 1] = M;
    base.push_back(vd);
    std::vector<IntVec> pts = base;
    for (IntVec v : base) {
        v[n - 1] += 1;
        pts.push_back(std::move(v));
    }
    return Polytope::from_points(pts);
}

std::pair<Polytope, Polytope> minkowski_pair() {
    std::vector<IntVec> tri = {{Int(0), Int(0), Int(0)},
                               {Int(1), Int(0), Int(0)},
                               {Int(0), Int(1), Int(0)}};
    std::vector<IntVec> seg = {{Int(0), Int(0), Int(0)}, {Int(1), Int(1), Int(3)}};
    return {Polytope::from_points(tri), Polytope::from_points(seg)};
}

}  // namespace mupoly
