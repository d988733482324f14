#include "mupoly/profile.hpp"

#include "mupoly/arith.hpp"
#include "mupoly/errors.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace mupoly {

// The peeling test is complete over a bounded level range: a peel failure at
// any level descends to an irreducible element of the kP-graded semigroup,
// and an irreducible element at level n splits off a proper sub-multiset of
// its degree decomposition whenever it has more than k parts (pigeonhole on
// prefix sums mod k), so n * k <= k * (max Hilbert-basis degree). Hence
// scanning levels up to min(d-1, basis degree bound) decides IDP exactly.
IdpResult is_idp(const Polytope& P, const Int& k, Budget& budget, int threads,
                 int basis_degree_bound) {
    if (k < 1) throw BadParameters("dilation factor must be positive");
    IdpResult res;
    int cap = static_cast<int>(P.dim()) - 1;
    if (basis_degree_bound >= 1 && basis_degree_bound < cap) cap = basis_degree_bound;
    if (cap < 2) return res;

    std::vector<IntVec> level_one = lattice_points(P, k, budget, threads);
    std::size_t hint = 0;  // most points peel off the same y as their neighbour
    for (int n = 2; n <= cap; ++n) {
        const Int rest = k * (n - 1);
        std::vector<IntVec> pts = lattice_points(P, k * n, budget, threads);
        for (const IntVec& x : pts) {
            bool peeled = false;
            for (std::size_t j = 0; j < level_one.size(); ++j) {
                std::size_t idx = (hint + j) % level_one.size();
                if (P.chart_contains_dilated(vec_sub(x, level_one[idx]), rest)) {
                    peeled = true;
                    hint = idx;
                    break;
                }
            }
            if (!peeled) {
                // points arrive level-ascending and lex-sorted, so the first
                // failure is the minimal witness
                res.idp = false;
                res.witness = GradedPoint{x, Int(n)};
                return res;
            }
        }
    }
    return res;
}

VeryAmpleTester::VeryAmpleTester(const Polytope& P, Budget& budget) : poly_(P) {
    const auto& verts = P.chart_vertices();
    cone_bases_.reserve(verts.size());
    for (const IntVec& v : verts)
        cone_bases_.push_back(hilbert_basis_pointed(vertex_cone(P, v), budget));
}

bool VeryAmpleTester::very_ample(const Int& k) const {
    if (k < 1) throw BadParameters("dilation factor must be positive");
    const auto& verts = poly_.chart_vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        IntVec kv = vec_scale(verts[i], k);
        for (const IntVec& h : cone_bases_[i])
            if (!poly_.chart_contains_dilated(vec_add(h, kv), k)) return false;
    }
    return true;
}

bool is_very_ample(const Polytope& P, const Int& k, Budget& budget) {
    return VeryAmpleTester(P, budget).very_ample(k);
}

int mu_va(const Polytope& P, Budget& budget, int known_mu_hilb, int threads) {
    int cap = known_mu_hilb >= 1 ? known_mu_hilb : mu_hilb(P, budget, threads);
    VeryAmpleTester tester(P, budget);
    for (int k = 1; k <= cap; ++k)
        if (tester.very_ample(Int(k))) return k;
    throw ConsistencyViolation("no very ample dilate within the Hilbert degree bound");
}

int mu_midp(const Polytope& P, Budget& budget, int threads, int basis_degree_bound) {
    const int kmax = std::max(1, static_cast<int>(P.dim()) - 1);
    for (int k = 1; k <= kmax; ++k)
        if (is_idp(P, Int(k), budget, threads, basis_degree_bound).idp) return k;
    throw ConsistencyViolation("no IDP dilate up to d-1");
}

int mu_idp(const Polytope& P, Budget& budget, int threads, int basis_degree_bound,
           int exact_mu_hole) {
    const std::size_t d = P.dim();
    if (d <= 2) return 1;
    const int kmax = static_cast<int>(d) - 1;
    // dilates at or above the maximal hole degree are IDP by the degree chain
    int highest_unknown = kmax;
    if (exact_mu_hole >= 1) highest_unknown = std::min(kmax, exact_mu_hole - 1);
    if (highest_unknown == kmax) {
        if (!is_idp(P, Int(kmax), budget, threads, basis_degree_bound).idp)
            throw ConsistencyViolation("peeling test fails at dilation d-1");
        --highest_unknown;
    }
    int k = highest_unknown;
    while (k >= 1 && is_idp(P, Int(k), budget, threads, basis_degree_bound).idp) --k;
    return k + 1;
}

void validate_profile(const MuProfile& mu) {
    auto bad = [](const char* msg) {
        throw ConsistencyViolation(std::string("mu profile: ") + msg);
    };
    if (mu.va < 1 || mu.midp < 1 || mu.idp < 1 || mu.hilb < 1 || mu.hole < 1 || mu.ehr < 1)
        bad("every invariant is at least 1");
    if (mu.d <= 1) {
        if (mu.va != 1 || mu.midp != 1 || mu.idp != 1 || mu.hilb != 1 || mu.hole != 1 ||
            mu.ehr != 1)
            bad("all invariants equal 1 in dimension <= 1");
        return;
    }
    if (!(mu.va <= mu.midp && mu.midp <= mu.idp && mu.idp <= mu.hole && mu.hole <= mu.ehr &&
          mu.ehr <= mu.d))
        bad("chain va <= midp <= idp <= hole <= ehr <= d violated");
    if (!(mu.va <= mu.hilb && mu.hilb <= mu.hole && mu.hole <= mu.d - 1))
        bad("chain va <= hilb <= hole <= d-1 violated");
}

RestrictionReport check_theorem_restrictions(const MuProfile& mu) {
    RestrictionReport rep;
    auto fail = [&rep](std::string msg) {
        rep.pass = false;
        rep.violations.push_back(std::move(msg));
    };
    const int d = mu.d;
    if (d <= 1) return rep;
    if (2 * mu.midp >= d - 1 && mu.idp != mu.midp)
        fail("(a) midp >= (d-1)/2 forces idp == midp");
    if (2 * mu.midp <= d - 1 && 2 * mu.idp > d - 3 + 2 * mu.midp)
        fail("(b) midp <= (d-1)/2 forces idp <= (d-3)/2 + midp");
    if (mu.idp == mu.midp + 1)
        fail("(c) idp == midp + 1 is impossible");
    if (mu.idp == d - 1 && mu.midp != d - 1)
        fail("(d) idp == d-1 forces midp == d-1");
    if ((mu.midp == 1 || mu.hilb == 1) &&
        !(mu.va == 1 && mu.midp == 1 && mu.idp == 1 && mu.hilb == 1 && mu.hole == 1))
        fail("(e) midp == 1 or hilb == 1 forces va, midp, idp, hilb, hole all 1");
    return rep;
}

ProfileReport mu_profile(const Polytope& P, const RunConfig& cfg) {
    ProfileReport rep;
    const std::size_t d = P.dim();
    rep.mu.d = static_cast<int>(d);

    {
        Budget b = cfg.budget.fresh();
        rep.delta = delta_vector(P, b, cfg.threads);
        rep.mu.ehr = mu_ehr(rep.delta);
    }
    {
        Budget b = cfg.budget.fresh();
        rep.hilbert_basis = hilbert_basis_graded(P, b, cfg.threads);
        rep.mu.hilb = mu_hilb_from_basis(rep.hilbert_basis);
    }
    {
        Budget b = cfg.budget.fresh();
        try {
            rep.holes = box_points(P, b);
            rep.mu.hole = mu_hole_from_holes(rep.holes);
            rep.hole_exact = true;
        } catch (const BudgetExceeded&) {
            rep.hole_exact = false;
            rep.holes.clear();
        }
    }
    {
        Budget b = cfg.budget.fresh();
        rep.mu.va = mu_va(P, b, rep.mu.hilb, cfg.threads);
    }

    const int kmax = std::max(1, static_cast<int>(d) - 1);
    rep.idp_by_k.assign(static_cast<std::size_t>(kmax), Tri::Unknown);
    const int hole_cap = rep.hole_exact ? rep.mu.hole : -1;
    auto check_k = [&](int k) {
        Budget b = cfg.budget.fresh();
        IdpResult r = is_idp(P, Int(k), b, cfg.threads, rep.mu.hilb);
        rep.idp_by_k[static_cast<std::size_t>(k) - 1] = r.idp ? Tri::True : Tri::False;
        if (!r.idp && r.witness) rep.idp_witnesses.emplace(k, *r.witness);
        return r.idp;
    };

    int midp = -1;
    for (int k = 1; k <= kmax && midp < 0; ++k) {
        bool ok;
        if (hole_cap >= 1 && k >= hole_cap) {
            // IDP by the degree chain; no scan needed
            ok = true;
            rep.idp_by_k[static_cast<std::size_t>(k) - 1] = Tri::True;
        } else {
            ok = check_k(k);
        }
        if (ok) midp = k;
    }
    if (midp < 0) throw ConsistencyViolation("no IDP dilate up to d-1");
    rep.mu.midp = midp;

    int highest_unknown = kmax;
    if (hole_cap >= 1) highest_unknown = std::min(kmax, hole_cap - 1);
    for (int k = highest_unknown + 1; k <= kmax; ++k)
        rep.idp_by_k[static_cast<std::size_t>(k) - 1] = Tri::True;
    if (highest_unknown == kmax) {
        if (!check_k(kmax)) throw ConsistencyViolation("peeling test fails at dilation d-1");
        --highest_unknown;
    }
    int k = highest_unknown;
    while (k >= midp) {
        Tri known = rep.idp_by_k[static_cast<std::size_t>(k) - 1];
        bool ok = known == Tri::Unknown ? check_k(k) : known == Tri::True;
        if (!ok) break;
        --k;
    }
    rep.mu.idp = k + 1;

    if (rep.hole_exact) {
        rep.hole_lower = rep.hole_upper = rep.mu.hole;
        validate_profile(rep.mu);
        RestrictionReport rr = check_theorem_restrictions(rep.mu);
        if (!rr.pass)
            throw ConsistencyViolation("theorem restrictions violated: " + rr.violations.front());
    } else {
        rep.hole_lower = std::max(rep.mu.idp, rep.mu.hilb);
        rep.hole_upper = std::min(kmax, rep.mu.ehr);
        if (rep.hole_lower > rep.hole_upper)
            throw ConsistencyViolation("hole bracket is empty");
        rep.mu.hole = rep.hole_upper;
        validate_profile(rep.mu);
        // the hole-free restrictions must still hold; rule (e) is checked
        // against the bracket's lower end, which the theorem pins when it
        // applies
        MuProfile probe = rep.mu;
        probe.hole = rep.hole_lower;
        RestrictionReport rr = check_theorem_restrictions(probe);
        if (!rr.pass)
            throw ConsistencyViolation("theorem restrictions violated: " + rr.violations.front());
    }
    return rep;
}

LemmaSplit lemma_decompose(const IntVec& alpha, const Int& n, const Polytope& P, Budget& budget) {
    const std::size_t d = P.dim();
    const Int floor_level = d >= 1 ? Int(d - 1) : Int(0);
    if (n < floor_level) throw BadParameters("dilation level must be at least d-1");
    if (alpha.size() != d) throw DimensionMismatch("point length differs from polytope dimension");
    if (!P.chart_contains_dilated(alpha, n)) throw BadParameters("point is not in the dilate");

    std::vector<IntVec> degree_one = lattice_points(P, Int(1), budget);
    LemmaSplit out;
    std::vector<IntVec> parts;
    std::function<bool(const IntVec&, const Int&)> peel = [&](const IntVec& x,
                                                              const Int& level) -> bool {
        budget.charge_point();
        if (level == floor_level) {
            out.base = x;
            return true;
        }
        for (const IntVec& y : degree_one) {
            IntVec z = vec_sub(x, y);
            if (!P.chart_contains_dilated(z, level - 1)) continue;
            parts.push_back(y);
            if (peel(z, level - 1)) return true;
            parts.pop_back();
        }
        return false;
    };
    if (!peel(alpha, n))
        throw SearchFailed("no split into a (d-1)-dilate point plus lattice points");
    out.parts = std::move(parts);

    IntVec total = out.base;
    for (const IntVec& y : out.parts) total = vec_add(total, y);
    if (total != alpha) throw ConsistencyViolation("lemma split does not re-sum to the input");
    return out;
}

}  // namespace mupoly
