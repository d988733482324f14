#pragma once

#include "mupoly/budget.hpp"
#include "mupoly/ehrhart.hpp"
#include "mupoly/enumerate.hpp"
#include "mupoly/polytope.hpp"
#include "mupoly/semigroup.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mupoly {

// Result of the one-step peeling test for a dilate kP. When the dilate fails
// to be IDP, `witness` holds the minimal counterexample (smallest level n,
// then lex-smallest chart point x in (nk)P) such that no y in kP satisfies
// x - y in (n-1)(kP).
struct IdpResult {
    bool idp = true;
    std::optional<GradedPoint> witness;  // degree field = level n over kP
};

// Decides whether kP has the integer decomposition property. Levels
// n = 2 .. min(d-1, basis_degree_bound) are scanned; any valid upper bound on
// the maximal degree of a graded Hilbert-basis element of the cone over P may
// be supplied (the exact value, a hole-degree bound, ...). Defaults to d-1,
// which is always valid.
IdpResult is_idp(const Polytope& P, const Int& k, Budget& budget, int threads = 1,
                 int basis_degree_bound = -1);

// Very-ampleness tester with the per-vertex cone Hilbert bases computed once
// (they do not depend on k) and reused across dilation factors.
class VeryAmpleTester {
  public:
    VeryAmpleTester(const Polytope& P, Budget& budget);

    // True iff kP is very ample: for every vertex v, every Hilbert-basis
    // element h of the tangent cone at v satisfies h + kv in kP.
    bool very_ample(const Int& k) const;

  private:
    const Polytope& poly_;
    std::vector<std::vector<IntVec>> cone_bases_;  // parallel to chart_vertices()
};

bool is_very_ample(const Polytope& P, const Int& k, Budget& budget);

// Smallest k such that kP is very ample. The search is capped by mu_hilb
// (very ampleness holds there); pass the value if already known, otherwise it
// is computed first.
int mu_va(const Polytope& P, Budget& budget, int known_mu_hilb = -1, int threads = 1);

// Smallest k such that kP has IDP.
int mu_midp(const Polytope& P, Budget& budget, int threads = 1, int basis_degree_bound = -1);

// Smallest k such that nP has IDP for every n >= k. When the exact maximal
// hole degree is known, dilates k >= that value are accepted without scanning
// (they are IDP by the degree chain).
int mu_idp(const Polytope& P, Budget& budget, int threads = 1, int basis_degree_bound = -1,
           int exact_mu_hole = -1);

enum class Tri { False = 0, True = 1, Unknown = 2 };

// The six dilation invariants. Conventions: every field is >= 1; for d <= 1
// all six equal 1.
struct MuProfile {
    int d = 0;
    int va = 1;
    int midp = 1;
    int idp = 1;
    int hilb = 1;
    int hole = 1;
    int ehr = 1;
};

// Full computation record. When the hole enumeration exceeds its budget the
// profile is still returned with hole_exact = false and mu.hole clamped to
// the bracket [hole_lower, hole_upper]; every other invariant is exact.
struct ProfileReport {
    MuProfile mu;
    bool hole_exact = true;
    int hole_lower = 1;
    int hole_upper = 1;
    DeltaVector delta;
    std::vector<GradedPoint> hilbert_basis;
    std::vector<Hole> holes;                  // empty when !hole_exact
    std::vector<Tri> idp_by_k;                // [k-1] for k = 1 .. max(1, d-1)
    std::map<int, GradedPoint> idp_witnesses; // k -> minimal failure witness
};

// Checks the degree chains 1 <= va <= midp <= idp <= hole <= ehr <= d and
// va <= hilb <= hole <= d-1 (for d >= 2; for d <= 1 all six must equal 1).
// Throws ConsistencyViolation on failure.
void validate_profile(const MuProfile& mu);

// Structural restrictions relating the invariants; `pass` is false when a
// profile violates one, with human-readable reasons listed.
struct RestrictionReport {
    bool pass = true;
    std::vector<std::string> violations;
};

RestrictionReport check_theorem_restrictions(const MuProfile& mu);

// Computes everything: delta vector, graded Hilbert basis, hole set (with
// budget fallback to a bracket), very-ampleness threshold and the per-dilate
// IDP table. Stages meter against fresh copies of cfg.budget so one expensive
// stage cannot starve the others.
ProfileReport mu_profile(const Polytope& P, const RunConfig& cfg);

// Splitting produced by the decomposition lemma: for alpha in nP with
// n >= d-1, alpha = base + sum(parts) with base in (d-1)P and n-(d-1)
// lattice points of P.
struct LemmaSplit {
    IntVec base;
    std::vector<IntVec> parts;
};

LemmaSplit lemma_decompose(const IntVec& alpha, const Int& n, const Polytope& P, Budget& budget);

}  // namespace mupoly
