#pragma once

#include "mupoly/edge_polytope.hpp"
#include "mupoly/ehrhart.hpp"
#include "mupoly/polytope.hpp"
#include "mupoly/profile.hpp"
#include "mupoly/semigroup.hpp"

#include <string>
#include <vector>

namespace mupoly {

// JSON formats. Integers beyond 64 bits serialize as decimal strings; input
// accepts either plain integers or decimal strings everywhere a coordinate
// appears (fractional numbers are rejected rather than rounded, so oversized
// unquoted literals cannot silently lose precision).
//
//   polytope  {"ambient_dim": N, "vertices": [[x1, ..., xN], ...]}
//   graph     {"vertices": d, "edges": [[i, j], ...]}   (1-based labels)
//
// Malformed documents throw BadInput; semantic errors propagate from the
// constructors (EmptyInput, BadParameters, Disconnected, ...).
Polytope read_polytope_json(const std::string& text);
SimpleGraph read_graph_json(const std::string& text);
std::string write_polytope_json(const Polytope& P);
std::string write_graph_json(const SimpleGraph& g);

// Point lists in ambient coordinates: JSON array of arrays, or one point per
// TSV line with tab-separated coordinates.
std::string write_points_json(const std::vector<IntVec>& ambient_points);
std::string write_points_tsv(const std::vector<IntVec>& ambient_points);

// {"d": ..., "delta": [...], "normalized_volume": ..., "mu_ehr": ...}
std::string write_delta_json(const DeltaVector& dv);
std::string write_delta_tsv(const DeltaVector& dv);

// Graded points (Hilbert bases): [{"point": [...], "degree": n}, ...] with
// ambient coordinates of the degree-th dilation. TSV rows are
// degree<TAB>x1<TAB>...<TAB>xN.
std::string write_graded_json(const Polytope& P, const std::vector<GradedPoint>& pts);
std::string write_graded_tsv(const Polytope& P, const std::vector<GradedPoint>& pts);

// Holes additionally carry the empty simplex that exhibited them.
std::string write_holes_json(const Polytope& P, const std::vector<Hole>& holes);
std::string write_holes_tsv(const Polytope& P, const std::vector<Hole>& holes);

// One dilation test: {"k": ..., "idp": bool, "witness"?: {...}} /
// {"k": ..., "very_ample": bool}.
std::string write_idp_json(const Polytope& P, const Int& k, const IdpResult& r);
std::string write_idp_tsv(const Polytope& P, const Int& k, const IdpResult& r);
std::string write_va_json(const Int& k, bool very_ample);
std::string write_va_tsv(const Int& k, bool very_ample);

// Full profile: {"d", "mu": {"va","midp","idp","hilb","hole","ehr"}, "delta",
// "hilbert_basis", "holes", "idp_by_k", "witnesses", "hole_exact"}. When the
// hole stage was bracketed, "mu"."hole" is {"lower": ..., "upper": ...} and
// "hole_exact" is false. idp_by_k entries are true/false/null (null =
// undetermined within budget); "witnesses" maps each k shown non-IDP to the
// non-decomposable point certifying it.
std::string write_profile_json(const Polytope& P, const ProfileReport& r);
std::string write_profile_tsv(const ProfileReport& r);

// Graph profile: closed forms as integers, generic thresholds as integers
// when exact and {"lower","upper"} objects when bracketed.
std::string write_graph_profile_json(const GraphProfile& r);
std::string write_graph_profile_tsv(const GraphProfile& r);

} // namespace mupoly
