#include "mupoly/io.hpp"

#include "mupoly/errors.hpp"

#include <json.hpp>

#include <cctype>
#include <limits>
#include <sstream>

namespace mupoly {

namespace {

using nlohmann::json;

json to_json(const Int& x) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (x >= lo && x <= hi) return x.convert_to<long long>();
    return to_string(x);
}

Int parse_int(const json& v, const char* what) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_number_unsigned()) return Int(v.get<unsigned long long>());
    if (v.is_string()) {
        const std::string& s = v.get_ref<const std::string&>();
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size())
            throw BadInput(std::string(what) + ": empty integer string");
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw BadInput(std::string(what) + ": not a decimal integer: " + s);
        return Int(s);
    }
    throw BadInput(std::string(what) + ": expected an integer or a decimal string");
}

json parse_document(const std::string& text) {
    json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) throw BadInput("malformed JSON document");
    return doc;
}

const json& field(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw BadInput(std::string("missing field \"") + key + "\"");
    return *it;
}

json vec_to_json(const IntVec& v) {
    json row = json::array();
    for (const Int& x : v) row.push_back(to_json(x));
    return row;
}

json graded_to_json(const Polytope& P, const GradedPoint& g) {
    json o;
    o["point"] = vec_to_json(P.chart_to_ambient_dilated(g.x, g.degree));
    o["degree"] = to_json(g.degree);
    return o;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

void tsv_row(std::ostringstream& out, const IntVec& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << '\t';
        out << to_string(v[i]);
    }
    out << '\n';
}

json bracket(int lower, int upper) {
    json o;
    o["lower"] = lower;
    o["upper"] = upper;
    return o;
}

} // namespace

Polytope read_polytope_json(const std::string& text) {
    json doc = parse_document(text);
    if (!doc.is_object()) throw BadInput("polytope document must be an object");
    const json& dim = field(doc, "ambient_dim");
    Int n = parse_int(dim, "ambient_dim");
    if (n < 0 || n > 4096) throw BadInput("ambient_dim out of range");
    std::size_t N = n.convert_to<std::size_t>();
    const json& rows = field(doc, "vertices");
    if (!rows.is_array()) throw BadInput("\"vertices\" must be an array");
    std::vector<IntVec> pts;
    for (const json& row : rows) {
        if (!row.is_array() || row.size() != N)
            throw BadInput("each vertex needs exactly ambient_dim coordinates");
        IntVec p;
        p.reserve(N);
        for (const json& c : row) p.push_back(parse_int(c, "coordinate"));
        pts.push_back(std::move(p));
    }
    return Polytope::from_points(pts);
}

SimpleGraph read_graph_json(const std::string& text) {
    json doc = parse_document(text);
    if (!doc.is_object()) throw BadInput("graph document must be an object");
    Int n = parse_int(field(doc, "vertices"), "vertices");
    if (n < 1 || n > 1000000) throw BadInput("vertex count out of range");
    const json& rows = field(doc, "edges");
    if (!rows.is_array()) throw BadInput("\"edges\" must be an array");
    std::vector<std::pair<int, int>> edges;
    for (const json& row : rows) {
        if (!row.is_array() || row.size() != 2)
            throw BadInput("each edge needs exactly two endpoints");
        Int u = parse_int(row[0], "edge endpoint");
        Int v = parse_int(row[1], "edge endpoint");
        if (u < 1 || u > n || v < 1 || v > n) throw BadInput("edge endpoint out of range");
        edges.emplace_back(u.convert_to<int>(), v.convert_to<int>());
    }
    return SimpleGraph::from_edges(n.convert_to<int>(), std::move(edges));
}

std::string write_polytope_json(const Polytope& P) {
    json doc;
    doc["ambient_dim"] = P.ambient_dim();
    json rows = json::array();
    for (const IntVec& v : P.vertices()) rows.push_back(vec_to_json(v));
    doc["vertices"] = rows;
    return dump(doc);
}

std::string write_graph_json(const SimpleGraph& g) {
    json doc;
    doc["vertices"] = g.vertex_count;
    json rows = json::array();
    for (const auto& [u, v] : g.edges) rows.push_back(json::array({u, v}));
    doc["edges"] = rows;
    return dump(doc);
}

std::string write_points_json(const std::vector<IntVec>& ambient_points) {
    json rows = json::array();
    for (const IntVec& v : ambient_points) rows.push_back(vec_to_json(v));
    return dump(rows);
}

std::string write_points_tsv(const std::vector<IntVec>& ambient_points) {
    std::ostringstream out;
    for (const IntVec& v : ambient_points) tsv_row(out, v);
    return out.str();
}

std::string write_delta_json(const DeltaVector& dv) {
    json doc;
    doc["d"] = dv.delta.empty() ? std::size_t(0) : dv.delta.size() - 1;
    json row = json::array();
    for (const Int& x : dv.delta) row.push_back(to_json(x));
    doc["delta"] = row;
    doc["normalized_volume"] = to_json(dv.volume());
    doc["mu_ehr"] = mu_ehr(dv);
    return dump(doc);
}

std::string write_delta_tsv(const DeltaVector& dv) {
    std::ostringstream out;
    out << "delta";
    for (const Int& x : dv.delta) out << '\t' << to_string(x);
    out << '\n';
    out << "normalized_volume\t" << to_string(dv.volume()) << '\n';
    out << "mu_ehr\t" << mu_ehr(dv) << '\n';
    return out.str();
}

std::string write_graded_json(const Polytope& P, const std::vector<GradedPoint>& pts) {
    json rows = json::array();
    for (const GradedPoint& g : pts) rows.push_back(graded_to_json(P, g));
    return dump(rows);
}

std::string write_graded_tsv(const Polytope& P, const std::vector<GradedPoint>& pts) {
    std::ostringstream out;
    for (const GradedPoint& g : pts) {
        out << to_string(g.degree);
        for (const Int& x : P.chart_to_ambient_dilated(g.x, g.degree)) out << '\t' << to_string(x);
        out << '\n';
    }
    return out.str();
}

std::string write_holes_json(const Polytope& P, const std::vector<Hole>& holes) {
    json rows = json::array();
    for (const Hole& h : holes) {
        json o = graded_to_json(P, h.point);
        json cell = json::array();
        for (const IntVec& v : h.witness_simplex)
            cell.push_back(vec_to_json(P.chart_to_ambient_dilated(v, Int(1))));
        o["witness_simplex"] = cell;
        rows.push_back(std::move(o));
    }
    return dump(rows);
}

std::string write_holes_tsv(const Polytope& P, const std::vector<Hole>& holes) {
    std::vector<GradedPoint> pts;
    for (const Hole& h : holes) pts.push_back(h.point);
    return write_graded_tsv(P, pts);
}

std::string write_idp_json(const Polytope& P, const Int& k, const IdpResult& r) {
    json doc;
    doc["k"] = to_json(k);
    doc["idp"] = r.idp;
    if (r.witness) {
        json w;
        w["point"] = vec_to_json(P.chart_to_ambient_dilated(r.witness->x, k * r.witness->degree));
        w["level"] = to_json(r.witness->degree);
        doc["witness"] = w;
    }
    return dump(doc);
}

std::string write_idp_tsv(const Polytope& P, const Int& k, const IdpResult& r) {
    std::ostringstream out;
    out << "k\t" << to_string(k) << '\n';
    out << "idp\t" << (r.idp ? "true" : "false") << '\n';
    if (r.witness) {
        out << "witness_level\t" << to_string(r.witness->degree) << '\n';
        out << "witness";
        for (const Int& x : P.chart_to_ambient_dilated(r.witness->x, k * r.witness->degree))
            out << '\t' << to_string(x);
        out << '\n';
    }
    return out.str();
}

std::string write_va_json(const Int& k, bool very_ample) {
    json doc;
    doc["k"] = to_json(k);
    doc["very_ample"] = very_ample;
    return dump(doc);
}

std::string write_va_tsv(const Int& k, bool very_ample) {
    std::ostringstream out;
    out << "k\t" << to_string(k) << '\n';
    out << "very_ample\t" << (very_ample ? "true" : "false") << '\n';
    return out.str();
}

std::string write_profile_json(const Polytope& P, const ProfileReport& r) {
    json doc;
    doc["d"] = r.mu.d;
    json mu;
    mu["va"] = r.mu.va;
    mu["midp"] = r.mu.midp;
    mu["idp"] = r.mu.idp;
    mu["hilb"] = r.mu.hilb;
    mu["hole"] = r.hole_exact ? json(r.mu.hole) : bracket(r.hole_lower, r.hole_upper);
    mu["ehr"] = r.mu.ehr;
    doc["mu"] = mu;
    doc["hole_exact"] = r.hole_exact;
    json delta = json::array();
    for (const Int& x : r.delta.delta) delta.push_back(to_json(x));
    doc["delta"] = delta;
    json basis = json::array();
    for (const GradedPoint& g : r.hilbert_basis) basis.push_back(graded_to_json(P, g));
    doc["hilbert_basis"] = basis;
    json holes = json::array();
    for (const Hole& h : r.holes) {
        json o = graded_to_json(P, h.point);
        json cell = json::array();
        for (const IntVec& v : h.witness_simplex)
            cell.push_back(vec_to_json(P.chart_to_ambient_dilated(v, Int(1))));
        o["witness_simplex"] = cell;
        holes.push_back(std::move(o));
    }
    doc["holes"] = holes;
    json by_k = json::array();
    for (Tri t : r.idp_by_k) {
        if (t == Tri::Unknown)
            by_k.push_back(nullptr);
        else
            by_k.push_back(t == Tri::True);
    }
    doc["idp_by_k"] = by_k;
    json wit = json::object();
    for (const auto& [k, w] : r.idp_witnesses) {
        json o;
        o["point"] = vec_to_json(P.chart_to_ambient_dilated(w.x, Int(k) * w.degree));
        o["level"] = to_json(w.degree);
        wit[std::to_string(k)] = o;
    }
    doc["witnesses"] = wit;
    return dump(doc);
}

std::string write_profile_tsv(const ProfileReport& r) {
    std::ostringstream out;
    out << "d\t" << r.mu.d << '\n';
    out << "va\t" << r.mu.va << '\n';
    out << "midp\t" << r.mu.midp << '\n';
    out << "idp\t" << r.mu.idp << '\n';
    out << "hilb\t" << r.mu.hilb << '\n';
    if (r.hole_exact) {
        out << "hole\t" << r.mu.hole << '\n';
    } else {
        out << "hole_lower\t" << r.hole_lower << '\n';
        out << "hole_upper\t" << r.hole_upper << '\n';
    }
    out << "ehr\t" << r.mu.ehr << '\n';
    return out.str();
}

std::string write_graph_profile_json(const GraphProfile& r) {
    json doc;
    doc["va"] = r.va;
    doc["hilb"] = r.hilb;
    doc["hole"] = r.hole;
    doc["midp"] = r.midp_exact ? json(r.midp_lower) : bracket(r.midp_lower, r.midp_upper);
    doc["idp"] = r.idp_exact ? json(r.idp_lower) : bracket(r.idp_lower, r.idp_upper);
    json cycles = json::array();
    for (const OddCycle& c : r.cycles) cycles.push_back(c.vertices);
    doc["minimal_odd_cycles"] = cycles;
    json pairs = json::array();
    for (const ExceptionalPair& p : r.pairs) {
        json o;
        o["first"] = p.first.vertices;
        o["second"] = p.second.vertices;
        o["m"] = p.m;
        pairs.push_back(std::move(o));
    }
    doc["exceptional_pairs"] = pairs;
    return dump(doc);
}

std::string write_graph_profile_tsv(const GraphProfile& r) {
    std::ostringstream out;
    out << "va\t" << r.va << '\n';
    out << "hilb\t" << r.hilb << '\n';
    out << "hole\t" << r.hole << '\n';
    if (r.midp_exact) {
        out << "midp\t" << r.midp_lower << '\n';
    } else {
        out << "midp_lower\t" << r.midp_lower << '\n';
        out << "midp_upper\t" << r.midp_upper << '\n';
    }
    if (r.idp_exact) {
        out << "idp\t" << r.idp_lower << '\n';
    } else {
        out << "idp_lower\t" << r.idp_lower << '\n';
        out << "idp_upper\t" << r.idp_upper << '\n';
    }
    return out.str();
}

} // namespace mupoly
