#include "sympcheck/report.hpp"

namespace sympcheck {

using nlohmann::json;

json rational_json(const Rational& q)
{
    if (q.get_den() == 1 && q.get_num().fits_slong_p())
        return q.get_num().get_si();
    return q.get_str();
}

json witness_json(const std::optional<SymplecticWitness>& w)
{
    if (!w)
        return nullptr;
    return json{{"alpha", w->alpha}, {"basis", w->basis}, {"power_value", rational_json(w->power_value)}};
}

json trace_json(const std::vector<TraceEntry>& trace)
{
    json out = json::array();
    for (const auto& e : trace)
        out.push_back({{"rule", e.rule}, {"citation", e.citation}, {"inputs", e.inputs}, {"output", e.output}});
    return out;
}

json report_json(const ManifoldReport& r, const std::string& input)
{
    const auto& a = r.algebra;
    json out;
    out["input"] = input;
    out["name"] = r.descriptor.name;
    out["dimension"] = r.descriptor.dim;
    out["betti"] = betti(r.descriptor.cohomology);
    out["chi"] = a.chi;
    out["sigma_abs"] = a.sigma_abs ? json(*a.sigma_abs) : json(nullptr);
    out["duality"] = a.duality ? "pass" : "fail";
    out["symplectic_witness"] = witness_json(a.symplectic);
    out["hirzebruch"] = to_string(a.hirzebruch);
    out["unimodality"] = to_string(a.unimodality.outcome);
    out["unimodality_violation"] =
        a.unimodality.violation ? json{a.unimodality.violation->first, a.unimodality.violation->second} : json(nullptr);
    out["spin_c"] = to_string(r.descriptor.spin_c);
    out["simply_connected"] = to_string(r.descriptor.simply_connected);
    out["rational_homology_sphere"] = r.descriptor.q_homology_sphere;
    out["verdict"] = to_string(r.verdict);
    out["justification"] = r.justification;
    out["trace"] = trace_json(r.trace);
    return out;
}

json dim4_json(const dim4::Dim4Report& r, const std::string& input)
{
    const auto& l = r.total;
    json out;
    out["input"] = input;
    out["b1"] = l.b1();
    out["b2"] = l.b2();
    out["b2_plus"] = l.b2_plus();
    out["b2_minus"] = l.b2_minus();
    out["chi"] = l.euler_characteristic();
    out["sigma"] = l.signature();
    out["wu_target"] = r.wu.target;
    out["wu_status"] = to_string(r.wu.status);
    out["search_radius"] = l.definite() ? json(nullptr) : json(r.wu.radius);
    out["witness"] = r.wu.solution ? json(r.wu.solution->c) : json(nullptr);
    out["almost_complex"] = to_string(r.almost_complex);
    out["symplectic"] = r.symplectic == dim4::Ternary::No ? "no" : "unknown";
    out["seiberg_witten"] = to_string(r.sw.verdict);
    out["orientation_scope"] = "verdicts refer to the orientation in which the given form is the intersection form";
    out["trace"] = r.trace;
    return out;
}

}  // namespace sympcheck
