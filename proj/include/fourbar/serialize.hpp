#pragma once

#include <cstdio>
#include <string>

#include <json.hpp>

#include "analysis.hpp"
#include "identities.hpp"
#include "infinity.hpp"
#include "param.hpp"
#include "projreal.hpp"
#include "solve.hpp"
#include "trace.hpp"

namespace fourbar {

using nlohmann::json;

inline json to_json(const ProjReal& p) { return {{"num", p.num}, {"den", p.den}}; }

inline ProjReal projreal_from_json(const json& j)
{
    if (j.is_number()) return ProjReal::finite(j.get<double>());
    if (j.is_string() && (j == "inf" || j == "infinity")) return ProjReal::infinity();
    return ProjReal(j.at("num").get<double>(), j.at("den").get<double>());
}

inline json to_json(const Tuple4& t)
{
    return {{"x", to_json(t[0])}, {"y", to_json(t[1])}, {"z", to_json(t[2])}, {"w", to_json(t[3])}};
}

inline json to_json(const LinkageClass& c)
{
    return {{"class", kind_name(c.kind)}, {"orthodiagonal", c.orthodiagonal}};
}

inline json lengths_json(const BarLengths& L) { return json::array({L.alpha, L.beta, L.gamma, L.delta}); }

inline json record_json(const Configuration& c, double s)
{
    const auto& v = c.vertices;
    return {{"s", s},
            {"x", to_json(c.t[0])},
            {"y", to_json(c.t[1])},
            {"z", to_json(c.t[2])},
            {"w", to_json(c.t[3])},
            {"rho_x", c.rho[0]},
            {"rho_y", c.rho[1]},
            {"rho_z", c.rho[2]},
            {"rho_w", c.rho[3]},
            {"vertices", {{v.A.x, v.A.y}, {v.B.x, v.B.y}, {v.C.x, v.C.y}, {v.D.x, v.D.y}}},
            {"u", c.u},
            {"v", c.v},
            {"self_intersected", self_intersected(c)}};
}

inline json record_json(const Configuration& c)
{
    json j = record_json(c, 0.0);
    j.erase("s");
    return j;
}

inline json to_json(const BranchDescriptor& b)
{
    json snaps = json::array();
    for (const auto& s : b.snaps)
        snaps.push_back({{"s", s.s}, {"at", s.at_infinity ? "x=inf" : "x=0"}, {"left", to_json(s.left)},
                         {"right", to_json(s.right)}});
    json xz = json::array();
    for (const auto& i : b.xz_sign) xz.push_back({{"lo", i.lo}, {"hi", i.hi}, {"sign", i.sign}});
    // infinite domain ends serialize as null
    return {{"branch_id", b.branch_id},      {"param_kind", param_kind_name(b.kind)},
            {"t_offset", b.t_offset},        {"s_domain", {b.s_lo, b.s_hi}},
            {"compact", b.compact},          {"coordinate", b.coordinate},
            {"snap_points", snaps},          {"xz_sign", xz}};
}

inline json to_json(const InfinitySolution& s)
{
    json j{{"kind", s.circle ? "circle" : "point"}, {"reachable", s.reachable}, {"condition", s.condition}};
    if (s.circle) j["pattern"] = s.pattern;
    if (s.tuple) j["tuple"] = to_json(*s.tuple);
    return j;
}

inline json to_json(const IdentityReport& r)
{
    json items = json::array();
    for (const auto& i : r.items)
        items.push_back({{"id", i.id}, {"checked", i.checked}, {"max_residual", i.max_residual}});
    return {{"identities", items}, {"max_residual", r.max_residual}};
}

inline json to_json(const TopologyReport& r)
{
    json j = to_json(r.cls);
    j["finite_branches"] = {{"count", r.finite_branches}, {"kinds", r.branch_kinds}, {"components", r.finite_components}};
    j["infinity_items"] = {{"circles", r.infinity_circles}, {"points", r.infinity_points}};
    j["grashof"] = r.grashof;
    j["grashof_margin"] = r.grashof_margin;
    j["fully_rotating_joints"] = r.fully_rotating_joints;
    j["reaches_infinity"] = {{"x", r.reaches_infinity[0]},
                             {"y", r.reaches_infinity[1]},
                             {"z", r.reaches_infinity[2]},
                             {"w", r.reaches_infinity[3]}};
    if (!r.elliptic_form.empty()) j["elliptic_form"] = r.elliptic_form;
    return j;
}

inline json to_json(const Trace& tr)
{
    json recs = json::array();
    for (const auto& p : tr.points) recs.push_back(record_json(p.config, p.coord));
    return {{"branch", to_json(tr.branch)}, {"records", recs}};
}

inline std::string fmt17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline const char* csv_header()
{
    return "s,x_num,x_den,y_num,y_den,z_num,z_den,w_num,w_den,rho_x,rho_y,rho_z,rho_w,"
           "Ax,Ay,Bx,By,Cx,Cy,Dx,Dy,u,v,self_intersected";
}

inline std::string csv_row(const Configuration& c, double s)
{
    const auto& v = c.vertices;
    std::string out = fmt17(s);
    auto add = [&](double d) { out += "," + fmt17(d); };
    for (const auto& t : c.t) {
        add(t.num);
        add(t.den);
    }
    for (double r : c.rho) add(r);
    for (const Vec2& p : {v.A, v.B, v.C, v.D}) {
        add(p.x);
        add(p.y);
    }
    add(c.u);
    add(c.v);
    out += self_intersected(c) ? ",true" : ",false";
    return out;
}

inline std::string to_csv(const Trace& tr)
{
    std::string out = csv_header();
    out += "\n";
    for (const auto& p : tr.points) out += csv_row(p.config, p.coord) + "\n";
    return out;
}

} // namespace fourbar
