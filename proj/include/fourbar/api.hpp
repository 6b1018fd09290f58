#pragma once

#include <sstream>
#include <string>

#include "analysis.hpp"
#include "identities.hpp"
#include "infinity.hpp"
#include "serialize.hpp"
#include "solve.hpp"
#include "trace.hpp"

namespace fourbar::api {

struct Response {
    int status = 200;
    json body;
};

// malformed request (400)
struct BadRequest : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Response error_response(int status, const std::string& code, const std::string& detail)
{
    return {status, {{"error", code}, {"detail", detail}}};
}

inline Quad parse_lengths(const std::string& text)
{
    Quad q{};
    std::stringstream ss(text);
    std::string item;
    int n = 0;
    while (std::getline(ss, item, ',')) {
        if (n == 4) throw BadRequest("lengths must have exactly four entries");
        size_t used = 0;
        try {
            q[n] = std::stod(item, &used);
        } catch (const std::exception&) {
            throw BadRequest("lengths entry '" + item + "' is not a number");
        }
        if (used != item.size()) throw BadRequest("lengths entry '" + item + "' is not a number");
        ++n;
    }
    if (n != 4) throw BadRequest("lengths must have exactly four entries");
    return q;
}

inline Quad parse_lengths(const json& j)
{
    if (j.is_string()) return parse_lengths(j.get<std::string>());
    if (!j.is_array() || j.size() != 4) throw BadRequest("lengths must be an array of four numbers");
    Quad q{};
    for (int i = 0; i < 4; ++i) {
        if (!j[i].is_number()) throw BadRequest("lengths must be an array of four numbers");
        q[i] = j[i].get<double>();
    }
    return q;
}

// Runs f, mapping failures onto status codes: 400 malformed, 422 invalid lengths.
template <class F>
Response guarded(F&& f)
{
    try {
        return {200, f()};
    } catch (const BadRequest& e) {
        return error_response(400, "BadRequest", e.what());
    } catch (const std::invalid_argument& e) {
        return error_response(400, "BadRequest", e.what());
    } catch (const json::exception& e) {
        return error_response(400, "BadRequest", e.what());
    } catch (const Error& e) {
        if (is_length_error(e)) return error_response(422, e.code, e.what());
        return error_response(500, e.code, e.what());
    } catch (const std::exception& e) {
        return error_response(500, "InternalError", e.what());
    }
}

inline json classify_json(const BarLengths& L, double tol)
{
    json j = to_json(classify(L, tol));
    j["lengths"] = lengths_json(L);
    return j;
}

inline json infinity_json(const BarLengths& L)
{
    json items = json::array();
    for (const auto& s : solutions_at_infinity(L)) items.push_back(to_json(s));
    return {{"lengths", lengths_json(L)}, {"class", kind_name(classify(L).kind)}, {"solutions", items}};
}

inline json identities_json(const BarLengths& L)
{
    json j = to_json(verify_identities(L));
    j["lengths"] = lengths_json(L);
    return j;
}

inline json report_json(const BarLengths& L)
{
    json j = to_json(topology_report(L));
    j["lengths"] = lengths_json(L);
    j["identities"] = to_json(verify_identities(L));
    json br = json::array();
    for (const auto& b : enumerate_branches(L)) br.push_back(to_json(b));
    j["branches"] = br;
    return j;
}

inline json solve_json(const BarLengths& L, const ProjReal& x)
{
    const SolveResult r = solve_at_x(L, x);
    json recs = json::array();
    for (const auto& c : r.configs) recs.push_back(record_json(c));
    json circ = json::array();
    for (const auto& c : r.on_infinity_circle) circ.push_back(record_json(c));
    return {{"records", recs}, {"infinity_circle_records", circ}, {"continuum", r.continuum}};
}

inline Response classify_route(const std::string& lengths, double tol = default_class_tol)
{
    return guarded([&] { return classify_json(validate_lengths(parse_lengths(lengths)), tol); });
}

inline Response infinity_route(const std::string& lengths)
{
    return guarded([&] { return infinity_json(validate_lengths(parse_lengths(lengths))); });
}

inline Response report_route(const std::string& lengths)
{
    return guarded([&] { return report_json(validate_lengths(parse_lengths(lengths))); });
}

inline Response trace_route(const std::string& body)
{
    return guarded([&] {
        const json req = json::parse(body);
        const Quad q = parse_lengths(req.at("lengths"));
        const json& bid = req.contains("branch_id") ? req.at("branch_id") : req.at("branch");
        if (!bid.is_number_integer()) throw BadRequest("branch_id must be an integer");
        const json& smp = req.at("samples");
        if (!smp.is_number_integer()) throw BadRequest("samples must be an integer");
        const Coordinate coord = parse_coordinate(req.value("coordinate", std::string("normalized")));
        const BarLengths L = validate_lengths(q);
        return to_json(trace_branch(L, bid.get<int>(), smp.get<int>(), coord));
    });
}

inline Response solve_route(const std::string& body)
{
    return guarded([&] {
        const json req = json::parse(body);
        const Quad q = parse_lengths(req.at("lengths"));
        const ProjReal x = projreal_from_json(req.at("x"));
        return solve_json(validate_lengths(q), x);
    });
}

} // namespace fourbar::api
