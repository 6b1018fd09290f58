#pragma once

#include <string>

#include <httplib.h>

#include "api.hpp"

namespace fourbar {

inline void reply(httplib::Response& res, const api::Response& r)
{
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
}

inline std::string query_lengths(const httplib::Request& req)
{
    return req.has_param("lengths") ? req.get_param_value("lengths") : std::string();
}

inline void install_routes(httplib::Server& srv)
{
    srv.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                             {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                             {"Access-Control-Allow-Headers", "Content-Type"}});
    srv.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    srv.Get("/api/classify", [](const httplib::Request& req, httplib::Response& res) {
        double tol = default_class_tol;
        if (req.has_param("tol")) {
            try {
                tol = std::stod(req.get_param_value("tol"));
            } catch (const std::exception&) {
                return reply(res, api::error_response(400, "BadRequest", "tol is not a number"));
            }
        }
        reply(res, api::classify_route(query_lengths(req), tol));
    });
    srv.Get("/api/infinity", [](const httplib::Request& req, httplib::Response& res) {
        reply(res, api::infinity_route(query_lengths(req)));
    });
    srv.Get("/api/report", [](const httplib::Request& req, httplib::Response& res) {
        reply(res, api::report_route(query_lengths(req)));
    });
    srv.Post("/api/trace", [](const httplib::Request& req, httplib::Response& res) {
        reply(res, api::trace_route(req.body));
    });
    srv.Post("/api/solve", [](const httplib::Request& req, httplib::Response& res) {
        reply(res, api::solve_route(req.body));
    });
}

} // namespace fourbar
