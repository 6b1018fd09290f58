#include <csignal>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <fourbar/service.hpp>

using namespace fourbar;

namespace {

httplib::Server* running = nullptr;

void stop_server(int)
{
    if (running) running->stop();
}

BarLengths lengths_arg(const std::string& text) { return validate_lengths(api::parse_lengths(text)); }

ProjReal x_arg(const std::string& text)
{
    if (text == "inf" || text == "infinity") return ProjReal::infinity();
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw api::BadRequest("--x must be a number or inf");
    }
    if (used != text.size()) throw api::BadRequest("--x must be a number or inf");
    return ProjReal::finite(v);
}

}

int main(int argc, char** argv)
{
    CLI::App app{"Configuration spaces of planar four-bar linkages"};
    app.require_subcommand(1);

    std::string lengths, xtext, format = "json", coordinate = "normalized", host = "127.0.0.1";
    double tol = default_class_tol;
    int branch = 1, samples = 100, port = 8080;

    auto* classify_cmd = app.add_subcommand("classify", "class name and orthodiagonal flag");
    classify_cmd->add_option("--lengths", lengths, "alpha,beta,gamma,delta")->required();
    classify_cmd->add_option("--tol", tol, "relative classification tolerance");

    auto* trace_cmd = app.add_subcommand("trace", "sample one branch");
    trace_cmd->add_option("--lengths", lengths, "alpha,beta,gamma,delta")->required();
    trace_cmd->add_option("--branch", branch, "branch id (1-based)")->required();
    trace_cmd->add_option("--samples", samples, "number of samples")->required();
    trace_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    trace_cmd->add_option("--coordinate", coordinate)->check(CLI::IsMember({"normalized", "rho_x", "s"}));

    auto* solve_cmd = app.add_subcommand("solve", "configurations with a given x");
    solve_cmd->add_option("--lengths", lengths, "alpha,beta,gamma,delta")->required();
    solve_cmd->add_option("--x", xtext, "half-angle tangent x, or inf")->required();

    auto* inf_cmd = app.add_subcommand("infinity", "solutions at infinity");
    inf_cmd->add_option("--lengths", lengths, "alpha,beta,gamma,delta")->required();

    auto* report_cmd = app.add_subcommand("report", "topology, Grashof and identity residuals");
    report_cmd->add_option("--lengths", lengths, "alpha,beta,gamma,delta")->required();

    auto* id_cmd = app.add_subcommand("identities", "identity residual table");
    id_cmd->add_option("--lengths", lengths, "alpha,beta,gamma,delta")->required();

    auto* serve_cmd = app.add_subcommand("serve", "run the HTTP/JSON service");
    serve_cmd->add_option("--port", port);
    serve_cmd->add_option("--host", host);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*classify_cmd) {
            std::cout << api::classify_json(lengths_arg(lengths), tol).dump() << "\n";
        } else if (*trace_cmd) {
            const Trace tr = trace_branch(lengths_arg(lengths), branch, samples, parse_coordinate(coordinate));
            if (format == "csv") std::cout << to_csv(tr);
            else std::cout << to_json(tr).dump() << "\n";
        } else if (*solve_cmd) {
            const ProjReal x = x_arg(xtext);
            std::cout << api::solve_json(lengths_arg(lengths), x).dump() << "\n";
        } else if (*inf_cmd) {
            std::cout << api::infinity_json(lengths_arg(lengths)).dump() << "\n";
        } else if (*report_cmd) {
            std::cout << api::report_json(lengths_arg(lengths)).dump() << "\n";
        } else if (*id_cmd) {
            std::cout << api::identities_json(lengths_arg(lengths)).dump() << "\n";
        } else if (*serve_cmd) {
            httplib::Server srv;
            install_routes(srv);
            running = &srv;
            std::signal(SIGINT, stop_server);
            std::signal(SIGTERM, stop_server);
            std::cerr << "listening on " << host << ":" << port << "\n";
            if (!srv.listen(host, port)) {
                std::cerr << "error: cannot listen on " << host << ":" << port << "\n";
                return 1;
            }
        }
    } catch (const api::BadRequest& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
