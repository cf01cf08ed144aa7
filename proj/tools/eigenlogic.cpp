// Copyright 2026 The Eigenlogic Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eigenlogic/commands.hpp"
#include "eigenlogic/config.hpp"
#include "eigenlogic/server.hpp"
#include "eigenlogic/session.hpp"

namespace {

using namespace eigenlogic;

int run_serve(const std::string &config_path, std::uint16_t port, double rate) {
    session::Session session(config::load(config_path));
    boost::asio::io_context io;
    server::Server srv(io, session, port, rate);
    boost::asio::signal_set signals(io, SIGINT, SIGTERM);
    signals.async_wait([&](const boost::system::error_code &, int) {
        srv.stop();
        io.stop();
    });
    srv.start();
    std::cout << "serving on ws://127.0.0.1:" << srv.port() << "/ at " << rate
              << " snapshots/s" << std::endl;
    io.run();
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Logical observables, fuzzy membership and Braitenberg vehicles"};
    app.require_subcommand(1);

    int m = 2;
    std::string target;
    auto *tt = app.add_subcommand("truth-table", "Print a connective's truth table and diagonal");
    tt->add_option("connective", target, "Connective name (AND, OR, XOR, min, ...) or formula")
        ->required();
    tt->add_option("--m", m, "Alphabet size")->check(CLI::Range(2, 9));

    std::string formula_text;
    std::vector<double> mus;
    auto *mem = app.add_subcommand("membership", "Born-rule fuzzy membership of a formula");
    mem->add_option("formula", formula_text, "Boolean formula")->required();
    mem->add_option("mu", mus, "Membership of each variable, in order of first appearance");

    std::vector<int> letters;
    auto *ev = app.add_subcommand("eval", "Evaluate a formula on a crisp assignment");
    ev->add_option("formula", formula_text, "Formula")->required();
    ev->add_option("values", letters, "Letter of each variable, in order of first appearance");
    ev->add_option("--m", m, "Alphabet size")->check(CLI::Range(2, 9));

    auto *poly = app.add_subcommand("polynomial", "Interpolating polynomial in the dictators");
    poly->add_option("connective", target, "Connective name or formula")->required();
    poly->add_option("--m", m, "Alphabet size")->check(CLI::Range(2, 9));

    std::string config_path;
    std::string out_path;
    auto *simc = app.add_subcommand("simulate", "Run a configuration and write the trajectory CSV");
    simc->add_option("--config", config_path, "Simulation config (JSON)")->required();
    simc->add_option("--out", out_path, "Trajectory CSV path")->required();

    std::uint16_t port = 8765;
    double rate = 50.0;
    auto *serve = app.add_subcommand("serve", "Run a live WebSocket session");
    serve->add_option("--config", config_path, "Simulation config (JSON)")->required();
    serve->add_option("--port", port, "TCP port (0 picks a free one)");
    serve->add_option("--rate", rate, "Simulated steps (snapshots) per second");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*tt) {
            commands::truth_table(std::cout, target, m);
        } else if (*mem) {
            std::printf("%.12f\n", commands::membership(formula_text, mus));
        } else if (*ev) {
            std::cout << commands::eval(formula_text, letters, m) << '\n';
        } else if (*poly) {
            std::cout << commands::polynomial(target, m) << '\n';
        } else if (*simc) {
            const auto cfg = config::load(config_path);
            std::ofstream csv(out_path, std::ios::binary);
            if (!csv) {
                std::cerr << "error: cannot write '" << out_path << "'\n";
                return 1;
            }
            commands::simulate(cfg, csv, std::cout);
        } else if (*serve) {
            return run_serve(config_path, port, rate);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
