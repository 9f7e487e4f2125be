/*
 * Copyright 2026 The phaseperm Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// phaseperm: command-line front end.
//
// Exit codes: 0 success, 1 invalid input, 2 verification failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <phaseperm/fock.hpp>
#include <phaseperm/io.hpp>
#include <phaseperm/linops.hpp>
#include <phaseperm/macmahon.hpp>
#include <phaseperm/mcint.hpp>
#include <phaseperm/permanent.hpp>

namespace {

using namespace phaseperm;

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_failed = 2;
constexpr double z_limit = 4.0;

struct RunConfig {
    std::string matrix_path;
    std::size_t n = 0;
    std::size_t m = 0;
    std::uint64_t seed = 0;
    std::uint64_t n_samples = 100'000;
    unsigned workers = 1;
    std::string form;
    std::string output_path;
    std::string format = "csv";
    std::string algo = "ryser";
    std::string config;
    std::string permutation;
    double tolerance = 1e-10;
};

/// Splits "1 0 2" or "1,0,2".
std::vector<std::size_t> parse_index_list(const std::string &text) {
    std::string cleaned = text;
    for (char &c : cleaned)
        if (c == ',')
            c = ' ';
    std::istringstream in(cleaned);
    std::vector<std::size_t> out;
    std::string tok;
    while (in >> tok) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception &) {
            throw std::invalid_argument("not an integer: '" + tok + "'");
        }
        if (pos != tok.size() || v < 0)
            throw std::invalid_argument("not a non-negative integer: '" + tok + "'");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

std::string resolve_output(const std::string &path) {
    namespace fs = std::filesystem;
    if (path.empty() || fs::path(path).is_absolute())
        return path;
    if (const char *dir = std::getenv("PHASEPERM_OUTPUT_DIR"); dir && *dir)
        return (fs::path(dir) / path).string();
    return path;
}

void emit(const std::string &output_path, const std::string &text) {
    const std::string path = resolve_output(output_path);
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot write '" + path + "'");
    out << text;
}

UnitaryMatrix load_unitary(const RunConfig &cfg) {
    return UnitaryMatrix::from(load_matrix(cfg.matrix_path), cfg.tolerance);
}

McOptions mc_options(const RunConfig &cfg) { return {cfg.n_samples, cfg.seed, cfg.workers}; }

nlohmann::json complex_json(complex_t z) { return {{"re", z.real()}, {"im", z.imag()}}; }

int cmd_gen_unitary(const RunConfig &cfg) {
    std::optional<UnitaryMatrix> u;
    if (!cfg.permutation.empty()) {
        PermutationSpec spec(parse_index_list(cfg.permutation));
        if (cfg.m != 0 && cfg.m != spec.size())
            throw std::invalid_argument("--m does not match permutation length");
        u = permutation_unitary(spec);
    } else {
        if (cfg.m == 0)
            throw std::invalid_argument("--m must be at least 1");
        u = haar_random_unitary(cfg.m, cfg.seed);
    }
    emit(cfg.output_path, matrix_to_json(u->matrix()).dump(2) + "\n");
    return exit_ok;
}

int cmd_permanent(const RunConfig &cfg) {
    const ComplexMatrix a = load_matrix(cfg.matrix_path);
    if (!a.is_square())
        throw shape_error("permanent requires a square matrix");
    complex_t value;
    if (cfg.algo == "naive")
        value = permanent_naive(a);
    else if (cfg.algo == "ryser")
        value = permanent_ryser(a);
    else
        value = permanent_via_macmahon(a, a.rows());
    nlohmann::json j{{"algorithm", cfg.algo}, {"dimension", a.rows()}, {"permanent", complex_json(value)}};
    emit(cfg.output_path, j.dump(2) + "\n");
    return exit_ok;
}

int cmd_amplitude(const RunConfig &cfg) {
    const UnitaryMatrix u = load_unitary(cfg);
    std::vector<unsigned> occ;
    for (auto v : parse_index_list(cfg.config))
        occ.push_back(static_cast<unsigned>(v));
    const PhotonConfiguration t(std::move(occ));
    const complex_t gamma = amplitude(u, cfg.n, t);
    nlohmann::json j{{"configuration", t.to_string()},
                     {"amplitude", complex_json(gamma)},
                     {"probability", std::norm(gamma)}};
    emit(cfg.output_path, j.dump(2) + "\n");
    return exit_ok;
}

int cmd_distribution(const RunConfig &cfg) {
    const UnitaryMatrix u = load_unitary(cfg);
    const OutputDistribution dist = output_distribution(u, cfg.n);
    if (cfg.format == "json") {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto &e : dist.entries)
            entries.push_back({{"configuration", e.configuration.to_string()},
                               {"amplitude", complex_json(e.amplitude)},
                               {"probability", e.probability}});
        nlohmann::json j{{"n", dist.n}, {"m", dist.m}, {"entries", std::move(entries)}};
        emit(cfg.output_path, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        write_distribution_csv(os, dist);
        emit(cfg.output_path, os.str());
    }
    return exit_ok;
}

int cmd_mc_integrate(const RunConfig &cfg) {
    const UnitaryMatrix u = load_unitary(cfg);
    const auto form = parse_integral_form(cfg.form);
    if (!form)
        throw std::invalid_argument("unknown integral form '" + cfg.form + "'");
    if (cfg.n > u.modes())
        throw configuration_mismatch("--n exceeds mode count");
    const MCEstimate e = mc_probability(u, cfg.n, *form, mc_options(cfg));
    const double reference = std::norm(permanent_ryser(u.matrix().leading_block(cfg.n)));
    emit(cfg.output_path, estimate_to_json(e, reference).dump(2) + "\n");
    return exit_ok;
}

int cmd_verify_equivalence(const RunConfig &cfg) {
    const UnitaryMatrix u = load_unitary(cfg);
    const CrossFormReport report = cross_form_report(u, cfg.n, mc_options(cfg));
    const bool pass = report.all_within(z_limit);
    nlohmann::json j = report_to_json(report);
    j["z_limit"] = z_limit;
    j["pass"] = pass;
    emit(cfg.output_path, j.dump(2) + "\n");
    return pass ? exit_ok : exit_failed;
}

int cmd_identities(const RunConfig &cfg) {
    nlohmann::json results = nlohmann::json::array();
    bool pass = true;
    for (auto id : all_gaussian_identities) {
        const MCEstimate e = verify_identity(id, mc_options(cfg));
        const double ref = identity_reference(id);
        pass = pass && std::abs(z_score(e.mean, e.std_error, ref, 0.0)) <= z_limit;
        results.push_back(estimate_to_json(e, ref));
    }
    nlohmann::json j{{"identities", std::move(results)}, {"z_limit", z_limit}, {"pass", pass}};
    emit(cfg.output_path, j.dump(2) + "\n");
    return pass ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Matrix permanents, boson-sampling amplitudes and their phase-space integrals"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_matrix = [&](CLI::App *sub) {
        sub->add_option("--matrix", cfg.matrix_path, "JSON matrix file")->required()->check(CLI::ExistingFile);
    };
    auto add_unitary_tol = [&](CLI::App *sub) {
        sub->add_option("--tol", cfg.tolerance, "Unitarity tolerance for the loaded matrix")
            ->capture_default_str();
    };
    auto add_n = [&](CLI::App *sub) { sub->add_option("--n", cfg.n, "Photon count")->required(); };
    auto add_mc = [&](CLI::App *sub) {
        sub->add_option("--samples", cfg.n_samples, "Monte-Carlo sample count")
            ->capture_default_str()
            ->check(CLI::Range(mc_min_samples, std::numeric_limits<std::uint64_t>::max()));
        sub->add_option("--seed", cfg.seed, "Base seed")->capture_default_str();
        sub->add_option("--workers", cfg.workers, "Worker threads (0 = all cores); never changes results")
            ->capture_default_str();
    };
    auto add_output = [&](CLI::App *sub) {
        sub->add_option("--output,-o", cfg.output_path,
                        "Output file (relative paths resolve under $PHASEPERM_OUTPUT_DIR when set)");
    };

    auto *gen = app.add_subcommand("gen-unitary", "Write a Haar-random or permutation unitary as JSON");
    gen->add_option("--m", cfg.m, "Mode count");
    gen->add_option("--seed", cfg.seed, "Seed")->capture_default_str();
    gen->add_option("--permutation", cfg.permutation, "One-based bijection, e.g. \"2,1,3\"");
    add_output(gen);

    auto *perm = app.add_subcommand("permanent", "Permanent of a square matrix");
    add_matrix(perm);
    perm->add_option("--algo", cfg.algo, "naive | ryser | macmahon")
        ->capture_default_str()
        ->check(CLI::IsMember({"naive", "ryser", "macmahon"}));
    add_output(perm);

    auto *amp = app.add_subcommand("amplitude", "Output amplitude gamma_T and probability |gamma_T|^2");
    add_matrix(amp);
    add_unitary_tol(amp);
    add_n(amp);
    amp->add_option("--config", cfg.config, "Occupations T, e.g. \"1 1 0\"")->required();
    add_output(amp);

    auto *dist = app.add_subcommand("distribution", "Full output distribution");
    add_matrix(dist);
    add_unitary_tol(dist);
    add_n(dist);
    dist->add_option("--format", cfg.format, "csv | json")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "json"}));
    add_output(dist);

    auto *mc = app.add_subcommand("mc-integrate", "Monte-Carlo estimate of one integral form");
    add_matrix(mc);
    add_unitary_tol(mc);
    add_n(mc);
    mc->add_option("--form", cfg.form, "FULL | TRUNCATED | NO_CONSTANT | REDUCED")
        ->required()
        ->check(CLI::IsMember({"FULL", "TRUNCATED", "NO_CONSTANT", "REDUCED"}));
    add_mc(mc);
    add_output(mc);

    auto *verify = app.add_subcommand("verify-equivalence",
                                      "All four integral forms against the Ryser permanent");
    add_matrix(verify);
    add_unitary_tol(verify);
    add_n(verify);
    add_mc(verify);
    add_output(verify);

    auto *ids = app.add_subcommand("identities", "Monte-Carlo check of the four Gaussian identities");
    add_mc(ids);
    add_output(ids);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid;
    }

    try {
        if (*gen) return cmd_gen_unitary(cfg);
        if (*perm) return cmd_permanent(cfg);
        if (*amp) return cmd_amplitude(cfg);
        if (*dist) return cmd_distribution(cfg);
        if (*mc) return cmd_mc_integrate(cfg);
        if (*verify) return cmd_verify_equivalence(cfg);
        if (*ids) return cmd_identities(cfg);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    }
    return exit_invalid;
}
