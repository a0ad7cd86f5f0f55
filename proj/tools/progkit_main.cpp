// Copyright 2026 The progkit authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Batch front door: every subcommand reads JSON inputs, runs one operation,
// and prints a single newline-terminated JSON document on stdout.
// Exit codes: 0 success/verified, 1 verification failed, 2 usage or format
// error, 3 resource limit (truncation).

#include "progkit/errors.hpp"
#include "progkit/instances.hpp"
#include "progkit/json_io.hpp"
#include "progkit/setops.hpp"
#include "progkit/transfer.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;
using namespace progkit;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

struct Output {
    std::string path; // empty = stdout
    void write(const json& doc) const {
        const std::string text = doc.dump() + "\n";
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
        out << text;
    }
};

std::vector<std::pair<double, double>> parse_grid(const std::string& grid) {
    std::vector<std::pair<double, double>> out;
    std::size_t pos = 0;
    while (pos < grid.size()) {
        std::size_t next = grid.find(';', pos);
        if (next == std::string::npos) next = grid.size();
        const std::string pair = grid.substr(pos, next - pos);
        const std::size_t comma = pair.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("grid: expected t1,t2;t1,t2");
        out.emplace_back(std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1)));
        pos = next + 1;
    }
    if (out.empty()) throw std::invalid_argument("grid: empty");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"progressions, lattice enumeration, sumsets, and the convex-to-ellipsoid "
                 "covering transfer"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0, samples = 100000, limit = kDefaultLatticeLimit;
    double tol = 1e-6, tail_eps = 1e-10;
    Output out;
    app.add_option("--seed", seed, "random seed (deterministic per seed)")->capture_default_str();
    app.add_option("--samples", samples, "Monte Carlo sample count")->capture_default_str();
    app.add_option("--limit", limit, "lattice enumeration limit")->capture_default_str();
    app.add_option("--tol", tol, "Minkowski feasibility tolerance")->capture_default_str();
    app.add_option("--tail-eps", tail_eps, "Gaussian density tail bound")->capture_default_str();
    app.add_option("--out", out.path, "write the JSON report to a file instead of stdout");

    const auto config_echo = [&](json& doc) {
        json cfg;
        cfg["seed"] = seed;
        cfg["samples"] = samples;
        cfg["limit"] = limit;
        cfg["tol"] = tol;
        cfg["tail_eps"] = tail_eps;
        doc["config"] = std::move(cfg);
    };

    // enumerate
    std::string body_path, center_json;
    auto* cmd_enum = app.add_subcommand("enumerate", "lattice points of a body");
    cmd_enum->add_option("--body", body_path, "body JSON file")->required();
    cmd_enum->add_option("--center", center_json, "center as a JSON array of \"p/q\"");

    // size / image
    std::string prog_path;
    auto* cmd_size = app.add_subcommand("size", "progression size (coefficient tuples)");
    cmd_size->add_option("--prog", prog_path, "progression JSON file")->required();
    auto* cmd_image = app.add_subcommand("image", "progression image with size vs cardinality");
    cmd_image->add_option("--prog", prog_path, "progression JSON file")->required();

    // sumset / doubling
    std::string set_a_path, set_b_path;
    auto* cmd_sumset = app.add_subcommand("sumset", "exact sumset of two sets");
    cmd_sumset->add_option("--a", set_a_path, "first set JSON file")->required();
    cmd_sumset->add_option("--b", set_b_path, "second set JSON file")->required();
    auto* cmd_doubling = app.add_subcommand("doubling", "doubling constant |A+A|/|A|");
    cmd_doubling->add_option("--set", set_a_path, "set JSON file")->required();

    // covers
    std::string cover_path;
    auto* cmd_verify = app.add_subcommand("verify-cover", "check A inside P + X");
    cmd_verify->add_option("--set", set_a_path)->required();
    cmd_verify->add_option("--prog", prog_path)->required();
    cmd_verify->add_option("--cover", cover_path)->required();
    auto* cmd_greedy = app.add_subcommand("greedy-cover", "construct X with A inside P + X");
    cmd_greedy->add_option("--set", set_a_path)->required();
    cmd_greedy->add_option("--prog", prog_path)->required();

    // transfer
    std::string grid_spec;
    auto* cmd_transfer = app.add_subcommand("transfer", "convex-to-ellipsoid covering transfer");
    cmd_transfer->add_option("--set", set_a_path)->required();
    cmd_transfer->add_option("--prog", prog_path)->required();
    cmd_transfer->add_option("--cover", cover_path)->required();
    cmd_transfer->add_option("--grid", grid_spec, "optional rbm grid t1,t2;t1,t2");

    // rbm
    std::string body_c_path, body_b_path;
    auto* cmd_rbm = app.add_subcommand("rbm", "empirical reverse Brunn-Minkowski ratio");
    cmd_rbm->add_option("--body-c", body_c_path)->required();
    cmd_rbm->add_option("--body-b", body_b_path)->required();
    cmd_rbm->add_option("--grid", grid_spec, "grid t1,t2;t1,t2 (default 1,1;2,1;1,2)");

    // gauss-corr
    auto* cmd_gauss = app.add_subcommand("gauss-corr", "Gaussian density correlation with a set");
    cmd_gauss->add_option("--set", set_a_path)->required();
    cmd_gauss->add_option("--prog", prog_path, "ellipsoid progression supplying frame and Gram")
        ->required();

    // gen
    auto* cmd_gen = app.add_subcommand("gen", "instance generators");
    cmd_gen->require_subcommand(1);
    std::uint64_t gen_n = 5;
    std::string gen_step = "1/1", gen_base = "0/1";
    auto* gen_ap = cmd_gen->add_subcommand("ap", "arithmetic progression instance");
    gen_ap->add_option("--n", gen_n, "length")->required();
    gen_ap->add_option("--step", gen_step, "step as p/q")->capture_default_str();
    gen_ap->add_option("--base", gen_base, "base as p/q")->capture_default_str();

    std::string gen_lengths, gen_a0, gen_gens;
    auto* gen_gap = cmd_gen->add_subcommand("gap", "generalized arithmetic progression instance");
    gen_gap->add_option("--lengths", gen_lengths, "comma list, e.g. 2,2")->required();
    gen_gap->add_option("--a0", gen_a0, "JSON array of p/q")->required();
    gen_gap->add_option("--gens", gen_gens, "JSON array of arrays of p/q")->required();

    std::size_t gen_d = 2, gen_k = 3;
    double gen_scale = 1.0;
    std::uint64_t gen_lo = 10, gen_hi = 100000;
    auto* gen_rand = cmd_gen->add_subcommand("random-convex", "random convex progression");
    gen_rand->add_option("--d", gen_d, "rank")->capture_default_str();
    gen_rand->add_option("--k", gen_k, "form count (k >= d)")->capture_default_str();
    gen_rand->add_option("--scale", gen_scale, "initial scale")->capture_default_str();
    gen_rand->add_option("--count-lo", gen_lo, "minimum lattice count")->capture_default_str();
    gen_rand->add_option("--count-hi", gen_hi, "maximum lattice count")->capture_default_str();

    std::size_t gen_m = 3;
    double gen_radius = 3.0;
    std::int64_t gen_entry = 4;
    std::uint64_t gen_size_lo = 0, gen_size_hi = 0;
    auto* gen_lr = cmd_gen->add_subcommand("lovett-regev", "ball-intersect-random-lattice instance");
    gen_lr->add_option("--m", gen_m, "ambient dimension")->capture_default_str();
    gen_lr->add_option("--radius", gen_radius, "ball radius R")->capture_default_str();
    gen_lr->add_option("--entry-bound", gen_entry, "basis entries in [-h, h]")->capture_default_str();
    gen_lr->add_option("--size-lo", gen_size_lo, "search R for |A| >= size-lo");
    gen_lr->add_option("--size-hi", gen_size_hi, "search R for |A| <= size-hi");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        json doc;
        int exit_code = 0;

        if (*cmd_enum) {
            const SymmetricBody body = body_from_json(load_json(body_path));
            RatVec center(body.dim(), Rat(0));
            if (!center_json.empty()) center = rat_vec_from_json(json::parse(center_json));
            const LatticePointSet pts = enumerate_lattice(body, center, limit);
            doc = pointset_to_json(pts);
            doc["count"] = pts.size();
            if (pts.truncated) exit_code = 3;
        } else if (*cmd_size) {
            const Progression p = progression_from_json(load_json(prog_path));
            doc["size"] = progression_size(p, limit);
        } else if (*cmd_image) {
            const Progression p = progression_from_json(load_json(prog_path));
            const ImageResult r = image_set(p, limit);
            doc["size"] = r.size;
            doc["cardinality"] = r.cardinality;
            doc["improper"] = r.improper;
            doc["set"] = set_to_json(r.set);
        } else if (*cmd_sumset) {
            const FiniteSet a = set_from_json(load_json(set_a_path));
            const FiniteSet b = set_from_json(load_json(set_b_path));
            doc = set_to_json(sumset(a, b));
        } else if (*cmd_doubling) {
            const FiniteSet a = set_from_json(load_json(set_a_path));
            doc["K"] = rat_to_string(doubling_constant(a));
            doc["size"] = a.size();
        } else if (*cmd_verify) {
            const FiniteSet a = set_from_json(load_json(set_a_path));
            const Progression p = progression_from_json(load_json(prog_path));
            const FiniteSet x = set_from_json(load_json(cover_path));
            const CoverResult r = verify_cover(a, p, x, limit);
            doc["ok"] = r.ok;
            if (!r.ok) {
                doc["witness"] = rat_vec_to_json(*r.witness);
                exit_code = 1;
            }
        } else if (*cmd_greedy) {
            const FiniteSet a = set_from_json(load_json(set_a_path));
            const Progression p = progression_from_json(load_json(prog_path));
            doc = set_to_json(greedy_cover(a, p, limit));
        } else if (*cmd_transfer) {
            const FiniteSet a = set_from_json(load_json(set_a_path));
            const Progression p = progression_from_json(load_json(prog_path));
            const FiniteSet x = set_from_json(load_json(cover_path));
            TransferConfig cfg;
            cfg.limit = limit;
            cfg.mc_samples = samples;
            cfg.seed = seed;
            cfg.tol = tol;
            if (!grid_spec.empty()) cfg.t_grid = parse_grid(grid_spec);
            const TransferReport rep = transfer_pipeline(a, p, x, cfg);
            doc = transfer_report_to_json(rep);
            if (!rep.verified) exit_code = 1;
        } else if (*cmd_rbm) {
            const SymmetricBody c = body_from_json(load_json(body_c_path));
            const SymmetricBody b = body_from_json(load_json(body_b_path));
            const auto grid = grid_spec.empty()
                                  ? std::vector<std::pair<double, double>>{{1, 1}, {2, 1}, {1, 2}}
                                  : parse_grid(grid_spec);
            doc = rbm_to_json(rbm_ratio(c, b, grid, samples, seed, tol));
        } else if (*cmd_gauss) {
            const FiniteSet a = set_from_json(load_json(set_a_path));
            const Progression p = progression_from_json(load_json(prog_path));
            if (p.body.kind() != BodyKind::Ellipsoid)
                throw std::invalid_argument("gauss-corr: progression body must be an ellipsoid");
            const GaussianDensity theta = gaussian_density(p.frame, p.body.gram(), tail_eps, limit);
            doc["rho"] = gaussian_correlation(a, theta);
            doc["total_mass"] = theta.total_mass();
            doc["truncation_bound"] = theta.truncation_bound;
            doc["dropped_bound"] = theta.total_dropped;
            doc["support"] = theta.weights.size();
        } else if (*cmd_gen) {
            Instance inst{FiniteSet{}, Progression{Frame{}, SymmetricBody::ellipsoid(RatMat::identity(1)), {Rat(0)}, ProgressionKind::Ellipsoid}, FiniteSet{}};
            if (*gen_ap) {
                inst = make_ap(gen_n, rat_from_string(gen_step), rat_from_string(gen_base));
            } else if (*gen_gap) {
                std::vector<std::uint64_t> lengths;
                std::size_t pos = 0;
                while (pos < gen_lengths.size()) {
                    std::size_t next = gen_lengths.find(',', pos);
                    if (next == std::string::npos) next = gen_lengths.size();
                    lengths.push_back(std::stoull(gen_lengths.substr(pos, next - pos)));
                    pos = next + 1;
                }
                RatVec a0 = rat_vec_from_json(json::parse(gen_a0));
                std::vector<RatVec> gens;
                for (const auto& g : json::parse(gen_gens)) gens.push_back(rat_vec_from_json(g));
                AmbientGroup group{a0.size(), CoordKind::Rational};
                inst = make_gap(Frame{group, std::move(a0), std::move(gens)}, lengths, limit);
            } else if (*gen_rand) {
                const Progression p = make_random_convex_progression(gen_d, gen_k, seed, gen_scale,
                                                                     gen_lo, gen_hi, limit);
                const ImageResult img = image_set(p, limit);
                inst.p = p;
                inst.a = img.set;
                inst.x = FiniteSet::from_points(p.frame.group, {RatVec(p.frame.group.m, Rat(0))});
            } else {
                const LovettRegevInstance lr =
                    gen_size_lo > 0 && gen_size_hi > gen_size_lo
                        ? make_lovett_regev_sized(gen_m, gen_size_lo, gen_size_hi, gen_entry, seed,
                                                  limit)
                        : make_lovett_regev(gen_m, gen_radius, gen_entry, seed, limit);
                inst.p = lr.p_exact;
                inst.a = lr.a;
                inst.x = FiniteSet::from_points(lr.a.group(), {RatVec(gen_m, Rat(0))});
                doc["radius"] = lr.radius;
            }
            doc["A"] = set_to_json(inst.a);
            doc["P"] = progression_to_json(inst.p);
            doc["X"] = set_to_json(inst.x);
        }

        config_echo(doc);
        out.write(doc);
        return exit_code;
    } catch (const CoverError& e) {
        json doc;
        doc["error"] = e.what();
        doc["witness"] = e.witness;
        config_echo(doc);
        out.write(doc);
        return 1;
    } catch (const TruncationError& e) {
        json doc;
        doc["error"] = e.what();
        config_echo(doc);
        out.write(doc);
        return 3;
    } catch (const nlohmann::json::exception& e) {
        json doc;
        doc["error"] = e.what();
        out.write(doc);
        return 2;
    } catch (const std::invalid_argument& e) {
        json doc;
        doc["error"] = e.what();
        out.write(doc);
        return 2;
    } catch (const std::exception& e) {
        json doc;
        doc["error"] = e.what();
        out.write(doc);
        return 3;
    }
}
