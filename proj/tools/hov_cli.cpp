// Command-line surface over the exact higher-order Voronoi library:
// per-instance reports (cell, dim, neighbors, relations, farthest),
// deterministic SVG rendering, instance generation, and verification
// sweeps. Exit codes: 0 success, 1 verification failure, 2 bad input.

#include "hov/dimension.hpp"
#include "hov/generate.hpp"
#include "hov/json_io.hpp"
#include "hov/neighbors.hpp"
#include "hov/relations.hpp"
#include "hov/svg.hpp"
#include "hov/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitBadInput = 2;

hov::CellSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open instance file '" + path + "'");
    hov::Json j;
    in >> j;
    return hov::spec_from_json(j);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    out << text << "\n";
}

std::string dimension_text(const hov::DimensionReport& rep) {
    std::ostringstream os;
    if (rep.cell_empty) return "cell: empty";
    os << "predicted_dim: " << rep.predicted_dim << "\nlp_dim: " << rep.lp_dim
       << "\nagree: " << (rep.agree ? "yes" : "no");
    return os.str();
}

std::string set_text(const std::set<std::string>& ids) {
    std::string out = "{";
    for (const auto& id : ids) out += (out.size() > 1 ? ", " : "") + id;
    return out + "}";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact higher-order Voronoi cells: reports, verifiers, rendering"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::uint64_t seed = 1;
    std::size_t max_dim = hov::max_ambient_dim();
    std::string out_path;
    std::string format = "json";
    app.add_option("--seed", seed, "Seed for randomized subcommands");
    app.add_option("--max-dim", max_dim, "Ambient dimension cap");
    app.add_option("--out", out_path, "Write output to file instead of stdout");
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));

    std::string spec_path;
    auto* cell = app.add_subcommand("cell", "Full cell report for an instance file");
    cell->add_option("file", spec_path, "instance JSON")->required();
    auto* dim = app.add_subcommand("dim", "Dimension report for an instance file");
    dim->add_option("file", spec_path, "instance JSON")->required();
    auto* neighbors = app.add_subcommand("neighbors", "Minimal neighbor sets");
    neighbors->add_option("file", spec_path, "instance JSON")->required();
    auto* relations = app.add_subcommand("relations", "Order-relation verifiers");
    std::size_t chain_samples = 20;
    relations->add_option("file", spec_path, "instance JSON")->required();
    relations->add_option("--samples", chain_samples, "random points per chain link");
    auto* farthest = app.add_subcommand("farthest", "Per-site farthest-cell table");
    farthest->add_option("file", spec_path, "instance JSON")->required();

    auto* render = app.add_subcommand("render", "SVG of the order-k diagram (planar)");
    std::size_t render_k = 1;
    std::vector<std::string> bbox_strs{"-10", "-10", "10", "10"};
    render->add_option("file", spec_path, "instance JSON")->required();
    render->add_option("--k", render_k, "cell order");
    render->add_option("--bbox", bbox_strs, "xmin ymin xmax ymax (rationals)")->expected(4);

    auto* verify = app.add_subcommand("verify", "Verification sweep over generated instances");
    hov::SweepConfig sweep;
    std::vector<std::string> checks{"dimension"};
    verify->add_option("--n", sweep.ambient_dim, "ambient dimension");
    verify->add_option("--instances", sweep.instances, "number of instances");
    verify->add_option("--sites", sweep.num_sites, "sites per instance");
    verify->add_option("--max-order", sweep.max_order, "largest |S| cycled through");
    verify->add_option("--checks", checks, "dimension|membership|chains|neighbors|farthest");
    verify->add_option("--jobs", sweep.jobs, "worker threads");
    std::string fraction = "1/2";
    verify->add_option("--degenerate-fraction", fraction, "cospherical share, rational");
    verify->add_option("--bound", sweep.coordinate_bound, "coordinate box half-width");

    auto* gen = app.add_subcommand("gen", "Emit a generated instance file");
    hov::InstanceConfig gen_cfg;
    std::string gen_fraction = "1/2";
    gen->add_option("--n", gen_cfg.ambient_dim, "ambient dimension");
    gen->add_option("--sites", gen_cfg.num_sites, "number of sites");
    gen->add_option("--order", gen_cfg.order, "|S|");
    gen->add_option("--degenerate-fraction", gen_fraction, "cospherical share, rational");
    gen->add_option("--bound", gen_cfg.coordinate_bound, "coordinate box half-width");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        hov::max_ambient_dim() = max_dim;
        const bool json = format == "json";

        if (*cell) {
            emit(json ? hov::cell_report(load_spec(spec_path)).dump(2)
                      : dimension_text(hov::predicted_dimension(load_spec(spec_path))),
                 out_path);
            return kExitOk;
        }
        if (*dim) {
            const auto rep = hov::predicted_dimension(load_spec(spec_path));
            emit(json ? hov::dimension_report_to_json(rep).dump(2) : dimension_text(rep),
                 out_path);
            return rep.cell_empty || rep.agree ? kExitOk : kExitVerifyFail;
        }
        if (*neighbors) {
            const auto rep = hov::all_minimal_neighbor_sets(load_spec(spec_path));
            if (json) {
                emit(hov::neighbor_report_to_json(rep).dump(2), out_path);
            } else {
                std::ostringstream os;
                for (const auto& m : rep.minimal_sets) os << "minimal: " << set_text(m) << "\n";
                os << "unique: " << (rep.unique ? "yes" : "no");
                emit(os.str(), out_path);
            }
            return kExitOk;
        }
        if (*relations) {
            const auto spec = load_spec(spec_path);
            hov::SubsetFamily fam;
            fam.base = spec.s_ids;
            for (const auto& id : spec.s_ids) fam.members.push_back({id});
            const auto cover = hov::verify_cover_decomposition(spec, fam);
            bool orders_hold = true;
            for (std::size_t k = 1; k <= spec.s_ids.size(); ++k)
                orders_hold = orders_hold && hov::verify_order_k(spec, k).holds;
            const auto chain = hov::verify_inclusion_chain(spec, chain_samples, seed);
            hov::Json j = hov::chain_report_to_json(chain);
            j["cover_decomposition"] = cover.holds;
            j["order_k"] = orders_hold;
            const bool ok = cover.holds && orders_hold && chain.holds;
            if (json) {
                emit(j.dump(2), out_path);
            } else {
                emit(std::string("cover: ") + (cover.holds ? "holds" : "violated") +
                         "\norder-k: " + (orders_hold ? "holds" : "violated") + "\nchain: " +
                         (chain.holds ? "holds" : "violated"),
                     out_path);
            }
            return ok ? kExitOk : kExitVerifyFail;
        }
        if (*farthest) {
            const auto spec = load_spec(spec_path);
            hov::Json rows = hov::Json::array();
            std::ostringstream os;
            for (const auto& site : spec.sites.sites) {
                const auto res = hov::farthest_nonempty(spec.sites, site.id);
                hov::Json row;
                row["site"] = site.id;
                row["nonempty"] = res.nonempty;
                if (res.witness) row["witness"] = hov::point_to_json(*res.witness);
                if (res.exposed_ball) row["exposed_ball"] = hov::ball_to_json(*res.exposed_ball);
                rows.push_back(std::move(row));
                os << site.id << ": " << (res.nonempty ? "nonempty" : "empty") << "\n";
            }
            hov::Json j{{"schema", 1}, {"farthest", std::move(rows)}};
            emit(json ? j.dump(2) : os.str(), out_path);
            return kExitOk;
        }
        if (*render) {
            const auto spec = load_spec(spec_path);
            const hov::BBox box{hov::parse_scalar(bbox_strs[0]), hov::parse_scalar(bbox_strs[1]),
                                hov::parse_scalar(bbox_strs[2]), hov::parse_scalar(bbox_strs[3])};
            if (box.xmin >= box.xmax || box.ymin >= box.ymax)
                throw std::invalid_argument("render: degenerate bbox");
            emit(hov::render_svg(spec.sites, render_k, box), out_path);
            return kExitOk;
        }
        if (*verify) {
            sweep.seed = seed;
            sweep.degenerate_fraction = hov::parse_scalar(fraction);
            sweep.checks = std::set<std::string>(checks.begin(), checks.end());
            for (const auto& c : sweep.checks)
                if (c != "dimension" && c != "membership" && c != "chains" &&
                    c != "neighbors" && c != "farthest")
                    throw std::invalid_argument("verify: unknown check '" + c + "'");
            const auto rep = hov::run_sweep(sweep);
            if (json) {
                emit(hov::sweep_report_to_json(rep).dump(2), out_path);
            } else {
                std::ostringstream os;
                os << "instances: " << rep.instances << "\nfailures: " << rep.failures.size();
                emit(os.str(), out_path);
            }
            return rep.failures.empty() ? kExitOk : kExitVerifyFail;
        }
        if (*gen) {
            gen_cfg.seed = seed;
            gen_cfg.degenerate_fraction = hov::parse_scalar(gen_fraction);
            const auto inst = hov::generate(gen_cfg);
            emit(hov::spec_to_json(inst.spec).dump(2), out_path);
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitBadInput;
}
