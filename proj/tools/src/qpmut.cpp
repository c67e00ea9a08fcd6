// Command-line workbench for mutation of quivers, seeds, quivers with
// potential, and decorated representations. All computation lives in the
// core library; this file only parses arguments and moves JSON around.

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qpmut/explore.hpp"
#include "qpmut/grassmannian.hpp"
#include "qpmut/io.hpp"
#include "qpmut/verify.hpp"

namespace {

using nlohmann::json;

std::vector<int> parse_at(const std::string& at) {
    std::vector<int> seq;
    if (at.empty()) return seq;
    std::stringstream ss(at);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            seq.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw qpmut::input_error("invalid --at entry '" + part + "'");
        }
    }
    return seq;
}

std::vector<long> parse_primes(const std::string& primes) {
    std::vector<long> out;
    if (primes.empty()) return out;
    std::stringstream ss(primes);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            out.push_back(std::stol(part));
        } catch (const std::exception&) {
            throw qpmut::input_error("invalid --primes entry '" + part + "'");
        }
    }
    return out;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content << "\n";
    } else {
        qpmut::write_file(out_path, content);
    }
}

qpmut::QP with_truncation(const qpmut::QP& qp, int trunc) {
    if (trunc <= 0 || trunc == qp.truncation_degree) return qp;
    qpmut::QP out = qpmut::QP::make(qp.quiver, trunc);
    for (const auto& [cyc, c] : qp.w.terms()) out.w.add_cycle(cyc, c);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact mutation workbench for quivers, seeds, and decorated representations"};
    app.require_subcommand(1);

    std::string in_path, qp_path, rep_path, out_path, at, primes, scenario = "a2",
                checks = "all";
    int trunc = 0, depth = -1, jobs = 1;
    unsigned long rng_seed = 12345;

    auto add_common = [&](CLI::App* cmd, bool needs_in) {
        if (needs_in) cmd->add_option("--in", in_path, "input JSON file")->required();
        cmd->add_option("--out", out_path, "output file (stdout if omitted)");
    };

    CLI::App* mq = app.add_subcommand("mutate-quiver", "mutate an ice quiver");
    add_common(mq, true);
    mq->add_option("--at", at, "comma-separated vertex sequence")->required();

    CLI::App* ms = app.add_subcommand("mutate-seed", "mutate a seed");
    add_common(ms, true);
    ms->add_option("--at", at, "comma-separated vertex sequence")->required();

    CLI::App* mp = app.add_subcommand("mutate-qp", "mutate a quiver with potential");
    add_common(mp, true);
    mp->add_option("--at", at, "comma-separated vertex sequence")->required();
    mp->add_option("--trunc", trunc, "override the truncation degree");

    CLI::App* mr = app.add_subcommand("mutate-rep", "mutate a decorated representation");
    mr->add_option("--rep", rep_path, "representation JSON file")->required();
    mr->add_option("--qp", qp_path, "QP JSON file, cross-checked against the rep");
    mr->add_option("--at", at, "comma-separated vertex sequence")->required();
    mr->add_option("--trunc", trunc, "override the truncation degree");
    mr->add_option("--out", out_path, "output file (stdout if omitted)");

    CLI::App* inv = app.add_subcommand("invariants", "g, h, E, F of a representation");
    inv->add_option("--rep", rep_path, "representation JSON file")->required();
    inv->add_option("--primes", primes, "comma-separated primes for point counting");
    inv->add_option("--out", out_path, "output file (stdout if omitted)");

    CLI::App* fp = app.add_subcommand("fpoly", "F-polynomials of a principal-coefficients seed");
    add_common(fp, true);

    CLI::App* cc = app.add_subcommand("cc", "cluster character of a representation");
    cc->add_option("--rep", rep_path, "representation JSON file")->required();
    cc->add_option("--in", in_path, "initial ice quiver JSON file")->required();
    cc->add_option("--primes", primes, "comma-separated primes for point counting");
    cc->add_option("--out", out_path, "output file (stdout if omitted)");

    CLI::App* ex = app.add_subcommand("explore", "breadth-first exchange graph sweep");
    add_common(ex, true);
    ex->add_option("--depth", depth, "maximum mutation depth")->required();

    CLI::App* vf = app.add_subcommand("verify", "run the theorem-checking harness");
    vf->add_option("--scenario", scenario, "a2, a3, or triangle");
    vf->add_option("--depth", depth, "sweep depth (scenario default if omitted)");
    vf->add_option("--checks", checks, "comma-separated check names or 'all'");
    vf->add_option("--jobs", jobs, "worker count for the sequence sweep");
    vf->add_option("--seed", rng_seed, "random seed for the isomorphism test");
    vf->add_option("--out", out_path, "report file (stdout if omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        qpmut::Config cfg = qpmut::load_config_from_env();

        if (mq->parsed()) {
            qpmut::IceQuiver q = qpmut::quiver_from_json(qpmut::read_file(in_path));
            for (int i : parse_at(at)) q = qpmut::mutate_quiver(q, i);
            emit(out_path, qpmut::quiver_to_json(q));
        } else if (ms->parsed()) {
            qpmut::Seed s = qpmut::seed_from_json(qpmut::read_file(in_path));
            for (int i : parse_at(at)) s = qpmut::mutate_seed(s, i);
            emit(out_path, qpmut::seed_to_json(s));
        } else if (mp->parsed()) {
            qpmut::QP qp = qpmut::qp_from_json(qpmut::read_file(in_path));
            qp = with_truncation(qp, trunc > 0 ? trunc : cfg.truncation_degree);
            qp = qpmut::mutate_qp_sequence(qp, parse_at(at));
            emit(out_path, qpmut::qp_to_json(qp));
        } else if (mr->parsed()) {
            qpmut::DecoratedRep m = qpmut::rep_from_json(qpmut::read_file(rep_path));
            if (trunc > 0) m.qp = with_truncation(m.qp, trunc);
            if (!qp_path.empty()) {
                qpmut::QP qp = qpmut::qp_from_json(qpmut::read_file(qp_path));
                if (!(qp.quiver == m.qp.quiver) || !(qp.w == m.qp.w)) {
                    throw qpmut::input_error("--qp does not match the representation's QP");
                }
            }
            std::vector<int> seq = parse_at(at);
            for (std::size_t k = 0; k < seq.size(); ++k) {
                if (!qpmut::is_admissible(m.qp, seq[k])) {
                    throw qpmut::admissibility_error(
                        "sequence step " + std::to_string(k + 1) + ": vertex " +
                        std::to_string(seq[k]) + " not admissible");
                }
                m = qpmut::mutate_rep(m, seq[k]);
            }
            emit(out_path, qpmut::rep_to_json(m));
        } else if (inv->parsed()) {
            qpmut::DecoratedRep m = qpmut::rep_from_json(qpmut::read_file(rep_path));
            std::vector<long> pr = parse_primes(primes);
            if (pr.empty()) pr = cfg.primes;
            json j = {{"schema_version", 1},
                      {"g", qpmut::g_vector_rep(m)},
                      {"h", qpmut::h_vector_rep(m)},
                      {"E", qpmut::e_invariant(m)},
                      {"F", qpmut::print_canonical(qpmut::f_polynomial_rep(m, pr), "u")}};
            emit(out_path, j.dump(2));
        } else if (fp->parsed()) {
            qpmut::Seed s = qpmut::seed_from_json(qpmut::read_file(in_path));
            int r = s.quiver.r();
            json fs = json::array();
            for (const qpmut::RationalFunction& v : s.cluster) {
                fs.push_back(qpmut::print_canonical(qpmut::f_polynomial_of_variable(v, r), "u"));
            }
            json j = {{"schema_version", 1}, {"f_polynomials", fs}};
            emit(out_path, j.dump(2));
        } else if (cc->parsed()) {
            qpmut::DecoratedRep m = qpmut::rep_from_json(qpmut::read_file(rep_path));
            qpmut::IceQuiver q = qpmut::quiver_from_json(qpmut::read_file(in_path));
            json j = {{"schema_version", 1},
                      {"cluster_character",
                       qpmut::print_canonical(qpmut::cluster_character(m, q))}};
            emit(out_path, j.dump(2));
        } else if (ex->parsed()) {
            qpmut::IceQuiver q = qpmut::quiver_from_json(qpmut::read_file(in_path));
            qpmut::ExploreResult res =
                qpmut::explore(qpmut::Seed::initial(q), depth, cfg.max_seeds, cfg.max_terms);
            json nodes = json::array();
            for (const qpmut::Seed& s : res.seeds) {
                json cluster = json::array(), gs = json::array(), fs = json::array();
                for (const qpmut::RationalFunction& v : s.cluster) {
                    cluster.push_back(qpmut::print_canonical(v));
                    try {
                        gs.push_back(qpmut::g_vector_direct(v, q));
                    } catch (const qpmut::error&) {
                        gs.push_back(nullptr);
                    }
                    if (q.n() == 2 * q.r()) {
                        fs.push_back(qpmut::print_canonical(
                            qpmut::f_polynomial_of_variable(v, q.r()), "u"));
                    } else {
                        fs.push_back(nullptr);
                    }
                }
                nodes.push_back(
                    {{"cluster", cluster}, {"g_vectors", gs}, {"f_polynomials", fs}});
            }
            json edges = json::array();
            for (const qpmut::ExploreEdge& e : res.edges) {
                edges.push_back({{"from", e.from}, {"vertex", e.vertex}, {"to", e.to}});
            }
            json j = {{"schema_version", 1},
                      {"distinct_clusters", res.distinct_clusters},
                      {"distinct_variables", res.distinct_variables},
                      {"closure", res.closure},
                      {"capped", res.capped},
                      {"nodes", nodes},
                      {"edges", edges}};
            emit(out_path, j.dump(2));
            if (res.capped) return 4;
        } else if (vf->parsed()) {
            qpmut::Scenario sc = qpmut::scenario_by_name(scenario);
            int d = depth >= 0 ? depth : sc.default_depth;
            qpmut::Report report =
                qpmut::run_verification(sc, d, jobs, cfg.iso_draws, rng_seed);
            if (checks != "all") {
                std::vector<qpmut::CheckResult> kept;
                std::stringstream ss(checks);
                std::string name;
                std::vector<std::string> wanted;
                while (std::getline(ss, name, ',')) wanted.push_back(name);
                for (const qpmut::CheckResult& c : report.checks) {
                    if (std::find(wanted.begin(), wanted.end(), c.name) != wanted.end()) {
                        kept.push_back(c);
                    }
                }
                report.checks = kept;
            }
            emit(out_path, qpmut::report_to_json(report));
            if (!report.ok()) return 3;
        }
        return 0;
    } catch (const qpmut::resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 4;
    } catch (const qpmut::check_error& e) {
        std::cerr << "check error: " << e.what() << "\n";
        return 3;
    } catch (const qpmut::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
