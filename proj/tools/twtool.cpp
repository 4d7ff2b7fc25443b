#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tw/io.hpp"

using namespace tw;
using nlohmann::json;

namespace {

struct Common {
    bool emit_json = false;
    int threads = 1;
    int limit_vertices = 24;

    OracleLimits limits() const {
        OracleLimits l;
        l.max_vertices = limit_vertices;
        return l;
    }
};

std::string join_args(int argc, char** argv) {
    std::string out;
    for (int i = 0; i < argc; ++i) {
        if (i) out += " ";
        out += argv[i];
    }
    return out;
}

// "h=H,w=W"
std::pair<int, int> parse_scale(const std::string& s) {
    int h = 0, w = 0;
    if (std::sscanf(s.c_str(), "h=%d,w=%d", &h, &w) != 2)
        throw CLI::ValidationError("--scale", "expected h=H,w=W");
    return {h, w};
}

void emit_report(const VerificationReport& rep, const Common& common,
                 const Graph& g, int k, const std::string& command,
                 std::uint64_t seed) {
    for (const auto& c : rep.checks)
        std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.name << " — "
                  << c.detail << "\n";
    std::cout << (rep.all_pass() ? "all checks passed" : "CHECKS FAILED")
              << " (" << rep.subject << ")\n";
    if (common.emit_json)
        std::cout << make_certificate("report", g, k, report_to_json(rep),
                                      command, seed)
                         .dump(2)
                  << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"treewidth, ghost edges, and constructive lemma toolkit"};
    app.require_subcommand(1);
    Common common;
    app.add_flag("--json", common.emit_json, "emit a JSON certificate");
    app.add_option("--threads", common.threads, "worker thread cap")
        ->check(CLI::PositiveNumber);
    app.add_option("--limit-vertices", common.limit_vertices,
                   "oracle vertex ceiling")
        ->check(CLI::PositiveNumber);
    const std::string command = join_args(argc, argv);

    // tw
    auto* cmd_tw = app.add_subcommand("tw", "exact treewidth of a .gr graph");
    std::string tw_in;
    cmd_tw->add_option("input", tw_in, ".gr file")->required();

    // ghost
    auto* cmd_ghost = app.add_subcommand("ghost", "k-ghost-edge scan");
    std::string ghost_in;
    int ghost_k = 3;
    std::vector<int> ghost_pair;
    cmd_ghost->add_option("input", ghost_in, ".gr file")->required();
    cmd_ghost->add_option("--k", ghost_k, "width bound")->required();
    cmd_ghost->add_option("--pair", ghost_pair, "one pair (1-based ids)")
        ->expected(2);

    // construct parallel | tower
    auto* cmd_construct = app.add_subcommand("construct", "graph builders");
    cmd_construct->require_subcommand(1);
    auto* cmd_par = cmd_construct->add_subcommand(
        "parallel", "r-th parallel connection of a marked base");
    int par_k = 3, par_r = 1;
    std::string par_base = "clique", par_out;
    cmd_par->add_option("--k", par_k)->required();
    cmd_par->add_option("--r", par_r)->required();
    cmd_par->add_option("--base", par_base)
        ->check(CLI::IsMember({"clique", "clique-minus"}));
    cmd_par->add_option("-o,--output", par_out, "output stem")->required();
    auto* cmd_tower =
        cmd_construct->add_subcommand("tower", "scaled tower-tree over a base");
    int tower_k = 3;
    std::string tower_scale, tower_in, tower_out;
    cmd_tower->add_option("--k", tower_k)->required();
    cmd_tower->add_option("--scale", tower_scale, "h=H,w=W")->required();
    cmd_tower->add_option("input", tower_in, "base .gr file")->required();
    cmd_tower->add_option("-o,--output", tower_out, "output stem")->required();

    // verify-strong
    auto* cmd_strong =
        app.add_subcommand("verify-strong", "strongly k-ghost-free checks");
    std::string strong_in, strong_structure;
    int strong_k = 3, strong_u = 1, strong_v = 2;
    cmd_strong->add_option("input", strong_in, ".gr file")->required();
    cmd_strong->add_option("--k", strong_k)->required();
    cmd_strong->add_option("--u", strong_u, "1-based mark")->required();
    cmd_strong->add_option("--v", strong_v, "1-based mark")->required();
    cmd_strong->add_option(
        "--structure", strong_structure,
        "parallel-structure sidecar supplying the condition-(3) witness");

    // lemma32
    auto* cmd_l32 =
        app.add_subcommand("lemma32", "matching certificates on spanning trees");
    std::string l32_structure, l32_tree;
    bool l32_enumerate = false;
    int l32_sample = 0;
    std::uint64_t l32_seed = 42;
    cmd_l32->add_option("structure", l32_structure,
                        "parallel-structure JSON sidecar")
        ->required();
    auto* opt_tree = cmd_l32->add_option("--tree", l32_tree, "tree .json");
    auto* opt_enum = cmd_l32->add_flag("--enumerate", l32_enumerate,
                                       "all spanning trees");
    auto* opt_sample =
        cmd_l32->add_option("--sample", l32_sample, "sample N seeded trees");
    cmd_l32->add_option("--seed", l32_seed);
    opt_tree->excludes(opt_enum)->excludes(opt_sample);
    opt_enum->excludes(opt_sample);

    // theorem
    auto* cmd_thm = app.add_subcommand("theorem", "scaled end-to-end pipeline");
    PipelineOptions popts;
    std::string thm_scale = "h=1,w=2";
    cmd_thm->add_option("--k", popts.k)->required();
    cmd_thm->add_option("--r", popts.r)->required();
    cmd_thm->add_option("--scale", thm_scale, "h=H,w=W");
    cmd_thm->add_option("--seed", popts.seed);

    CLI11_PARSE(app, argc, argv);

    if (*cmd_tw) {
        Graph g = parse_gr(read_file(tw_in));
        int tw = exact_treewidth(g, common.limits());
        std::cout << tw << "\n";
        if (common.emit_json) {
            auto pi = optimal_elimination_ordering(g, common.limits());
            auto dec = from_elimination_ordering(g, pi).decomposition;
            json payload{{"td", decomposition_to_json(dec)}, {"width", tw}};
            std::cout << make_certificate("decomposition", g, tw, payload,
                                          command, 0)
                             .dump(2)
                      << "\n";
        }
        return 0;
    }

    if (*cmd_ghost) {
        Graph g = parse_gr(read_file(ghost_in));
        if (!ghost_pair.empty()) {
            GhostQuery q(g, ghost_k,
                         {std::min(ghost_pair[0], ghost_pair[1]) - 1,
                          std::max(ghost_pair[0], ghost_pair[1]) - 1});
            bool ghost = is_k_ghost_edge(q, common.limits());
            std::cout << "ghost edge: " << (ghost ? "yes" : "no") << "\n";
            return 0;
        }
        auto ghosts = ghost_edges(g, ghost_k, common.limits(), common.threads);
        for (auto [a, b] : ghosts)
            std::cout << a + 1 << " " << b + 1 << "\n";
        std::cout << (ghosts.empty() ? "k-ghost-free" : "ghost edges found")
                  << "\n";
        return ghosts.empty() ? 0 : 1;
    }

    if (*cmd_par) {
        auto base = base_marked(par_k, par_base == "clique"
                                           ? BaseVariant::clique
                                           : BaseVariant::clique_minus_uv);
        auto s = iterated_parallel(base, par_r);
        write_file(par_out + ".gr", write_gr(s.marked.graph));
        json sidecar{{"structure", parallel_structure_to_json(s)},
                     {"u", s.marked.u + 1},
                     {"v", s.marked.v + 1},
                     {"k", par_k},
                     {"r", par_r}};
        write_file(par_out + ".json", sidecar.dump(2) + "\n");
        std::cout << "wrote " << par_out << ".gr (" <<
            s.marked.graph.num_vertices() << " vertices) and " << par_out
                  << ".json\n";
        return 0;
    }

    if (*cmd_tower) {
        auto [h, w] = parse_scale(tower_scale);
        Graph base = parse_gr(read_file(tower_in));
        auto tg = tower_tree(base, h, w);
        write_file(tower_out + ".gr", write_gr(tg.graph));
        auto plan = tower_parameters(tower_k, base.num_vertices());
        plan.scaled = ScaledOverride{h, w};
        json sidecar{{"plan", tower_plan_to_json(plan)},
                     {"base_n", tg.base_n},
                     {"tree_index", tg.tree_index},
                     {"parent", tg.parent}};
        write_file(tower_out + ".json", sidecar.dump(2) + "\n");
        std::cout << "wrote " << tower_out << ".gr ("
                  << tg.graph.num_vertices() << " vertices) and " << tower_out
                  << ".json\n";
        return 0;
    }

    if (*cmd_strong) {
        Graph g = parse_gr(read_file(strong_in));
        MarkedGraph mg(g, strong_u - 1, strong_v - 1);
        std::optional<ParallelStructure> s;
        if (!strong_structure.empty()) {
            s = parallel_structure_from_json(
                json::parse(read_file(strong_structure)).at("structure"));
            if (s->marked != mg)
                throw domain_error(
                    "--structure sidecar does not match the input graph "
                    "and marks");
        }
        auto rep = verify_strongly_ghost_free(mg, strong_k, common.limits(),
                                              s ? &*s : nullptr,
                                              common.threads);
        emit_report(rep, common, g, strong_k, command, 0);
        return rep.all_pass() ? 0 : 1;
    }

    if (*cmd_l32) {
        json sidecar = json::parse(read_file(l32_structure));
        auto s = parallel_structure_from_json(sidecar.at("structure"));
        int failures = 0;
        long emitted = 0;
        auto run_one = [&](const Graph& t) {
            ++emitted;
            try {
                auto cert = lemma32_matching(s, t);
                verify_matching_certificate(s, t, cert);
                if (common.emit_json && emitted == 1) {
                    json payload{
                        {"structure", sidecar.at("structure")},
                        {"tree", graph_to_json(t)},
                        {"certificate", matching_certificate_to_json(cert)}};
                    std::cout << make_certificate("matching", s.marked.graph,
                                                  0, payload, command, l32_seed)
                                     .dump(2)
                              << "\n";
                }
            } catch (const internal_error& e) {
                ++failures;
                std::cout << "FAIL: " << e.what() << "\n";
            }
        };
        if (!l32_tree.empty()) {
            run_one(graph_from_json(json::parse(read_file(l32_tree))));
        } else if (l32_enumerate) {
            for_each_spanning_tree(s.marked.graph, [&](const Graph& t) {
                run_one(t);
                return true;
            });
        } else {
            if (l32_sample <= 0)
                throw CLI::ValidationError(
                    "lemma32", "need --tree, --enumerate, or --sample N");
            std::mt19937_64 rng(l32_seed);
            for (int i = 0; i < l32_sample; ++i)
                run_one(random_spanning_tree(s.marked.graph, rng));
        }
        std::cout << emitted << " certificates, " << failures << " failures\n";
        return failures == 0 ? 0 : 1;
    }

    if (*cmd_thm) {
        auto [h, w] = parse_scale(thm_scale);
        popts.scaled_height = h;
        popts.scaled_arity = w;
        popts.limits = common.limits();
        popts.threads = common.threads;
        auto rep = theorem_pipeline(popts);
        auto base = iterated_parallel(
            base_marked(popts.k, BaseVariant::clique), popts.r);
        emit_report(rep, common, base.marked.graph, popts.k, command,
                    popts.seed);
        return rep.all_pass() ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
