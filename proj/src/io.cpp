#include "tw/io.hpp"

#include <fstream>
#include <sstream>

namespace tw {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw domain_error("parse error at line " + std::to_string(line) + ": " +
                       what);
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

int to_int(const std::string& s, int line) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        parse_fail(line, "expected integer, got '" + s + "'");
    }
}

}  // namespace

Graph parse_gr(const std::string& text) {
    std::istringstream ss(text);
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<VertexPair> edges;
    while (std::getline(ss, line)) {
        ++lineno;
        auto tok = tokens(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (n >= 0) parse_fail(lineno, "duplicate problem line");
            if (tok.size() != 4 || tok[1] != "tw")
                parse_fail(lineno, "expected 'p tw <n> <m>'");
            n = to_int(tok[2], lineno);
            m = to_int(tok[3], lineno);
            continue;
        }
        if (n < 0) parse_fail(lineno, "edge before problem line");
        if (tok.size() != 2) parse_fail(lineno, "expected '<a> <b>'");
        int a = to_int(tok[0], lineno), b = to_int(tok[1], lineno);
        if (a < 1 || a > n || b < 1 || b > n)
            parse_fail(lineno, "vertex id out of range");
        edges.emplace_back(a - 1, b - 1);
    }
    if (n < 0) throw domain_error("parse error: missing problem line");
    if (static_cast<int>(edges.size()) != m)
        throw domain_error("parse error: header claims " + std::to_string(m) +
                           " edges, found " + std::to_string(edges.size()));
    return Graph(n, edges);
}

std::string write_gr(const Graph& g) {
    std::ostringstream out;
    out << "p tw " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (auto [a, b] : g.edges()) out << a + 1 << " " << b + 1 << "\n";
    return out.str();
}

TreeDecomposition parse_td(const std::string& text, int* graph_n) {
    std::istringstream ss(text);
    std::string line;
    int lineno = 0;
    int bags = -1, maxbag = -1, n = -1;
    std::vector<std::vector<Vertex>> bag_list;
    std::vector<VertexPair> tree_edges;
    while (std::getline(ss, line)) {
        ++lineno;
        auto tok = tokens(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "s") {
            if (bags >= 0) parse_fail(lineno, "duplicate solution line");
            if (tok.size() != 5 || tok[1] != "td")
                parse_fail(lineno, "expected 's td <#bags> <max size> <n>'");
            bags = to_int(tok[2], lineno);
            maxbag = to_int(tok[3], lineno);
            n = to_int(tok[4], lineno);
            bag_list.assign(bags, {});
            continue;
        }
        if (bags < 0) parse_fail(lineno, "content before solution line");
        if (tok[0] == "b") {
            if (tok.size() < 2) parse_fail(lineno, "bag line without id");
            int id = to_int(tok[1], lineno);
            if (id < 1 || id > bags) parse_fail(lineno, "bag id out of range");
            for (std::size_t i = 2; i < tok.size(); ++i) {
                int v = to_int(tok[i], lineno);
                if (v < 1 || v > n)
                    parse_fail(lineno, "bag vertex out of range");
                bag_list[id - 1].push_back(v - 1);
            }
            continue;
        }
        if (tok.size() != 2) parse_fail(lineno, "expected tree edge '<i> <j>'");
        int a = to_int(tok[0], lineno), b = to_int(tok[1], lineno);
        if (a < 1 || a > bags || b < 1 || b > bags)
            parse_fail(lineno, "tree node id out of range");
        tree_edges.emplace_back(a - 1, b - 1);
    }
    if (bags < 0) throw domain_error("parse error: missing solution line");
    TreeDecomposition d;
    d.tree = Graph(bags, tree_edges);
    for (auto& bag : bag_list) std::sort(bag.begin(), bag.end());
    d.bags = std::move(bag_list);
    if (width(d) + 1 > maxbag)
        throw domain_error("parse error: bag larger than declared maximum");
    if (graph_n) *graph_n = n;
    return d;
}

std::string write_td(const TreeDecomposition& d, int graph_n) {
    std::ostringstream out;
    out << "s td " << d.bags.size() << " " << width(d) + 1 << " " << graph_n
        << "\n";
    for (std::size_t i = 0; i < d.bags.size(); ++i) {
        out << "b " << i + 1;
        for (Vertex v : d.bags[i]) out << " " << v + 1;
        out << "\n";
    }
    for (auto [a, b] : d.tree.edges()) out << a + 1 << " " << b + 1 << "\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw domain_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw domain_error("cannot write file: " + path);
    out << content;
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    return json{{"n", g.num_vertices()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    std::vector<VertexPair> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Graph(j.at("n").get<int>(), edges);
}

json marked_graph_to_json(const MarkedGraph& mg) {
    json j = graph_to_json(mg.graph);
    j["u"] = mg.u;
    j["v"] = mg.v;
    return j;
}

MarkedGraph marked_graph_from_json(const json& j) {
    return MarkedGraph(graph_from_json(j), j.at("u").get<int>(),
                       j.at("v").get<int>());
}

json decomposition_to_json(const TreeDecomposition& d) {
    json tree_edges = json::array();
    for (auto [a, b] : d.tree.edges()) tree_edges.push_back({a, b});
    return json{{"nodes", d.tree.num_vertices()},
                {"tree_edges", tree_edges},
                {"bags", d.bags}};
}

TreeDecomposition decomposition_from_json(const json& j) {
    TreeDecomposition d;
    std::vector<VertexPair> edges;
    for (const auto& e : j.at("tree_edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    d.tree = Graph(j.at("nodes").get<int>(), edges);
    d.bags = j.at("bags").get<std::vector<std::vector<Vertex>>>();
    for (auto& bag : d.bags) std::sort(bag.begin(), bag.end());
    return d;
}

json parallel_structure_to_json(const ParallelStructure& s) {
    json j;
    j["level"] = s.level;
    j["marked"] = marked_graph_to_json(s.marked);
    if (s.level > 0) {
        j["left"] = parallel_structure_to_json(*s.left);
        j["right"] = parallel_structure_to_json(*s.right);
        j["left_map"] = s.left_map;
        j["right_map"] = s.right_map;
    }
    return j;
}

ParallelStructure parallel_structure_from_json(const json& j) {
    ParallelStructure s;
    s.level = j.at("level").get<int>();
    s.marked = marked_graph_from_json(j.at("marked"));
    if (s.level > 0) {
        s.left = std::make_shared<const ParallelStructure>(
            parallel_structure_from_json(j.at("left")));
        s.right = std::make_shared<const ParallelStructure>(
            parallel_structure_from_json(j.at("right")));
        s.left_map = j.at("left_map").get<std::vector<Vertex>>();
        s.right_map = j.at("right_map").get<std::vector<Vertex>>();
    }
    check_structure(s);
    return s;
}

json tower_plan_to_json(const TowerPlan& p) {
    auto values = [](const std::vector<BigValue>& vs) {
        json arr = json::array();
        for (const auto& v : vs)
            arr.push_back(json{{"exact", v.exact}, {"value", v.str()}});
        return arr;
    };
    json j;
    j["k"] = p.k;
    j["n"] = p.n;
    j["heights"] = values(p.heights);
    j["arities"] = values(p.arities);
    j["tree_sizes"] = values(p.tree_sizes);
    if (p.scaled)
        j["scaled"] = json{{"height", p.scaled->height},
                           {"arity", p.scaled->arity}};
    return j;
}

json matching_certificate_to_json(const MatchingCertificate& c) {
    auto pairs = [](const std::vector<VertexPair>& es) {
        json arr = json::array();
        for (auto [a, b] : es) arr.push_back({a, b});
        return arr;
    };
    return json{{"matching", pairs(c.matching)},
                {"path", c.path},
                {"common_vertices", c.common_vertices},
                {"common_path_edges", pairs(c.common_path_edges)}};
}

MatchingCertificate matching_certificate_from_json(const json& j) {
    auto pairs = [](const json& arr) {
        std::vector<VertexPair> out;
        for (const auto& e : arr)
            out.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return out;
    };
    MatchingCertificate c;
    c.matching = pairs(j.at("matching"));
    c.path = j.at("path").get<std::vector<Vertex>>();
    c.common_vertices = j.at("common_vertices").get<std::vector<Vertex>>();
    c.common_path_edges = pairs(j.at("common_path_edges"));
    return c;
}

json report_to_json(const VerificationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(json{{"name", c.name},
                              {"pass", c.pass},
                              {"detail", c.detail},
                              {"millis", static_cast<long>(c.seconds * 1000)}});
    return json{{"subject", r.subject},
                {"checks", checks},
                {"all_pass", r.all_pass()}};
}

json make_certificate(const std::string& kind, const Graph& g, int k,
                      json payload, const std::string& command,
                      std::uint64_t seed) {
    return json{{"schema", kCertificateSchemaVersion},
                {"kind", kind},
                {"k", k},
                {"graph", graph_to_json(g)},
                {"payload", std::move(payload)},
                {"provenance", json{{"command", command},
                                    {"seed", seed},
                                    {"version", kToolVersion}}}};
}

void check_certificate(const json& cert) {
    if (cert.at("schema").get<int>() != kCertificateSchemaVersion)
        throw domain_error("unknown certificate schema version");
    const std::string kind = cert.at("kind").get<std::string>();
    Graph g = graph_from_json(cert.at("graph"));
    const json& payload = cert.at("payload");
    if (kind == "decomposition") {
        TreeDecomposition d = decomposition_from_json(payload.at("td"));
        auto res = validate(g, d);
        if (!res)
            throw domain_error("certificate decomposition invalid: " +
                               res.violation);
        if (width(d) != payload.at("width").get<int>())
            throw domain_error("certificate width mismatch");
    } else if (kind == "matching") {
        ParallelStructure s =
            parallel_structure_from_json(payload.at("structure"));
        if (s.marked.graph != g)
            throw domain_error("certificate graph/structure mismatch");
        Graph t = graph_from_json(payload.at("tree"));
        MatchingCertificate mc =
            matching_certificate_from_json(payload.at("certificate"));
        try {
            verify_matching_certificate(s, t, mc);
        } catch (const internal_error& e) {
            throw domain_error(std::string("matching certificate rejected: ") +
                               e.what());
        }
    } else if (kind == "report") {
        bool claimed = payload.at("all_pass").get<bool>();
        bool actual = true;
        for (const auto& c : payload.at("checks"))
            actual = actual && c.at("pass").get<bool>();
        if (claimed != actual)
            throw domain_error("report verdict inconsistent with its checks");
    } else {
        throw domain_error("unknown certificate kind: " + kind);
    }
}

}  // namespace tw
