#include "mbcp/io.hpp"

#include <fstream>
#include <stdexcept>

namespace mbcp {

json instance_to_json(const Instance& instance) {
    const Graph& g = instance.graph;
    json nodes = json::array();
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        json node = {{"id", i}};
        if (g.has_coords()) {
            node["x"] = g.coords()[i].x;
            node["y"] = g.coords()[i].y;
        }
        nodes.push_back(std::move(node));
    }
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});

    json doc = {{"nodes", std::move(nodes)},
                {"edges", std::move(edges)},
                {"roots", instance.roots},
                {"capacity", instance.capacity}};
    if (instance.known_optimum) doc["optimum"] = *instance.known_optimum;
    if (instance.meta) {
        json meta = {{"alpha", instance.meta->alpha}, {"seed", instance.meta->seed}};
        if (instance.meta->radius) meta["radius"] = *instance.meta->radius;
        doc["meta"] = std::move(meta);
    }
    return doc;
}

Instance instance_from_json(const json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("instance document must be a JSON object");
    const auto& nodes = doc.at("nodes");
    const std::size_t n = nodes.size();
    std::vector<Point> coords(n);
    std::vector<char> seen(n, 0);
    std::size_t with_coords = 0;
    for (const auto& node : nodes) {
        auto id = node.at("id").get<std::int64_t>();
        if (id < 0 || static_cast<std::size_t>(id) >= n)
            throw std::invalid_argument("node ids must be 0..nodeCount-1");
        if (seen[id]++) throw std::invalid_argument("node id listed twice: " + std::to_string(id));
        if (node.contains("x") != node.contains("y"))
            throw std::invalid_argument("node " + std::to_string(id) + " has only one coordinate");
        if (node.contains("x")) {
            coords[id] = {node["x"].get<double>(), node["y"].get<double>()};
            ++with_coords;
        }
    }
    if (with_coords != 0 && with_coords != n)
        throw std::invalid_argument("either all nodes or none carry coordinates");

    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edges must be [u, v] pairs");
        edges.emplace_back(e[0].get<NodeId>(), e[1].get<NodeId>());
    }

    Instance inst;
    inst.graph = build_graph(n, edges);
    if (with_coords == n && n > 0) inst.graph = attach_coords(std::move(inst.graph), coords);
    inst.roots = doc.at("roots").get<std::vector<NodeId>>();
    inst.capacity = doc.at("capacity").get<int>();
    if (doc.contains("optimum") && !doc["optimum"].is_null())
        inst.known_optimum = doc["optimum"].get<std::int64_t>();
    if (doc.contains("meta") && doc["meta"].is_object()) {
        const auto& m = doc["meta"];
        InstanceMeta meta;
        meta.alpha = m.value("alpha", 0.0);
        meta.seed = m.value("seed", std::uint64_t{0});
        if (m.contains("radius")) meta.radius = m["radius"].get<double>();
        inst.meta = meta;
    }
    inst.validate();
    return inst;
}

json solution_to_json(const Solution& solution, std::optional<std::uint64_t> seed) {
    json doc = {{"assignment", solution.assignment}, {"objective", solution.objective}};
    if (seed) doc["seed"] = *seed;
    return doc;
}

Solution solution_from_json(const json& doc) {
    Solution s;
    s.assignment = doc.at("assignment").get<std::vector<std::int32_t>>();
    s.objective = s.count_assigned();
    if (doc.contains("objective") && doc["objective"].get<std::int64_t>() != s.objective)
        throw std::invalid_argument("solution objective does not match its assignment");
    return s;
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return json::parse(in);
}

void write_json_file(const std::filesystem::path& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << doc.dump() << '\n';
}

Instance read_instance(const std::filesystem::path& path) {
    return instance_from_json(read_json_file(path));
}

void write_instance(const std::filesystem::path& path, const Instance& instance) {
    write_json_file(path, instance_to_json(instance));
}

}  // namespace mbcp
