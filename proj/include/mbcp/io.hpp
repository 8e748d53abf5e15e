#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "mbcp/graph.hpp"
#include "mbcp/solution.hpp"

namespace mbcp {

using json = nlohmann::json;

/// Canonical instance document:
///   {"nodes":[{"id":0,"x":..,"y":..},..], "edges":[[u,v],..], "roots":[..],
///    "capacity":M, "optimum":opt, "meta":{"alpha":..,"seed":..,"radius":..}}
/// Edges are written in graph insertion order with u < v so that a reload
/// reproduces the same neighbor order.
json instance_to_json(const Instance& instance);
Instance instance_from_json(const json& doc);

/// {"assignment":[..], "objective":N, "seed":S}; -1 marks an unassigned node.
json solution_to_json(const Solution& solution, std::optional<std::uint64_t> seed = std::nullopt);
Solution solution_from_json(const json& doc);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& doc);

Instance read_instance(const std::filesystem::path& path);
void write_instance(const std::filesystem::path& path, const Instance& instance);

}  // namespace mbcp
