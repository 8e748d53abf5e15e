#include "mbcp/instance_gen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace mbcp {

void GenConfig::validate() const {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (m < 3) throw std::invalid_argument("M must be at least 3");
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    if (!(delta >= 1.0)) throw std::invalid_argument("delta must be at least 1");
    if (!(gamma >= 0.0)) throw std::invalid_argument("gamma must be non-negative");
    if (position_trials < 1 || block_attempts < 1 || placement_restarts < 1 || shrink_every < 1)
        throw std::invalid_argument("generation budgets must be positive");
    if (!(shrink_factor > 0.0 && shrink_factor <= 1.0))
        throw std::invalid_argument("shrink_factor must lie in (0, 1]");
}

double GenConfig::radius() const {
    return 1.0 / std::sqrt(alpha * static_cast<double>(n) * static_cast<double>(m));
}

namespace {

double sq(double v) { return v * v; }

// Trims a bi-connected node set to `target` nodes, dropping the node farthest
// from the centroid whose removal keeps the rest bi-connected.
bool trim_to(const Graph& g, std::span<const Point> pts, std::vector<NodeId>& nodes, std::size_t target) {
    while (nodes.size() > target) {
        double cx = 0.0, cy = 0.0;
        for (NodeId v : nodes) {
            cx += pts[v].x;
            cy += pts[v].y;
        }
        cx /= static_cast<double>(nodes.size());
        cy /= static_cast<double>(nodes.size());
        std::vector<NodeId> order = nodes;
        std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
            return sq(pts[a].x - cx) + sq(pts[a].y - cy) > sq(pts[b].x - cx) + sq(pts[b].y - cy);
        });
        bool removed = false;
        std::vector<NodeId> rest;
        for (NodeId v : order) {
            rest.clear();
            for (NodeId w : nodes)
                if (w != v) rest.push_back(w);
            if (is_biconnected(g, rest)) {
                nodes.swap(rest);
                removed = true;
                break;
            }
        }
        if (!removed) return false;
    }
    return true;
}

// Uniform grid over the unit square with cell side >= radius.
class PointGrid {
public:
    explicit PointGrid(double radius) {
        cells_ = std::max(1, static_cast<int>(std::floor(1.0 / radius)));
        buckets_.resize(static_cast<std::size_t>(cells_) * cells_);
    }
    void insert(const Point& p, NodeId id) { buckets_[index(cell(p.x), cell(p.y))].push_back(id); }

    template <class F>
    void near(const Point& p, F&& visit) const {
        const int cx = cell(p.x), cy = cell(p.y);
        for (int x = std::max(0, cx - 1); x <= std::min(cells_ - 1, cx + 1); ++x)
            for (int y = std::max(0, cy - 1); y <= std::min(cells_ - 1, cy + 1); ++y)
                for (NodeId id : buckets_[index(x, y)]) visit(id);
    }

private:
    int cell(double c) const { return std::clamp(static_cast<int>(c * cells_), 0, cells_ - 1); }
    std::size_t index(int x, int y) const { return static_cast<std::size_t>(x) * cells_ + y; }
    int cells_ = 1;
    std::vector<std::vector<NodeId>> buckets_;
};

}  // namespace

Block generate_block(const GenConfig& cfg, Rng& rng, double start_scale) {
    cfg.validate();
    const double d = cfg.radius();
    const double rs = std::sqrt(static_cast<double>(cfg.n));
    const std::size_t target = static_cast<std::size_t>(cfg.m);
    const std::size_t count = static_cast<std::size_t>(std::ceil(cfg.m * cfg.delta - 1e-9));
    const std::size_t forced = std::min<std::size_t>(4, count / 4);
    const double r_lo = std::max(0.5, 1.0 / rs);

    double scale = start_scale;
    std::vector<Point> pts(count);
    for (int attempt = 1; attempt <= cfg.block_attempts; ++attempt) {
        const double shape = r_lo < 1.0 ? rng.uniform(r_lo, 1.0) : 1.0;
        const double w = scale / (rs * shape);
        const double h = scale * shape / rs;
        std::size_t k = 0;
        for (int side = 0; side < 4; ++side)
            for (std::size_t f = 0; f < forced; ++f, ++k) {
                switch (side) {
                    case 0: pts[k] = {rng.uniform(0.0, w), 0.0}; break;
                    case 1: pts[k] = {rng.uniform(0.0, w), h}; break;
                    case 2: pts[k] = {0.0, rng.uniform(0.0, h)}; break;
                    default: pts[k] = {w, rng.uniform(0.0, h)}; break;
                }
            }
        for (; k < count; ++k) pts[k] = {rng.uniform(0.0, w), rng.uniform(0.0, h)};

        Graph cloud = unit_disc_graph(pts, d);
        std::vector<NodeId> all(count);
        std::iota(all.begin(), all.end(), 0);
        auto blocks = biconnected_components(cloud, all);
        auto best = std::max_element(blocks.begin(), blocks.end(),
                                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
        std::vector<NodeId> chosen;
        if (best != blocks.end() && best->size() >= target) {
            chosen = *best;
            if (!trim_to(cloud, pts, chosen, target)) chosen.clear();
        }
        if (chosen.empty()) {
            if (attempt % cfg.shrink_every == 0) scale *= cfg.shrink_factor;
            continue;
        }

        // Trimming may leave part of the box empty; keep the tight box so
        // placement is not limited by unused area.
        double min_x = w, min_y = h, max_x = 0.0, max_y = 0.0;
        for (NodeId v : chosen) {
            min_x = std::min(min_x, pts[v].x);
            min_y = std::min(min_y, pts[v].y);
            max_x = std::max(max_x, pts[v].x);
            max_y = std::max(max_y, pts[v].y);
        }
        Block block;
        block.width = max_x - min_x;
        block.height = max_y - min_y;
        block.scale = scale;
        block.attempts = attempt;
        for (NodeId v : chosen) block.points.push_back({pts[v].x - min_x, pts[v].y - min_y});
        block.graph = unit_disc_graph(block.points, d);
        block.root = static_cast<NodeId>(rng.below(target));
        return block;
    }
    throw GenerationError("no bi-connected block of " + std::to_string(cfg.m) + " nodes after " +
                          std::to_string(cfg.block_attempts) + " attempts");
}

int min_connections(const GenConfig& cfg, std::size_t block_edges) {
    return std::max(3, static_cast<int>(std::ceil(cfg.gamma * static_cast<double>(block_edges) - 1e-9)));
}

Solution GeneratedInstance::certificate() const {
    Solution s;
    s.assignment = block_membership;
    s.objective = s.count_assigned();
    return s;
}

GeneratedInstance assemble_instance(const std::vector<Block>& blocks, const GenConfig& cfg, Rng& rng) {
    cfg.validate();
    if (blocks.size() != static_cast<std::size_t>(cfg.n))
        throw std::invalid_argument("expected " + std::to_string(cfg.n) + " blocks");
    const double d = cfg.radius();
    const double d2 = d * d;

    std::vector<Point> placed;
    std::vector<std::int32_t> owner;
    std::vector<NodeId> roots;
    std::vector<int> degree;
    std::vector<int> cross_counts;
    PointGrid grid(d);
    int max_degree = 0;

    auto commit = [&](const Block& b, double ox, double oy) {
        const NodeId base = static_cast<NodeId>(placed.size());
        for (std::size_t k = 0; k < b.points.size(); ++k) {
            Point p{std::min(1.0, b.points[k].x + ox), std::min(1.0, b.points[k].y + oy)};
            placed.push_back(p);
            owner.push_back(static_cast<std::int32_t>(roots.size()));
            degree.push_back(static_cast<int>(b.graph.degree(static_cast<NodeId>(k))));
        }
        for (std::size_t k = 0; k < b.points.size(); ++k) {
            const NodeId id = base + static_cast<NodeId>(k);
            grid.near(placed[id], [&](NodeId other) {
                if (sq(placed[other].x - placed[id].x) + sq(placed[other].y - placed[id].y) <= d2) {
                    ++degree[other];
                    ++degree[id];
                }
            });
            grid.insert(placed[id], id);
        }
        // Internal pairs were counted twice by the grid scan above.
        for (std::size_t k = 0; k < b.points.size(); ++k)
            degree[base + static_cast<NodeId>(k)] -= static_cast<int>(b.graph.degree(static_cast<NodeId>(k)));
        for (int deg : degree) max_degree = std::max(max_degree, deg);
        roots.push_back(base + b.root);
    };

    auto internal_edges_kept = [&](const Block& b, double ox, double oy) {
        std::vector<Point> moved(b.points.size());
        for (std::size_t k = 0; k < moved.size(); ++k)
            moved[k] = {std::min(1.0, b.points[k].x + ox), std::min(1.0, b.points[k].y + oy)};
        return unit_disc_graph(moved, d).edges() == b.graph.edges();
    };

    {
        const Block& b0 = blocks[0];
        double ox = 0.0, oy = 0.0;
        bool ok = false;
        for (int t = 0; t < cfg.position_trials * cfg.placement_restarts && !ok; ++t) {
            ox = rng.uniform(0.0, std::max(0.0, 1.0 - b0.width));
            oy = rng.uniform(0.0, std::max(0.0, 1.0 - b0.height));
            ok = internal_edges_kept(b0, ox, oy);
        }
        if (!ok) throw GenerationError("block 0 cannot be placed without changing its edges");
        commit(b0, ox, oy);
        cross_counts.push_back(0);
    }

    std::vector<int> touched_count;
    std::vector<NodeId> touched;
    for (std::size_t i = 1; i < blocks.size(); ++i) {
        const Block& b = blocks[i];
        const int need = min_connections(cfg, b.graph.edge_count());
        touched_count.assign(placed.size(), 0);
        bool found = false;
        double best_ox = 0.0, best_oy = 0.0;
        int best_max = std::numeric_limits<int>::max();
        int best_cross = 0;
        for (int restart = 0; restart < cfg.placement_restarts && !found; ++restart) {
            for (int t = 0; t < cfg.position_trials; ++t) {
                const double ox = rng.uniform(0.0, std::max(0.0, 1.0 - b.width));
                const double oy = rng.uniform(0.0, std::max(0.0, 1.0 - b.height));
                int cross = 0;
                int local_max = 0;
                touched.clear();
                for (std::size_t k = 0; k < b.points.size(); ++k) {
                    Point p{std::min(1.0, b.points[k].x + ox), std::min(1.0, b.points[k].y + oy)};
                    int mine = static_cast<int>(b.graph.degree(static_cast<NodeId>(k)));
                    grid.near(p, [&](NodeId other) {
                        if (sq(placed[other].x - p.x) + sq(placed[other].y - p.y) <= d2) {
                            ++cross;
                            ++mine;
                            if (touched_count[other]++ == 0) touched.push_back(other);
                        }
                    });
                    local_max = std::max(local_max, mine);
                }
                int merged_max = std::max(max_degree, local_max);
                for (NodeId v : touched) {
                    merged_max = std::max(merged_max, degree[v] + touched_count[v]);
                    touched_count[v] = 0;
                }
                if (cross < need || merged_max >= best_max) continue;
                if (!internal_edges_kept(b, ox, oy)) continue;
                found = true;
                best_max = merged_max;
                best_ox = ox;
                best_oy = oy;
                best_cross = cross;
            }
        }
        if (!found)
            throw GenerationError("block " + std::to_string(i) + " found no position with " +
                                  std::to_string(need) + " cross edges");
        commit(b, best_ox, best_oy);
        cross_counts.push_back(best_cross);
    }

    // Random relabeling: new id perm[k] for placed node k.
    const std::size_t total = placed.size();
    std::vector<NodeId> perm(total);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm.begin(), perm.end());
    std::vector<Point> coords(total);
    GeneratedInstance out;
    out.block_membership.assign(total, kUnassigned);
    for (std::size_t k = 0; k < total; ++k) {
        coords[perm[k]] = placed[k];
        out.block_membership[perm[k]] = owner[k];
    }
    out.instance.graph = unit_disc_graph(coords, d);
    for (NodeId r : roots) out.instance.roots.push_back(perm[r]);
    out.instance.capacity = cfg.m;
    out.instance.known_optimum = static_cast<std::int64_t>(cfg.n) * cfg.m;
    out.instance.meta = InstanceMeta{cfg.alpha, cfg.seed, d};
    out.placement_cross_edges = std::move(cross_counts);

    auto members = out.certificate().members(roots.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        if (!is_biconnected(out.instance.graph, members[i]))
            throw GenerationError("block " + std::to_string(i) + " lost bi-connectivity after assembly");
    return out;
}

GeneratedInstance generate_instance(const GenConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    std::vector<Block> blocks;
    double scale = 1.0;
    for (int i = 0; i < cfg.n; ++i) {
        blocks.push_back(generate_block(cfg, rng, scale));
        scale = blocks.back().scale;
    }
    return assemble_instance(blocks, cfg, rng);
}

ReducedInstance reduce_mpgsd_star(int sup, std::span<const int> demands) {
    if (sup < 1) throw std::invalid_argument("sup must be positive");
    if (demands.empty()) throw std::invalid_argument("demands must be nonempty");
    for (int dem : demands)
        if (dem < 1) throw std::invalid_argument("demands must be positive");

    const NodeId r = 0, s = 1, e = 2;
    std::vector<Edge> edges{{r, s}, {r, e}};
    NodeId next = 3;
    for (int dem : demands) {
        NodeId prev = s;
        for (int k = 0; k < dem; ++k) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(e, prev);
    }
    ReducedInstance out;
    out.instance.graph = build_graph(static_cast<std::size_t>(next), edges);
    out.instance.roots = {r};
    out.instance.capacity = sup + 3;

    std::vector<char> reachable(static_cast<std::size_t>(sup) + 1, 0);
    reachable[0] = 1;
    for (int dem : demands)
        for (int t = sup; t >= dem; --t)
            if (reachable[t - dem]) reachable[t] = 1;
    int best = 0;
    for (int t = sup; t > 0; --t)
        if (reachable[t]) {
            best = t;
            break;
        }
    out.oracle_value = best > 0 ? 3 + best : 1;
    out.instance.validate();
    return out;
}

}  // namespace mbcp
