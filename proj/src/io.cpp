#include "mgs/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace mgs {
namespace io {

GraphDocument parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    std::vector<std::pair<int, std::pair<int, int>>> coords;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'p') {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw ParseError("graph: bad header line");
        } else if (tag == 'e') {
            int u, v;
            if (!(ls >> u >> v)) throw ParseError("graph: bad edge line");
            edges.emplace_back(u, v);
        } else if (tag == 'v') {
            int id, x, y;
            if (!(ls >> id >> x >> y)) throw ParseError("graph: bad coord line");
            coords.push_back({id, {x, y}});
        } else {
            throw ParseError("graph: unknown line tag");
        }
    }
    if (n < 0) throw ParseError("graph: missing header");
    if (int(edges.size()) != m) throw ParseError("graph: edge count mismatch");
    GraphDocument doc;
    try {
        doc.graph = Graph(n, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("graph: ") + e.what());
    }
    if (!coords.empty()) {
        if (int(coords.size()) != n)
            throw ParseError("graph: embedding must cover every vertex");
        GridEmbedding emb;
        emb.coords.resize(n);
        std::vector<char> seen(n, 0);
        for (auto& [id, xy] : coords) {
            if (id < 0 || id >= n || seen[id])
                throw ParseError("graph: bad embedding ids");
            seen[id] = 1;
            emb.coords[id] = xy;
        }
        doc.embedding = std::move(emb);
    }
    return doc;
}

std::string emit_graph(const Graph& g, const GridEmbedding* embedding) {
    std::ostringstream out;
    out << "p " << g.n() << " " << g.m() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    if (embedding) {
        for (int v = 0; v < g.n(); ++v)
            out << "v " << v << " " << embedding->coords[v].first << " "
                << embedding->coords[v].second << "\n";
    }
    return out.str();
}

IntervalRep parse_intervals(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<int, std::pair<Rational, Rational>>> rows;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        char tag;
        long long id, ln, ld, hn, hd;
        if (!(ls >> tag)) continue;
        if (tag != 'i') throw ParseError("intervals: unknown line tag");
        if (!(ls >> id >> ln >> ld >> hn >> hd))
            throw ParseError("intervals: bad line");
        if (ld <= 0 || hd <= 0) throw ParseError("intervals: bad denominator");
        rows.push_back({int(id), {Rational(ln, ld), Rational(hn, hd)}});
    }
    IntervalRep rep(rows.size());
    std::vector<char> seen(rows.size(), 0);
    for (auto& [id, iv] : rows) {
        if (id < 0 || id >= int(rows.size()) || seen[id])
            throw ParseError("intervals: ids must be dense and unique");
        if (iv.second < iv.first) throw ParseError("intervals: hi < lo");
        seen[id] = 1;
        rep[id] = iv;
    }
    return rep;
}

std::string emit_intervals(const IntervalRep& rep) {
    std::ostringstream out;
    for (size_t i = 0; i < rep.size(); ++i)
        out << "i " << i << " " << rep[i].first.num() << " "
            << rep[i].first.den() << " " << rep[i].second.num() << " "
            << rep[i].second.den() << "\n";
    return out.str();
}

std::string emit_intervals(const IntervalInstance& inst) {
    IntervalRep rep;
    rep.reserve(inst.intervals.size());
    for (const auto& iv : inst.intervals) rep.push_back({iv.lo, iv.hi});
    return emit_intervals(rep);
}

std::string emit_instance_metadata(const IntervalInstance& inst) {
    nlohmann::ordered_json doc;
    doc["n"] = inst.n;
    doc["m"] = inst.m;
    doc["epsilon"] = {inst.epsilon.num(), inst.epsilon.den()};
    doc["expected_bound"] = inst.expected_witness_bound();
    doc["counts"] = {
        {"intervals", inst.intervals.size()},
        {"tracks", inst.tracks.size()},
        {"point_intervals", inst.point_interval_count()},
    };
    nlohmann::ordered_json tracks = nlohmann::ordered_json::array();
    for (const auto& t : inst.tracks) {
        nlohmann::ordered_json tr;
        tr["members"] = t.intervals;
        tr["roots"] = t.roots;
        tracks.push_back(tr);
    }
    doc["tracks"] = tracks;
    nlohmann::ordered_json names = nlohmann::ordered_json::object();
    for (const auto& [name, id] : inst.named) names[name] = id;
    doc["names"] = names;
    return doc.dump(2) + "\n";
}

std::string emit_grid_labels(const PartialGridReduction& red) {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json labels = nlohmann::ordered_json::array();
    for (const auto& l : red.labels) labels.push_back(l);
    doc["labels"] = labels;
    return doc.dump(2) + "\n";
}

// --------------------------------------------------------------- generators

Graph random_chordal(int n, int omega, std::uint64_t seed) {
    if (n < 1 || omega < 1 || omega > n)
        throw std::invalid_argument("random_chordal: bad parameters");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    int start = std::min(omega, n);
    for (int u = 0; u < start; ++u)
        for (int v = u + 1; v < start; ++v) edges.emplace_back(u, v);

    // cliques of size omega available for attachment
    std::vector<std::vector<int>> cliques;
    std::vector<int> base(start);
    for (int i = 0; i < start; ++i) base[i] = i;
    if (start == omega) cliques.push_back(base);

    for (int v = start; v < n; ++v) {
        bool pendant = omega >= 2 && (rng() % 4 == 0);
        if (cliques.empty()) pendant = omega >= 2;
        if (pendant || omega == 1) {
            // simplicial leaf on a random existing vertex
            int u = int(rng() % v);
            edges.emplace_back(u, v);
            continue;
        }
        const auto& host = cliques[rng() % cliques.size()];
        // attach to a random (omega-1)-subset of the host clique
        std::vector<int> sub = host;
        std::shuffle(sub.begin(), sub.end(), rng);
        sub.resize(omega - 1);
        for (int u : sub) edges.emplace_back(u, v);
        sub.push_back(v);
        std::sort(sub.begin(), sub.end());
        cliques.push_back(std::move(sub));
    }
    return Graph(n, edges);
}

IntervalRep random_interval_rep(int n, std::uint64_t seed, int omega_cap) {
    if (n < 1) throw std::invalid_argument("random_interval_rep: n >= 1");
    std::mt19937_64 rng(seed);
    const int range = std::max(4, 2 * n);
    for (int attempt = 0; attempt < 10'000; ++attempt) {
        IntervalRep rep;
        for (int i = 0; i < n; ++i) {
            int a = int(rng() % (range + 1));
            int b = int(rng() % (range + 1));
            if (a > b) std::swap(a, b);
            rep.push_back({Rational(a), Rational(b)});
        }
        // clique number = max point load
        int omega = 0;
        for (const auto& [lo, hi] : rep) {
            int load = 0;
            for (const auto& [lo2, hi2] : rep)
                if (lo2 <= lo && lo <= hi2) ++load;
            omega = std::max(omega, load);
        }
        if (omega > omega_cap) continue;
        Graph g = intersection_graph([&] {
            std::vector<RInterval> ivs;
            for (auto& [lo, hi] : rep) ivs.push_back({lo, hi, ""});
            return ivs;
        }());
        if (is_connected(g)) return rep;
    }
    throw std::runtime_error("random_interval_rep: rejection limit hit");
}

SolidGridInstance random_solid_grid(int cells, std::uint64_t seed) {
    if (cells < 1) throw std::invalid_argument("random_solid_grid: cells >= 1");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 10'000; ++attempt) {
        // grow a polyomino cell by cell
        std::vector<std::pair<int, int>> cell_list{{0, 0}};
        auto has_cell = [&](int x, int y) {
            return std::find(cell_list.begin(), cell_list.end(),
                             std::make_pair(x, y)) != cell_list.end();
        };
        while (int(cell_list.size()) < cells) {
            std::vector<std::pair<int, int>> frontier;
            for (auto [x, y] : cell_list) {
                const int dx[4] = {1, -1, 0, 0};
                const int dy[4] = {0, 0, 1, -1};
                for (int d = 0; d < 4; ++d)
                    if (!has_cell(x + dx[d], y + dy[d]))
                        frontier.push_back({x + dx[d], y + dy[d]});
            }
            std::sort(frontier.begin(), frontier.end());
            frontier.erase(std::unique(frontier.begin(), frontier.end()),
                           frontier.end());
            cell_list.push_back(frontier[rng() % frontier.size()]);
        }

        // corner lattice points of the cells form the grid graph
        std::vector<std::pair<int, int>> points;
        for (auto [x, y] : cell_list)
            for (int dx = 0; dx <= 1; ++dx)
                for (int dy = 0; dy <= 1; ++dy)
                    points.push_back({x + dx, y + dy});
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
        auto point_id = [&](int x, int y) {
            auto it = std::lower_bound(points.begin(), points.end(),
                                       std::make_pair(x, y));
            if (it == points.end() || *it != std::make_pair(x, y)) return -1;
            return int(it - points.begin());
        };
        std::vector<Edge> edges;
        for (auto [x, y] : cell_list) {
            int a = point_id(x, y), b = point_id(x + 1, y);
            int c = point_id(x, y + 1), d = point_id(x + 1, y + 1);
            edges.emplace_back(a, b);
            edges.emplace_back(a, c);
            edges.emplace_back(b, d);
            edges.emplace_back(c, d);
        }
        SolidGridInstance inst;
        inst.graph = Graph(int(points.size()), edges);
        inst.embedding.coords = points;
        // holes make an interior face larger than a unit square
        if (validate_solid_grid(inst.graph, inst.embedding)) return inst;
    }
    throw std::runtime_error("random_solid_grid: rejection limit hit");
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("random_connected_graph: n >= 1");
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int attempt = 0; attempt < 100'000; ++attempt) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < p) edges.emplace_back(u, v);
        Graph g(n, edges);
        if (is_connected(g)) return g;
    }
    throw std::runtime_error("random_connected_graph: rejection limit hit");
}

} // namespace io
} // namespace mgs
