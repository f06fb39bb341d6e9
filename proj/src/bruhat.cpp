#include "grassmann/bruhat.hpp"

#include <algorithm>
#include <stdexcept>

namespace grassmann {

int BruhatGraph::index_in_level(const Partition& p) const {
    const auto& lvl = levels[static_cast<size_t>(p.size())];
    auto it = std::lower_bound(lvl.begin(), lvl.end(), p);
    if (it == lvl.end() || !(*it == p))
        throw std::invalid_argument("partition " + to_string(p) + " is not a cell of this graph");
    return static_cast<int>(it - lvl.begin());
}

std::vector<int> addable_rows(const Partition& p, const GrassmannShape& shape) {
    std::vector<int> out;
    for (int r = 1; r <= shape.k; ++r) {
        int len = p.row(r);
        if (len >= shape.box_width()) continue;
        if (r < shape.k && len >= p.row(r + 1)) continue;
        out.push_back(r);
    }
    return out;
}

BruhatGraph build_bruhat_graph(const GrassmannShape& shape, int capacity) {
    shape.require_within(capacity, "build_bruhat_graph");
    BruhatGraph graph{shape, {}, {}, {}};
    const int dim = shape.dimension();
    graph.levels.reserve(static_cast<size_t>(dim) + 1);
    for (int degree = 0; degree <= dim; ++degree)
        graph.levels.push_back(enumerate_cells(shape, degree));

    for (int degree = 0; degree < dim; ++degree) {
        const auto& sources = graph.levels[static_cast<size_t>(degree)];
        const auto& targets = graph.levels[static_cast<size_t>(degree) + 1];
        for (size_t si = 0; si < sources.size(); ++si) {
            const Partition& source = sources[si];
            for (int r : addable_rows(source, shape)) {
                Partition target = source;
                target.rows[static_cast<size_t>(r) - 1]++;
                auto it = std::lower_bound(targets.begin(), targets.end(), target);
                int ti = static_cast<int>(it - targets.begin());
                int col = source.row(r) + 1;
                graph.edges.push_back(CoverEdge{source, target, r, col, r + col - 1});
                graph.edge_refs.push_back(EdgeRef{degree, static_cast<int>(si), ti});
            }
        }
    }
    return graph;
}

std::optional<Partition> apply_reflection(const Partition& p, int v, const GrassmannShape& shape) {
    // r + row-length(r) is strictly increasing in r, so at most one row matches.
    for (int r = 1; r <= shape.k; ++r) {
        if (r + p.row(r) != v) continue;
        if (p.row(r) >= shape.box_width()) return std::nullopt;
        if (r < shape.k && p.row(r) >= p.row(r + 1)) return std::nullopt;
        Partition next = p;
        next.rows[static_cast<size_t>(r) - 1]++;
        return next;
    }
    return std::nullopt;
}

std::vector<int> canonical_reduced_word(const Partition& p, const GrassmannShape& shape) {
    require_valid(p, shape);
    std::vector<int> word;
    word.reserve(static_cast<size_t>(p.size()));
    for (int r = shape.k; r >= 1; --r)
        for (int c = 1; c <= p.row(r); ++c) word.push_back(r + c - 1);
    return word;
}

namespace {

void chains(Partition& current, const Partition& target, const GrassmannShape& shape,
            std::vector<int>& word, int limit, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(out.size()) >= limit) return;
    if (static_cast<int>(word.size()) == target.size()) {
        out.push_back(word);
        return;
    }
    // Top row first so the canonical chain is emitted first.
    for (int r = shape.k; r >= 1; --r) {
        int len = current.row(r);
        if (len >= target.row(r)) continue;
        if (r < shape.k && len >= current.row(r + 1)) continue;
        current.rows[static_cast<size_t>(r) - 1]++;
        word.push_back(r + len);
        chains(current, target, shape, word, limit, out);
        word.pop_back();
        current.rows[static_cast<size_t>(r) - 1]--;
    }
}

}  // namespace

std::vector<std::vector<int>> lattice_paths(const Partition& p, const GrassmannShape& shape,
                                            int limit) {
    require_valid(p, shape);
    if (limit < 1) throw std::invalid_argument("lattice_paths limit must be positive");
    std::vector<std::vector<int>> out;
    std::vector<int> word;
    Partition current = empty_partition(shape);
    chains(current, p, shape, word, limit, out);
    return out;
}

}  // namespace grassmann
