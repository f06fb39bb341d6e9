#include "grassmann/checkered.hpp"

namespace grassmann {

const char* to_string(FillVariant variant) {
    return variant == FillVariant::standard ? "standard" : "shifted";
}

FillVariant opposite(FillVariant variant) {
    return variant == FillVariant::standard ? FillVariant::shifted : FillVariant::standard;
}

CheckeredDiagram checkered_fill(const Partition& p, const GrassmannShape& shape,
                                FillVariant variant) {
    require_valid(p, shape);
    CheckeredDiagram diagram{p, variant, {}, 0};
    diagram.letters.reserve(p.rows.size());
    for (int r = 1; r <= shape.k; ++r) {
        std::vector<Letter> row;
        row.reserve(static_cast<size_t>(p.row(r)));
        for (int c = 1; c <= p.row(r); ++c) {
            bool is_q = box_carries_q(r, c, shape, variant);
            row.push_back(is_q ? Letter::q : Letter::one);
            if (is_q) diagram.eta++;
        }
        diagram.letters.push_back(std::move(row));
    }
    return diagram;
}

int eta(const Partition& p, const GrassmannShape& shape) {
    require_valid(p, shape);
    int count = 0;
    for (int r = 1; r <= shape.k; ++r)
        for (int c = 1; c <= p.row(r); ++c)
            if (box_carries_q(r, c, shape, FillVariant::standard)) ++count;

    int closed = 0;
    for (int j = 1; j <= shape.k; ++j) {
        int sigma = (shape.k - j) % 2 == 0 ? 1 : 0;
        closed += (p.row(j) + sigma) / 2;
    }

    if (count != closed)
        throw falsification_error("eta mismatch for " + to_string(p) + ": box count " +
                                  std::to_string(count) + " vs closed form " +
                                  std::to_string(closed));
    return count;
}

int eta_star(const Partition& p, const GrassmannShape& shape) {
    return p.size() - eta(p, shape);
}

int checkered_weight(const Partition& p, const GrassmannShape& shape, FillVariant variant) {
    return variant == FillVariant::standard ? eta(p, shape) : eta_star(p, shape);
}

}  // namespace grassmann
