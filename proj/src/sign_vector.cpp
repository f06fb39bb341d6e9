#include "grassmann/sign_vector.hpp"

#include <stdexcept>

namespace grassmann {

std::string to_string(const SignVector& eps) {
    std::string out = "(";
    for (size_t i = 0; i < eps.signs.size(); ++i) {
        if (i > 0) out += ",";
        out += eps.signs[i] > 0 ? "+" : "-";
    }
    out += ")";
    return out;
}

SignVector sign_action(int i, const SignVector& eps) {
    const int len = static_cast<int>(eps.signs.size());
    if (i < 1 || i > len)
        throw std::out_of_range("reflection index " + std::to_string(i) + " outside 1.." +
                                std::to_string(len));
    SignVector out = eps;
    if (eps.signs[static_cast<size_t>(i) - 1] < 0) {
        if (i >= 2) out.signs[static_cast<size_t>(i) - 2] *= -1;
        if (i < len) out.signs[static_cast<size_t>(i)] *= -1;
    }
    return out;
}

bool sign_letter_acts(int i, const SignVector& eps) {
    const int len = static_cast<int>(eps.signs.size());
    if (i < 1 || i > len)
        throw std::out_of_range("reflection index " + std::to_string(i) + " outside 1.." +
                                std::to_string(len));
    return eps.signs[static_cast<size_t>(i) - 1] < 0;
}

SignVector epsilon_start(const GrassmannShape& shape, FillVariant variant) {
    SignVector eps;
    eps.signs.assign(static_cast<size_t>(shape.n) - 1, -1);
    if (variant == FillVariant::shifted) eps.signs[static_cast<size_t>(shape.k) - 1] = 1;
    return eps;
}

EtaHatTrace eta_hat(const Partition& p, const GrassmannShape& shape, FillVariant variant,
                    const std::optional<std::vector<int>>& word) {
    require_valid(p, shape);
    EtaHatTrace trace;
    trace.word = word ? *word : canonical_reduced_word(p, shape);
    trace.start = epsilon_start(shape, variant);

    Partition current = empty_partition(shape);
    SignVector eps = trace.start;
    for (int letter : trace.word) {
        auto next = apply_reflection(current, letter, shape);
        if (!next)
            throw std::invalid_argument("word leaves the lattice at letter s_" +
                                        std::to_string(letter) + " from " + to_string(current));
        current = std::move(*next);
        if (sign_letter_acts(letter, eps)) ++trace.eta_hat;
        eps = sign_action(letter, eps);
    }
    if (!(current == p))
        throw std::invalid_argument("word ends at " + to_string(current) + ", expected " +
                                    to_string(p));
    trace.end = std::move(eps);
    return trace;
}

}  // namespace grassmann
