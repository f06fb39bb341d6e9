#pragma once

#include <stdexcept>
#include <string>

namespace grassmann {

// Thrown when an internal cross-check fails.  This always indicates a bug in
// the library (two independent computations of the same quantity disagreed),
// never bad user input.
struct falsification_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Thrown when a shape exceeds the configured size limit.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Desk-scale default: C(16,8) = 12870 cells.
inline constexpr int default_capacity = 16;
// Integer Smith-normal-form cross-checks stay cheap up to here.
inline constexpr int oracle_capacity = 10;

// The pair (k, n) of Gr(k, n); Schubert cells live in the k x (n-k) box.
struct GrassmannShape {
    int k;
    int n;

    GrassmannShape(int k_, int n_) : k(k_), n(n_) {
        if (k < 1 || k >= n)
            throw std::invalid_argument("Gr(k,n) requires 1 <= k < n, got k=" +
                                        std::to_string(k) + " n=" + std::to_string(n));
    }

    int box_width() const { return n - k; }
    int dimension() const { return k * (n - k); }

    void require_within(int max_n, const char* what) const {
        if (n > max_n)
            throw capacity_error(std::string(what) + ": n=" + std::to_string(n) +
                                 " exceeds capacity " + std::to_string(max_n) +
                                 " (raise the capacity override to proceed)");
    }

    bool operator==(const GrassmannShape&) const = default;
};

}  // namespace grassmann
