#include "grassmann/snf.hpp"

#include <cstdlib>
#include <utility>

namespace grassmann {

namespace {

BigInt abs_val(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// True when every entry of row t and column t beyond (t,t) is zero.
bool pivot_isolated(const BigMatrix& a, int t) {
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(a[0].size());
    for (int i = t + 1; i < m; ++i)
        if (a[static_cast<size_t>(i)][static_cast<size_t>(t)] != 0) return false;
    for (int j = t + 1; j < n; ++j)
        if (a[static_cast<size_t>(t)][static_cast<size_t>(j)] != 0) return false;
    return true;
}

// Smallest nonzero |entry| in the trailing submatrix, or false if it is zero.
bool find_pivot(const BigMatrix& a, int t, int& pi, int& pj) {
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(a[0].size());
    bool found = false;
    BigInt best;
    for (int i = t; i < m; ++i) {
        for (int j = t; j < n; ++j) {
            const BigInt& v = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (v == 0) continue;
            BigInt mag = abs_val(v);
            if (!found || mag < best) {
                found = true;
                best = std::move(mag);
                pi = i;
                pj = j;
            }
        }
    }
    return found;
}

void swap_rows(BigMatrix& a, int i, int j) {
    if (i != j) std::swap(a[static_cast<size_t>(i)], a[static_cast<size_t>(j)]);
}

void swap_cols(BigMatrix& a, int i, int j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[static_cast<size_t>(i)], row[static_cast<size_t>(j)]);
}

}  // namespace

std::vector<BigInt> smith_normal_form(BigMatrix a) {
    std::vector<BigInt> factors;
    if (a.empty() || a[0].empty()) return factors;
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(a[0].size());

    for (int t = 0; t < m && t < n; ++t) {
        int pi = t, pj = t;
        if (!find_pivot(a, t, pi, pj)) break;  // trailing submatrix is zero
        swap_rows(a, t, pi);
        swap_cols(a, t, pj);

        while (!pivot_isolated(a, t)) {
            // Clear column t below the pivot, then row t to its right.  The
            // pivot is re-chosen whenever a smaller remainder shows up, so the
            // loop terminates: |a[t][t]| strictly decreases across passes.
            for (int i = t + 1; i < m; ++i) {
                BigInt& v = a[static_cast<size_t>(i)][static_cast<size_t>(t)];
                if (v == 0) continue;
                BigInt quotient = v / a[static_cast<size_t>(t)][static_cast<size_t>(t)];
                for (int j = t; j < n; ++j)
                    a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                        quotient * a[static_cast<size_t>(t)][static_cast<size_t>(j)];
            }
            for (int j = t + 1; j < n; ++j) {
                BigInt& v = a[static_cast<size_t>(t)][static_cast<size_t>(j)];
                if (v == 0) continue;
                BigInt quotient = v / a[static_cast<size_t>(t)][static_cast<size_t>(t)];
                for (int i = t; i < m; ++i)
                    a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                        quotient * a[static_cast<size_t>(i)][static_cast<size_t>(t)];
            }
            if (find_pivot(a, t, pi, pj)) {
                swap_rows(a, t, pi);
                swap_cols(a, t, pj);
            }
        }

        // Divisibility fix-up: if some trailing entry is not divisible by the
        // pivot, fold its row in and reduce again.
        bool divides_all = true;
        for (int i = t + 1; i < m && divides_all; ++i) {
            for (int j = t + 1; j < n && divides_all; ++j) {
                if (a[static_cast<size_t>(i)][static_cast<size_t>(j)] %
                        a[static_cast<size_t>(t)][static_cast<size_t>(t)] !=
                    0) {
                    for (int jj = t; jj < n; ++jj)
                        a[static_cast<size_t>(t)][static_cast<size_t>(jj)] +=
                            a[static_cast<size_t>(i)][static_cast<size_t>(jj)];
                    divides_all = false;
                }
            }
        }
        if (!divides_all) {
            --t;  // redo this pivot with the folded row
            continue;
        }

        BigInt d = abs_val(a[static_cast<size_t>(t)][static_cast<size_t>(t)]);
        factors.push_back(std::move(d));
    }
    return factors;
}

}  // namespace grassmann
