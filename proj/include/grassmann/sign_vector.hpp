#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grassmann/bruhat.hpp"
#include "grassmann/checkered.hpp"

namespace grassmann {

// A vector in {+,-}^{n-1} encoding a local system; entry i sits on the simple
// reflection s_{i+1} (0-based storage).
struct SignVector {
    std::vector<signed char> signs;  // +1 or -1

    bool operator==(const SignVector&) const = default;
};

std::string to_string(const SignVector& eps);

// s_i leaves entry i fixed and multiplies entries i-1 and i+1 by it; all other
// entries are untouched.  This is the coordinate rule only -- it is applied
// along reduced words, with no group-action claim beyond that.
SignVector sign_action(int i, const SignVector& eps);

// Whether s_i acts non-trivially at eps, i.e. eps_i = -.  The eps entries are
// consecutive products of an underlying length-n character vector that s_i
// permutes; the permutation moves that vector exactly when eps_i = -.  For
// n >= 3 this is the same as sign_action changing eps; at n = 2 the flipped
// neighbours fall outside the vector, so only this criterion sees the action.
bool sign_letter_acts(int i, const SignVector& eps);

// Starting vector for each coefficient system: all minus for the standard
// (constant) fill, plus at position k for the shifted (twisted) fill.
SignVector epsilon_start(const GrassmannShape& shape, FillVariant variant);

struct EtaHatTrace {
    std::vector<int> word;
    SignVector start;
    SignVector end;
    int eta_hat = 0;
};

// Walks a reduced word through the lattice, counting the letters that change
// the sign vector.  Defaults to the canonical reduced word; any supplied word
// must trace a saturated chain from the empty diagram to p.
EtaHatTrace eta_hat(const Partition& p, const GrassmannShape& shape, FillVariant variant,
                    const std::optional<std::vector<int>>& word = std::nullopt);

}  // namespace grassmann
