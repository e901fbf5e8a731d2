#pragma once

#include <optional>
#include <string>

#include "leibniz/bimodule.hpp"

namespace leibniz {

struct FittingPair {
    Subspace zero_part;  // stabilized kernel
    Subspace one_part;   // stabilized image
};

/// Fitting decomposition of a single operator: zero_part = Ker(t^d),
/// one_part = Im(t^d) with d the ambient dimension. t is nilpotent on the
/// zero part and invertible on the one part (both asserted).
FittingPair fitting_operator(const ExactMatrix& t);

/// M_0(S) = intersection of the stabilized kernels of lambda_s, M_1(S) = sum
/// of the stabilized images, over a basis of S. Requires every basis element
/// of S to have nilpotent left multiplication on the algebra. Asserts that
/// both parts are sub-bimodules, that S acts nilpotently on M_0(S) from both
/// sides, and that the two parts decompose M.
FittingPair fitting_set(const Bimodule& m, const Subspace& s);

/// The four operator identities relating powers of lambda_x to lambda/rho of
/// left-multiplication orbits, checked as exact matrix equalities for the
/// given x-slot element and exponent, with y running over the algebra basis.
struct NilpotencyIdentityFailure {
    enum class Which { PowLeftThenLeft, PowLeftThenRight, LeftThenPowLeft, RightThenPowLeft };
    Which which;
    std::size_t y_index;
    std::string to_string() const;
};

std::optional<NilpotencyIdentityFailure> verify_nilpotency_identities(const Bimodule& m, const Vec& x,
                                                                      unsigned n);

}  // namespace leibniz
