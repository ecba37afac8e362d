#pragma once

// Closed-form sigma-duals and the sigma-self-orthogonality and
// sigma-self-duality decisions.

#include <stdexcept>
#include <string>
#include <vector>

#include "chainring/codes.hpp"

namespace chainring {

struct DualResult {
    RingElement dual_lambda;
    Code dual_spec;
    /// Generators of the dual exactly as the closed form produces them,
    /// before normalization.
    std::vector<QuotientPoly> witness_generators;
    std::string clause;
};

/// Throws SpecError for specs that do not validate.
DualResult sigma_dual(const Code& code, const RingAut& sigma);

/// Whether gamma0 = theta(gamma0^{-1}), theta being the field part of
/// sigma^{-1}. Always false for the chain kind.
bool root_gate(const Code& code, const RingAut& sigma);

class RootGateViolated : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class HPrimeForm {
    /// -eps sum_j theta(h_j) (-1)^{j+t-i} (X - 1)^j X^{i-j-t}, X = gamma0 x.
    Rescaled,
    /// -eps sum_j theta(h_j) (-1)^{j+t-i} (gamma0 x - 1)^j x^{i-j-t}.
    UnscaledPower,
    /// -sum_j h_j (-gamma)^{i-t+j} (gamma0 x - 1)^j x^{i-j-t}.
    GammaPower,
};

std::string form_name(HPrimeForm f);

/// The comparison polynomial for Type3/Type4 codes with h != 0, expanded in
/// the basis (gamma0 x - 1)^j (n terms; n - i terms for Type3 with
/// 2i > n + t). (theta, eps) parameterize sigma^{-1}. Throws
/// RootGateViolated when the root gate fails and std::invalid_argument for
/// other kinds or h = 0.
NilExpansion h_prime(const Code& code, const RingAut& sigma, HPrimeForm form = HPrimeForm::Rescaled);

/// True iff coefficients 0..k-1 of f vanish.
bool nil_divides(std::size_t k, const NilExpansion& f);

struct Verdict {
    bool holds;
    std::string clause;
};

Verdict is_sigma_self_orthogonal(const Code& code, const RingAut& sigma);
Verdict is_sigma_self_dual(const Code& code, const RingAut& sigma);

/// The divisibility test y^{n-i-t} | h - h' with a chosen h' form. Requires
/// the root gate.
bool hprime_divides(const Code& code, const RingAut& sigma, HPrimeForm form);

}  // namespace chainring
