// entanglement.hpp — Partial-transpose (PPT) separability test and negativity

#pragma once

#include "bathent/states.hpp"

#include <string_view>
#include <vector>

namespace bathent {

/// PT eigenvalues in (-kPptTolerance, 0) count as zero.
inline constexpr double kPptTolerance = 1e-11;

enum class Verdict { Separable, Entangled, PptInconclusive };

std::string_view to_string(Verdict v) noexcept;

struct EntanglementReport {
    double min_pt_eigenvalue = 0.0;
    /// Sum of |lambda| over PT eigenvalues below -kPptTolerance.
    double negativity = 0.0;
    Verdict verdict = Verdict::Separable;
    /// Ascending spectrum of rho^{T_A}.
    std::vector<double> pt_spectrum;
};

/// Separable/Entangled for 2x2, 2x3 and 3x2; elsewhere a non-negative partial
/// transpose only yields PptInconclusive.
EntanglementReport analyze(const DensityMatrix& rho);

double min_pt_eigenvalue(const DensityMatrix& rho);

} // namespace bathent
