// entanglement.cpp — PPT spectrum analysis

#include "bathent/entanglement.hpp"

namespace bathent {

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::Separable: return "separable";
    case Verdict::Entangled: return "entangled";
    case Verdict::PptInconclusive: return "ppt_inconclusive";
    }
    return "unknown";
}

EntanglementReport analyze(const DensityMatrix& rho) {
    EntanglementReport report;
    report.pt_spectrum = hermitian_eigenvalues(partial_transpose(rho.matrix(), rho.dims()));
    report.min_pt_eigenvalue = report.pt_spectrum.front();
    for (double lambda : report.pt_spectrum)
        if (lambda < -kPptTolerance) report.negativity -= lambda;

    if (report.negativity > 0.0) {
        report.verdict = Verdict::Entangled;
    } else {
        report.verdict = rho.dims().ppt_conclusive() ? Verdict::Separable : Verdict::PptInconclusive;
    }
    return report;
}

double min_pt_eigenvalue(const DensityMatrix& rho) { return analyze(rho).min_pt_eigenvalue; }

} // namespace bathent
