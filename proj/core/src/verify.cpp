#include "wigner/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "wigner/closed_forms.hpp"
#include "wigner/phase_space.hpp"

namespace wigner::verify {

namespace {

using namespace closed_forms;
constexpr double kPi = std::numbers::pi;

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

CheckResult at_most(std::string name, double residual, double tol) {
    return {std::move(name), residual <= tol, residual, tol};
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(std::uint64_t seed) {
    std::vector<CheckResult> out;
    const Grid1D xg = Grid1D::symmetric(10.0, 256);
    const PhaseSpaceGrid ps = PhaseSpaceGrid::natural(xg, 1.0);
    const std::size_t nx = xg.count();
    const std::size_t nxi = ps.xi().count();

    const AnalyticState even(Hermite{2, true}, 1.0);
    const WignerField w_even = wigner_transform(sample_state(even, xg), ps);
    double parity = 0.0;
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < nxi; ++j) {
            parity = std::max(parity, std::abs(w_even.at(nx - 1 - i, j) - w_even.at(i, nxi - 1 - j)));
        }
    }
    out.push_back(at_most("parity", parity, Tolerances::parity));

    const AnalyticState coherent(CoherentGaussian{0.5, 1.0}, 1.0);
    const WaveSample psi = sample_state(coherent, xg);
    const WignerField w = wigner_transform(psi, ps);
    WaveSample rotated = psi;
    for (auto& v : rotated.values) {
        v *= std::polar(1.0, 0.7);
    }
    out.push_back(at_most("phase_invariance", max_abs_diff(wigner_transform(rotated, ps).values, w.values),
                          Tolerances::field));

    const double hbar = 0.5;
    const AnalyticState odd1(Hermite{1, true}, 1.0);
    const AnalyticState odd_h(Hermite{1, true}, hbar);
    const PhaseSpaceGrid ps1(xg, Grid1D::symmetric(8.0, 128));
    const PhaseSpaceGrid psh(xg, Grid1D::symmetric(8.0 * hbar, 128));
    const WignerField w1 = wigner_transform(sample_state(odd1, xg), ps1);
    const WignerField wh = wigner_transform(sample_state(odd_h, xg), psh);
    double scaling = 0.0;
    for (std::size_t i = 0; i < w1.values.size(); ++i) {
        scaling = std::max(scaling, std::abs(wh.values[i] - w1.values[i] / hbar));
    }
    out.push_back(at_most("hbar_scaling", scaling, Tolerances::scaling));

    const AnalyticState h3(Hermite{3, true}, 1.0);
    const WaveSample psi3 = sample_state(h3, xg);
    const WignerField w3 = wigner_transform(psi3, ps);
    out.push_back(at_most("sup_bound", std::max(0.0, w3.max_abs() - psi3.norm_squared() / kPi), Tolerances::field));

    std::vector<double> density(nx);
    for (std::size_t i = 0; i < nx; ++i) {
        density[i] = std::norm(psi.values[i]);
    }
    out.push_back(at_most("position_marginal", max_abs_diff(position_marginal(w), density), Tolerances::marginal));

    std::vector<double> momentum(nxi);
    for (std::size_t j = 0; j < nxi; ++j) {
        const double d = ps.xi().node(j) - 1.0;
        momentum[j] = std::exp(-d * d) / std::sqrt(kPi);
    }
    out.push_back(at_most("momentum_marginal", max_abs_diff(momentum_marginal(w), momentum), Tolerances::marginal));
    out.push_back(at_most("total_mass", std::abs(total_mass(w) - 1.0), Tolerances::marginal));
    out.push_back(at_most("overlap_self", std::abs(overlap_identity(w, w) - 1.0), Tolerances::marginal));

    const WignerField w_n0 = wigner_transform(sample_state(AnalyticState(Hermite{0, true}, 1.0), xg), ps);
    const WignerField w_n1 = wigner_transform(sample_state(odd1, xg), ps);
    out.push_back(at_most("overlap_orthogonal", std::abs(overlap_identity(w_n0, w_n1)), Tolerances::marginal));

    const AnalyticState moving(CoherentGaussian{0.0, 2.0}, 1.0);
    const WaveSample psi_m = sample_state(moving, xg);
    const InversionResult inv = invert_wigner(wigner_transform(psi_m, ps));
    const double fidelity = std::norm(inner_product(inv.wave, psi_m)) / (inv.wave.norm_squared() * psi_m.norm_squared());
    out.push_back(at_most("inversion_fidelity", 1.0 - fidelity, Tolerances::inversion));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> pos(-2.0, 2.0);
    std::uniform_real_distribution<double> mom(-2.0, 2.0);
    int violations = 0;
    for (int k = 0; k < 20; ++k) {
        const WaveSample p1 = sample_state(AnalyticState(CoherentGaussian{pos(rng), mom(rng)}, 1.0), xg);
        const WaveSample p2 = sample_state(AnalyticState(CoherentGaussian{pos(rng), mom(rng)}, 1.0), xg);
        const ContinuityReport r = continuity_gap(wigner_transform(p1, ps), wigner_transform(p2, ps), p1, p2);
        if (r.l2_gap > r.l2_bound || r.sup_gap > r.sup_bound) {
            ++violations;
        }
    }
    out.push_back(at_most("continuity_violations", violations, 0.0));

    const PurityReport pure = purity_separability_check(w);
    out.push_back({"purity_pure_state", !pure.indeterminate && pure.residual <= Tolerances::marginal, pure.residual,
                   Tolerances::marginal});
    return out;
}

}  // namespace wigner::verify
