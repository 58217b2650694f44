#pragma once

#include <optional>
#include <vector>

#include "wigner/grid.hpp"

namespace wigner {

struct Tolerances {
    static constexpr double decay = 1e-12;      // edge samples relative to max |psi|
    static constexpr double imaginary = 1e-10;  // imaginary residue of the transform
    static constexpr double parity = 1e-8;
    static constexpr double marginal = 1e-6;
    static constexpr double inversion = 1e-6;
    static constexpr double inversion_floor = 1e-8;
    static constexpr double field = 1e-9;
    static constexpr double scaling = 1e-8;
};

// W(x, xi) = (1/2pi) int exp(-i xi y) psi(x + hbar y/2) conj(psi(x - hbar y/2)) dy on the
// y lattice y_j = 2 j step / hbar, so x +- hbar y/2 fall on nodes. Zero extension outside.
WignerField wigner_transform(const WaveSample& wave, const PhaseSpaceGrid& grid);

// Direct O(N^2 M) evaluation of the same discrete sum; reference for small grids.
WignerField wigner_transform_direct(const WaveSample& wave, const PhaseSpaceGrid& grid);

std::vector<double> position_marginal(const WignerField& field);
std::vector<double> momentum_marginal(const WignerField& field);
double total_mass(const WignerField& field);
// 2 pi hbar <W1, W2>_{L2}
double overlap_identity(const WignerField& w1, const WignerField& w2);

struct InversionResult {
    WaveSample wave;
    double x_star;
    std::size_t star_index;
};

// Reconstructs psi with psi(x_star) real positive. x_star defaults to the first node maximising
// the position marginal and is snapped to the nearest node otherwise.
InversionResult invert_wigner(const WignerField& field, std::optional<double> x_star = std::nullopt);

struct ContinuityReport {
    double l2_gap;
    double sup_gap;
    double l2_bound;
    double sup_bound;
    double theta_used;
};

// theta_used = arg <phi1, phi2> minimises ||exp(i theta) phi1 - phi2||.
ContinuityReport continuity_gap(const WignerField& w1, const WignerField& w2, const WaveSample& phi1,
                                const WaveSample& phi2);

struct PurityReport {
    double residual;
    bool indeterminate;
};

// Largest normalised 2x2 minor of Q(x1, x2) = int exp(i xi (x1 - x2)/hbar) W((x1 + x2)/2, xi) dxi,
// which is rank one exactly for pure states.
PurityReport purity_separability_check(const WignerField& field, std::size_t sample_nodes = 48);

}  // namespace wigner
