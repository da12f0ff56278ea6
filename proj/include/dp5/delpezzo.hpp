#pragma once

// Degree-5 del Pezzo layer: the ten (-1)-curves on the 4-point blowup,
// effectivity and h^0 by fixed-part peeling plus Riemann-Roch, and an
// independent interpolation oracle working directly with plane curves.

#include <cstdint>
#include <string>
#include <vector>

#include "dp5/lattice.hpp"
#include "dp5/linalg.hpp"

namespace dp5 {

// The ten classes {E_i} u {L - E_i - E_j}, sorted lexicographically.
// Only the 4-point blowup is supported.
std::vector<DivisorClass> negative_curves(int n_blowups);

enum class EffVerdict { Effective, NonEffective };

struct PeelStep {
    DivisorClass curve;
    Int multiplicity;   // copies removed consecutively
    Int first_pairing;  // residual.curve before the first copy was removed
};

struct PeelTrace {
    DivisorClass input;
    std::vector<PeelStep> steps;
    DivisorClass residual;
    EffVerdict verdict = EffVerdict::Effective;
    std::string reason; // human-readable verdict justification

    // input == residual + sum multiplicity*curve
    bool reconstructs() const;
    std::string render() const; // indented step list for CLI reports
};

// Peel negative curves C with residual.C < 0.  The most negative pairing is
// chosen first (lexicographic tie break) and the chosen curve is removed
// copy by copy until its pairing is nonnegative, so multiplicities show up
// as one step.  Verdicts:
//   residual == 0, or residual nef with -K.residual > 0   -> effective
//   residual != 0 with -K.residual <= 0, or negative degree -> non-effective
PeelTrace peel_fixed_part(const DivisorClass& d);

bool is_effective(const DivisorClass& d);
bool is_effective(const DivisorClass& d, PeelTrace& trace);

// h^0 of the invertible sheaf attached to d: 0 when non-effective, else the
// h^0 of the nef residual (chi for big residuals, k+1 along the five conic
// pencils, 1 for the zero class).
Int h0(const DivisorClass& d);
Int h0(const DivisorClass& d, PeelTrace& trace);

// Dimension of plane curves of degree d with multiplicity >= m_i at four
// seeded general-position rational points, by exact kernel computation on
// the Taylor-vanishing condition matrix.  m_i < 0 is not representable as a
// vanishing condition and raises OracleInapplicableError.
Int h0_interpolation_oracle(const DivisorClass& d, std::uint64_t seed);

struct OracleComputation {
    std::vector<std::array<Int, 3>> points; // homogeneous, z = 1
    IntMat conditions;                      // rows: vanishing conditions, cols: monomials
    int rank = 0;
    Int dimension = 0; // monomials - rank
    std::string render_matrix() const;      // plain-text dump for --dump-conditions
};

OracleComputation oracle_details(const DivisorClass& d, std::uint64_t seed);

// Degree of O_X(d) restricted to an irreducible rational curve class.
Int restriction_degree(const DivisorClass& d, const DivisorClass& curve);

// h^0 of O(deg) on P^1.
Int h0_on_rational_curve(const Int& deg);

} // namespace dp5
