#pragma once

#include <string>
#include <vector>

#include "fluxlat/composite.hpp"

namespace fluxlat {

/// Transmon coupler flavor. The digit is the predetermined state of the
/// qubit(s) adjacent to an excited coupler: 0 for C0 couplers, 1 for C1.
enum class CouplerType { C0 = 0, C1 = 1 };
enum class ChainSide { Left, Right };

CouplerType coupler_type_from_string(const std::string& s);
const char* to_string(CouplerType t);

struct MetricValue {
    std::string kind;                     // zz_qq, zz_cs, zz_cc, hybridization, ...
    double value = 0.0;                   // GHz for ZZ kinds, dimensionless otherwise
    std::vector<std::string> labels_used; // bare labels entering the formula
    bool degenerate = false;              // a label fell back to best-overlap matching
};

/// f|11>' - f|01>' - f|10>' + f|00>' on the two given qubits, all other
/// elements in |0>.
MetricValue zz_qubit_qubit(const DressedSpectrum& d, int qubit_a, int qubit_b);

/// Coupler-spectator ZZ on a C-Q-C-Q circuit (element order C_alpha, Q_1,
/// C_beta, Q_2): f|1x01>' - f|0x01>' - f|1x00>' + f|0x00>', x set by the
/// excited coupler's type.
MetricValue zz_coupler_spectator(const DressedSpectrum& d, CouplerType excited);

/// Same on a C-Q-C-Q-C chain, for the left or right edge coupler.
MetricValue zz_coupler_spectator_chain(const DressedSpectrum& d, ChainSide side,
                                       CouplerType excited);

/// Coupler-coupler ZZ between the identical edge couplers of a C-Q-C-Q-C
/// chain: f|1x0x1>' - f|0x0x1>' - f|1x0x0>' + f|0x0x0>'.
MetricValue zz_coupler_coupler(const DressedSpectrum& d, CouplerType edge_type);

/// State mixing D = 1/2 |<bare_1|dressed_2>|^2 + 1/2 |<bare_2|dressed_1>|^2.
/// Near-degenerate assignments fall back to best overlap and set the
/// degenerate flag instead of failing, so D stays plottable through peaks.
MetricValue hybridization(const DressedSpectrum& d, const BareLabel& bare_1,
                          const BareLabel& bare_2);

/// Next-nearest-neighbor mixing on a Q-C-Q-C-Q circuit (qubits at element
/// positions 0, 2, 4): D' = 1/2 D(|100>,|001>) + 1/2 D(|110>,|011>) in
/// three-qubit notation.
MetricValue hybridization_nnn(const DressedSpectrum& d);

/// Two-qubit error estimate from a hybridization value: 0.4 * D.
double hybridization_error(double d_value);

}  // namespace fluxlat
