#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fluxlat/circuit.hpp"
#include "fluxlat/linalg.hpp"

namespace fluxlat {

/// Bare product label, one retained-level index per element, element order as
/// in CompositeSpec. Example: {1,0,0,1}.
using BareLabel = std::vector<int>;

std::string format_label(const BareLabel& label);

struct Coupling {
    int a = 0;
    int b = 0;
    double g_ghz = 0.0;  // coefficient of n_a * n_b
};

struct CompositeSpec {
    std::vector<ElementSpectrum> elements;
    std::vector<Coupling> couplings;
    std::string name;
    long dim_cap = 200000;

    long dim() const;
};

/// Exact eigensystem of a composed circuit plus the bare->dressed label map.
/// frequencies are relative to the dressed ground state. The label map is
/// partial: bare labels whose greedy-assigned overlap did not clear the
/// threshold stay unassigned and looking them up raises AmbiguousLabel.
struct DressedSpectrum {
    std::vector<int> level_counts;
    VectorXd frequencies;
    MatrixXcd eigvecs;  // column k = dressed state k in the bare product basis
    std::vector<long> dressed_of_bare;   // flat bare index -> dressed index, -1 unassigned
    std::vector<double> overlap_of_bare; // squared overlap of the assignment, 0 if unassigned
    double min_overlap = 0.5;
    std::string name;

    long dim() const { return frequencies.size(); }
    long flat_index(const BareLabel& label) const;
    BareLabel unflatten(long flat) const;
    bool has_label(const BareLabel& label) const;
    /// Dressed eigenindex for a bare label; AmbiguousLabel when unassigned.
    long dressed_index(const BareLabel& label) const;
    /// Dressed frequency (GHz, relative to dressed ground) of a bare label.
    double frequency(const BareLabel& label) const;
    double overlap(const BareLabel& label) const;
    /// Best-overlap dressed state ignoring exclusivity, for metrics that must
    /// report through resonances. Returns (dressed index, squared overlap).
    std::pair<long, double> best_match(const BareLabel& label) const;
};

/// Assemble H = sum_i H_i + sum g n_a n_b in the truncated product basis.
/// Element 0 owns the most significant digit of the flat index. threads > 1
/// parallelizes over matrix rows; the result is identical to the serial path.
MatrixXcd compose(const CompositeSpec& spec, int threads = 1);

/// compose + dense Hermitian eigendecomposition + label assignment.
DressedSpectrum diagonalize(const CompositeSpec& spec, double min_overlap = 0.5,
                            int threads = 1);

/// Re-run the greedy bare->dressed assignment: all (bare, dressed) pairs are
/// visited in descending overlap, each side claimed at most once; only
/// assignments with overlap > min_overlap clear the threshold. Ties closer
/// than 1e-12 resolve to the lower dressed index.
DressedSpectrum assign_labels(DressedSpectrum d, double min_overlap = 0.5);

}  // namespace fluxlat
