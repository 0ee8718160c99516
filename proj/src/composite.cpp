#include "fluxlat/composite.hpp"

#include <algorithm>
#include <cmath>

#include "fluxlat/errors.hpp"
#include "fluxlat/parallel.hpp"

namespace fluxlat {

std::string format_label(const BareLabel& label) {
    std::string s = "|";
    for (size_t i = 0; i < label.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(label[i]);
    }
    return s + ">";
}

long CompositeSpec::dim() const {
    long d = 1;
    for (const auto& e : elements) d *= e.levels();
    return d;
}

namespace {

std::vector<long> strides_of(const std::vector<int>& counts) {
    std::vector<long> strides(counts.size(), 1);
    for (int i = static_cast<int>(counts.size()) - 2; i >= 0; --i)
        strides[i] = strides[i + 1] * counts[i + 1];
    return strides;
}

void validate_spec(const CompositeSpec& spec) {
    if (spec.elements.empty())
        throw ValidationError("composite: no elements");
    for (const auto& e : spec.elements)
        if (e.levels() < 2)
            throw ValidationError("composite: every element needs at least 2 retained levels");
    const int n = static_cast<int>(spec.elements.size());
    for (const auto& c : spec.couplings) {
        if (c.a < 0 || c.a >= n || c.b < 0 || c.b >= n)
            throw ValidationError("composite: coupling index out of range");
        if (c.a == c.b)
            throw ValidationError("composite: coupling must join two distinct elements");
    }
    if (spec.dim() > spec.dim_cap) {
        std::string truncs;
        for (const auto& e : spec.elements) {
            if (!truncs.empty()) truncs += " x ";
            truncs += std::to_string(e.levels());
        }
        throw SizingError("composite: product dimension " + std::to_string(spec.dim()) +
                          " (" + truncs + ") exceeds cap " + std::to_string(spec.dim_cap));
    }
}

}  // namespace

MatrixXcd compose(const CompositeSpec& spec, int threads) {
    validate_spec(spec);
    const int ne = static_cast<int>(spec.elements.size());
    std::vector<int> counts(ne);
    for (int i = 0; i < ne; ++i) counts[i] = spec.elements[i].levels();
    const std::vector<long> strides = strides_of(counts);
    const long n = spec.dim();

    MatrixXcd h = MatrixXcd::Zero(n, n);
    // Row-wise assembly: each row is written by exactly one iteration, so the
    // parallel path produces bitwise the same matrix as the serial one.
    grid_map(static_cast<int>(n), threads, [&](int row) {
        std::vector<int> digit(ne);
        long rest = row;
        for (int i = 0; i < ne; ++i) {
            digit[i] = static_cast<int>(rest / strides[i]);
            rest %= strides[i];
        }
        double diag = 0.0;
        for (int i = 0; i < ne; ++i) diag += spec.elements[i].frequencies[digit[i]];
        h(row, row) += diag;
        for (const auto& c : spec.couplings) {
            const MatrixXcd& na = spec.elements[c.a].n_elems;
            const MatrixXcd& nb = spec.elements[c.b].n_elems;
            const long base = row - digit[c.a] * strides[c.a] - digit[c.b] * strides[c.b];
            for (int ja = 0; ja < counts[c.a]; ++ja) {
                const cplx va = c.g_ghz * na(digit[c.a], ja);
                if (va == cplx(0.0, 0.0)) continue;
                for (int jb = 0; jb < counts[c.b]; ++jb) {
                    const long col = base + ja * strides[c.a] + jb * strides[c.b];
                    h(row, col) += va * nb(digit[c.b], jb);
                }
            }
        }
    });
    return h;
}

long DressedSpectrum::flat_index(const BareLabel& label) const {
    if (label.size() != level_counts.size())
        throw ValidationError("label " + format_label(label) + " has " +
                              std::to_string(label.size()) + " digits, circuit has " +
                              std::to_string(level_counts.size()) + " elements");
    long flat = 0;
    for (size_t i = 0; i < label.size(); ++i) {
        if (label[i] < 0 || label[i] >= level_counts[i])
            throw ValidationError("label " + format_label(label) + ": digit " +
                                  std::to_string(i) + " outside retained levels");
        flat = flat * level_counts[i] + label[i];
    }
    return flat;
}

BareLabel DressedSpectrum::unflatten(long flat) const {
    BareLabel label(level_counts.size());
    for (int i = static_cast<int>(level_counts.size()) - 1; i >= 0; --i) {
        label[i] = static_cast<int>(flat % level_counts[i]);
        flat /= level_counts[i];
    }
    return label;
}

bool DressedSpectrum::has_label(const BareLabel& label) const {
    return dressed_of_bare[flat_index(label)] >= 0;
}

long DressedSpectrum::dressed_index(const BareLabel& label) const {
    const long flat = flat_index(label);
    const long k = dressed_of_bare[flat];
    if (k < 0) {
        // report the two largest overlaps to make the ambiguity visible
        double best = 0.0, second = 0.0;
        for (long c = 0; c < dim(); ++c) {
            double ov = std::norm(eigvecs(flat, c));
            if (ov > best) {
                second = best;
                best = ov;
            } else if (ov > second) {
                second = ov;
            }
        }
        throw AmbiguousLabel("bare label " + format_label(label) +
                                 " has no dressed assignment above overlap " +
                                 std::to_string(min_overlap) + " (best " +
                                 std::to_string(best) + ", second " +
                                 std::to_string(second) + ")",
                             format_label(label), best, second);
    }
    return k;
}

double DressedSpectrum::frequency(const BareLabel& label) const {
    return frequencies[dressed_index(label)];
}

double DressedSpectrum::overlap(const BareLabel& label) const {
    return overlap_of_bare[flat_index(label)];
}

std::pair<long, double> DressedSpectrum::best_match(const BareLabel& label) const {
    const long flat = flat_index(label);
    long arg = 0;
    double best = -1.0;
    for (long c = 0; c < dim(); ++c) {
        double ov = std::norm(eigvecs(flat, c));
        if (ov > best + 1e-12) {
            best = ov;
            arg = c;
        }
    }
    return {arg, best};
}

DressedSpectrum assign_labels(DressedSpectrum d, double min_overlap) {
    const long n = d.dim();
    d.min_overlap = min_overlap;
    d.dressed_of_bare.assign(n, -1);
    d.overlap_of_bare.assign(n, 0.0);

    struct Cand {
        double ov;
        long bare, dressed;
    };
    std::vector<Cand> cands;
    cands.reserve(2 * n);
    for (long c = 0; c < n; ++c)
        for (long b = 0; b < n; ++b) {
            double ov = std::norm(d.eigvecs(b, c));
            // a pair that cannot clear the threshold can never be recorded,
            // and everything above it is processed first; prune early
            if (ov > min_overlap + 1e-9) cands.push_back({ov, b, c});
        }
    std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
        if (x.ov != y.ov) return x.ov > y.ov;
        if (x.dressed != y.dressed) return x.dressed < y.dressed;
        return x.bare < y.bare;
    });
    std::vector<char> bare_done(n, 0), dressed_done(n, 0);
    for (const auto& c : cands) {
        if (bare_done[c.bare] || dressed_done[c.dressed]) continue;
        bare_done[c.bare] = dressed_done[c.dressed] = 1;
        d.dressed_of_bare[c.bare] = c.dressed;
        d.overlap_of_bare[c.bare] = c.ov;
    }
    return d;
}

DressedSpectrum diagonalize(const CompositeSpec& spec, double min_overlap, int threads) {
    MatrixXcd h = compose(spec, threads);
    EighResult eig = eigh(h);

    DressedSpectrum d;
    d.name = spec.name;
    d.level_counts.reserve(spec.elements.size());
    for (const auto& e : spec.elements) d.level_counts.push_back(e.levels());
    d.frequencies = (eig.eigenvalues.array() - eig.eigenvalues[0]).matrix();
    d.eigvecs = std::move(eig.eigenvectors);
    return assign_labels(std::move(d), min_overlap);
}

}  // namespace fluxlat
