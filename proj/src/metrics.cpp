#include "fluxlat/metrics.hpp"

#include <cmath>

#include "fluxlat/errors.hpp"

namespace fluxlat {

CouplerType coupler_type_from_string(const std::string& s) {
    if (s == "C0") return CouplerType::C0;
    if (s == "C1") return CouplerType::C1;
    throw ValidationError("coupler type must be \"C0\" or \"C1\", got \"" + s + "\"");
}

const char* to_string(CouplerType t) {
    return t == CouplerType::C0 ? "C0" : "C1";
}

namespace {

void require_elements(const DressedSpectrum& d, size_t n, const char* what) {
    // extra trailing elements (a suppression oscillator, say) sit in |0> in
    // every label, so a longer chain is fine
    if (d.level_counts.size() < n)
        throw ValidationError(std::string(what) + " needs at least a " + std::to_string(n) +
                              "-element circuit, got " +
                              std::to_string(d.level_counts.size()));
}

/// Alternating 4-point combination f(hi,1) - f(lo,1) - f(hi,0) + f(lo,0),
/// where the two label slots are filled into a common template.
MetricValue four_point(const DressedSpectrum& d, std::string kind, BareLabel tmpl,
                       int pos_a, int pos_b) {
    MetricValue m;
    m.kind = std::move(kind);
    double val = 0.0;
    for (int a : {1, 0})
        for (int b : {1, 0}) {
            BareLabel label = tmpl;
            label[pos_a] = a;
            label[pos_b] = b;
            double sign = (a == 1) == (b == 1) ? 1.0 : -1.0;
            val += sign * d.frequency(label);
            m.labels_used.push_back(format_label(label));
        }
    m.value = val;
    return m;
}

}  // namespace

MetricValue zz_qubit_qubit(const DressedSpectrum& d, int qubit_a, int qubit_b) {
    const int n = static_cast<int>(d.level_counts.size());
    if (qubit_a < 0 || qubit_a >= n || qubit_b < 0 || qubit_b >= n || qubit_a == qubit_b)
        throw ValidationError("zz_qubit_qubit: invalid qubit indices");
    return four_point(d, "zz_qq", BareLabel(n, 0), qubit_a, qubit_b);
}

MetricValue zz_coupler_spectator(const DressedSpectrum& d, CouplerType excited) {
    require_elements(d, 4, "zz_coupler_spectator");
    BareLabel tmpl(d.level_counts.size(), 0);
    tmpl[1] = static_cast<int>(excited);
    return four_point(d, "zz_cs", tmpl, 0, 3);
}

MetricValue zz_coupler_spectator_chain(const DressedSpectrum& d, ChainSide side,
                                       CouplerType excited) {
    require_elements(d, 5, "zz_coupler_spectator_chain");
    const int x = static_cast<int>(excited);
    BareLabel tmpl(d.level_counts.size(), 0);
    if (side == ChainSide::Left) {
        tmpl[1] = x;  // qubit adjacent to the excited left coupler
        return four_point(d, "zz_cs", tmpl, 0, 3);
    }
    tmpl[3] = x;
    return four_point(d, "zz_cs", tmpl, 4, 1);
}

MetricValue zz_coupler_coupler(const DressedSpectrum& d, CouplerType edge_type) {
    require_elements(d, 5, "zz_coupler_coupler");
    const int x = static_cast<int>(edge_type);
    BareLabel tmpl(d.level_counts.size(), 0);
    tmpl[1] = x;
    tmpl[3] = x;
    return four_point(d, "zz_cc", tmpl, 0, 4);
}

MetricValue hybridization(const DressedSpectrum& d, const BareLabel& bare_1,
                          const BareLabel& bare_2) {
    const long flat_1 = d.flat_index(bare_1);
    const long flat_2 = d.flat_index(bare_2);

    MetricValue m;
    m.kind = "hybridization";
    m.labels_used = {format_label(bare_1), format_label(bare_2)};

    auto dressed_of = [&](const BareLabel& label) -> long {
        if (d.has_label(label)) return d.dressed_index(label);
        m.degenerate = true;
        return d.best_match(label).first;
    };
    const long k1 = dressed_of(bare_1);
    const long k2 = dressed_of(bare_2);
    m.value = 0.5 * std::norm(d.eigvecs(flat_1, k2)) + 0.5 * std::norm(d.eigvecs(flat_2, k1));
    return m;
}

MetricValue hybridization_nnn(const DressedSpectrum& d) {
    require_elements(d, 5, "hybridization_nnn");
    // three-qubit labels |q1 q2 q3> live on elements 0, 2, 4
    auto expand = [&](int q1, int q2, int q3) {
        BareLabel l(d.level_counts.size(), 0);
        l[0] = q1;
        l[2] = q2;
        l[4] = q3;
        return l;
    };
    MetricValue lo = hybridization(d, expand(1, 0, 0), expand(0, 0, 1));
    MetricValue hi = hybridization(d, expand(1, 1, 0), expand(0, 1, 1));

    MetricValue m;
    m.kind = "hybridization_nnn";
    m.value = 0.5 * lo.value + 0.5 * hi.value;
    m.degenerate = lo.degenerate || hi.degenerate;
    m.labels_used = lo.labels_used;
    m.labels_used.insert(m.labels_used.end(), hi.labels_used.begin(), hi.labels_used.end());
    return m;
}

double hybridization_error(double d_value) {
    if (!(d_value >= 0.0 && d_value <= 1.0))
        throw ValidationError("hybridization_error: D must lie in [0,1]");
    return 0.4 * d_value;
}

}  // namespace fluxlat
