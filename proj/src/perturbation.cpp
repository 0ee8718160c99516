#include "fluxlat/perturbation.hpp"

#include <cmath>
#include <cstddef>
#include <sstream>

#include "fluxlat/errors.hpp"
#include "fluxlat/linalg.hpp"

namespace fluxlat {

namespace {

constexpr double analytic_denom_guard_ghz = 1e-6;
constexpr double diagram_denom_guard_ghz = 1e-9;
constexpr double forbidden_element_cut = 1e-8;

void check_analytic_denom(double value, const char* name) {
    if (std::abs(value) < analytic_denom_guard_ghz) {
        std::ostringstream os;
        os << "analytic zz: |" << name << "| = " << std::abs(value)
           << " GHz is inside the " << analytic_denom_guard_ghz << " GHz resonance guard";
        throw SingularDenominator(os.str());
    }
}

double bare_energy(const BareLabel& state, const std::vector<ElementSpectrum>& spectra) {
    double e = 0.0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        e += spectra[i].frequencies[state[i]];
    }
    return e;
}

}  // namespace

std::pair<std::pair<int, int>, std::pair<int, int>> analytic_level_pairs(int coupler_type) {
    if (coupler_type == 0) {
        return {{1, 2}, {0, 3}};
    }
    if (coupler_type == 1) {
        return {{0, 3}, {1, 2}};
    }
    throw ValidationError("coupler_type must be 0 or 1, got " + std::to_string(coupler_type));
}

double zz_cs_analytic(const AnalyticZzInputs& in) {
    analytic_level_pairs(in.coupler_type);
    if (in.connection_sign != 1 && in.connection_sign != -1) {
        throw ValidationError("connection_sign must be +1 or -1, got " +
                              std::to_string(in.connection_sign));
    }
    if (in.f_ca_01 <= 0.0 || in.f_cb_01 <= 0.0 || in.f_q2_p <= 0.0 || in.f_q1_t <= 0.0) {
        throw ValidationError("analytic zz: transition frequencies must be positive");
    }
    if (in.has_oscillator && in.f_o <= 0.0) {
        throw ValidationError("analytic zz: oscillator frequency must be positive");
    }

    const double d_spectator = in.f_ca_01 - in.f_q2_p;
    const double d_coupler = in.f_ca_01 - in.f_cb_01;
    const double d_qubit = in.f_ca_01 - in.f_q1_t;
    check_analytic_denom(d_spectator, "f_ca_01 - f_q2_p");
    check_analytic_denom(d_coupler, "f_ca_01 - f_cb_01");
    check_analytic_denom(d_qubit, "f_ca_01 - f_q1_t");

    const double s = static_cast<double>(in.connection_sign);
    double bracket = in.g + s * in.g1 * in.g2 * in.n_q1_t * in.n_q1_t / d_qubit;
    if (in.has_oscillator) {
        const double d_osc = in.f_ca_01 - in.f_o;
        check_analytic_denom(d_osc, "f_ca_01 - f_o");
        bracket += s * in.g_o * in.g_o * in.n_o * in.n_o / d_osc;
    }

    const double inject = in.g3 * in.n_q2_p * in.n_cb_01;
    const double relay = in.n_ca_01 * in.n_cb_01 / d_coupler;
    const double sign = (in.coupler_type % 2 == 0) ? 1.0 : -1.0;
    return sign * inject * inject / d_spectator * relay * relay * bracket * bracket;
}

AnalyticZzInputs analytic_inputs(const ElementSpectrum& c_alpha, const ElementSpectrum& q1,
                                 const ElementSpectrum& c_beta, const ElementSpectrum& q2,
                                 int coupler_type, double g, double g1, double g2, double g3,
                                 int connection_sign, const ElementSpectrum* oscillator,
                                 double g_o) {
    const auto [p, t] = analytic_level_pairs(coupler_type);
    if (c_alpha.levels() < 2 || c_beta.levels() < 2) {
        throw ValidationError("analytic zz: couplers need at least 2 retained levels");
    }
    if (q2.levels() <= p.second) {
        throw ValidationError("analytic zz: spectator keeps " + std::to_string(q2.levels()) +
                              " levels, transition " + std::to_string(p.first) + "-" +
                              std::to_string(p.second) + " needs " +
                              std::to_string(p.second + 1));
    }
    if (q1.levels() <= t.second) {
        throw ValidationError("analytic zz: neighbor qubit keeps " + std::to_string(q1.levels()) +
                              " levels, transition " + std::to_string(t.first) + "-" +
                              std::to_string(t.second) + " needs " +
                              std::to_string(t.second + 1));
    }

    AnalyticZzInputs in;
    in.coupler_type = coupler_type;
    in.connection_sign = connection_sign;
    in.f_ca_01 = c_alpha.transition(0, 1);
    in.f_cb_01 = c_beta.transition(0, 1);
    in.f_q2_p = q2.transition(p.first, p.second);
    in.f_q1_t = q1.transition(t.first, t.second);
    in.n_ca_01 = std::abs(c_alpha.n_elems(0, 1));
    in.n_cb_01 = std::abs(c_beta.n_elems(0, 1));
    in.n_q2_p = std::abs(q2.n_elems(p.first, p.second));
    in.n_q1_t = std::abs(q1.n_elems(t.first, t.second));
    in.g = g;
    in.g1 = g1;
    in.g2 = g2;
    in.g3 = g3;
    if (oscillator != nullptr) {
        if (oscillator->levels() < 2) {
            throw ValidationError("analytic zz: oscillator needs at least 2 retained levels");
        }
        in.has_oscillator = true;
        in.g_o = g_o;
        in.n_o = std::abs(oscillator->n_elems(0, 1));
        in.f_o = oscillator->transition(0, 1);
    }
    return in;
}

double eval_diagram(const DiagramPath& path, const std::vector<ElementSpectrum>& spectra) {
    const std::size_t n = spectra.size();
    if (path.base_state.size() != n) {
        throw ValidationError("diagram base state has " + std::to_string(path.base_state.size()) +
                              " digits for " + std::to_string(n) + " elements");
    }
    if (path.hops.empty()) {
        throw ValidationError("diagram has no hops");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (path.base_state[i] < 0 || path.base_state[i] >= spectra[i].levels()) {
            throw ValidationError("diagram base state digit " + std::to_string(i) +
                                  " out of range");
        }
    }

    BareLabel state = path.base_state;
    const double e_base = bare_energy(state, spectra);
    cplx amplitude(1.0, 0.0);
    double denom_product = 1.0;

    for (std::size_t h = 0; h < path.hops.size(); ++h) {
        const DiagramHop& hop = path.hops[h];
        if (hop.element_a < 0 || hop.element_a >= static_cast<int>(n) || hop.element_b < 0 ||
            hop.element_b >= static_cast<int>(n) || hop.element_a == hop.element_b) {
            throw ValidationError("diagram hop " + std::to_string(h) +
                                  " has invalid element indices");
        }
        const auto apply = [&](int elem, std::pair<int, int> lv) -> cplx {
            if (state[elem] != lv.first) {
                throw ValidationError("diagram hop " + std::to_string(h) + " expects element " +
                                      std::to_string(elem) + " at level " +
                                      std::to_string(lv.first) + ", state has level " +
                                      std::to_string(state[elem]));
            }
            if (lv.second < 0 || lv.second >= spectra[elem].levels()) {
                throw ValidationError("diagram hop " + std::to_string(h) + " leaves element " +
                                      std::to_string(elem) + " outside its retained levels");
            }
            const cplx me = spectra[elem].n_elems(lv.second, lv.first);
            if (std::abs(me) < forbidden_element_cut) {
                std::ostringstream os;
                os << "diagram hop " << h << ": transition " << lv.first << "-" << lv.second
                   << " of element " << elem << " is forbidden (|n| = " << std::abs(me) << ")";
                throw ForbiddenTransition(os.str());
            }
            state[elem] = lv.second;
            return me;
        };
        const cplx me_a = apply(hop.element_a, hop.levels_a);
        const cplx me_b = apply(hop.element_b, hop.levels_b);
        amplitude *= hop.g_ghz * me_a * me_b;

        if (h + 1 < path.hops.size()) {
            const double denom = e_base - bare_energy(state, spectra);
            if (std::abs(denom) < diagram_denom_guard_ghz) {
                std::ostringstream os;
                os << "diagram hop " << h << ": intermediate state is " << std::abs(denom)
                   << " GHz from the base state, inside the " << diagram_denom_guard_ghz
                   << " GHz guard";
                throw SingularDenominator(os.str());
            }
            denom_product *= denom;
        }
    }

    if (state != path.base_state) {
        throw ValidationError("diagram does not return to its base state (ends in " +
                              format_label(state) + ")");
    }
    return std::real(amplitude) / denom_product;
}

CompositeSpec negate_element_couplings(CompositeSpec spec, int element_index) {
    if (element_index < 0 || element_index >= static_cast<int>(spec.elements.size())) {
        throw ValidationError("element index " + std::to_string(element_index) +
                              " out of range for " + std::to_string(spec.elements.size()) +
                              " elements");
    }
    for (Coupling& c : spec.couplings) {
        if (c.a == element_index || c.b == element_index) {
            c.g_ghz = -c.g_ghz;
        }
    }
    return spec;
}

bool spectra_match(const CompositeSpec& a, const CompositeSpec& b, double tol_ghz) {
    const MatrixXcd ha = compose(a);
    const MatrixXcd hb = compose(b);
    if (ha.rows() != hb.rows()) {
        return false;
    }
    const VectorXd ea = eigh(ha).eigenvalues;
    const VectorXd eb = eigh(hb).eigenvalues;
    return (ea - eb).cwiseAbs().maxCoeff() <= tol_ghz;
}

bool sign_transform_check(const CompositeSpec& spec, int element_index) {
    return spectra_match(spec, negate_element_couplings(spec, element_index));
}

}  // namespace fluxlat
