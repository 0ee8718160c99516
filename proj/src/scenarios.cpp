#include "fluxlat/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "fluxlat/circuit.hpp"
#include "fluxlat/composite.hpp"
#include "fluxlat/dynamics.hpp"
#include "fluxlat/errors.hpp"
#include "fluxlat/leakage.hpp"
#include "fluxlat/metrics.hpp"
#include "fluxlat/parallel.hpp"
#include "fluxlat/perturbation.hpp"
#include "fluxlat/pulseopt.hpp"
#include "fluxlat/version.hpp"

namespace fluxlat {
namespace {

constexpr double knan = std::numeric_limits<double>::quiet_NaN();
constexpr double kinf = std::numeric_limits<double>::infinity();

const char* const kScenarios[] = {
    "ftf-sweep",      "nnn-sweep",   "cqcq-zz",        "analytic-vs-numeric",
    "squares-sweep",  "spectator-error", "leakage-map", "parasitic-drive",
    "czz-margin",
};

// ---------------------------------------------------------------------------
// schema checking: every helper records problems with a field path instead of
// bailing out, so a config author sees the complete list in one round

struct Checker {
    std::vector<std::string> problems;

    void add(const std::string& path, const std::string& msg) {
        problems.push_back(path + ": " + msg);
    }
    bool ok() const { return problems.empty(); }
};

const ordered_json* find_key(const ordered_json& j, const char* key) {
    if (!j.is_object()) return nullptr;
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

void check_keys(const ordered_json& j, const std::string& path,
                std::initializer_list<const char*> allowed, Checker& c) {
    if (!j.is_object()) return;
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) {
                known = true;
                break;
            }
        if (!known) c.add(path + "." + it.key(), "unknown key");
    }
}

std::string bound_text(double lo, bool strict) {
    char buf[48];
    snprintf(buf, sizeof(buf), "must be %s %g", strict ? ">" : ">=", lo);
    return buf;
}

double num_at(const ordered_json& j, const std::string& path, const char* key,
              bool required, double fallback, Checker& c, double lo = -kinf,
              bool strict = false) {
    const ordered_json* v = find_key(j, key);
    if (!v) {
        if (required) c.add(path + "." + key, "required key missing");
        return fallback;
    }
    if (!v->is_number()) {
        c.add(path + "." + key, "expected a number");
        return fallback;
    }
    double x = v->get<double>();
    if (!std::isfinite(x) || (strict ? !(x > lo) : !(x >= lo))) {
        c.add(path + "." + key, bound_text(lo, strict));
        return fallback;
    }
    return x;
}

double req_num(const ordered_json& j, const std::string& path, const char* key,
               Checker& c, double lo = -kinf, bool strict = false) {
    return num_at(j, path, key, true, 0.0, c, lo, strict);
}

double opt_num(const ordered_json& j, const std::string& path, const char* key,
               double fallback, Checker& c, double lo = -kinf, bool strict = false) {
    return num_at(j, path, key, false, fallback, c, lo, strict);
}

long opt_int(const ordered_json& j, const std::string& path, const char* key,
             long fallback, Checker& c, long lo) {
    const ordered_json* v = find_key(j, key);
    if (!v) return fallback;
    if (!v->is_number_integer() && !v->is_number_unsigned()) {
        c.add(path + "." + key, "expected an integer");
        return fallback;
    }
    long x = v->get<long>();
    if (x < lo) {
        c.add(path + "." + key, "must be >= " + std::to_string(lo));
        return fallback;
    }
    return x;
}

bool opt_bool(const ordered_json& j, const std::string& path, const char* key,
              bool fallback, Checker& c) {
    const ordered_json* v = find_key(j, key);
    if (!v) return fallback;
    if (!v->is_boolean()) {
        c.add(path + "." + key, "expected a boolean");
        return fallback;
    }
    return v->get<bool>();
}

std::string req_str(const ordered_json& j, const std::string& path, const char* key,
                    Checker& c) {
    const ordered_json* v = find_key(j, key);
    if (!v) {
        c.add(path + "." + key, "required key missing");
        return {};
    }
    if (!v->is_string() || v->get<std::string>().empty()) {
        c.add(path + "." + key, "expected a nonempty string");
        return {};
    }
    return v->get<std::string>();
}

std::string opt_str(const ordered_json& j, const std::string& path, const char* key,
                    const std::string& fallback, Checker& c) {
    const ordered_json* v = find_key(j, key);
    if (!v) return fallback;
    if (!v->is_string() || v->get<std::string>().empty()) {
        c.add(path + "." + key, "expected a nonempty string");
        return fallback;
    }
    return v->get<std::string>();
}

/// Sweep grid: either an explicit {"values": [...]} list or a generated
/// {"start", "stop", "count"} ramp, geometric when "log" is set.
std::vector<double> grid_values(const ordered_json& j, const std::string& path,
                                Checker& c, double lo = -kinf, bool strict = false) {
    std::vector<double> out;
    if (!j.is_object()) {
        c.add(path, "expected a grid object ({values} or {start, stop, count})");
        return out;
    }
    const size_t before = c.problems.size();
    if (find_key(j, "values")) {
        check_keys(j, path, {"values"}, c);
        const ordered_json& v = *find_key(j, "values");
        if (!v.is_array() || v.empty()) {
            c.add(path + ".values", "expected a nonempty array of numbers");
            return out;
        }
        for (size_t i = 0; i < v.size(); ++i) {
            const std::string ip = path + ".values[" + std::to_string(i) + "]";
            if (!v[i].is_number()) {
                c.add(ip, "expected a number");
                continue;
            }
            double x = v[i].get<double>();
            if (!std::isfinite(x) || (strict ? !(x > lo) : !(x >= lo)))
                c.add(ip, bound_text(lo, strict));
            out.push_back(x);
        }
    } else {
        check_keys(j, path, {"start", "stop", "count", "log"}, c);
        double start = req_num(j, path, "start", c, lo, strict);
        double stop = req_num(j, path, "stop", c, lo, strict);
        long count = opt_int(j, path, "count", -1, c, 1);
        if (count < 0) c.add(path + ".count", "required key missing");
        bool log = opt_bool(j, path, "log", false, c);
        if (log && (start <= 0 || stop <= 0))
            c.add(path, "log grids need start > 0 and stop > 0");
        if (c.problems.size() != before) return out;
        for (long i = 0; i < count; ++i) {
            double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
            out.push_back(log ? start * std::pow(stop / start, t)
                              : start + (stop - start) * t);
        }
    }
    return c.problems.size() == before ? out : std::vector<double>{};
}

// ---------------------------------------------------------------------------
// circuit elements

/// Element as configured. Transmons may be pinned by target frequency
/// instead of E_J; the tuning happens when the element is built.
struct ElementConfig {
    ElementParams params;
    double f01_target = 0.0;
};

ElementConfig element_config(const ordered_json& j, const std::string& path,
                             Checker& c, ElementKind want) {
    ElementConfig e;
    if (!j.is_object()) {
        c.add(path, "expected an element object");
        return e;
    }
    check_keys(j, path,
               {"kind", "ec_ghz", "ej_ghz", "el_ghz", "f01_ghz", "phi_ext_rad",
                "basis_dim", "keep_levels", "name"},
               c);
    std::string kind = req_str(j, path, "kind", c);
    if (!kind.empty() && kind != "fluxonium" && kind != "transmon" &&
        kind != "oscillator") {
        c.add(path + ".kind", "expected fluxonium, transmon, or oscillator");
        return e;
    }
    ElementKind k = kind == "transmon"     ? ElementKind::Transmon
                    : kind == "oscillator" ? ElementKind::Oscillator
                                           : ElementKind::Fluxonium;
    if (!kind.empty() && k != want) {
        c.add(path + ".kind", std::string("this slot takes a ") +
                                  to_string(want) + " element");
        return e;
    }
    e.params.kind = k;
    e.params.ec_ghz = req_num(j, path, "ec_ghz", c, 0.0, true);
    e.params.basis_dim = static_cast<int>(opt_int(j, path, "basis_dim", 0, c, 0));
    e.params.keep_levels = static_cast<int>(opt_int(j, path, "keep_levels", 0, c, 0));
    e.params.name = opt_str(j, path, "name", "", c);

    switch (k) {
        case ElementKind::Fluxonium:
            e.params.ej_ghz = req_num(j, path, "ej_ghz", c, 0.0);
            e.params.el_ghz = req_num(j, path, "el_ghz", c, 0.0, true);
            e.params.phi_ext =
                opt_num(j, path, "phi_ext_rad", std::numbers::pi, c);
            if (find_key(j, "f01_ghz"))
                c.add(path + ".f01_ghz", "only transmons take a frequency target");
            break;
        case ElementKind::Transmon: {
            bool has_ej = find_key(j, "ej_ghz") != nullptr;
            bool has_f01 = find_key(j, "f01_ghz") != nullptr;
            if (has_ej == has_f01)
                c.add(path, "transmons take exactly one of ej_ghz or f01_ghz");
            if (has_ej) e.params.ej_ghz = req_num(j, path, "ej_ghz", c, 0.0, true);
            if (has_f01) e.f01_target = req_num(j, path, "f01_ghz", c, 0.0, true);
            if (find_key(j, "el_ghz"))
                c.add(path + ".el_ghz", "transmons carry no inductive term");
            if (find_key(j, "phi_ext_rad"))
                c.add(path + ".phi_ext_rad", "transmons carry no flux bias");
            break;
        }
        case ElementKind::Oscillator:
            e.params.el_ghz = req_num(j, path, "el_ghz", c, 0.0, true);
            for (const char* bad : {"ej_ghz", "f01_ghz", "phi_ext_rad"})
                if (find_key(j, bad))
                    c.add(path + "." + bad, "oscillators take only ec_ghz and el_ghz");
            break;
    }
    return e;
}

ElementSpectrum build_configured(const ElementConfig& e) {
    ElementParams p = e.params;
    if (p.kind == ElementKind::Transmon && e.f01_target > 0.0) {
        // analytic seed sqrt(8 Ec Ej) - Ec ~ f01, refined by the tuner
        double f = e.f01_target + p.ec_ghz;
        p.ej_ghz = f * f / (8.0 * p.ec_ghz);
        p.ej_ghz = tune_transmon_ej(p, e.f01_target);
    }
    return build_element(p);
}

/// Fluxonium counterpart of tune_transmon_ej for detuning sweeps. In the
/// parameter region used here f_01 falls monotonically as E_J grows, so a
/// bracketed bisection is enough.
double fluxonium_ej_for_f01(ElementParams base, double target_f01) {
    auto f_at = [&base](double ej) {
        ElementParams p = base;
        p.ej_ghz = ej;
        return build_element(p).transition(0, 1);
    };
    double lo = base.ej_ghz > 0 ? base.ej_ghz : 1.0;
    double hi = lo;
    double f_lo = f_at(lo);
    double f_hi = f_lo;
    for (int i = 0; i < 60 && f_lo < target_f01; ++i) f_lo = f_at(lo *= 0.7);
    for (int i = 0; i < 60 && f_hi > target_f01; ++i) f_hi = f_at(hi *= 1.4);
    if (f_lo < target_f01 || f_hi > target_f01)
        throw ConvergenceError("no fluxonium E_J bracket reaches f01 = " +
                                   format_double(target_f01) + " GHz",
                               std::min(std::abs(f_lo - target_f01),
                                        std::abs(f_hi - target_f01)));
    for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
        double mid = 0.5 * (lo + hi);
        if (f_at(mid) > target_f01)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// scenario parameter tables

struct FtfParams {
    ElementConfig qubit, coupler;
    double g1 = 0, g2 = 0, min_overlap = 0.5;
    std::vector<double> g_ff, df;
};

FtfParams extract_ftf(const ordered_json& p, const std::string& path, Checker& c) {
    FtfParams out;
    check_keys(p, path,
               {"qubit", "coupler", "g1_ghz", "g2_ghz", "g_ff_ghz", "df_qq_ghz",
                "min_overlap"},
               c);
    for (const char* key : {"qubit", "coupler", "g_ff_ghz", "df_qq_ghz"})
        if (!find_key(p, key)) c.add(path + "." + key, "required key missing");
    if (const ordered_json* v = find_key(p, "qubit"))
        out.qubit = element_config(*v, path + ".qubit", c, ElementKind::Fluxonium);
    if (const ordered_json* v = find_key(p, "coupler"))
        out.coupler = element_config(*v, path + ".coupler", c, ElementKind::Transmon);
    out.g1 = req_num(p, path, "g1_ghz", c);
    out.g2 = req_num(p, path, "g2_ghz", c);
    if (const ordered_json* v = find_key(p, "g_ff_ghz"))
        out.g_ff = grid_values(*v, path + ".g_ff_ghz", c);
    if (const ordered_json* v = find_key(p, "df_qq_ghz"))
        out.df = grid_values(*v, path + ".df_qq_ghz", c);
    out.min_overlap = opt_num(p, path, "min_overlap", 0.5, c, 0.0, true);
    return out;
}

struct ChainParams {
    std::vector<ElementConfig> elements;
    std::vector<Coupling> couplings;
    double min_overlap = 0.5;
    std::vector<double> df;
};

std::vector<Coupling> coupling_list(const ordered_json& j, const std::string& path,
                                    int max_index, Checker& c) {
    std::vector<Coupling> out;
    if (!j.is_array() || j.empty()) {
        c.add(path, "expected a nonempty array of couplings");
        return out;
    }
    for (size_t i = 0; i < j.size(); ++i) {
        const std::string ip = path + "[" + std::to_string(i) + "]";
        const ordered_json& e = j[i];
        if (!e.is_object()) {
            c.add(ip, "expected a coupling object {a, b, g_ghz}");
            continue;
        }
        check_keys(e, ip, {"a", "b", "g_ghz"}, c);
        long a = opt_int(e, ip, "a", -1, c, 0);
        long b = opt_int(e, ip, "b", -1, c, 0);
        if (!find_key(e, "a")) c.add(ip + ".a", "required key missing");
        if (!find_key(e, "b")) c.add(ip + ".b", "required key missing");
        double g = req_num(e, ip, "g_ghz", c);
        if (a > max_index || b > max_index)
            c.add(ip, "element indices run 0.." + std::to_string(max_index));
        else if (a >= 0 && b >= 0 && a == b)
            c.add(ip, "a coupling joins two distinct elements");
        out.push_back({static_cast<int>(a), static_cast<int>(b), g});
    }
    return out;
}

ChainParams extract_nnn(const ordered_json& p, const std::string& path, Checker& c) {
    ChainParams out;
    check_keys(p, path, {"elements", "couplings", "df_qq_ghz", "min_overlap"}, c);
    const ordered_json* els = find_key(p, "elements");
    if (!els || !els->is_array() || els->size() != 5) {
        c.add(path + ".elements",
              "expected exactly 5 elements (qubit, coupler, qubit, coupler, qubit)");
    } else {
        for (int i = 0; i < 5; ++i)
            out.elements.push_back(element_config(
                (*els)[i], path + ".elements[" + std::to_string(i) + "]", c,
                i % 2 == 0 ? ElementKind::Fluxonium : ElementKind::Transmon));
    }
    if (const ordered_json* v = find_key(p, "couplings"))
        out.couplings = coupling_list(*v, path + ".couplings", 4, c);
    else
        c.add(path + ".couplings", "required key missing");
    if (const ordered_json* v = find_key(p, "df_qq_ghz"))
        out.df = grid_values(*v, path + ".df_qq_ghz", c);
    else
        c.add(path + ".df_qq_ghz", "required key missing");
    out.min_overlap = opt_num(p, path, "min_overlap", 0.5, c, 0.0, true);
    return out;
}

struct CqcqParams {
    ElementConfig c_alpha, q1, c_beta, q2, oscillator;
    bool has_oscillator = false;
    CouplerType type = CouplerType::C0;
    int connection_sign = 1;
    double g1 = 0, g2 = 0, g3 = 0, g_ff = 0, g_o = 0, min_overlap = 0.5;
    std::vector<double> g;
};

CqcqParams extract_cqcq(const ordered_json& p, const std::string& path, Checker& c,
                        bool analytic) {
    CqcqParams out;
    if (analytic)
        check_keys(p, path,
                   {"c_alpha", "q1", "c_beta", "q2", "coupler_type", "g1_ghz",
                    "g2_ghz", "g3_ghz", "g_ff_ghz", "g_ghz", "connection_sign",
                    "oscillator", "g_o_ghz", "min_overlap"},
                   c);
    else
        check_keys(p, path,
                   {"c_alpha", "q1", "c_beta", "q2", "coupler_type", "g1_ghz",
                    "g2_ghz", "g3_ghz", "g_ff_ghz", "g_ghz", "min_overlap"},
                   c);
    struct Slot {
        const char* key;
        ElementConfig* dst;
        ElementKind kind;
    } slots[] = {
        {"c_alpha", &out.c_alpha, ElementKind::Transmon},
        {"q1", &out.q1, ElementKind::Fluxonium},
        {"c_beta", &out.c_beta, ElementKind::Transmon},
        {"q2", &out.q2, ElementKind::Fluxonium},
    };
    for (const Slot& s : slots) {
        const ordered_json* v = find_key(p, s.key);
        if (!v)
            c.add(path + "." + s.key, "required key missing");
        else
            *s.dst = element_config(*v, path + "." + s.key, c, s.kind);
    }
    std::string type = req_str(p, path, "coupler_type", c);
    if (!type.empty()) {
        if (type != "C0" && type != "C1")
            c.add(path + ".coupler_type", "expected C0 or C1");
        else
            out.type = coupler_type_from_string(type);
    }
    out.g1 = req_num(p, path, "g1_ghz", c);
    out.g2 = req_num(p, path, "g2_ghz", c);
    out.g3 = req_num(p, path, "g3_ghz", c);
    out.g_ff = req_num(p, path, "g_ff_ghz", c);
    if (const ordered_json* v = find_key(p, "g_ghz"))
        out.g = grid_values(*v, path + ".g_ghz", c);
    else
        c.add(path + ".g_ghz", "required key missing");
    out.min_overlap = opt_num(p, path, "min_overlap", 0.5, c, 0.0, true);

    if (analytic) {
        long sign = opt_int(p, path, "connection_sign", 1, c, -1);
        if (sign != 1 && sign != -1)
            c.add(path + ".connection_sign", "expected +1 or -1");
        else
            out.connection_sign = static_cast<int>(sign);
        const ordered_json* osc = find_key(p, "oscillator");
        out.has_oscillator = osc != nullptr;
        if (osc)
            out.oscillator =
                element_config(*osc, path + ".oscillator", c, ElementKind::Oscillator);
        if (out.has_oscillator != (find_key(p, "g_o_ghz") != nullptr))
            c.add(path, "oscillator and g_o_ghz come together");
        if (find_key(p, "g_o_ghz")) out.g_o = req_num(p, path, "g_o_ghz", c);
    }
    return out;
}

struct SquaresParams {
    ElementConfig c_edge, q_a, c_mid, q_b, oscillator;
    bool has_oscillator = false;
    CouplerType edge_type = CouplerType::C0;
    std::vector<Coupling> couplings;
    double g_o = 0, min_overlap = 0.5;
    std::vector<double> delta_cc;
};

SquaresParams extract_squares(const ordered_json& p, const std::string& path,
                              Checker& c) {
    SquaresParams out;
    check_keys(p, path,
               {"c_edge", "q_a", "c_mid", "q_b", "edge_type", "couplings",
                "delta_cc_ghz", "oscillator", "g_o_ghz", "min_overlap"},
               c);
    struct Slot {
        const char* key;
        ElementConfig* dst;
        ElementKind kind;
    } slots[] = {
        {"c_edge", &out.c_edge, ElementKind::Transmon},
        {"q_a", &out.q_a, ElementKind::Fluxonium},
        {"c_mid", &out.c_mid, ElementKind::Transmon},
        {"q_b", &out.q_b, ElementKind::Fluxonium},
    };
    for (const Slot& s : slots) {
        const ordered_json* v = find_key(p, s.key);
        if (!v)
            c.add(path + "." + s.key, "required key missing");
        else
            *s.dst = element_config(*v, path + "." + s.key, c, s.kind);
    }
    std::string type = req_str(p, path, "edge_type", c);
    if (!type.empty()) {
        if (type != "C0" && type != "C1")
            c.add(path + ".edge_type", "expected C0 or C1");
        else
            out.edge_type = coupler_type_from_string(type);
    }
    if (const ordered_json* v = find_key(p, "couplings"))
        out.couplings = coupling_list(*v, path + ".couplings", 4, c);
    else
        c.add(path + ".couplings", "required key missing");
    if (const ordered_json* v = find_key(p, "delta_cc_ghz"))
        out.delta_cc = grid_values(*v, path + ".delta_cc_ghz", c);
    else
        c.add(path + ".delta_cc_ghz", "required key missing");
    const ordered_json* osc = find_key(p, "oscillator");
    out.has_oscillator = osc != nullptr;
    if (osc)
        out.oscillator =
            element_config(*osc, path + ".oscillator", c, ElementKind::Oscillator);
    if (out.has_oscillator != (find_key(p, "g_o_ghz") != nullptr))
        c.add(path, "oscillator and g_o_ghz come together");
    if (find_key(p, "g_o_ghz")) out.g_o = req_num(p, path, "g_o_ghz", c);
    out.min_overlap = opt_num(p, path, "min_overlap", 0.5, c, 0.0, true);
    return out;
}

struct SpectatorParams {
    double gap = 0;
    std::vector<double> zeta, tau;
};

SpectatorParams extract_spectator(const ordered_json& p, const std::string& path,
                                  Checker& c) {
    SpectatorParams out;
    check_keys(p, path, {"gap_ghz", "zeta_cs_ghz", "tau_ns"}, c);
    out.gap = req_num(p, path, "gap_ghz", c, 0.0, true);
    if (const ordered_json* v = find_key(p, "zeta_cs_ghz"))
        out.zeta = grid_values(*v, path + ".zeta_cs_ghz", c, 0.0);
    else
        c.add(path + ".zeta_cs_ghz", "required key missing");
    if (const ordered_json* v = find_key(p, "tau_ns"))
        out.tau = grid_values(*v, path + ".tau_ns", c, 10.0);
    else
        c.add(path + ".tau_ns", "required key missing");
    for (double t : out.tau)
        if (t > 500.0) {
            c.add(path + ".tau_ns", "pulse durations run 10..500 ns");
            break;
        }
    return out;
}

struct LeakageParams {
    double gap = 0;
    std::vector<double> k, delta;
    std::vector<BareLabel> sources;
    PulseSpec pulse;  // duration 0 = calibrate at k = 0
};

LeakageParams extract_leakage(const ordered_json& p, const std::string& path,
                              Checker& c) {
    LeakageParams out;
    check_keys(p, path, {"gap_ghz", "k", "delta_ghz", "sources", "pulse"}, c);
    out.gap = req_num(p, path, "gap_ghz", c, 0.0, true);
    if (const ordered_json* v = find_key(p, "k"))
        out.k = grid_values(*v, path + ".k", c, 0.0);
    else
        c.add(path + ".k", "required key missing");
    if (const ordered_json* v = find_key(p, "delta_ghz"))
        out.delta = grid_values(*v, path + ".delta_ghz", c);
    else
        c.add(path + ".delta_ghz", "required key missing");

    if (const ordered_json* v = find_key(p, "sources")) {
        const std::string sp = path + ".sources";
        if (!v->is_array() || v->empty()) {
            c.add(sp, "expected a nonempty array of 3-bit labels");
        } else {
            for (size_t i = 0; i < v->size(); ++i) {
                const std::string ip = sp + "[" + std::to_string(i) + "]";
                if (!(*v)[i].is_string()) {
                    c.add(ip, "expected a string like \"110\"");
                    continue;
                }
                std::string s = (*v)[i].get<std::string>();
                if (s.size() != 3 || s.find_first_not_of("01") != std::string::npos)
                    c.add(ip, "expected three binary digits");
                else
                    out.sources.push_back(parse_bit_label(s));
            }
        }
    } else {
        out.sources = default_leakage_sources();
    }

    if (const ordered_json* v = find_key(p, "pulse")) {
        const std::string pp = path + ".pulse";
        if (!v->is_object()) {
            c.add(pp, "expected a pulse object");
        } else {
            const size_t before = c.problems.size();
            check_keys(*v, pp,
                       {"amplitude_ghz", "duration_ns", "detuning_ghz", "sigma_ns"},
                       c);
            double amp = req_num(*v, pp, "amplitude_ghz", c, 0.0);
            double dur = req_num(*v, pp, "duration_ns", c, 0.0, true);
            double det = opt_num(*v, pp, "detuning_ghz", 0.0, c);
            double sig = opt_num(*v, pp, "sigma_ns", 0.0, c, 0.0);
            // make_pulse resolves the sigma default (duration/4)
            if (c.problems.size() == before) out.pulse = make_pulse(amp, dur, det, sig);
        }
    }
    return out;
}

struct ParasiticParams {
    std::vector<double> d_mixing;
    DrivenQubit which = DrivenQubit::A;
    double theta = std::numbers::pi / 2;
    double tau = 20.0;
    double sigma = 0.0;
};

ParasiticParams extract_parasitic(const ordered_json& p, const std::string& path,
                                  Checker& c) {
    ParasiticParams out;
    check_keys(p, path, {"d_mixing", "which", "theta_rad", "duration_ns", "sigma_ns"},
               c);
    if (const ordered_json* v = find_key(p, "d_mixing")) {
        out.d_mixing = grid_values(*v, path + ".d_mixing", c, 0.0);
        for (double d : out.d_mixing)
            if (d >= 1.0) {
                c.add(path + ".d_mixing", "mixing runs 0 <= D < 1");
                break;
            }
    } else {
        c.add(path + ".d_mixing", "required key missing");
    }
    std::string which = opt_str(p, path, "which", "A", c);
    if (which != "A" && which != "B")
        c.add(path + ".which", "expected A or B");
    else
        out.which = which == "A" ? DrivenQubit::A : DrivenQubit::B;
    out.theta = opt_num(p, path, "theta_rad", std::numbers::pi / 2, c, 0.0, true);
    out.tau = opt_num(p, path, "duration_ns", 20.0, c, 0.0, true);
    out.sigma = opt_num(p, path, "sigma_ns", 0.0, c, 0.0);
    return out;
}

struct CzzParams {
    double f_c1u = 0, f_q03 = 0, f_c0l = 0, f_q12 = 0;
};

CzzParams extract_czz(const ordered_json& p, const std::string& path, Checker& c) {
    CzzParams out;
    check_keys(p, path, {"f_c1u_01_ghz", "f_q_03_ghz", "f_c0l_01_ghz", "f_q_12_ghz"},
               c);
    out.f_c1u = req_num(p, path, "f_c1u_01_ghz", c, 0.0, true);
    out.f_q03 = req_num(p, path, "f_q_03_ghz", c, 0.0, true);
    out.f_c0l = req_num(p, path, "f_c0l_01_ghz", c, 0.0, true);
    out.f_q12 = req_num(p, path, "f_q_12_ghz", c, 0.0, true);
    return out;
}

void validate_parameters(const std::string& scenario, const ordered_json& p,
                         Checker& c) {
    const std::string path = "parameters";
    if (!p.is_object()) {
        c.add(path, "expected an object");
        return;
    }
    if (scenario == "ftf-sweep")
        extract_ftf(p, path, c);
    else if (scenario == "nnn-sweep")
        extract_nnn(p, path, c);
    else if (scenario == "cqcq-zz")
        extract_cqcq(p, path, c, false);
    else if (scenario == "analytic-vs-numeric")
        extract_cqcq(p, path, c, true);
    else if (scenario == "squares-sweep")
        extract_squares(p, path, c);
    else if (scenario == "spectator-error")
        extract_spectator(p, path, c);
    else if (scenario == "leakage-map")
        extract_leakage(p, path, c);
    else if (scenario == "parasitic-drive")
        extract_parasitic(p, path, c);
    else if (scenario == "czz-margin")
        extract_czz(p, path, c);
}

// ---------------------------------------------------------------------------
// scenario execution

SweepResult result_shell(const ScenarioConfig& cfg) {
    SweepResult r;
    r.scenario = cfg.scenario;
    r.config_hash = cfg.config_hash;
    r.code_version = code_version;
    return r;
}

/// Create every column before taking any pointer: column() appends to the
/// result's column store, which may reallocate and move earlier vectors.
std::vector<std::vector<double>*> nan_columns(SweepResult& r,
                                              const std::vector<const char*>& names) {
    for (const char* n : names) r.column(n).assign(r.points(), knan);
    std::vector<std::vector<double>*> out;
    for (const char* n : names) out.push_back(&r.column(n));
    return out;
}

template <typename F>
void guarded(F&& f) {
    try {
        f();
    } catch (const std::exception&) {
        // leave NaN in place; a broken grid point must not sink the sweep
    }
}

SweepResult run_ftf(const ScenarioConfig& cfg, int threads) {
    Checker c;
    FtfParams p = extract_ftf(cfg.parameters, "parameters", c);
    ElementSpectrum q1 = build_configured(p.qubit);
    ElementSpectrum coupler = build_configured(p.coupler);
    const double f01 = q1.transition(0, 1);

    // one partner qubit per detuning value, re-tuned through E_J
    std::vector<ElementSpectrum> q2;
    for (double df : p.df) {
        ElementParams b = q1.params;
        b.ej_ghz = fluxonium_ej_for_f01(b, f01 + df);
        b.name = "Q2";
        q2.push_back(build_element(b));
    }

    SweepResult r = result_shell(cfg);
    r.axes = {{"g_ff_ghz", p.g_ff, {}}, {"df_qq_ghz", p.df, {}}};
    auto cols = nan_columns(r, {"d_hybridization", "zeta_qq_ghz"});
    std::vector<double>& d_col = *cols[0];
    std::vector<double>& zz_col = *cols[1];

    const long ndf = static_cast<long>(p.df.size());
    grid_map(static_cast<int>(r.points()), threads, [&](int flat) {
        const long ig = flat / ndf, idf = flat % ndf;
        guarded([&] {
            CompositeSpec spec;
            spec.elements = {q1, coupler, q2[idf]};
            spec.couplings = {{0, 1, p.g1}, {1, 2, p.g2}, {0, 2, p.g_ff[ig]}};
            DressedSpectrum d = diagonalize(spec, p.min_overlap, 1);
            d_col[flat] = hybridization(d, {1, 0, 0}, {0, 0, 1}).value;
            zz_col[flat] = zz_qubit_qubit(d, 0, 2).value;
        });
    });
    return r;
}

SweepResult run_nnn(const ScenarioConfig& cfg, int threads) {
    Checker c;
    ChainParams p = extract_nnn(cfg.parameters, "parameters", c);
    std::vector<ElementSpectrum> chain;
    for (const ElementConfig& e : p.elements) chain.push_back(build_configured(e));
    const double f01 = chain[0].transition(0, 1);

    std::vector<ElementSpectrum> edge;
    for (double df : p.df) {
        ElementParams b = chain[4].params;
        b.ej_ghz = fluxonium_ej_for_f01(b, f01 + df);
        edge.push_back(build_element(b));
    }

    SweepResult r = result_shell(cfg);
    r.axes = {{"df_qq_ghz", p.df, {}}};
    auto cols = nan_columns(r, {"d_nnn", "zeta_qq_ghz", "error_estimate"});
    std::vector<double>& d_col = *cols[0];
    std::vector<double>& zz_col = *cols[1];
    std::vector<double>& err_col = *cols[2];

    grid_map(static_cast<int>(r.points()), threads, [&](int flat) {
        guarded([&] {
            CompositeSpec spec;
            spec.elements = {chain[0], chain[1], chain[2], chain[3], edge[flat]};
            spec.couplings = p.couplings;
            DressedSpectrum d = diagonalize(spec, p.min_overlap, 1);
            MetricValue dn = hybridization_nnn(d);
            d_col[flat] = dn.value;
            err_col[flat] = hybridization_error(dn.value);
            zz_col[flat] = zz_qubit_qubit(d, 0, 4).value;
        });
    });
    return r;
}

CompositeSpec cqcq_spec(const CqcqParams& p, const ElementSpectrum& ca,
                        const ElementSpectrum& q1, const ElementSpectrum& cb,
                        const ElementSpectrum& q2, const ElementSpectrum* osc,
                        double g) {
    CompositeSpec spec;
    spec.elements = {ca, q1, cb, q2};
    spec.couplings = {{0, 1, p.g1}, {1, 2, p.g2}, {2, 3, p.g3},
                      {0, 2, g},    {1, 3, p.g_ff}};
    if (osc) {
        spec.elements.push_back(*osc);
        spec.couplings.push_back({0, 4, p.g_o});
        spec.couplings.push_back(
            {2, 4, static_cast<double>(p.connection_sign) * p.g_o});
    }
    return spec;
}

SweepResult run_cqcq(const ScenarioConfig& cfg, int threads, bool analytic) {
    Checker c;
    CqcqParams p = extract_cqcq(cfg.parameters, "parameters", c, analytic);
    ElementSpectrum ca = build_configured(p.c_alpha);
    ElementSpectrum q1 = build_configured(p.q1);
    ElementSpectrum cb = build_configured(p.c_beta);
    ElementSpectrum q2 = build_configured(p.q2);
    ElementSpectrum osc;
    if (p.has_oscillator) osc = build_configured(p.oscillator);
    const ElementSpectrum* osc_ptr = p.has_oscillator ? &osc : nullptr;

    SweepResult r = result_shell(cfg);
    r.axes = {{"g_ghz", p.g, {}}};
    std::vector<const char*> names;
    if (analytic)
        names = {"zeta_cs_numeric_ghz", "zeta_cs_analytic_ghz", "sign_match",
                 "degenerate"};
    else
        names = {"zeta_cs_ghz", "degenerate"};
    auto cols = nan_columns(r, names);
    std::vector<double>& num_col = *cols[0];
    std::vector<double>* ana_col = analytic ? cols[1] : nullptr;
    std::vector<double>* sign_col = analytic ? cols[2] : nullptr;
    std::vector<double>& deg_col = *cols.back();

    AnalyticZzInputs base;
    if (analytic)
        base = analytic_inputs(ca, q1, cb, q2, static_cast<int>(p.type), 0.0, p.g1,
                               p.g2, p.g3, p.connection_sign, osc_ptr, p.g_o);

    grid_map(static_cast<int>(r.points()), threads, [&](int flat) {
        guarded([&] {
            DressedSpectrum d = diagonalize(
                cqcq_spec(p, ca, q1, cb, q2, osc_ptr, p.g[flat]), p.min_overlap, 1);
            MetricValue m = zz_coupler_spectator(d, p.type);
            num_col[flat] = m.value;
            deg_col[flat] = m.degenerate ? 1.0 : 0.0;
        });
        if (analytic) {
            guarded([&] {
                AnalyticZzInputs in = base;
                in.g = p.g[flat];
                (*ana_col)[flat] = zz_cs_analytic(in);
            });
            double n = num_col[flat], a = (*ana_col)[flat];
            if (std::isfinite(n) && std::isfinite(a))
                (*sign_col)[flat] = (n >= 0) == (a >= 0) ? 1.0 : 0.0;
        }
    });
    return r;
}

SweepResult run_squares(const ScenarioConfig& cfg, int threads) {
    Checker c;
    SquaresParams p = extract_squares(cfg.parameters, "parameters", c);
    ElementSpectrum c_left = build_configured(p.c_edge);
    ElementSpectrum q_a = build_configured(p.q_a);
    ElementSpectrum c_mid = build_configured(p.c_mid);
    ElementSpectrum q_b = build_configured(p.q_b);
    ElementSpectrum osc;
    if (p.has_oscillator) osc = build_configured(p.oscillator);
    const double f01 = c_left.transition(0, 1);

    // the right edge coupler carries the detuning
    std::vector<ElementSpectrum> c_right;
    for (double dcc : p.delta_cc) {
        ElementConfig e;
        e.params = c_left.params;
        e.f01_target = f01 + dcc;
        c_right.push_back(build_configured(e));
    }

    SweepResult r = result_shell(cfg);
    if (p.has_oscillator)
        r.axes = {{"oscillator", {}, {"off", "on"}}, {"delta_cc_ghz", p.delta_cc, {}}};
    else
        r.axes = {{"delta_cc_ghz", p.delta_cc, {}}};

    auto cols = nan_columns(
        r, {"zeta_cs_left_ghz", "zeta_cs_right_ghz", "zeta_cc_ghz",
            "d_target_target", "d_target_side", "d_side_target"});

    const long nd = static_cast<long>(p.delta_cc.size());
    const int x = static_cast<int>(p.edge_type);
    grid_map(static_cast<int>(r.points()), threads, [&](int flat) {
        const bool with_osc = p.has_oscillator && flat / nd == 1;
        const long id = flat % nd;
        guarded([&] {
            CompositeSpec spec;
            spec.elements = {c_left, q_a, c_mid, q_b, c_right[id]};
            spec.couplings = p.couplings;
            if (with_osc) {
                spec.elements.push_back(osc);
                spec.couplings.push_back({0, 5, p.g_o});
                spec.couplings.push_back({4, 5, -p.g_o});
            }
            DressedSpectrum d = diagonalize(spec, p.min_overlap, 1);
            const size_t n = spec.elements.size();
            auto label = [&](int e0, int e1, int e3, int e4) {
                BareLabel l(n, 0);
                l[0] = e0;
                l[1] = e1;
                l[3] = e3;
                l[4] = e4;
                return l;
            };
            guarded([&] {
                (*cols[0])[flat] =
                    zz_coupler_spectator_chain(d, ChainSide::Left, p.edge_type).value;
            });
            guarded([&] {
                (*cols[1])[flat] =
                    zz_coupler_spectator_chain(d, ChainSide::Right, p.edge_type).value;
            });
            guarded([&] {
                (*cols[2])[flat] = zz_coupler_coupler(d, p.edge_type).value;
            });
            const int xb = 1 - x;
            (*cols[3])[flat] =
                hybridization(d, label(1, x, x, 0), label(0, x, x, 1)).value;
            (*cols[4])[flat] =
                hybridization(d, label(1, x, xb, 0), label(0, x, xb, 1)).value;
            (*cols[5])[flat] =
                hybridization(d, label(1, xb, x, 0), label(0, xb, x, 1)).value;
        });
    });
    return r;
}

SweepResult run_spectator(const ScenarioConfig& cfg, int threads) {
    Checker c;
    SpectatorParams p = extract_spectator(cfg.parameters, "parameters", c);
    SweepResult r = spectator_sweep(p.gap, p.zeta, p.tau, threads);
    r.config_hash = cfg.config_hash;
    return r;
}

SweepResult run_leakage(const ScenarioConfig& cfg, int threads) {
    Checker c;
    LeakageParams p = extract_leakage(cfg.parameters, "parameters", c);
    SweepResult r = leakage_map(p.gap, p.k, p.delta, p.sources, p.pulse, threads);
    r.config_hash = cfg.config_hash;
    return r;
}

SweepResult run_parasitic(const ScenarioConfig& cfg, int threads) {
    Checker c;
    ParasiticParams p = extract_parasitic(cfg.parameters, "parameters", c);

    SweepResult r = result_shell(cfg);
    r.axes = {{"d_mixing", p.d_mixing, {}}};
    auto cols = nan_columns(r, {"eps_total", "eps_ph", "eps_leak", "error_estimate"});
    std::vector<double>& tot_col = *cols[0];
    std::vector<double>& ph_col = *cols[1];
    std::vector<double>& leak_col = *cols[2];
    std::vector<double>& est_col = *cols[3];

    // drive area setting the target rotation angle: 2 pi * area = theta
    const double area = p.theta / (2.0 * std::numbers::pi);
    const PulseSpec pulse =
        make_pulse(amplitude_for_area(area, p.tau, p.sigma), p.tau, 0.0, p.sigma);

    grid_map(static_cast<int>(r.points()), threads, [&](int flat) {
        guarded([&] {
            ReducedModel m = build_parasitic_drive(p.d_mixing[flat], p.which, p.theta);
            MatrixXcd u = propagate(m, pulse);
            GateReport rep = gate_error(u, m.u_ideal, m.comp_labels);
            tot_col[flat] = rep.eps_total;
            ph_col[flat] = rep.eps_ph;
            leak_col[flat] = rep.eps_leak;
            est_col[flat] = hybridization_error(p.d_mixing[flat]);
        });
    });
    return r;
}

SweepResult run_czz(const ScenarioConfig& cfg) {
    Checker c;
    CzzParams p = extract_czz(cfg.parameters, "parameters", c);
    SweepResult r = result_shell(cfg);
    r.column("f_c1u_01_ghz") = {p.f_c1u};
    r.column("f_q_03_ghz") = {p.f_q03};
    r.column("f_c0l_01_ghz") = {p.f_c0l};
    r.column("f_q_12_ghz") = {p.f_q12};
    r.column("margin_ghz") = {
        czz_resonance_margin(p.f_c1u, p.f_q03, p.f_c0l, p.f_q12)};
    return r;
}

}  // namespace

ScenarioConfig parse_config(const std::string& raw_bytes) {
    ordered_json j;
    try {
        j = ordered_json::parse(raw_bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("config is not valid JSON: ") + e.what());
    }

    Checker c;
    ScenarioConfig cfg;
    cfg.config_hash = fnv1a_hex(raw_bytes);
    if (!j.is_object()) {
        c.add("$", "top level must be an object");
    } else {
        check_keys(j, "$", {"scenario", "output", "format", "plot", "parameters"}, c);
        cfg.scenario = req_str(j, "$", "scenario", c);
        const bool scenario_known =
            !cfg.scenario.empty() &&
            std::find_if(std::begin(kScenarios), std::end(kScenarios),
                         [&](const char* s) { return cfg.scenario == s; }) !=
                std::end(kScenarios);
        if (!cfg.scenario.empty() && !scenario_known)
            c.add("$.scenario", "unknown scenario '" + cfg.scenario + "'");
        cfg.output = opt_str(j, "$", "output", cfg.scenario, c);
        cfg.format = opt_str(j, "$", "format", "csv", c);
        if (cfg.format != "csv" && cfg.format != "json")
            c.add("$.format", "expected csv or json");
        cfg.plot = opt_bool(j, "$", "plot", false, c);
        const ordered_json* params = find_key(j, "parameters");
        if (!params) {
            c.add("$.parameters", "required key missing");
        } else {
            cfg.parameters = *params;
            // the parameter table is only checkable against a known scenario
            if (scenario_known)
                validate_parameters(cfg.scenario, cfg.parameters, c);
        }
    }

    if (!c.ok()) {
        std::string msg = "config validation failed:";
        for (const std::string& p : c.problems) msg += "\n  " + p;
        throw ValidationError(msg);
    }
    return cfg;
}

SweepResult run_scenario(const ScenarioConfig& cfg, int threads) {
    const auto t0 = std::chrono::steady_clock::now();
    threads = resolve_thread_count(threads);

    SweepResult r;
    if (cfg.scenario == "ftf-sweep")
        r = run_ftf(cfg, threads);
    else if (cfg.scenario == "nnn-sweep")
        r = run_nnn(cfg, threads);
    else if (cfg.scenario == "cqcq-zz")
        r = run_cqcq(cfg, threads, false);
    else if (cfg.scenario == "analytic-vs-numeric")
        r = run_cqcq(cfg, threads, true);
    else if (cfg.scenario == "squares-sweep")
        r = run_squares(cfg, threads);
    else if (cfg.scenario == "spectator-error")
        r = run_spectator(cfg, threads);
    else if (cfg.scenario == "leakage-map")
        r = run_leakage(cfg, threads);
    else if (cfg.scenario == "parasitic-drive")
        r = run_parasitic(cfg, threads);
    else if (cfg.scenario == "czz-margin")
        r = run_czz(cfg);
    else
        throw ValidationError("unknown scenario '" + cfg.scenario + "'");

    r.wall_time_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return r;
}

std::string config_schema() {
    ordered_json s;
    s["config"] = {
        {"scenario", "required; one of: ftf-sweep, nnn-sweep, cqcq-zz, "
                     "analytic-vs-numeric, squares-sweep, spectator-error, "
                     "leakage-map, parasitic-drive, czz-margin"},
        {"output", "optional file prefix for results (default: scenario name)"},
        {"format", "optional; csv or json (default csv)"},
        {"plot", "optional boolean (default false)"},
        {"parameters", "required; scenario-specific table, see parameters"},
    };
    s["types"]["element"] = {
        {"kind", "fluxonium | transmon | oscillator"},
        {"ec_ghz", "charging energy, required, > 0"},
        {"ej_ghz", "Josephson energy; fluxonium: required; transmon: this or f01_ghz"},
        {"el_ghz", "inductive energy; fluxonium and oscillator only, > 0"},
        {"f01_ghz", "transmon only: tune E_J to hit this 0-1 frequency"},
        {"phi_ext_rad", "fluxonium flux bias (default pi, the sweet spot)"},
        {"basis_dim", "working basis size (default per kind)"},
        {"keep_levels", "retained eigenlevels (default per kind)"},
        {"name", "optional tag used in diagnostics"},
    };
    s["types"]["grid"] =
        "either {\"values\": [..]} or {\"start\", \"stop\", \"count\", "
        "\"log\"?}; log grids are geometric";
    s["types"]["coupling"] = {
        {"a", "element index"},
        {"b", "element index"},
        {"g_ghz", "coefficient of n_a * n_b"},
    };
    s["parameters"]["ftf-sweep"] = {
        {"qubit", "fluxonium element (both qubits; the partner is re-tuned)"},
        {"coupler", "transmon element"},
        {"g1_ghz", "qubit-coupler coupling"},
        {"g2_ghz", "coupler-qubit coupling"},
        {"g_ff_ghz", "grid: direct qubit-qubit coupling"},
        {"df_qq_ghz", "grid: qubit detuning, applied through E_J re-tuning"},
        {"min_overlap", "optional label-assignment threshold (default 0.5)"},
    };
    s["parameters"]["nnn-sweep"] = {
        {"elements", "5 elements: qubit, coupler, qubit, coupler, qubit"},
        {"couplings", "coupling list over indices 0..4"},
        {"df_qq_ghz", "grid: edge-qubit detuning (element 4 re-tuned)"},
        {"min_overlap", "optional (default 0.5)"},
    };
    s["parameters"]["cqcq-zz"] = {
        {"c_alpha", "transmon element"},
        {"q1", "fluxonium element"},
        {"c_beta", "transmon element"},
        {"q2", "fluxonium element (the spectator)"},
        {"coupler_type", "C0 or C1"},
        {"g1_ghz", "C_alpha-Q_1 coupling"},
        {"g2_ghz", "Q_1-C_beta coupling"},
        {"g3_ghz", "C_beta-Q_2 coupling"},
        {"g_ff_ghz", "Q_1-Q_2 coupling"},
        {"g_ghz", "grid: direct coupler-coupler coupling (the sweep variable)"},
        {"min_overlap", "optional (default 0.5)"},
    };
    s["parameters"]["analytic-vs-numeric"] = {
        {"(all cqcq-zz keys)", "same model as cqcq-zz"},
        {"connection_sign", "optional +1 or -1 (default +1)"},
        {"oscillator", "optional oscillator element, wired to both couplers"},
        {"g_o_ghz", "oscillator coupling; required with oscillator"},
    };
    s["parameters"]["squares-sweep"] = {
        {"c_edge", "transmon element; both edge couplers, right one re-tuned"},
        {"q_a", "fluxonium element"},
        {"c_mid", "transmon element"},
        {"q_b", "fluxonium element"},
        {"edge_type", "C0 or C1"},
        {"couplings", "coupling list over chain indices 0..4"},
        {"delta_cc_ghz", "grid: edge-coupler detuning"},
        {"oscillator", "optional; adds an off/on axis with differential wiring"},
        {"g_o_ghz", "oscillator coupling; required with oscillator"},
        {"min_overlap", "optional (default 0.5)"},
    };
    s["parameters"]["spectator-error"] = {
        {"gap_ghz", "spectral gap, > 0"},
        {"zeta_cs_ghz", "grid: coupler-spectator ZZ values, >= 0"},
        {"tau_ns", "grid: pulse durations, 10..500 ns"},
    };
    s["parameters"]["leakage-map"] = {
        {"gap_ghz", "spectral gap, > 0"},
        {"k", "grid: relative side-transition drive strength, >= 0"},
        {"delta_ghz", "grid: leakage-level detuning"},
        {"sources", "optional list of 3-bit source labels (default 110, 111, 000)"},
        {"pulse", "optional {amplitude_ghz, duration_ns, detuning_ghz?, sigma_ns?}; "
                  "omitted = calibrate at k = 0"},
    };
    s["parameters"]["parasitic-drive"] = {
        {"d_mixing", "grid: parasitic mixing D, 0 <= D < 1"},
        {"which", "optional driven qubit, A or B (default A)"},
        {"theta_rad", "optional target rotation (default pi/2)"},
        {"duration_ns", "optional pulse length (default 20)"},
        {"sigma_ns", "optional envelope width (default duration/4)"},
    };
    s["parameters"]["czz-margin"] = {
        {"f_c1u_01_ghz", "C1_U coupler 0-1 frequency"},
        {"f_q_03_ghz", "qubit 0-3 frequency"},
        {"f_c0l_01_ghz", "C0_L coupler 0-1 frequency"},
        {"f_q_12_ghz", "qubit 1-2 frequency"},
    };
    return s.dump(2) + "\n";
}

}  // namespace fluxlat
