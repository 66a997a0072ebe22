#include "internal.hpp"

#include "zq/formal/series.hpp"

#include <chrono>
#include <sstream>

namespace zq::verify {

namespace {

using namespace detail;

struct Candidate {
    Realization r;
    TensorState v;
    int weight;  // <lambda, h_1>
};

Candidate candidate(int k, const std::string& label) {
    using fock::CliffordWord;
    using fock::Sector;
    using fock::Spin;
    if (k == 1) {
        if (label == "L0") return {Realization::k1, TensorState{{}, std::nullopt, {0}}, 0};
        if (label == "L1") return {Realization::k1, TensorState{{}, std::nullopt, {1}}, 1};
    } else if (k == 2) {
        if (label == "2L0") return {Realization::k2_ns, TensorState{{}, CliffordWord{Sector::NS, {}, Spin::none}, {0}}, 0};
        if (label == "2L1") return {Realization::k2_ns, TensorState{{}, CliffordWord{Sector::NS, {}, Spin::none}, {2}}, 2};
        if (label == "L0+L1") return {Realization::k2_r, TensorState{{}, CliffordWord{Sector::R, {}, Spin::plus}, {1}}, 1};
    }
    throw std::invalid_argument("unknown module label '" + label + "' at level " + std::to_string(k));
}

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// membership in the declared subspace of the k = 2 realization
bool in_subspace(const std::string& label, const TensorState& s) {
    const int len = static_cast<int>(s.clifford->length());
    const int twice = s.lattice.twice_charge;  // beta = (twice/2) alpha
    if (label == "2L0" || label == "2L1") {
        if (twice % 2 != 0) return false;
        const int parity = (len + twice / 2) % 2 == 0 ? 0 : 1;
        return label == "2L0" ? parity == 0 : parity == 1;
    }
    if (twice % 2 == 0) return false;
    const int minus = s.clifford->spin == fock::Spin::minus ? 1 : 0;
    const int m = (twice - 1) / 2;  // beta = alpha/2 + m alpha
    return ((len + minus + m) % 2 + 2) % 2 == 0;
}

std::string to_string(const std::map<std::vector<int>, mpq_class>& m) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [key, v] : m) {
        if (!first) os << ", ";
        first = false;
        os << "[";
        for (std::size_t i = 0; i < key.size(); ++i) os << (i ? "," : "") << key[i];
        os << "]: " << v.get_str();
    }
    os << "}";
    return os.str();
}

}  // namespace

std::vector<std::string> module_labels(int k) {
    if (k == 1) return {"L0", "L1"};
    if (k == 2) return {"2L0", "2L1", "L0+L1"};
    return {};
}

CheckReport check_highest_weight(int k, const std::string& label) {
    const auto t0 = std::chrono::steady_clock::now();
    const Candidate c = candidate(k, label);
    const vertex::CurrentAlgebra& ca = vertex::current_algebra(c.r);
    ca.require_member(c.v);
    const ModuleVector v = unit(c.v);
    const std::string vid = fock::to_string(c.v);
    std::vector<Entry> entries;
    entries.push_back(compare(json::array({"x+", 0}), vid, ca.x_mode(1, 0, v), {}));
    entries.push_back(compare(json::array({"x-K^-1", 1}), vid, ca.x_mode(-1, 1, ca.phi_mode(0, v)), {}));
    entries.push_back(compare(json::array({"K", 0}), vid, ca.psi_mode(0, v), fock::scaled(v, qp(c.weight))));
    // gamma from the Heisenberg bracket [b(1), b(-1)] = (q^2 - q^{-2})(gamma - gamma^{-1})
    const ModuleVector bracket = fock::difference(fock::heis_act(1, k, fock::heis_act(-1, k, v)), fock::heis_act(-1, k, fock::heis_act(1, k, v)));
    entries.push_back(compare(json::array({"gamma", 1}), vid, bracket, fock::scaled(v, (qp(2) - qp(-2)) * (qp(k) - qp(-k)))));
    for (int n = 1; n <= 3; ++n) {
        entries.push_back(compare(json::array({"x+", n}), vid, ca.x_mode(1, n, v), {}));
        entries.push_back(compare(json::array({"x-", n}), vid, ca.x_mode(-1, n, v), {}));
        entries.push_back(compare(json::array({"psi", n}), vid, ca.psi_mode(n, v), {}));
        entries.push_back(compare(json::array({"b", n}), vid, fock::heis_act(n, k, v), {}));
    }
    RelationSpec spec;
    spec.relation = k == 1 ? "hwv-k1" : "hwv-k2";
    spec.k = k;
    spec.module = label;
    return finish(spec, std::move(entries), since(t0));
}

CheckReport check_sector_invariance(const std::string& label, int min_degree, int max_mode) {
    const auto t0 = std::chrono::steady_clock::now();
    const Candidate c = candidate(2, label);
    const vertex::CurrentAlgebra& ca = vertex::current_algebra(c.r);
    std::vector<Job> jobs;
    const std::vector<TensorState> basis = fock::slice_basis(c.r, {Rational(min_degree), Rational(0)}, {Rational(-2), Rational(2)});
    for (const auto& s : basis) {
        if (!in_subspace(label, s)) continue;
        for (int n = -max_mode; n <= max_mode; ++n) {
            for (const std::string op : {"x+", "x-", "psi", "phi"}) {
                if ((op == "psi" && n < 0) || (op == "phi" && n > 0)) continue;
                jobs.push_back([&ca, &label, s, n, op] {
                    const ModuleVector v = unit(s);
                    const ModuleVector out = op == "x+" ? ca.x_mode(1, n, v) : op == "x-" ? ca.x_mode(-1, n, v)
                                             : op == "psi" ? ca.psi_mode(n, v) : ca.phi_mode(n, v);
                    ModuleVector outside;
                    for (const auto& [t, x] : out) {
                        if (!in_subspace(label, t)) fock::add_term(outside, t, x);
                    }
                    return compare(json::array({op, n}), fock::to_string(s), outside, {});
                });
            }
        }
    }
    RelationSpec spec;
    spec.relation = "sector-k2";
    spec.k = 2;
    spec.module = label;
    spec.window.max_mode = max_mode;
    spec.window.min_degree = min_degree;
    return finish(spec, run_jobs(jobs), since(t0));
}

CheckReport check_classical_limits(int max_s) {
    const auto t0 = std::chrono::steady_clock::now();
    struct Instance {
        zalg::GqcrKind kind;
        std::vector<int> eps, n;
        int r, k, h;
    };
    std::vector<Instance> cases;
    for (int k = 1; k <= 3; ++k) {
        for (int h = -2; h <= 2; h += 2) {
            for (int e : {1, -1}) {
                for (int a = -2; a <= 2; ++a) {
                    for (int b = -2; b <= 2; ++b) {
                        cases.push_back({zalg::GqcrKind::first, {e, -e}, {a, b}, 1, k, h});
                        cases.push_back({zalg::GqcrKind::second, {e, e}, {a, b}, 1, k, h});
                    }
                }
            }
            if (max_s < 3) continue;
            for (int mask = 0; mask < 8; ++mask) {
                const std::vector<int> eps{mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1};
                for (int r = 1; r <= 2; ++r) {
                    const auto kind = eps[static_cast<std::size_t>(r - 1)] == -eps[static_cast<std::size_t>(r)] ? zalg::GqcrKind::first
                                                                                                            : zalg::GqcrKind::second;
                    for (int a = -2; a <= 2; ++a) {
                        for (int b = -2; b <= 2; ++b) {
                            for (int c = -1; c <= 1; ++c) cases.push_back({kind, eps, {a, b, c}, r, k, h});
                        }
                    }
                }
            }
        }
    }
    std::vector<Job> jobs;
    for (const auto& c : cases) {
        jobs.push_back([c] {
            const zalg::ClassicalLimit lim = zalg::classical_limit_gqcr(c.kind, c.eps, c.n, c.r, c.k, c.h);
            json coeff = json::array({c.kind == zalg::GqcrKind::first ? "first" : "second", c.k, c.h, c.r});
            coeff.push_back(c.eps);
            coeff.push_back(c.n);
            return Entry{coeff, "", to_string(lim.quantum), to_string(lim.classical), lim.matches};
        });
    }
    RelationSpec spec;
    spec.relation = "classical";
    spec.k = 0;
    return finish(spec, run_jobs(jobs), since(t0));
}

CheckReport verify_SS_contraction(int k, int order) {
    const auto t0 = std::chrono::steady_clock::now();
    if (k < 1) throw std::invalid_argument("level must be positive");
    std::vector<Entry> entries;
    for (int e : {1, -1}) {
        for (int ep : {1, -1}) {
            // S^+_e(z) S^-_e'(w) = R(w/z) S^-_e'(w) S^+_e(z), R = exp([A, B])
            const formal::Series lhs = vertex::exponent_commutator(1, e, -1, ep, k, order).exp();
            const int c = (e + ep) * k / 2;
            const formal::Series rhs = formal::euler_ratio(QPower::of(k - 2 - c), QPower::of(k + 2 - c), QPower::of(2 * k), order, "w/z").pow(e * ep);
            // equal signs commute: the exponent commutator vanishes
            const formal::Series same = vertex::exponent_commutator(1, e, 1, ep, k, order).exp();
            const formal::Series same_minus = vertex::exponent_commutator(-1, e, -1, ep, k, order).exp();
            for (int m = 0; m <= order; ++m) {
                entries.push_back(compare(json::array({"+-", e, ep, m}), "", lhs.coefficient(m), rhs.coefficient(m)));
                entries.push_back(compare(json::array({"++", e, ep, m}), "", same.coefficient(m), Scalar(m == 0 ? 1 : 0)));
                entries.push_back(compare(json::array({"--", e, ep, m}), "", same_minus.coefficient(m), Scalar(m == 0 ? 1 : 0)));
            }
        }
    }
    RelationSpec spec;
    spec.relation = "SS";
    spec.k = k;
    spec.window.max_mode = order;
    return finish(spec, std::move(entries), since(t0));
}

}  // namespace zq::verify
