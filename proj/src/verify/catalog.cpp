#include "internal.hpp"

#include <algorithm>
#include <chrono>

namespace zq::verify {

namespace {

using namespace detail;

const std::vector<std::string> both_sectors{"NS", "R"};

RelationInfo realized(std::string id, std::string suite, std::string description, std::vector<int> levels,
                      std::string layout, std::string direction = "") {
    const bool k2 = std::find(levels.begin(), levels.end(), 2) != levels.end();
    return RelationInfo{std::move(id), std::move(suite), std::move(description), std::move(levels),
                        k2 ? both_sectors : std::vector<std::string>{}, Model::realized, false, std::move(layout),
                        std::move(direction)};
}

RelationInfo abstract(std::string id, std::string description, std::string layout) {
    return RelationInfo{std::move(id), "abstract", std::move(description), {0}, {}, Model::abstract, true, std::move(layout), ""};
}

std::vector<RelationInfo> build_catalog() {
    std::vector<RelationInfo> c;
    const std::vector<int> k12{1, 2};
    // current algebra
    c.push_back(realized("eq1", "drinfeld", "gamma^{+-1/2} is central", k12, "op,eps,n"));
    c.push_back(realized("eq2", "drinfeld", "[Psi(z), Psi(w)] = 0", k12, "a,b"));
    c.push_back(realized("eq3", "drinfeld", "[Phi(z), Phi(w)] = 0", k12, "a,b"));
    c.push_back(realized("eq4", "drinfeld", "Psi(z)Phi(w) = g(w/z gamma) g(w/z gamma^{-1})^{-1} Phi(w)Psi(z)", k12, "a,b",
                         "prefactor in w/z"));
    c.push_back(realized("eq5", "drinfeld", "Psi(z)x(w) = g(w/z gamma^{-eps/2})^{-eps} x(w)Psi(z)", k12, "eps,a,b",
                         "prefactor in w/z"));
    c.push_back(realized("eq6", "drinfeld", "Phi(z)x(w) = g(z/w gamma^{-eps/2})^{eps} x(w)Phi(z)", k12, "eps,a,b",
                         "prefactor in z/w"));
    c.push_back(realized("eq7", "drinfeld", "[x^eps(z), x^{-eps}(w)] as delta functions times Psi, Phi", k12, "eps,a,b"));
    c.push_back(realized("eq8", "drinfeld", "(z - w q^{2eps}) x(z)x(w) = (z q^{2eps} - w) x(w)x(z)", k12, "eps,a,b"));
    c.push_back(realized("eq9", "drinfeld", "q^d x(z) = x(z/q) q^d", k12, "eps,n"));
    c.push_back(realized("eq10", "drinfeld", "q^d Psi(z) = Psi(z/q) q^d", k12, "eps,n"));
    c.push_back(realized("eq11", "drinfeld", "q^d Phi(z) = Phi(z/q) q^d", k12, "eps,n"));
    c.push_back(realized("Eq10", "drinfeld", "[x+_n, x-_m] = (gamma^{(n-m)/2} Psi_{n+m} - gamma^{(m-n)/2} Phi_{n+m})/(q - q^{-1})",
                         k12, "n,m"));
    c.push_back(realized("Eq11", "drinfeld", "x_{n+1}x_m - q^{2eps} x_m x_{n+1} = q^{2eps} x_n x_{m+1} - x_{m+1}x_n", k12,
                         "eps,n,m"));
    // Z operators on the realized modules
    const char* znames[] = {"equa", "equal"};
    for (int level = 1; level <= 2; ++level) {
        const std::string p = znames[level - 1];
        const std::vector<int> lv{level};
        c.push_back(realized(p + "1", "zq", "Z(eps|z)Z(-eps|w) exchange against the Psi_0/Phi_0 and q^{+-eps alpha(0)} delta forms",
                             lv, "form,eps,a,b", "f(w/z) in w/z in front of Z(eps|z)Z(-eps|w); f(z/w) in z/w in front of Z(-eps|w)Z(eps|z)"));
        c.push_back(realized(p + "2", "zq", level == 1 ? "w^2 Z(z)Z(w) = z^2 Z(w)Z(z)"
                                                        : "(z - w q^{2e})(1 - w/z q^{-2e}) Z(z)Z(w) = (z q^{2e} - w)(1 - z/w q^{-2e}) Z(w)Z(z)",
                             lv, "eps,a,b"));
        c.push_back(realized(p + "3", "zq", "[b(n), Z(eps|z)] = 0", lv, "op,eps,m,n"));
        c.push_back(realized(p + "4", "zq", "Psi_0 Z = q^{2eps} Z Psi_0", lv, "sign,eps,n"));
        c.push_back(realized(p + "5", "zq", "Phi_0 Z = q^{-2eps} Z Phi_0", lv, "sign,eps,n"));
        c.push_back(realized(p + "6", "zq", "X(eps|z) = S^-_{-eps}(z q^{-eps k}) S^+_{-eps}(z q^{eps k}) Z(eps|z)", lv, "eps,n"));
        c.push_back(realized(p + "7", "zq", "q^d Z(z) = Z(z/q) q^d", lv, "eps,n"));
        c.push_back(realized(p + "8", "zq", "[gamma^{+-1}, Z(eps|z)] = 0", lv, "pm,eps,n"));
    }
    c.push_back(realized("R1", "zq", "[b(n), Z(eps|z)] = 0", k12, "op,eps,m,n"));
    c.push_back(realized("R2", "zq", "Psi_0 Z = q^{2eps} Z Psi_0", k12, "sign,eps,n"));
    c.push_back(realized("R3", "zq", "Phi_0 Z = q^{-2eps} Z Phi_0", k12, "sign,eps,n"));
    c.push_back(realized("R4", "zq", "X(eps|z) = S^-_{-eps}(z q^{-eps k}) S^+_{-eps}(z q^{eps k}) Z(eps|z)", k12, "eps,n"));
    c.push_back(realized("R5", "zq", "q^d Z(z) = Z(z/q) q^d", k12, "eps,n"));
    c.push_back(realized("R6", "zq", "[gamma^{+-1}, Z(eps|z)] = 0", k12, "pm,eps,n"));
    c.push_back(realized("aZ", "zq", "Z = S^-_eps X S^+_eps agrees with the realized Z and commutes with b(n) and gamma^{1/2}", k12,
                         "op,eps,m,n"));
    RelationInfo pz = realized("PZ", "zq", "Psi_0 Z = q^{2eps} Z Psi_0, Phi_0 Z = q^{-2eps} Z Phi_0 (q^{alpha(0)} conjugation on W(M))",
                               k12, "sign,eps,n");
    pz.abstract_allowed = true;
    c.push_back(pz);
    c.push_back(realized("ppz", "zq", "Psi_n Z = q^{2eps} Z Psi_n (n >= 0), Phi_n Z = q^{-2eps} Z Phi_n (n <= 0)", k12, "sign,eps,n,m"));
    c.push_back(realized("ps", "zq", "Psi(z) = Psi_0 S^+_eps(z q^{-3eps k/2}) S^+_{-eps}(z q^{3eps k/2}) and the Phi analogue", k12,
                         "eps,n"));
    c.push_back(realized("hab", "zq", "Z(eps|n) is homogeneous of degree n", k12, "eps,n"));
    // Clifford factor at level 2
    RelationInfo fir1 = realized("fir1", "clifford", "{psi(z), psi(w)} = delta(z/w q^{-2}) + delta(z/w q^2) on the R sector", {2}, "a,b");
    fir1.sectors = {"R"};
    RelationInfo fir2 = realized("fir2", "clifford", "{psi(z), psi(w)} = (z/w)^{1/2}(q^{-1} delta(z/w q^{-2}) + q delta(z/w q^2)) on NS",
                                 {2}, "r,s");
    fir2.sectors = {"NS"};
    RelationInfo co1 = realized("co1", "clifford", "{psi_n, psi_m} = (q^{2n} + q^{-2n}) delta_{n+m,0}, n, m integers", {2}, "n,m");
    co1.sectors = {"R"};
    RelationInfo co2 = realized("co2", "clifford", "{psi_r, psi_s} = (q^{2r} + q^{-2r}) delta_{r+s,0}, r, s half-integers", {2}, "r,s");
    co2.sectors = {"NS"};
    c.push_back(fir1);
    c.push_back(fir2);
    c.push_back(co1);
    c.push_back(co2);
    c.push_back(realized("equala2", "clifford", "z (z - w q^{2e})(1 - w/z q^{-2e}) psi(z)psi(w) = w (z q^{2e} - w)(1 - z/w q^{-2e}) psi(w)psi(z)",
                         {2}, "eps,a,b"));
    // vertex operators
    RelationInfo ss{"SS", "vertex", "exp of the commutator of S-exponents equals the Pochhammer contraction ratio", {0}, {},
                    Model::realized, false, "signs,eps,eps',m", "ratio in w/z"};
    c.push_back(ss);
    c.push_back(realized("PSS", "vertex", "(S^+-_eps(z))^{-1} = S^+-_{-eps}(z q^{+-eps k})", k12, "part,sign,eps,n"));
    c.push_back(realized("ax", "vertex", "[b(n), X(eps|p)] = eps q^{-eps|n|k/2} (q^{2n} - q^{-2n})/n X(eps|p+n)", k12, "eps,n,p"));
    // abstract W(M)
    c.push_back(abstract("khal1", "Z(e,-e|n1,n2) = Z(-e,e|n2,n1) + Y(e|n1) delta_{n1+n2,0}", "eps,n1,n2"));
    c.push_back(abstract("khal2", "Z(e,e|n1,n2) = q^{2e} Z(e,e|n1-1,n2+1) + q^{2e} Z(e,e|n2,n1) - Z(e,e|n2+1,n1-1)", "eps,n1,n2"));
    c.push_back(abstract("sina", "expanding a composite into modes and back is the identity", "part,eps,eps',n1,n2"));
    c.push_back(abstract("qZ1", "first generalized commutation relation, two modes", "eps,n1,n2"));
    c.push_back(abstract("qZ2", "second generalized commutation relation, two modes", "eps,n1,n2"));
    // modules
    c.push_back(RelationInfo{"hwv-k1", "modules", "highest weight conditions on V(L0), V(L1)", {1}, {}, Model::realized, false, "op,n", ""});
    c.push_back(RelationInfo{"hwv-k2", "modules", "highest weight conditions on V(2L0), V(2L1), V(L0+L1)", {2}, {}, Model::realized,
                             false, "op,n", ""});
    c.push_back(RelationInfo{"sector-k2", "modules", "x+-, Psi, Phi preserve the level 2 subspace decompositions", {2}, {},
                             Model::realized, false, "op,n", ""});
    c.push_back(RelationInfo{"classical", "modules", "q = 1 limits of the generalized commutation relations, s <= 3", {0}, {},
                             Model::abstract, false, "kind,k,h,r,eps,n", ""});
    return c;
}

bool level_ok(const RelationInfo& info, int k) {
    if (k < 1) return false;
    if (info.levels == std::vector<int>{0}) return true;
    return std::find(info.levels.begin(), info.levels.end(), k) != info.levels.end();
}

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

Model model_of(const RelationInfo& info, const RelationSpec& spec) {
    if (spec.model) return *spec.model;
    if (info.abstract_allowed && (spec.k < 1 || spec.k > 2)) return Model::abstract;
    return info.default_model;
}

CheckReport merged(const RelationSpec& spec, const std::vector<CheckReport>& parts, double ms) {
    std::vector<Entry> entries;
    for (const auto& p : parts) {
        for (auto e : p.entries) {
            json coeff = json::array({p.spec.module});
            for (const auto& x : e.coeff) coeff.push_back(x);
            e.coeff = std::move(coeff);
            entries.push_back(std::move(e));
        }
    }
    CheckReport rep = finish(spec, std::move(entries), ms);
    rep.coeff_layout = "module," + rep.coeff_layout;
    return rep;
}

}  // namespace

const std::vector<RelationInfo>& catalog() {
    static const std::vector<RelationInfo> c = build_catalog();
    return c;
}

const RelationInfo& relation_info(const std::string& id) {
    for (const auto& r : catalog()) {
        if (r.id == id) return r;
    }
    throw UnsupportedRelation("unknown relation '" + id + "'");
}

std::vector<std::string> suite_names() {
    return {"drinfeld", "zq", "clifford", "vertex", "abstract", "modules", "all"};
}

std::vector<RelationSpec> suite_specs(const std::string& suite, int k, const CheckWindow& window) {
    const auto names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) throw UnsupportedRelation("unknown suite '" + suite + "'");
    std::vector<RelationSpec> out;
    for (const auto& info : catalog()) {
        if (suite != "all" && info.suite != suite) continue;
        if (!level_ok(info, k)) continue;
        if (info.id == "classical" && suite == "all") continue;
        RelationSpec spec;
        spec.relation = info.id;
        spec.k = k;
        spec.window = window;
        if (info.default_model == Model::realized && k == 2 && !info.sectors.empty()) {
            for (const auto& sec : info.sectors) {
                spec.sector = sec;
                out.push_back(spec);
            }
        } else {
            out.push_back(spec);
        }
    }
    if (suite == "abstract" || suite == "all") {
        if (k >= 1 && (suite == "abstract" || k > 2)) {
            RelationSpec pz;
            pz.relation = "PZ";
            pz.k = k;
            pz.model = Model::abstract;
            pz.window = window;
            out.push_back(pz);
        }
    }
    if (out.empty()) throw UnsupportedRelation("suite '" + suite + "' has no relation at level " + std::to_string(k));
    return out;
}

CheckReport run_check(const RelationSpec& spec) {
    const auto t0 = std::chrono::steady_clock::now();
    const RelationInfo& info = relation_info(spec.relation);
    const bool any_level = info.id == "classical" || (info.abstract_allowed && spec.k >= 1 && model_of(info, spec) == Model::abstract);
    if (!level_ok(info, spec.k) && !any_level) {
        throw UnsupportedRelation(spec.relation + " is not available at level " + std::to_string(spec.k));
    }
    const CheckWindow& w = spec.window;
    if (w.max_mode < 0 || w.min_degree > 0 || w.max_charge < 0) throw std::invalid_argument("malformed window");
    if (spec.swapped_direction && info.direction.empty()) {
        throw UnsupportedRelation(spec.relation + " has no series prefactor to expand in another direction");
    }
    if (spec.swapped_direction && info.id != "equa1" && info.id != "equal1") {
        throw DirectionalClash(spec.relation + ": " + info.direction + " is the only expansion with truncating mode sums");
    }

    if (info.id == "SS") {
        CheckReport rep = verify_SS_contraction(spec.k, 2 * w.max_mode);
        rep.spec = spec;
        return rep;
    }
    if (info.id == "classical") {
        CheckReport rep = check_classical_limits(3);
        rep.spec = spec;
        return rep;
    }
    if (info.id == "hwv-k1" || info.id == "hwv-k2" || info.id == "sector-k2") {
        std::vector<std::string> labels = spec.module.empty() ? module_labels(spec.k) : std::vector<std::string>{spec.module};
        std::vector<CheckReport> parts;
        for (const auto& l : labels) {
            parts.push_back(info.id == "sector-k2" ? check_sector_invariance(l, w.min_degree, w.max_mode) : check_highest_weight(spec.k, l));
        }
        return merged(spec, parts, since(t0));
    }

    RelationSpec resolved = spec;
    resolved.model = model_of(info, spec);
    if (*resolved.model == Model::abstract) {
        if (!info.abstract_allowed) throw UnsupportedRelation(spec.relation + " is not a relation on W(M)");
        Abstract ctx{resolved, spec.k, &zalg::z_algebra(spec.k), {}, w.max_mode, w.min_degree};
        for (int d = 0; d >= w.min_degree; --d) {
            for (auto& word : zalg::enumerate_H(d)) {
                if (std::abs(zalg::charge(word)) <= 2 * w.max_charge) ctx.vectors.push_back(std::move(word));
            }
        }
        std::vector<Entry> entries = run_jobs(abstract_jobs(ctx));
        return finish(resolved, std::move(entries), since(t0));
    }
    if (info.default_model == Model::abstract) throw UnsupportedRelation(spec.relation + " acts on W(M) only");
    if (spec.k == 2 && std::find(info.sectors.begin(), info.sectors.end(), spec.sector) == info.sectors.end()) {
        throw UnsupportedRelation(spec.relation + " is not available on the sector '" + spec.sector + "'");
    }
    const Realized ctx = make_realized(resolved);
    std::vector<Job> jobs;
    if (info.suite == "drinfeld") jobs = drinfeld_jobs(ctx);
    else if (info.suite == "zq") jobs = zq_jobs(ctx);
    else if (info.suite == "clifford") jobs = clifford_jobs(ctx);
    else jobs = vertex_jobs(ctx);
    std::vector<Entry> entries = run_jobs(jobs);
    return finish(resolved, std::move(entries), since(t0));
}

}  // namespace zq::verify
