#include "internal.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace zq::verify {

std::string to_string(Model m) {
    return m == Model::realized ? "realized" : "abstract";
}

unsigned thread_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("ZQ_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) n = static_cast<unsigned>(v);
    }
    return n;
}

json CheckReport::to_json() const {
    json doc;
    doc["relation"] = spec.relation;
    json params;
    params["k"] = spec.k;
    params["model"] = spec.model ? to_string(*spec.model) : "default";
    if (!spec.sector.empty()) params["sector"] = spec.sector;
    if (!spec.module.empty()) params["module"] = spec.module;
    if (spec.swapped_direction) params["direction"] = "swapped";
    params["coeff_layout"] = coeff_layout;
    doc["params"] = params;
    doc["window"] = json{{"max_mode", spec.window.max_mode},
                         {"min_degree", spec.window.min_degree},
                         {"max_charge", spec.window.max_charge}};
    json items = json::array();
    for (const auto& e : entries) {
        items.push_back(json{{"coeff", e.coeff}, {"vector", e.vector}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"equal", e.equal}});
    }
    doc["entries"] = std::move(items);
    doc["passed"] = passed;
    doc["elapsed_ms"] = elapsed_ms ? json(*elapsed_ms) : json(nullptr);
    return doc;
}

namespace detail {

std::vector<Entry> run_jobs(const std::vector<Job>& jobs) {
    std::vector<Entry> out(jobs.size());
    const unsigned workers = std::min<std::size_t>(thread_count(), std::max<std::size_t>(jobs.size(), 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) out[i] = jobs[i]();
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            try {
                out[i] = jobs[i]();
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = jobs.size();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

Entry compare(json coeff, std::string vector, const ModuleVector& lhs, const ModuleVector& rhs) {
    return Entry{std::move(coeff), std::move(vector), fock::to_string(lhs), fock::to_string(rhs), lhs == rhs};
}

Entry compare(json coeff, std::string vector, const zalg::ZVector& lhs, const zalg::ZVector& rhs) {
    return Entry{std::move(coeff), std::move(vector), zalg::to_string(lhs), zalg::to_string(rhs), lhs == rhs};
}

Entry compare(json coeff, std::string vector, const Scalar& lhs, const Scalar& rhs) {
    return Entry{std::move(coeff), std::move(vector), lhs.to_string(), rhs.to_string(), lhs == rhs};
}

Scalar inverse_q_gap() {
    static const Scalar gap = (qp(1) - qp(-1)).inverse();
    return gap;
}

json twice_index(int twice) {
    if (twice % 2 == 0) return json(twice / 2);
    return json(std::to_string(twice) + "/2");
}

int Realized::annihilation_bound(const TensorState& s, int base) const {
    // degree(s) + base + j <= 0
    const Rational room = -degree(s) - Rational(base);
    const long num = room.numerator(), den = room.denominator();
    const long fl = num >= 0 ? num / den : -((-num + den - 1) / den);
    return static_cast<int>(std::max(-1L, fl));
}

ModuleVector Realized::clifford(int twice, const ModuleVector& v) const {
    ModuleVector out;
    for (const auto& [s, c] : v) fock::add_scaled(out, fock::clifford_act(twice, s), c);
    return out;
}

Realized make_realized(const RelationSpec& spec) {
    Realization r = Realization::k1;
    if (spec.k == 2) {
        if (spec.sector == "NS") r = Realization::k2_ns;
        else if (spec.sector == "R") r = Realization::k2_r;
        else throw UnsupportedRelation(spec.relation + ": level 2 needs sector NS or R");
    } else if (spec.k != 1) {
        throw UnsupportedRelation(spec.relation + ": realized modules exist only at levels 1 and 2");
    }
    const CheckWindow& w = spec.window;
    if (w.max_mode < 0 || w.min_degree > 0 || w.max_charge < 0) throw std::invalid_argument("malformed window");
    Realized ctx{spec, r, spec.k, &vertex::current_algebra(r), {}, w.max_mode};
    ctx.vectors = fock::slice_basis(r, {Rational(w.min_degree), Rational(0)}, {Rational(-w.max_charge), Rational(w.max_charge)});
    return ctx;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Scalar& slot = out[{ea.first + eb.first, ea.second + eb.second}];
            slot += ca * cb;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero()) it = out.erase(it);
        else ++it;
    }
    return out;
}

ModuleVector poly_product(const Poly2& p, int twice_a, int twice_b, const ModeOp& A, const ModeOp& B, bool b_first,
                          const ModuleVector& v) {
    // z^i w^j A(z) B(w) contributes A_{a+i} B_{b+j}
    ModuleVector out;
    for (const auto& [e, c] : p) {
        const int ta = twice_a + 2 * e.first, tb = twice_b + 2 * e.second;
        const ModuleVector t = b_first ? B(tb, A(ta, v)) : A(ta, B(tb, v));
        fock::add_scaled(out, t, c);
    }
    return out;
}

ModuleVector conjugate_by_degree(const Realized& ctx, const ModuleVector& out, Rational base) {
    ModuleVector r;
    for (const auto& [s, c] : out) {
        const Rational shift = ctx.degree(s) - base;
        const Rational twice = shift * Rational(2);
        if (twice.denominator() != 1) throw std::logic_error("output degree off the half-integer lattice: " + fock::to_string(s));
        fock::add_term(r, s, c * qh(static_cast<int>(twice.numerator())));
    }
    return r;
}

CheckReport finish(const RelationSpec& spec, std::vector<Entry> entries, double elapsed_ms) {
    CheckReport rep;
    rep.spec = spec;
    rep.coeff_layout = relation_info(spec.relation).coeff_layout;
    rep.entries = std::move(entries);
    rep.passed = std::all_of(rep.entries.begin(), rep.entries.end(), [](const Entry& e) { return e.equal; });
    rep.elapsed_ms = elapsed_ms;
    return rep;
}

}  // namespace detail
}  // namespace zq::verify
