#include "zq/fock/state.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zq::fock {

namespace {

std::string half_to_string(int twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

std::string rational_to_string(Rational r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

constexpr int kMaxCachedPartition = 32;

std::vector<std::vector<Partition>> build_partitions() {
    std::vector<std::vector<Partition>> table(kMaxCachedPartition + 1);
    std::vector<int> current;
    std::function<void(int, int, int)> rec = [&](int total, int remaining, int max_part) {
        if (remaining == 0) {
            table[static_cast<std::size_t>(total)].push_back(Partition{current});
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(total, remaining - p, p);
            current.pop_back();
        }
    };
    for (int n = 0; n <= kMaxCachedPartition; ++n) rec(n, n, n);
    return table;
}

}  // namespace

int level(Realization r) {
    return r == Realization::k1 ? 1 : 2;
}

std::string to_string(Realization r) {
    switch (r) {
        case Realization::k1: return "k1";
        case Realization::k2_ns: return "k2-NS";
        case Realization::k2_r: return "k2-R";
    }
    return "?";
}

Realization parse_realization(const std::string& text) {
    if (text == "k1") return Realization::k1;
    if (text == "k2-NS" || text == "k2-ns") return Realization::k2_ns;
    if (text == "k2-R" || text == "k2-r") return Realization::k2_r;
    throw std::invalid_argument("unknown realization '" + text + "' (expected k1, k2-NS or k2-R)");
}

int Partition::size() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

int Partition::multiplicity(int part) const {
    return static_cast<int>(std::count(parts.begin(), parts.end(), part));
}

Partition Partition::with_part(int part) const {
    Partition p = *this;
    auto it = std::find_if(p.parts.begin(), p.parts.end(), [&](int x) { return x < part; });
    p.parts.insert(it, part);
    return p;
}

Partition Partition::without_part(int part) const {
    Partition p = *this;
    auto it = std::find(p.parts.begin(), p.parts.end(), part);
    if (it == p.parts.end()) throw std::logic_error("removing an absent part");
    p.parts.erase(it);
    return p;
}

Rational CliffordWord::degree() const {
    return {std::accumulate(twice_modes.begin(), twice_modes.end(), 0L), 2L};
}

Rational lattice_degree(int k, LatticePoint p) {
    // (beta, beta) = 2 m^2 = h^2 / 2 with h the doubled charge
    const long h2 = static_cast<long>(p.twice_charge) * p.twice_charge;
    if (k == 1) return Rational(-h2, 4);
    if (k == 2) return Rational(-h2, 8);
    throw std::invalid_argument("lattice grading is defined for levels 1 and 2 only");
}

Rational degree(int k, const TensorState& s) {
    Rational d = -s.fock.size() + lattice_degree(k, s.lattice);
    if (s.clifford) d += s.clifford->degree();
    return d;
}

std::string to_string(const TensorState& s) {
    std::ostringstream os;
    os << "b[";
    for (std::size_t i = 0; i < s.fock.parts.size(); ++i) os << (i ? "," : "") << s.fock.parts[i];
    os << "]";
    if (s.clifford) {
        os << " psi[";
        for (std::size_t i = 0; i < s.clifford->twice_modes.size(); ++i) {
            os << (i ? "," : "") << half_to_string(s.clifford->twice_modes[i]);
        }
        os << "]";
        if (s.clifford->spin == Spin::plus) os << " v+";
        if (s.clifford->spin == Spin::minus) os << " v-";
    }
    os << " e[" << rational_to_string(s.lattice.charge()) << "]";
    return os.str();
}

void add_term(ModuleVector& v, const TensorState& s, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = v.try_emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

void add_scaled(ModuleVector& v, const ModuleVector& w, const Scalar& c) {
    if (c.is_zero()) return;
    const bool unit = c.is_one();
    for (const auto& [s, x] : w) add_term(v, s, unit ? x : x * c);
}

ModuleVector scaled(const ModuleVector& v, const Scalar& c) {
    ModuleVector out;
    add_scaled(out, v, c);
    return out;
}

ModuleVector difference(const ModuleVector& a, const ModuleVector& b) {
    ModuleVector out = a;
    add_scaled(out, b, Scalar(-1));
    return out;
}

std::string to_string(const ModuleVector& v) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : v) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*{" << to_string(s) << "}";
    }
    return os.str();
}

const std::vector<Partition>& partitions_of(int n) {
    static const std::vector<std::vector<Partition>> table = build_partitions();
    if (n < 0 || n > kMaxCachedPartition) throw std::out_of_range("partition size beyond the supported range");
    return table[static_cast<std::size_t>(n)];
}

}  // namespace zq::fock
