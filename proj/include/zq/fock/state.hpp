#pragma once

#include "zq/coeff/scalar.hpp"

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zq::fock {

using coeff::Scalar;
using Rational = boost::rational<long>;

enum class Sector : std::uint8_t { NS, R };
enum class Spin : std::uint8_t { none, plus, minus };

/// Which concrete module the states belong to.
enum class Realization : std::uint8_t { k1, k2_ns, k2_r };

int level(Realization r);
std::string to_string(Realization r);
Realization parse_realization(const std::string& text);

/// prod b(-n) over the parts, acting on the Fock vacuum; parts weakly decreasing
struct Partition {
    std::vector<int> parts;

    int size() const;
    int multiplicity(int part) const;
    Partition with_part(int part) const;
    Partition without_part(int part) const;
    auto operator<=>(const Partition&) const = default;
};

/// beta = m alpha with m = twice_charge / 2; the alpha(0) eigenvalue (alpha, beta) is twice_charge
struct LatticePoint {
    int twice_charge = 0;

    Rational charge() const { return {twice_charge, 2}; }
    int alpha0() const { return twice_charge; }
    LatticePoint shifted(int by_alpha) const { return {twice_charge + 2 * by_alpha}; }
    auto operator<=>(const LatticePoint&) const = default;
};

/// psi_{m_1} ... psi_{m_j} |0> with m_1 > ... > m_j negative; modes stored doubled.
/// R-sector words carry a spin component; psi_0 never appears in the list.
struct CliffordWord {
    Sector sector = Sector::NS;
    std::vector<int> twice_modes;
    Spin spin = Spin::none;

    Rational degree() const;
    std::size_t length() const { return twice_modes.size(); }
    auto operator<=>(const CliffordWord&) const = default;
};

struct TensorState {
    Partition fock;
    std::optional<CliffordWord> clifford;
    LatticePoint lattice;

    auto operator<=>(const TensorState&) const = default;
};

/// lattice degree: -(beta,beta)/2 at level 1 and -(beta,beta)/4 at level 2
Rational lattice_degree(int k, LatticePoint p);
Rational degree(int k, const TensorState& s);
std::string to_string(const TensorState& s);

using ModuleVector = std::map<TensorState, Scalar>;

void add_term(ModuleVector& v, const TensorState& s, const Scalar& c);
void add_scaled(ModuleVector& v, const ModuleVector& w, const Scalar& c);
ModuleVector scaled(const ModuleVector& v, const Scalar& c);
ModuleVector difference(const ModuleVector& a, const ModuleVector& b);
std::string to_string(const ModuleVector& v);

/// all partitions of n, parts weakly decreasing
const std::vector<Partition>& partitions_of(int n);

}  // namespace zq::fock
