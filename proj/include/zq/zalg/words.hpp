#pragma once

#include "zq/coeff/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace zq::zalg {

using coeff::Scalar;

/// Z(eps|n): degree n, alpha(0) shift 2 eps
struct ZMode {
    int eps = 1;
    int n = 0;
    auto operator<=>(const ZMode&) const = default;
};

/// Z(eps_1|n_1) ... Z(eps_s|n_s) v0; the rightmost mode acts first
using ZWord = std::vector<ZMode>;
using ZVector = std::map<ZWord, Scalar>;

/// order used by the basis H: by n, and - before + on ties
bool h_less_equal(ZMode a, ZMode b);
/// all n_i < 0 and consecutive letters in H order
bool is_h_normal(const ZWord& w);

int degree(const ZWord& w);
/// alpha(0) eigenvalue, 2 sum eps
int charge(const ZWord& w);

void add_term(ZVector& v, const ZWord& w, const Scalar& c);
void add_scaled(ZVector& v, const ZVector& w, const Scalar& c);

/// `(+,-1)(-,-2)`; the empty word prints as `v0`
std::string to_string(const ZWord& w);
std::string to_string(const ZVector& v);
/// parses the literal form; throws std::invalid_argument on malformed input
ZWord parse_word(const std::string& text);

/// H-normal words of total degree d (d <= 0)
std::vector<ZWord> enumerate_H(int d);

enum class CharacterKind { W, G };
/// coefficient of p^n in prod (1 - p^m)^{-2} (W) or ^{-3} (G)
std::uint64_t character(CharacterKind which, int n);
/// number of partitions of n
std::uint64_t partition_count(int n);

}  // namespace zq::zalg
