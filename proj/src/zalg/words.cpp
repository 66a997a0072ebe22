#include "zq/zalg/words.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>

namespace zq::zalg {

bool h_less_equal(ZMode a, ZMode b) {
    return a.n < b.n || (a.n == b.n && a.eps <= b.eps);
}

bool is_h_normal(const ZWord& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].n >= 0) return false;
        if (i + 1 < w.size() && !h_less_equal(w[i], w[i + 1])) return false;
    }
    return true;
}

int degree(const ZWord& w) {
    int d = 0;
    for (const auto& m : w) d += m.n;
    return d;
}

int charge(const ZWord& w) {
    int c = 0;
    for (const auto& m : w) c += 2 * m.eps;
    return c;
}

void add_term(ZVector& v, const ZWord& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = v.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

void add_scaled(ZVector& v, const ZVector& w, const Scalar& c) {
    for (const auto& [word, x] : w) add_term(v, word, x * c);
}

std::string to_string(const ZWord& w) {
    if (w.empty()) return "v0";
    std::string out;
    for (const auto& m : w) out += "(" + std::string(m.eps > 0 ? "+" : "-") + "," + std::to_string(m.n) + ")";
    return out;
}

std::string to_string(const ZVector& v) {
    if (v.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : v) {
        if (!out.empty()) out += " + ";
        out += "[" + c.to_string() + "] " + to_string(w);
    }
    return out;
}

ZWord parse_word(const std::string& text) {
    ZWord w;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](char c) {
        skip();
        if (i >= text.size() || text[i] != c) {
            throw std::invalid_argument("bad word literal '" + text + "': expected '" + std::string(1, c) + "' at " +
                                        std::to_string(i));
        }
        ++i;
    };
    skip();
    if (text.substr(i) == "v0") return w;
    while (true) {
        skip();
        if (i >= text.size()) break;
        expect('(');
        skip();
        if (i >= text.size() || (text[i] != '+' && text[i] != '-')) {
            throw std::invalid_argument("bad word literal '" + text + "': expected a sign at " + std::to_string(i));
        }
        const int eps = text[i] == '+' ? 1 : -1;
        ++i;
        expect(',');
        skip();
        std::size_t used = 0;
        int n = 0;
        try {
            n = std::stoi(text.substr(i), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad word literal '" + text + "': expected an integer at " + std::to_string(i));
        }
        i += used;
        expect(')');
        w.push_back({eps, n});
    }
    if (w.empty()) throw std::invalid_argument("empty word literal");
    return w;
}

std::vector<ZWord> enumerate_H(int d) {
    std::vector<ZWord> out;
    if (d > 0) return out;
    ZWord current;
    // letters in H order: (-,n),(+,n) for n = -|d| .. -1
    std::function<void(ZMode, int)> rec = [&](ZMode first_allowed, int remaining) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int n = first_allowed.n; n <= -1; ++n) {
            if (-n > remaining) continue;
            for (int eps : {-1, 1}) {
                const ZMode m{eps, n};
                if (!h_less_equal(first_allowed, m)) continue;
                current.push_back(m);
                rec(m, remaining + n);
                current.pop_back();
            }
        }
    };
    rec(ZMode{-1, d == 0 ? -1 : d}, -d);
    return out;
}

std::uint64_t partition_count(int n) {
    if (n < 0) return 0;
    std::vector<std::uint64_t> p(static_cast<std::size_t>(n + 1), 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part) {
        for (int m = part; m <= n; ++m) p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - part)];
    }
    return p[static_cast<std::size_t>(n)];
}

std::uint64_t character(CharacterKind which, int n) {
    if (n < 0) return 0;
    const int copies = which == CharacterKind::W ? 2 : 3;
    std::vector<std::uint64_t> acc(static_cast<std::size_t>(n + 1), 0), p(static_cast<std::size_t>(n + 1));
    for (int m = 0; m <= n; ++m) p[static_cast<std::size_t>(m)] = partition_count(m);
    acc = p;
    for (int c = 1; c < copies; ++c) {
        std::vector<std::uint64_t> next(static_cast<std::size_t>(n + 1), 0);
        for (int a = 0; a <= n; ++a) {
            for (int b = 0; a + b <= n; ++b) {
                next[static_cast<std::size_t>(a + b)] += acc[static_cast<std::size_t>(a)] * p[static_cast<std::size_t>(b)];
            }
        }
        acc = std::move(next);
    }
    return acc[static_cast<std::size_t>(n)];
}

}  // namespace zq::zalg
