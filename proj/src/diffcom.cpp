#include "malg/diffcom.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace malg {

int DiffMonomial::weight() const {
    int w = 0;
    for (const auto& [g, d] : factors) w += d - 1;
    return w;
}

std::string DiffMonomial::str() const {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "\xC2\xB7";  // '·'
        out += "x" + std::to_string(factors[i].first);
        int d = factors[i].second;
        if (d <= 3)
            out.append(static_cast<std::size_t>(d), '\'');
        else
            out += "^(" + std::to_string(d) + ")";
    }
    return out;
}

DiffMonomial dm_mul(const DiffMonomial& a, const DiffMonomial& b) {
    DiffMonomial out;
    out.factors.reserve(a.factors.size() + b.factors.size());
    std::merge(a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(),
               std::back_inserter(out.factors));
    return out;
}

DiffPolynomial DiffPolynomial::of(DiffMonomial m, Rational c) {
    DiffPolynomial p;
    m.normalize();
    p.add(m, c);
    return p;
}

DiffPolynomial& DiffPolynomial::add(const DiffMonomial& m, const Rational& c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

DiffPolynomial& DiffPolynomial::operator+=(const DiffPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

DiffPolynomial& DiffPolynomial::operator-=(const DiffPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

DiffPolynomial& DiffPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

DiffPolynomial DiffPolynomial::operator-(const DiffPolynomial& o) const {
    DiffPolynomial r = *this;
    r -= o;
    return r;
}

std::string DiffPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (a != 1) out += rat_str(a);
        out += m.str();
    }
    return out;
}

DiffPolynomial derive(const DiffPolynomial& p) {
    DiffPolynomial out;
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t i = 0; i < m.factors.size(); ++i) {
            DiffMonomial bumped = m;
            bumped.factors[i].second += 1;
            bumped.normalize();
            out.add(bumped, c);
        }
    }
    return out;
}

DiffPolynomial dp_mul(const DiffPolynomial& a, const DiffPolynomial& b) {
    DiffPolynomial out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.add(dm_mul(ma, mb), ca * cb);
    return out;
}

DiffPolynomial circ(const DiffPolynomial& u, const DiffPolynomial& v) {
    return dp_mul(derive(u), v);
}

DiffPolynomial embed(const Term& t) {
    if (t.is_leaf()) return DiffPolynomial::of(DiffMonomial{{{t.gen(), 0}}});
    if (t.op() != Op::Star) throw std::invalid_argument("embed expects Star terms");
    return circ(embed(t.left()), embed(t.right()));
}

DiffPolynomial embed(const Polynomial& p) {
    DiffPolynomial out;
    for (const auto& [t, c] : p.terms()) {
        DiffPolynomial e = embed(t);
        e *= c;
        out += e;
    }
    return out;
}

namespace {

// canonical one-underived-factor monomial: the plain factor carries the
// largest generator, all other factors carry one prime
DiffMonomial all_primes_canonical(std::vector<int> gens) {
    std::sort(gens.begin(), gens.end());
    DiffMonomial m;
    for (std::size_t i = 0; i + 1 < gens.size(); ++i) m.factors.push_back({gens[i], 1});
    m.factors.push_back({gens.back(), 0});
    m.normalize();
    return m;
}

}  // namespace

DiffPolynomial metabelian_reduce(const DiffPolynomial& p) {
    DiffPolynomial out;
    for (const auto& [m, c] : p.terms()) {
        if (m.weight() != -1)
            throw std::invalid_argument("metabelian_reduce: monomial of weight != -1: " + m.str());
        const int d = m.degree();
        if (d <= 3) {
            out.add(m, c);
            continue;
        }
        std::vector<int> orders, gens;
        for (const auto& [g, k] : m.factors) {
            gens.push_back(g);
            orders.push_back(k);
        }
        std::sort(orders.begin(), orders.end(), std::greater<>());
        if (d == 4) {
            if (orders == std::vector<int>{3, 0, 0, 0}) {
                out.add(m, c);
            } else if (orders == std::vector<int>{1, 1, 1, 0}) {
                out.add(all_primes_canonical(gens), c);
            } else {  // {2,1,0,0}: x''x'xx -> -x'x'x'x
                out.add(all_primes_canonical(gens), -c);
            }
            continue;
        }
        // degree >= 5: only x^(d-1) x ... x survives
        int top = 0, zero = 0;
        for (int k : orders) {
            if (k == d - 1) ++top;
            if (k == 0) ++zero;
        }
        if (top == 1 && zero == d - 1) out.add(m, c);
    }
    return out;
}

int diff_dims(int n) {
    if (n < 1) throw std::invalid_argument("diff_dims: n >= 1");
    std::set<DiffMonomial> survivors;
    std::vector<int> orders(static_cast<std::size_t>(n), 0);
    // compositions of n-1 into n nonnegative parts
    auto emit = [&]() {
        DiffMonomial m;
        for (int i = 0; i < n; ++i)
            m.factors.push_back({i + 1, orders[static_cast<std::size_t>(i)]});
        m.normalize();
        DiffPolynomial r = metabelian_reduce(DiffPolynomial::of(m));
        for (const auto& [rm, rc] : r.terms()) survivors.insert(rm);
    };
    int total = n - 1;
    // iterate all order vectors with sum n-1
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            orders[static_cast<std::size_t>(pos)] = left;
            emit();
            return;
        }
        for (int v = 0; v <= left; ++v) {
            orders[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, total);
    return static_cast<int>(survivors.size());
}

}  // namespace malg
