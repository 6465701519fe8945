#include "malg/poly.hpp"

#include <numeric>
#include <stdexcept>

namespace malg {

Polynomial Polynomial::of(Term t, Rational c) {
    Polynomial p;
    p.add(t, c);
    return p;
}

Rational Polynomial::coeff(const Term& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial& Polynomial::add(const Term& t, const Rational& c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [t, c] : other.terms_) add(t, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [t, c] : other.terms_) add(t, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, v] : terms_) v *= c;
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial r = *this;
    r += other;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial r = *this;
    r -= other;
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r = *this;
    r *= c;
    return r;
}

Polynomial Polynomial::operator-() const { return *this * Rational(-1); }

int Polynomial::degree() const {
    int d = 0;
    for (const auto& [t, c] : terms_) d = std::max(d, t.degree());
    return d;
}

bool Polynomial::is_homogeneous(int n) const {
    for (const auto& [t, c] : terms_)
        if (t.degree() != n) return false;
    return true;
}

bool Polynomial::is_multilinear(int n) const {
    for (const auto& [t, c] : terms_)
        if (!t.is_multilinear(n)) return false;
    return true;
}

std::string format_poly(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, c] : p.terms()) {
        Rational a = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (a != 1) out += rat_str(a);
        out += format_term(t);
    }
    return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size() + 1, 0);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("permutation images must be a bijection on 1..n");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int i, int j) {
    Permutation p = identity(n);
    std::swap(p.images_[static_cast<std::size_t>(i) - 1],
              p.images_[static_cast<std::size_t>(j) - 1]);
    return p;
}

Permutation Permutation::cycle(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) im[static_cast<std::size_t>(i) - 1] = i % n + 1;
    return Permutation(std::move(im));
}

Permutation Permutation::random(int n, std::uint64_t seed) {
    Permutation p = identity(n);
    // splitmix64-driven Fisher-Yates, reproducible across platforms
    auto next = [&seed]() {
        seed += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = seed;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(next() % static_cast<std::uint64_t>(i + 1));
        std::swap(p.images_[static_cast<std::size_t>(i)], p.images_[static_cast<std::size_t>(j)]);
    }
    return p;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> im(static_cast<std::size_t>(size()));
    for (int i = 1; i <= size(); ++i) im[static_cast<std::size_t>(i) - 1] = apply(other.apply(i));
    return Permutation(std::move(im));
}

Term apply_permutation(const Term& t, const Permutation& sigma) {
    if (t.is_leaf()) {
        if (t.gen() > sigma.size()) throw std::out_of_range("generator index outside permutation");
        return Term::leaf(sigma.apply(t.gen()));
    }
    return Term::node(t.op(), apply_permutation(t.left(), sigma),
                      apply_permutation(t.right(), sigma));
}

Polynomial apply_permutation(const Polynomial& p, const Permutation& sigma) {
    Polynomial out;
    for (const auto& [t, c] : p.terms()) out.add(apply_permutation(t, sigma), c);
    return out;
}

}  // namespace malg
