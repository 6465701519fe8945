#pragma once

#include <map>
#include <string>
#include <vector>

#include "malg/poly.hpp"

namespace malg {

// Commutative monomial with per-generator derivative orders,
// e.g. x1''·x2·x3. Factors are a sorted multiset of (generator, order).
struct DiffMonomial {
    std::vector<std::pair<int, int>> factors;

    int degree() const { return static_cast<int>(factors.size()); }
    int weight() const;  // sum of orders minus number of factors
    std::string str() const;
    void normalize() { std::sort(factors.begin(), factors.end()); }

    auto operator<=>(const DiffMonomial&) const = default;
};

DiffMonomial dm_mul(const DiffMonomial& a, const DiffMonomial& b);

class DiffPolynomial {
  public:
    DiffPolynomial() = default;
    static DiffPolynomial of(DiffMonomial m, Rational c = Rational(1));

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<DiffMonomial, Rational>& terms() const& { return terms_; }
    std::map<DiffMonomial, Rational> terms() && { return std::move(terms_); }

    DiffPolynomial& add(const DiffMonomial& m, const Rational& c);
    DiffPolynomial& operator+=(const DiffPolynomial& o);
    DiffPolynomial& operator-=(const DiffPolynomial& o);
    DiffPolynomial& operator*=(const Rational& c);
    DiffPolynomial operator-(const DiffPolynomial& o) const;
    bool operator==(const DiffPolynomial& o) const { return terms_ == o.terms_; }

    std::string str() const;

  private:
    std::map<DiffMonomial, Rational> terms_;
};

// Leibniz derivation: bump each factor's order in turn.
DiffPolynomial derive(const DiffPolynomial& p);
DiffPolynomial dp_mul(const DiffPolynomial& a, const DiffPolynomial& b);
// The embedding product: circ(u, v) = derive(u) * v.
DiffPolynomial circ(const DiffPolynomial& u, const DiffPolynomial& v);

// Recursive image of a Star term under circ; output is weight -1.
DiffPolynomial embed(const Term& t);
DiffPolynomial embed(const Polynomial& p);

// The metabelian quotient model: degree <= 3 unchanged; degree 4 rewrites
// x''x'xx monomials to -x'x'x'x and canonicalizes x'x'x'x monomials (the
// underived factor carries the largest generator); from degree 5 on only
// x^(n-1) x...x monomials survive. Throws unless every monomial has
// weight -1.
DiffPolynomial metabelian_reduce(const DiffPolynomial& p);

// Distinct multilinear weight -1 monomials surviving metabelian_reduce.
int diff_dims(int n);

}  // namespace malg
