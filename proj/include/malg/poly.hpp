#pragma once

#include <map>
#include <string>
#include <vector>

#include "malg/rational.hpp"
#include "malg/term.hpp"

namespace malg {

// Sparse formal sum of terms with exact rational coefficients.
// Zero coefficients are never stored; keys are structurally distinct terms.
class Polynomial {
  public:
    Polynomial() = default;
    static Polynomial of(Term t, Rational c = Rational(1));

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    // ref-qualified so iterating the terms of a temporary stays valid
    const std::map<Term, Rational, TermLess>& terms() const& { return terms_; }
    std::map<Term, Rational, TermLess> terms() && { return std::move(terms_); }
    Rational coeff(const Term& t) const;

    Polynomial& add(const Term& t, const Rational& c);
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    int degree() const;  // max term degree, 0 for the zero polynomial
    bool is_homogeneous(int n) const;
    bool is_multilinear(int n) const;  // every term multilinear in x1..xn

  private:
    std::map<Term, Rational, TermLess> terms_;
};

// Deterministic text form: terms in term order, "p/q" coefficients,
// e.g. "(x1*x2) - 2(x2*x1) + 1/2(x3*(x1*x2))"; "0" when empty.
std::string format_poly(const Polynomial& p);

// Bijection on {1..n}; images[i-1] = sigma(i).
class Permutation {
  public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    static Permutation transposition(int n, int i, int j);
    static Permutation cycle(int n);  // 1 -> 2 -> ... -> n -> 1
    static Permutation random(int n, std::uint64_t seed);

    int size() const { return static_cast<int>(images_.size()); }
    int apply(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }
    // (this o other)(i) = this(other(i))
    Permutation compose(const Permutation& other) const;

  private:
    std::vector<int> images_;
};

Term apply_permutation(const Term& t, const Permutation& sigma);
Polynomial apply_permutation(const Polynomial& p, const Permutation& sigma);

}  // namespace malg
