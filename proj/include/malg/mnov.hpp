#pragma once

#include <map>
#include <optional>
#include <vector>

#include "malg/poly.hpp"

namespace malg {

// Basis monomials of the free metabelian Novikov algebra:
//   degree 1   x_i
//   degree 2   x_i1 x_i2                      (no constraint)
//   degree 3   (x_i1 x_i2) x_i3               i2 <= i3
//              x_i3 (x_i2 x_i1)               i2 <= i3
//   degree 4   ((x_i1 x_i2) x_i3) x_i4        i2 <= i3 <= i4
//              x_j1 (x_j2 (x_j3 x_j4))        j1 <= j2 <= j3 <= j4
//   degree n>4 (...((x_i1 x_i2) x_i3)...) x_in  with i2 <= ... <= in
struct NovBasisMonomial {
    enum class Kind { Gen, Pair, Left3, Right3, Left4, Right4, LeftComb };
    Kind kind = Kind::Gen;
    std::vector<int> leaves;  // left-to-right leaf order of the term

    int degree() const { return static_cast<int>(leaves.size()); }
    Term to_term() const;
    static std::optional<NovBasisMonomial> classify(const Term& t);
    bool operator==(const NovBasisMonomial& o) const {
        return kind == o.kind && leaves == o.leaves;
    }
};

struct NovMonoLess {
    bool operator()(const NovBasisMonomial& a, const NovBasisMonomial& b) const;
};

class NovPolynomial {
  public:
    NovPolynomial() = default;
    static NovPolynomial of(NovBasisMonomial m, Rational c = Rational(1));

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<NovBasisMonomial, Rational, NovMonoLess>& terms() const& { return terms_; }
    std::map<NovBasisMonomial, Rational, NovMonoLess> terms() && { return std::move(terms_); }

    NovPolynomial& add(const NovBasisMonomial& m, const Rational& c);
    NovPolynomial& operator+=(const NovPolynomial& o);
    NovPolynomial& operator*=(const Rational& c);
    bool operator==(const NovPolynomial& o) const { return terms_ == o.terms_; }

    Polynomial to_polynomial() const;

  private:
    std::map<NovBasisMonomial, Rational, NovMonoLess> terms_;
};

// All basis monomials of degree n over x1..xm, sorted by term order.
std::vector<NovBasisMonomial> nov_basis(int n, int m);
// The multilinear ones over x1..xn.
std::vector<NovBasisMonomial> nov_basis_multilinear(int n);

// Normal form in the free metabelian Novikov algebra (Star terms in).
NovPolynomial nov_nf(const Polynomial& p);
NovPolynomial nov_nf(const Term& t);

// Structured multiplication table, bilinear on basis monomials:
// compound*compound = 0; generator * comb(deg>4) = 0; comb(deg>4) * x_j
// inserts j into the sorted tail; everything else via the normal form of
// the raw product.
NovPolynomial nov_mul(const NovPolynomial& u, const NovPolynomial& v);

// The seven degree-5 monomials that vanish in the algebra.
std::vector<Term> nov_lemma_terms();

// Multilinear symmetric generators on x1..xn:
// n=1 [p1], n=2 [p2], n=3 [p31,p32], n=4 [p41,p42], n>=5 [pn].
std::vector<Polynomial> nov_sym_generators(int n);
std::vector<std::string> nov_sym_labels(int n);

// Number of multilinear basis monomials of degree n.
int nov_dims(int n);

}  // namespace malg
