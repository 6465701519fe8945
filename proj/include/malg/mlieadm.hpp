#pragma once

#include <optional>
#include <string>
#include <vector>

#include "malg/poly.hpp"

namespace malg {

// One product into commutator/anticommutator halves: uv = ([u,v]+{u,v})/2.
Polynomial polarize(const Polynomial& p);
Polynomial polarize(const Term& t);
// [u,v] -> uv - vu, {u,v} -> uv + vu.
Polynomial depolarize(const Polynomial& p);
Polynomial depolarize(const Term& t);

// The vertex colors of a right-normed monomial, top to bottom.
struct TypeSequence {
    std::vector<Op> ops;  // Bracket or Brace, length n-1
    bool operator==(const TypeSequence&) const = default;
};
std::string seq_str(const std::vector<Op>& ops);  // "b,w,..." (bracket/brace)

// Right-normed two-colored monomial x_i1 * (x_i2 * (... * (x_i{n-1} * x_in))).
struct TreeMonomial {
    std::vector<Op> seq;     // length n-1, empty for degree 1
    std::vector<int> leaves; // length n

    int degree() const { return static_cast<int>(leaves.size()); }
    Term to_term() const;
    static std::optional<TreeMonomial> from_term(const Term& t);
    auto operator<=>(const TreeMonomial&) const = default;
};

// Basis conditions; violated = 0 when the monomial is a basis element:
//  (1) every non-trailing bracket run has weakly decreasing leaves
//  (2) trailing brace vertex: last two leaves weakly increasing
//  (3) trailing bracket run of length > 2: weakly decreasing leaves with a
//      strict final ascent
//  (4) trailing bracket run of length 1 or 2: degree 2/3 free-Lie basis
//      convention ([a,b] with a<b; [u,[v,w]] with v<w, u<=w)
struct ConditionCheck {
    bool ok = true;
    int violated = 0;
};
ConditionCheck check_conditions(const TreeMonomial& t);

// All basis monomials of degree n over x1..xm, sorted by term order.
std::vector<TreeMonomial> mla_basis(int n, int m);
std::vector<TreeMonomial> mla_basis_multilinear(int n);

// Normal form in the free metabelian Lie-admissible algebra
// (polarized signature in, basis combination out).
Polynomial mla_nf(const Polynomial& p);
Polynomial mla_nf(const Term& t);

// Metabelian Lie normal form; input must be pure-bracket.
Polynomial mlie_nf(const Polynomial& p);

// Structured product u op v: zero when both factors are compound,
// normal form of the raw product otherwise.
Polynomial mla_mul(const Polynomial& u, const Polynomial& v, Op op);

// Multilinear dimension by type-sequence counting (exact, no linear algebra).
mpz_class mla_dims(int n);
// Reference implementation by direct enumeration (parallel over sequences).
mpz_class mla_dims_enumerated(int n);

// Multilinear symmetric generators: one polynomial per type sequence for
// n >= 3 (the sum of the component's basis monomials), p_(1) and p_(2) below.
struct SymGenerator {
    TypeSequence seq;
    std::string label;
    Polynomial poly;
};
std::vector<SymGenerator> mla_sym_generators(int n);

}  // namespace malg
