#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace malg {

enum class Op : std::uint8_t { Star = 0, Bracket = 1, Brace = 2 };

// A term either uses Star alone or mixes Bracket/Brace.
enum class Signature : std::uint8_t { Star, BracketBrace };

inline bool op_in_signature(Op op, Signature sig) {
    return sig == Signature::Star ? op == Op::Star : op != Op::Star;
}

inline std::size_t signature_size(Signature sig) {
    return sig == Signature::Star ? 1 : 2;
}

// Immutable binary term tree over generators x1, x2, ...
// Cheap to copy (shared handle); structural equality with cached hash.
class Term {
  public:
    Term() = default;  // empty handle; only comparisons against valid terms are UB
    static Term leaf(int gen);
    static Term node(Op op, Term left, Term right);

    bool valid() const { return p_ != nullptr; }
    bool is_leaf() const { return p_->gen != 0; }
    int gen() const { return p_->gen; }
    Op op() const { return p_->op; }
    Term left() const { return Term(p_->left); }
    Term right() const { return Term(p_->right); }
    int degree() const { return p_->degree; }
    std::size_t hash() const { return p_->hash; }

    bool operator==(const Term& other) const;
    bool operator!=(const Term& other) const { return !(*this == other); }

    void collect_leaves(std::vector<int>& out) const;
    std::vector<int> leaves() const;
    int max_gen() const;
    // uses each of x1..xn exactly once
    bool is_multilinear(int n) const;
    bool uses_signature(Signature sig) const;

  private:
    struct Node {
        int gen = 0;  // nonzero => leaf
        Op op = Op::Star;
        std::shared_ptr<const Node> left, right;
        int degree = 1;
        std::size_t hash = 0;
    };
    explicit Term(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
    std::shared_ptr<const Node> p_;
};

// Strict total order: degree, then shape (larger left subtree first,
// recursively), then op tags in preorder, then leaf indices lexicographically.
int term_cmp(const Term& a, const Term& b);

struct TermLess {
    bool operator()(const Term& a, const Term& b) const { return term_cmp(a, b) < 0; }
};
struct TermHash {
    std::size_t operator()(const Term& t) const { return t.hash(); }
};
struct TermEq {
    bool operator()(const Term& a, const Term& b) const { return a == b; }
};

// Fully parenthesized canonical text: x3, (A*B), [A,B], {A,B}.
std::string format_term(const Term& t);

}  // namespace malg
