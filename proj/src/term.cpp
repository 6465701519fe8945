#include "malg/term.hpp"

#include <stdexcept>

namespace malg {

namespace {

std::size_t hash_combine(std::size_t a, std::size_t b) {
    return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

}  // namespace

Term Term::leaf(int gen) {
    if (gen < 1) throw std::invalid_argument("generator index must be >= 1");
    auto n = std::make_shared<Node>();
    n->gen = gen;
    n->degree = 1;
    n->hash = hash_combine(0x1eaf, static_cast<std::size_t>(gen));
    Term t;
    t.p_ = std::move(n);
    return t;
}

Term Term::node(Op op, Term left, Term right) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->gen = 0;
    n->degree = left.degree() + right.degree();
    n->hash = hash_combine(hash_combine(static_cast<std::size_t>(op) + 0x9e1, left.hash()),
                           right.hash());
    n->left = std::move(left.p_);
    n->right = std::move(right.p_);
    Term t;
    t.p_ = std::move(n);
    return t;
}

bool Term::operator==(const Term& other) const {
    if (p_ == other.p_) return true;
    if (p_->hash != other.p_->hash || p_->degree != other.p_->degree) return false;
    if (is_leaf() != other.is_leaf()) return false;
    if (is_leaf()) return gen() == other.gen();
    return op() == other.op() && left() == other.left() && right() == other.right();
}

void Term::collect_leaves(std::vector<int>& out) const {
    if (is_leaf()) {
        out.push_back(gen());
        return;
    }
    left().collect_leaves(out);
    right().collect_leaves(out);
}

std::vector<int> Term::leaves() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(degree()));
    collect_leaves(out);
    return out;
}

int Term::max_gen() const {
    if (is_leaf()) return gen();
    return std::max(left().max_gen(), right().max_gen());
}

bool Term::is_multilinear(int n) const {
    if (degree() != n) return false;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> ls = leaves();
    for (int g : ls) {
        if (g < 1 || g > n || seen[static_cast<std::size_t>(g)]) return false;
        seen[static_cast<std::size_t>(g)] = 1;
    }
    return true;
}

bool Term::uses_signature(Signature sig) const {
    if (is_leaf()) return true;
    return op_in_signature(op(), sig) && left().uses_signature(sig) &&
           right().uses_signature(sig);
}

namespace {

// precondition: equal degrees
int shape_cmp(const Term& a, const Term& b) {
    if (a.is_leaf()) return 0;
    int da = a.left().degree(), db = b.left().degree();
    if (da != db) return da > db ? -1 : 1;  // larger left subtree first
    if (int c = shape_cmp(a.left(), b.left())) return c;
    return shape_cmp(a.right(), b.right());
}

// precondition: identical shapes
int op_cmp(const Term& a, const Term& b) {
    if (a.is_leaf()) return 0;
    if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
    if (int c = op_cmp(a.left(), b.left())) return c;
    return op_cmp(a.right(), b.right());
}

int leaf_cmp(const Term& a, const Term& b) {
    if (a.is_leaf()) return a.gen() == b.gen() ? 0 : (a.gen() < b.gen() ? -1 : 1);
    if (int c = leaf_cmp(a.left(), b.left())) return c;
    return leaf_cmp(a.right(), b.right());
}

}  // namespace

int term_cmp(const Term& a, const Term& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    if (int c = shape_cmp(a, b)) return c;
    if (int c = op_cmp(a, b)) return c;
    return leaf_cmp(a, b);
}

std::string format_term(const Term& t) {
    if (t.is_leaf()) return "x" + std::to_string(t.gen());
    std::string l = format_term(t.left());
    std::string r = format_term(t.right());
    switch (t.op()) {
        case Op::Star: return "(" + l + "*" + r + ")";
        case Op::Bracket: return "[" + l + "," + r + "]";
        case Op::Brace: return "{" + l + "," + r + "}";
    }
    return {};
}

}  // namespace malg
