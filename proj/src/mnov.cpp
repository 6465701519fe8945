#include "malg/mnov.hpp"

#include <algorithm>
#include <stdexcept>

namespace malg {

namespace {

Term star(const Term& a, const Term& b) { return Term::node(Op::Star, a, b); }
Term xg(int i) { return Term::leaf(i); }

bool is_left_comb(const Term& t) {
    Term cur = t;
    while (!cur.is_leaf()) {
        if (!cur.right().is_leaf()) return false;
        cur = cur.left();
    }
    return true;
}

bool is_right_comb(const Term& t) {
    Term cur = t;
    while (!cur.is_leaf()) {
        if (!cur.left().is_leaf()) return false;
        cur = cur.right();
    }
    return true;
}

}  // namespace

Term NovBasisMonomial::to_term() const {
    switch (kind) {
        case Kind::Gen: return xg(leaves[0]);
        case Kind::Pair: return star(xg(leaves[0]), xg(leaves[1]));
        case Kind::Left3:
        case Kind::Left4:
        case Kind::LeftComb: {
            Term t = star(xg(leaves[0]), xg(leaves[1]));
            for (std::size_t i = 2; i < leaves.size(); ++i) t = star(t, xg(leaves[i]));
            return t;
        }
        case Kind::Right3:
        case Kind::Right4: {
            std::size_t n = leaves.size();
            Term t = star(xg(leaves[n - 2]), xg(leaves[n - 1]));
            for (std::size_t i = n - 2; i-- > 0;) t = star(xg(leaves[i]), t);
            return t;
        }
    }
    return {};
}

std::optional<NovBasisMonomial> NovBasisMonomial::classify(const Term& t) {
    const int n = t.degree();
    NovBasisMonomial m;
    m.leaves = t.leaves();
    if (n == 1) {
        m.kind = Kind::Gen;
        return m;
    }
    if (n == 2) {
        m.kind = Kind::Pair;
        return m;
    }
    const auto& lv = m.leaves;
    if (is_left_comb(t)) {
        for (std::size_t i = 1; i + 1 < lv.size(); ++i)
            if (lv[i] > lv[i + 1]) return std::nullopt;  // tail sorted
        m.kind = n == 3 ? Kind::Left3 : (n == 4 ? Kind::Left4 : Kind::LeftComb);
        return m;
    }
    if (n == 3 && is_right_comb(t)) {
        if (lv[1] > lv[0]) return std::nullopt;  // middle <= outer
        m.kind = Kind::Right3;
        return m;
    }
    if (n == 4 && is_right_comb(t)) {
        if (!std::is_sorted(lv.begin(), lv.end())) return std::nullopt;
        m.kind = Kind::Right4;
        return m;
    }
    return std::nullopt;
}

bool NovMonoLess::operator()(const NovBasisMonomial& a, const NovBasisMonomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.leaves < b.leaves;
}

NovPolynomial NovPolynomial::of(NovBasisMonomial m, Rational c) {
    NovPolynomial p;
    p.add(m, c);
    return p;
}

NovPolynomial& NovPolynomial::add(const NovBasisMonomial& m, const Rational& c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

NovPolynomial& NovPolynomial::operator+=(const NovPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

NovPolynomial& NovPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Polynomial NovPolynomial::to_polynomial() const {
    Polynomial p;
    for (const auto& [m, c] : terms_) p.add(m.to_term(), c);
    return p;
}

namespace {

// nondecreasing k-tuples over 1..m
void multisets(int m, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    int lo = cur.empty() ? 1 : cur.back();
    for (int v = lo; v <= m; ++v) {
        cur.push_back(v);
        multisets(m, k - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> multisets(int m, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    multisets(m, k, cur, out);
    return out;
}

}  // namespace

std::vector<NovBasisMonomial> nov_basis(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("nov_basis: n, m >= 1");
    using K = NovBasisMonomial::Kind;
    std::vector<NovBasisMonomial> out;
    auto push = [&out](K kind, std::vector<int> leaves) {
        out.push_back(NovBasisMonomial{kind, std::move(leaves)});
    };
    if (n == 1) {
        for (int i = 1; i <= m; ++i) push(K::Gen, {i});
    } else if (n == 2) {
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) push(K::Pair, {i, j});
    } else if (n == 3) {
        for (int i1 = 1; i1 <= m; ++i1)
            for (int i2 = 1; i2 <= m; ++i2)
                for (int i3 = i2; i3 <= m; ++i3) {
                    push(K::Left3, {i1, i2, i3});
                    push(K::Right3, {i3, i2, i1});
                }
    } else if (n == 4) {
        for (int i1 = 1; i1 <= m; ++i1)
            for (auto& tail : multisets(m, 3)) {
                std::vector<int> lv{i1};
                lv.insert(lv.end(), tail.begin(), tail.end());
                push(K::Left4, std::move(lv));
            }
        for (auto& lv : multisets(m, 4)) push(K::Right4, lv);
    } else {
        for (int head = 1; head <= m; ++head)
            for (auto& tail : multisets(m, n - 1)) {
                std::vector<int> lv{head};
                lv.insert(lv.end(), tail.begin(), tail.end());
                push(K::LeftComb, std::move(lv));
            }
    }
    std::sort(out.begin(), out.end(), [](const NovBasisMonomial& a, const NovBasisMonomial& b) {
        return term_cmp(a.to_term(), b.to_term()) < 0;
    });
    return out;
}

std::vector<NovBasisMonomial> nov_basis_multilinear(int n) {
    std::vector<NovBasisMonomial> out;
    for (auto& mono : nov_basis(n, n))
        if (mono.to_term().is_multilinear(n)) out.push_back(std::move(mono));
    return out;
}

namespace {

NovPolynomial nf_term(const Term& t);

NovPolynomial nf_scaled(const Term& t, const Rational& c) {
    NovPolynomial p = nf_term(t);
    p *= c;
    return p;
}

NovPolynomial nf_term(const Term& t) {
    using K = NovBasisMonomial::Kind;
    const int d = t.degree();
    if (d == 1) return NovPolynomial::of({K::Gen, {t.gen()}});
    if (d == 2) return NovPolynomial::of({K::Pair, {t.left().gen(), t.right().gen()}});
    if (d == 3) {
        if (t.left().degree() == 2) {  // (a b) c
            int a = t.left().left().gen(), b = t.left().right().gen(), c = t.right().gen();
            if (b <= c) return NovPolynomial::of({K::Left3, {a, b, c}});
            // (ab)c = (ac)b + a(bc) - a(cb)
            NovPolynomial out = nf_term(star(star(xg(a), xg(c)), xg(b)));
            out += nf_term(star(xg(a), star(xg(b), xg(c))));
            out += nf_scaled(star(xg(a), star(xg(c), xg(b))), Rational(-1));
            return out;
        }
        // a (b c): left-commutativity puts the larger of a,b outside
        int a = t.left().gen(), b = t.right().left().gen(), c = t.right().right().gen();
        if (a >= b) return NovPolynomial::of({K::Right3, {a, b, c}});
        return NovPolynomial::of({K::Right3, {b, a, c}});
    }
    if (d == 4) {
        const Term& l = t.left();
        const Term& r = t.right();
        if (l.degree() >= 2 && r.degree() >= 2) return {};  // (..)(..) = 0
        if (l.degree() == 1) {                              // a (B)
            if (r.left().degree() == 2) return {};          // a((bc)d) = (bc)(ad) = 0
            // a(b(cd)): the whole chain sorts ascending
            std::vector<int> lv = t.leaves();
            std::sort(lv.begin(), lv.end());
            return NovPolynomial::of({K::Right4, std::move(lv)});
        }
        // (A) d
        int dd = r.gen();
        if (l.left().degree() == 1) {
            // (a(bc))d = -a(d(bc))
            int a = l.left().gen();
            return nf_scaled(star(xg(a), star(xg(dd), l.right())), Rational(-1));
        }
        // ((a b) c) d
        int a = l.left().left().gen(), b = l.left().right().gen(), c = l.right().gen();
        if (c > dd) return nf_term(star(star(star(xg(a), xg(b)), xg(dd)), xg(c)));
        if (b > c) {
            NovPolynomial out = nf_term(star(star(star(xg(a), xg(c)), xg(b)), xg(dd)));
            out += nf_term(star(star(xg(a), star(xg(b), xg(c))), xg(dd)));
            out += nf_scaled(star(star(xg(a), star(xg(c), xg(b))), xg(dd)), Rational(-1));
            return out;
        }
        return NovPolynomial::of({K::Left4, {a, b, c, dd}});
    }
    // degree >= 5: only the left comb survives; its tail letters commute
    if (!is_left_comb(t)) return {};
    std::vector<int> lv = t.leaves();
    std::sort(lv.begin() + 1, lv.end());
    return NovPolynomial::of({NovBasisMonomial::Kind::LeftComb, std::move(lv)});
}

}  // namespace

NovPolynomial nov_nf(const Term& t) {
    if (!t.uses_signature(Signature::Star))
        throw std::invalid_argument("nov_nf expects Star terms");
    return nf_term(t);
}

NovPolynomial nov_nf(const Polynomial& p) {
    NovPolynomial out;
    for (const auto& [t, c] : p.terms()) out += nf_scaled(t, c);
    return out;
}

NovPolynomial nov_mul(const NovPolynomial& u, const NovPolynomial& v) {
    using K = NovBasisMonomial::Kind;
    NovPolynomial out;
    for (const auto& [mu, cu] : u.terms()) {
        for (const auto& [mv, cv] : v.terms()) {
            const Rational c = cu * cv;
            const int du = mu.degree(), dv = mv.degree();
            if (du > 1 && dv > 1) continue;            // X1 * X2 = 0
            if (du == 1 && mv.kind == K::LeftComb) continue;  // x_j * comb = 0
            if (mu.kind == K::LeftComb && dv == 1) {
                // comb * x_j: insert j into the sorted tail
                NovBasisMonomial m = mu;
                int j = mv.leaves[0];
                auto pos = std::upper_bound(m.leaves.begin() + 1, m.leaves.end(), j);
                m.leaves.insert(pos, j);
                out.add(m, c);
                continue;
            }
            NovPolynomial prod = nf_scaled(star(mu.to_term(), mv.to_term()), c);
            out += prod;
        }
    }
    return out;
}

std::vector<Term> nov_lemma_terms() {
    auto x = [](int i) { return xg(i); };
    std::vector<Term> out;
    out.push_back(star(star(star(x(1), star(x(2), x(3))), x(4)), x(5)));
    out.push_back(star(star(x(1), star(star(x(2), x(3)), x(4))), x(5)));
    out.push_back(star(star(x(1), star(x(2), star(x(3), x(4)))), x(5)));
    out.push_back(star(x(1), star(star(star(x(2), x(3)), x(4)), x(5))));
    out.push_back(star(x(1), star(star(x(2), star(x(3), x(4))), x(5))));
    out.push_back(star(x(1), star(x(2), star(star(x(3), x(4)), x(5)))));
    out.push_back(star(x(1), star(x(2), star(x(3), star(x(4), x(5))))));
    return out;
}

std::vector<Polynomial> nov_sym_generators(int n) {
    if (n < 1) throw std::invalid_argument("nov_sym_generators: n >= 1");
    std::vector<Polynomial> out;
    if (n == 1) {
        out.push_back(Polynomial::of(xg(1)));
        return out;
    }
    if (n == 2) {
        Polynomial p2;
        p2.add(star(xg(1), xg(2)), 1);
        p2.add(star(xg(2), xg(1)), 1);
        out.push_back(p2);
        return out;
    }
    auto others = [n](int i) {
        std::vector<int> rest;
        for (int v = 1; v <= n; ++v)
            if (v != i) rest.push_back(v);
        return rest;
    };
    if (n == 3) {
        Polynomial p31, p32;
        for (int i = 1; i <= 3; ++i) {
            auto r = others(i);  // r[0] < r[1]
            p31.add(star(xg(r[1]), star(xg(r[0]), xg(i))), 1);
            // second generator built as in the degree-3 construction: the
            // preimage of the x''-sum plus p31. The shorter three-term
            // left-comb sum is not fixed by S_3 (the degree-3 tail swap has
            // nonvanishing right-normed corrections).
            p32.add(star(star(xg(i), xg(r[0])), xg(r[1])), 1);
            p32.add(star(xg(r[1]), star(xg(r[0]), xg(i))), 1);
            p32.add(star(xg(i), star(xg(r[0]), xg(r[1]))), -1);
        }
        out.push_back(p31);
        out.push_back(p32);
        return out;
    }
    if (n == 4) {
        Polynomial p41, p42;
        p41.add(star(xg(1), star(xg(2), star(xg(3), xg(4)))), 1);
        for (int i = 1; i <= 4; ++i) {
            auto r = others(i);
            p42.add(star(star(star(xg(i), xg(r[0])), xg(r[1])), xg(r[2])), 1);
        }
        out.push_back(p41);
        out.push_back(p42);
        return out;
    }
    Polynomial pn;
    for (int i = 1; i <= n; ++i) {
        auto r = others(i);
        Term t = star(xg(i), xg(r[0]));
        for (std::size_t k = 1; k < r.size(); ++k) t = star(t, xg(r[k]));
        pn.add(t, 1);
    }
    out.push_back(pn);
    return out;
}

std::vector<std::string> nov_sym_labels(int n) {
    if (n == 3) return {"p_{3,1}", "p_{3,2}"};
    if (n == 4) return {"p_{4,1}", "p_{4,2}"};
    return {"p_" + std::to_string(n)};
}

int nov_dims(int n) { return static_cast<int>(nov_basis_multilinear(n).size()); }

}  // namespace malg
