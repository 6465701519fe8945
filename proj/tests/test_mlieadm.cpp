#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "malg/enumerate.hpp"
#include "malg/mlieadm.hpp"
#include "malg/oracle.hpp"
#include "malg/parse.hpp"
#include "malg/verify.hpp"
#include "test_util.hpp"

using namespace malg;
using namespace malg::testutil;

namespace {

Polynomial P(const std::string& text) { return parse_poly(text, Signature::BracketBrace); }
Term T(const std::string& text) { return parse_term(text, Signature::BracketBrace); }
Term S(const std::string& text) { return parse_term(text, Signature::Star); }

// canonical orientation under commutativity of braces / anticommutativity of
// brackets, without any other identities
std::pair<int, Term> sym_canon(const Term& t) {
    if (t.is_leaf()) return {1, t};
    auto [sl, l] = sym_canon(t.left());
    auto [sr, r] = sym_canon(t.right());
    int sign = sl * sr;
    if (term_cmp(l, r) > 0) {
        std::swap(l, r);
        if (t.op() == Op::Bracket) sign = -sign;
    }
    return {sign, Term::node(t.op(), l, r)};
}

Polynomial sym_canon(const Polynomial& p) {
    Polynomial out;
    for (const auto& [t, c] : p.terms()) {
        auto [sign, ct] = sym_canon(t);
        if (!ct.is_leaf() && ct.left() == ct.right() && ct.op() == Op::Bracket) continue;
        out.add(ct, c * sign);
    }
    return out;
}

}  // namespace

TEST_CASE("polarize and depolarize") {
    CHECK(depolarize(T("[x1,x2]")) == parse_poly("(x1*x2) - (x2*x1)", Signature::Star));
    CHECK(depolarize(T("{x1,x2}")) == parse_poly("(x1*x2) + (x2*x1)", Signature::Star));
    CHECK(depolarize(T("{[x1,x2],{x3,x4}}")).size() == 8);
    CHECK(polarize(S("(x1*x2)")) == P("1/2[x1,x2] + 1/2{x1,x2}"));
    Polynomial p = polarize(S("(x1*(x2*x3))"));
    CHECK(p.coeff(T("[x1,[x2,x3]]")) == rat(1, 4));
    CHECK(p.coeff(T("{x1,{x2,x3}}")) == rat(1, 4));
    CHECK(p.size() == 4);
    // depolarize(polarize(p)) = p literally; the reverse round trip holds
    // modulo bracket orientation
    CHECK(sym_canon(polarize(depolarize(T("[x1,x2]")))) == P("[x1,x2]"));
    std::uint64_t seed = 4;
    for (int n = 2; n <= 5; ++n)
        for (int trial = 0; trial < 15; ++trial) {
            Polynomial star = random_poly(Signature::Star, n, 3, seed);
            CHECK(depolarize(polarize(star)) == star);
            Polynomial two = random_poly(Signature::BracketBrace, n, 3, seed);
            CHECK(sym_canon(polarize(depolarize(two))) == sym_canon(two));
        }
}

TEST_CASE("tree monomials and conditions") {
    // seq (b,b,w), leaves (x2,x1,x3,x4): valid
    TreeMonomial a{{Op::Bracket, Op::Bracket, Op::Brace}, {2, 1, 3, 4}};
    CHECK(check_conditions(a).ok);
    CHECK(format_term(a.to_term()) == "[x2,[x1,{x3,x4}]]");
    CHECK(TreeMonomial::from_term(a.to_term()) == a);
    // ascending bracket run violates condition 1
    TreeMonomial b{{Op::Bracket, Op::Bracket, Op::Brace}, {1, 2, 3, 4}};
    CHECK(!check_conditions(b).ok);
    CHECK(check_conditions(b).violated == 1);
    // trailing bracket run of length 3
    TreeMonomial c{{Op::Bracket, Op::Bracket, Op::Bracket}, {3, 2, 1, 4}};
    CHECK(check_conditions(c).ok);
    TreeMonomial d{{Op::Bracket, Op::Bracket, Op::Bracket}, {3, 2, 4, 1}};
    CHECK(check_conditions(d).violated == 3);
    // trailing brace
    TreeMonomial e{{Op::Brace}, {2, 1}};
    CHECK(check_conditions(e).violated == 2);
    // non-right-normed terms do not convert
    CHECK(!TreeMonomial::from_term(T("[[x1,x2],x3]")).has_value());
}

TEST_CASE("basis counts match the dimension table") {
    CHECK(mla_basis_multilinear(2).size() == 2);
    CHECK(mla_basis_multilinear(3).size() == 11);
    CHECK(mla_basis_multilinear(4).size() == 77);
    CHECK(mla_dims(1) == 1);
    CHECK(mla_dims(5) == 679);
    CHECK(mla_dims(6) == 7184);
    CHECK(mla_dims(7) == 88668);
    CHECK(mla_dims_enumerated(5) == 679);
    // constrained generation agrees with filtering on a general alphabet
    auto b32 = mla_basis(3, 2);
    for (const auto& m : b32) CHECK(check_conditions(m).ok);
    for (std::size_t i = 0; i + 1 < b32.size(); ++i)
        CHECK(term_cmp(b32[i].to_term(), b32[i + 1].to_term()) < 0);
    long brute = 0;
    for (std::uint64_t mask = 0; mask < 4; ++mask)
        for (int l1 = 1; l1 <= 2; ++l1)
            for (int l2 = 1; l2 <= 2; ++l2)
                for (int l3 = 1; l3 <= 2; ++l3) {
                    TreeMonomial m{{mask & 1 ? Op::Brace : Op::Bracket,
                                    mask & 2 ? Op::Brace : Op::Bracket},
                                   {l1, l2, l3}};
                    if (check_conditions(m).ok) ++brute;
                }
    CHECK(static_cast<long>(b32.size()) == brute);
}

TEST_CASE("mla_nf: worked examples") {
    CHECK(mla_nf(T("{[x1,x2],[x3,x4]}")).is_zero());
    CHECK(mla_nf(T("[[x1,x2],[x3,x4]]")).is_zero());
    // right-norming with the bracket flip
    CHECK(mla_nf(T("[[x1,x2],x3]")) == P("[x1,[x2,x3]] - [x2,[x1,x3]]"));
    // interior bracket-run swap, then leaf sort
    CHECK(mla_nf(T("[x1,[x2,{x3,x4}]]")) == P("[x2,[x1,{x3,x4}]]"));
    // metabelian Lie normal form at degree 4
    CHECK(mla_nf(T("[x1,[x2,[x3,x4]]]")) == P("[x3,[x2,[x1,x4]]] - [x4,[x2,[x1,x3]]]"));
    CHECK(mlie_nf(P("[x3,[x2,[x1,x4]]]")) == P("[x3,[x2,[x1,x4]]]"));
    CHECK(mlie_nf(P("[[x1,x2],[x3,x4]]")).is_zero());
    CHECK_THROWS(mlie_nf(P("{x1,x2}")));
    // braces commute
    CHECK(mla_nf(T("{x2,x1}")) == P("{x1,x2}"));
    CHECK(mla_nf(T("[x2,x1]")) == P("-[x1,x2]"));
    CHECK(mla_nf(T("[x1,x1]")).is_zero());
}

TEST_CASE("mla_nf: idempotent, linear, lands on the basis") {
    std::uint64_t seed = 8;
    for (int n = 2; n <= 5; ++n)
        for (int trial = 0; trial < 15; ++trial) {
            Polynomial p = random_poly(Signature::BracketBrace, n, 3, seed);
            Polynomial q = random_poly(Signature::BracketBrace, n, 2, seed);
            Polynomial np = mla_nf(p);
            CHECK(mla_nf(np) == np);
            CHECK(mla_nf(p * rat(3, 7) + q) == np * rat(3, 7) + mla_nf(q));
            for (const auto& [t, c] : np.terms()) {
                auto mono = TreeMonomial::from_term(t);
                REQUIRE(mono.has_value());
                CHECK(check_conditions(*mono).ok);
            }
        }
}

TEST_CASE("normal form preserves the type sequence componentwise") {
    std::uint64_t seed = 31;
    for (int n = 3; n <= 5; ++n) {
        const auto basis = mla_basis_multilinear(n);
        for (int trial = 0; trial < 40; ++trial) {
            const auto& mono = basis[next_rand(seed) % basis.size()];
            Permutation s = Permutation::random(n, next_rand(seed));
            Polynomial img = mla_nf(apply_permutation(mono.to_term(), s));
            for (const auto& [t, c] : img.terms()) {
                auto m = TreeMonomial::from_term(t);
                REQUIRE(m.has_value());
                CHECK(m->seq == mono.seq);
            }
        }
    }
}

TEST_CASE("mla_mul: table rows as theorems") {
    // brace product with a generator prepends it
    Polynomial w = P("[x2,[x1,x3]]");
    CHECK(mla_mul(w, P("x4"), Op::Brace) == P("{x4,[x2,[x1,x3]]}"));
    // brace-headed monomial under bracket flips the sign
    Polynomial braceheaded = P("{x1,{x2,x3}}");
    CHECK(mla_mul(braceheaded, P("x4"), Op::Bracket) == mla_nf(T("[{x1,{x2,x3}},x4]")));
    CHECK(mla_mul(braceheaded, P("x4"), Op::Bracket) == P("-[x4,{x1,{x2,x3}}]"));
    // compound times compound dies under both products
    CHECK(mla_mul(P("{x1,x2}"), P("[x3,x4]"), Op::Brace).is_zero());
    CHECK(mla_mul(P("{x1,x2}"), P("[x3,x4]"), Op::Bracket).is_zero());
    // bracket-prefix insertion row: ([x3,[x1,{x4,x5}]]) bullet x2
    Polynomial u = P("[x3,[x1,{x4,x5}]]");
    Polynomial got = mla_mul(u, P("x2"), Op::Bracket);
    CHECK(got == P("-[x3,[x2,[x1,{x4,x5}]]]"));
    // ({x1,x2}) bullet x3 = -[x3,{x1,x2}]
    CHECK(mla_mul(P("{x1,x2}"), P("x3"), Op::Bracket) == P("-[x3,{x1,x2}]"));
}

TEST_CASE("mla_mul consistency with nf of the raw product") {
    std::uint64_t seed = 13;
    for (int total = 2; total <= 5; ++total)
        for (int du = 1; du < total; ++du) {
            const int dv = total - du;
            for (int trial = 0; trial < 15; ++trial) {
                Term u = random_multilinear(Signature::BracketBrace, du, seed);
                std::vector<int> relabel(static_cast<std::size_t>(total));
                for (int i = 1; i <= dv; ++i) relabel[static_cast<std::size_t>(i - 1)] = du + i;
                for (int i = dv + 1; i <= total; ++i)
                    relabel[static_cast<std::size_t>(i - 1)] = i - dv;
                Term v = apply_permutation(random_multilinear(Signature::BracketBrace, dv, seed),
                                           Permutation(relabel));
                for (Op op : {Op::Bracket, Op::Brace})
                    CHECK(mla_mul(mla_nf(u), mla_nf(v), op) ==
                          mla_nf(Term::node(op, u, v)));
            }
        }
}

TEST_CASE("symmetric generators reproduce the printed examples") {
    auto gens = mla_sym_generators(3);
    REQUIRE(gens.size() == 4);
    auto find = [&](const std::string& label) -> const Polynomial& {
        for (const auto& g : gens)
            if (g.label == label) return g.poly;
        static Polynomial none;
        return none;
    };
    CHECK(find("p_(b,w,3)") == P("[x1,{x2,x3}] + [x2,{x1,x3}] + [x3,{x1,x2}]"));
    CHECK(find("p_(w,b,3)") == P("{x1,[x2,x3]} + {x2,[x1,x3]} + {x3,[x1,x2]}"));
    CHECK(find("p_(w,w,3)") == P("{x1,{x2,x3}} + {x2,{x1,x3}} + {x3,{x1,x2}}"));
    // the 6-term degree-4 example
    auto gens4 = mla_sym_generators(4);
    for (const auto& g : gens4)
        if (g.label == "p_(b,b,w,4)") {
            CHECK(g.poly ==
                  P("[x2,[x1,{x3,x4}]] + [x3,[x1,{x2,x4}]] + [x4,[x1,{x2,x3}]]"
                    " + [x3,[x2,{x1,x4}]] + [x4,[x2,{x1,x3}]] + [x4,[x3,{x1,x2}]]"));
        }
    // p_(2)
    auto gens2 = mla_sym_generators(2);
    REQUIRE(gens2.size() == 1);
    CHECK(gens2[0].poly == P("{x1,x2}"));
    CHECK(depolarize(gens2[0].poly) == parse_poly("(x1*x2) + (x2*x1)", Signature::Star));
}

TEST_CASE("trailing-brace generators are invariant; trailing-bracket ones are not") {
    for (int n = 3; n <= 5; ++n) {
        for (const auto& g : mla_sym_generators(n)) {
            const bool trailing_brace = g.seq.ops.back() == Op::Brace;
            Polynomial nf = mla_nf(g.poly);
            CHECK(!nf.is_zero());
            bool invariant = true;
            for (const Permutation& s :
                 {Permutation::transposition(n, 1, 2), Permutation::cycle(n)})
                if (mla_nf(apply_permutation(g.poly, s)) != nf) invariant = false;
            CHECK(invariant == trailing_brace);
        }
    }
}

TEST_CASE("oracle cross-checks at low degree (suite)") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& c : mla_basis_suite(n)) {
            INFO(c.name, ": ", c.detail);
            CHECK(c.pass);
        }
}

TEST_CASE("identities suite") {
    for (const auto& c : mla_identities_suite()) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
}
