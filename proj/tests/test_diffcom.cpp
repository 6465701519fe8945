#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "malg/diffcom.hpp"
#include "malg/enumerate.hpp"
#include "malg/mnov.hpp"
#include "malg/parse.hpp"
#include "malg/verify.hpp"
#include "test_util.hpp"

using namespace malg;
using namespace malg::testutil;

namespace {

DiffMonomial DM(std::vector<std::pair<int, int>> f) {
    DiffMonomial m{std::move(f)};
    m.normalize();
    return m;
}

Term T(const std::string& text) { return parse_term(text, Signature::Star); }

}  // namespace

TEST_CASE("weight function") {
    CHECK(DM({{1, 0}}).weight() == -1);
    CHECK(DM({{1, 2}, {2, 0}, {3, 0}}).weight() == -1);
    CHECK(DM({{1, 1}, {2, 1}}).weight() == 0);
}

TEST_CASE("derive: Leibniz rule") {
    DiffPolynomial x1x2 = DiffPolynomial::of(DM({{1, 0}, {2, 0}}));
    DiffPolynomial d = derive(x1x2);
    DiffPolynomial expect = DiffPolynomial::of(DM({{1, 1}, {2, 0}}));
    expect += DiffPolynomial::of(DM({{1, 0}, {2, 1}}));
    CHECK(d == expect);
    CHECK(derive(DiffPolynomial::of(DM({{1, 1}}))) == DiffPolynomial::of(DM({{1, 2}})));
    // weight goes up by one
    std::uint64_t seed = 1;
    for (int trial = 0; trial < 20; ++trial) {
        DiffPolynomial e = embed(random_multilinear(Signature::Star, 4, seed));
        for (const auto& [m, c] : derive(e).terms()) CHECK(m.weight() == 0);
    }
    // product rule on random monomials
    for (int trial = 0; trial < 20; ++trial) {
        DiffMonomial a = DM({{1 + rand_below(seed, 3), rand_below(seed, 3)},
                             {1 + rand_below(seed, 3), rand_below(seed, 2)}});
        DiffMonomial b = DM({{1 + rand_below(seed, 3), rand_below(seed, 2)}});
        DiffPolynomial pa = DiffPolynomial::of(a), pb = DiffPolynomial::of(b);
        DiffPolynomial lhs = derive(dp_mul(pa, pb));
        DiffPolynomial rhs = dp_mul(derive(pa), pb);
        rhs += dp_mul(pa, derive(pb));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("circ and embed examples") {
    DiffPolynomial x1 = DiffPolynomial::of(DM({{1, 0}}));
    DiffPolynomial x2 = DiffPolynomial::of(DM({{2, 0}}));
    CHECK(circ(x1, x2) == DiffPolynomial::of(DM({{1, 1}, {2, 0}})));
    CHECK(embed(T("(x1*x2)")) == DiffPolynomial::of(DM({{1, 1}, {2, 0}})));
    // ((x1*x2)*x3) -> x1''x2x3 + x1'x2'x3
    DiffPolynomial expect = DiffPolynomial::of(DM({{1, 2}, {2, 0}, {3, 0}}));
    expect += DiffPolynomial::of(DM({{1, 1}, {2, 1}, {3, 0}}));
    CHECK(embed(T("((x1*x2)*x3)")) == expect);
    // x1 o (x2 o x3) = x1'x2'x3
    CHECK(embed(T("(x1*(x2*x3))")) == DiffPolynomial::of(DM({{1, 1}, {2, 1}, {3, 0}})));
    // embed = circ of embeddings, and all weights are -1
    std::uint64_t seed = 2;
    for (int n = 2; n <= 6; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            Term t = random_multilinear(Signature::Star, n, seed);
            for (const auto& [m, c] : embed(t).terms()) CHECK(m.weight() == -1);
            CHECK(embed(t) == circ(embed(t.left()), embed(t.right())));
        }
}

TEST_CASE("metabelian_reduce: degree-4 rules") {
    // x1''x2'x3x4 -> -x1'x2'x3'x4
    DiffPolynomial in = DiffPolynomial::of(DM({{1, 2}, {2, 1}, {3, 0}, {4, 0}}));
    DiffPolynomial out = metabelian_reduce(in);
    DiffPolynomial expect = DiffPolynomial::of(DM({{1, 1}, {2, 1}, {3, 1}, {4, 0}}));
    expect *= rat(-1);
    CHECK(out == expect);
    // canonical x'x'x'x stays put
    DiffPolynomial keep = DiffPolynomial::of(DM({{1, 1}, {2, 1}, {3, 1}, {4, 0}}));
    CHECK(metabelian_reduce(keep) == keep);
    // the non-canonical variant moves to the canonical one without a sign
    DiffPolynomial other = DiffPolynomial::of(DM({{1, 1}, {2, 1}, {3, 0}, {4, 1}}));
    CHECK(metabelian_reduce(other) == keep);
    // x''' survives
    DiffPolynomial top = DiffPolynomial::of(DM({{2, 3}, {1, 0}, {3, 0}, {4, 0}}));
    CHECK(metabelian_reduce(top) == top);
    // degree-5 non-survivor
    CHECK(metabelian_reduce(DiffPolynomial::of(DM({{1, 2}, {2, 1}, {3, 1}, {4, 0}, {5, 0}})))
              .is_zero());
    // degree-5 survivor
    DiffPolynomial surv = DiffPolynomial::of(DM({{1, 4}, {2, 0}, {3, 0}, {4, 0}, {5, 0}}));
    CHECK(metabelian_reduce(surv) == surv);
    // weight guard
    CHECK_THROWS(metabelian_reduce(DiffPolynomial::of(DM({{1, 1}, {2, 1}}))));
}

TEST_CASE("diff_dims matches nov_dims") {
    CHECK(diff_dims(3) == 6);
    CHECK(diff_dims(4) == 5);
    CHECK(diff_dims(5) == 5);
    for (int n = 1; n <= 6; ++n) CHECK(diff_dims(n) == nov_dims(n));
}

TEST_CASE("homomorphism through the embedding") {
    std::uint64_t seed = 9;
    for (int total = 2; total <= 6; ++total)
        for (int trial = 0; trial < 10; ++trial) {
            const int du = 1 + rand_below(seed, total - 1);
            const int dv = total - du;
            Term u = random_multilinear(Signature::Star, du, seed);
            std::vector<int> relabel(static_cast<std::size_t>(total));
            for (int i = 1; i <= dv; ++i) relabel[static_cast<std::size_t>(i - 1)] = du + i;
            for (int i = dv + 1; i <= total; ++i) relabel[static_cast<std::size_t>(i - 1)] = i - dv;
            Term v = apply_permutation(random_multilinear(Signature::Star, dv, seed),
                                       Permutation(relabel));
            Term uv = Term::node(Op::Star, u, v);
            CHECK(metabelian_reduce(embed(uv)) ==
                  metabelian_reduce(circ(embed(u), embed(v))));
        }
}

TEST_CASE("kernel agreement, exhaustive to degree 5") {
    for (int n = 2; n <= 5; ++n) {
        for (const Term& t : enumerate_multilinear(Signature::Star, n)) {
            if (nov_nf(t).is_zero()) CHECK(metabelian_reduce(embed(t)).is_zero());
        }
    }
}

TEST_CASE("diffcom suite to degree 5") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& c : diffcom_suite(n, {})) {
            INFO(c.name, ": ", c.detail);
            CHECK(c.pass);
        }
}

TEST_CASE("diagnostic text form") {
    CHECK(DM({{1, 2}, {2, 0}, {3, 0}}).str() == "x1''\xC2\xB7x2\xC2\xB7x3");
    CHECK(DM({{4, 5}, {1, 0}}).str() == "x1\xC2\xB7x4^(5)");
}
