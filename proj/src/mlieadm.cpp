#include "malg/mlieadm.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace malg {

namespace {

Polynomial combine(Op op, const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [s, ca] : a.terms())
        for (const auto& [t, cb] : b.terms()) out.add(Term::node(op, s, t), ca * cb);
    return out;
}

}  // namespace

Polynomial polarize(const Term& t) {
    if (t.is_leaf()) return Polynomial::of(t);
    if (t.op() != Op::Star) throw std::invalid_argument("polarize expects Star terms");
    Polynomial l = polarize(t.left());
    Polynomial r = polarize(t.right());
    Polynomial out = combine(Op::Bracket, l, r);
    out += combine(Op::Brace, l, r);
    out *= rat(1, 2);
    return out;
}

Polynomial polarize(const Polynomial& p) {
    Polynomial out;
    for (const auto& [t, c] : p.terms()) out += polarize(t) * c;
    return out;
}

Polynomial depolarize(const Term& t) {
    if (t.is_leaf()) return Polynomial::of(t);
    if (t.op() == Op::Star) throw std::invalid_argument("depolarize expects [,]/{,} terms");
    Polynomial l = depolarize(t.left());
    Polynomial r = depolarize(t.right());
    Polynomial out = combine(Op::Star, l, r);
    Polynomial rev = combine(Op::Star, r, l);
    if (t.op() == Op::Bracket)
        out -= rev;
    else
        out += rev;
    return out;
}

Polynomial depolarize(const Polynomial& p) {
    Polynomial out;
    for (const auto& [t, c] : p.terms()) out += depolarize(t) * c;
    return out;
}

std::string seq_str(const std::vector<Op>& ops) {
    std::string out;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (i) out += ",";
        out += ops[i] == Op::Bracket ? "b" : "w";
    }
    return out;
}

Term TreeMonomial::to_term() const {
    const std::size_t n = leaves.size();
    Term t = Term::leaf(leaves[n - 1]);
    for (std::size_t k = n - 1; k-- > 0;) t = Term::node(seq[k], Term::leaf(leaves[k]), t);
    return t;
}

std::optional<TreeMonomial> TreeMonomial::from_term(const Term& t) {
    TreeMonomial m;
    Term cur = t;
    while (!cur.is_leaf()) {
        if (!cur.left().is_leaf()) return std::nullopt;
        m.seq.push_back(cur.op());
        m.leaves.push_back(cur.left().gen());
        cur = cur.right();
    }
    m.leaves.push_back(cur.gen());
    return m;
}

namespace {

struct Run {
    Op op;
    int a, b;  // vertex positions, inclusive
};

std::vector<Run> runs_of(const std::vector<Op>& seq) {
    std::vector<Run> runs;
    for (int k = 0; k < static_cast<int>(seq.size()); ++k) {
        if (!runs.empty() && runs.back().op == seq[static_cast<std::size_t>(k)])
            runs.back().b = k;
        else
            runs.push_back({seq[static_cast<std::size_t>(k)], k, k});
    }
    return runs;
}

}  // namespace

ConditionCheck check_conditions(const TreeMonomial& t) {
    const int n = t.degree();
    if (n == 1) return {};
    const auto& lv = t.leaves;
    const int last = n - 2;
    const std::vector<Run> runs = runs_of(t.seq);
    for (std::size_t ri = 0; ri < runs.size(); ++ri) {
        const Run& run = runs[ri];
        const bool trailing = run.b == last;
        if (!trailing) {
            if (run.op == Op::Bracket)
                for (int j = run.a; j < run.b; ++j)
                    if (lv[static_cast<std::size_t>(j)] < lv[static_cast<std::size_t>(j + 1)])
                        return {false, 1};
            continue;
        }
        if (run.op == Op::Brace) {
            if (lv[static_cast<std::size_t>(n - 2)] > lv[static_cast<std::size_t>(n - 1)])
                return {false, 2};
            continue;
        }
        const int L = run.b - run.a + 1;
        if (L > 2) {
            for (int j = run.a; j < run.b; ++j)
                if (lv[static_cast<std::size_t>(j)] < lv[static_cast<std::size_t>(j + 1)])
                    return {false, 3};
            if (lv[static_cast<std::size_t>(n - 2)] >= lv[static_cast<std::size_t>(n - 1)])
                return {false, 3};
        } else if (L == 1) {
            if (lv[static_cast<std::size_t>(n - 2)] >= lv[static_cast<std::size_t>(n - 1)])
                return {false, 4};
        } else {
            const int u = lv[static_cast<std::size_t>(n - 3)], v = lv[static_cast<std::size_t>(n - 2)],
                      w = lv[static_cast<std::size_t>(n - 1)];
            if (!(v < w && u <= w)) return {false, 4};
        }
    }
    return {};
}

namespace {

// free-Lie degree 3 normalization of [u,[v,w]] onto the condition-(4) basis
void lie3(int u, int v, int w, int sign, std::vector<std::pair<int, std::array<int, 3>>>& out) {
    if (v == w) return;
    if (v > w) {
        lie3(u, w, v, -sign, out);
        return;
    }
    if (u > w) {  // [u,[v,w]] = -[v,[w,u]] + [w,[v,u]]
        out.push_back({-sign, {v, w, u}});
        out.push_back({sign, {w, v, u}});
        return;
    }
    out.push_back({sign, {u, v, w}});
}

// metabelian Lie normal form of a right-normed bracket word, length >= 4
void nf_mlie(std::vector<int> l, int sign, std::vector<std::pair<int, std::vector<int>>>& out) {
    const std::size_t m = l.size();
    if (l[m - 2] == l[m - 1]) return;
    if (l[m - 2] > l[m - 1]) {
        std::swap(l[m - 2], l[m - 1]);
        nf_mlie(std::move(l), -sign, out);
        return;
    }
    if (l[m - 3] < l[m - 2]) {  // Jacobi at the final triple
        std::vector<int> t1 = l, t2 = l;
        t1[m - 3] = l[m - 2];
        t1[m - 2] = l[m - 3];
        t2[m - 3] = l[m - 1];
        t2[m - 2] = l[m - 3];
        t2[m - 1] = l[m - 2];
        nf_mlie(std::move(t1), sign, out);
        nf_mlie(std::move(t2), -sign, out);
        return;
    }
    if (!std::is_sorted(l.begin(), l.end() - 2, std::greater<>())) {
        std::sort(l.begin(), l.end() - 2, std::greater<>());
        nf_mlie(std::move(l), sign, out);
        return;
    }
    out.push_back({sign, std::move(l)});
}

Polynomial normalize(std::vector<Op> seq, std::vector<int> leaves, int sign) {
    const int n = static_cast<int>(leaves.size());
    Polynomial out;
    if (n == 1) {
        out.add(Term::leaf(leaves[0]), sign);
        return out;
    }
    const int last = n - 2;
    const std::vector<Run> runs = runs_of(seq);
    for (const Run& run : runs)
        if (run.b != last && run.op == Op::Bracket)
            std::sort(leaves.begin() + run.a, leaves.begin() + run.b + 1, std::greater<>());
    const Run& trail = runs.back();
    TreeMonomial mono{std::move(seq), {}};
    if (trail.op == Op::Brace) {
        if (leaves[static_cast<std::size_t>(n - 2)] > leaves[static_cast<std::size_t>(n - 1)])
            std::swap(leaves[static_cast<std::size_t>(n - 2)], leaves[static_cast<std::size_t>(n - 1)]);
        mono.leaves = std::move(leaves);
        out.add(mono.to_term(), sign);
        return out;
    }
    const int L = trail.b - trail.a + 1;
    if (L == 1) {
        int& u = leaves[static_cast<std::size_t>(n - 2)];
        int& v = leaves[static_cast<std::size_t>(n - 1)];
        if (u == v) return out;
        if (u > v) {
            std::swap(u, v);
            sign = -sign;
        }
        mono.leaves = std::move(leaves);
        out.add(mono.to_term(), sign);
        return out;
    }
    if (L == 2) {
        std::vector<std::pair<int, std::array<int, 3>>> tails;
        lie3(leaves[static_cast<std::size_t>(n - 3)], leaves[static_cast<std::size_t>(n - 2)],
             leaves[static_cast<std::size_t>(n - 1)], sign, tails);
        for (const auto& [s, triple] : tails) {
            mono.leaves = leaves;
            mono.leaves[static_cast<std::size_t>(n - 3)] = triple[0];
            mono.leaves[static_cast<std::size_t>(n - 2)] = triple[1];
            mono.leaves[static_cast<std::size_t>(n - 1)] = triple[2];
            out.add(mono.to_term(), s);
        }
        return out;
    }
    std::vector<int> segment(leaves.begin() + trail.a, leaves.end());
    std::vector<std::pair<int, std::vector<int>>> normed;
    nf_mlie(std::move(segment), sign, normed);
    for (auto& [s, seg] : normed) {
        mono.leaves = leaves;
        std::copy(seg.begin(), seg.end(), mono.leaves.begin() + trail.a);
        out.add(mono.to_term(), s);
    }
    return out;
}

// right-norm a caterpillar term; empty optional when it is a product of
// two compounds (which the metabelian identities kill)
std::optional<std::tuple<int, std::vector<Op>, std::vector<int>>> right_normed(const Term& t) {
    int sign = 1;
    std::vector<Op> seq;
    std::vector<int> leaves;
    Term cur = t;
    while (!cur.is_leaf()) {
        Term l = cur.left();
        Term r = cur.right();
        if (l.is_leaf()) {
            seq.push_back(cur.op());
            leaves.push_back(l.gen());
            cur = r;
        } else if (r.is_leaf()) {
            if (cur.op() == Op::Bracket) sign = -sign;
            seq.push_back(cur.op());
            leaves.push_back(r.gen());
            cur = l;
        } else {
            return std::nullopt;
        }
    }
    leaves.push_back(cur.gen());
    return std::tuple{sign, std::move(seq), std::move(leaves)};
}

Polynomial nf_term(const Term& t) {
    auto rn = right_normed(t);
    if (!rn) return {};
    auto& [sign, seq, leaves] = *rn;
    return normalize(std::move(seq), std::move(leaves), sign);
}

}  // namespace

Polynomial mla_nf(const Term& t) {
    if (!t.uses_signature(Signature::BracketBrace))
        throw std::invalid_argument("mla_nf expects [,]/{,} terms");
    return nf_term(t);
}

Polynomial mla_nf(const Polynomial& p) {
    Polynomial out;
    for (const auto& [t, c] : p.terms()) {
        if (!t.uses_signature(Signature::BracketBrace))
            throw std::invalid_argument("mla_nf expects [,]/{,} terms");
        out += nf_term(t) * c;
    }
    return out;
}

namespace {

bool pure_bracket(const Term& t) {
    if (t.is_leaf()) return true;
    return t.op() == Op::Bracket && pure_bracket(t.left()) && pure_bracket(t.right());
}

}  // namespace

Polynomial mlie_nf(const Polynomial& p) {
    for (const auto& [t, c] : p.terms())
        if (!pure_bracket(t)) throw std::invalid_argument("mlie_nf expects pure-bracket terms");
    return mla_nf(p);
}

Polynomial mla_mul(const Polynomial& u, const Polynomial& v, Op op) {
    if (op == Op::Star) throw std::invalid_argument("mla_mul expects Bracket or Brace");
    Polynomial out;
    for (const auto& [tu, cu] : u.terms())
        for (const auto& [tv, cv] : v.terms()) {
            if (tu.degree() > 1 && tv.degree() > 1) continue;  // X1 * X2 = 0
            out += nf_term(Term::node(op, tu, tv)) * (cu * cv);
        }
    return out;
}

namespace {

using LeafChoices = std::vector<std::vector<int>>;

void desc_tuples(int m, int k, std::vector<int>& cur, LeafChoices& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    int hi = cur.empty() ? m : cur.back();
    for (int v = hi; v >= 1; --v) {
        cur.push_back(v);
        desc_tuples(m, k - 1, cur, out);
        cur.pop_back();
    }
}

void all_tuples(int m, int k, std::vector<int>& cur, LeafChoices& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    for (int v = 1; v <= m; ++v) {
        cur.push_back(v);
        all_tuples(m, k - 1, cur, out);
        cur.pop_back();
    }
}

// all leaf fillings of one run (trailing runs own the final leaf too)
LeafChoices run_choices(const Run& run, bool trailing, int m) {
    LeafChoices out;
    std::vector<int> cur;
    const int L = run.b - run.a + 1;
    if (!trailing) {
        if (run.op == Op::Bracket)
            desc_tuples(m, L, cur, out);
        else
            all_tuples(m, L, cur, out);
        return out;
    }
    if (run.op == Op::Brace) {
        LeafChoices free_part;
        all_tuples(m, L - 1, cur, free_part);
        for (const auto& f : free_part)
            for (int u = 1; u <= m; ++u)
                for (int v = u; v <= m; ++v) {
                    std::vector<int> lv = f;
                    lv.push_back(u);
                    lv.push_back(v);
                    out.push_back(std::move(lv));
                }
        return out;
    }
    if (L == 1) {
        for (int u = 1; u <= m; ++u)
            for (int v = u + 1; v <= m; ++v) out.push_back({u, v});
        return out;
    }
    if (L == 2) {
        for (int u = 1; u <= m; ++u)
            for (int v = 1; v <= m; ++v)
                for (int w = v + 1; w <= m; ++w)
                    if (u <= w) out.push_back({u, v, w});
        return out;
    }
    LeafChoices prefixes;
    desc_tuples(m, L, cur, prefixes);
    for (const auto& p : prefixes)
        for (int v = p.back() + 1; v <= m; ++v) {
            std::vector<int> lv = p;
            lv.push_back(v);
            out.push_back(std::move(lv));
        }
    return out;
}

}  // namespace

std::vector<TreeMonomial> mla_basis(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("mla_basis: n, m >= 1");
    std::vector<TreeMonomial> out;
    if (n == 1) {
        for (int i = 1; i <= m; ++i) out.push_back({{}, {i}});
        return out;
    }
    const std::uint64_t nseq = 1ULL << (n - 1);
    for (std::uint64_t mask = 0; mask < nseq; ++mask) {
        std::vector<Op> seq;
        for (int k = 0; k < n - 1; ++k)
            seq.push_back(mask >> k & 1 ? Op::Brace : Op::Bracket);
        const std::vector<Run> runs = runs_of(seq);
        std::vector<LeafChoices> per_run;
        for (std::size_t ri = 0; ri < runs.size(); ++ri)
            per_run.push_back(run_choices(runs[ri], ri + 1 == runs.size(), m));
        // cartesian product over runs
        std::vector<std::size_t> idx(per_run.size(), 0);
        while (true) {
            TreeMonomial mono{seq, {}};
            for (std::size_t ri = 0; ri < per_run.size(); ++ri) {
                const auto& lv = per_run[ri][idx[ri]];
                mono.leaves.insert(mono.leaves.end(), lv.begin(), lv.end());
            }
            out.push_back(std::move(mono));
            std::size_t pos = per_run.size();
            while (pos-- > 0) {
                if (++idx[pos] < per_run[pos].size()) break;
                idx[pos] = 0;
                if (pos == 0) goto next_mask;
            }
            if (per_run.empty()) break;
        }
    next_mask:;
    }
    std::sort(out.begin(), out.end(), [](const TreeMonomial& a, const TreeMonomial& b) {
        return term_cmp(a.to_term(), b.to_term()) < 0;
    });
    return out;
}

std::vector<TreeMonomial> mla_basis_multilinear(int n) {
    if (n < 1) throw std::invalid_argument("mla_basis_multilinear: n >= 1");
    std::vector<TreeMonomial> out;
    if (n == 1) {
        out.push_back({{}, {1}});
        return out;
    }
    const std::uint64_t nseq = 1ULL << (n - 1);
    for (std::uint64_t mask = 0; mask < nseq; ++mask) {
        TreeMonomial mono;
        for (int k = 0; k < n - 1; ++k)
            mono.seq.push_back(mask >> k & 1 ? Op::Brace : Op::Bracket);
        mono.leaves.resize(static_cast<std::size_t>(n));
        std::iota(mono.leaves.begin(), mono.leaves.end(), 1);
        do {
            if (check_conditions(mono).ok) out.push_back(mono);
        } while (std::next_permutation(mono.leaves.begin(), mono.leaves.end()));
    }
    std::sort(out.begin(), out.end(), [](const TreeMonomial& a, const TreeMonomial& b) {
        return term_cmp(a.to_term(), b.to_term()) < 0;
    });
    return out;
}

mpz_class mla_dims(int n) {
    if (n < 1) throw std::invalid_argument("mla_dims: n >= 1");
    if (n == 1) return 1;
    mpz_class nfac;
    mpz_fac_ui(nfac.get_mpz_t(), static_cast<unsigned long>(n));
    mpq_class total(0);
    const std::uint64_t nseq = 1ULL << (n - 1);
    for (std::uint64_t mask = 0; mask < nseq; ++mask) {
        std::vector<Op> seq;
        for (int k = 0; k < n - 1; ++k)
            seq.push_back(mask >> k & 1 ? Op::Brace : Op::Bracket);
        const std::vector<Run> runs = runs_of(seq);
        mpq_class f(nfac);
        for (std::size_t ri = 0; ri < runs.size(); ++ri) {
            const Run& run = runs[ri];
            const int L = run.b - run.a + 1;
            const bool trailing = ri + 1 == runs.size();
            mpz_class lfac;
            if (!trailing) {
                if (run.op == Op::Bracket) {
                    mpz_fac_ui(lfac.get_mpz_t(), static_cast<unsigned long>(L));
                    f /= mpq_class(lfac);
                }
            } else if (run.op == Op::Brace) {
                f /= 2;
            } else {
                mpz_fac_ui(lfac.get_mpz_t(), static_cast<unsigned long>(L + 1));
                f *= L;
                f /= mpq_class(lfac);
            }
        }
        total += f;
    }
    total.canonicalize();
    if (total.get_den() != 1) throw std::logic_error("mla_dims: non-integer total");
    return total.get_num();
}

mpz_class mla_dims_enumerated(int n) {
    if (n < 1) throw std::invalid_argument("mla_dims_enumerated: n >= 1");
    if (n == 1) return 1;
    const std::int64_t nseq = 1LL << (n - 1);
    std::vector<long> counts(static_cast<std::size_t>(nseq), 0);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t mask = 0; mask < nseq; ++mask) {
        TreeMonomial mono;
        for (int k = 0; k < n - 1; ++k)
            mono.seq.push_back(mask >> k & 1 ? Op::Brace : Op::Bracket);
        mono.leaves.resize(static_cast<std::size_t>(n));
        std::iota(mono.leaves.begin(), mono.leaves.end(), 1);
        long c = 0;
        do {
            if (check_conditions(mono).ok) ++c;
        } while (std::next_permutation(mono.leaves.begin(), mono.leaves.end()));
        counts[static_cast<std::size_t>(mask)] = c;
    }
    mpz_class total(0);
    for (long c : counts) total += c;
    return total;
}

std::vector<SymGenerator> mla_sym_generators(int n) {
    if (n < 1) throw std::invalid_argument("mla_sym_generators: n >= 1");
    std::vector<SymGenerator> out;
    if (n == 1) {
        out.push_back({TypeSequence{}, "p_(1)", Polynomial::of(Term::leaf(1))});
        return out;
    }
    if (n == 2) {
        Polynomial p2 = Polynomial::of(Term::node(Op::Brace, Term::leaf(1), Term::leaf(2)));
        out.push_back({TypeSequence{{Op::Brace}}, "p_(2)", p2});
        return out;
    }
    std::vector<TreeMonomial> basis = mla_basis_multilinear(n);
    const std::uint64_t nseq = 1ULL << (n - 1);
    for (std::uint64_t mask = 0; mask < nseq; ++mask) {
        std::vector<Op> seq;
        for (int k = 0; k < n - 1; ++k)
            seq.push_back(mask >> k & 1 ? Op::Brace : Op::Bracket);
        Polynomial p;
        for (const TreeMonomial& mono : basis)
            if (mono.seq == seq) p.add(mono.to_term(), 1);
        out.push_back({TypeSequence{seq},
                       "p_(" + seq_str(seq) + "," + std::to_string(n) + ")", std::move(p)});
    }
    return out;
}

}  // namespace malg
