#include "malg/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "malg/diffcom.hpp"
#include "malg/enumerate.hpp"
#include "malg/mlieadm.hpp"
#include "malg/mnov.hpp"

namespace malg {

bool all_pass(const std::vector<CheckResult>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

CheckResult check(std::string name, bool pass, std::string detail = "") {
    return {std::move(name), pass, std::move(detail)};
}

Term star(const Term& a, const Term& b) { return Term::node(Op::Star, a, b); }

// exhaustive sweep with deterministic first-failure reporting
template <typename F>
CheckResult sweep(const std::string& name, std::size_t count, F&& item_ok) {
    long failures = 0;
    std::size_t first_bad = count;
    std::string first_detail;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : failures)
    for (std::size_t i = 0; i < count; ++i) {
        std::string detail;
        if (!item_ok(i, detail)) {
            ++failures;
#pragma omp critical(sweep_detail)
            if (i < first_bad) {
                first_bad = i;
                first_detail = detail;
            }
        }
    }
    if (failures == 0) return check(name, true, std::to_string(count) + " cases");
    return check(name, false,
                 std::to_string(failures) + "/" + std::to_string(count) +
                     " failures; first: " + first_detail);
}

// substitution pool of Star terms with repeated generators
std::vector<Term> star_pool(int max_degree) {
    std::vector<Term> pool;
    auto x = [](int i) { return Term::leaf(i); };
    pool.push_back(x(1));
    pool.push_back(x(2));
    if (max_degree >= 2) {
        pool.push_back(star(x(1), x(2)));
        pool.push_back(star(x(2), x(1)));
        pool.push_back(star(x(1), x(1)));
    }
    if (max_degree >= 3) {
        pool.push_back(star(star(x(1), x(2)), x(3)));
        pool.push_back(star(x(3), star(x(1), x(2))));
        pool.push_back(star(x(2), star(x(2), x(1))));
    }
    if (max_degree >= 4) pool.push_back(star(star(x(1), x(3)), star(x(2), x(2))));
    return pool;
}

std::vector<Term> polarized_pool(int max_degree) {
    std::vector<Term> pool;
    auto x = [](int i) { return Term::leaf(i); };
    auto br = [](const Term& a, const Term& b) { return Term::node(Op::Bracket, a, b); };
    auto wr = [](const Term& a, const Term& b) { return Term::node(Op::Brace, a, b); };
    pool.push_back(x(1));
    pool.push_back(x(2));
    if (max_degree >= 2) {
        pool.push_back(br(x(1), x(2)));
        pool.push_back(wr(x(2), x(1)));
        pool.push_back(wr(x(1), x(1)));
    }
    if (max_degree >= 3) {
        pool.push_back(br(x(3), wr(x(1), x(2))));
        pool.push_back(wr(br(x(1), x(3)), x(2)));
    }
    return pool;
}

// all (i1..ik) with pool degrees summing to <= total
template <typename F>
void pool_combos(const std::vector<Term>& pool, int arity, int total, F&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(arity), 0);
    while (true) {
        int deg = 0;
        for (int i : idx) deg += pool[static_cast<std::size_t>(i)].degree();
        if (deg <= total) {
            std::vector<Term> args;
            for (int i : idx) args.push_back(pool[static_cast<std::size_t>(i)]);
            fn(args);
        }
        int pos = arity - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 ==
                               static_cast<int>(pool.size()))
            idx[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
    }
}

Term subst(const Term& body, const std::vector<Term>& args) {
    if (body.is_leaf()) return args[static_cast<std::size_t>(body.gen()) - 1];
    return Term::node(body.op(), subst(body.left(), args), subst(body.right(), args));
}

Polynomial subst(const Polynomial& body, const std::vector<Term>& args) {
    Polynomial out;
    for (const auto& [t, c] : body.terms()) out.add(subst(t, args), c);
    return out;
}

// rank of coordinate rows over d columns
int coord_rank(const std::vector<std::vector<std::pair<int, Rational>>>& rows, int d) {
    Rref rr(d);
    for (const auto& r : rows) {
        SparseRow row(r.begin(), r.end());
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        rr.add_row(std::move(row));
    }
    return rr.rank();
}

std::vector<Permutation> sn_generators(int n) {
    std::vector<Permutation> gens;
    if (n >= 2) {
        gens.push_back(Permutation::transposition(n, 1, 2));
        gens.push_back(Permutation::cycle(n));
    }
    return gens;
}

}  // namespace

std::vector<CheckResult> mnov_identities_suite() {
    std::vector<CheckResult> out;
    // the seven degree-5 vanishing monomials, through both models
    const std::vector<Term> lemma = nov_lemma_terms();
    bool nf_zero = true, diff_zero = true;
    std::string bad;
    for (const Term& t : lemma) {
        if (!nov_nf(t).is_zero()) {
            nf_zero = false;
            bad = format_term(t);
        }
        if (!metabelian_reduce(embed(t)).is_zero()) {
            diff_zero = false;
            bad = format_term(t);
        }
    }
    out.push_back(check("lemma: seven degree-5 monomials vanish under nov_nf", nf_zero, bad));
    out.push_back(
        check("lemma: seven degree-5 monomials vanish in the differential model", diff_zero, bad));

    const IdentitySet mnov = builtin_variety("mnov");
    const std::vector<Term> pool = star_pool(4);
    for (const Identity& id : mnov.identities) {
        long cases = 0, bad_cases = 0;
        std::string first;
        pool_combos(pool, id.arity, 6, [&](const std::vector<Term>& args) {
            ++cases;
            Polynomial inst = subst(id.body, args);
            if (!nov_nf(inst).is_zero()) {
                ++bad_cases;
                if (first.empty()) first = format_poly(inst);
            }
        });
        out.push_back(check("identity vanishes under nov_nf: " + id.name, bad_cases == 0,
                            bad_cases == 0 ? std::to_string(cases) + " instances" : first));
    }
    return out;
}

std::vector<CheckResult> mnov_basis_suite(int degree, const EliminationOptions& opts) {
    std::vector<CheckResult> out;
    const IdentitySet mnov = builtin_variety("mnov");
    const auto basis = nov_basis_multilinear(degree);
    std::vector<Term> preferred;
    for (const auto& m : basis) preferred.push_back(m.to_term());

    ConsequenceBasis cb =
        consequence_basis(mnov, degree, ColumnRanking::targeted(preferred), opts);
    out.push_back(check("mnov: |multilinear basis| = oracle dim at n=" + std::to_string(degree),
                        static_cast<int>(basis.size()) == cb.dim(),
                        std::to_string(basis.size()) + " vs " + std::to_string(cb.dim())));

    const std::vector<Term> all = enumerate_multilinear(Signature::Star, degree);
    out.push_back(sweep("mnov: nov_nf = oracle reduce (targeted), exhaustive degree " +
                            std::to_string(degree),
                        all.size(), [&](std::size_t i, std::string& detail) {
                            const Term& t = all[i];
                            Polynomial nf = nov_nf(t).to_polynomial();
                            Polynomial red = cb.reduce(Polynomial::of(t));
                            if (nf == red) return true;
                            detail = format_term(t) + ": nf=" + format_poly(nf) +
                                     " reduce=" + format_poly(red);
                            return false;
                        }));
    out.push_back(sweep("mnov: nf(t) - t is a consequence, exhaustive degree " +
                            std::to_string(degree),
                        all.size(), [&](std::size_t i, std::string& detail) {
                            const Term& t = all[i];
                            Polynomial diff = nov_nf(t).to_polynomial() - Polynomial::of(t);
                            if (cb.reduce(diff).is_zero()) return true;
                            detail = format_term(t);
                            return false;
                        }));
    return out;
}

std::vector<CheckResult> mnov_table_suite(int degree) {
    std::vector<CheckResult> out;
    for (int du = 1; du < degree; ++du) {
        const int dv = degree - du;
        const std::vector<Term> us = enumerate_multilinear(Signature::Star, du);
        std::vector<Term> vs;
        // relabel the second factor's generators to du+1..degree
        for (const Term& v : enumerate_multilinear(Signature::Star, dv)) {
            std::vector<int> full(static_cast<std::size_t>(degree));
            for (int i = 1; i <= dv; ++i) full[static_cast<std::size_t>(i - 1)] = du + i;
            for (int i = dv + 1; i <= degree; ++i) full[static_cast<std::size_t>(i - 1)] = i - dv;
            vs.push_back(apply_permutation(v, Permutation(full)));
        }
        const std::size_t total = us.size() * vs.size();
        out.push_back(sweep("mnov: table = nf of raw product, degrees " + std::to_string(du) +
                                "+" + std::to_string(dv),
                            total, [&](std::size_t i, std::string& detail) {
                                const Term& u = us[i / vs.size()];
                                const Term& v = vs[i % vs.size()];
                                NovPolynomial lhs = nov_mul(nov_nf(u), nov_nf(v));
                                NovPolynomial rhs = nov_nf(star(u, v));
                                if (lhs == rhs) return true;
                                detail = format_term(u) + " * " + format_term(v);
                                return false;
                            }));
    }
    return out;
}

std::vector<CheckResult> mnov_sym_suite(int degree, bool with_oracle,
                                        const EliminationOptions& opts) {
    std::vector<CheckResult> out;
    const std::vector<Polynomial> gens = nov_sym_generators(degree);
    const std::vector<std::string> labels = nov_sym_labels(degree);
    const std::vector<Permutation> sigmas = sn_generators(degree);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        NovPolynomial nf = nov_nf(gens[g]);
        bool ok = !nf.is_zero();
        std::string why = ok ? "" : "normal form is zero";
        for (const Permutation& s : sigmas) {
            if (!(nov_nf(apply_permutation(gens[g], s)) == nf)) {
                ok = false;
                why = "not fixed by a generator of S_n";
            }
        }
        out.push_back(check("mnov: " + labels[g] + " symmetric and nonzero at n=" +
                                std::to_string(degree),
                            ok, why));
    }
    if (!with_oracle) return out;
    const IdentitySet mnov = builtin_variety("mnov");
    ConsequenceBasis cb = consequence_basis(mnov, degree, ColumnRanking::default_order(), opts);
    std::vector<Polynomial> inv = invariant_basis(cb, opts);
    std::vector<std::vector<std::pair<int, Rational>>> inv_rows, gen_rows, both;
    for (const Polynomial& v : inv) inv_rows.push_back(cb.reduce_coords(v));
    for (const Polynomial& g : gens) gen_rows.push_back(cb.reduce_coords(g));
    both = inv_rows;
    both.insert(both.end(), gen_rows.begin(), gen_rows.end());
    const int d = cb.dim();
    const int rank_inv = coord_rank(inv_rows, d);
    const int rank_gen = coord_rank(gen_rows, d);
    const int rank_both = coord_rank(both, d);
    out.push_back(check("mnov: generators span the invariant subspace at n=" +
                            std::to_string(degree),
                        rank_gen == rank_inv && rank_both == rank_inv,
                        "dim inv=" + std::to_string(inv.size()) + " rank gen=" +
                            std::to_string(rank_gen) + " rank joint=" + std::to_string(rank_both)));
    return out;
}

std::vector<CheckResult> diffcom_suite(int degree, const EliminationOptions& opts) {
    std::vector<CheckResult> out;
    const int nd = nov_dims(degree);
    const int dd = diff_dims(degree);
    const int od = dim_multilinear(builtin_variety("mnov"), degree, opts);
    out.push_back(check("triple agreement nov_dims = diff_dims = oracle at n=" +
                            std::to_string(degree),
                        nd == dd && dd == od,
                        std::to_string(nd) + " / " + std::to_string(dd) + " / " +
                            std::to_string(od)));

    const std::vector<Term> all = enumerate_multilinear(Signature::Star, degree);
    out.push_back(sweep("embed is weight-homogeneous of weight -1 at degree " +
                            std::to_string(degree),
                        all.size(), [&](std::size_t i, std::string& detail) {
                            for (const auto& [m, c] : embed(all[i]).terms())
                                if (m.weight() != -1) {
                                    detail = format_term(all[i]) + " -> " + m.str();
                                    return false;
                                }
                            return true;
                        }));
    out.push_back(sweep("kernel agreement: nov_nf(t)=0 implies reduced embedding 0, degree " +
                            std::to_string(degree),
                        all.size(), [&](std::size_t i, std::string& detail) {
                            const Term& t = all[i];
                            if (!nov_nf(t).is_zero()) return true;
                            if (metabelian_reduce(embed(t)).is_zero()) return true;
                            detail = format_term(t);
                            return false;
                        }));

    // reduced embeddings of the basis monomials stay independent
    const auto basis = nov_basis_multilinear(degree);
    std::map<DiffMonomial, int> col;
    std::vector<std::vector<std::pair<int, Rational>>> rows;
    for (const auto& mono : basis) {
        DiffPolynomial r = metabelian_reduce(embed(mono.to_term()));
        std::vector<std::pair<int, Rational>> row;
        for (const auto& [m, c] : r.terms()) {
            auto [it, _] = col.emplace(m, static_cast<int>(col.size()));
            row.emplace_back(it->second, c);
        }
        rows.push_back(std::move(row));
    }
    const int rank = coord_rank(rows, static_cast<int>(col.size()));
    out.push_back(check("reduced embeddings of the basis are independent at degree " +
                            std::to_string(degree),
                        rank == static_cast<int>(basis.size()),
                        "rank " + std::to_string(rank) + " of " + std::to_string(basis.size())));
    return out;
}

std::vector<CheckResult> mla_identities_suite() {
    std::vector<CheckResult> out;
    const std::vector<Term> pool = polarized_pool(3);
    const IdentitySet pol = polarized_mlieadm();
    for (const Identity& id : pol.identities) {
        long cases = 0, bad_cases = 0;
        std::string first;
        pool_combos(pool, id.arity, 6, [&](const std::vector<Term>& args) {
            ++cases;
            Polynomial inst = subst(id.body, args);
            if (!mla_nf(inst).is_zero()) {
                ++bad_cases;
                if (first.empty()) first = format_poly(inst);
            }
        });
        out.push_back(check("identity vanishes under mla_nf: " + id.name, bad_cases == 0,
                            bad_cases == 0 ? std::to_string(cases) + " instances" : first));
    }
    // the two derived swap identities
    {
        auto x = [](int i) { return Term::leaf(i); };
        auto br = [](const Term& a, const Term& b) { return Term::node(Op::Bracket, a, b); };
        auto wr = [](const Term& a, const Term& b) { return Term::node(Op::Brace, a, b); };
        Polynomial lhs11 = Polynomial::of(br(br(br(x(1), x(2)), x(3)), x(4))) -
                           Polynomial::of(br(br(br(x(1), x(2)), x(4)), x(3)));
        Polynomial lhs12 = Polynomial::of(br(br(wr(x(1), x(2)), x(3)), x(4))) -
                           Polynomial::of(br(br(wr(x(1), x(2)), x(4)), x(3)));
        out.push_back(check("derived prefix swap [[x,y],c],d form (bracket core)",
                            mla_nf(lhs11).is_zero(), format_poly(mla_nf(lhs11))));
        out.push_back(check("derived prefix swap [[x,y],c],d form (brace core)",
                            mla_nf(lhs12).is_zero(), format_poly(mla_nf(lhs12))));
    }
    return out;
}

std::vector<CheckResult> mla_basis_suite(int degree, const EliminationOptions& opts) {
    std::vector<CheckResult> out;
    const auto basis = mla_basis_multilinear(degree);
    const mpz_class formula = mla_dims(degree);
    const mpz_class enumerated = mla_dims_enumerated(degree);
    out.push_back(check("mla: counting formula = enumeration at n=" + std::to_string(degree),
                        formula == enumerated,
                        formula.get_str() + " vs " + enumerated.get_str()));
    out.push_back(check("mla: |multilinear basis| matches count at n=" + std::to_string(degree),
                        mpz_class(static_cast<long>(basis.size())) == formula,
                        std::to_string(basis.size()) + " vs " + formula.get_str()));

    const IdentitySet dep = builtin_variety("mlieadm");
    ConsequenceBasis dep_cb = consequence_basis(dep, degree, ColumnRanking::default_order(), opts);
    out.push_back(check("mla: basis count = single-product oracle dim at n=" +
                            std::to_string(degree),
                        mpz_class(dep_cb.dim()) == formula,
                        std::to_string(dep_cb.dim()) + " vs " + formula.get_str()));

    // depolarized basis images stay independent in the oracle quotient
    std::vector<std::vector<std::pair<int, Rational>>> rows;
    for (const auto& mono : basis) rows.push_back(dep_cb.reduce_coords(depolarize(mono.to_term())));
    const int rank = coord_rank(rows, dep_cb.dim());
    out.push_back(check("mla: depolarized basis independent in oracle quotient at n=" +
                            std::to_string(degree),
                        rank == static_cast<int>(basis.size()),
                        "rank " + std::to_string(rank) + " of " + std::to_string(basis.size())));

    // polarized-signature oracle agrees with the normal form on every term
    const IdentitySet pol = polarized_mlieadm();
    std::vector<Term> preferred;
    for (const auto& m : basis) preferred.push_back(m.to_term());
    ConsequenceBasis pol_cb =
        ConsequenceBasis(degree, Signature::BracketBrace, ColumnRanking::targeted(preferred),
                         generate_consequences(pol, degree), opts);
    out.push_back(check("mla: two-op oracle dim matches at n=" + std::to_string(degree),
                        mpz_class(pol_cb.dim()) == formula,
                        std::to_string(pol_cb.dim()) + " vs " + formula.get_str()));
    const std::vector<Term> all = enumerate_multilinear(Signature::BracketBrace, degree);
    out.push_back(sweep("mla: mla_nf = oracle reduce (targeted), exhaustive degree " +
                            std::to_string(degree),
                        all.size(), [&](std::size_t i, std::string& detail) {
                            const Term& t = all[i];
                            Polynomial nf = mla_nf(t);
                            Polynomial red = pol_cb.reduce(Polynomial::of(t));
                            if (nf == red) return true;
                            detail = format_term(t) + ": nf=" + format_poly(nf) +
                                     " reduce=" + format_poly(red);
                            return false;
                        }));
    return out;
}

std::vector<CheckResult> mla_table_suite(int degree) {
    std::vector<CheckResult> out;
    for (int du = 1; du < degree; ++du) {
        const int dv = degree - du;
        const std::vector<Term> us = enumerate_multilinear(Signature::BracketBrace, du);
        std::vector<Term> vs;
        for (const Term& v : enumerate_multilinear(Signature::BracketBrace, dv)) {
            std::vector<int> full(static_cast<std::size_t>(degree));
            for (int i = 1; i <= dv; ++i) full[static_cast<std::size_t>(i - 1)] = du + i;
            for (int i = dv + 1; i <= degree; ++i) full[static_cast<std::size_t>(i - 1)] = i - dv;
            vs.push_back(apply_permutation(v, Permutation(full)));
        }
        for (Op op : {Op::Bracket, Op::Brace}) {
            const std::string opname = op == Op::Bracket ? "bracket" : "brace";
            const std::size_t total = us.size() * vs.size();
            out.push_back(sweep("mla: table = nf of raw " + opname + " product, degrees " +
                                    std::to_string(du) + "+" + std::to_string(dv),
                                total, [&](std::size_t i, std::string& detail) {
                                    const Term& u = us[i / vs.size()];
                                    const Term& v = vs[i % vs.size()];
                                    Polynomial lhs = mla_mul(mla_nf(u), mla_nf(v), op);
                                    Polynomial rhs = mla_nf(Term::node(op, u, v));
                                    if (lhs == rhs) return true;
                                    detail = format_term(Term::node(op, u, v));
                                    return false;
                                }));
        }
    }
    return out;
}

std::vector<CheckResult> mla_sym_suite(int degree, bool with_oracle,
                                       const EliminationOptions& opts) {
    std::vector<CheckResult> out;
    const std::vector<SymGenerator> gens = mla_sym_generators(degree);
    const std::vector<Permutation> sigmas = sn_generators(degree);
    for (const SymGenerator& g : gens) {
        Polynomial nf = mla_nf(g.poly);
        bool ok = !nf.is_zero();
        std::string why = ok ? "" : "normal form is zero";
        for (const Permutation& s : sigmas)
            if (mla_nf(apply_permutation(g.poly, s)) != nf) {
                ok = false;
                why = "not fixed by a generator of S_n";
            }
        out.push_back(check("mla: " + g.label + " symmetric and nonzero", ok, why));
    }
    if (degree < 3) return out;

    // per-type-sequence S_n action: stability and invariant dimension
    const auto basis = mla_basis_multilinear(degree);
    std::map<std::vector<Op>, std::vector<TreeMonomial>> components;
    for (const auto& m : basis) components[m.seq].push_back(m);
    int total_inv = 0;
    bool stable = true, all_one = true;
    std::string stable_bad;
    std::ostringstream dims_detail;
    for (const SymGenerator& g : gens) {
        const auto& comp = components[g.seq.ops];
        const int d = static_cast<int>(comp.size());
        std::map<Term, int, TermLess> index;
        for (int j = 0; j < d; ++j) index.emplace(comp[static_cast<std::size_t>(j)].to_term(), j);
        std::vector<SparseRow> constraints;
        bool comp_stable = true;
        for (const Permutation& s : sigmas) {
            std::vector<std::vector<std::pair<int, Rational>>> rows_by_out(
                static_cast<std::size_t>(d));
            for (int j = 0; j < d && comp_stable; ++j) {
                Polynomial img =
                    mla_nf(apply_permutation(comp[static_cast<std::size_t>(j)].to_term(), s));
                for (const auto& [t, c] : img.terms()) {
                    auto it = index.find(t);
                    if (it == index.end()) {
                        comp_stable = false;
                        stable_bad = g.label;
                        break;
                    }
                    rows_by_out[static_cast<std::size_t>(it->second)].emplace_back(j, c);
                }
            }
            if (!comp_stable) break;
            for (int i = 0; i < d; ++i) {
                auto row = rows_by_out[static_cast<std::size_t>(i)];
                row.emplace_back(i, Rational(-1));
                std::sort(row.begin(), row.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                SparseRow merged;
                for (auto& e : row) {
                    if (!merged.empty() && merged.back().first == e.first)
                        merged.back().second += e.second;
                    else
                        merged.push_back(e);
                }
                std::erase_if(merged, [](const auto& e) { return e.second == 0; });
                if (!merged.empty()) constraints.push_back(std::move(merged));
            }
        }
        if (!comp_stable) {
            stable = false;
            continue;
        }
        const auto kernel = kernel_of_rows(std::move(constraints), d, opts);
        const int dim = static_cast<int>(kernel.size());
        total_inv += dim;
        if (dim != 1) all_one = false;
        dims_detail << g.label << ":" << dim << " ";
    }
    out.push_back(check("mla: S_n action preserves each type-sequence component (n=" +
                            std::to_string(degree) + ")",
                        stable, stable_bad));
    out.push_back(check("mla: every component invariant subspace is 1-dimensional (n=" +
                            std::to_string(degree) + ")",
                        all_one, dims_detail.str()));
    const long expected_total = 1L << (degree - 1);
    out.push_back(check("mla: total invariant dimension = 2^(n-1) (n=" + std::to_string(degree) +
                            ")",
                        total_inv == expected_total,
                        "actual " + std::to_string(total_inv) + ", 2^(n-1)=" +
                            std::to_string(expected_total)));

    if (with_oracle) {
        const IdentitySet dep = builtin_variety("mlieadm");
        ConsequenceBasis cb = consequence_basis(dep, degree, ColumnRanking::default_order(), opts);
        const int oracle_inv = static_cast<int>(invariant_basis(cb, opts).size());
        out.push_back(check("mla: component total matches oracle invariant dimension (n=" +
                                std::to_string(degree) + ")",
                            oracle_inv == total_inv,
                            "oracle " + std::to_string(oracle_inv) + ", components " +
                                std::to_string(total_inv)));
        bool nonzero = true;
        std::string bad;
        for (const SymGenerator& g : gens)
            if (cb.reduce(depolarize(g.poly)).is_zero()) {
                nonzero = false;
                bad = g.label;
            }
        out.push_back(check("mla: generators nonzero in the oracle quotient (n=" +
                                std::to_string(degree) + ")",
                            nonzero, bad));
    }
    return out;
}

std::vector<CheckResult> verify_suite(const std::string& variety, int degree,
                                      const std::string& suite, const EliminationOptions& opts) {
    std::vector<CheckResult> out;
    auto append = [&out](std::vector<CheckResult> v) {
        for (auto& c : v) out.push_back(std::move(c));
    };
    const bool idents = suite == "identities" || suite == "all";
    const bool basis = suite == "basis" || suite == "all";
    const bool table = suite == "table" || suite == "all";
    const bool sym = suite == "sym" || suite == "all";
    if (variety == "mnov") {
        if (idents) append(mnov_identities_suite());
        if (basis) append(mnov_basis_suite(degree, opts));
        if (table && degree >= 2) append(mnov_table_suite(degree));
        if (sym) append(mnov_sym_suite(degree, true, opts));
        if (suite == "all") append(diffcom_suite(degree, opts));
        return out;
    }
    if (variety == "mlieadm") {
        if (idents) append(mla_identities_suite());
        if (basis) append(mla_basis_suite(degree, opts));
        if (table && degree >= 2) append(mla_table_suite(degree));
        if (sym) append(mla_sym_suite(degree, true, opts));
        return out;
    }
    if (variety == "novikov" || variety == "lieadm") {
        // oracle-only varieties: monotonicity against their metabelian quotients
        const IdentitySet big = builtin_variety(variety);
        const IdentitySet small = builtin_variety(variety == "novikov" ? "mnov" : "mlieadm");
        const int dim_big = dim_multilinear(big, degree, opts);
        const int dim_small = dim_multilinear(small, degree, opts);
        out.push_back(check("adding the metabelian identity never raises the dimension",
                            dim_small <= dim_big,
                            std::to_string(dim_small) + " <= " + std::to_string(dim_big)));
        return out;
    }
    throw std::invalid_argument("verify_suite: unknown variety " + variety);
}

}  // namespace malg
