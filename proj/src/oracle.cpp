#include "malg/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "malg/enumerate.hpp"

namespace malg {

namespace {
// leaf index standing for the substitution hole in context terms
constexpr int kHole = 1'000'000'000;
}

Rref::Rref(int ncols)
    : ncols_(ncols),
      pivot_row_of_col_(static_cast<std::size_t>(ncols), -1),
      col_occupants_(static_cast<std::size_t>(ncols)) {}

void row_axpy(SparseRow& r, const Rational& a, const SparseRow& s) {
    SparseRow out;
    out.reserve(r.size() + s.size());
    auto it = r.begin();
    auto jt = s.begin();
    while (it != r.end() || jt != s.end()) {
        if (jt == s.end() || (it != r.end() && it->first < jt->first)) {
            out.push_back(*it++);
        } else if (it == r.end() || jt->first < it->first) {
            Rational v = a * jt->second;
            if (v != 0) out.emplace_back(jt->first, std::move(v));
            ++jt;
        } else {
            Rational v = it->second + a * jt->second;
            if (v != 0) out.emplace_back(it->first, std::move(v));
            ++it;
            ++jt;
        }
    }
    r = std::move(out);
}

void Rref::reduce_row(SparseRow& r) const {
    // pivot rows hold no other pivot columns, so one sweep is complete
    SparseRow elim;
    for (const auto& [c, v] : r)
        if (pivot_row_of_col_[static_cast<std::size_t>(c)] >= 0) elim.emplace_back(c, v);
    for (const auto& [c, v] : elim)
        row_axpy(r, -v, rows_[static_cast<std::size_t>(pivot_row_of_col_[static_cast<std::size_t>(c)])]);
}

void Rref::register_cols(int row_id, const SparseRow& r, int skip_col) {
    for (const auto& [c, v] : r)
        if (c != skip_col) col_occupants_[static_cast<std::size_t>(c)].push_back(row_id);
}

bool Rref::insert_reduced(SparseRow r) {
    if (r.empty()) return false;
    const int p = r.front().first;
    if (r.front().second != 1) {
        Rational inv = 1 / r.front().second;
        for (auto& [c, v] : r) v *= inv;
    }
    const int id = static_cast<int>(rows_.size());
    // back-substitute the new pivot out of existing rows
    auto& occ = col_occupants_[static_cast<std::size_t>(p)];
    for (int rid : occ) {
        SparseRow& row = rows_[static_cast<std::size_t>(rid)];
        auto it = std::lower_bound(row.begin(), row.end(), p,
                                   [](const auto& e, int c) { return e.first < c; });
        if (it == row.end() || it->first != p) continue;  // stale occupant entry
        Rational v = it->second;
        row_axpy(row, -v, r);
        register_cols(rid, r, p);
    }
    occ.clear();
    register_cols(id, r, p);
    pivot_row_of_col_[static_cast<std::size_t>(p)] = id;
    pivot_col_of_row_.push_back(p);
    rows_.push_back(std::move(r));
    return true;
}

bool Rref::add_row(SparseRow r) {
    reduce_row(r);
    return insert_reduced(std::move(r));
}

void Rref::add_rows(std::vector<SparseRow> rows, const EliminationOptions& opts) {
    const std::size_t batch = opts.batch > 0 ? static_cast<std::size_t>(opts.batch) : 256;
    for (std::size_t begin = 0; begin < rows.size(); begin += batch) {
        const std::size_t end = std::min(begin + batch, rows.size());
#ifdef _OPENMP
        if (opts.parallel) {
            const int nt = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(nt)
            for (std::size_t i = begin; i < end; ++i) reduce_row(rows[i]);
        }
#endif
        // serial insertion in batch order keeps the result thread-independent
        // (the fully reduced echelon form is unique anyway)
        for (std::size_t i = begin; i < end; ++i) add_row(std::move(rows[i]));
    }
}

std::vector<int> Rref::nonpivot_cols() const {
    std::vector<int> out;
    for (int c = 0; c < ncols_; ++c)
        if (pivot_row_of_col_[static_cast<std::size_t>(c)] < 0) out.push_back(c);
    return out;
}

std::vector<std::vector<Rational>> kernel_of_rows(std::vector<SparseRow> rows, int ncols,
                                                  const EliminationOptions& opts) {
    Rref rr(ncols);
    rr.add_rows(std::move(rows), opts);
    std::vector<std::vector<Rational>> kernel;
    for (int f : rr.nonpivot_cols()) {
        std::vector<Rational> v(static_cast<std::size_t>(ncols), Rational(0));
        v[static_cast<std::size_t>(f)] = 1;
        for (int p = 0; p < ncols; ++p) {
            int rid = rr.pivot_row_of_col(p);
            if (rid < 0) continue;
            const SparseRow& row = rr.row(rid);
            auto it = std::lower_bound(row.begin(), row.end(), f,
                                       [](const auto& e, int c) { return e.first < c; });
            if (it != row.end() && it->first == f) v[static_cast<std::size_t>(p)] = -it->second;
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

ConsequenceBasis::ConsequenceBasis(int degree, Signature sig, const ColumnRanking& ranking,
                                   const std::vector<Polynomial>& rows,
                                   const EliminationOptions& opts)
    : degree_(degree),
      sig_(sig),
      columns_(enumerate_multilinear(sig, degree)),
      rref_(static_cast<int>(columns_.size())) {
    const int ncols = static_cast<int>(columns_.size());
    col_index_.reserve(columns_.size() * 2);
    for (int i = 0; i < ncols; ++i) col_index_.emplace(columns_[static_cast<std::size_t>(i)], i);

    rank_of_col_.assign(static_cast<std::size_t>(ncols), -1);
    col_of_rank_.assign(static_cast<std::size_t>(ncols), -1);
    if (ranking.kind == ColumnRanking::Kind::Default) {
        std::iota(rank_of_col_.begin(), rank_of_col_.end(), 0);
        std::iota(col_of_rank_.begin(), col_of_rank_.end(), 0);
    } else {
        std::vector<char> preferred(static_cast<std::size_t>(ncols), 0);
        for (const Term& t : ranking.preferred) {
            auto it = col_index_.find(t);
            if (it == col_index_.end())
                throw std::invalid_argument("targeted ranking term is not a column");
            preferred[static_cast<std::size_t>(it->second)] = 1;
        }
        int r = 0;
        for (int c = 0; c < ncols; ++c)
            if (!preferred[static_cast<std::size_t>(c)]) {
                rank_of_col_[static_cast<std::size_t>(c)] = r;
                col_of_rank_[static_cast<std::size_t>(r)] = c;
                ++r;
            }
        for (int c = 0; c < ncols; ++c)
            if (preferred[static_cast<std::size_t>(c)]) {
                rank_of_col_[static_cast<std::size_t>(c)] = r;
                col_of_rank_[static_cast<std::size_t>(r)] = c;
                ++r;
            }
    }

    std::vector<SparseRow> sparse_rows;
    sparse_rows.reserve(rows.size());
    for (const Polynomial& p : rows) sparse_rows.push_back(to_row(p));
    rref_.add_rows(std::move(sparse_rows), opts);

    nonpivot_ranks_ = rref_.nonpivot_cols();
    coset_index_of_rank_.assign(static_cast<std::size_t>(ncols), -1);
    for (std::size_t j = 0; j < nonpivot_ranks_.size(); ++j) {
        coset_index_of_rank_[static_cast<std::size_t>(nonpivot_ranks_[j])] = static_cast<int>(j);
        coset_terms_.push_back(
            columns_[static_cast<std::size_t>(col_of_rank_[static_cast<std::size_t>(nonpivot_ranks_[j])])]);
    }
}

SparseRow ConsequenceBasis::to_row(const Polynomial& p) const {
    SparseRow row;
    row.reserve(p.size());
    for (const auto& [t, c] : p.terms()) {
        auto it = col_index_.find(t);
        if (it == col_index_.end())
            throw std::invalid_argument(
                "polynomial is not multilinear of the basis degree: " + format_term(t));
        row.emplace_back(rank_of_col_[static_cast<std::size_t>(it->second)], c);
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

Polynomial ConsequenceBasis::reduce(const Polynomial& p) const {
    SparseRow row = to_row(p);
    rref_.reduce_row(row);
    Polynomial out;
    for (const auto& [r, c] : row)
        out.add(columns_[static_cast<std::size_t>(col_of_rank_[static_cast<std::size_t>(r)])], c);
    return out;
}

std::vector<std::pair<int, Rational>> ConsequenceBasis::reduce_coords(const Polynomial& p) const {
    SparseRow row = to_row(p);
    rref_.reduce_row(row);
    std::vector<std::pair<int, Rational>> out;
    out.reserve(row.size());
    for (auto& [r, c] : row)
        out.emplace_back(coset_index_of_rank_[static_cast<std::size_t>(r)], std::move(c));
    return out;
}

namespace {

Term subst_leaf(const Term& t, int leaf, const Term& replacement) {
    if (t.is_leaf()) return t.gen() == leaf ? replacement : t;
    return Term::node(t.op(), subst_leaf(t.left(), leaf, replacement),
                      subst_leaf(t.right(), leaf, replacement));
}

Term subst_slots(const Term& t, const std::vector<Term>& blocks) {
    if (t.is_leaf()) return blocks[static_cast<std::size_t>(t.gen()) - 1];
    return Term::node(t.op(), subst_slots(t.left(), blocks), subst_slots(t.right(), blocks));
}

// ordered choice of monomials, one per block, odometer order
class MonomialOdometer {
  public:
    MonomialOdometer(const std::vector<const std::vector<Term>*>& lists) : lists_(lists) {
        idx_.assign(lists.size(), 0);
    }
    bool done() const { return done_; }
    void pick(std::vector<Term>& out) const {
        out.clear();
        for (std::size_t i = 0; i < lists_.size(); ++i)
            out.push_back((*lists_[i])[idx_[i]]);
    }
    void next() {
        for (std::size_t i = lists_.size(); i-- > 0;) {
            if (++idx_[i] < lists_[i]->size()) return;
            idx_[i] = 0;
        }
        done_ = true;
    }

  private:
    std::vector<const std::vector<Term>*> lists_;
    std::vector<std::size_t> idx_;
    bool done_ = false;
};

}  // namespace

std::vector<Polynomial> generate_consequences(const IdentitySet& ids, int n) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    const Signature sig = ids.signature;
    std::vector<Polynomial> rows;
    std::map<std::vector<int>, std::vector<Term>> mono_cache;
    auto monomials_over = [&](const std::vector<int>& vars) -> const std::vector<Term>& {
        auto it = mono_cache.find(vars);
        if (it == mono_cache.end()) it = mono_cache.emplace(vars, enumerate_over(sig, vars)).first;
        return it->second;
    };

    for (const Identity& id : ids.identities) {
        const int k = id.arity;
        if (k > n) continue;
        for (int s = 0; s + k <= n; ++s) {
            // context variable subsets, lexicographic
            std::vector<int> subset(static_cast<std::size_t>(s));
            std::vector<char> in_subset(static_cast<std::size_t>(n) + 1, 0);
            auto run_subset = [&]() {
                std::vector<Term> contexts;
                if (s == 0) {
                    contexts.push_back(Term::leaf(kHole));
                } else {
                    std::vector<int> ctx_vars = subset;
                    ctx_vars.push_back(kHole);
                    contexts = enumerate_over(sig, ctx_vars);
                }
                std::vector<int> rest;
                for (int v = 1; v <= n; ++v)
                    if (!in_subset[static_cast<std::size_t>(v)]) rest.push_back(v);
                const int m = static_cast<int>(rest.size());

                // ordered set partitions of rest into k nonempty blocks
                std::vector<int> labels(static_cast<std::size_t>(m), 0);
                while (true) {
                    std::vector<char> used(static_cast<std::size_t>(k), 0);
                    for (int l : labels) used[static_cast<std::size_t>(l)] = 1;
                    bool all = std::all_of(used.begin(), used.end(), [](char u) { return u; });
                    if (all) {
                        std::vector<std::vector<int>> blocks(static_cast<std::size_t>(k));
                        for (int i = 0; i < m; ++i)
                            blocks[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])]
                                .push_back(rest[static_cast<std::size_t>(i)]);
                        std::vector<const std::vector<Term>*> lists;
                        for (const auto& b : blocks) lists.push_back(&monomials_over(b));
                        std::vector<Term> picked;
                        for (MonomialOdometer od(lists); !od.done(); od.next()) {
                            od.pick(picked);
                            for (const Term& ctx : contexts) {
                                Polynomial row;
                                for (const auto& [bt, bc] : id.body.terms())
                                    row.add(subst_leaf(ctx, kHole, subst_slots(bt, picked)), bc);
                                if (!row.is_zero()) rows.push_back(std::move(row));
                            }
                        }
                    }
                    // next mixed-radix label assignment
                    int pos = m - 1;
                    while (pos >= 0 && labels[static_cast<std::size_t>(pos)] == k - 1)
                        labels[static_cast<std::size_t>(pos--)] = 0;
                    if (pos < 0) break;
                    ++labels[static_cast<std::size_t>(pos)];
                }
            };
            // enumerate subsets of {1..n} of size s
            std::vector<int> idx(static_cast<std::size_t>(s));
            std::iota(idx.begin(), idx.end(), 1);
            if (s == 0) {
                run_subset();
            } else {
                while (true) {
                    std::fill(in_subset.begin(), in_subset.end(), 0);
                    for (std::size_t i = 0; i < idx.size(); ++i) {
                        subset[i] = idx[i];
                        in_subset[static_cast<std::size_t>(idx[i])] = 1;
                    }
                    run_subset();
                    int i = s - 1;
                    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - (s - 1 - i)) --i;
                    if (i < 0) break;
                    ++idx[static_cast<std::size_t>(i)];
                    for (int j = i + 1; j < s; ++j)
                        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
                }
            }
        }
    }
    return rows;
}

ConsequenceBasis consequence_basis(const IdentitySet& ids, int n, const ColumnRanking& ranking,
                                   const EliminationOptions& opts) {
    return ConsequenceBasis(n, ids.signature, ranking, generate_consequences(ids, n), opts);
}

int dim_multilinear(const IdentitySet& ids, int n, const EliminationOptions& opts) {
    return consequence_basis(ids, n, ColumnRanking::default_order(), opts).dim();
}

bool is_consequence(const IdentitySet& ids, const Polynomial& p, const EliminationOptions& opts) {
    if (p.is_zero()) return true;
    const int n = p.degree();
    if (!p.is_multilinear(n)) throw std::invalid_argument("is_consequence needs multilinear input");
    return consequence_basis(ids, n, ColumnRanking::default_order(), opts).contains(p);
}

namespace {

Polynomial primitive_scaled(const std::vector<Rational>& coords, const std::vector<Term>& terms) {
    mpz_class lcm_den(1), gcd_num(0);
    for (const Rational& c : coords) {
        if (c == 0) continue;
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    }
    std::vector<mpz_class> ints(coords.size());
    int first_sign = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        Rational v = coords[i] * Rational(lcm_den);
        ints[i] = v.get_num();
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), ints[i].get_mpz_t());
        if (first_sign == 0) first_sign = sgn(ints[i]);
    }
    Polynomial out;
    if (first_sign == 0) return out;
    if (first_sign < 0) gcd_num = -gcd_num;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (ints[i] != 0) out.add(terms[i], Rational(ints[i] / gcd_num));
    return out;
}

}  // namespace

std::vector<Polynomial> invariant_basis(const ConsequenceBasis& basis,
                                        const EliminationOptions& opts) {
    const int n = basis.degree();
    const int d = basis.dim();
    const auto& coset = basis.coset_terms();
    std::vector<Permutation> gens;
    if (n >= 2) {
        gens.push_back(Permutation::transposition(n, 1, 2));
        gens.push_back(Permutation::cycle(n));
    }
    std::vector<SparseRow> constraints;
    for (const Permutation& sigma : gens) {
        // rows of (M_sigma - I) assembled from the columns reduce(sigma . e_j)
        std::vector<SparseRow> rows_by_out(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) {
            Polynomial moved = apply_permutation(Polynomial::of(coset[static_cast<std::size_t>(j)]),
                                                 sigma);
            for (auto& [i, c] : basis.reduce_coords(moved))
                rows_by_out[static_cast<std::size_t>(i)].emplace_back(j, std::move(c));
        }
        for (int i = 0; i < d; ++i) {
            SparseRow& row = rows_by_out[static_cast<std::size_t>(i)];
            row.emplace_back(i, Rational(-1));
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            SparseRow merged;
            for (auto& e : row) {
                if (!merged.empty() && merged.back().first == e.first)
                    merged.back().second += e.second;
                else
                    merged.push_back(std::move(e));
            }
            std::erase_if(merged, [](const auto& e) { return e.second == 0; });
            if (!merged.empty()) constraints.push_back(std::move(merged));
        }
    }
    std::vector<Polynomial> out;
    for (const auto& vec : kernel_of_rows(std::move(constraints), d, opts))
        out.push_back(primitive_scaled(vec, coset));
    return out;
}

std::vector<Polynomial> invariant_basis(const IdentitySet& ids, int n,
                                        const EliminationOptions& opts) {
    return invariant_basis(consequence_basis(ids, n, ColumnRanking::default_order(), opts), opts);
}

}  // namespace malg
