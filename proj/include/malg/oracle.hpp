#pragma once

#include <unordered_map>
#include <vector>

#include "malg/identity.hpp"
#include "malg/poly.hpp"

namespace malg {

// Column order used by row reduction. Default is plain term order;
// Targeted ranks every non-preferred column before the preferred ones, so
// canonical forms land on the preferred monomials whenever they are
// independent modulo the row space.
struct ColumnRanking {
    enum class Kind { Default, Targeted };
    Kind kind = Kind::Default;
    std::vector<Term> preferred;

    static ColumnRanking default_order() { return {}; }
    static ColumnRanking targeted(std::vector<Term> preferred_terms) {
        return {Kind::Targeted, std::move(preferred_terms)};
    }
};

struct EliminationOptions {
    bool parallel = true;  // no effect on results, only on wall time
    int batch = 256;
    int threads = 0;  // 0 = library default
};

// Sparse row over column positions, sorted by position, no zero entries.
using SparseRow = std::vector<std::pair<int, Rational>>;

// Incremental reduced row echelon form over the rationals.
// Invariant: every stored row has coefficient 1 on its pivot column and no
// entry on any other pivot column, so reducing a row is a single sweep.
class Rref {
  public:
    explicit Rref(int ncols);

    void reduce_row(SparseRow& r) const;
    bool insert_reduced(SparseRow r);
    bool add_row(SparseRow r);
    void add_rows(std::vector<SparseRow> rows, const EliminationOptions& opts = {});

    int cols() const { return ncols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    int pivot_row_of_col(int c) const { return pivot_row_of_col_[static_cast<std::size_t>(c)]; }
    const SparseRow& row(int id) const { return rows_[static_cast<std::size_t>(id)]; }
    std::vector<int> nonpivot_cols() const;

  private:
    void register_cols(int row_id, const SparseRow& r, int skip_col);

    int ncols_;
    std::vector<SparseRow> rows_;
    std::vector<int> pivot_row_of_col_;
    std::vector<int> pivot_col_of_row_;
    std::vector<std::vector<int>> col_occupants_;
};

// r += a * s (merge of sorted sparse rows, zeros dropped)
void row_axpy(SparseRow& r, const Rational& a, const SparseRow& s);

// Deterministic kernel basis of the stacked constraint rows over ncols
// unknowns: one vector per free column, free columns ascending.
std::vector<std::vector<Rational>> kernel_of_rows(std::vector<SparseRow> rows, int ncols,
                                                  const EliminationOptions& opts = {});

// Row-reduced span of the degree-n multilinear consequence space of an
// identity set, with canonical-reduction support.
class ConsequenceBasis {
  public:
    ConsequenceBasis(int degree, Signature sig, const ColumnRanking& ranking,
                     const std::vector<Polynomial>& rows, const EliminationOptions& opts = {});

    int degree() const { return degree_; }
    Signature signature() const { return sig_; }
    const std::vector<Term>& columns() const { return columns_; }
    int rank() const { return rref_.rank(); }
    int dim() const { return static_cast<int>(columns_.size()) - rref_.rank(); }

    // canonical representative of p modulo the row space
    Polynomial reduce(const Polynomial& p) const;
    bool contains(const Polynomial& p) const { return reduce(p).is_zero(); }

    // coset coordinates: terms spanning the quotient (ranking order) and the
    // coordinates of reduce(p) with respect to them
    const std::vector<Term>& coset_terms() const { return coset_terms_; }
    std::vector<std::pair<int, Rational>> reduce_coords(const Polynomial& p) const;

  private:
    SparseRow to_row(const Polynomial& p) const;

    int degree_;
    Signature sig_;
    std::vector<Term> columns_;
    std::unordered_map<Term, int, TermHash, TermEq> col_index_;
    std::vector<int> rank_of_col_, col_of_rank_;
    Rref rref_;
    std::vector<int> nonpivot_ranks_;
    std::vector<int> coset_index_of_rank_;
    std::vector<Term> coset_terms_;
};

// Spanning set of the degree-n multilinear consequence space: every identity
// instance I(N_1..N_k) on monomial blocks, embedded in every one-hole
// multilinear context. Duplicates permitted. Identities of arity > n
// contribute nothing.
std::vector<Polynomial> generate_consequences(const IdentitySet& ids, int n);

ConsequenceBasis consequence_basis(const IdentitySet& ids, int n,
                                   const ColumnRanking& ranking = ColumnRanking::default_order(),
                                   const EliminationOptions& opts = {});

int dim_multilinear(const IdentitySet& ids, int n, const EliminationOptions& opts = {});

// p must be multilinear homogeneous; true iff p reduces to zero
bool is_consequence(const IdentitySet& ids, const Polynomial& p,
                    const EliminationOptions& opts = {});

// Basis of the S_n-fixed subspace of the multilinear quotient: joint kernel
// of (transposition(1,2) - id) and (n-cycle - id) acting on coset
// coordinates. Vectors are reduced polynomials, primitive integer scaled.
std::vector<Polynomial> invariant_basis(const ConsequenceBasis& basis,
                                        const EliminationOptions& opts = {});
std::vector<Polynomial> invariant_basis(const IdentitySet& ids, int n,
                                        const EliminationOptions& opts = {});

}  // namespace malg
