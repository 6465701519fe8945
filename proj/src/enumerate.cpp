#include "malg/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace malg {

std::uint64_t catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan: n >= 0");
    std::uint64_t c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * static_cast<std::uint64_t>(i) + 1) / (i + 2);
    return c;
}

std::uint64_t multilinear_count(Signature sig, int n) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    std::uint64_t count = catalan(n - 1);
    for (int i = 2; i <= n; ++i) count *= static_cast<std::uint64_t>(i);
    for (int i = 1; i < n; ++i) count *= signature_size(sig);
    return count;
}

namespace {

void enumerate_rec(Signature sig, const std::vector<int>& vars, std::vector<Term>& out) {
    if (vars.size() == 1) {
        out.push_back(Term::leaf(vars[0]));
        return;
    }
    const int n = static_cast<int>(vars.size());
    std::vector<int> left, right;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        left.clear();
        right.clear();
        for (int i = 0; i < n; ++i)
            (mask >> i & 1 ? left : right).push_back(vars[static_cast<std::size_t>(i)]);
        std::vector<Term> ls, rs;
        enumerate_rec(sig, left, ls);
        enumerate_rec(sig, right, rs);
        for (const Term& l : ls)
            for (const Term& r : rs) {
                if (sig == Signature::Star) {
                    out.push_back(Term::node(Op::Star, l, r));
                } else {
                    out.push_back(Term::node(Op::Bracket, l, r));
                    out.push_back(Term::node(Op::Brace, l, r));
                }
            }
    }
}

}  // namespace

std::vector<Term> enumerate_over(Signature sig, const std::vector<int>& vars) {
    if (vars.empty()) throw std::invalid_argument("enumerate_over: empty variable set");
    if (vars.size() > 20) throw std::invalid_argument("enumerate_over: too many variables");
    std::vector<Term> out;
    enumerate_rec(sig, vars, out);
    std::sort(out.begin(), out.end(), TermLess{});
    return out;
}

std::vector<Term> enumerate_multilinear(Signature sig, int n) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    std::vector<int> vars(static_cast<std::size_t>(n));
    std::iota(vars.begin(), vars.end(), 1);
    return enumerate_over(sig, vars);
}

}  // namespace malg
