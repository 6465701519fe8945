#pragma once

#include <cstdint>
#include <vector>

#include "malg/term.hpp"

namespace malg {

std::uint64_t catalan(int n);

// |sig|^(n-1) * C_{n-1} * n!
std::uint64_t multilinear_count(Signature sig, int n);

// All terms using each symbol of vars exactly once: every bracketing shape,
// every op assignment from the signature. Sorted by term order.
std::vector<Term> enumerate_over(Signature sig, const std::vector<int>& vars);

// Multilinear terms of degree n over x1..xn.
std::vector<Term> enumerate_multilinear(Signature sig, int n);

}  // namespace malg
