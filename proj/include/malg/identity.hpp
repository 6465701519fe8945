#pragma once

#include <string>
#include <vector>

#include "malg/poly.hpp"

namespace malg {

// A multilinear identity: body is a polynomial over formal slots 1..arity,
// each slot used exactly once per term; the identity asserts body = 0.
struct Identity {
    std::string name;
    int arity = 0;
    Polynomial body;
    Signature signature = Signature::Star;
};

struct IdentitySet {
    std::string name;
    Signature signature = Signature::Star;
    std::vector<Identity> identities;
    int max_arity() const;
};

Identity make_identity(std::string name, const std::string& body_text, Signature sig);

// Built-in varieties (single-product presentation):
//   novikov  : a(bc)-b(ac), (ab)c-a(bc)-(ac)b+a(cb)
//   mnov     : novikov + (ab)(cd)
//   lieadm   : the 12-term commutator-Jacobi identity
//   mlieadm  : lieadm + (ab)(cd)
IdentitySet builtin_variety(const std::string& name);
bool is_builtin_variety(const std::string& name);

// Two-operation presentation of mlieadm: anticommutativity of [,],
// commutativity of {,}, the bracket Jacobi identity, and the six
// vanishing products of two compounds.
IdentitySet polarized_mlieadm();

// One identity per line, slots written a..h; '#' starts a comment line.
// Signature inferred from the operations used.
IdentitySet load_identity_file(const std::string& path);
IdentitySet parse_identity_lines(const std::string& text, const std::string& name);

}  // namespace malg
