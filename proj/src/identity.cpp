#include "malg/identity.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "malg/parse.hpp"

namespace malg {

int IdentitySet::max_arity() const {
    int k = 0;
    for (const auto& id : identities) k = std::max(k, id.arity);
    return k;
}

namespace {

void validate_identity(const Identity& id) {
    if (id.body.is_zero()) throw std::invalid_argument("identity body must be nonzero");
    for (const auto& [t, c] : id.body.terms()) {
        if (!t.is_multilinear(id.arity))
            throw std::invalid_argument("identity body must be multilinear in slots 1..arity");
        if (!t.uses_signature(id.signature))
            throw std::invalid_argument("identity mixes signatures");
    }
}

Signature infer_signature(const std::string& text) {
    bool star = text.find('*') != std::string::npos;
    bool bb = text.find('[') != std::string::npos || text.find('{') != std::string::npos;
    if (star && bb) throw std::invalid_argument("identity mixes '*' with '[,]'/'{,}'");
    return bb ? Signature::BracketBrace : Signature::Star;
}

}  // namespace

Identity make_identity(std::string name, const std::string& body_text, Signature sig) {
    Identity id;
    id.name = std::move(name);
    id.signature = sig;
    id.body = parse_poly(body_text, sig, GenStyle::SlotLetters);
    id.arity = id.body.degree();
    validate_identity(id);
    return id;
}

IdentitySet builtin_variety(const std::string& name) {
    IdentitySet set;
    set.name = name;
    set.signature = Signature::Star;
    const Signature s = Signature::Star;
    if (name == "novikov" || name == "mnov") {
        set.identities.push_back(make_identity("left-commutativity", "(a*(b*c)) - (b*(a*c))", s));
        set.identities.push_back(
            make_identity("right-symmetry", "((a*b)*c) - (a*(b*c)) - ((a*c)*b) + (a*(c*b))", s));
        if (name == "mnov")
            set.identities.push_back(make_identity("metabelian", "((a*b)*(c*d))", s));
        return set;
    }
    if (name == "lieadm" || name == "mlieadm") {
        set.identities.push_back(make_identity(
            "commutator-jacobi",
            "((a*b)*c) - ((b*a)*c) - (c*(a*b)) + (c*(b*a))"
            " + ((b*c)*a) - ((c*b)*a) - (a*(b*c)) + (a*(c*b))"
            " + ((c*a)*b) - ((a*c)*b) - (b*(c*a)) + (b*(a*c))",
            s));
        if (name == "mlieadm")
            set.identities.push_back(make_identity("metabelian", "((a*b)*(c*d))", s));
        return set;
    }
    throw std::invalid_argument("unknown variety: " + name);
}

bool is_builtin_variety(const std::string& name) {
    return name == "novikov" || name == "mnov" || name == "lieadm" || name == "mlieadm";
}

IdentitySet polarized_mlieadm() {
    IdentitySet set;
    set.name = "mlieadm-polarized";
    set.signature = Signature::BracketBrace;
    const Signature s = Signature::BracketBrace;
    set.identities.push_back(make_identity("anticommutativity", "[a,b] + [b,a]", s));
    set.identities.push_back(make_identity("commutativity", "{a,b} - {b,a}", s));
    set.identities.push_back(
        make_identity("jacobi", "[[a,b],c] + [[b,c],a] + [[c,a],b]", s));
    set.identities.push_back(make_identity("met-bb", "[[a,b],[c,d]]", s));
    set.identities.push_back(make_identity("met-bw", "[[a,b],{c,d}]", s));
    set.identities.push_back(make_identity("met-ww-outer-b", "[{a,b},{c,d}]", s));
    set.identities.push_back(make_identity("met-ww", "{{a,b},{c,d}}", s));
    set.identities.push_back(make_identity("met-wb", "{{a,b},[c,d]}", s));
    set.identities.push_back(make_identity("met-bb-outer-w", "{[a,b],[c,d]}", s));
    return set;
}

IdentitySet parse_identity_lines(const std::string& text, const std::string& name) {
    IdentitySet set;
    set.name = name;
    bool sig_set = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        Signature sig;
        try {
            sig = infer_signature(line);
            if (!sig_set) {
                set.signature = sig;
                sig_set = true;
            } else if (sig != set.signature) {
                throw std::invalid_argument("identities mix signatures");
            }
            set.identities.push_back(
                make_identity(name + ":" + std::to_string(lineno), line, sig));
        } catch (const std::exception& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return set;
}

IdentitySet load_identity_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open identity file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_identity_lines(buf.str(), path);
}

}  // namespace malg
