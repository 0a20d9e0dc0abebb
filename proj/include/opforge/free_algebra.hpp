#pragma once

#include <map>
#include <string>
#include <vector>

#include "opforge/operads.hpp"
#include "opforge/symmetric.hpp"

namespace opforge {

class DegreeOverflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A(V) for a finite alphabet V, materialized up to a degree bound.
class FreeAlgebra {
public:
    FreeAlgebra(std::string operad, std::vector<Label> generators, int degree_bound);

    const OperadSpec& spec() const { return *spec_; }
    const std::vector<Label>& generators() const { return generators_; }
    int degree_bound() const { return bound_; }

    // Generator-decorated basis of the degree-d component, sorted by encoding.
    const std::vector<Element>& graded_basis(int d) const;
    std::vector<Element> basis_up_to(int d) const;
    Vec gen(Label g) const;

    // Throws DegreeOverflow when some term exceeds the bound.
    void check_degree(const Vec& x) const;

    Vec evaluate(const Element& mu, const std::vector<Vec>& args) const;
    TVec coproduct(const std::string& coop, const Vec& x) const;

private:
    const OperadSpec* spec_;
    std::vector<Label> generators_;
    int bound_;
    mutable std::map<int, std::vector<Element>> graded_;
};

// Algebra structure map A(n) (x) A^n -> A. args[i] is substituted for label i+1.
// rename maps the operad's generating symbols to those of another model carrying
// the same structure (hypertrees carry PreLie/NAP products).
Vec evaluate(const std::string& operad, const Element& mu, const std::vector<Vec>& args,
             const std::map<std::string, std::string>& rename = {});

// Coproduct dual to an operation under identity-on-basis duality:
// sum over basis tuples whose image contains x with coefficient C, weighted 1/C.
// The operation is either a generating symbol or a basis element of A(k).
TVec dual_coproduct_symbol(const std::string& operad, const std::string& op_symbol, const Element& x);
TVec dual_coproduct_basis(const std::string& operad, const Element& delta, const Element& x);
TVec dual_coproduct_basis(const std::string& operad, const Element& delta, const Vec& x);

// Duality coproduct for a generating cooperation symbol.
TVec free_coproduct(const std::string& operad, const std::string& coop_symbol, const Vec& x);

// sigma -> <delta^sigma, phi(mu)> for every sigma in S_n, in lexicographic order of sigma.
std::vector<std::pair<Perm, Scalar>> crochet_pairing(const Element& delta, const Element& mu);

// Least n such that all iterated reduced cooperations of arity > n kill x.
int cofiltration_degree(const std::string& operad, const Vec& x);

// Apply a cooperation to one tensor factor, in place of that factor.
TVec apply_at(const TVec& t, std::size_t pos, const std::string& coop);

// Substitute labels in every factor and canonicalize.
Tensor substitute(const Tensor& t, const std::map<Label, Label>& m);

}  // namespace opforge
