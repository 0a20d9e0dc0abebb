#pragma once

#include <string>
#include <vector>

#include "opforge/species.hpp"

namespace opforge {

struct OpSymbol {
    std::string name;
    int arity = 2;
};

// One operad (or non-free algebra model) of the registry. The i-th cooperation is
// the basis dual of the i-th operation.
struct OperadSpec {
    std::string name;
    bool symmetric = true;
    BasisKind kind = BasisKind::Tree;
    std::vector<OpSymbol> operations;
    std::vector<OpSymbol> cooperations;
    bool free_model = true;      // false: a model whose basis is not A(n) itself
    bool has_evaluate = true;    // basis elements expressible through the generating operations
};

const OperadSpec& operad(const std::string& name);
const std::vector<std::string>& operad_names();

class OverlapError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Generating products and coproducts, addressed by symbol.
// Products: prelie nap perm pan comm concat shuffle halfshuffle leibniz bracket
//           mag m<k> star dot prec ht_prelie ht_nap
// Coproducts: co_prelie co_nap co_perm co_pan co_comm deconcat coshuffle cohalfshuffle
//           coleibniz cobracket comag cm<k> costar codot coprec co_ht_prelie co_ht_nap
Vec product(const std::string& sym, const std::vector<Element>& args);
TVec coproduct(const std::string& sym, const Element& x);
int symbol_arity(const std::string& sym);

// Multilinear extensions.
Vec product(const std::string& sym, const std::vector<Vec>& args);
TVec coproduct(const std::string& sym, const Vec& x);
Vec product(const std::string& sym, const Vec& a, const Vec& b);

// Per-species entry points.
Vec tree_product(const std::string& kind, const RootedTree& t, const RootedTree& s);
TVec tree_coproduct(const std::string& kind, const RootedTree& t);
Vec pointed_product(const std::string& kind, const PointedSet& u, const PointedSet& v);
TVec pointed_coproduct(const std::string& kind, const PointedSet& u);
Vec word_product(const std::string& kind, const Word& u, const Word& v);
TVec word_coproduct(const std::string& kind, const Word& w);
Vec planar_product(const std::string& kind, const PlanarTree& u, const PlanarTree& v);
TVec planar_coproduct(const std::string& kind, const PlanarTree& w);
Vec hypertree_product(const std::string& kind, const Hypertree& h, const Hypertree& g);
TVec hypertree_coproduct(const std::string& kind, const Hypertree& h);

// All shuffles of two label sequences.
std::vector<std::vector<Label>> shuffles(const std::vector<Label>& a, const std::vector<Label>& b);

// Tensor helpers.
TVec tensor(const Vec& a, const Vec& b);
Tensor concat(const Tensor& a, const Tensor& b);

}  // namespace opforge
