#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opforge/free_algebra.hpp"

namespace opforge {

// PrimitiveArgs: a confluence law, stated for operations evaluated on primitives.
// AllArgs: a mixed distributive law, valid for arbitrary arguments.
enum class LawScope { PrimitiveArgs, AllArgs };
const char* scope_name(LawScope s);

// Where a law is checked: the basis the arguments are drawn from, the operad whose
// duality coproduct is the oracle, and how law symbols map to model symbols.
struct LawModel {
    std::string basis;
    std::string coalgebra;
    std::map<std::string, std::string> rename;
    int max_bound = 6;
};

// Model operations addressed by the law's own symbols.
class LawContext {
public:
    explicit LawContext(const LawModel& model) : model_(&model) {}
    const LawModel& model() const { return *model_; }
    std::string sym(const std::string& s) const;
    Vec mul(const std::string& op, const Vec& a, const Vec& b) const;
    Vec mul(const std::string& op, const std::vector<Vec>& args) const;
    TVec co(const std::string& coop, const Vec& x) const;
    // Terms of x killed by every cooperation of the model.
    Vec primitive_part(const Vec& x) const;

private:
    const LawModel* model_;
};

using LawRhs = std::function<TVec(const LawContext&, const std::string& coop, const std::string& op,
                                  const std::vector<Vec>& args)>;

struct LawEntry {
    std::string id;
    std::string algebra;
    std::string coalgebra;
    LawScope scope = LawScope::AllArgs;
    std::vector<OpSymbol> operations;
    std::vector<OpSymbol> cooperations;
    std::vector<LawModel> models;
    LawRhs rhs;
    std::string note;
};

// The sixteen catalogued laws, in catalogue order.
const std::vector<LawEntry>& law_catalogue();
// Catalogue entries plus variants: "copan-perm-literal" (the printed last term) and
// "nap-faulty" (T (x) S dropped, for exercising the checker).
const LawEntry& find_law(const std::string& id);
std::vector<std::string> law_ids(bool with_variants = false);

// Right-hand side in the given model. Throws on unknown symbols, on an arity
// mismatch, and for primitive-only entries on arguments that are not of one degree.
TVec law_rhs(const LawEntry& entry, std::size_t model, const std::string& coop, const std::string& op,
             const std::vector<Vec>& args);

struct LawCounterexample {
    std::string model;
    std::string coop;
    std::string op;
    std::vector<std::string> args;
    std::string lhs;
    std::string rhs;
    std::string diff;
};

struct LawReport {
    std::string id;
    int bound = 0;
    bool pass = true;
    long checked = 0;
    std::optional<LawCounterexample> counterexample;
};

struct CheckOptions {
    unsigned jobs = 1;
    // Also run all-args entries on elements decorated by two generators (degree <= 5).
    bool decorated = true;
};

// Jobs default: OPERAD_FORGE_JOBS when set and positive, else 1.
unsigned default_jobs();

// Compares Δ_δ(μ(args)) computed by duality in the free model with the law's right
// side, for every generating δ, μ and basis argument tuple of total degree <= bound.
// The first counterexample in enumeration order is reported.
LawReport check_law(const LawEntry& entry, int max_total_arity, const CheckOptions& options = {});

// Word operators for the Leibniz laws, built from deconcatenation and the Leibniz product.
// RV(x) = δ_{x∈F1} x + δ_{x1∈F1} [RV(x2), x1]
Vec rv_operator(const Vec& x);
// [ε, y1..yq] = Σ_{I⊔J={2..q}} (-1)^{|J|} RV(y_J) · y1 y_I
Vec bracket_unit(const Vec& x);

struct BasisReport {
    std::string operad;
    int max_arity = 0;
    bool pass = true;
    long checked = 0;
    std::string failure;
};

// Δ(μ^σ) = Δ(μ)^σ for the duality coproducts and μ^σ·ν^σ = (μ·ν)^σ for the generating
// products, all σ, arities <= max_arity.
BasisReport check_compatible_basis(const std::string& operad, int max_arity);

// On primitives, each law's right side must equal Σ_σ (1/C_σ) p_σ(1) ⊗ ... ⊗ p_σ(k),
// where C_σ is read off the crochet pairing of the dual operation with μ.
BasisReport check_hom_confluence(const LawEntry& entry);

}  // namespace opforge
