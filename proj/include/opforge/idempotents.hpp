#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "opforge/free_algebra.hpp"

namespace opforge {

// One orbit representative of the S_n-action on A(n), with |Aut|.
struct OrbitRep {
    Element rep;
    long aut = 1;
};

// Orthogonal generating sets for the inductive idempotent of a free model.
class IdempotentPlan {
public:
    IdempotentPlan(std::string operad, int degree_bound);

    const std::string& operad() const { return operad_; }
    int degree_bound() const { return bound_; }
    // Lexicographically least element of every orbit of A(n), 1 <= n <= bound.
    const std::vector<OrbitRep>& orbit_reps(int n) const;

    // P_n(x) = sum_i 1/|Aut(a_i)| a_i o c_i (x), cached on basis elements.
    Vec stage_projection(int n, const Vec& x) const;

private:
    std::string operad_;
    int bound_;
    std::map<int, std::vector<OrbitRep>> reps_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, Element>, Vec> cache_;
};

// e = (id - P_2) o ... o (id - P_bound). Throws DegreeOverflow beyond the bound.
Vec inductive_idempotent(const IdempotentPlan& plan, const Vec& x);

// D_1 = id, D_{n+1} = mu o (D_n (x) id) o Delta for the operad's generating pair.
Vec dn_operator(const std::string& operad, int n, const Vec& x);

// Closed-form series coefficient of D_n: perm (-1)^{n-1} n^{n-1}/n!, nap and pan (-1)^{n-1} n/n!.
Scalar series_coefficient(const std::string& kind, int n);

// The series truncated at the largest degree of x.
Vec series_idempotent(const std::string& kind, const Vec& x);

// Partial sum e_k = sum_{n=1}^{k} of the series.
Vec series_partial_sum(const std::string& kind, int k, const Vec& x);

struct SeriesDiscrepancy {
    std::string element;
    std::string series;
    std::string inductive;
};

struct SeriesReport {
    std::string kind;
    int bound = 0;
    long checked = 0;
    bool agree = true;
    std::optional<SeriesDiscrepancy> first_disagreement;
};

// Compares the series with the inductive idempotent on every labelled basis element of degree <= bound.
SeriesReport compare_series(const std::string& kind, int bound);

// D_k on the n-set pointed at 1, as a multiple of the input, by direct iteration.
Scalar perm_dk_scalar(int k, int n);
// The printed closed form prod_{i=1}^{k} (n-i) (k+1)^{n-k-1}.
Scalar perm_dk_printed(int k, int n);

struct PartialSumFailure {
    int k = 0;
    std::string tree;
    int root_children = 0;
    std::string value;
};

struct PartialSumReport {
    int bound = 0;
    int slack = 0;  // trees with root children <= k - slack are tested
    long checked = 0;
    bool pass = true;
    std::optional<PartialSumFailure> first_failure;
};

// e_k of the NAP series on every tree with 2..bound vertices whose root has at most k - slack
// children, for 1 <= k <= bound.
PartialSumReport check_nap_partial_sums(int bound, int slack = 0);

// Graded algebra with computable coproducts: a free model on generators, or a labelled
// non-free model such as hypertrees.
struct GradedModel {
    std::string operad;
    std::vector<Label> generators;  // empty for labelled models
    int bound = 0;
    std::function<const std::vector<Element>&(int)> basis;
    std::vector<std::string> coproducts;
    std::vector<std::string> products;
};

GradedModel free_graded_model(const std::string& operad, int generators, int bound);
GradedModel labelled_graded_model(const std::string& operad, int bound);

// Exact kernel of all reduced coproducts, per degree 1..bound.
std::map<int, std::vector<Vec>> extract_primitives(const GradedModel& model);

struct IdempotentCheck {
    std::string operad;
    int generators = 0;
    int bound = 0;
    long checked = 0;
    bool kills_coproducts = true;  // Delta_delta o e = 0
    bool idempotent = true;        // e o e = e
    bool identity_on_generators = true;
    bool vanishes_on_products = true;  // e = 0 on M_n, n >= 2
    std::string failure;
    bool pass() const { return kills_coproducts && idempotent && identity_on_generators && vanishes_on_products; }
};

IdempotentCheck check_idempotent(const std::string& operad, int generators, int bound);

struct FiltrationRow {
    int n = 0;
    std::size_t dim_f = 0;
    std::size_t dim_f_prev = 0;
    std::size_t dim_m = 0;
    bool ok() const { return dim_f == dim_f_prev + dim_m; }
};

struct RigidityReport {
    std::string operad;
    int generators = 0;
    int bound = 0;
    std::vector<std::size_t> component_dims;  // degrees 1..bound
    std::vector<FiltrationRow> filtration;
    std::size_t primitive_dim = 0;
    bool decomposition = true;
    bool primitives_are_generators = true;
    bool image_is_primitive = true;
    bool generated = true;
    IdempotentCheck idempotent;
    std::string failure;
    bool pass() const {
        return decomposition && primitives_are_generators && image_is_primitive && generated && idempotent.pass();
    }
};

RigidityReport rigidity_roundtrip(const std::string& operad, int generators, int bound);

// Span check: whether the subalgebra generated by the given elements under the model's
// products fills each graded component. Returns the per-degree ranks.
std::vector<std::size_t> generated_ranks(const GradedModel& model, const std::vector<Vec>& seeds);

}  // namespace opforge
