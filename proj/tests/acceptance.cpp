#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "opforge/enumerate.hpp"
#include "opforge/exact_linalg.hpp"
#include "opforge/idempotents.hpp"
#include "opforge/laws.hpp"
#include "opforge/solomon_tits.hpp"

using namespace opforge;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string join(const std::vector<std::size_t>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    return out.str();
}

Outcome dimension_tables() {
    auto dims = [](const std::string& name) {
        std::vector<std::size_t> d;
        for (int n = 1; n <= 6; ++n) d.push_back(enumerate_basis(name, n).size());
        return d;
    };
    const std::vector<std::size_t> cayley{1, 2, 9, 64, 625, 7776};
    const std::vector<std::size_t> linear{1, 2, 3, 4, 5, 6};
    const std::vector<std::size_t> fact{1, 2, 6, 24, 120, 720};
    std::vector<std::pair<std::string, const std::vector<std::size_t>*>> table{
        {"prelie", &cayley}, {"nap", &cayley}, {"perm", &linear},    {"pan", &linear},
        {"as", &fact},       {"zinbiel", &fact}, {"leibniz", &fact}, {"poisson", &fact}};
    for (const auto& [name, want] : table) {
        auto got = dims(name);
        if (got != *want) return {false, name + " gives " + join(got)};
    }
    // n^{n-1} cross-check.
    for (std::size_t n = 1; n <= 6; ++n) {
        std::size_t p = 1;
        for (std::size_t i = 1; i < n; ++i) p *= n;
        if (cayley[n - 1] != p) return {false, "Cayley table mismatch"};
    }
    return {true, "prelie/nap 1 2 9 64 625 7776, perm/pan n, as/zinbiel/leibniz/poisson n!"};
}

Outcome duality_consistency() {
    long checked = 0;
    for (const auto& name : operad_names()) {
        const OperadSpec& spec = operad(name);
        for (int n = 1; n <= 5; ++n)
            for (const auto& x : enumerate_basis(name, n))
                for (const auto& c : spec.cooperations) {
                    ++checked;
                    if (free_coproduct(name, c.name, Vec(x)) != coproduct(c.name, x))
                        return {false, name + " " + c.name + " on " + format(x)};
                }
    }
    return {true, std::to_string(checked) + " coproducts over " + std::to_string(operad_names().size()) + " models"};
}

Outcome law_suite() {
    long checked = 0;
    for (const auto& e : law_catalogue()) {
        LawReport r = check_law(e, 6, {default_jobs(), true});
        checked += r.checked;
        if (!r.pass) return {false, e.id + ": " + r.counterexample->diff};
    }
    std::string detail = std::to_string(law_catalogue().size()) + " laws, " + std::to_string(checked) + " cases";
    for (const char* id : {"perm-literal", "copan-perm-literal"}) {
        LawReport r = check_law(find_law(id), 6);
        detail += std::string("; ") + id + (r.pass ? " passes" : " fails with diff " + r.counterexample->diff);
    }
    return {true, detail};
}

Outcome prelie_example() {
    auto t = [](const char* s) { return parse_element(BasisKind::Tree, s); };
    std::vector<std::vector<const char*>> terms{{"3", "4(2,5)", "1"},    {"1", "4(2,5)", "3"},    {"5", "4(2(3))", "1"},
                                                {"1", "4(2(3))", "5"},   {"5", "4(2(1))", "3"},   {"3", "4(2(1))", "5"},
                                                {"5", "4", "2(1,3)"},    {"2(1,3)", "4", "5"}};
    TVec expected;
    for (const auto& term : terms) {
        Tensor x;
        for (const char* s : term) x.push_back(t(s));
        expected.add(x, Scalar(1));
    }
    TVec got = dual_coproduct_basis("prelie", t("2(1,3)"), t("4(2(1,3),5)"));
    if (got != expected) return {false, "got " + format(got)};
    return {true, std::to_string(got.size()) + " terms, each with coefficient 1"};
}

Outcome idempotent_properties() {
    long checked = 0;
    for (const char* name : {"prelie", "nap", "pan", "perm", "as", "zinbiel"}) {
        IdempotentCheck r = check_idempotent(name, 2, 5);
        checked += r.checked;
        if (!r.pass()) return {false, std::string(name) + ": " + r.failure};
    }
    return {true, "6 operads on 2 generators to degree 5, " + std::to_string(checked) + " checks"};
}

Outcome series_vs_inductive() {
    std::string detail;
    for (const char* kind : {"perm", "nap", "pan"}) {
        SeriesReport r = compare_series(kind, 5);
        detail += std::string(detail.empty() ? "" : "; ") + kind + ": ";
        if (r.agree) {
            detail += "agree on " + std::to_string(r.checked);
        } else if (r.first_disagreement) {
            detail += "first disagreement at " + r.first_disagreement->element;
        } else {
            return {false, std::string(kind) + " disagrees without a report"};
        }
    }
    return {true, detail};
}

Outcome nap_partial_sums() {
    PartialSumReport literal = check_nap_partial_sums(5, 0);
    PartialSumReport shifted = check_nap_partial_sums(5, 1);
    std::string corrected = std::string("; with root children <= k-1: ") + (shifted.pass ? "PASS" : "FAIL") + " on " +
                            std::to_string(shifted.checked) + " trees";
    if (literal.pass) return {true, std::to_string(literal.checked) + " trees" + corrected};
    const auto& f = *literal.first_failure;
    return {false, "e_" + std::to_string(f.k) + "(" + f.tree + ") = " + f.value + " with " + std::to_string(f.root_children) +
                       " root children" + corrected};
}

Outcome rigidity() {
    RigidityReport r = rigidity_roundtrip("prelie", 2, 4);
    std::string detail = "component dims " + join(r.component_dims) + ", primitives " + std::to_string(r.primitive_dim);
    if (!r.pass()) return {false, detail + ": " + r.failure};
    return {true, detail};
}

Outcome solomon_tits() {
    HopfReport h = check_st_hopf(4);
    if (!h.pass) return {false, "Hopf law: " + h.counterexample};
    Surjection target{{1, 1, 2}};
    NongenerationReport r = nongeneration_certificate(target, 3);
    std::size_t dim3 = r.degrees.back().dim;
    std::string detail = "Hopf law on " + std::to_string(h.checked) + " pairs; degree 3 dim " + std::to_string(dim3) +
                         ", generated rank " + std::to_string(r.span_rank) + " -> " + std::to_string(r.span_rank_with_target) +
                         " with (1,1,2)";
    if (dim3 != 13 || r.generated) return {false, detail};
    return {true, detail + ": NOT generated"};
}

Outcome phi_rank() {
    Matrix m = phi_matrix(2);
    std::size_t rank = exact_rank(m);
    std::string detail = "rank " + std::to_string(rank) + " of " + std::to_string(m.size());
    return {rank == 1 && m.size() == 2, detail};
}

Outcome hypertrees() {
    LawReport law = check_law(find_law("prelie"), 5);
    if (!law.pass) return {false, "PreLie law: " + law.counterexample->diff};
    GradedModel model = labelled_graded_model("hypertree-prelie", 4);
    auto prims = extract_primitives(model);
    std::string detail = "PreLie law passes at 5 vertices";
    bool exact = true;
    for (int d = 1; d <= 4; ++d) {
        std::vector<Vec> no_binary;
        for (const auto& b : model.basis(d)) {
            const auto& h = std::get<Hypertree>(b);
            bool binary = false;
            for (const auto& e : h.edges) binary = binary || e.size() == 2;
            if (!binary) no_binary.emplace_back(b);
        }
        const auto& k = prims.at(d);
        // Each no-binary hypertree must be primitive.
        std::set<Element> keys;
        for (const auto& v : k)
            for (const auto& [e, c] : v) keys.insert(e);
        for (const auto& v : no_binary)
            for (const auto& [e, c] : v) keys.insert(e);
        Coordinates<Element> coords(std::vector<Element>(keys.begin(), keys.end()));
        Matrix both;
        for (const auto& v : k) both.push_back(coords.vector(v));
        for (const auto& v : no_binary) both.push_back(coords.vector(v));
        bool contained = exact_rank(both) == k.size();
        detail += "; " + std::to_string(d) + " vertices: kernel " + std::to_string(k.size()) + ", no-binary " +
                  std::to_string(no_binary.size());
        exact = exact && contained && k.size() == no_binary.size();
    }
    return {exact, detail};
}

Outcome compatible_basis() {
    long checked = 0;
    int operads = 0;
    for (const auto& name : operad_names()) {
        if (!operad(name).symmetric) continue;
        BasisReport r = check_compatible_basis(name, 4);
        checked += r.checked;
        ++operads;
        if (!r.pass) return {false, name + ": " + r.failure};
    }
    return {true, std::to_string(operads) + " symmetric operads, " + std::to_string(checked) + " checks"};
}

}  // namespace

int main() {
    std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"dimension tables", dimension_tables},
        {"duality consistency", duality_consistency},
        {"law suite", law_suite},
        {"PreLie worked example", prelie_example},
        {"idempotent properties", idempotent_properties},
        {"series vs inductive idempotent", series_vs_inductive},
        {"NAP partial sums", nap_partial_sums},
        {"rigidity round trip", rigidity},
        {"Solomon-Tits counterexample", solomon_tits},
        {"phi non-injectivity", phi_rank},
        {"hypertree model", hypertrees},
        {"compatible basis", compatible_basis}};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += o.pass ? 0 : 1;
        std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << " ("
                  << std::fixed << std::setprecision(1) << secs << "s): " << o.detail << "\n"
                  << std::flush;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria pass\n";
    return failures ? 1 : 0;
}
