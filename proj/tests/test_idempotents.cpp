#include <set>

#include "doctest.h"
#include "opforge/enumerate.hpp"
#include "opforge/exact_linalg.hpp"
#include "opforge/idempotents.hpp"
#include "support.hpp"

using namespace opforge;
using namespace opforge::test;

namespace {

// Rooted trees with vertices coloured by k colours, via a(n+1) = (1/n) sum_{i=1}^{n} c(i) a(n+1-i),
// c(i) = sum_{d | i} d a(d), a(1) = k.
std::vector<long> coloured_rooted_trees(int k, int nmax) {
    std::vector<long> a(static_cast<std::size_t>(nmax + 1), 0);
    a[1] = k;
    for (int n = 1; n < nmax; ++n) {
        long s = 0;
        for (int i = 1; i <= n; ++i) {
            long c = 0;
            for (int d = 1; d <= i; ++d)
                if (i % d == 0) c += d * a[static_cast<std::size_t>(d)];
            s += c * a[static_cast<std::size_t>(n + 1 - i)];
        }
        a[static_cast<std::size_t>(n + 1)] = s / n;
    }
    return a;
}

bool has_binary_edge(const Element& e) {
    for (const auto& edge : std::get<Hypertree>(e).edges)
        if (edge.size() == 2) return true;
    return false;
}

std::size_t span_rank(const std::vector<Vec>& vs) {
    std::set<Element> keys;
    for (const auto& v : vs)
        for (const auto& [e, c] : v) keys.insert(e);
    Coordinates<Element> coords(std::vector<Element>(keys.begin(), keys.end()));
    Matrix m;
    for (const auto& v : vs) m.push_back(coords.vector(v));
    return exact_rank(m);
}

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

}  // namespace

TEST_CASE("orbit representatives") {
    IdempotentPlan plan("prelie", 4);
    CHECK(plan.orbit_reps(1).size() == 1);
    CHECK(plan.orbit_reps(2).size() == 1);
    CHECK(plan.orbit_reps(3).size() == 2);
    CHECK(plan.orbit_reps(4).size() == 4);
    long total = 0;
    for (const auto& r : plan.orbit_reps(4)) {
        auto orb = orbit(r.rep);
        CHECK(r.rep == *std::min_element(orb.begin(), orb.end()));
        CHECK(static_cast<long>(orb.size()) * r.aut == 24);
        total += static_cast<long>(orb.size());
    }
    CHECK(total == 64);
    CHECK_THROWS_AS(plan.orbit_reps(5), DegreeOverflow);
    CHECK_THROWS_AS(IdempotentPlan("hypertree-prelie", 3), std::invalid_argument);
}

TEST_CASE("inductive idempotent examples") {
    IdempotentPlan pl("prelie", 4);
    CHECK(inductive_idempotent(pl, vec(tree("g"))) == vec(tree("g")));
    CHECK(inductive_idempotent(pl, vec(tree("g(h)"))).is_zero());
    IdempotentPlan as("as", 4);
    CHECK(inductive_idempotent(as, vec(word("[g,h]"))).is_zero());
    CHECK(inductive_idempotent(pl, Vec()).is_zero());
    CHECK_THROWS_AS(inductive_idempotent(IdempotentPlan("prelie", 2), vec(tree("g(h(k))"))), DegreeOverflow);
}

TEST_CASE("Lemma De, idempotence and projection on two generators to degree 5") {
    for (const char* name : {"prelie", "nap", "pan", "perm", "as", "zinbiel"}) {
        IdempotentCheck r = check_idempotent(name, 2, 5);
        INFO(name, ": ", r.failure);
        CHECK(r.kills_coproducts);
        CHECK(r.idempotent);
        CHECK(r.identity_on_generators);
        CHECK(r.vanishes_on_products);
        CHECK(r.checked > 0);
    }
}

TEST_CASE("D_n operator") {
    CHECK(dn_operator("perm", 1, vec(pointed("{*1,2}"))) == vec(pointed("{*1,2}")));
    CHECK(dn_operator("perm", 2, vec(pointed("{*1,2}"))) == vec(pointed("{*1,2}")));
    CHECK(dn_operator("pan", 2, vec(pointed("{*1,2,3}"))) == 2 * vec(pointed("{*1,2,3}")));
    CHECK_THROWS_AS(dn_operator("perm", 0, vec(pointed("{*1}"))), std::invalid_argument);
}

TEST_CASE("Perm D_k scalars on the pointed n-set") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(perm_dk_scalar(1, n) == 1);
        // D_2 counts pairs (S2, new point) with S2 a non-empty subset of the n-1 non-points.
        long d2 = 0;
        for (int s = 1; s <= n - 1; ++s) d2 += binomial(n - 1, s) * s;
        CHECK(perm_dk_scalar(2, n) == d2);
    }
    // The printed closed form gives D_{k+1}, not D_k.
    for (int k = 1; k <= 4; ++k)
        for (int n = k + 1; n <= 6; ++n) {
            INFO(k, " ", n);
            CHECK(perm_dk_printed(k, n) == perm_dk_scalar(k + 1, n));
        }
    CHECK(perm_dk_printed(1, 3) != perm_dk_scalar(1, 3));
}

TEST_CASE("series idempotents") {
    CHECK(series_idempotent("nap", vec(tree("g"))) == vec(tree("g")));
    CHECK(series_idempotent("nap", vec(tree("g(h)"))).is_zero());
    CHECK(series_idempotent("perm", vec(pointed("{*g,h}"))).is_zero());
    CHECK(series_coefficient("perm", 3) == frac(9, 6));
    CHECK(series_coefficient("nap", 2) == -1);
    CHECK_THROWS_AS(series_coefficient("prelie", 2), std::invalid_argument);
}

TEST_CASE("series agree with the inductive idempotent to degree 5") {
    for (const char* kind : {"perm", "nap", "pan"}) {
        SeriesReport r = compare_series(kind, 5);
        INFO(kind);
        if (r.first_disagreement) INFO(r.first_disagreement->element);
        CHECK(r.agree);
        CHECK(r.checked > 0);
    }
}

TEST_CASE("NAP partial sums: e_k(T) = sum_{m<k} (-1)^m C(r, m) T for r root children") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& b : enumerate_basis("nap", n)) {
            int r = static_cast<int>(std::get<RootedTree>(b).children.size());
            for (int k = 1; k <= 5; ++k) {
                long s = 0;
                for (int m = 0; m < k; ++m) s += (m % 2 ? -1 : 1) * binomial(r, m);
                CHECK(series_partial_sum("nap", k, vec(b)) == Scalar(s) * vec(b));
            }
        }
    PartialSumReport shifted = check_nap_partial_sums(5, 1);
    CHECK(shifted.pass);
    CHECK(shifted.checked > 0);
}

TEST_CASE("NAP partial sums as stated: root with at most k children" * doctest::should_fail()) {
    PartialSumReport r = check_nap_partial_sums(5, 0);
    CHECK(r.pass);
}

TEST_CASE("NAP partial sums as stated fail first at k = 1 on 1(2)") {
    PartialSumReport r = check_nap_partial_sums(5, 0);
    REQUIRE(r.first_failure);
    CHECK(r.first_failure->k == 1);
    CHECK(r.first_failure->tree == "1(2)");
    CHECK(r.first_failure->root_children == 1);
}

TEST_CASE("primitive extraction on free models") {
    auto pl = extract_primitives(free_graded_model("prelie", 1, 3));
    CHECK(pl.at(1) == std::vector<Vec>{vec(tree("a"))});
    CHECK(pl.at(2).empty());
    CHECK(pl.at(3).empty());
    auto as = extract_primitives(free_graded_model("as", 2, 2));
    CHECK(as.at(1).size() == 2);
    CHECK(span_rank({as.at(1)[0], as.at(1)[1], vec(word("[a]")), vec(word("[b]"))}) == 2);
    CHECK(as.at(2).empty());
}

TEST_CASE("hypertree primitives") {
    auto prims = extract_primitives(labelled_graded_model("hypertree-prelie", 4));
    for (int d = 1; d <= 4; ++d) {
        std::vector<Vec> no_binary;
        for (const auto& h : enumerate_basis("hypertree-prelie", d))
            if (!has_binary_edge(h)) no_binary.emplace_back(h);
        const auto& k = prims.at(d);
        std::vector<Vec> both = k;
        both.insert(both.end(), no_binary.begin(), no_binary.end());
        INFO(d);
        // Every hypertree with no binary edge is primitive.
        CHECK(span_rank(both) == k.size());
        if (d <= 3) CHECK(k.size() == no_binary.size());
    }
    CHECK(prims.at(3).size() == 3);
    // Freeness count on 4 vertices: 116 = 64 + 4 * 3 * 2 + dim P(4).
    CHECK(enumerate_basis("hypertree-prelie", 4).size() == 116);
    CHECK(prims.at(4).size() == 116 - 64 - 24);
}

TEST_CASE("hypertree primitives on 4 vertices are exactly those with no binary edge" * doctest::should_fail()) {
    auto prims = extract_primitives(labelled_graded_model("hypertree-prelie", 4));
    std::size_t no_binary = 0;
    for (const auto& h : enumerate_basis("hypertree-prelie", 4))
        if (!has_binary_edge(h)) ++no_binary;
    CHECK(prims.at(4).size() == no_binary);
}

TEST_CASE("rigidity round trip") {
    RigidityReport r = rigidity_roundtrip("prelie", 2, 4);
    INFO(r.failure);
    CHECK(r.pass());
    auto a = coloured_rooted_trees(2, 4);
    CHECK(r.component_dims == std::vector<std::size_t>{static_cast<std::size_t>(a[1]), static_cast<std::size_t>(a[2]),
                                                        static_cast<std::size_t>(a[3]), static_cast<std::size_t>(a[4])});
    CHECK(r.component_dims == std::vector<std::size_t>{2, 4, 14, 52});
    CHECK(r.primitive_dim == 2);
    REQUIRE(r.filtration.size() == 4);
    for (const auto& row : r.filtration) CHECK(row.ok());
    CHECK(r.filtration.back().dim_f == 72);

    RigidityReport p = rigidity_roundtrip("perm", 1, 5);
    INFO(p.failure);
    CHECK(p.pass());
}

TEST_CASE("generated ranks detect a missing generator") {
    GradedModel m = free_graded_model("prelie", 2, 3);
    auto full = generated_ranks(m, {vec(tree("a")), vec(tree("b"))});
    CHECK(full == std::vector<std::size_t>{2, 4, 14});
    auto half = generated_ranks(m, {vec(tree("a"))});
    CHECK(half == std::vector<std::size_t>{1, 1, 2});
}
