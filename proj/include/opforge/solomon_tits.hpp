#pragma once

#include <string>
#include <vector>

#include "opforge/exact_linalg.hpp"
#include "opforge/species.hpp"

namespace opforge {

using STElement = LinComb<Surjection>;
using STTensor = LinComb<std::vector<Surjection>>;

// Quasi-shuffle maps SH(r, s): surjections {1..r+s} -> {1..t} strictly increasing on
// {1..r} and on {r+1..r+s}.
std::vector<std::vector<int>> quasi_shuffles(int r, int s);

int value_range(const Surjection& x);

STElement stuffle_product(const Surjection& x, const Surjection& y);
STElement stuffle_product(const STElement& x, const STElement& y);

// Co-restriction x|^K for a set K of values.
Surjection corestriction(const Surjection& x, const std::vector<int>& values);

STTensor block_coproduct(const Surjection& x);
STTensor block_coproduct(const STElement& x);

// k-factor iterate (Delta tensor id^{k-2}) o ... o Delta; k = 1 is the identity.
STTensor iterated_block_coproduct(const Surjection& x, int factors);

// Least k such that the k-factor iterate of x vanishes.
int nilpotency_index(const Surjection& x);

// Hopf-law right side x(x)y + y(x)x + x1*y(x)x2 + x1(x)x2*y + x*y1(x)y2 + y1(x)x*y2 + x1*y1(x)x2*y2.
STTensor hopf_rhs(const Surjection& x, const Surjection& y);

struct HopfReport {
    int bound = 0;
    long checked = 0;
    bool pass = true;
    std::string counterexample;
};

// Delta_block(x * y) against the Hopf right side for all pairs with n + m <= bound.
HopfReport check_st_hopf(int bound);

struct DegreeCertificate {
    int degree = 0;
    std::size_t dim = 0;            // |ST_n|
    std::size_t primitive_dim = 0;  // dim ker Delta_block on ST_n
    std::size_t generated_dim = 0;  // rank of the subalgebra generated by primitives in degree n
};

struct NongenerationReport {
    Surjection target;
    int bound = 0;
    std::vector<DegreeCertificate> degrees;
    std::vector<std::vector<STElement>> primitive_bases;  // per degree 1..bound
    std::size_t span_rank = 0;                            // rank in the target's degree
    std::size_t span_rank_with_target = 0;
    bool generated = false;
};

// Primitive spaces per degree, closed under the stuffle product, and membership of target.
NongenerationReport nongeneration_certificate(const Surjection& target, int bound);

// phi: As(n) -> As(n)^*, phi(w) = sum over sigma of the sigma-permuted word, as a matrix over
// the words of S_n.
Matrix phi_matrix(int n);

}  // namespace opforge
