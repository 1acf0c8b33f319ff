#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monostab/decomposition.hpp"

namespace monostab {

// H(b) = (x^{2b+1}, x^2 y^{2b-1}, y^{2b+1}) in K[x, y], b >= 1.
MonomialIdeal make_H(std::uint32_t b);

// The generators u_{i,j} = x^{(2b+1)(k-i)+2(i-j)} y^{(2b+1)i-2(i-j)},
// 0 <= j <= i <= k, of H(b)^k, listed by (i, j). Not minimalized.
std::vector<Monomial> predict_H_power_generators(std::uint32_t b, std::uint32_t k);

// v(H(b)^k): (2b+1)k below k = b, (2b+1)k - 1 from there on.
std::int64_t predict_v_H(std::uint32_t b, std::uint32_t k);

// Triangle edge ideal (x_{3i-2} x_{3i-1}, x_{3i-2} x_{3i}, x_{3i-1} x_{3i})
// on its own three variables.
MonomialIdeal make_triangle(std::uint32_t i);

// J = J_1 + ... + J_{a-1} over x_1, ..., x_{3(a-1)}; a >= 2.
MonomialIdeal make_J(std::uint32_t a);

// x_0^{2b-1} J over (x_0, x_1, ..., x_{3(a-1)}); a >= 2.
MonomialIdeal make_L(std::uint32_t a, std::uint32_t b);

// x_0^{2b-1} J + H(b) over (x_0, x_1, ..., x_{3(a-1)}, x, y). For a = 1
// this is H(b) itself.
MonomialIdeal make_composite(std::uint32_t a, std::uint32_t b);

// Where make_composite's ring departs from the 3(a+1)-variable ring named
// for the construction: only the variables that occur are created.
std::string composite_ring_note(std::uint32_t a);

// Ass((A + B)^k) for A, B in disjoint variables, from Ass(A^j) and Ass(B^j)
// for j = 1..k (index j-1): all p + q with p in Ass(A^{k-l}), q in
// Ass(B^{l+1}), 0 <= l < k. Primes must already live in the joint ring.
// Throws InputError on short profiles or overlapping supports.
AssSet predict_ass_disjoint_sum(const std::vector<AssSet>& a_profile, const std::vector<AssSet>& b_profile,
                                std::size_t k);

struct VComposites {
    std::int64_t v_J;  // 2k + a - 3
    std::int64_t v_L;  // min{(2b-1)k - 1 + 2k, (2b-1)k + 2k + a - 3}
    std::int64_t v_I;  // min over l in [0, k) of v_I_term
};

// One term of the minimization for v(I^k): (2b+1)(k-l) - 1 + v(H^{l+1}),
// with v(H^{l+1}) taken from predict_v_H rather than recomputed.
std::int64_t v_I_term(std::uint32_t b, std::uint32_t k, std::uint32_t l);

VComposites predict_v_composites(std::uint32_t a, std::uint32_t b, std::uint32_t k);

// Ground truth for the built-in families: (astab, vstab) = (1, b) for H(b),
// (a, b) for make_composite(a, b).
struct KnownIndices {
    std::size_t astab;
    std::size_t vstab;
};
KnownIndices known_indices_H(std::uint32_t b);
KnownIndices known_indices_composite(std::uint32_t a, std::uint32_t b);

// Default horizon max(2b+2, a+b+2, 6).
std::size_t default_horizon(std::uint32_t a, std::uint32_t b);

}  // namespace monostab
