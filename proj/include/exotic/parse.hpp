#pragma once

// Text syntax for group elements and braid expressions.
//
// An expression is a product of factors separated by whitespace or '*':
//   e                 identity
//   s1 .. sN          finite simple reflections
//   s0, s0_k          affine simple reflection (of component k)
//   omega, omega<j>, omega[..]   length-zero elements
//   t[a1,...,ar]      translation
//   w0                longest element of the finite Weyl group
//   theta[a1,...]     Bernstein element (braid expressions only)
// Any factor may carry the suffix ^-1.

#include <string>
#include <string_view>
#include <vector>

#include "exotic/hecke.hpp"

namespace exotic {

// Splits on whitespace and '*' outside square brackets.
std::vector<std::string> tokenize_expression(std::string_view text);

// Weight of the given rank. Throws std::invalid_argument.
Weight parse_weight_for(const RootSystem& rs, std::string_view text);

// Product in the extended affine Weyl group. theta[..] is rejected.
AffineElement parse_element(const AffineWeylGroup& g, std::string_view text);

// Braid word whose image in H is the product T_{f1} T_{f2} ... of the factors.
BraidWord parse_braid(const HeckeAlgebra& alg, std::string_view text);

}  // namespace exotic
