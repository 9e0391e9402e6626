#ifndef HYP_FACTOR_HPP
#define HYP_FACTOR_HPP

#include <vector>

#include "hyp/fp.hpp"
#include "hyp/upoly.hpp"

namespace hyp {

struct FactorMult {
  UPoly<Rat> poly;  // irreducible, integer-primitive, positive leading coeff
  long mult;
};

// Squarefree decomposition (Yun): f = prod part[i]^(i+1) up to a constant.
std::vector<UPoly<Rat>> squarefree_parts(const UPoly<Rat>& f);

// Irreducible factorization over Q, constant factor dropped.
std::vector<FactorMult> factor_rational(const UPoly<Rat>& f);

bool is_irreducible(const UPoly<Rat>& f);

// Rational roots of f.
std::vector<Rat> rational_roots(const UPoly<Rat>& f);

}  // namespace hyp

#endif
