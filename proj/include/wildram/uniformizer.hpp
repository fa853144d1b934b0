#pragma once

#include <string>
#include <vector>

#include "wildram/tower.hpp"

namespace wildram {

// A certified uniformizer of the tower's top field: norm_valuation(pi) == 1
// is checked before this is handed out.
struct Uniformizer {
  TowerElem pi;
  std::string method;  // "base", "height-one", "break-one-chain", "level-iterated"
};

// Builds a uniformizer, picking the cheapest applicable route.
Uniformizer uniformizer(const Tower& t);

// Residue-chain route. pre: ell >= 1 and every generator break equals one.
// Throws ResidueSplit if an elimination constant lands in the prime field
// (cannot happen for a validated tower, but the guard is real).
Uniformizer claim_chain_uniformizer(const Tower& t);

// Level-by-level route through relative height-one steps; works for any
// validated tower and is the reference the chain route is checked against.
Uniformizer level_iterated_uniformizer(const Tower& t);

// One elimination step of the residue chain, exposed for direct testing.
// c and d hold the partial-fraction constants of the remaining relations
// (pivot first); both shrink by one and are rewritten in place. Returns the
// multipliers a_j used against the pivot. `level` is the 1-based pivot index
// reported in ResidueSplit.
std::vector<fq_t> claim_step(const FqCtx& F, std::vector<fq_t>& c,
                             std::vector<fq_t>& d, int level);

// s evaluated at z by Horner's rule over the stored terms of s. Terms of s
// beyond its window are dropped; the result is exact arithmetic on what is
// known, and certifications downstream only read low-order data, which a
// dropped high-order tail cannot disturb.
TowerElem eval_series(const LaurentSeries& s, const TowerElem& z);

// The pi-adic expansion of z: a series Z with z = Z(pi), computed digit by
// digit over the default window. Digits are residues, read off through the
// norm since the residue extension is trivial.
LaurentSeries expand_in_uniformizer(const Tower& t, const TowerElem& pi,
                                    const TowerElem& z);

// expand_in_uniformizer applied to x; the workhorse for rewriting base
// series over a subtower's field.
LaurentSeries x_expansion(const Tower& t, const TowerElem& pi);

}  // namespace wildram
