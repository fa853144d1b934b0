#pragma once

#include <memory>
#include <vector>

#include "wildram/filtration.hpp"
#include "wildram/subspace.hpp"
#include "wildram/tower.hpp"

namespace wildram {

// The second ramification group, characterized without computing the chain:
// G_2 is the annihilator of the span of the break-one lines under the dot
// pairing on F_p^l.
Subspace g2_characterize(const Tower& t);

// True when the chain already drops at index two, i.e. some line has break
// one; equivalent to g2_characterize(t) being a proper subgroup.
bool jump_at_two(const Tower& t);

// Annihilator of the span of the break-i lines. Valid as a lower bound for
// G_{i+1} only while the chain has not dropped yet, so the oracle chain must
// still be the whole group at index i (PreconditionFailed otherwise). The
// contract is containment; equality holds for i = 1.
Subspace gi_containment_bound(const Tower& t, long i);

// The chain of a subgroup H: H_i = G_i intersect H, indices unchanged.
// Jumps are the oracle jumps of the members of H.
RamificationFiltration restrict_filtration(const Tower& t, const Subspace& H);

// The chain of G/H for H = G_j: (G/H)_i is the image of G_i for i <= j and
// trivial from j on. Coordinates on the quotient come from the chart
// sigma -> (<w, sigma>) over the echelon basis w of Ann(H), which also
// orders the generators of quotient_tower(t, group_at(j)).
RamificationFiltration quotient_filtration(const Tower& t, long j);

struct TransitivityCheck {
  long lhs;  // different of the full tower
  long rhs;  // |H| * different(quotient tower) + different(restricted chain)
};

// Both sides of the conductor-different transitivity identity for the
// intermediate field fixed by H. The two sides are computed independently;
// equality is the theorem, not an assumption.
TransitivityCheck transitivity_check(const Tower& t, const Subspace& H);

struct CompositumResult {
  Tower tower;
  // True when the two spans overlap modulo Artin-Schreier classes, i.e. the
  // compositum degree is smaller than the product of the degrees.
  bool span_collapse;
};

// Compositum of two towers over the same base: rhs list is a greedy basis
// of the joint span modulo P(K). Throws DomainError when the joint span
// leaves the totally ramified model (an inert combination appears).
CompositumResult compositum(const Tower& x, const Tower& z);

struct KillWildResult {
  Tower tower_z;
  Subspace relative_inertia;
};

// The fixed-field cover of N together with the inertia of the remaining
// relative extension (which is N itself: the residue extension is trivial
// in this totally ramified model).
KillWildResult kill_wild(const Tower& t, const Subspace& N);

// Pullback along the degree-n Kummer cover y^n = x: every rhs becomes
// f(y^n), breaks scale by n, and the tame part is absorbed (tame_index 1).
// pre: gcd(n, p) = 1.
Tower tame_pullback(const Tower& t, long n);

// Genus from 2g - 2 = -2 * degree + sum of branch differents. The branch
// data is taken at face value; inconsistent data surfaces as
// NonIntegralGenus or NegativeGenus.
long rh_genus(long degree, const std::vector<long>& branch_differents);

// --- fixed-field and relative-extension scaffolding -----------------------

// The subtower fixed by H: rhs are the combinations over the echelon basis
// of Ann(H).
Tower quotient_tower(const Tower& t, const Subspace& H);

// Standard-basis vectors greedily completing Ann(H) to a basis of F_p^l;
// the relative extension over the fixed field of H is generated by these
// combinations, in order.
std::vector<Vec> relative_generators(const Tower& t, const Subspace& H);

// The extension S over the fixed field of H, presented as a tower over
// F_q((y)) with y the subtower's certified uniformizer: each relative
// generator's rhs is rewritten through the expansion of x in y. Its group
// chart is sigma -> (<v, sigma>) over relative_generators(t, H).
Tower relative_tower(const Tower& t, const Subspace& H);

// Image of a subspace under the linear chart sigma -> (<v_j, sigma>)_j.
Subspace chart_image(const Subspace& s, const std::vector<Vec>& functionals);

}  // namespace wildram
