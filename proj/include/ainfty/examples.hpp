#pragma once

/* Small stock categories and functors used by the built-in suites and the
 * CLI: nilpotent unital algebras on one object, short complexes, and the
 * morphisms between them. */

#include "ainfty/functor.hpp"

namespace ainfty {
namespace examples {

/* one-object unital graded algebra from a basis and a product table;
 * products are given as (later, earlier) -> combination */
AInftyCategory algebra(Field f, const std::vector<std::pair<std::string, int>>& basis,
                       const std::vector<std::tuple<std::string, std::string, std::vector<std::pair<std::string, long>>>>& products,
                       const std::vector<std::pair<std::string, std::vector<std::pair<std::string, long>>>>& diff = {});

/* K[e1,e2]: unit plus two degree-0 generators, all products of generators
 * vanish */
AInftyCategory k_eps12(Field f);
/* K[e]: unit plus one generator of degree -1 squaring to zero */
AInftyCategory k_eps(Field f);
/* K[e0]: unit plus one degree-0 generator squaring to zero */
AInftyCategory k_eps0(Field f);
/* the ground field as a one-object category */
AInftyCategory ground(Field f);
/* one object, hom = (K -> K) with the identity differential (acyclic) */
AInftyCategory two_term_acyclic(Field f);
/* one object, basis x (deg 0), y (deg -1), zero differential and zero
 * products: a plain graded complex */
AInftyCategory reduced_k_eps(Field f);

/* strict morphism K[e1,e2] -> K[e] killing the generators */
AInftyFunctor f1(Field f);
/* same linear part plus F^2(e1, e2) = e (the strictly unital non-strict
 * morphism) */
AInftyFunctor f2(Field f);
/* variant with the nonzero second component moved to (e2, e1); fails the
 * functor relations */
AInftyFunctor f2_flipped(Field f);
/* strict morphisms K[e0] -> K[e1,e2] with e0 -> e_i */
AInftyFunctor j(Field f, int which);

} // namespace examples
} // namespace ainfty
