#pragma once

// Constructive decompositions into generator words.
//
// decompose_delta writes [[Id, B], [0, Id]] (B self-adjoint) as a product of
// the twist-group generators G1, G2, G3. reduce_lambda peels a Lambda element
// down to such a unipotent, given a witness word for its lower-right block.

#include <cstddef>
#include <limits>

#include "prym/cyclotomic.hpp"
#include "prym/error.hpp"
#include "prym/generators.hpp"
#include "prym/ringlinalg.hpp"
#include "prym/wordlang.hpp"

namespace prym {

/// Word over G1, G2, G3 evaluating to [[Id, B], [0, Id]].
///
/// Diagonal entries go through solve_real_basis; for i < j the lower entry
/// b_ji = sum_m c_m zeta^m (power basis) becomes prod_m G3(i, j, m)^c_m, since
/// G3(i, j, k) puts zeta^k at (j, i) and zeta^-k at (i, j). Unipotents commute, so the order
/// (diagonal first, then (i, j) lexicographic) only fixes the output text.
inline Word decompose_delta(const RingMatrix& b, int d, int g) {
  const std::size_t n = static_cast<std::size_t>(g - 1);
  if (g < 2) throw DomainError("genus must be >= 2");
  if (b.rows() != n || b.cols() != n) throw DomainError("B must be (g-1)-square");
  if (b.modulus() != d) throw ModulusMismatch(b.modulus(), d);
  if (!is_self_adjoint(b)) throw DomainError("B is not self-adjoint");

  auto to_long = [](const Integer& x) {
    if (x > Integer(std::numeric_limits<long>::max()) || x < Integer(std::numeric_limits<long>::min()))
      throw DomainError("generator multiplicity does not fit in a word exponent");
    return x.convert_to<long>();
  };

  Word w;
  for (std::size_t i = 0; i < n; ++i) {
    const int idx = static_cast<int>(i) + 1;
    RealBasisSolution sol = solve_real_basis(b(i, i));
    if (sol.constant != 0) w *= Word::single(gen::G1{idx}, to_long(sol.constant));
    for (std::size_t k = 1; k <= sol.cosine.size(); ++k)
      if (sol.cosine[k - 1] != 0) w *= Word::single(gen::G2{idx, static_cast<long>(k)}, to_long(sol.cosine[k - 1]));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& c = b(j, i).coeffs();
      for (std::size_t m = 0; m < c.size(); ++m) {
        if (c[m] == 0) continue;
        const long k = static_cast<long>(m);
        w *= Word::single(gen::G3{static_cast<int>(i) + 1, static_cast<int>(j) + 1, k}, to_long(c[m]));
      }
    }
  return w;
}

/// Residual data of a Lambda reduction.
struct LambdaReduction {
  Word word;          // evaluates to M
  RingMatrix residual;  // F = D*(B - E), self-adjoint
};

/// Given M in Lambda and a word wD whose value shares M's lower-right block D,
/// returns wD * decompose_delta(F) with F = D*(B - E), where E is the upper
/// right block of evaluate(wD).
inline LambdaReduction reduce_lambda_detailed(const BlockMat& m, const Word& witness) {
  const int d = m.modulus(), g = m.genus();
  if (auto verdict = is_member(m, GroupTag::Lambda); !verdict)
    throw DomainError("reduce_lambda: input not in Lambda: " + verdict.reason);
  const BlockMat w = evaluate(witness, d, g);
  if (auto verdict = is_member(w, GroupTag::Lambda); !verdict)
    throw DomainError("reduce_lambda: witness not in Lambda: " + verdict.reason);
  const RingMatrix dd = m.lower_right();
  if (w.lower_right() != dd) throw DomainError("reduce_lambda: witness has a different lower-right block D");

  const RingMatrix f = dd.adjoint() * (m.upper_right() - w.upper_right());
  if (!is_self_adjoint(f)) throw DomainError("reduce_lambda: F = D*(B - E) is not self-adjoint");
  Word out = witness * decompose_delta(f, d, g);
  if (evaluate(out, d, g) != m) throw ArithmeticError("reduce_lambda: output word does not evaluate to M");
  return {std::move(out), f};
}

inline Word reduce_lambda(const BlockMat& m, const Word& witness) {
  return reduce_lambda_detailed(m, witness).word;
}

}  // namespace prym
