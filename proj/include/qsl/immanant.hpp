#pragma once

// Quantum super immanants: the defining bra-ket formula over a Hecke character,
// the independent primitive-idempotent evaluation, normalized immanant sums,
// and the fat-hook vanishing criterion.

#include <stdexcept>

#include "qsl/aqmat.hpp"
#include "qsl/hecke.hpp"
#include "qsl/superlinear.hpp"

namespace qsl {

struct ImmanantQuery {
  Partition lambda;
  MultiIndex I, J;
  SuperCfg cfg;
};

/// Whether lambda lies in the fat hook H(m,n;r), i.e. lambda_{m+1} <= n.
inline bool in_fat_hook(const Partition& lambda, const SuperCfg& cfg) {
  return lambda.fits_hook(cfg.m, cfg.n);
}

namespace detail {

/// (-1)^{sum_k i_k j_k} <I| op |J> for an already-composed operator table.
inline NCPoly immanant_entry(const AqOp& op, const MultiIndex& I,
                             const MultiIndex& J) {
  const SuperCfg& cfg = op.cfg();
  int s = 0;
  for (std::size_t k = 0; k < I.size(); ++k)
    s += cfg.parity(I[k]) * cfg.parity(J[k]);
  NCPoly v = op.bra_ket(I, J);
  return (s & 1) ? -v : v;
}

/// chi X_1 ... X_r as one algebra-valued operator table.
inline AqOp character_operator(const HeckeElt& chi, const SuperCfg& cfg) {
  return compose(hecke_to_tensor(chi, cfg), x_operator(cfg, chi.r()));
}

}  // namespace detail

/// Immanant attached to an arbitrary Hecke algebra element h:
/// (-1)^{sum_k i_k j_k} <I| h X_1 ... X_r |J>.
inline NCPoly immanant(const HeckeElt& h, const MultiIndex& I, const MultiIndex& J,
                       const SuperCfg& cfg) {
  if (I.size() != static_cast<std::size_t>(h.r()) || I.size() != J.size())
    throw std::invalid_argument("immanant index length mismatch");
  return detail::immanant_entry(detail::character_operator(h, cfg), I, J);
}

/// Immanant of the submatrix X^I_J for the irreducible character of lambda.
inline NCPoly immanant(const ImmanantQuery& qr) {
  return immanant(character_element(qr.lambda), qr.I, qr.J, qr.cfg);
}

/// Independent evaluation through a single primitive idempotent:
/// Imm(X_I) = alpha_{q^2}(I) (-1)^{|I|} / alpha(I) * sum_sigma
///            <I_sigma| E_T X_1...X_r |I_sigma>,
/// for non-decreasing I.  The tableau defaults to the row-reading one; the
/// result must not depend on that choice.
inline NCPoly immanant_via_idempotent(const Partition& lambda, const MultiIndex& I,
                                      const SuperCfg& cfg,
                                      const StandardTableau* tableau = nullptr) {
  int r = lambda.size();
  if (I.size() != static_cast<std::size_t>(r))
    throw std::invalid_argument("immanant index length mismatch");
  for (std::size_t k = 0; k + 1 < I.size(); ++k)
    if (I[k] > I[k + 1])
      throw std::invalid_argument("index multiset must be non-decreasing");
  StandardTableau row = row_reading_tableau(lambda);
  const StandardTableau& tab = tableau ? *tableau : row;
  AqOp op = detail::character_operator(primitive_idempotent(tab), cfg);
  NCPoly sum(cfg);
  for (const Perm& sigma : symmetric_group(r)) {
    MultiIndex Is(I.size());
    for (std::size_t a = 0; a < I.size(); ++a)
      Is[a] = I[static_cast<std::size_t>(sigma(static_cast<int>(a)))];
    sum += op.bra_ket(Is, Is);
  }
  QScalar scale = alpha_q2(I, cfg) / QScalar(alpha_factorial(I, cfg));
  if (parity_sum(I, cfg)) scale = -scale;
  return scale * sum;
}

/// Normalized immanant sum sum_I Imm(X_I) / alpha_{q^2}(I) over non-decreasing
/// index multisets.
inline NCPoly immanant_sum(const Partition& lambda, const SuperCfg& cfg) {
  AqOp op = detail::character_operator(character_element(lambda), cfg);
  NCPoly out(cfg);
  for (const MultiIndex& I : nondecreasing_indices(cfg, lambda.size()))
    out += alpha_q2(I, cfg).inverse() * detail::immanant_entry(op, I, I);
  return out;
}

/// The same sum computed as a full supertrace str_{1..r}(E_T X_1 ... X_r) of a
/// bare primitive idempotent — the second route of the two-path check.
inline NCPoly immanant_sum_supertrace(const Partition& lambda, const SuperCfg& cfg,
                                      const StandardTableau* tableau = nullptr) {
  StandardTableau row = row_reading_tableau(lambda);
  const StandardTableau& tab = tableau ? *tableau : row;
  return supertrace(detail::character_operator(primitive_idempotent(tab), cfg));
}

}  // namespace qsl
