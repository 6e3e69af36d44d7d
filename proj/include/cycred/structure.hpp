//
// cycred - cyclically reduced words in free groups
// Copyright (C) 2026 The cycred authors
//
// Licensed under the Apache License, Version 2.0.
//

// Decompositions of conjugates and of cyclically reduced products, and the
// verifier for "u * v is a cyclic permutation of v * u".

#ifndef CYCRED_STRUCTURE_HPP_
#define CYCRED_STRUCTURE_HPP_

#include <cstddef>
#include <variant>
#include <vector>

#include "cycred/identities.hpp"
#include "cycred/reduction.hpp"
#include "cycred/word.hpp"

namespace cycred {

  ////////////////////////////////////////////////////////////////////////
  // Conjugates of a cyclically reduced word
  ////////////////////////////////////////////////////////////////////////

  enum class ComplicBranch { first = 1, second = 2 };

  //! rho(b w b^-1) = b1 w2 w1 b1^-1 with w = w1 w2.
  //!
  //! Branch 1: w b^-1 reduced, w2 != 1 and b = b1 w1^-1 (w^-1)^n.
  //! Branch 2: b w reduced, w1 != 1 and b = b1 w2 w^n.
  struct ComplicWitness {
    Word          w1, w2, b1;
    std::size_t   n      = 0;
    ComplicBranch branch = ComplicBranch::first;
  };

  //! Requires b reduced and w non-empty and cyclically reduced.  When both
  //! branches apply, branch 1 is returned.
  ComplicWitness decompose_conjugate(Word const& b, Word const& w);

  //! As above restricted to one branch; throws PreconditionError if that
  //! branch's reducedness hypothesis fails.
  ComplicWitness decompose_conjugate(Word const&   b,
                                     Word const&   w,
                                     ComplicBranch branch);

  //! Checks every equation of \p x for (b, w) letter by letter.
  bool verify_complic(Word const& b, Word const& w, ComplicWitness const& x);

  ////////////////////////////////////////////////////////////////////////
  // The three shapes of a pair u, v
  ////////////////////////////////////////////////////////////////////////

  //! u = u1 a, v = a^-1 s (u*v) s^-1 u1^-1.
  struct ShirvCase1 {
    Word u1, a, s;
  };

  //! u = t c1 a, v = a^-1 c2 t^-1, u*v = c1 c2, c1 and c2 non-empty.
  struct ShirvCase2 {
    Word t, c1, c2, a;
  };

  //! u = v1^-1 s (u*v) s^-1 a, v = a^-1 v1.
  struct ShirvCase3 {
    Word v1, s, a;
  };

  using ShirvCase = std::variant<ShirvCase1, ShirvCase2, ShirvCase3>;

  //! 1, 2 or 3.
  int case_number(ShirvCase const& c) noexcept;

  //! Requires u, v reduced with u * v != 1.
  ShirvCase classify_shirv(Word const& u, Word const& v);

  //! Checks all equations of \p c, including the ones for rho(uv), rho(vu)
  //! and v * u in case 2.
  bool verify_shirv(Word const& u, Word const& v, ShirvCase const& c);

  ////////////////////////////////////////////////////////////////////////
  // Rotations of u * v as products of rotations of u and v
  ////////////////////////////////////////////////////////////////////////

  //! q = p^-1 r c1 c2 r^-1, p * q = c1 c2 = u * v, d = c2 c1.
  struct Shirv4CaseA {
    Word p, q, r, c1, c2;
  };

  enum class ProductOrder { pq, qp };

  //! d = e1 e2 e3, e2 != 1, e3 e1 != 1.
  //!
  //! order pq: p = e2 b, q = b^-1 e3 e1 and p * q = u * v.
  //! order qp: p = b e2, q = e3 e1 b^-1 and q * p = u * v.
  struct Shirv4CaseB {
    Word         p, q, b, e1, e2, e3;
    ProductOrder order = ProductOrder::pq;
  };

  using Shirv4Witness = std::variant<Shirv4CaseA, Shirv4CaseB>;

  //! Requires u, v reduced, u * v != 1 and d a rotation of u * v.  In
  //! either variant one of p, q is a rotation of u and the other of v.
  Shirv4Witness shirv4_decompose(Word const& u, Word const& v, Word const& d);

  bool verify_shirv4(Word const&          u,
                     Word const&          v,
                     Word const&          d,
                     Shirv4Witness const& x);

  ////////////////////////////////////////////////////////////////////////
  // u * v versus v * u
  ////////////////////////////////////////////////////////////////////////

  struct PuzoReport {
    Word uv_product;  //!< u * v
    Word vu_product;  //!< v * u
    //! rotate(u * v, shift) = v * u.
    std::size_t shift = 0;
    int         shirv_case = 0;

    CancellationTrace uv_trace;
    CancellationTrace vu_trace;
    //! rotate_trace(uv_trace, |v|) and its residual against vu.
    CancellationTrace rotated_trace;
    Word              rotated_residual;

    //! The identity among relations; psi(identity) = 1.
    HElement identity;
    //! 1-based term indices where the conjugator is a cyclic permutation
    //! witness; {2, 4} or {1, 3}.
    std::vector<std::size_t> perm_terms;
    //! Every term satisfies is_cyclic_perm_term.
    bool all_terms_cyclic = false;

    CollapsehInput          collapse_input;
    std::vector<CollapseOp> schedule;
  };

  //! Requires u, v reduced with u * v != 1.
  PuzoReport puzo_witness(Word const& u, Word const& v);

  //! u = alpha u' beta and v = beta^-1 v' alpha^-1, and the cancellation
  //! traces of uv and vu cancel alpha against alpha^-1 and beta against
  //! beta^-1 letter by letter.
  bool verify_common_border(Word const& u,
                            Word const& v,
                            Word const& alpha,
                            Word const& beta);

  //! As above, checking the given traces instead of freshly computed ones.
  bool verify_common_border(Word const&              u,
                            Word const&              v,
                            Word const&              alpha,
                            Word const&              beta,
                            CancellationTrace const& uv_trace,
                            CancellationTrace const& vu_trace);

  //! rho(a) is a suffix of rho(r), or rho(a)^-1 a prefix of it, so that
  //! rho(a r a^-1) is a cyclic permutation of rho(r).
  bool is_cyclic_perm_term(Word const& a, Word const& r);

}  // namespace cycred

#endif  // CYCRED_STRUCTURE_HPP_
