//
// cycred - cyclically reduced words in free groups
// Copyright (C) 2026 The cycred authors
//
// Licensed under the Apache License, Version 2.0.
//

#include "cycred/structure.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "cycred/error.hpp"

namespace cycred {

  namespace {

    void require_reduced_pair(Word const& u, Word const& v, char const* who) {
      if (!is_reduced(u) || !is_reduced(v)) {
        throw PreconditionError(std::string(who) + " requires reduced words");
      }
      if (cyc_product(u, v).empty()) {
        throw PreconditionError(std::string(who) + " requires u * v != 1");
      }
    }

    // Branch 1 for (b, w): b ends with w1^-1 (w^-1)^n, read backwards as
    // w_1^-1, w_2^-1, ... cyclically.
    ComplicWitness complic_first(Word const& b, Word const& w) {
      std::size_t const m = w.size();
      std::size_t       L = 0;
      while (L < b.size() && b[b.size() - 1 - L] == w[L % m].inverse()) {
        ++L;
      }
      ComplicWitness x;
      x.n      = L / m;
      x.w1     = w.prefix(L % m);
      x.w2     = w.subword(L % m);
      x.b1     = b.prefix(b.size() - L);
      x.branch = ComplicBranch::first;
      return x;
    }

    void require_complic(Word const& b, Word const& w) {
      if (!is_reduced(b)) {
        throw PreconditionError("decompose_conjugate requires b reduced");
      }
      if (w.empty() || !is_cyclically_reduced(w)) {
        throw PreconditionError("decompose_conjugate requires w non-empty "
                                "and cyclically reduced");
      }
    }

    bool ends_with_pair(CancellationTrace const& trace,
                        std::size_t              i,
                        std::size_t              j) {
      if (i > j) {
        std::swap(i, j);
      }
      return std::any_of(
          trace.events.begin(), trace.events.end(), [&](auto const& e) {
            return e.left_pos == i && e.right_pos == j;
          });
    }

    struct IdentityParts {
      HElement                 identity;
      std::vector<std::size_t> perm_terms;
      CollapsehInput           collapse;
    };

    IdentityParts case1_identity(Word const&       u,
                                 Word const&       v,
                                 ShirvCase1 const& c) {
      Word const uv = cyc_product(u, v);
      // rho(vu) = b uv b^-1 with b = a^-1 s; branch 2 has w1 != 1.
      Word const b = concat(inverse(c.a), c.s);
      auto const x = decompose_conjugate(b, uv, ComplicBranch::second);

      Word const alpha = reduced_form(concat(inverse(c.s), inverse(c.u1)));
      Word const gamma = reduced_form(concat(inverse(x.w2), inverse(x.b1)));
      // psi = u * v on the left; v * u = rho(b1^-1 vu b1) on the right, and
      // u * v = w2^-1 (v * u) w2.
      HElement const lhs = h_from_product({{alpha, u}, {alpha, v}});
      HElement const rhs
          = h_from_product({{inverse(x.b1), v}, {inverse(x.b1), u}});

      IdentityParts parts;
      parts.identity   = identity_from_equivalence(lhs, rhs, inverse(x.w2));
      parts.perm_terms = {2, 4};
      parts.collapse   = {alpha,
                          alpha,
                          gamma,
                          gamma,
                          u,
                          v,
                          uv,
                          reduced_form(concat({alpha, x.b1, x.w2})),
                          x.n};
      return parts;
    }

    IdentityParts case2_identity(Word const&       u,
                                 Word const&       v,
                                 ShirvCase2 const& c) {
      Word const     t_inv = inverse(c.t);
      Word const     c1a   = reduced_form(concat(c.c1, c.a));
      HElement const lhs   = h_from_product({{t_inv, u}, {t_inv, v}});
      HElement const rhs   = h_from_product({{c.a, v}, {c.a, u}});

      IdentityParts parts;
      parts.identity   = identity_from_equivalence(lhs, rhs, c.c1);
      parts.perm_terms = {1, 3};
      parts.collapse   = {t_inv,
                          t_inv,
                          c1a,
                          c1a,
                          u,
                          v,
                          concat(c.c1, c.c2),
                          reduced_form(concat(
                              {t_inv, inverse(c.a), inverse(c.c1)})),
                          0};
      return parts;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Complic
  ////////////////////////////////////////////////////////////////////////

  ComplicWitness decompose_conjugate(Word const& b, Word const& w) {
    require_complic(b, w);
    if (is_reduced(concat(w, inverse(b)))) {
      return complic_first(b, w);
    }
    return decompose_conjugate(b, w, ComplicBranch::second);
  }

  ComplicWitness decompose_conjugate(Word const&   b,
                                     Word const&   w,
                                     ComplicBranch branch) {
    require_complic(b, w);
    if (branch == ComplicBranch::first) {
      if (!is_reduced(concat(w, inverse(b)))) {
        throw PreconditionError("complic branch 1 requires w b^-1 reduced");
      }
      return complic_first(b, w);
    }
    if (!is_reduced(concat(b, w))) {
      throw PreconditionError("complic branch 2 requires b w reduced");
    }
    // Branch 1 for (b, w^-1), read back through inversion.
    auto const     y = complic_first(b, inverse(w));
    ComplicWitness x;
    x.w1     = inverse(y.w2);
    x.w2     = inverse(y.w1);
    x.b1     = y.b1;
    x.n      = y.n;
    x.branch = ComplicBranch::second;
    return x;
  }

  bool verify_complic(Word const& b, Word const& w, ComplicWitness const& x) {
    if (concat(x.w1, x.w2) != w) {
      return false;
    }
    auto const n = static_cast<std::int64_t>(x.n);
    if (reduced_form(concat({b, w, inverse(b)}))
        != concat({x.b1, x.w2, x.w1, inverse(x.b1)})) {
      return false;
    }
    if (x.branch == ComplicBranch::first) {
      return is_reduced(concat(w, inverse(b))) && !x.w2.empty()
             && b == concat({x.b1, inverse(x.w1), power(w, -n)});
    }
    return is_reduced(concat(b, w)) && !x.w1.empty()
           && b == concat({x.b1, x.w2, power(w, n)});
  }

  ////////////////////////////////////////////////////////////////////////
  // Shirv
  ////////////////////////////////////////////////////////////////////////

  int case_number(ShirvCase const& c) noexcept {
    return static_cast<int>(c.index()) + 1;
  }

  ShirvCase classify_shirv(Word const& u, Word const& v) {
    require_reduced_pair(u, v, "classify_shirv");
    auto const [u1, a, v1] = max_cancellation(u, v);
    auto const d           = cyc_reduce(concat(u1, v1)).decomposition;
    Word const& t          = d.conjugator;
    Word const& c          = d.core;

    if (u1.size() <= t.size()) {
      return ShirvCase1{u1, a, t.subword(u1.size())};
    } else if (u1.size() < t.size() + c.size()) {
      Word const c1 = u1.subword(t.size());
      return ShirvCase2{t, c1, c.subword(c1.size()), a};
    }
    // u1 = t c s^-1 and t^-1 = s^-1 v1.
    return ShirvCase3{v1, inverse(u1.subword(t.size() + c.size())), a};
  }

  bool verify_shirv(Word const& u, Word const& v, ShirvCase const& sc) {
    Word const uv     = cyc_product(u, v);
    Word const rho_uv = reduced_product(u, v);
    if (auto const* c = std::get_if<ShirvCase1>(&sc)) {
      return u == concat(c->u1, c->a)
             && v
                    == concat({inverse(c->a), c->s, uv, inverse(c->s),
                               inverse(c->u1)})
             && rho_uv
                    == concat({c->u1, c->s, uv, inverse(c->s),
                               inverse(c->u1)});
    } else if (auto const* c = std::get_if<ShirvCase2>(&sc)) {
      return !c->c1.empty() && !c->c2.empty() && uv == concat(c->c1, c->c2)
             && u == concat({c->t, c->c1, c->a})
             && v == concat({inverse(c->a), c->c2, inverse(c->t)})
             && rho_uv == concat({c->t, c->c1, c->c2, inverse(c->t)})
             && reduced_product(v, u)
                    == concat({inverse(c->a), c->c2, c->c1, c->a})
             && cyc_product(v, u) == concat(c->c2, c->c1);
    }
    auto const& c = std::get<ShirvCase3>(sc);
    return u
               == concat({inverse(c.v1), c.s, uv, inverse(c.s), c.a})
           && v == concat(inverse(c.a), c.v1)
           && rho_uv
                  == concat({inverse(c.v1), c.s, uv, inverse(c.s), c.v1});
  }

  ////////////////////////////////////////////////////////////////////////
  // Shirv4
  ////////////////////////////////////////////////////////////////////////

  Shirv4Witness shirv4_decompose(Word const& u, Word const& v, Word const& d) {
    require_reduced_pair(u, v, "shirv4_decompose");
    Word const uv = cyc_product(u, v);
    auto const k  = cyclic_shift_between(uv, d);
    if (!k) {
      throw PreconditionError("shirv4_decompose requires d to be a cyclic "
                              "permutation of u * v");
    }
    ShirvCase const sc = classify_shirv(u, v);

    auto case_a = [&](Word p, Word q, Word r) -> Shirv4Witness {
      // d = c2 c1 with u * v = c1 c2; d = u * v gives c2 = 1.
      std::size_t const split = *k == 0 ? uv.size() : *k;
      return Shirv4CaseA{std::move(p),
                         std::move(q),
                         std::move(r),
                         uv.prefix(split),
                         uv.subword(split)};
    };

    if (auto const* c = std::get_if<ShirvCase1>(&sc)) {
      Word p = concat(c->a, c->u1);
      Word q = concat({inverse(c->u1), inverse(c->a), c->s, uv, inverse(c->s)});
      return case_a(std::move(p), std::move(q), c->s);
    } else if (auto const* c = std::get_if<ShirvCase3>(&sc)) {
      Word p = concat(c->v1, inverse(c->a));
      Word q = concat({c->a, inverse(c->v1), c->s, uv, inverse(c->s)});
      return case_a(std::move(p), std::move(q), c->s);
    }

    auto const& c  = std::get<ShirvCase2>(sc);
    Word const  at = concat(c.a, c.t);
    if (*k == 0) {
      // d = u * v: e1 = 1.
      return Shirv4CaseB{concat(c.c1, at),
                         concat(inverse(at), c.c2),
                         at,
                         Word(uv.alphabet()),
                         c.c1,
                         c.c2,
                         ProductOrder::pq};
    }
    // u * v = d1 d2 and d = d2 d1.
    Word const d1 = uv.prefix(*k);
    Word const d2 = uv.subword(*k);
    if (d1.size() <= c.c1.size()) {
      // c1 = d1 x, d2 = x c2.
      Word const x = c.c1.subword(d1.size());
      Word const b = inverse(at);
      return Shirv4CaseB{concat(b, c.c2),
                         concat({d1, x, inverse(b)}),
                         b,
                         x,
                         c.c2,
                         d1,
                         ProductOrder::qp};
    }
    // d1 = c1 x, c2 = x d2.
    Word const x = d1.subword(c.c1.size());
    return Shirv4CaseB{concat(c.c1, at),
                       concat({inverse(at), x, d2}),
                       at,
                       d2,
                       c.c1,
                       x,
                       ProductOrder::pq};
  }

  bool verify_shirv4(Word const&          u,
                     Word const&          v,
                     Word const&          d,
                     Shirv4Witness const& x) {
    Word const uv      = cyc_product(u, v);
    auto const rotates = [&](Word const& p, Word const& q) {
      return (is_cyclic_permutation(p, u) && is_cyclic_permutation(q, v))
             || (is_cyclic_permutation(p, v) && is_cyclic_permutation(q, u));
    };
    if (auto const* a = std::get_if<Shirv4CaseA>(&x)) {
      return a->q == concat({inverse(a->p), a->r, a->c1, a->c2, inverse(a->r)})
             && cyc_product(a->p, a->q) == uv && concat(a->c1, a->c2) == uv
             && d == concat(a->c2, a->c1) && rotates(a->p, a->q);
    }
    auto const& b = std::get<Shirv4CaseB>(x);
    bool const shape
        = b.order == ProductOrder::pq
              ? b.p == concat(b.e2, b.b)
                    && b.q == concat({inverse(b.b), b.e3, b.e1})
                    && cyc_product(b.p, b.q) == uv
              : b.p == concat(b.b, b.e2)
                    && b.q == concat({b.e3, b.e1, inverse(b.b)})
                    && cyc_product(b.q, b.p) == uv;
    return shape && d == concat({b.e1, b.e2, b.e3}) && !b.e2.empty()
           && !concat(b.e3, b.e1).empty() && rotates(b.p, b.q);
  }

  ////////////////////////////////////////////////////////////////////////
  // Puzo
  ////////////////////////////////////////////////////////////////////////

  PuzoReport puzo_witness(Word const& u, Word const& v) {
    require_reduced_pair(u, v, "puzo_witness");
    PuzoReport report;
    Word const uv = concat(u, v);
    Word const vu = concat(v, u);

    auto uv_red = cyc_reduce(uv);
    auto vu_red = cyc_reduce(vu);
    report.uv_product = uv_red.decomposition.core;
    report.vu_product = vu_red.decomposition.core;
    report.uv_trace   = std::move(uv_red.trace);
    report.vu_trace   = std::move(vu_red.trace);

    auto const shift
        = cyclic_shift_between(report.uv_product, report.vu_product);
    if (!shift) {
      throw ValidationError("u * v is not a cyclic permutation of v * u");
    }
    report.shift = *shift;

    report.rotated_trace
        = rotate_trace(report.uv_trace, static_cast<std::int64_t>(v.size()));
    report.rotated_residual = replay_trace(vu, report.rotated_trace);

    ShirvCase const sc = classify_shirv(u, v);
    report.shirv_case  = case_number(sc);
    IdentityParts parts;
    if (auto const* c = std::get_if<ShirvCase1>(&sc)) {
      parts = case1_identity(u, v, *c);
    } else if (auto const* c = std::get_if<ShirvCase2>(&sc)) {
      parts = case2_identity(u, v, *c);
    } else {
      // The pair (v^-1, u^-1) is in case 1 with the same a.
      Word const vi = inverse(v);
      Word const ui = inverse(u);
      parts = case1_identity(vi, ui, std::get<ShirvCase1>(classify_shirv(vi, ui)));
    }
    report.identity       = std::move(parts.identity);
    report.perm_terms     = std::move(parts.perm_terms);
    report.collapse_input = std::move(parts.collapse);
    report.schedule       = collapse_schedule(report.collapse_input);
    report.all_terms_cyclic
        = std::all_of(report.identity.terms.begin(),
                      report.identity.terms.end(),
                      [](HTerm const& t) {
                        return is_cyclic_perm_term(t.conjugator, t.relator);
                      });
    return report;
  }

  bool verify_common_border(Word const& u,
                            Word const& v,
                            Word const& alpha,
                            Word const& beta) {
    return verify_common_border(u,
                                v,
                                alpha,
                                beta,
                                cyc_reduce(concat(u, v)).trace,
                                cyc_reduce(concat(v, u)).trace);
  }

  bool verify_common_border(Word const&              u,
                            Word const&              v,
                            Word const&              alpha,
                            Word const&              beta,
                            CancellationTrace const& uv_trace,
                            CancellationTrace const& vu_trace) {
    std::size_t const a = alpha.size(), b = beta.size();
    std::size_t const m = u.size(), n = v.size();
    if (a + b > m || a + b > n || !is_prefix(alpha, u) || !is_suffix(beta, u)
        || !is_prefix(inverse(beta), v) || !is_suffix(inverse(alpha), v)) {
      throw PreconditionError("verify_common_border requires u = alpha u' beta "
                              "and v = beta^-1 v' alpha^-1");
    }
    if (uv_trace.original_length != m + n
        || vu_trace.original_length != m + n) {
      return false;
    }
    for (std::size_t i = 0; i < b; ++i) {
      // beta / beta^-1 meet at the junction of uv, and at both ends of vu.
      if (!ends_with_pair(uv_trace, m - 1 - i, m + i)
          || !ends_with_pair(vu_trace, i, m + n - 1 - i)) {
        return false;
      }
    }
    for (std::size_t i = 0; i < a; ++i) {
      // alpha / alpha^-1 meet at both ends of uv, and at the junction of vu.
      if (!ends_with_pair(uv_trace, i, m + n - 1 - i)
          || !ends_with_pair(vu_trace, n - 1 - i, n + i)) {
        return false;
      }
    }
    return true;
  }

  bool is_cyclic_perm_term(Word const& a, Word const& r) {
    Word const ra = reduced_form(a);
    Word const rr = reduced_form(r);
    return is_suffix(ra, rr) || is_prefix(inverse(ra), rr);
  }

}  // namespace cycred
