//
// cycred - cyclically reduced words in free groups
// Copyright (C) 2026 The cycred authors
//
// Licensed under the Apache License, Version 2.0.
//

#include "cycred/identities.hpp"

#include <algorithm>
#include <string>

#include "cycred/reduction.hpp"

namespace cycred {

  namespace {

    Word conjugated(Word const& a, Word const& r) {
      return reduced_form(concat({a, r, inverse(a)}));
    }

    [[noreturn]] void fail(OpFailure reason, std::string const& what) {
      throw CollapseError(0, reason, what);
    }

    std::size_t checked_pos(std::size_t pos, std::size_t size) {
      if (pos < 1 || pos + 1 > size) {
        fail(OpFailure::position,
             "position " + std::to_string(pos)
                 + " does not address two adjacent terms of a "
                 + std::to_string(size) + "-term element");
      }
      return pos - 1;
    }

    // Shared by both levels; a and b are null at the phi level.
    void check_deletion(Deletion const& d,
                        Word const&     left_value,
                        Word const&     right_value,
                        Word const&     r,
                        Word const&     s,
                        Word const*     a,
                        Word const*     b) {
      if (!reduced_product(left_value, right_value).empty()) {
        fail(OpFailure::product_not_trivial,
             "deletion at position " + std::to_string(d.pos)
                 + ": the two terms do not multiply to 1");
      }
      if (d.kind == DeletionKind::general) {
        return;
      }
      if (inverse(r) != s) {
        fail(OpFailure::relators_not_inverse,
             std::string(to_string(d.kind)) + " deletion at position "
                 + std::to_string(d.pos) + ": relators are not inverse");
      }
      if (d.kind == DeletionKind::peiffer && a != nullptr && *a != *b) {
        fail(OpFailure::conjugators_differ,
             "peiffer deletion at position " + std::to_string(d.pos)
                 + ": conjugators differ");
      }
    }

    template <typename Element>
    Element execute_impl(Element g, std::span<CollapseOp const> ops) {
      for (std::size_t i = 0; i < ops.size(); ++i) {
        try {
          g = apply_op(g, ops[i]);
        } catch (CollapseError const& e) {
          throw CollapseError(i,
                              e.reason(),
                              "operation " + std::to_string(i) + ": "
                                  + e.what());
        }
      }
      return g;
    }

    std::size_t period(Word const& w) {
      for (std::size_t d = 1; d < w.size(); ++d) {
        if (w.size() % d == 0 && rotate(w, static_cast<std::int64_t>(d)) == w) {
          return d;
        }
      }
      return w.size();
    }

  }  // namespace

  char const* to_string(DeletionKind kind) noexcept {
    switch (kind) {
      case DeletionKind::general:
        return "general";
      case DeletionKind::semi_peiffer:
        return "semiPeiffer";
      case DeletionKind::peiffer:
        return "peiffer";
    }
    return "";
  }

  char const* to_string(OpFailure reason) noexcept {
    switch (reason) {
      case OpFailure::position:
        return "position";
      case OpFailure::product_not_trivial:
        return "product_not_trivial";
      case OpFailure::relators_not_inverse:
        return "relators_not_inverse";
      case OpFailure::conjugators_differ:
        return "conjugators_differ";
    }
    return "";
  }

  HElement h_from_product(std::vector<std::pair<Word, Word>> const& terms) {
    HElement h;
    h.terms.reserve(terms.size());
    for (auto const& [a, r] : terms) {
      h.terms.push_back({reduced_form(a), reduced_form(r)});
    }
    return h;
  }

  HElement h_from_cyc_product(Word const& u, Word const& v) {
    Word const alpha
        = inverse(cyc_reduce(concat(u, v)).decomposition.conjugator);
    return h_from_product({{alpha, u}, {alpha, v}});
  }

  Word psi(HElement const& h) {
    Word result;
    for (auto const& [a, r] : h.terms) {
      result = reduced_form(concat({result, a, r, inverse(a)}));
    }
    return result;
  }

  PhiElement phi(HElement const& h) {
    PhiElement g;
    g.terms.reserve(h.size());
    for (auto const& [a, r] : h.terms) {
      g.terms.push_back({conjugated(a, r), r});
    }
    return g;
  }

  Word psi(PhiElement const& g) {
    Word result;
    for (auto const& t : g.terms) {
      result = reduced_product(result, t.conjugated);
    }
    return result;
  }

  HElement apply_op(HElement const& h, CollapseOp const& op) {
    HElement result = h;
    auto&    t      = result.terms;
    if (auto const* x = std::get_if<ExchangeA>(&op)) {
      auto const i      = checked_pos(x->pos, t.size());
      auto const [a, r] = h.terms[i];
      auto const [b, s] = h.terms[i + 1];
      t[i]              = {b, s};
      t[i + 1] = {reduced_form(concat({b, inverse(s), inverse(b), a})), r};
    } else if (auto const* x = std::get_if<ExchangeB>(&op)) {
      auto const i      = checked_pos(x->pos, t.size());
      auto const [a, r] = h.terms[i];
      auto const [b, s] = h.terms[i + 1];
      t[i]              = {reduced_form(concat({a, r, inverse(a), b})), s};
      t[i + 1]          = {a, r};
    } else {
      auto const& d = std::get<Deletion>(op);
      auto const  i = checked_pos(d.pos, t.size());
      auto const& [a, r] = h.terms[i];
      auto const& [b, s] = h.terms[i + 1];
      check_deletion(d, conjugated(a, r), conjugated(b, s), r, s, &a, &b);
      t.erase(t.begin() + i, t.begin() + i + 2);
    }
    return result;
  }

  PhiElement apply_op(PhiElement const& g, CollapseOp const& op) {
    PhiElement result = g;
    auto&      t      = result.terms;
    if (auto const* x = std::get_if<ExchangeA>(&op)) {
      auto const i = checked_pos(x->pos, t.size());
      auto const [alpha, r] = g.terms[i];
      auto const [beta, s]  = g.terms[i + 1];
      t[i]     = {beta, s};
      t[i + 1] = {conjugated(inverse(beta), alpha), r};
    } else if (auto const* x = std::get_if<ExchangeB>(&op)) {
      auto const i = checked_pos(x->pos, t.size());
      auto const [alpha, r] = g.terms[i];
      auto const [beta, s]  = g.terms[i + 1];
      t[i]     = {conjugated(alpha, beta), s};
      t[i + 1] = {alpha, r};
    } else {
      // Conjugators are gone at this level, so Peiffer means semi-Peiffer.
      auto const& d = std::get<Deletion>(op);
      auto const  i = checked_pos(d.pos, t.size());
      auto const& [alpha, r] = g.terms[i];
      auto const& [beta, s]  = g.terms[i + 1];
      check_deletion(d, alpha, beta, r, s, nullptr, nullptr);
      t.erase(t.begin() + i, t.begin() + i + 2);
    }
    return result;
  }

  HElement execute(HElement h, std::span<CollapseOp const> ops) {
    return execute_impl(std::move(h), ops);
  }

  PhiElement execute(PhiElement g, std::span<CollapseOp const> ops) {
    return execute_impl(std::move(g), ops);
  }

  HElement conjugate(HElement const& h, Word const& c) {
    HElement result = h;
    for (auto& t : result.terms) {
      t.conjugator = reduced_product(c, t.conjugator);
    }
    return result;
  }

  HElement concat(HElement const& h, HElement const& k) {
    HElement result = h;
    result.terms.insert(result.terms.end(), k.terms.begin(), k.terms.end());
    return result;
  }

  HElement inverse(HElement const& h) {
    HElement result;
    result.terms.reserve(h.size());
    for (auto it = h.terms.rbegin(); it != h.terms.rend(); ++it) {
      result.terms.push_back({it->conjugator, inverse(it->relator)});
    }
    return result;
  }

  HElement identity_from_equivalence(HElement const& h,
                                     HElement const& h2,
                                     Word const&     c) {
    if (psi(h) != conjugated(c, psi(h2))) {
      throw PreconditionError(
          "identity_from_equivalence requires psi(h) = rho(c psi(h2) c^-1)");
    }
    return concat(h, inverse(conjugate(h2, c)));
  }

  void check_collapseh_input(CollapsehInput const& in) {
    auto const n  = static_cast<std::int64_t>(in.n);
    auto const pn = [&](std::int64_t k) { return power(in.p, k); };
    struct Check {
      char const* what;
      Word        lhs;
      Word        rhs;
    };
    Check const checks[] = {
        {"rho(alpha u alpha^-1) = rho(p^-n q^-1)",
         conjugated(in.alpha, in.u),
         reduced_form(concat(pn(-n), inverse(in.q)))},
        {"rho(beta v beta^-1) = rho(q p^(n+1))",
         conjugated(in.beta, in.v),
         reduced_form(concat(in.q, pn(n + 1)))},
        {"rho(gamma u^-1 gamma^-1) = rho(p^n q)",
         conjugated(in.gamma, inverse(in.u)),
         reduced_form(concat(pn(n), in.q))},
        {"rho(delta v^-1 delta^-1) = rho(q^-1 p^-(n+1))",
         conjugated(in.delta, inverse(in.v)),
         reduced_form(concat(inverse(in.q), pn(-n - 1)))}};
    for (auto const& c : checks) {
      if (c.lhs != c.rhs) {
        throw PreconditionError(std::string("collapse input violates ")
                                + c.what);
      }
    }
  }

  HElement collapseh_element(CollapsehInput const& in) {
    return h_from_product({{in.alpha, in.u},
                           {in.beta, in.v},
                           {in.gamma, inverse(in.u)},
                           {in.delta, inverse(in.v)}});
  }

  std::vector<CollapseOp> collapse_schedule(CollapsehInput const& input) {
    check_collapseh_input(input);
    std::vector<CollapseOp> ops;
    ops.reserve(2 * input.n + 3);
    for (std::size_t i = 0; i < input.n; ++i) {
      ops.emplace_back(ExchangeB{1});
      ops.emplace_back(ExchangeB{3});
    }
    ops.emplace_back(ExchangeA{2});

    HElement g = execute(collapseh_element(input), ops);
    // Delete terms 3, 4 first so that position 1 still names terms 1, 2.
    for (std::size_t pos : {std::size_t(3), std::size_t(1)}) {
      bool done = false;
      for (auto kind : {DeletionKind::peiffer, DeletionKind::semi_peiffer}) {
        try {
          g = apply_op(g, Deletion{pos, kind});
        } catch (CollapseError const&) {
          continue;
        }
        ops.emplace_back(Deletion{pos, kind});
        done = true;
        break;
      }
      if (!done) {
        throw ValidationError("collapse schedule: no semi-Peiffer deletion at "
                              "position "
                              + std::to_string(pos));
      }
    }
    return ops;
  }

  bool is_irredundant(std::span<Word const> relators) {
    std::vector<Word> forms;
    forms.reserve(relators.size());
    for (auto const& r : relators) {
      forms.push_back(canonical_rotation(cyclically_reduced_form(r)).first);
    }
    std::sort(forms.begin(), forms.end());
    return std::adjacent_find(forms.begin(), forms.end()) == forms.end();
  }

  bool is_proper_power(Word const& w) {
    Word const c = cyclically_reduced_form(w);
    return !c.empty() && period(c) < c.size();
  }

  bool is_primary(std::span<Word const> relators) {
    return std::none_of(relators.begin(), relators.end(), [](Word const& r) {
      return is_proper_power(r);
    });
  }

}  // namespace cycred
