//
// cycred - cyclically reduced words in free groups
// Copyright (C) 2026 The cycred authors
//
// Licensed under the Apache License, Version 2.0.
//

// Sequences of conjugated relators (the monoid H), the maps psi and phi,
// exchanges, deletions, and the explicit collapse of four-term identities.

#ifndef CYCRED_IDENTITIES_HPP_
#define CYCRED_IDENTITIES_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cycred/error.hpp"
#include "cycred/word.hpp"

namespace cycred {

  //! The formal product a r a^-1.
  struct HTerm {
    Word conjugator;
    Word relator;

    friend bool operator==(HTerm const&, HTerm const&) = default;
  };

  //! A sequence of conjugated relators; the empty sequence is trivial.
  //!
  //! Conjugators and relators are kept freely reduced.
  struct HElement {
    std::vector<HTerm> terms;

    [[nodiscard]] bool trivial() const noexcept {
      return terms.empty();
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return terms.size();
    }

    friend bool operator==(HElement const&, HElement const&) = default;
  };

  //! The image of a term under phi: (rho(a r a^-1), r).
  struct PhiTerm {
    Word conjugated;
    Word relator;

    friend bool operator==(PhiTerm const&, PhiTerm const&) = default;
  };

  struct PhiElement {
    std::vector<PhiTerm> terms;

    friend bool operator==(PhiElement const&, PhiElement const&) = default;
  };

  enum class DeletionKind { general, semi_peiffer, peiffer };

  //! Positions are 1-based: position i acts on terms i and i + 1.
  struct ExchangeA {
    std::size_t pos;
    friend bool operator==(ExchangeA const&, ExchangeA const&) = default;
  };

  struct ExchangeB {
    std::size_t pos;
    friend bool operator==(ExchangeB const&, ExchangeB const&) = default;
  };

  struct Deletion {
    std::size_t  pos;
    DeletionKind kind = DeletionKind::general;
    friend bool  operator==(Deletion const&, Deletion const&) = default;
  };

  using CollapseOp = std::variant<ExchangeA, ExchangeB, Deletion>;

  //! Why an operation could not be applied.
  enum class OpFailure {
    position,              //!< pos does not address two adjacent terms
    product_not_trivial,   //!< the two terms do not multiply to 1
    relators_not_inverse,  //!< semi-Peiffer needs r^-1 = s
    conjugators_differ     //!< Peiffer needs equal conjugators
  };

  //! An operation in a sequence failed; \c index is its place in the
  //! sequence (0-based) and \c reason says which check failed.
  class CollapseError : public ValidationError {
   public:
    CollapseError(std::size_t index, OpFailure reason, std::string const& what)
        : ValidationError(what), _index(index), _reason(reason) {}

    [[nodiscard]] std::size_t index() const noexcept {
      return _index;
    }

    [[nodiscard]] OpFailure reason() const noexcept {
      return _reason;
    }

   private:
    std::size_t _index;
    OpFailure   _reason;
  };

  char const* to_string(DeletionKind kind) noexcept;
  char const* to_string(OpFailure reason) noexcept;

  //! Builds an element from (conjugator, relator) pairs, reducing both.
  HElement h_from_product(std::vector<std::pair<Word, Word>> const& terms);

  //! The element [(alpha, u), (alpha, v)] with psi equal to u * v, where
  //! alpha is the inverse of the conjugator of rho(uv).
  HElement h_from_cyc_product(Word const& u, Word const& v);

  //! rho(a1 r1 a1^-1 ... am rm am^-1).
  Word psi(HElement const& h);

  PhiElement phi(HElement const& h);
  Word       psi(PhiElement const& g);

  //! Applies \p op; throws CollapseError (with index 0) if it is invalid.
  HElement   apply_op(HElement const& h, CollapseOp const& op);
  PhiElement apply_op(PhiElement const& g, CollapseOp const& op);

  //! Applies \p ops in order; a failure reports the offending index.
  HElement   execute(HElement h, std::span<CollapseOp const> ops);
  PhiElement execute(PhiElement g, std::span<CollapseOp const> ops);

  //! Every conjugator a becomes rho(c a).
  HElement conjugate(HElement const& h, Word const& c);

  HElement concat(HElement const& h, HElement const& k);

  //! The reversed sequence with every relator inverted; psi(inverse(h)) is
  //! psi(h)^-1.
  HElement inverse(HElement const& h);

  //! Given psi(h) = rho(c psi(h2) c^-1), the normal form identity
  //! h (c h2)^-1, whose psi is 1.  Throws PreconditionError otherwise.
  HElement identity_from_equivalence(HElement const& h,
                                     HElement const& h2,
                                     Word const&     c);

  //! Data of a four-term identity [(alpha,u),(beta,v),(gamma,u^-1),
  //! (delta,v^-1)] whose conjugated terms are p^-n q^-1, q p^(n+1), p^n q and
  //! q^-1 p^-(n+1).
  struct CollapsehInput {
    Word        alpha, beta, gamma, delta;
    Word        u, v, p, q;
    std::size_t n = 0;
  };

  //! Throws PreconditionError naming the first failing equation.
  void check_collapseh_input(CollapsehInput const& input);

  //! [(alpha,u),(beta,v),(gamma,u^-1),(delta,v^-1)].
  HElement collapseh_element(CollapsehInput const& input);

  //! (B-1, B-3) n times, then A-2, then two deletions: 2n + 3 operations
  //! that take collapseh_element(input) to the trivial element.
  std::vector<CollapseOp> collapse_schedule(CollapsehInput const& input);

  //! No two of the cyclically reduced forms are cyclic permutations of each
  //! other.
  bool is_irredundant(std::span<Word const> relators);

  //! No cyclically reduced form is a proper power.
  bool is_primary(std::span<Word const> relators);

  //! The cyclically reduced form of w is u^k for some k > 1.
  bool is_proper_power(Word const& w);

}  // namespace cycred

#endif  // CYCRED_IDENTITIES_HPP_
