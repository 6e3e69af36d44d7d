//
// cycred - cyclically reduced words in free groups
// Copyright (C) 2026 The cycred authors
//
// Licensed under the Apache License, Version 2.0.
//

// Length-bounded enumeration of the smallest set containing R and closed
// under cyclically reduced products and cyclic permutations.

#ifndef CYCRED_CLOSURE_HPP_
#define CYCRED_CLOSURE_HPP_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <span>

#include "cycred/error.hpp"
#include "cycred/identities.hpp"
#include "cycred/word.hpp"

namespace cycred {

  struct ClosureConfig {
    std::size_t max_len          = 4;
    std::size_t max_rounds       = 16;
    bool        include_inverses = true;
    //! Store one canonical rotation per class instead of every rotation.
    bool canonical_dedup = true;
    //! Keep, for every member m, an H element h with psi(h) = m.
    bool track_provenance = false;
  };

  //! Members are cyclically reduced, non-empty and of length at most
  //! max_len.  "saturated" means no new member fits under the cap.
  struct ClosureSet {
    AlphabetPtr     alphabet;
    ClosureConfig   config;
    std::set<Word>  members;
    std::set<Word>  frontier;
    std::size_t     rounds_done = 0;
    bool            saturated   = false;
    std::map<Word, HElement> provenance;
  };

  //! Thrown by step on a saturated set.
  class SaturatedError : public Error {
   public:
    SaturatedError() : Error("closure is already saturated") {}
  };

  //! Members start as the cyclically reduced forms of the relators (and their
  //! inverses if include_inverses), with every rotation accounted for.
  ClosureSet seed(std::span<Word const> relators,
                  AlphabetPtr const&    alphabet,
                  ClosureConfig const&  config);

  //! One round of products a * b over rotations of members, with at least
  //! one factor from the frontier.  The result does not depend on
  //! \p workers.  Throws SaturatedError if already saturated.
  ClosureSet step(ClosureSet const& S, std::size_t workers = 1);

  //! Steps until saturated or max_rounds steps have been taken.
  ClosureSet run(ClosureSet const& S, std::size_t workers = 1);

  struct ContainsResult {
    bool member     = false;
    //! The query's cyclically reduced form is longer than max_len, so a
    //! negative answer says nothing.
    bool beyond_cap = false;

    explicit operator bool() const noexcept {
      return member;
    }
  };

  //! Looks up the cyclically reduced form of \p w, up to rotation.
  ContainsResult contains(ClosureSet const& S, Word const& w);

  //! Every member, expanded to all rotations when canonical_dedup is set.
  std::set<Word> expanded_members(ClosureSet const& S);

  //! The text format, compact syntax, one word per line.
  void       save(ClosureSet const& S, std::ostream& out);
  ClosureSet load(std::istream& in);

}  // namespace cycred

#endif  // CYCRED_CLOSURE_HPP_
