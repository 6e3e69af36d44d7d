//
// cycred - cyclically reduced words in free groups
// Copyright (C) 2026 The cycred authors
//
// Licensed under the Apache License, Version 2.0.
//

// Solutions of u * v = w and v' * u = w: a conjugator s of length at most 2
// such that u s^n w s^-n is cyclically reduced, and the family it yields.

#ifndef CYCRED_LATIN_HPP_
#define CYCRED_LATIN_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cycred/word.hpp"

namespace cycred {

  //! Which branch of the case analysis produced s.
  enum class StabilizerRule {
    case_1_1,
    case_1_2,
    case_1_3,
    case_1_4,
    case_1_5,
    case_2_1,
    case_2_2,
    case_2_3,
    case_2_4,
    case_2_5,
    swapped,         //!< u not cyclically reduced, w is: s from (w, u)
    no_conjugator,   //!< neither is, first letters differ: s = 1
    mediating_letter //!< neither is, first letters agree: s = x
  };

  std::string to_string(StabilizerRule rule);

  struct StabilizingConjugator {
    Word           s;
    StabilizerRule rule = StabilizerRule::case_1_1;
    //! For StabilizerRule::swapped, the rule applied to (w, u).
    std::optional<StabilizerRule> inner;
  };

  //! Requires an alphabet with at least two generators and u, w reduced and
  //! non-empty.  On return |s| <= 2 and u s^n w s^-n is cyclically reduced
  //! for every n >= 1.
  StabilizingConjugator stabilizing_conjugator(Word const& u, Word const& w);

  //! The word s of stabilizing_conjugator.
  Word find_stabilizing_conjugator(Word const& u, Word const& w);

  //! v = u^-1 s^n w s^-n and v' = s^n w s^-n u^-1.
  struct LatinPair {
    Word        v;
    Word        v_prime;
    std::size_t n = 0;
  };

  //! The pairs for n = 1, ..., count; each satisfies u * v = v' * u =
  //! the cyclically reduced form of w, and the v are pairwise distinct.
  std::vector<LatinPair> latin_pairs(Word const& u,
                                     Word const& w,
                                     std::size_t count);

  //! The conjugator used by latin_pairs; never empty.
  Word latin_conjugator(Word const& u, Word const& w);

}  // namespace cycred

#endif  // CYCRED_LATIN_HPP_
