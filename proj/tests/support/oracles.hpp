//
// cycred - cyclically reduced words in free groups
// Copyright (C) 2026 The cycred authors
//
// Licensed under the Apache License, Version 2.0.
//

// Independent reference implementations and generators for the tests.
// Nothing here calls the reduction code under test.

#ifndef CYCRED_TESTS_ORACLES_HPP_
#define CYCRED_TESTS_ORACLES_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cycred/identities.hpp"
#include "cycred/structure.hpp"
#include "cycred/word.hpp"

namespace cycred::testing {

  //! Generators x, y, z, t (first n of them).
  AlphabetPtr alphabet(std::size_t n);

  //! The alphabet {t, x, y, z}, so that the usual fixture words parse.
  AlphabetPtr txyz();

  //! Compact syntax over \p alphabet, parsed without the library parser:
  //! lowercase letter = generator, uppercase = inverse, "1" = empty.
  Word W(std::string_view text, AlphabetPtr const& alphabet = txyz());

  std::string str(Word const& w);

  ////////////////////////////////////////////////////////////////////////
  // Rewriting oracles
  ////////////////////////////////////////////////////////////////////////

  //! Deletes the leftmost adjacent inverse pair until none is left.
  Word naive_reduce(Word const& w);

  //! naive_reduce, then strips matching first and last letters.
  Word naive_cyc_reduce(Word const& w);

  //! The stripped prefix of naive_cyc_reduce: naive_reduce(w) = t c t^-1.
  Word naive_cyc_conjugator(Word const& w);

  Word naive_cyc_product(Word const& u, Word const& v);

  //! Smallest k with rotate(u, k) = v by trying every k.
  std::optional<std::size_t> naive_shift(Word const& u, Word const& v);

  ////////////////////////////////////////////////////////////////////////
  // Random words
  ////////////////////////////////////////////////////////////////////////

  class Random {
   public:
    explicit Random(std::uint64_t seed) : _engine(seed) {}

    std::size_t uniform(std::size_t lo, std::size_t hi);
    bool        coin();

    Letter letter(Alphabet const& alphabet);

    //! Any word, length in [lo, hi].
    Word word(AlphabetPtr const& alphabet, std::size_t lo, std::size_t hi);

    //! Freely reduced, length in [lo, hi].
    Word reduced(AlphabetPtr const& alphabet, std::size_t lo, std::size_t hi);

    //! Cyclically reduced, non-empty unless hi == 0.
    Word cyclically_reduced(AlphabetPtr const& alphabet,
                            std::size_t        lo,
                            std::size_t        hi);

    HElement h_element(AlphabetPtr const& alphabet,
                       std::size_t        terms,
                       std::size_t        max_len);

    std::mt19937_64& engine() noexcept {
      return _engine;
    }

   private:
    std::mt19937_64 _engine;
  };

  //! Calls f on every word of length exactly n.
  void for_each_word(AlphabetPtr const&                      alphabet,
                     std::size_t                             n,
                     std::function<void(Word const&)> const& f);

  //! Every reduced word of length at most n.
  std::vector<Word> all_reduced(AlphabetPtr const& alphabet, std::size_t n);

  ////////////////////////////////////////////////////////////////////////
  // Factorisation oracles
  ////////////////////////////////////////////////////////////////////////

  //! Every witness of either branch found by searching all splits w = w1 w2,
  //! all n <= |b| and the prefix b1 forced by the shape of b.
  std::vector<ComplicWitness> brute_force_complic(Word const& b, Word const& w);

  //! Every s with |s| <= 2 and u s^n w s^-n cyclically reduced for
  //! n = 1..max_n.
  std::vector<Word> brute_force_stabilizers(Word const& u,
                                            Word const& w,
                                            std::size_t max_n);

  ////////////////////////////////////////////////////////////////////////
  // Collapse fixtures
  ////////////////////////////////////////////////////////////////////////

  //! alpha = beta = 1, u = rho(p^-n q^-1), v = rho(q p^(n+1)),
  //! gamma = rho(p^n), delta = rho(q^-1).
  CollapsehInput collapse_instance(Word const& p, Word const& q, std::size_t n);

  //! The phi-level element reached after 4m + i operations of the
  //! schedule, i in 0..3, evaluated by naive reduction.
  PhiElement eta(CollapsehInput const& in, std::size_t i, std::size_t m);

}  // namespace cycred::testing

#endif  // CYCRED_TESTS_ORACLES_HPP_
