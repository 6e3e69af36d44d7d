//
// cycred - cyclically reduced words in free groups
// Copyright (C) 2026 The cycred authors
//
// Licensed under the Apache License, Version 2.0.
//

#include "cycred/latin.hpp"

#include <algorithm>
#include <initializer_list>

#include "cycred/error.hpp"
#include "cycred/reduction.hpp"

namespace cycred {

  namespace {

    void require_latin(Word const& u, Word const& w) {
      AlphabetPtr const& alphabet = u.alphabet() ? u.alphabet() : w.alphabet();
      if (alphabet == nullptr || alphabet->size() < 2) {
        throw PreconditionError("the alphabet needs at least two generators");
      }
      if (u.empty() || w.empty() || !is_reduced(u) || !is_reduced(w)) {
        throw PreconditionError("u and w must be reduced and non-empty");
      }
    }

    // The least letter that is not in the list.
    Letter least_letter_avoiding(Alphabet const&              alphabet,
                                 std::initializer_list<Letter> avoid) {
      for (std::size_t g = 0; g < alphabet.size(); ++g) {
        for (bool inv : {false, true}) {
          Letter const x(g, inv);
          if (std::find(avoid.begin(), avoid.end(), x) == avoid.end()) {
            return x;
          }
        }
      }
      throw PreconditionError("the alphabet needs at least two generators");
    }

    StabilizingConjugator cyclically_reduced_u(Word const& u, Word const& w) {
      AlphabetPtr const& A = u.alphabet();
      auto const word      = [&](std::initializer_list<Letter> ls) {
        return Word(A, std::vector<Letter>(ls));
      };
      Letter const a = u.front(), b = u.back(), c = w.front(), d = w.back();
      if (a == b) {
        Letter const x = least_letter_avoiding(*A, {a, a.inverse()});
        Letter const X = x.inverse();
        if (x != c.inverse() && x != d) {
          return {word({x}), StabilizerRule::case_1_1, {}};
        } else if (x == c.inverse() && x != d.inverse()) {
          return {word({X}), StabilizerRule::case_1_2, {}};
        } else if (x == c.inverse()) {
          return {word({x, a.inverse()}), StabilizerRule::case_1_3, {}};
        } else if (x != c) {
          return {word({X}), StabilizerRule::case_1_4, {}};
        }
        return {word({X, a.inverse()}), StabilizerRule::case_1_5, {}};
      }
      if (b != c.inverse() && b != d) {
        return {word({b}), StabilizerRule::case_2_1, {}};
      } else if (b == c.inverse() && a != d.inverse()) {
        return {word({a.inverse()}), StabilizerRule::case_2_2, {}};
      } else if (b == c.inverse()) {
        return {word({b, a}), StabilizerRule::case_2_3, {}};
      } else if (a != c) {
        return {word({a.inverse()}), StabilizerRule::case_2_4, {}};
      }
      return {word({b, a}), StabilizerRule::case_2_5, {}};
    }

  }  // namespace

  std::string to_string(StabilizerRule rule) {
    switch (rule) {
      case StabilizerRule::case_1_1:
        return "1.1";
      case StabilizerRule::case_1_2:
        return "1.2";
      case StabilizerRule::case_1_3:
        return "1.3";
      case StabilizerRule::case_1_4:
        return "1.4";
      case StabilizerRule::case_1_5:
        return "1.5";
      case StabilizerRule::case_2_1:
        return "2.1";
      case StabilizerRule::case_2_2:
        return "2.2";
      case StabilizerRule::case_2_3:
        return "2.3";
      case StabilizerRule::case_2_4:
        return "2.4";
      case StabilizerRule::case_2_5:
        return "2.5";
      case StabilizerRule::swapped:
        return "swapped";
      case StabilizerRule::no_conjugator:
        return "no_conjugator";
      case StabilizerRule::mediating_letter:
        return "mediating_letter";
    }
    return "";
  }

  StabilizingConjugator stabilizing_conjugator(Word const& u, Word const& w) {
    require_latin(u, w);
    if (is_cyclically_reduced(u)) {
      return cyclically_reduced_u(u, w);
    }
    if (is_cyclically_reduced(w)) {
      // w s' u s'^-1 is cyclically reduced, hence so is its rotation
      // u s'^-1 w s'.
      auto const inner = cyclically_reduced_u(w, u);
      return {inverse(inner.s), StabilizerRule::swapped, inner.rule};
    }
    Letter const a = u.front(), c = w.front();
    if (a != c) {
      return {Word(u.alphabet()), StabilizerRule::no_conjugator, {}};
    }
    Letter const x = least_letter_avoiding(*u.alphabet(), {a, a.inverse()});
    return {letter_word(u.alphabet(), x), StabilizerRule::mediating_letter, {}};
  }

  Word find_stabilizing_conjugator(Word const& u, Word const& w) {
    return stabilizing_conjugator(u, w).s;
  }

  Word latin_conjugator(Word const& u, Word const& w) {
    Word const ui = inverse(u);
    Word       s  = find_stabilizing_conjugator(ui, w);
    if (s.empty()) {
      // With s = 1 every n gives the same pair; a letter x != a, c^-1 keeps
      // u^-1 x^n w x^-n cyclically reduced.
      s = letter_word(
          ui.alphabet(),
          least_letter_avoiding(*ui.alphabet(), {ui.front(), w.front().inverse()}));
    }
    return s;
  }

  std::vector<LatinPair> latin_pairs(Word const& u,
                                     Word const& w,
                                     std::size_t count) {
    require_latin(u, w);
    Word const             s  = latin_conjugator(u, w);
    Word const             ui = inverse(u);
    std::vector<LatinPair> pairs;
    pairs.reserve(count);
    for (std::size_t n = 1; n <= count; ++n) {
      auto const k      = static_cast<std::int64_t>(n);
      Word const middle = concat({power(s, k), w, power(s, -k)});
      pairs.push_back({concat(ui, middle), concat(middle, ui), n});
    }
    return pairs;
  }

}  // namespace cycred
