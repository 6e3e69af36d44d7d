//
// cycred - cyclically reduced words in free groups
// Copyright (C) 2026 The cycred authors
//
// Licensed under the Apache License, Version 2.0.
//

#include "cycred/word.hpp"

#include <algorithm>
#include <unordered_set>

#include "cycred/error.hpp"

namespace cycred {

  Alphabet::Alphabet(std::vector<std::string> generators)
      : _names(std::move(generators)) {
    std::unordered_set<std::string_view> seen;
    for (auto const& name : _names) {
      if (name.empty()) {
        throw PreconditionError("generator names must be non-empty");
      }
      if (!seen.insert(name).second) {
        throw PreconditionError("repeated generator name \"" + name + "\"");
      }
    }
  }

  std::optional<std::size_t>
  Alphabet::index_of(std::string_view name) const noexcept {
    auto it = std::find(_names.begin(), _names.end(), name);
    if (it == _names.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _names.begin());
  }

  AlphabetPtr make_alphabet(std::vector<std::string> generators) {
    return std::make_shared<Alphabet const>(std::move(generators));
  }

  bool compatible(AlphabetPtr const& a, AlphabetPtr const& b) noexcept {
    return a == nullptr || b == nullptr || a == b || *a == *b;
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word::Word(AlphabetPtr alphabet, std::vector<Letter> letters)
      : _alphabet(std::move(alphabet)), _letters(std::move(letters)) {
    if (_letters.empty()) {
      return;
    }
    if (_alphabet == nullptr) {
      throw PreconditionError("a non-empty word needs an alphabet");
    }
    for (auto l : _letters) {
      if (l.generator() >= _alphabet->size()) {
        throw PreconditionError("letter generator index "
                                + std::to_string(l.generator())
                                + " out of range for alphabet of size "
                                + std::to_string(_alphabet->size()));
      }
    }
  }

  Word Word::subword(std::size_t pos, std::size_t len) const {
    pos = std::min(pos, size());
    len = std::min(len, size() - pos);
    return Word(_alphabet,
                std::vector<Letter>(_letters.begin() + pos,
                                    _letters.begin() + pos + len));
  }

  std::strong_ordering operator<=>(Word const& u, Word const& v) noexcept {
    if (auto c = u.size() <=> v.size(); c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(
        u._letters.begin(), u._letters.end(), v._letters.begin(),
        v._letters.end());
  }

  ////////////////////////////////////////////////////////////////////////
  // Free functions
  ////////////////////////////////////////////////////////////////////////

  Word letter_word(AlphabetPtr const& alphabet, Letter l) {
    return Word(alphabet, {l});
  }

  Word concat(Word const& u, Word const& v) {
    if (!compatible(u.alphabet(), v.alphabet())) {
      throw PreconditionError("cannot concatenate words over different "
                              "alphabets");
    }
    std::vector<Letter> letters;
    letters.reserve(u.size() + v.size());
    letters.insert(letters.end(), u.begin(), u.end());
    letters.insert(letters.end(), v.begin(), v.end());
    return Word(u.alphabet() ? u.alphabet() : v.alphabet(),
                std::move(letters));
  }

  Word concat(std::initializer_list<Word> words) {
    AlphabetPtr         alphabet;
    std::vector<Letter> letters;
    for (auto const& w : words) {
      if (!compatible(alphabet, w.alphabet())) {
        throw PreconditionError("cannot concatenate words over different "
                                "alphabets");
      }
      if (alphabet == nullptr) {
        alphabet = w.alphabet();
      }
      letters.insert(letters.end(), w.begin(), w.end());
    }
    return Word(alphabet, std::move(letters));
  }

  Word inverse(Word const& w) {
    std::vector<Letter> letters(w.size());
    std::transform(w.begin(), w.end(), letters.rbegin(), [](Letter l) {
      return l.inverse();
    });
    return w.with_letters(std::move(letters));
  }

  Word reverse(Word const& w) {
    return w.with_letters(std::vector<Letter>(w.letters().rbegin(),
                                              w.letters().rend()));
  }

  Word power(Word const& w, std::int64_t n) {
    Word const base = n < 0 ? inverse(w) : w;
    auto const m    = static_cast<std::size_t>(n < 0 ? -n : n);
    std::vector<Letter> letters;
    letters.reserve(m * w.size());
    for (std::size_t i = 0; i < m; ++i) {
      letters.insert(letters.end(), base.begin(), base.end());
    }
    return w.with_letters(std::move(letters));
  }

  Word rotate(Word const& w, std::int64_t k) {
    if (w.empty()) {
      return w;
    }
    auto const m     = static_cast<std::int64_t>(w.size());
    auto const shift = static_cast<std::size_t>(((k % m) + m) % m);
    std::vector<Letter> letters(w.begin(), w.end());
    std::rotate(letters.begin(), letters.begin() + shift, letters.end());
    return w.with_letters(std::move(letters));
  }

  std::optional<std::size_t> cyclic_shift_between(Word const& u,
                                                  Word const& v) {
    if (u.size() != v.size()) {
      return std::nullopt;
    }
    if (u.empty()) {
      return 0;
    }
    // Occurrences of v in uu, found with the Knuth-Morris-Pratt failure table.
    std::size_t const        m = v.size();
    std::vector<std::size_t> fail(m, 0);
    for (std::size_t i = 1, k = 0; i < m; ++i) {
      while (k > 0 && v[i] != v[k]) {
        k = fail[k - 1];
      }
      if (v[i] == v[k]) {
        ++k;
      }
      fail[i] = k;
    }
    for (std::size_t i = 0, k = 0; i < 2 * m - 1; ++i) {
      Letter const c = u[i % m];
      while (k > 0 && c != v[k]) {
        k = fail[k - 1];
      }
      if (c == v[k]) {
        ++k;
      }
      if (k == m) {
        return i + 1 - m;
      }
    }
    return std::nullopt;
  }

  bool is_cyclic_permutation(Word const& u, Word const& v) {
    return cyclic_shift_between(u, v).has_value();
  }

  std::pair<Word, std::size_t> canonical_rotation(Word const& w) {
    std::size_t const n = w.size();
    if (n == 0) {
      return {w, 0};
    }
    // Two-pointer minimum rotation scan; i and j are candidate starts.
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
      Letter const a = w[(i + k) % n];
      Letter const b = w[(j + k) % n];
      if (a == b) {
        ++k;
        continue;
      }
      if (a > b) {
        i += k + 1;
      } else {
        j += k + 1;
      }
      if (i == j) {
        ++j;
      }
      k = 0;
    }
    std::size_t const shift = std::min(i, j);
    return {rotate(w, static_cast<std::int64_t>(shift)), shift};
  }

  LeviSplit levi_split(Word const& u1,
                       Word const& u2,
                       Word const& v1,
                       Word const& v2) {
    if (concat(u1, u2) != concat(v1, v2)) {
      throw PreconditionError("levi_split requires u1 u2 = v1 v2");
    }
    if (u1.size() > v1.size()) {
      return {LeviSplit::Side::left, u1.subword(v1.size())};
    } else if (u1.size() < v1.size()) {
      return {LeviSplit::Side::right, v1.subword(u1.size())};
    }
    return {LeviSplit::Side::aligned, Word(u1.alphabet())};
  }

  bool is_reduced(Word const& w) noexcept {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (cancels(w[i - 1], w[i])) {
        return false;
      }
    }
    return true;
  }

  bool is_cyclically_reduced(Word const& w) noexcept {
    return is_reduced(w) && (w.size() < 2 || !cancels(w.front(), w.back()));
  }

  bool is_prefix(Word const& v, Word const& w) noexcept {
    return v.size() <= w.size() && std::equal(v.begin(), v.end(), w.begin());
  }

  bool is_suffix(Word const& v, Word const& w) noexcept {
    return v.size() <= w.size()
           && std::equal(v.begin(), v.end(), w.end() - v.size());
  }

  bool is_subword(Word const& v, Word const& w) noexcept {
    return std::search(w.begin(), w.end(), v.begin(), v.end()) != w.end();
  }

}  // namespace cycred
