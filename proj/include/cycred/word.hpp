//
// cycred - cyclically reduced words in free groups
// Copyright (C) 2026 The cycred authors
//
// Licensed under the Apache License, Version 2.0.
//

// Alphabets, letters and words of the free monoid on X and its formal
// inverses.  Nothing in this file cancels letters; see reduction.hpp for that.

#ifndef CYCRED_WORD_HPP_
#define CYCRED_WORD_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cycred {

  //! An ordered list of distinct, non-empty generator names.
  //!
  //! The order is the one given at construction and it is the first key of
  //! the letter order used by canonical_rotation.
  class Alphabet {
   public:
    //! Throws PreconditionError on an empty or repeated name.
    explicit Alphabet(std::vector<std::string> generators);

    [[nodiscard]] std::size_t size() const noexcept {
      return _names.size();
    }

    [[nodiscard]] std::string const& name(std::size_t i) const {
      return _names.at(i);
    }

    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    [[nodiscard]] std::optional<std::size_t>
    index_of(std::string_view name) const noexcept;

    friend bool operator==(Alphabet const&, Alphabet const&) = default;

   private:
    std::vector<std::string> _names;
  };

  using AlphabetPtr = std::shared_ptr<Alphabet const>;

  //! Convenience: a shared alphabet built from \p generators.
  AlphabetPtr make_alphabet(std::vector<std::string> generators);

  //! True if either pointer is null or both denote equal alphabets.
  bool compatible(AlphabetPtr const& a, AlphabetPtr const& b) noexcept;

  //! A generator or its formal inverse.
  //!
  //! Letters are ordered by generator index, and x comes before x^-1.
  class Letter {
   public:
    constexpr Letter() noexcept = default;

    constexpr Letter(std::size_t generator, bool inverted) noexcept
        : _code(static_cast<std::uint32_t>(2 * generator + (inverted ? 1 : 0))) {
    }

    [[nodiscard]] constexpr std::size_t generator() const noexcept {
      return _code >> 1;
    }

    //! +1 or -1.
    [[nodiscard]] constexpr int sign() const noexcept {
      return (_code & 1) ? -1 : 1;
    }

    [[nodiscard]] constexpr bool is_inverse() const noexcept {
      return _code & 1;
    }

    [[nodiscard]] constexpr Letter inverse() const noexcept {
      Letter result;
      result._code = _code ^ 1;
      return result;
    }

    //! Dense index in [0, 2 * alphabet size).
    [[nodiscard]] constexpr std::uint32_t code() const noexcept {
      return _code;
    }

    friend constexpr auto operator<=>(Letter, Letter) noexcept = default;

   private:
    std::uint32_t _code = 0;
  };

  //! True if \p a and \p b are mutually inverse letters.
  constexpr bool cancels(Letter a, Letter b) noexcept {
    return a.inverse() == b;
  }

  //! An element of the free monoid, possibly empty.
  //!
  //! A non-empty word remembers its alphabet.  The default-constructed word is
  //! the empty word 1 and is compatible with every alphabet.  Comparison
  //! looks at letters only; the order is shortlex.
  class Word {
   public:
    using const_iterator = std::vector<Letter>::const_iterator;

    Word() = default;

    explicit Word(AlphabetPtr alphabet) : _alphabet(std::move(alphabet)) {}

    //! Throws PreconditionError if a letter is out of range for \p alphabet.
    Word(AlphabetPtr alphabet, std::vector<Letter> letters);

    [[nodiscard]] AlphabetPtr const& alphabet() const noexcept {
      return _alphabet;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }

    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }

    [[nodiscard]] Letter operator[](std::size_t i) const noexcept {
      return _letters[i];
    }

    [[nodiscard]] Letter front() const noexcept {
      return _letters.front();
    }

    [[nodiscard]] Letter back() const noexcept {
      return _letters.back();
    }

    [[nodiscard]] const_iterator begin() const noexcept {
      return _letters.begin();
    }

    [[nodiscard]] const_iterator end() const noexcept {
      return _letters.end();
    }

    [[nodiscard]] std::span<Letter const> letters() const noexcept {
      return _letters;
    }

    //! The factor of length \p len starting at \p pos (clamped to the end).
    [[nodiscard]] Word subword(std::size_t pos,
                               std::size_t len = std::string::npos) const;

    [[nodiscard]] Word prefix(std::size_t len) const {
      return subword(0, len);
    }

    [[nodiscard]] Word suffix(std::size_t len) const {
      return subword(size() - std::min(len, size()));
    }

    //! A word over the same alphabet with the given letters.
    [[nodiscard]] Word with_letters(std::vector<Letter> letters) const {
      return Word(_alphabet, std::move(letters));
    }

    friend bool operator==(Word const& u, Word const& v) noexcept {
      return u._letters == v._letters;
    }

    friend std::strong_ordering operator<=>(Word const& u,
                                            Word const& v) noexcept;

   private:
    AlphabetPtr         _alphabet;
    std::vector<Letter> _letters;
  };

  //! The word consisting of the single letter \p l.
  Word letter_word(AlphabetPtr const& alphabet, Letter l);

  //! Throws PreconditionError if u and v use different alphabets.
  Word concat(Word const& u, Word const& v);
  Word concat(std::initializer_list<Word> words);

  Word inverse(Word const& w);
  Word reverse(Word const& w);

  //! The concatenation of \p n copies of \p w, or of w^-1 if n < 0.
  Word power(Word const& w, std::int64_t n);

  //! w_{k+1} ... w_m w_1 ... w_k, with k taken modulo |w|.
  Word rotate(Word const& w, std::int64_t k);

  //! The smallest k in [0, |u|) with rotate(u, k) == v, if any.
  std::optional<std::size_t> cyclic_shift_between(Word const& u, Word const& v);

  //! u and v are cyclic permutations of each other.
  bool is_cyclic_permutation(Word const& u, Word const& v);

  //! The lexicographically least rotation of \p w and the smallest shift
  //! producing it.
  std::pair<Word, std::size_t> canonical_rotation(Word const& w);

  //! Result of comparing two factorisations u1 u2 = v1 v2.
  struct LeviSplit {
    enum class Side { left, right, aligned };
    Side side;
    //! left: u1 = v1 overlap, v2 = overlap u2; right: v1 = u1 overlap,
    //! u2 = overlap v2; aligned: overlap is empty.
    Word overlap;
  };

  //! Throws PreconditionError unless u1 u2 == v1 v2.
  LeviSplit levi_split(Word const& u1,
                       Word const& u2,
                       Word const& v1,
                       Word const& v2);

  bool is_reduced(Word const& w) noexcept;
  bool is_cyclically_reduced(Word const& w) noexcept;

  bool is_prefix(Word const& v, Word const& w) noexcept;
  bool is_suffix(Word const& v, Word const& w) noexcept;
  bool is_subword(Word const& v, Word const& w) noexcept;

}  // namespace cycred

#endif  // CYCRED_WORD_HPP_
