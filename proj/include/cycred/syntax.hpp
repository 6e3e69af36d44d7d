//
// cycred - cyclically reduced words in free groups
// Copyright (C) 2026 The cycred authors
//
// Licensed under the Apache License, Version 2.0.
//

// Text forms of words.
//
// compact: one character per letter, generators a-z, an uppercase letter is
//          the inverse of its lowercase generator, "1" is the empty word.
//          "x^-1" is accepted as a synonym of "X" when parsing.
// spaced:  whitespace separated tokens "name" or "name^-1", names are ASCII
//          identifiers, "1" is the empty word.

#ifndef CYCRED_SYNTAX_HPP_
#define CYCRED_SYNTAX_HPP_

#include <span>
#include <string>
#include <string_view>

#include "cycred/word.hpp"

namespace cycred {

  enum class WordSyntax { compact, spaced };

  //! Throws ParseError with the byte offset of the first bad character.
  Word parse_word(std::string_view   text,
                  AlphabetPtr const& alphabet,
                  WordSyntax         syntax = WordSyntax::compact);

  //! Throws PreconditionError if the alphabet cannot be written in
  //! \p syntax.
  std::string format_word(Word const& w,
                          WordSyntax  syntax = WordSyntax::compact);

  //! The generators occurring in \p texts: sorted letters in compact syntax,
  //! order of first appearance in spaced syntax.  Throws ParseError.
  AlphabetPtr infer_alphabet(std::span<std::string const> texts,
                             WordSyntax                   syntax);

  //! Every generator is a single lowercase letter a-z.
  bool is_compact_alphabet(Alphabet const& alphabet) noexcept;

  //! Every generator is an ASCII identifier.
  bool is_spaced_alphabet(Alphabet const& alphabet) noexcept;

  WordSyntax  parse_syntax(std::string_view name);
  char const* to_string(WordSyntax syntax) noexcept;

}  // namespace cycred

#endif  // CYCRED_SYNTAX_HPP_
