//
// cycred - cyclically reduced words in free groups
// Copyright (C) 2026 The cycred authors
//
// Licensed under the Apache License, Version 2.0.
//

#include "cycred/syntax.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "cycred/error.hpp"

namespace cycred {

  namespace {

    bool is_lower(char c) {
      return c >= 'a' && c <= 'z';
    }

    bool is_upper(char c) {
      return c >= 'A' && c <= 'Z';
    }

    bool is_space(char c) {
      return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f'
             || c == '\v';
    }

    bool is_identifier(std::string_view s) {
      if (s.empty() || !(is_lower(s[0]) || is_upper(s[0]) || s[0] == '_')) {
        return false;
      }
      return std::all_of(s.begin(), s.end(), [](char c) {
        return is_lower(c) || is_upper(c) || c == '_' || (c >= '0' && c <= '9');
      });
    }

    constexpr std::string_view inverse_suffix = "^-1";

    Letter lookup(AlphabetPtr const& alphabet,
                  std::string_view   name,
                  bool               inverted,
                  std::size_t        offset) {
      auto g = alphabet ? alphabet->index_of(name) : std::nullopt;
      if (!g) {
        throw ParseError(offset,
                         "unknown generator \"" + std::string(name) + "\"");
      }
      return Letter(*g, inverted);
    }

    Word parse_compact(std::string_view text, AlphabetPtr const& alphabet) {
      if (text == "1") {
        return Word(alphabet);
      }
      std::vector<Letter> letters;
      for (std::size_t i = 0; i < text.size(); ++i) {
        char const c = text[i];
        if (is_lower(c)) {
          bool inverted = text.substr(i + 1, 3) == inverse_suffix;
          letters.push_back(lookup(alphabet, text.substr(i, 1), inverted, i));
          if (inverted) {
            i += inverse_suffix.size();
          }
        } else if (is_upper(c)) {
          char const lower = static_cast<char>(c - 'A' + 'a');
          letters.push_back(
              lookup(alphabet, std::string_view(&lower, 1), true, i));
        } else if (is_space(c)) {
          throw ParseError(i, "whitespace is not allowed in compact syntax");
        } else {
          throw ParseError(i,
                           std::string("unexpected character '") + c + "'");
        }
      }
      return Word(alphabet, std::move(letters));
    }

    template <typename F>
    void for_each_token(std::string_view text, F&& f) {
      std::size_t i = 0;
      while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) {
          ++i;
        }
        std::size_t const start = i;
        while (i < text.size() && !is_space(text[i])) {
          ++i;
        }
        if (i > start) {
          f(text.substr(start, i - start), start);
        }
      }
    }

    // Splits "name^-1" into ("name", true).
    std::pair<std::string_view, bool> split_token(std::string_view token,
                                                  std::size_t      offset) {
      bool inverted = false;
      if (token.size() > inverse_suffix.size()
          && token.substr(token.size() - inverse_suffix.size())
                 == inverse_suffix) {
        inverted = true;
        token.remove_suffix(inverse_suffix.size());
      }
      if (!is_identifier(token)) {
        auto bad = std::find_if(token.begin(), token.end(), [](char c) {
          return !(is_lower(c) || is_upper(c) || c == '_'
                   || (c >= '0' && c <= '9'));
        });
        std::size_t const at
            = offset + (bad == token.end() ? 0 : bad - token.begin());
        throw ParseError(at,
                         "\"" + std::string(token)
                             + "\" is not a generator name");
      }
      return {token, inverted};
    }

    Word parse_spaced(std::string_view text, AlphabetPtr const& alphabet) {
      std::vector<Letter>      letters;
      std::vector<std::size_t> ones;
      std::size_t              tokens = 0;
      for_each_token(text, [&](std::string_view token, std::size_t offset) {
        ++tokens;
        if (token == "1") {
          ones.push_back(offset);
          return;
        }
        auto const [name, inverted] = split_token(token, offset);
        letters.push_back(lookup(alphabet, name, inverted, offset));
      });
      if (!ones.empty() && tokens > 1) {
        throw ParseError(ones.front(),
                         "\"1\" must be the only token of the empty word");
      }
      return Word(alphabet, std::move(letters));
    }

  }  // namespace

  Word parse_word(std::string_view   text,
                  AlphabetPtr const& alphabet,
                  WordSyntax         syntax) {
    return syntax == WordSyntax::compact ? parse_compact(text, alphabet)
                                         : parse_spaced(text, alphabet);
  }

  std::string format_word(Word const& w, WordSyntax syntax) {
    if (w.empty()) {
      return "1";
    }
    Alphabet const& alphabet = *w.alphabet();
    std::string     result;
    if (syntax == WordSyntax::compact) {
      if (!is_compact_alphabet(alphabet)) {
        throw PreconditionError("compact syntax needs generators a-z");
      }
      for (auto l : w) {
        char const c = alphabet.name(l.generator())[0];
        result += l.is_inverse() ? static_cast<char>(c - 'a' + 'A') : c;
      }
      return result;
    }
    if (!is_spaced_alphabet(alphabet)) {
      throw PreconditionError("spaced syntax needs identifier generators");
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) {
        result += ' ';
      }
      result += alphabet.name(w[i].generator());
      if (w[i].is_inverse()) {
        result += inverse_suffix;
      }
    }
    return result;
  }

  AlphabetPtr infer_alphabet(std::span<std::string const> texts,
                             WordSyntax                   syntax) {
    if (syntax == WordSyntax::compact) {
      std::set<std::string> names;
      for (auto const& text : texts) {
        for (std::size_t i = 0; i < text.size(); ++i) {
          char const c = text[i];
          if (is_lower(c)) {
            names.insert(std::string(1, c));
            if (std::string_view(text).substr(i + 1, 3) == inverse_suffix) {
              i += inverse_suffix.size();
            }
          } else if (is_upper(c)) {
            names.insert(std::string(1, static_cast<char>(c - 'A' + 'a')));
          } else if (!(c == '1' && text.size() == 1)) {
            throw ParseError(i,
                             std::string("unexpected character '") + c + "'");
          }
        }
      }
      return make_alphabet({names.begin(), names.end()});
    }
    std::vector<std::string> names;
    for (auto const& text : texts) {
      for_each_token(text, [&](std::string_view token, std::size_t offset) {
        if (token == "1") {
          return;
        }
        auto const name = std::string(split_token(token, offset).first);
        if (std::find(names.begin(), names.end(), name) == names.end()) {
          names.push_back(name);
        }
      });
    }
    return make_alphabet(std::move(names));
  }

  bool is_compact_alphabet(Alphabet const& alphabet) noexcept {
    return std::all_of(
        alphabet.names().begin(), alphabet.names().end(), [](auto const& n) {
          return n.size() == 1 && is_lower(n[0]);
        });
  }

  bool is_spaced_alphabet(Alphabet const& alphabet) noexcept {
    return std::all_of(alphabet.names().begin(),
                       alphabet.names().end(),
                       [](auto const& n) { return is_identifier(n); });
  }

  WordSyntax parse_syntax(std::string_view name) {
    if (name == "compact") {
      return WordSyntax::compact;
    } else if (name == "spaced") {
      return WordSyntax::spaced;
    }
    throw ParseError(0, "unknown syntax \"" + std::string(name) + "\"");
  }

  char const* to_string(WordSyntax syntax) noexcept {
    return syntax == WordSyntax::compact ? "compact" : "spaced";
  }

}  // namespace cycred
