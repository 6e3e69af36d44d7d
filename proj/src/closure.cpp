//
// cycred - cyclically reduced words in free groups
// Copyright (C) 2026 The cycred authors
//
// Licensed under the Apache License, Version 2.0.
//

#include "cycred/closure.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "cycred/reduction.hpp"
#include "cycred/syntax.hpp"

namespace cycred {

  namespace {

    constexpr std::string_view header_tag     = "#cycred-closure";
    constexpr std::string_view frontier_tag   = "#frontier";
    constexpr std::string_view format_version = "v1";

    // psi of the result is rotate(w, k), given psi(h) = w.
    HElement rotated(HElement const& h, Word const& w, std::size_t k) {
      return conjugate(h, inverse(w.prefix(k)));
    }

    std::vector<Word> rotations(Word const& w) {
      std::vector<Word> result;
      result.reserve(w.size());
      for (std::size_t k = 0; k < w.size(); ++k) {
        result.push_back(rotate(w, static_cast<std::int64_t>(k)));
      }
      return result;
    }

    // Inserts w (or its class) into S; returns false if already present.
    bool insert_member(ClosureSet&            S,
                       std::set<Word>&        added,
                       Word const&            w,
                       HElement const*        h) {
      if (S.config.canonical_dedup) {
        auto [key, k] = canonical_rotation(w);
        if (!S.members.insert(key).second) {
          return false;
        }
        added.insert(key);
        if (h != nullptr) {
          S.provenance.emplace(key, rotated(*h, w, k));
        }
        return true;
      }
      if (S.members.count(w) != 0) {
        return false;
      }
      for (std::size_t k = 0; k < w.size(); ++k) {
        Word r = rotate(w, static_cast<std::int64_t>(k));
        if (S.members.insert(r).second) {
          added.insert(r);
          if (h != nullptr) {
            S.provenance.emplace(r, rotated(*h, w, k));
          }
        }
      }
      return true;
    }

    struct Candidate {
      std::tuple<std::size_t, std::size_t, std::size_t> order;
      Word                                              word;
      std::optional<HElement>                           h;
    };

    struct Operand {
      Word        word;
      Word        rep;  // the stored member it is a rotation of
      std::size_t shift;
    };

    [[noreturn]] void bad_file(std::size_t offset, std::string const& what) {
      throw ParseError(offset, "closure file: " + what);
    }

  }  // namespace

  ClosureSet seed(std::span<Word const> relators,
                  AlphabetPtr const&    alphabet,
                  ClosureConfig const&  config) {
    if (config.max_len < 1 || config.max_rounds < 1) {
      throw PreconditionError("closure needs max_len >= 1 and max_rounds >= 1");
    }
    ClosureSet S;
    S.alphabet = alphabet;
    S.config   = config;
    std::set<Word> added;
    for (auto const& r : relators) {
      if (!compatible(alphabet, r.alphabet())) {
        throw PreconditionError("relator over a different alphabet");
      }
      auto const [t, c] = cyc_reduce(r).decomposition;
      if (c.empty() || c.size() > config.max_len) {
        continue;
      }
      // psi([(t^-1, r)]) = rho(t^-1 r t) = c.
      HElement const h = h_from_product({{inverse(t), r}});
      insert_member(S, added, c, config.track_provenance ? &h : nullptr);
      if (config.include_inverses) {
        HElement const hi = inverse(h);
        insert_member(
            S, added, inverse(c), config.track_provenance ? &hi : nullptr);
      }
    }
    S.frontier = S.members;
    return S;
  }

  ClosureSet step(ClosureSet const& S, std::size_t workers) {
    if (S.saturated) {
      throw SaturatedError();
    }
    bool const canonical  = S.config.canonical_dedup;
    bool const provenance = S.config.track_provenance;

    std::vector<Word> const reps(S.members.begin(), S.members.end());
    // Operands of every class: all rotations when only canonical
    // representatives are stored.
    std::vector<std::vector<Operand>> operands(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (canonical) {
        auto rs = rotations(reps[i]);
        for (std::size_t k = 0; k < rs.size(); ++k) {
          operands[i].push_back({std::move(rs[k]), reps[i], k});
        }
      } else {
        operands[i].push_back({reps[i], reps[i], 0});
      }
    }
    std::vector<bool> in_frontier(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      in_frontier[i] = S.frontier.count(reps[i]) != 0;
    }
    std::vector<std::pair<std::size_t, std::size_t>> items;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = 0; j < reps.size(); ++j) {
        if (in_frontier[i] || in_frontier[j]) {
          items.emplace_back(i, j);
        }
      }
    }

    auto const key_of = [&](Word const& w) {
      return canonical ? canonical_rotation(w).first : w;
    };

    auto const evaluate = [&](std::size_t                      begin,
                              std::size_t                      end,
                              std::map<Word, Candidate>& out) {
      for (std::size_t it = begin; it < end; ++it) {
        auto const [i, j] = items[it];
        for (std::size_t x = 0; x < operands[i].size(); ++x) {
          for (std::size_t y = 0; y < operands[j].size(); ++y) {
            auto const& a  = operands[i][x];
            auto const& b  = operands[j][y];
            auto const  cr = cyc_reduce(concat(a.word, b.word)).decomposition;
            Word const& c  = cr.core;
            if (c.empty() || c.size() > S.config.max_len) {
              continue;
            }
            Word key = key_of(c);
            if (S.members.count(key) != 0) {
              continue;
            }
            auto const order = std::make_tuple(it, x, y);
            auto       found = out.find(key);
            if (found != out.end() && found->second.order <= order) {
              continue;
            }
            Candidate cand{order, c, std::nullopt};
            if (provenance) {
              HElement const& ha = S.provenance.at(a.rep);
              HElement const& hb = S.provenance.at(b.rep);
              cand.h = conjugate(concat(rotated(ha, a.rep, a.shift),
                                        rotated(hb, b.rep, b.shift)),
                                 inverse(cr.conjugator));
            }
            out.insert_or_assign(std::move(key), std::move(cand));
          }
        }
      }
    };

    workers = std::max<std::size_t>(1, std::min(workers, items.size()));
    std::vector<std::map<Word, Candidate>> partial(workers);
    if (workers == 1) {
      evaluate(0, items.size(), partial[0]);
    } else {
      std::vector<std::jthread> threads;
      std::size_t const         chunk = (items.size() + workers - 1) / workers;
      for (std::size_t w = 0; w < workers; ++w) {
        std::size_t const begin = std::min(items.size(), w * chunk);
        std::size_t const end   = std::min(items.size(), begin + chunk);
        threads.emplace_back([&, begin, end, w] {
          evaluate(begin, end, partial[w]);
        });
      }
    }

    // Merge: for each class keep the candidate first in item order.
    std::map<Word, Candidate> merged;
    for (auto& part : partial) {
      for (auto& [key, cand] : part) {
        auto found = merged.find(key);
        if (found == merged.end() || cand.order < found->second.order) {
          merged.insert_or_assign(key, std::move(cand));
        }
      }
    }

    ClosureSet result = S;
    std::set<Word> added;
    for (auto const& [key, cand] : merged) {
      insert_member(result, added, cand.word, cand.h ? &*cand.h : nullptr);
    }
    result.frontier = std::move(added);
    result.rounds_done += 1;
    result.saturated = result.frontier.empty();
    return result;
  }

  ClosureSet run(ClosureSet const& S, std::size_t workers) {
    ClosureSet result = S;
    for (std::size_t i = 0; i < S.config.max_rounds && !result.saturated;
         ++i) {
      result = step(result, workers);
    }
    return result;
  }

  ContainsResult contains(ClosureSet const& S, Word const& w) {
    Word const c = cyclically_reduced_form(w);
    if (c.empty()) {
      return {false, false};
    }
    if (c.size() > S.config.max_len) {
      return {false, true};
    }
    Word const key
        = S.config.canonical_dedup ? canonical_rotation(c).first : c;
    return {S.members.count(key) != 0, false};
  }

  std::set<Word> expanded_members(ClosureSet const& S) {
    if (!S.config.canonical_dedup) {
      return S.members;
    }
    std::set<Word> result;
    for (auto const& m : S.members) {
      for (auto& r : rotations(m)) {
        result.insert(std::move(r));
      }
    }
    return result;
  }

  void save(ClosureSet const& S, std::ostream& out) {
    if (S.alphabet == nullptr || !is_compact_alphabet(*S.alphabet)) {
      throw PreconditionError("closure files need generators a-z");
    }
    std::string alphabet;
    for (auto const& name : S.alphabet->names()) {
      if (!alphabet.empty()) {
        alphabet += ',';
      }
      alphabet += name;
    }
    out << header_tag << ' ' << format_version << " alphabet=" << alphabet
        << " maxlen=" << S.config.max_len << " rounds=" << S.rounds_done
        << " saturated=" << int(S.saturated)
        << " inverses=" << int(S.config.include_inverses)
        << " canonical=" << int(S.config.canonical_dedup) << '\n';
    for (auto const& m : S.members) {
      out << format_word(m) << '\n';
    }
    out << frontier_tag << '\n';
    for (auto const& m : S.frontier) {
      out << format_word(m) << '\n';
    }
    if (!out) {
      throw IoError("failed writing closure file");
    }
  }

  ClosureSet load(std::istream& in) {
    std::string const text((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
    if (in.bad()) {
      throw IoError("failed reading closure file");
    }
    // Lines with their starting offsets.
    std::vector<std::pair<std::string_view, std::size_t>> lines;
    for (std::size_t pos = 0; pos < text.size();) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string::npos) {
        end = text.size();
      }
      lines.emplace_back(std::string_view(text).substr(pos, end - pos), pos);
      pos = end + 1;
    }
    if (lines.empty()) {
      bad_file(0, "missing header");
    }

    // Header: fixed tag, version and keys in a fixed order.
    auto const [header, _] = lines.front();
    std::vector<std::pair<std::string_view, std::size_t>> fields;
    for (std::size_t pos = 0; pos <= header.size();) {
      std::size_t end = header.find(' ', pos);
      if (end == std::string_view::npos) {
        end = header.size();
      }
      fields.emplace_back(header.substr(pos, end - pos), pos);
      pos = end + 1;
    }
    if (fields[0].first != header_tag) {
      bad_file(0, "missing header");
    }
    if (fields.size() < 2 || fields[1].first != format_version) {
      bad_file(fields.size() < 2 ? header.size() : fields[1].second,
               "unsupported version");
    }
    char const* const keys[] = {
        "alphabet", "maxlen", "rounds", "saturated", "inverses", "canonical"};
    if (fields.size() != 2 + std::size(keys)) {
      bad_file(0, "header must have exactly the fields alphabet, maxlen, "
                  "rounds, saturated, inverses, canonical");
    }
    std::vector<std::string_view> values;
    for (std::size_t i = 0; i < std::size(keys); ++i) {
      auto const [field, offset] = fields[2 + i];
      std::string const prefix   = std::string(keys[i]) + "=";
      if (field.substr(0, prefix.size()) != prefix) {
        bad_file(offset, "expected " + prefix);
      }
      values.push_back(field.substr(prefix.size()));
    }
    auto const number = [&](std::size_t i) {
      std::size_t       value = 0;
      auto const        v     = values[i];
      auto const [ptr, ec]    = std::from_chars(v.data(), v.data() + v.size(),
                                                value);
      if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
        bad_file(fields[2 + i].second, std::string("bad value for ") + keys[i]);
      }
      return value;
    };
    auto const flag = [&](std::size_t i) {
      if (values[i] != "0" && values[i] != "1") {
        bad_file(fields[2 + i].second,
                 std::string(keys[i]) + " must be 0 or 1");
      }
      return values[i] == "1";
    };

    std::vector<std::string> names;
    for (std::size_t pos = 0; pos <= values[0].size();) {
      std::size_t end = values[0].find(',', pos);
      if (end == std::string_view::npos) {
        end = values[0].size();
      }
      names.emplace_back(values[0].substr(pos, end - pos));
      pos = end + 1;
    }
    ClosureSet S;
    try {
      S.alphabet = make_alphabet(std::move(names));
    } catch (PreconditionError const& e) {
      bad_file(fields[2].second, e.what());
    }
    if (!is_compact_alphabet(*S.alphabet)) {
      bad_file(fields[2].second, "generators must be single letters a-z");
    }
    S.config.max_len          = number(1);
    S.rounds_done             = number(2);
    S.saturated               = flag(3);
    S.config.include_inverses = flag(4);
    S.config.canonical_dedup  = flag(5);
    if (S.config.max_len < 1) {
      bad_file(fields[3].second, "maxlen must be positive");
    }

    bool in_frontier = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      auto const [line, offset] = lines[i];
      if (line == frontier_tag) {
        if (in_frontier) {
          bad_file(offset, "repeated #frontier line");
        }
        in_frontier = true;
        continue;
      }
      Word w;
      try {
        w = parse_word(line, S.alphabet);
      } catch (ParseError const& e) {
        throw ParseError(offset + e.offset(), std::string("closure file: ")
                                                  + e.what());
      }
      auto const invalid = [&](std::string const& why) {
        throw ValidationError("closure file line " + std::to_string(i + 1)
                              + ": " + why);
      };
      if (in_frontier) {
        if (S.members.count(w) == 0) {
          invalid("frontier word is not a member");
        }
        if (!S.frontier.insert(w).second) {
          invalid("repeated frontier word");
        }
        continue;
      }
      if (w.empty() || !is_cyclically_reduced(w)) {
        invalid("member is not a non-empty cyclically reduced word");
      }
      if (w.size() > S.config.max_len) {
        invalid("member longer than maxlen");
      }
      if (S.config.canonical_dedup && canonical_rotation(w).first != w) {
        invalid("member is not its canonical rotation");
      }
      if (!S.members.insert(w).second) {
        invalid("repeated member");
      }
    }
    if (!in_frontier) {
      bad_file(text.size(), "missing #frontier line");
    }
    if (!S.config.canonical_dedup) {
      for (auto const& m : S.members) {
        for (auto const& r : rotations(m)) {
          if (S.members.count(r) == 0) {
            throw ValidationError("closure file: members are not closed "
                                  "under cyclic permutation");
          }
        }
      }
    }
    return S;
  }

}  // namespace cycred
