//
// cycred - cyclically reduced words in free groups
// Copyright (C) 2026 The cycred authors
//
// Licensed under the Apache License, Version 2.0.
//

#include "cycred/reduction.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "cycred/error.hpp"

namespace cycred {

  namespace {

    // Doubly linked list over positions 0..n-1 with sentinels n (head) and
    // n + 1 (tail).
    class Survivors {
     public:
      explicit Survivors(std::size_t n)
          : _n(n), _next(n + 2), _prev(n + 2), _alive(n, true), _count(n) {
        for (std::size_t i = 0; i < n + 2; ++i) {
          _next[i] = i + 1;
          _prev[i] = i == 0 ? n : i - 1;
        }
        _next[n]     = n == 0 ? n + 1 : 0;
        _prev[n + 1] = n == 0 ? n : n - 1;
        if (n > 0) {
          _next[n - 1] = n + 1;
          _prev[0]     = n;
        }
      }

      [[nodiscard]] bool alive(std::size_t i) const {
        return i < _n && _alive[i];
      }

      [[nodiscard]] std::size_t count() const {
        return _count;
      }

      [[nodiscard]] bool is_end(std::size_t i) const {
        return i >= _n;
      }

      [[nodiscard]] std::size_t first() const {
        return _next[_n];
      }

      [[nodiscard]] std::size_t last() const {
        return _prev[_n + 1];
      }

      [[nodiscard]] std::size_t next(std::size_t i) const {
        return _next[i];
      }

      [[nodiscard]] std::size_t prev(std::size_t i) const {
        return _prev[i];
      }

      [[nodiscard]] bool adjacent(std::size_t l, std::size_t r) const {
        return alive(l) && alive(r) && _next[l] == r;
      }

      [[nodiscard]] bool outermost(std::size_t l, std::size_t r) const {
        return alive(l) && alive(r) && l != r && first() == l && last() == r;
      }

      void erase(std::size_t i) {
        _next[_prev[i]] = _next[i];
        _prev[_next[i]] = _prev[i];
        _alive[i]       = false;
        --_count;
      }

      [[nodiscard]] std::vector<std::size_t> positions() const {
        std::vector<std::size_t> result;
        for (std::size_t i = first(); !is_end(i); i = _next[i]) {
          result.push_back(i);
        }
        return result;
      }

     private:
      std::size_t              _n;
      std::vector<std::size_t> _next;
      std::vector<std::size_t> _prev;
      std::vector<bool>        _alive;
      std::size_t              _count;
    };

    Word word_at(Word const& w, std::vector<std::size_t> const& positions) {
      std::vector<Letter> letters;
      letters.reserve(positions.size());
      for (auto p : positions) {
        letters.push_back(w[p]);
      }
      return w.with_letters(std::move(letters));
    }

    std::optional<CancellationKind> kind_now(Survivors const&  s,
                                             CancellationEvent e) {
      if (s.adjacent(e.left_pos, e.right_pos)) {
        return CancellationKind::internal;
      } else if (s.outermost(e.left_pos, e.right_pos)) {
        return CancellationKind::external;
      }
      return std::nullopt;
    }

    char const* kind_name(CancellationKind k) {
      return k == CancellationKind::internal ? "internal" : "external";
    }

  }  // namespace

  Reduction reduce(Word const& w) {
    Reduction                result{Word(w.alphabet()), {w.size(), {}}};
    std::vector<std::size_t> stack;
    stack.reserve(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (!stack.empty() && cancels(w[stack.back()], w[j])) {
        result.trace.events.push_back(
            {stack.back(), j, CancellationKind::internal});
        stack.pop_back();
      } else {
        stack.push_back(j);
      }
    }
    result.word = word_at(w, stack);
    return result;
  }

  CycReduction cyc_reduce(Word const& w) {
    auto [reduced, trace] = reduce(w);
    // Survivors of the free reduction, in order.
    std::vector<std::size_t> stack;
    {
      std::vector<bool> dead(w.size(), false);
      for (auto const& e : trace.events) {
        dead[e.left_pos]  = true;
        dead[e.right_pos] = true;
      }
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (!dead[i]) {
          stack.push_back(i);
        }
      }
    }
    std::size_t i = 0, k = stack.size();
    while (k - i >= 2 && cancels(w[stack[i]], w[stack[k - 1]])) {
      trace.events.push_back(
          {stack[i], stack[k - 1], CancellationKind::external});
      ++i;
      --k;
    }
    CycReduction result;
    result.decomposition.conjugator = reduced.prefix(i);
    result.decomposition.core       = reduced.subword(i, k - i);
    result.trace                    = std::move(trace);
    return result;
  }

  Word reduced_form(Word const& w) {
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (auto l : w) {
      if (!stack.empty() && cancels(stack.back(), l)) {
        stack.pop_back();
      } else {
        stack.push_back(l);
      }
    }
    return w.with_letters(std::move(stack));
  }

  Word cyclically_reduced_form(Word const& w) {
    Word const  r = reduced_form(w);
    std::size_t i = 0, k = r.size();
    while (k - i >= 2 && cancels(r[i], r[k - 1])) {
      ++i;
      --k;
    }
    return r.subword(i, k - i);
  }

  Word reduced_product(Word const& u, Word const& v) {
    return reduced_form(concat(u, v));
  }

  Word cyc_product(Word const& u, Word const& v) {
    return cyclically_reduced_form(concat(u, v));
  }

  MaxCancellation max_cancellation(Word const& u, Word const& v) {
    if (!is_reduced(u) || !is_reduced(v)) {
      throw PreconditionError("max_cancellation requires reduced words");
    }
    std::size_t k = 0;
    while (k < u.size() && k < v.size() && cancels(u[u.size() - 1 - k], v[k])) {
      ++k;
    }
    return {u.prefix(u.size() - k), u.suffix(k), v.subword(k)};
  }

  Reduction cancel_any_order(Word const& w, Chooser chooser) {
    std::size_t const n = w.size();
    Survivors         s(n);
    CancellationTrace trace{n, {}};
    std::mt19937_64   rng(chooser.seed);
    std::size_t       step = 0;

    while (s.count() >= 2) {
      std::vector<CancellationEvent> options;
      for (std::size_t i = s.first(); !s.is_end(s.next(i)); i = s.next(i)) {
        if (cancels(w[i], w[s.next(i)])) {
          options.push_back({i, s.next(i), CancellationKind::internal});
        }
      }
      std::optional<CancellationEvent> outer;
      if (s.next(s.first()) != s.last() && cancels(w[s.first()], w[s.last()])) {
        outer = CancellationEvent{
            s.first(), s.last(), CancellationKind::external};
      }
      if (options.empty() && !outer) {
        break;
      }

      CancellationEvent chosen;
      auto const        leftmost = [&] {
        return options.empty() ? *outer : options.front();
      };
      auto const outer_or = [&](CancellationEvent fallback) {
        return outer ? *outer : fallback;
      };
      switch (chooser.policy) {
        case CancelPolicy::internal_first:
          chosen = leftmost();
          break;
        case CancelPolicy::internal_last:
          chosen = options.empty() ? *outer : options.back();
          break;
        case CancelPolicy::external_first:
          chosen = options.empty() ? *outer : outer_or(options.front());
          break;
        case CancelPolicy::alternating:
          if (step % 2 == 0) {
            chosen = options.empty() ? *outer : outer_or(options.front());
          } else {
            chosen = leftmost();
          }
          break;
        case CancelPolicy::seeded_random: {
          if (outer) {
            options.push_back(*outer);
          }
          std::uniform_int_distribution<std::size_t> pick(0,
                                                          options.size() - 1);
          chosen = options[pick(rng)];
          break;
        }
      }
      s.erase(chosen.left_pos);
      s.erase(chosen.right_pos);
      trace.events.push_back(chosen);
      ++step;
    }
    return {word_at(w, s.positions()), std::move(trace)};
  }

  Word replay_trace(Word const& w, CancellationTrace const& trace) {
    if (trace.original_length != w.size()) {
      throw PreconditionError("trace is for a word of length "
                            + std::to_string(trace.original_length)
                            + ", got length " + std::to_string(w.size()));
    }
    Survivors s(w.size());
    for (std::size_t i = 0; i < trace.events.size(); ++i) {
      auto const& e    = trace.events[i];
      auto const  fail = [&](std::string const& why) {
        throw ValidationError("trace event " + std::to_string(i) + " ("
                              + std::to_string(e.left_pos) + ", "
                              + std::to_string(e.right_pos) + ", "
                              + kind_name(e.kind) + "): " + why);
      };
      if (e.left_pos >= e.right_pos || e.right_pos >= w.size()) {
        fail("positions out of order or out of range");
      }
      if (!s.alive(e.left_pos) || !s.alive(e.right_pos)) {
        fail("position already cancelled");
      }
      if (!cancels(w[e.left_pos], w[e.right_pos])) {
        fail("letters are not mutually inverse");
      }
      bool const ok = e.kind == CancellationKind::internal
                          ? s.adjacent(e.left_pos, e.right_pos)
                          : s.outermost(e.left_pos, e.right_pos);
      if (!ok) {
        fail(e.kind == CancellationKind::internal
                 ? "positions are not adjacent among survivors"
                 : "positions are not the first and last survivors");
      }
      s.erase(e.left_pos);
      s.erase(e.right_pos);
    }
    return word_at(w, s.positions());
  }

  CancellationTrace rotate_trace(CancellationTrace const& trace,
                                 std::int64_t             shift) {
    std::size_t const n = trace.original_length;
    CancellationTrace result{n, {}};
    if (n == 0) {
      result.events = trace.events;
      return result;
    }
    auto const m = static_cast<std::int64_t>(n);
    auto const k = static_cast<std::size_t>(((shift % m) + m) % m);

    std::vector<CancellationEvent> moved;
    moved.reserve(trace.events.size());
    for (auto const& e : trace.events) {
      std::size_t a = (e.left_pos + k) % n;
      std::size_t b = (e.right_pos + k) % n;
      if (a > b) {
        std::swap(a, b);
      }
      moved.push_back({a, b, e.kind});
    }

    // Keep the given order when it still replays positionally.
    {
      Survivors                      s(n);
      std::vector<CancellationEvent> kept;
      bool                           ok = true;
      for (auto e : moved) {
        auto kind = kind_now(s, e);
        if (!kind) {
          ok = false;
          break;
        }
        e.kind = *kind;
        kept.push_back(e);
        s.erase(e.left_pos);
        s.erase(e.right_pos);
      }
      if (ok) {
        result.events = std::move(kept);
        return result;
      }
    }

    // Re-sequence: innermost available pair first, leftmost tie-break.
    Survivors         s(n);
    std::vector<bool> done(moved.size(), false);
    std::size_t       remaining = moved.size();
    while (remaining > 0) {
      std::optional<std::size_t> internal, external;
      for (std::size_t i = 0; i < moved.size(); ++i) {
        if (done[i]) {
          continue;
        }
        auto kind = kind_now(s, moved[i]);
        if (kind == CancellationKind::internal) {
          if (!internal || moved[i].left_pos < moved[*internal].left_pos) {
            internal = i;
          }
        } else if (kind == CancellationKind::external) {
          external = i;
        }
      }
      auto const pick = internal ? internal : external;
      if (!pick) {
        break;
      }
      auto e = moved[*pick];
      e.kind = internal ? CancellationKind::internal
                        : CancellationKind::external;
      s.erase(e.left_pos);
      s.erase(e.right_pos);
      result.events.push_back(e);
      done[*pick] = true;
      --remaining;
    }
    // Whatever could not be scheduled is kept as given; replay rejects it.
    for (std::size_t i = 0; i < moved.size(); ++i) {
      if (!done[i]) {
        result.events.push_back(moved[i]);
      }
    }
    return result;
  }

}  // namespace cycred
