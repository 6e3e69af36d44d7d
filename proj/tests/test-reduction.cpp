//
// cycred - cyclically reduced words in free groups
// Copyright (C) 2026 The cycred authors
//
// Licensed under the Apache License, Version 2.0.
//

#include "catch_amalgamated.hpp"

#include "cycred/error.hpp"
#include "cycred/reduction.hpp"

#include "support/oracles.hpp"

namespace cycred {

  using testing::W;

  namespace {

    // Checks the structural invariants of a trace against w.
    void check_trace(Word const& w, CancellationTrace const& t) {
      REQUIRE(t.original_length == w.size());
      std::vector<bool> used(w.size());
      for (auto const& e : t.events) {
        REQUIRE(e.left_pos < e.right_pos);
        REQUIRE(e.right_pos < w.size());
        REQUIRE(cancels(w[e.left_pos], w[e.right_pos]));
        REQUIRE(!used[e.left_pos]);
        REQUIRE(!used[e.right_pos]);
        used[e.left_pos] = used[e.right_pos] = true;
      }
    }

    constexpr CancelPolicy all_policies[] = {CancelPolicy::internal_first,
                                             CancelPolicy::internal_last,
                                             CancelPolicy::external_first,
                                             CancelPolicy::alternating,
                                             CancelPolicy::seeded_random};

  }  // namespace

  TEST_CASE("reduce: fixtures", "[reduction]") {
    auto r = reduce(W("txyYzT"));
    REQUIRE(r.word == W("txzT"));
    REQUIRE(r.trace.events
            == std::vector<CancellationEvent>{{2, 3, CancellationKind::internal}});
    r = reduce(W("1"));
    REQUIRE(r.word.empty());
    REQUIRE(r.trace.events.empty());
    REQUIRE(reduce(W("xyYX")).word.empty());
  }

  TEST_CASE("reduce: trace replays and agrees with the naive rewriter",
            "[reduction]") {
    testing::Random rng(11);
    auto            a = testing::alphabet(2);
    for (int i = 0; i < 3000; ++i) {
      Word w  = rng.word(a, 0, 12);
      auto r  = reduce(w);
      REQUIRE(r.word == testing::naive_reduce(w));
      REQUIRE(is_reduced(r.word));
      check_trace(w, r.trace);
      for (auto const& e : r.trace.events) {
        REQUIRE(e.kind == CancellationKind::internal);
      }
      REQUIRE(replay_trace(w, r.trace) == r.word);
      REQUIRE(reduce(r.word).word == r.word);
    }
  }

  TEST_CASE("cyc_reduce: fixtures", "[reduction]") {
    auto r = cyc_reduce(W("xyzxYX"));
    REQUIRE(r.decomposition.core == W("zx"));
    REQUIRE(r.decomposition.conjugator == W("xy"));
    r = cyc_reduce(W("txyYzT"));
    REQUIRE(r.decomposition.core == W("xz"));
    REQUIRE(r.decomposition.conjugator == W("t"));
    r = cyc_reduce(W("xyz"));
    REQUIRE(r.decomposition.core == W("xyz"));
    REQUIRE(r.decomposition.conjugator.empty());
    REQUIRE(r.trace.events.empty());
  }

  TEST_CASE("cyc_reduce: decomposition and trace", "[reduction]") {
    testing::Random rng(12);
    auto            a = testing::alphabet(3);
    for (int i = 0; i < 3000; ++i) {
      Word w              = rng.word(a, 0, 12);
      auto r              = cyc_reduce(w);
      auto const& [t, c]  = r.decomposition;
      REQUIRE(c == testing::naive_cyc_reduce(w));
      REQUIRE(t == testing::naive_cyc_conjugator(w));
      REQUIRE(is_cyclically_reduced(c));
      REQUIRE(concat({t, c, inverse(t)}) == reduced_form(w));
      check_trace(w, r.trace);
      REQUIRE(replay_trace(w, r.trace) == c);
      auto const rho = reduce(w).trace.events;
      REQUIRE(r.trace.events.size() == rho.size() + t.size());
      REQUIRE(std::equal(rho.begin(), rho.end(), r.trace.events.begin()));
      for (std::size_t k = rho.size(); k < r.trace.events.size(); ++k) {
        REQUIRE(r.trace.events[k].kind == CancellationKind::external);
      }
    }
  }

  TEST_CASE("products", "[reduction]") {
    REQUIRE(reduced_product(W("txy"), W("YzT")) == W("txzT"));
    REQUIRE(cyc_product(W("txy"), W("YzT")) == W("xz"));
    REQUIRE(cyc_product(cyc_product(W("xy"), W("X")), W("x")) == W("yx"));
    REQUIRE(cyc_product(W("xy"), cyc_product(W("X"), W("x"))) == W("xy"));
    REQUIRE(reduced_product(W("xyz"), W("ZYX")).empty());
    REQUIRE(cyc_product(W("xyz"), W("ZYX")).empty());
    REQUIRE(reduced_product(W("xyY"), W("1")) == W("x"));
  }

  TEST_CASE("cyc_product: identity, no idempotents, unique inverse",
            "[reduction]") {
    testing::Random rng(13);
    auto            a = testing::alphabet(2);
    for (int i = 0; i < 1000; ++i) {
      Word w = rng.word(a, 0, 8);
      REQUIRE(cyc_product(w, W("1", a)) == cyclically_reduced_form(w));
      REQUIRE(cyc_product(W("1", a), w) == cyclically_reduced_form(w));
      Word c = rng.cyclically_reduced(a, 1, 6);
      REQUIRE(cyc_product(c, c) == concat(c, c));
      Word u = rng.word(a, 0, 6);
      Word v = rng.word(a, 0, 6);
      REQUIRE(cyc_product(u, v).empty()
              == (reduced_form(v) == reduced_form(inverse(u))));
    }
  }

  TEST_CASE("max_cancellation", "[reduction]") {
    auto m = max_cancellation(W("txy"), W("YzT"));
    REQUIRE(m.u1 == W("tx"));
    REQUIRE(m.a == W("y"));
    REQUIRE(m.v1 == W("zT"));
    m = max_cancellation(W("xy"), W("zx"));
    REQUIRE(m.a.empty());
    m = max_cancellation(W("xyz"), W("ZYX"));
    REQUIRE(m.u1.empty());
    REQUIRE(m.a == W("xyz"));
    REQUIRE(m.v1.empty());
    REQUIRE_THROWS_AS(max_cancellation(W("xX"), W("y")), PreconditionError);

    testing::Random rng(14);
    auto            alph = testing::alphabet(2);
    for (int i = 0; i < 1000; ++i) {
      Word u = rng.reduced(alph, 0, 8);
      Word v = rng.reduced(alph, 0, 8);
      m      = max_cancellation(u, v);
      REQUIRE(concat(m.u1, m.a) == u);
      REQUIRE(concat(inverse(m.a), m.v1) == v);
      REQUIRE(concat(m.u1, m.v1) == testing::naive_reduce(concat(u, v)));
      REQUIRE(is_reduced(concat(m.u1, m.v1)));
    }
  }

  TEST_CASE("cancel_any_order: fixtures", "[reduction]") {
    Word const w = W("xXyX");
    auto       r = cancel_any_order(w, {CancelPolicy::external_first, 0});
    REQUIRE(r.word == W("Xy"));
    REQUIRE(r.trace.events.front().kind == CancellationKind::external);
    r = cancel_any_order(w, {CancelPolicy::internal_first, 0});
    REQUIRE(r.word == W("yX"));
    for (auto p : all_policies) {
      r = cancel_any_order(W("xyz"), {p, 7});
      REQUIRE(r.word == W("xyz"));
      REQUIRE(r.trace.events.empty());
    }
  }

  TEST_CASE("cancel_any_order: external while an internal pair is inside",
            "[reduction]") {
    // x (y Y) X: the outer pair may go first.
    auto r = cancel_any_order(W("xyYX"), {CancelPolicy::external_first, 0});
    REQUIRE(r.trace.events.front()
            == CancellationEvent{0, 3, CancellationKind::external});
    REQUIRE(r.word.empty());
  }

  TEST_CASE("cancel_any_order: always a rotation of the cyclic core",
            "[reduction]") {
    testing::Random rng(15);
    auto            a = testing::alphabet(2);
    for (int i = 0; i < 500; ++i) {
      Word w    = rng.word(a, 0, 10);
      Word core = cyclically_reduced_form(w);
      for (auto p : all_policies) {
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
          auto r = cancel_any_order(w, {p, seed});
          REQUIRE(is_cyclically_reduced(r.word));
          REQUIRE(is_cyclic_permutation(r.word, core));
          check_trace(w, r.trace);
          REQUIRE(replay_trace(w, r.trace) == r.word);
        }
      }
    }
  }

  TEST_CASE("cancel_any_order: deterministic per seed", "[reduction]") {
    Word const w = W("xyXYyxYXxyYX");
    auto const a = cancel_any_order(w, {CancelPolicy::seeded_random, 42});
    auto const b = cancel_any_order(w, {CancelPolicy::seeded_random, 42});
    REQUIRE(a.trace == b.trace);
  }

  TEST_CASE("replay_trace: invalid events", "[reduction]") {
    Word const        w = W("xyYX");
    CancellationTrace t{4, {{0, 3, CancellationKind::internal}}};
    REQUIRE_THROWS_AS(replay_trace(w, t), ValidationError);
    t = {4, {{1, 3, CancellationKind::internal}}};
    REQUIRE_THROWS_AS(replay_trace(w, t), ValidationError);
    t = {4, {{1, 2, CancellationKind::external}}};
    REQUIRE_THROWS_AS(replay_trace(w, t), ValidationError);
    t = {5, {}};
    REQUIRE_THROWS_AS(replay_trace(w, t), PreconditionError);
    t = {4, {{1, 2, CancellationKind::internal}, {1, 2, CancellationKind::internal}}};
    REQUIRE_THROWS_AS(replay_trace(w, t), ValidationError);
    t = {4, {{0, 3, CancellationKind::external}, {1, 2, CancellationKind::internal}}};
    REQUIRE(replay_trace(w, t).empty());
  }

  TEST_CASE("rotate_trace", "[reduction]") {
    CancellationTrace const t{4, {{1, 2, CancellationKind::internal}}};
    REQUIRE(rotate_trace(t, 0) == t);
    REQUIRE(rotate_trace(t, 4) == t);
    auto const r = rotate_trace(t, 2);
    REQUIRE(r.events
            == std::vector<CancellationEvent>{{0, 3, CancellationKind::external}});
    // Negative shifts wrap.
    REQUIRE(rotate_trace(t, -2) == r);
  }

  TEST_CASE("rotate_trace: rotated traces replay against the rotated word",
            "[reduction]") {
    testing::Random rng(16);
    auto            a = testing::alphabet(2);
    for (int i = 0; i < 2000; ++i) {
      Word w     = rng.word(a, 1, 10);
      auto shift = static_cast<std::int64_t>(rng.uniform(0, w.size() - 1));
      auto r     = cyc_reduce(w);
      // Letter at p moves to (p - shift) mod n, so the positions move by
      // n - shift.
      Word rotated = rotate(w, shift);
      auto moved   = rotate_trace(r.trace, static_cast<std::int64_t>(w.size()) - shift);
      Word residual = replay_trace(rotated, moved);
      REQUIRE(is_cyclic_permutation(residual, r.decomposition.core));
    }
  }

  TEST_CASE("cyclically reduced form: algebraic laws", "[reduction]") {
    testing::Random rng(17);
    auto            a = testing::alphabet(3);
    for (int i = 0; i < 1000; ++i) {
      Word w = rng.word(a, 0, 10);
      Word c = cyclically_reduced_form(w);
      REQUIRE(cyclically_reduced_form(reduced_form(w)) == c);
      REQUIRE(cyclically_reduced_form(c) == c);
      REQUIRE(inverse(c) == cyclically_reduced_form(inverse(w)));
      REQUIRE(c.empty() == reduced_form(w).empty());
      REQUIRE(reduced_form(reverse(w)) == reverse(reduced_form(w)));
      REQUIRE(cyclically_reduced_form(reverse(w)) == reverse(c));
      Word u = rng.word(a, 0, 6);
      Word v = rng.word(a, 0, 6);
      REQUIRE(reverse(cyc_product(u, v))
              == cyc_product(reverse(v), reverse(u)));
      REQUIRE(cyc_product(u, v)
              == cyc_product(reduced_form(u), reduced_form(v)));
      Word t = rng.reduced(a, 0, 4);
      Word const conj = concat({t, reduced_form(w), inverse(t)});
      REQUIRE(is_cyclic_permutation(cyclically_reduced_form(conj), c));
      if (is_reduced(conj)) {
        REQUIRE(cyclically_reduced_form(conj) == c);
      }
      REQUIRE(is_cyclic_permutation(
          cyclically_reduced_form(rotate(w, rng.uniform(0, 10))), c));
    }
    // t w t^-1 with t = x, w = yx: the core is a proper rotation of w.
    REQUIRE(cyclically_reduced_form(W("xyxX")) == W("xy"));
    REQUIRE(cyclically_reduced_form(W("yx")) == W("yx"));
  }

}  // namespace cycred
