//
// cycred - cyclically reduced words in free groups
// Copyright (C) 2026 The cycred authors
//
// Licensed under the Apache License, Version 2.0.
//

#ifndef CYCRED_REDUCTION_HPP_
#define CYCRED_REDUCTION_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cycred/word.hpp"

namespace cycred {

  enum class CancellationKind { internal, external };

  //! One cancelled pair, as positions in the original word.
  struct CancellationEvent {
    std::size_t      left_pos  = 0;
    std::size_t      right_pos = 0;
    CancellationKind kind      = CancellationKind::internal;

    friend bool operator==(CancellationEvent const&,
                           CancellationEvent const&) = default;
  };

  struct CancellationTrace {
    std::size_t                    original_length = 0;
    std::vector<CancellationEvent> events;

    friend bool operator==(CancellationTrace const&,
                           CancellationTrace const&) = default;
  };

  //! A word together with the events that produced it.
  struct Reduction {
    Word              word;
    CancellationTrace trace;
  };

  //! rho(w) = conjugator core conjugator^-1, with core cyclically reduced.
  struct CycRedDecomposition {
    Word conjugator;
    Word core;
  };

  struct CycReduction {
    CycRedDecomposition decomposition;
    CancellationTrace   trace;
  };

  //! u = u1 a and v = a^-1 v1 with a as long as possible.
  struct MaxCancellation {
    Word u1;
    Word a;
    Word v1;
  };

  //! Free reduction by a left-to-right stack scan.
  Reduction reduce(Word const& w);

  //! Free reduction followed by peeling one outermost inverse pair at a time.
  CycReduction cyc_reduce(Word const& w);

  //! rho(w) without the trace.
  Word reduced_form(Word const& w);

  //! The cyclically reduced form of w without the trace.
  Word cyclically_reduced_form(Word const& w);

  //! rho(uv).
  Word reduced_product(Word const& u, Word const& v);

  //! The cyclically reduced form of uv, written u * v.
  Word cyc_product(Word const& u, Word const& v);

  //! Throws PreconditionError unless u and v are reduced.
  MaxCancellation max_cancellation(Word const& u, Word const& v);

  //! How cancel_any_order picks the next pair.
  enum class CancelPolicy {
    internal_first,  //!< leftmost adjacent pair, external only when stuck
    internal_last,   //!< rightmost adjacent pair, external only when stuck
    external_first,  //!< outermost pair whenever valid, else leftmost
    alternating,     //!< prefer external on even steps, internal on odd
    seeded_random    //!< uniform among the valid pairs
  };

  struct Chooser {
    CancelPolicy  policy = CancelPolicy::internal_first;
    std::uint64_t seed   = 0;
  };

  //! Cancels pairs, internal or external, until none is available.  The result
  //! is a cyclic permutation of the cyclically reduced form of w.
  Reduction cancel_any_order(Word const& w, Chooser chooser);

  //! Applies the events of \p trace in order and returns the surviving
  //! letters.  Each event must be valid for its recorded kind when applied;
  //! otherwise ValidationError is thrown naming the event index.
  Word replay_trace(Word const& w, CancellationTrace const& trace);

  //! Moves every position p to (p + shift) mod original_length.
  //!
  //! The events keep their order if that order is still valid; otherwise
  //! they are re-sequenced, innermost available pair first with leftmost
  //! tie-break.  Kinds are recomputed: internal when the pair is adjacent
  //! among the survivors, external when it is the outermost pair.
  CancellationTrace rotate_trace(CancellationTrace const& trace,
                                 std::int64_t             shift);

}  // namespace cycred

#endif  // CYCRED_REDUCTION_HPP_
