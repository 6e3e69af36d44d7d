//
// cycred - cyclically reduced words in free groups
// Copyright (C) 2026 The cycred authors
//
// Licensed under the Apache License, Version 2.0.
//

#ifndef CYCRED_TOOLS_CLI_HPP_
#define CYCRED_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace cycred::cli {

  //! Exit statuses.
  enum Status : int { ok = 0, failed = 1, bad_input = 2 };

  //! Runs one invocation; \p args excludes the program name.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace cycred::cli

#endif  // CYCRED_TOOLS_CLI_HPP_
