// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tweetkit::app {

/// Command-line entry point. Results go to `out`, diagnostics to `err`.
/// Exit codes: 0 success, 1 usage error, 2 data error, 3 reproduce found a
/// score outside its acceptance band.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tweetkit::app
