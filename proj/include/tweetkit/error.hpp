// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#pragma once

#include <stdexcept>
#include <string>

namespace tweetkit {

/// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad arguments or configuration (precondition violations). CLI exit code 1.
class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error(what) {}
};

/// Problems with input data: missing files, malformed CSV, unknown labels. CLI exit code 2.
class DataError : public Error {
public:
    explicit DataError(const std::string& what) : Error(what) {}
};

/// Corrupt or unsupported serialized model bundles.
class BundleError : public Error {
public:
    explicit BundleError(const std::string& what) : Error(what) {}
};

} // namespace tweetkit
