// Copyright 2026 The cliquelab Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliquelab {

enum class ErrorCode {
  kParse,
  kInput,
  kUnsupportedSize,
  kZeroPolynomial,
  kNotSquareFree,
  kNoRealRoot,
  kIo,
  kInvalidArgument,
  kInternal,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class Graph6Error {
  kMalformedSize,     // size byte missing or below 63
  kTooManyVertices,   // multi-byte size field (n > 62)
  kInvalidCharacter,  // payload byte outside 63..126
  kTruncated,         // fewer payload bytes than n requires
  kTrailingGarbage,   // bytes after the payload
};

const char* to_string(Graph6Error kind);

class Graph6ParseError : public Error {
 public:
  Graph6ParseError(Graph6Error kind, std::size_t offset);
  Graph6Error kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  Graph6Error kind_;
  std::size_t offset_;
};

}  // namespace cliquelab
