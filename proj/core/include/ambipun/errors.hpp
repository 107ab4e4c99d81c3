#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ambipun {

// Base of every error raised by the pipeline. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidTask : public Error {
 public:
  InvalidTask(std::string field, const std::string& message)
      : Error("invalid task (" + field + "): " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Raised when an operation precondition on its arguments is violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed persisted or text input. `position` is a byte offset or a
// 1-based line number depending on the format; `unit()` says which.
class FormatError : public Error {
 public:
  enum class Unit { kByte, kLine };

  FormatError(const std::string& message, std::size_t position, Unit unit)
      : Error(message + (unit == Unit::kByte ? " (at byte " : " (at line ") +
              std::to_string(position) + ")"),
        position_(position),
        unit_(unit) {}

  std::size_t position() const noexcept { return position_; }
  Unit unit() const noexcept { return unit_; }

 private:
  std::size_t position_;
  Unit unit_;
};

class EmptyCorpus : public Error {
 public:
  EmptyCorpus() : Error("corpus has no nonempty lines") {}
};

class DimensionMismatch : public FormatError {
 public:
  DimensionMismatch(std::size_t line, std::size_t expected, std::size_t got)
      : FormatError("expected " + std::to_string(expected) + " coordinates, got " +
                        std::to_string(got),
                    line, Unit::kLine) {}
};

class ZeroVector : public Error {
 public:
  ZeroVector() : Error("cosine of an all-zero vector is undefined") {}
};

class UnknownWord : public Error {
 public:
  explicit UnknownWord(const std::string& word) : Error("word not in vocabulary: " + word) {}
};

class NoContentWords : public Error {
 public:
  explicit NoContentWords(const std::string& definition)
      : Error("definition has no in-vocabulary content words: \"" + definition + "\"") {}
};

class EndpointError : public Error {
 public:
  EndpointError(int status, const std::string& body_excerpt, const std::string& what)
      : Error(what), status_(status), body_excerpt_(body_excerpt) {}
  // HTTP status, or 0 when no response was received.
  int status() const noexcept { return status_; }
  const std::string& body_excerpt() const noexcept { return body_excerpt_; }

 private:
  int status_;
  std::string body_excerpt_;
};

class TimeoutError : public EndpointError {
 public:
  explicit TimeoutError(const std::string& what) : EndpointError(0, "", what) {}
};

class EmptyResponse : public EndpointError {
 public:
  explicit EmptyResponse(const std::string& what) : EndpointError(200, "", what) {}
};

class LengthMismatch : public EndpointError {
 public:
  LengthMismatch(std::size_t expected, std::size_t got)
      : EndpointError(200, "",
                      "classifier returned " + std::to_string(got) + " scores for " +
                          std::to_string(expected) + " sentences") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class BindError : public Error {
 public:
  using Error::Error;
};

class InsufficientContextWords : public Error {
 public:
  explicit InsufficientContextWords(int sense_index)
      : Error("sense " + std::to_string(sense_index) +
              " has fewer than 2 usable context words"),
        sense_index_(sense_index) {}
  int sense_index() const noexcept { return sense_index_; }

 private:
  int sense_index_;
};

class AllCandidatesDropped : public Error {
 public:
  explicit AllCandidatesDropped(std::size_t dropped)
      : Error("all " + std::to_string(dropped) +
              " generated sentences lacked the pun word"),
        dropped_(dropped) {}
  std::size_t dropped() const noexcept { return dropped_; }

 private:
  std::size_t dropped_;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class PunWordAbsent : public Error {
 public:
  PunWordAbsent(const std::string& pun_word, const std::string& sentence)
      : Error("pun word \"" + pun_word + "\" not found in: " + sentence) {}
};

class EmptyDataset : public Error {
 public:
  EmptyDataset() : Error("dataset has no usable records") {}
};

}  // namespace ambipun
