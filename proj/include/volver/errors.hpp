// Copyright 2026 The Volver Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VOLVER_ERRORS_HPP_
#define VOLVER_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace volver {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// corpus-ingest

class ManifestNotFound : public Error {
 public:
  explicit ManifestNotFound(const std::string& path)
      : Error("manifest not found: " + path) {}
};

class ManifestMalformed : public Error {
 public:
  ManifestMalformed(std::size_t line, const std::string& what)
      : Error("manifest line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DuplicateVolume : public Error {
 public:
  explicit DuplicateVolume(std::uint32_t id)
      : Error("duplicate volume in manifest: " + std::to_string(id)), id_(id) {}
  std::uint32_t id() const { return id_; }

 private:
  std::uint32_t id_;
};

class MissingFile : public Error {
 public:
  explicit MissingFile(const std::string& path)
      : Error("manifest references missing file: " + path), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class UnknownVolume : public Error {
 public:
  explicit UnknownVolume(std::uint32_t id)
      : Error("no volume page in corpus for id " + std::to_string(id)), id_(id) {}
  explicit UnknownVolume(const std::string& what) : Error(what), id_(0) {}
  std::uint32_t id() const { return id_; }

 private:
  std::uint32_t id_;
};

class FetchFailed : public Error {
 public:
  FetchFailed(const std::string& iri, const std::string& cause)
      : Error("fetch failed for " + iri + ": " + cause), iri_(iri), cause_(cause) {}
  const std::string& iri() const { return iri_; }
  const std::string& cause() const { return cause_; }

 private:
  std::string iri_;
  std::string cause_;
};

class AllFetchesFailed : public Error {
 public:
  using Error::Error;
};

// template-engine / volume-extractors

class DuplicatePriority : public Error {
 public:
  using Error::Error;
};

class NoVolumesFound : public Error {
 public:
  using Error::Error;
};

// rdf-emitter

class InvalidIri : public Error {
 public:
  explicit InvalidIri(const std::string& value)
      : Error("not an absolute IRI: '" + value + "'") {}
};

class UnmintableEntity : public Error {
 public:
  using Error::Error;
};

class InvalidInterval : public Error {
 public:
  using Error::Error;
};

class NTriplesSyntaxError : public Error {
 public:
  NTriplesSyntaxError(std::size_t line, const std::string& what)
      : Error("n-triples line " + std::to_string(line) + ": " + what) {}
};

// entity-linking

class EmptyCandidateList : public Error {
 public:
  EmptyCandidateList() : Error("candidate list is empty") {}
};

// Raised by transports for timeouts and connection failures. Retried.
class TransportError : public Error {
 public:
  using Error::Error;
};

class EndpointUnreachable : public Error {
 public:
  using Error::Error;
};

class MalformedResponse : public Error {
 public:
  using Error::Error;
};

// cli

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace volver

#endif  // VOLVER_ERRORS_HPP_
