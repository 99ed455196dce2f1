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


#ifndef VOLVER_RDF_HPP_
#define VOLVER_RDF_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "volver/records.hpp"

namespace volver::rdf {

// An absolute IRI. Construction validates; there is no blank-node type.
class Iri {
 public:
  explicit Iri(std::string value);
  const std::string& value() const { return value_; }
  auto operator<=>(const Iri&) const = default;

 private:
  std::string value_;
};

struct Literal {
  std::string lexical;
  std::optional<Iri> datatype;
  std::optional<std::string> language;

  auto operator<=>(const Literal&) const = default;
};

using Term = std::variant<Iri, Literal>;

struct Triple {
  Iri subject;
  Iri predicate;
  Term object;

  auto operator<=>(const Triple&) const = default;
};

class TripleGraph {
 public:
  TripleGraph();  // binds the standard prefixes

  bool add(Triple t);
  void add(const Iri& s, const Iri& p, Term o);
  void merge(const TripleGraph& other);

  // Throws std::invalid_argument if `prefix` is already bound elsewhere.
  void bind(const std::string& prefix, const std::string& ns);

  const std::set<Triple>& triples() const { return triples_; }
  const std::map<std::string, std::string>& namespaces() const { return namespaces_; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  bool operator==(const TripleGraph& o) const { return triples_ == o.triples_; }

 private:
  std::set<Triple> triples_;
  std::map<std::string, std::string> namespaces_;
};

namespace ns {
inline constexpr const char* kSwc = "http://data.semanticweb.org/ns/swc/ontology#";
inline constexpr const char* kSwrc = "http://swrc.ontoware.org/ontology#";
inline constexpr const char* kBibo = "http://purl.org/ontology/bibo/";
inline constexpr const char* kTimeline = "http://purl.org/NET/c4dm/timeline.owl#";
inline constexpr const char* kFoaf = "http://xmlns.com/foaf/0.1/";
inline constexpr const char* kDc = "http://purl.org/dc/elements/1.1/";
inline constexpr const char* kDcterms = "http://purl.org/dc/terms/";
inline constexpr const char* kDbpediaOwl = "http://dbpedia.org/ontology/";
inline constexpr const char* kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr const char* kSkos = "http://www.w3.org/2004/02/skos/core#";
inline constexpr const char* kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr const char* kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
}  // namespace ns

// "swrc:editor" -> Iri. Unknown prefixes throw std::invalid_argument.
Iri curie(std::string_view prefixed);

Literal plain(std::string lexical);
Literal typed(std::string lexical, std::string_view datatype_curie);

struct IriPolicy {
  std::string base = "http://ceur-ws.org/";
};

Iri mint_volume(const VolumeRecord& record);
Iri mint_volume_number(const IriPolicy& policy, std::uint32_t number);
Iri mint_workshop(const IriPolicy& policy, std::uint32_t volume_number,
                  std::size_t index);  // 1-based
Iri mint_person(const IriPolicy& policy, std::string_view full_name);
// One IRI per paper, in order; title collisions get -2, -3, ...
std::vector<Iri> mint_papers(const IriPolicy& policy, const VolumeRecord& record);

TripleGraph emit_volume(const VolumeRecord& record, const IriPolicy& policy);
TripleGraph emit_timeline(const Iri& workshop, const Date& start, const Date& end);
TripleGraph emit_see_also(const Iri& volume, const std::vector<Iri>& targets);

enum class Format { NTriples, Turtle };

std::string serialize(const TripleGraph& graph, Format format);
std::string to_ntriples(const Triple& t);
TripleGraph parse_ntriples(std::string_view text);

}  // namespace volver::rdf

#endif  // VOLVER_RDF_HPP_
