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


#ifndef VOLVER_LINKING_HPP_
#define VOLVER_LINKING_HPP_

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "volver/rdf.hpp"

namespace volver::linking {

struct CountryCandidate {
  std::string surface;
  std::size_t char_offset = 0;

  bool operator==(const CountryCandidate&) const = default;
};

struct LinkedCountry {
  std::string surface;
  rdf::Iri iri;

  bool operator==(const LinkedCountry&) const = default;
};

inline constexpr const char* kCountryClass = "dbpedia-owl:Country";
inline constexpr const char* kAffiliationClass = "dbpedia-owl:EducationalInstitution";

struct EndpointConfig {
  std::string endpoint_iri = "http://dbpedia.org/sparql";
  std::chrono::milliseconds timeout{10000};
  unsigned retries = 3;  // extra attempts after the first
  std::chrono::milliseconds backoff{1000};
  std::string class_iri = kCountryClass;
  std::size_t batch_size = 50;
};

// Executes a query and returns the SPARQL JSON results document. Throws
// TransportError on failure.
using Transport = std::function<std::string(const std::string& query)>;

Transport http_transport(const EndpointConfig& config);
// Answers from <dir>/<slug>.json per VALUES surface; <slug>.error fails.
Transport mock_transport(const std::filesystem::path& dir);
// "mock:<dir>" selects the mock transport, anything else goes over HTTP.
Transport make_transport(const EndpointConfig& config);

std::vector<CountryCandidate> extract_country_candidates(std::string_view first_page_text);
std::vector<std::string> extract_affiliation_candidates(std::string_view first_page_text);

// Throws EmptyCandidateList.
std::string build_country_query(const std::vector<std::string>& surfaces,
                                std::string_view class_iri = kCountryClass);

// Values bound to `var` in a SPARQL JSON results document, in order.
// Throws MalformedResponse.
std::vector<std::string> parse_bindings(std::string_view json,
                                        std::string_view var = "country");

std::vector<LinkedCountry> link_countries(const std::vector<CountryCandidate>& candidates,
                                          const EndpointConfig& config,
                                          const Transport& transport);

// Same procedure for arbitrary surfaces and config.class_iri.
std::vector<LinkedCountry> link_entities(const std::vector<std::string>& surfaces,
                                         const EndpointConfig& config,
                                         const Transport& transport);

rdf::TripleGraph attach_country_triples(const rdf::Iri& paper,
                                        const std::vector<LinkedCountry>& linked);

}  // namespace volver::linking

#endif  // VOLVER_LINKING_HPP_
