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

#ifndef VOLVER_TEMPLATE_ENGINE_HPP_
#define VOLVER_TEMPLATE_ENGINE_HPP_

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "volver/corpus.hpp"
#include "volver/errors.hpp"
#include "volver/html.hpp"
#include "volver/records.hpp"

namespace volver {

// A page plus its decoded, tag-soup-recovered DOM. Built once per extract()
// call and shared by every template in the cascade.
struct ParsedPage {
  explicit ParsedPage(const PageDocument& p);

  const PageDocument& page;
  html::Document dom;
};

struct Matched {
  ExtractionRecord record;
};
struct NotApplicable {};
struct Invalid {
  std::vector<std::string> reasons;
};

// NotApplicable: the template's signature markers are absent.
// Invalid: markers present but required fields missing.
using MatchOutcome = std::variant<Matched, NotApplicable, Invalid>;

// Validates `record` and wraps it as Matched or Invalid.
MatchOutcome finish(ExtractionRecord record);

using Matcher = std::function<MatchOutcome(const ParsedPage&)>;

struct Template {
  std::string id;
  ContentKind kind = ContentKind::VolumePage;
  unsigned priority = 0;  // lower runs first
  Matcher matcher;
};

enum class OutcomeKind { Matched, NotApplicable, Invalid };

struct Attempt {
  std::string template_id;
  unsigned priority = 0;
  OutcomeKind outcome = OutcomeKind::NotApplicable;
  std::vector<std::string> reasons;  // for Invalid
};

struct Extraction {
  ExtractionRecord record;
  std::string template_id;
  unsigned priority = 0;
  std::vector<Attempt> attempts;  // in cascade order, winner last
};

class NoTemplateMatched : public Error {
 public:
  NoTemplateMatched(std::string source_iri, std::vector<Attempt> attempts);
  const std::string& source_iri() const { return source_iri_; }
  const std::vector<Attempt>& attempts() const { return attempts_; }

 private:
  std::string source_iri_;
  std::vector<Attempt> attempts_;
};

using LogSink = std::function<void(const std::string& line)>;

// `TEMPLATE <id> <kind> <source_iri> <MATCHED|NOT_APPLICABLE|INVALID:f1,f2>`
std::string format_attempt(const Attempt& attempt, ContentKind kind,
                           std::string_view source_iri);

// Ordered cascades of templates, one per content kind. Immutable once built;
// extract() may be called concurrently.
class TemplateRegistry {
 public:
  // Throws DuplicatePriority when (kind, priority) is taken.
  TemplateRegistry& add(Template tmpl);

  std::vector<const Template*> cascade(ContentKind kind) const;
  bool empty(ContentKind kind) const;

  // Runs the cascade for page.kind until a template returns Matched. Later
  // templates are not invoked. Each attempt is reported to `log` if given.
  Extraction extract(const PageDocument& page, const LogSink& log = {}) const;

 private:
  std::map<ContentKind, std::map<unsigned, Template>> by_kind_;
};

TemplateRegistry register_template(TemplateRegistry registry, Template tmpl);

// Missing or invalid field names; empty when the record is valid.
std::vector<std::string> validate_record(const ExtractionRecord& record);

}  // namespace volver

#endif  // VOLVER_TEMPLATE_ENGINE_HPP_
