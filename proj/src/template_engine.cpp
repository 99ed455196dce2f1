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

#include "volver/template_engine.hpp"

#include "volver/text.hpp"

namespace volver {

ParsedPage::ParsedPage(const PageDocument& p)
    : page(p), dom(html::Document::parse_bytes(p.body)) {}

MatchOutcome finish(ExtractionRecord record) {
  std::vector<std::string> defects = validate_record(record);
  if (!defects.empty()) return Invalid{std::move(defects)};
  return Matched{std::move(record)};
}

namespace {

std::string describe(const std::vector<Attempt>& attempts) {
  std::string out;
  for (const auto& a : attempts) {
    if (!out.empty()) out += "; ";
    out += a.template_id + "=";
    switch (a.outcome) {
      case OutcomeKind::Matched:
        out += "matched";
        break;
      case OutcomeKind::NotApplicable:
        out += "not applicable";
        break;
      case OutcomeKind::Invalid: {
        out += "invalid(";
        for (std::size_t i = 0; i < a.reasons.size(); ++i) {
          out += (i ? "," : "") + a.reasons[i];
        }
        out += ")";
        break;
      }
    }
  }
  return out;
}

}  // namespace

NoTemplateMatched::NoTemplateMatched(std::string source_iri,
                                     std::vector<Attempt> attempts)
    : Error("no template matched " + source_iri + ": " + describe(attempts)),
      source_iri_(std::move(source_iri)),
      attempts_(std::move(attempts)) {}

std::string format_attempt(const Attempt& attempt, ContentKind kind,
                           std::string_view source_iri) {
  std::string line = "TEMPLATE " + attempt.template_id + " " +
                     std::string(to_string(kind)) + " " +
                     std::string(source_iri) + " ";
  switch (attempt.outcome) {
    case OutcomeKind::Matched:
      line += "MATCHED";
      break;
    case OutcomeKind::NotApplicable:
      line += "NOT_APPLICABLE";
      break;
    case OutcomeKind::Invalid:
      line += "INVALID:";
      for (std::size_t i = 0; i < attempt.reasons.size(); ++i) {
        if (i) line += ",";
        line += attempt.reasons[i];
      }
      break;
  }
  return line;
}

TemplateRegistry& TemplateRegistry::add(Template tmpl) {
  auto& cascade = by_kind_[tmpl.kind];
  if (cascade.count(tmpl.priority)) {
    throw DuplicatePriority("template priority " + std::to_string(tmpl.priority) +
                            " already registered for " +
                            std::string(to_string(tmpl.kind)) + " (" +
                            cascade.at(tmpl.priority).id + ")");
  }
  unsigned priority = tmpl.priority;
  cascade.emplace(priority, std::move(tmpl));
  return *this;
}

TemplateRegistry register_template(TemplateRegistry registry, Template tmpl) {
  registry.add(std::move(tmpl));
  return registry;
}

std::vector<const Template*> TemplateRegistry::cascade(ContentKind kind) const {
  std::vector<const Template*> out;
  auto it = by_kind_.find(kind);
  if (it == by_kind_.end()) return out;
  for (const auto& [priority, tmpl] : it->second) out.push_back(&tmpl);
  return out;
}

bool TemplateRegistry::empty(ContentKind kind) const {
  auto it = by_kind_.find(kind);
  return it == by_kind_.end() || it->second.empty();
}

Extraction TemplateRegistry::extract(const PageDocument& page,
                                     const LogSink& log) const {
  auto templates = cascade(page.kind);
  if (templates.empty()) {
    throw Error("no templates registered for " + std::string(to_string(page.kind)));
  }
  ParsedPage parsed(page);
  std::vector<Attempt> attempts;
  for (const Template* tmpl : templates) {
    MatchOutcome outcome = tmpl->matcher(parsed);
    Attempt attempt{tmpl->id, tmpl->priority, OutcomeKind::NotApplicable, {}};
    if (auto* m = std::get_if<Matched>(&outcome)) {
      // A matcher that skips validation must not leak an invalid record.
      std::vector<std::string> defects = validate_record(m->record);
      if (defects.empty()) {
        attempt.outcome = OutcomeKind::Matched;
      } else {
        attempt.outcome = OutcomeKind::Invalid;
        attempt.reasons = std::move(defects);
      }
    } else if (auto* inv = std::get_if<Invalid>(&outcome)) {
      attempt.outcome = OutcomeKind::Invalid;
      attempt.reasons = inv->reasons;
    }
    if (log) log(format_attempt(attempt, page.kind, page.source_iri));
    attempts.push_back(attempt);
    if (attempt.outcome == OutcomeKind::Matched) {
      return Extraction{std::move(std::get<Matched>(outcome).record), tmpl->id,
                        tmpl->priority, std::move(attempts)};
    }
  }
  throw NoTemplateMatched(page.source_iri, std::move(attempts));
}

std::vector<std::string> validate_record(const ExtractionRecord& record) {
  std::vector<std::string> defects;
  if (const auto* index = std::get_if<IndexRecord>(&record)) {
    if (index->entries.empty()) defects.push_back("entries");
    for (std::size_t k = 0; k < index->entries.size(); ++k) {
      const auto& e = index->entries[k];
      std::string prefix = "entries[" + std::to_string(k) + "].";
      if (!e.volume_number || *e.volume_number == 0) {
        defects.push_back(prefix + "volume_number");
      }
      if (text::trim(e.label).empty()) defects.push_back(prefix + "label");
    }
    return defects;
  }
  const auto& volume = std::get<VolumeRecord>(record);
  if (!volume.volume_number || *volume.volume_number == 0) {
    defects.push_back("volume_number");
  }
  if (text::trim(volume.full_title).empty()) defects.push_back("full_title");
  if (volume.editors.empty()) defects.push_back("editors");
  if (volume.papers.empty()) defects.push_back("papers");
  for (std::size_t k = 0; k < volume.papers.size(); ++k) {
    if (text::trim(volume.papers[k].title).empty()) {
      defects.push_back("papers[" + std::to_string(k) + "].title");
    }
  }
  return defects;
}

}  // namespace volver
