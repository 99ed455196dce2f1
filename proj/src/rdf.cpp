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

#include "volver/rdf.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include <fmt/format.h>

#include "volver/corpus.hpp"
#include "volver/errors.hpp"
#include "volver/text.hpp"

namespace volver::rdf {

namespace {

const std::map<std::string, std::string>& standard_prefixes() {
  static const std::map<std::string, std::string> table = {
      {"swc", ns::kSwc},         {"swrc", ns::kSwrc},
      {"bibo", ns::kBibo},       {"timeline", ns::kTimeline},
      {"foaf", ns::kFoaf},       {"dc", ns::kDc},
      {"dcterms", ns::kDcterms}, {"dbpedia-owl", ns::kDbpediaOwl},
      {"rdfs", ns::kRdfs},       {"skos", ns::kSkos},
      {"xsd", ns::kXsd},         {"rdf", ns::kRdf},
  };
  return table;
}

bool iri_char_ok(unsigned char c) {
  if (c <= 0x20) return false;
  switch (c) {
    case '<': case '>': case '"': case '{': case '}':
    case '|': case '^': case '`': case '\\':
      return false;
    default:
      return true;
  }
}

}  // namespace

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (!is_absolute_iri(value_) ||
      !std::all_of(value_.begin(), value_.end(),
                   [](char c) { return iri_char_ok(static_cast<unsigned char>(c)); })) {
    throw InvalidIri(value_);
  }
}

TripleGraph::TripleGraph() : namespaces_(standard_prefixes()) {}

bool TripleGraph::add(Triple t) { return triples_.insert(std::move(t)).second; }

void TripleGraph::add(const Iri& s, const Iri& p, Term o) {
  triples_.insert(Triple{s, p, std::move(o)});
}

void TripleGraph::merge(const TripleGraph& other) {
  triples_.insert(other.triples_.begin(), other.triples_.end());
  for (const auto& [prefix, iri] : other.namespaces_) bind(prefix, iri);
}

void TripleGraph::bind(const std::string& prefix, const std::string& ns_iri) {
  auto [it, inserted] = namespaces_.emplace(prefix, ns_iri);
  if (!inserted && it->second != ns_iri) {
    throw std::invalid_argument("prefix already bound: " + prefix);
  }
}

Iri curie(std::string_view prefixed) {
  auto colon = prefixed.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("not a prefixed name: " + std::string(prefixed));
  }
  const auto& table = standard_prefixes();
  auto it = table.find(std::string(prefixed.substr(0, colon)));
  if (it == table.end()) {
    throw std::invalid_argument("unknown prefix in " + std::string(prefixed));
  }
  return Iri(it->second + std::string(prefixed.substr(colon + 1)));
}

Literal plain(std::string lexical) { return Literal{std::move(lexical), {}, {}}; }

Literal typed(std::string lexical, std::string_view datatype_curie) {
  return Literal{std::move(lexical), curie(datatype_curie), {}};
}

// --- minting ---------------------------------------------------------------

Iri mint_volume(const VolumeRecord& record) {
  if (record.source_iri.empty()) throw UnmintableEntity("volume has no source IRI");
  return Iri(record.source_iri);
}

Iri mint_volume_number(const IriPolicy& policy, std::uint32_t number) {
  return Iri(fmt::format("{}Vol-{}/", policy.base, number));
}

Iri mint_workshop(const IriPolicy& policy, std::uint32_t volume_number,
                  std::size_t index) {
  if (index == 0) throw UnmintableEntity("workshop index is 1-based");
  return Iri(fmt::format("{}vol-{}/workshop-{}", policy.base, volume_number, index));
}

Iri mint_person(const IriPolicy& policy, std::string_view full_name) {
  std::string s = text::slug(full_name);
  if (s.empty()) throw UnmintableEntity("person has no usable name");
  return Iri(policy.base + "person/" + s);
}

std::vector<Iri> mint_papers(const IriPolicy& policy, const VolumeRecord& record) {
  std::vector<Iri> out;
  std::map<std::string, int> seen;
  for (const auto& paper : record.papers) {
    if (paper.pdf_href && !paper.pdf_href->empty()) {
      out.emplace_back(*paper.pdf_href);
      continue;
    }
    if (!record.volume_number) throw UnmintableEntity("paper without volume number");
    std::string s = text::slug(paper.title);
    if (s.empty()) throw UnmintableEntity("paper has no usable title");
    int n = ++seen[s];
    if (n > 1) s += "-" + std::to_string(n);
    out.emplace_back(fmt::format("{}vol-{}/paper-{}", policy.base, *record.volume_number, s));
  }
  return out;
}

// --- emission --------------------------------------------------------------

namespace {

void emit_person(TripleGraph& g, const Iri& who, const PersonRecord& p) {
  g.add(who, curie("rdf:type"), curie("foaf:Person"));
  g.add(who, curie("foaf:name"), plain(p.full_name));
  if (p.affiliation_text && !p.affiliation_text->empty()) {
    g.add(who, curie("swrc:affiliation"), plain(*p.affiliation_text));
  }
}

}  // namespace

TripleGraph emit_timeline(const Iri& workshop, const Date& start, const Date& end) {
  if (end < start) {
    throw InvalidInterval(fmt::format("interval {} .. {} ends before it starts",
                                      start.iso(), end.iso()));
  }
  TripleGraph g;
  if (start == end) {
    g.add(workshop, curie("timeline:atDate"), typed(start.iso(), "xsd:date"));
  } else {
    g.add(workshop, curie("timeline:beginsAtDateTime"),
          typed(start.iso() + "T00:00:00", "xsd:dateTime"));
    g.add(workshop, curie("timeline:endsAtDateTime"),
          typed(end.iso() + "T23:59:59", "xsd:dateTime"));
  }
  return g;
}

TripleGraph emit_see_also(const Iri& volume, const std::vector<Iri>& targets) {
  TripleGraph g;
  for (const auto& t : targets) g.add(volume, curie("rdfs:seeAlso"), t);
  return g;
}

TripleGraph emit_volume(const VolumeRecord& record, const IriPolicy& policy) {
  if (!record.volume_number) throw UnmintableEntity("volume record has no number");
  const std::uint32_t number = *record.volume_number;
  TripleGraph g;
  const Iri vol = mint_volume(record);

  g.add(vol, curie("rdf:type"), curie("swrc:Proceedings"));
  g.add(vol, curie("dcterms:title"), plain(record.full_title));
  g.add(vol, curie("bibo:volume"), plain(std::to_string(number)));
  if (record.pub_year) {
    g.add(vol, curie("dcterms:issued"),
          typed(fmt::format("{:04}", *record.pub_year), "xsd:gYear"));
  }

  for (std::size_t i = 0; i < record.workshops.size(); ++i) {
    const auto& w = record.workshops[i];
    const Iri event = mint_workshop(policy, number, i + 1);
    g.add(event, curie("rdf:type"), curie("swc:WorkshopEvent"));
    g.add(event, curie("dcterms:title"), plain(w.full_name));
    if (w.acronym && !w.acronym->empty()) {
      g.add(event, curie("rdfs:label"), plain(*w.acronym));
    }
    if (w.edition_ordinal) {
      g.add(event, curie("bibo:edition"), plain(std::to_string(*w.edition_ordinal)));
    }
    g.add(vol, curie("bibo:presentedAt"), event);
    if (record.location && !record.location->empty()) {
      g.add(event, curie("dcterms:spatial"), plain(*record.location));
    }
    if (record.event_start) {
      g.merge(emit_timeline(event, *record.event_start,
                            record.event_end.value_or(*record.event_start)));
    }
  }

  for (const auto& editor : record.editors) {
    const Iri who = mint_person(policy, editor.full_name);
    g.add(vol, curie("swrc:editor"), who);
    emit_person(g, who, editor);
  }

  const auto paper_iris = mint_papers(policy, record);
  for (std::size_t i = 0; i < record.papers.size(); ++i) {
    const auto& paper = record.papers[i];
    const Iri& p = paper_iris[i];
    g.add(p, curie("rdf:type"), curie("swrc:InProceedings"));
    g.add(p, curie("dcterms:title"), plain(paper.title));
    g.add(p, curie("dcterms:partOf"), vol);
    for (const auto& author : paper.authors) {
      const Iri who = mint_person(policy, author.full_name);
      g.add(p, curie("dcterms:creator"), who);
      emit_person(g, who, author);
    }
    if (paper.page_start) {
      g.add(p, curie("bibo:pageStart"), plain(std::to_string(*paper.page_start)));
    }
    if (paper.page_end) {
      g.add(p, curie("bibo:pageEnd"), plain(std::to_string(*paper.page_end)));
    }
    if (paper.is_invited) g.add(p, curie("dc:type"), plain("invited"));
  }

  std::vector<Iri> targets;
  for (auto n : record.see_also_volumes) targets.push_back(mint_volume_number(policy, n));
  g.merge(emit_see_also(vol, targets));
  return g;
}

// --- serialization ---------------------------------------------------------

namespace {

std::string escape_literal(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          out += fmt::format("\\u{:04X}", static_cast<unsigned>(c));
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string literal_nt(const Literal& l) {
  std::string out = "\"" + escape_literal(l.lexical) + "\"";
  if (l.language) {
    out += "@" + *l.language;
  } else if (l.datatype) {
    out += "^^<" + l.datatype->value() + ">";
  }
  return out;
}

std::string term_nt(const Term& t) {
  if (const Iri* iri = std::get_if<Iri>(&t)) return "<" + iri->value() + ">";
  return literal_nt(std::get<Literal>(t));
}

bool turtle_local_ok(std::string_view local) {
  if (local.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(local[0])) || local[0] == '_')) return false;
  return std::all_of(local.begin(), local.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  });
}

std::string iri_ttl(const Iri& iri, const std::map<std::string, std::string>& prefixes) {
  std::string best;
  for (const auto& [prefix, ns_iri] : prefixes) {
    const auto& v = iri.value();
    if (v.size() > ns_iri.size() && v.compare(0, ns_iri.size(), ns_iri) == 0) {
      std::string_view local(v.data() + ns_iri.size(), v.size() - ns_iri.size());
      if (turtle_local_ok(local)) {
        std::string candidate = prefix + ":" + std::string(local);
        if (best.empty() || candidate.size() < best.size()) best = candidate;
      }
    }
  }
  return best.empty() ? "<" + iri.value() + ">" : best;
}

std::string term_ttl(const Term& t, const std::map<std::string, std::string>& prefixes) {
  if (const Iri* iri = std::get_if<Iri>(&t)) {
    if (iri->value() == ns::kRdf + std::string("type")) return "a";
    return iri_ttl(*iri, prefixes);
  }
  const auto& l = std::get<Literal>(t);
  std::string out = "\"" + escape_literal(l.lexical) + "\"";
  if (l.language) {
    out += "@" + *l.language;
  } else if (l.datatype) {
    out += "^^" + iri_ttl(*l.datatype, prefixes);
  }
  return out;
}

std::string serialize_turtle(const TripleGraph& g) {
  std::string out;
  for (const auto& [prefix, ns_iri] : g.namespaces()) {
    out += fmt::format("@prefix {}: <{}> .\n", prefix, ns_iri);
  }
  const auto& prefixes = g.namespaces();
  const Iri* subject = nullptr;
  for (const auto& t : g.triples()) {
    std::string pred = t.predicate.value() == ns::kRdf + std::string("type")
                           ? "a"
                           : iri_ttl(t.predicate, prefixes);
    if (subject && *subject == t.subject) {
      out += " ;\n    " + pred + " " + term_ttl(t.object, prefixes);
    } else {
      if (subject) out += " .\n";
      out += "\n" + iri_ttl(t.subject, prefixes) + "\n    " + pred + " " +
             term_ttl(t.object, prefixes);
      subject = &t.subject;
    }
  }
  if (subject) out += " .\n";
  return out;
}

}  // namespace

std::string to_ntriples(const Triple& t) {
  return "<" + t.subject.value() + "> <" + t.predicate.value() + "> " +
         term_nt(t.object) + " .";
}

std::string serialize(const TripleGraph& graph, Format format) {
  if (format == Format::Turtle) return serialize_turtle(graph);
  std::vector<std::string> lines;
  lines.reserve(graph.size());
  for (const auto& t : graph.triples()) lines.push_back(to_ntriples(t));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

// --- parsing ---------------------------------------------------------------

namespace {

class LineParser {
 public:
  LineParser(std::string_view s, std::size_t line) : s_(s), line_(line) {}

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size() || s_[pos_] == '#';
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) { throw NTriplesSyntaxError(line_, what); }

  Iri iri() {
    if (peek() == '_') fail("blank nodes are not supported");
    if (peek() != '<') fail("expected IRI");
    auto close = s_.find('>', pos_);
    if (close == std::string_view::npos) fail("unterminated IRI");
    std::string value = unescape(s_.substr(pos_ + 1, close - pos_ - 1));
    pos_ = close + 1;
    try {
      return Iri(value);
    } catch (const InvalidIri& e) {
      fail(e.what());
    }
  }

  Literal literal() {
    ++pos_;  // opening quote
    std::string raw;
    while (true) {
      if (pos_ >= s_.size()) fail("unterminated literal");
      char c = s_[pos_++];
      if (c == '"') break;
      raw += c;
      if (c == '\\') {
        if (pos_ >= s_.size()) fail("dangling escape");
        raw += s_[pos_++];
      }
    }
    Literal l{unescape(raw), {}, {}};
    if (pos_ < s_.size() && s_[pos_] == '@') {
      std::size_t start = ++pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-')) {
        ++pos_;
      }
      if (pos_ == start) fail("empty language tag");
      l.language = std::string(s_.substr(start, pos_ - start));
    } else if (s_.substr(pos_, 2) == "^^") {
      pos_ += 2;
      l.datatype = iri();
    }
    return l;
  }

  Term object() {
    char c = peek();
    if (c == '"') return literal();
    return iri();
  }

  void dot() {
    if (peek() != '.') fail("expected '.'");
    ++pos_;
    if (!at_end()) fail("trailing content after '.'");
  }

 private:
  std::string unescape(std::string_view raw) {
    std::string out;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] != '\\') {
        out += raw[i];
        continue;
      }
      if (++i >= raw.size()) fail("dangling escape");
      switch (raw[i]) {
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 't': out += '\t'; break;
        case 'b': out += '\b'; break;
        case 'f': out += '\f'; break;
        case '"': out += '"'; break;
        case '\'': out += '\''; break;
        case '\\': out += '\\'; break;
        case 'u':
        case 'U': {
          std::size_t n = raw[i] == 'u' ? 4 : 8;
          std::string hex(raw.substr(i + 1, n));
          if (hex.size() != n ||
              !std::all_of(hex.begin(), hex.end(),
                           [](char h) { return std::isxdigit(static_cast<unsigned char>(h)); })) {
            fail("bad \\u escape");
          }
          text::append_utf8(out, static_cast<char32_t>(std::stoul(hex, nullptr, 16)));
          i += n;
          break;
        }
        default:
          fail("unknown escape");
      }
    }
    return out;
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

TripleGraph parse_ntriples(std::string_view input) {
  TripleGraph g;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= input.size()) {
    std::size_t end = input.find('\n', start);
    if (end == std::string_view::npos) end = input.size();
    std::string_view line = input.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    LineParser p(line, line_no);
    if (!p.at_end()) {
      Iri s = p.iri();
      Iri pred = p.iri();
      Term o = p.object();
      p.dot();
      g.add(Triple{std::move(s), std::move(pred), std::move(o)});
    }
    if (end == input.size()) break;
    start = end + 1;
  }
  return g;
}

}  // namespace volver::rdf
