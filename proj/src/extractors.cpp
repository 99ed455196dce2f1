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

#include "volver/extractors.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>

#include "volver/errors.hpp"
#include "volver/text.hpp"
#include "volver/xpath.hpp"

namespace volver {

using html::Node;

namespace {

bool is_heading(const Node& n) {
  return n.is_element() && n.name.size() == 2 && n.name[0] == 'h' &&
         n.name[1] >= '1' && n.name[1] <= '6';
}

const std::regex& invited_re() {
  static const std::regex re("invited", std::regex::icase);
  return re;
}

const std::regex& edited_by_re() {
  static const std::regex re(R"(edited\s+by)", std::regex::icase);
  return re;
}

std::optional<std::uint32_t> own_volume(const PageDocument& page) {
  if (page.volume_id) return page.volume_id;
  return volume_number_in(page.source_iri);
}

// Text of the closest section heading (h2..h6) before `node`.
std::string preceding_heading(const html::Document& dom, const Node& node) {
  std::string heading;
  html::for_each_element(dom.root(), [&](const Node& n) {
    if (n.order < node.order && is_heading(n) && n.name != "h1" &&
        !html::closest(node, n.name)) {
      heading = n.normalized_text();
    }
  });
  return heading;
}

bool invited(const html::Document& dom, const Node& container) {
  return std::regex_search(preceding_heading(dom, container), invited_re()) ||
         std::regex_search(container.normalized_text(), invited_re());
}

struct PageRange {
  std::uint32_t start = 0;
  std::uint32_t end = 0;
};

std::optional<PageRange> parse_pages(std::string_view s) {
  static const std::regex range(R"((\d+)\s*(?:-|\xE2\x80\x93|\xE2\x80\x94)+\s*(\d+))");
  static const std::regex single(R"(^\D*(\d+)\D*$)");
  std::string str(s);
  std::smatch m;
  if (std::regex_search(str, m, range)) {
    auto a = text::parse_positive_int(m[1].str());
    auto b = text::parse_positive_int(m[2].str());
    if (a && b && *a <= *b) {
      return PageRange{static_cast<std::uint32_t>(*a), static_cast<std::uint32_t>(*b)};
    }
    return std::nullopt;
  }
  if (std::regex_match(str, m, single)) {
    auto a = text::parse_positive_int(m[1].str());
    if (a) return PageRange{static_cast<std::uint32_t>(*a), static_cast<std::uint32_t>(*a)};
  }
  return std::nullopt;
}

// Removes a trailing page range ("(1-10)", "(pp. 1-10)", "pp. 1-10") from an
// author run, returning it.
std::optional<PageRange> take_pages(std::string& run) {
  static const std::regex trailing(
      R"([\s,;]*\(?\s*(?:pp?\.?\s*|pages?\s*)?(\d+\s*(?:-|\xE2\x80\x93|\xE2\x80\x94)+\s*\d+)\s*\)?\s*\.?\s*$)",
      std::regex::icase);
  static const std::regex pp(R"([\s,;]*pp?\.\s*(\d+\s*(?:-|\xE2\x80\x93)+\s*\d+)\.?)",
                             std::regex::icase);
  std::smatch m;
  std::optional<PageRange> pages;
  if (std::regex_search(run, m, trailing)) {
    pages = parse_pages(m[1].str());
    run = run.substr(0, static_cast<std::size_t>(m.position(0)));
  } else if (std::regex_search(run, m, pp)) {
    pages = parse_pages(m[1].str());
    run = run.substr(0, static_cast<std::size_t>(m.position(0))) + m.suffix().str();
  }
  return pages;
}

std::vector<std::string> split_names(std::string_view run) {
  static const std::regex sep(R"(\s*(?:,|;|\band\b|&|\bund\b)\s*)", std::regex::icase);
  std::string s(run);
  std::vector<std::string> names;
  for (std::sregex_token_iterator it(s.begin(), s.end(), sep, -1), end; it != end;
       ++it) {
    std::string name = text::collapse_whitespace(it->str());
    while (!name.empty() && (name.back() == '.' || name.back() == ':')) {
      name.pop_back();
    }
    if (!name.empty()) names.push_back(name);
  }
  return names;
}

std::vector<PersonRecord> people(const std::vector<std::string>& names,
                                 PersonRole role) {
  std::vector<PersonRecord> out;
  for (const auto& n : names) {
    std::string name = text::collapse_whitespace(n);
    if (name.empty()) continue;
    bool dup = std::any_of(out.begin(), out.end(),
                           [&](const PersonRecord& p) { return p.full_name == name; });
    if (!dup) out.push_back(PersonRecord{name, role, std::nullopt});
  }
  return out;
}

// "Name, Affiliation" or "Name (Affiliation)".
PersonRecord editor_from_line(std::string_view line) {
  std::string s = text::collapse_whitespace(line);
  PersonRecord p{s, PersonRole::Editor, std::nullopt};
  std::size_t cut = s.find_first_of(",(");
  if (cut != std::string::npos) {
    std::string rest(text::trim(s.substr(cut + 1)));
    if (s[cut] == '(' && !rest.empty() && rest.back() == ')') rest.pop_back();
    p.full_name = std::string(text::trim(s.substr(0, cut)));
    rest = std::string(text::trim(rest));
    if (!rest.empty()) p.affiliation_text = rest;
  }
  return p;
}

std::optional<int> published_year(const std::vector<html::Line>& lines) {
  static const std::regex after(
      R"((?:published|submitted|copyright|\xC2\xA9)\D{0,40}?((?:19|20)\d{2}))",
      std::regex::icase);
  static const std::regex before(R"(\b((?:19|20)\d{2})\b.{0,40}?\b(?:published|submitted))",
                                 std::regex::icase);
  for (const auto& line : lines) {
    std::smatch m;
    if (std::regex_search(line.text, m, after) || std::regex_search(line.text, m, before)) {
      return std::stoi(m[1].str());
    }
  }
  return std::nullopt;
}

std::optional<int> year_in(std::string_view s) {
  static const std::regex re(R"(\b((?:19|20)\d{2})\b)");
  std::string str(s);
  std::smatch m;
  if (std::regex_search(str, m, re)) return std::stoi(m[1].str());
  return std::nullopt;
}

bool is_paper_href(std::string_view href) {
  std::string lower = text::to_lower_ascii(href);
  if (lower.rfind("mailto:", 0) == 0) return false;
  static const std::regex re(R"(\.(pdf|ps|ps\.gz|html?)$)");
  static const std::regex volume_page(R"((^|/)vol-\d+/?(index\.html?)?$)");
  return std::regex_search(lower, re) && !std::regex_search(lower, volume_page);
}

void apply_loctime(VolumeRecord& record, const LocTime& lt) {
  record.location = lt.location;
  record.event_start = lt.start;
  record.event_end = lt.end;
}

// Shared tail of every volume template.
MatchOutcome finish_volume(VolumeRecord record, const ParsedPage& page) {
  record.source_iri = page.page.source_iri;
  record.full_title = text::collapse_whitespace(record.full_title);
  if (record.workshops.empty() && !record.full_title.empty()) {
    record.workshops = parse_joint_title(record.full_title);
  }
  record.see_also_volumes = collect_see_also(page);
  if (record.volume_number) {
    auto& sa = record.see_also_volumes;
    sa.erase(std::remove(sa.begin(), sa.end(), *record.volume_number), sa.end());
  }
  return finish(std::move(record));
}

std::vector<std::string> tokens(const std::string* attr) {
  if (!attr) return {};
  return text::split(text::collapse_whitespace(*attr), ' ');
}

bool has_token(const Node& n, std::string_view attr, std::string_view token) {
  for (const auto& t : tokens(n.attr(attr))) {
    if (t == token) return true;
  }
  return false;
}

// RDFa value: the content attribute wins over element text.
std::string rdfa_value(const Node& n) {
  if (const std::string* content = n.attr("content")) {
    return text::collapse_whitespace(*content);
  }
  return n.normalized_text();
}

bool inside_any(const Node& n, const std::vector<const Node*>& containers) {
  for (const Node* p = n.parent; p; p = p->parent) {
    if (std::find(containers.begin(), containers.end(), p) != containers.end()) {
      return true;
    }
  }
  return false;
}

std::vector<const Node*> with_property(const Node& root, std::string_view property) {
  std::vector<const Node*> out;
  html::for_each_element(root, [&](const Node& n) {
    if (has_token(n, "property", property) || has_token(n, "rel", property)) {
      out.push_back(&n);
    }
  });
  return out;
}

// First line that parses as a location/date line, scanning only lines that
// come before `stop_order` in the document.
std::optional<LocTime> find_loctime(const std::vector<html::Line>& lines,
                                    std::size_t stop_order) {
  for (const auto& line : lines) {
    if (line.block && line.block->order >= stop_order) break;
    LocTime lt = parse_loctime(line.text);
    if (lt.start) return lt;
  }
  return std::nullopt;
}

const Node* anchor_for(const Node& title_node, const Node& container) {
  if (const Node* a = html::closest(title_node, "a"); a && a->attr("href")) return a;
  for (const Node* a : html::find_all(container, "a")) {
    if (a->attr("href") && is_paper_href(*a->attr("href"))) return a;
  }
  for (const Node* a : html::find_all(container, "a")) {
    if (a->attr("href")) return a;
  }
  return nullptr;
}

const Node& entry_container(const Node& n) {
  for (const char* tag : {"li", "tr", "dd", "dt", "p", "div"}) {
    if (const Node* c = html::closest(n, tag)) return *c;
  }
  return n.parent ? *n.parent : n;
}

}  // namespace

// --- index -----------------------------------------------------------------

namespace {

std::vector<VolumeSummary> index_summaries(const html::Document& dom) {
  static const std::regex volume_link(R"((?:^|/)Vol-(\d+)/?(?:index\.html?)?(?:#.*)?$)",
                                      std::regex::icase);
  static const std::regex label_prefix(R"(^Vol-\d+\s*[:.\-\xE2\x80\x93]*\s*)",
                                       std::regex::icase);
  struct Found {
    VolumeSummary summary;
    bool listing = false;  // inside a table row or list item
  };
  std::vector<Found> found;
  std::map<std::uint32_t, std::size_t> slot;
  for (const Node* a : html::find_all(dom.root(), "a")) {
    const std::string* href = a->attr("href");
    if (!href) continue;
    std::string h(text::trim(*href));
    std::smatch m;
    if (!std::regex_search(h, m, volume_link)) continue;
    auto n = text::parse_positive_int(m[1].str());
    if (!n || *n > 0xFFFFFFFFL) continue;
    auto number = static_cast<std::uint32_t>(*n);
    const Node* row = a->parent;
    while (row && !(row->is_element("tr") || row->is_element("li") ||
                    row->is_element("dd") || row->is_element("dt") || row->is_element("p"))) {
      row = row->parent;
    }
    std::string label = row ? row->normalized_text() : a->normalized_text();
    label = std::regex_replace(label, label_prefix, "",
                               std::regex_constants::format_first_only);
    if (label.empty()) label = a->normalized_text();
    bool listing = row && (row->is_element("tr") || row->is_element("li"));
    Found f{VolumeSummary{number, label, h}, listing};
    auto it = slot.find(number);
    if (it == slot.end()) {
      slot.emplace(number, found.size());
      found.push_back(std::move(f));
    } else if (listing && !found[it->second].listing) {
      // A later listing row describes the volume better than a passing mention.
      found[it->second] = std::move(f);
    }
  }
  std::vector<VolumeSummary> out;
  for (auto& f : found) out.push_back(std::move(f.summary));
  return out;
}

}  // namespace

std::vector<VolumeSummary> extract_index(const PageDocument& page) {
  auto dom = html::Document::parse_bytes(page.body);
  auto summaries = index_summaries(dom);
  if (summaries.empty()) {
    throw NoVolumesFound("no volume links on index page " + page.source_iri);
  }
  return summaries;
}

MatchOutcome match_index(const ParsedPage& page) {
  auto summaries = index_summaries(page.dom);
  if (summaries.empty()) return NotApplicable{};
  return finish(IndexRecord{std::move(summaries)});
}

// --- see also --------------------------------------------------------------

std::vector<std::uint32_t> collect_see_also(const ParsedPage& page) {
  std::set<std::uint32_t> found;
  auto self = own_volume(page.page);
  for (const Node* a : html::find_all(page.dom.root(), "a")) {
    const std::string* href = a->attr("href");
    if (!href) continue;
    auto n = volume_number_in(*href);
    if (n && n != self) found.insert(*n);
  }
  return {found.begin(), found.end()};
}

std::vector<std::uint32_t> collect_see_also(const PageDocument& page) {
  return collect_see_also(ParsedPage(page));
}

// --- RDFa ------------------------------------------------------------------

MatchOutcome extract_volume_rdfa(const ParsedPage& page) {
  const Node& root = page.dom.root();
  bool markers = false;
  html::for_each_element(root, [&](const Node& n) {
    markers |= n.attr("property") != nullptr || n.attr("typeof") != nullptr;
  });
  if (!markers) return NotApplicable{};

  const Node* scope = &page.dom.body();
  html::for_each_element(root, [&](const Node& n) {
    if (scope == &page.dom.body() && has_token(n, "typeof", "bibo:Proceedings")) {
      scope = &n;
    }
  });
  std::vector<const Node*> paper_nodes;
  html::for_each_element(*scope, [&](const Node& n) {
    for (const auto& t : tokens(n.attr("typeof"))) {
      if (t.find("InProceedings") != std::string::npos) paper_nodes.push_back(&n);
    }
  });

  VolumeRecord record;
  for (const Node* n : with_property(*scope, "dcterms:title")) {
    if (!inside_any(*n, paper_nodes) &&
        std::find(paper_nodes.begin(), paper_nodes.end(), n) == paper_nodes.end()) {
      record.full_title = rdfa_value(*n);
      break;
    }
  }
  for (const Node* n : with_property(*scope, "bibo:volume")) {
    std::string v = rdfa_value(*n);
    auto number = volume_number_in(v);
    if (!number) {
      auto digits = text::parse_positive_int(v);
      if (digits) number = static_cast<std::uint32_t>(*digits);
    }
    if (number) {
      record.volume_number = number;
      break;
    }
  }
  for (const Node* n : with_property(*scope, "dcterms:issued")) {
    if ((record.pub_year = year_in(rdfa_value(*n)))) break;
  }
  std::vector<std::string> editor_names;
  for (const Node* n : with_property(*scope, "swrc:editor")) {
    if (!inside_any(*n, paper_nodes)) editor_names.push_back(rdfa_value(*n));
  }
  record.editors = people(editor_names, PersonRole::Editor);

  for (const Node* p : paper_nodes) {
    PaperRecord paper;
    auto titles = with_property(*p, "dcterms:title");
    if (!titles.empty()) paper.title = rdfa_value(*titles.front());
    std::vector<std::string> authors;
    for (const Node* c : with_property(*p, "dcterms:creator")) {
      authors.push_back(rdfa_value(*c));
    }
    paper.authors = people(authors, PersonRole::Author);
    const std::string* about = p->attr("about");
    if (!about) about = p->attr("resource");
    if (about) {
      paper.pdf_href = resolve_iri(page.page.source_iri, *about);
    } else if (!titles.empty()) {
      if (const Node* a = anchor_for(*titles.front(), *p)) {
        paper.pdf_href = resolve_iri(page.page.source_iri, *a->attr("href"));
      }
    }
    auto start = with_property(*p, "bibo:pageStart");
    auto end = with_property(*p, "bibo:pageEnd");
    if (!start.empty() && !end.empty()) {
      auto a = text::parse_positive_int(rdfa_value(*start.front()));
      auto b = text::parse_positive_int(rdfa_value(*end.front()));
      if (a && b && *a <= *b) {
        paper.page_start = static_cast<std::uint32_t>(*a);
        paper.page_end = static_cast<std::uint32_t>(*b);
      }
    }
    paper.is_invited = invited(page.dom, *p);
    record.papers.push_back(std::move(paper));
  }

  auto lines = html::text_lines(page.dom.body());
  std::size_t stop = paper_nodes.empty() ? SIZE_MAX : paper_nodes.front()->order;
  if (auto lt = find_loctime(lines, stop)) apply_loctime(record, *lt);
  if (!record.pub_year) record.pub_year = published_year(lines);
  if (!record.volume_number) record.volume_number = own_volume(page.page);
  return finish_volume(std::move(record), page);
}

// --- CEUR microformat ------------------------------------------------------

MatchOutcome extract_volume_microformat(const ParsedPage& page) {
  static const std::regex ceur_class(
      R"(\bCEUR(VOLTITLE|FULLTITLE|VOLACRONYM|LOCTIME|VOLEDITOR|TITLE|AUTHOR|PAGES|PUBYEAR)\b)");
  bool markers = false;
  html::for_each_element(page.dom.root(), [&](const Node& n) {
    if (const std::string* cls = n.attr("class")) {
      markers |= std::regex_search(*cls, ceur_class);
    }
  });
  if (!markers) return NotApplicable{};

  auto by_class = [&](const Node& root, std::string_view cls) {
    std::vector<const Node*> out;
    html::for_each_element(root, [&](const Node& n) {
      if (n.has_class(cls)) out.push_back(&n);
    });
    return out;
  };
  auto first_text = [&](std::string_view cls) -> std::optional<std::string> {
    auto nodes = by_class(page.dom.root(), cls);
    if (nodes.empty()) return std::nullopt;
    return nodes.front()->normalized_text();
  };

  VolumeRecord record;
  record.volume_number = own_volume(page.page);
  record.full_title = first_text("CEURVOLTITLE").value_or("");
  auto full = first_text("CEURFULLTITLE");
  if (full && !full->empty()) {
    record.workshops = parse_joint_title(*full);
  } else if (!record.full_title.empty()) {
    record.workshops = parse_joint_title(record.full_title);
  }
  if (auto acronym = first_text("CEURVOLACRONYM");
      acronym && !acronym->empty() && record.workshops.size() == 1 &&
      !record.workshops.front().acronym) {
    record.workshops.front().acronym = clean_acronym(*acronym);
  }
  if (auto loctime = first_text("CEURLOCTIME"); loctime && !loctime->empty()) {
    LocTime lt = parse_loctime(*loctime);
    if (lt.start) {
      apply_loctime(record, lt);
    } else {
      record.location = *loctime;
    }
  }
  if (auto year = first_text("CEURPUBYEAR")) record.pub_year = year_in(*year);

  std::vector<std::string> editors;
  for (const Node* n : by_class(page.dom.root(), "CEURVOLEDITOR")) {
    editors.push_back(n->normalized_text());
  }
  record.editors = people(editors, PersonRole::Editor);

  for (const Node* t : by_class(page.dom.root(), "CEURTITLE")) {
    const Node& container = entry_container(*t);
    PaperRecord paper;
    paper.title = t->normalized_text();
    std::vector<std::string> authors;
    for (const Node* a : by_class(container, "CEURAUTHOR")) {
      authors.push_back(a->normalized_text());
    }
    paper.authors = people(authors, PersonRole::Author);
    if (const Node* a = anchor_for(*t, container)) {
      paper.pdf_href = resolve_iri(page.page.source_iri, *a->attr("href"));
    }
    auto pages = by_class(container, "CEURPAGES");
    if (!pages.empty()) {
      if (auto range = parse_pages(pages.front()->normalized_text())) {
        paper.page_start = range->start;
        paper.page_end = range->end;
      }
    }
    paper.is_invited = invited(page.dom, container);
    record.papers.push_back(std::move(paper));
  }
  return finish_volume(std::move(record), page);
}

// --- heuristic A: heading-structured pages ---------------------------------

namespace {

std::optional<std::size_t> edited_by_line(const std::vector<html::Line>& lines) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (std::regex_search(lines[i].text, edited_by_re())) return i;
  }
  return std::nullopt;
}

std::string after_edited_by(const std::string& line) {
  std::smatch m;
  if (!std::regex_search(line, m, edited_by_re())) return {};
  std::string rest = m.suffix().str();
  std::string_view v = text::trim(rest);
  while (!v.empty() && (v.front() == ':' || v.front() == '-')) {
    v.remove_prefix(1);
    v = text::trim(v);
  }
  return std::string(v);
}

bool line_in_heading(const html::Line& line) {
  return std::any_of(line.blocks.begin(), line.blocks.end(),
                     [](const Node* b) { return is_heading(*b); });
}

bool toc_marker(const std::string& s) {
  static const std::regex re(R"(^(table of )?contents\b|^papers?\b|^accepted papers|^program)",
                             std::regex::icase);
  return std::regex_search(s, re);
}

}  // namespace

MatchOutcome extract_volume_heuristic_a(const ParsedPage& page) {
  const Node* h1 = html::find_first(page.dom.body(), "h1");
  if (!h1) return NotApplicable{};

  VolumeRecord record;
  record.full_title = h1->normalized_text();
  record.volume_number = volume_number_in(page.dom.title());
  if (!record.volume_number) record.volume_number = own_volume(page.page);

  auto lines = html::text_lines(page.dom.body());
  auto edited = edited_by_line(lines);

  // Location/date: first parseable line between the title and the editors;
  // otherwise the line right after the title is taken verbatim as location.
  std::size_t title_line = 0;
  while (title_line < lines.size() && !html::line_within(lines[title_line], "h1")) {
    ++title_line;
  }
  std::size_t stop = edited ? *edited : std::min(lines.size(), title_line + 4);
  for (std::size_t i = title_line + 1; i < stop && i < lines.size(); ++i) {
    if (html::line_within(lines[i], "h1")) continue;
    LocTime lt = parse_loctime(lines[i].text);
    if (lt.start) {
      apply_loctime(record, lt);
      break;
    }
  }
  if (!record.event_start && title_line + 1 < stop) {
    static const std::regex not_location(R"(vol-|ceur|proceedings|edited)",
                                         std::regex::icase);
    std::size_t i = title_line + 1;
    while (i < stop && html::line_within(lines[i], "h1")) ++i;
    if (i < stop && year_in(lines[i].text) &&
        lines[i].text.find(',') != std::string::npos &&
        !std::regex_search(lines[i].text, not_location)) {
      record.location = lines[i].text;
    }
  }
  record.pub_year = published_year(lines);

  std::size_t toc_order = SIZE_MAX;
  if (edited) {
    std::string inline_names = after_edited_by(lines[*edited].text);
    if (!inline_names.empty()) {
      for (const auto& n : split_names(inline_names)) {
        record.editors.push_back(PersonRecord{n, PersonRole::Editor, std::nullopt});
      }
    }
    for (std::size_t i = *edited + 1; i < lines.size() && i < *edited + 21; ++i) {
      const auto& line = lines[i];
      bool paper_anchor = std::any_of(
          line.anchors.begin(), line.anchors.end(),
          [](const Node* a) { return is_paper_href(*a->attr("href")); });
      if (html::line_within(line, "li") || line_in_heading(line) ||
          toc_marker(line.text) || paper_anchor) {
        if (line.block) toc_order = line.block->order;
        break;
      }
      PersonRecord editor = editor_from_line(line.text);
      if (!editor.full_name.empty()) record.editors.push_back(std::move(editor));
    }
  }
  std::size_t editors_order = edited && lines[*edited].block ? lines[*edited].block->order : 0;
  (void)toc_order;

  for (const Node* li : html::find_all(page.dom.body(), "li")) {
    if (li->order < editors_order) continue;
    if (!html::find_all(*li, "li").empty() && html::find_all(*li, "li").size() > 1) {
      continue;  // a list item that only wraps a nested list
    }
    const Node* anchor = nullptr;
    for (const Node* a : html::find_all(*li, "a")) {
      if (a->attr("href") && !a->normalized_text().empty()) {
        anchor = a;
        break;
      }
    }
    std::string full = li->normalized_text();
    std::string title;
    if (anchor) {
      title = anchor->normalized_text();
    } else {
      auto li_lines = html::text_lines(*li);
      if (!li_lines.empty()) title = li_lines.front().text;
    }
    std::size_t at = full.find(title);
    std::string run = at == std::string::npos ? full : full.substr(at + title.size());
    PaperRecord paper;
    if (auto pages = take_pages(run)) {
      paper.page_start = pages->start;
      paper.page_end = pages->end;
    }
    std::string_view r = text::trim(run);
    while (!r.empty() && (r.front() == ',' || r.front() == '.' || r.front() == ':' ||
                          r.front() == ';' || r.front() == '-')) {
      r.remove_prefix(1);
      r = text::trim(r);
    }
    paper.title = title;
    while (!paper.title.empty() &&
           (paper.title.back() == '.' || paper.title.back() == ',')) {
      paper.title.pop_back();
    }
    paper.authors = people(split_names(r), PersonRole::Author);
    if (paper.authors.empty()) continue;  // preface, notes, navigation
    if (anchor) paper.pdf_href = resolve_iri(page.page.source_iri, *anchor->attr("href"));
    paper.is_invited = invited(page.dom, *li);
    record.papers.push_back(std::move(paper));
  }
  return finish_volume(std::move(record), page);
}

// --- heuristic B: older plain markup ---------------------------------------

MatchOutcome extract_volume_heuristic_b(const ParsedPage& page) {
  const Node* title_el = html::find_first(page.dom.root(), "title");
  auto lines = html::text_lines(page.dom.body());
  auto edited = edited_by_line(lines);
  if (!title_el || !edited) return NotApplicable{};

  static const std::regex site_prefix(R"(^CEUR-WS(?:\.org)?/Vol-\d+\s*(?:-|:|\xE2\x80\x93)\s*)",
                                      std::regex::icase);
  VolumeRecord record;
  record.full_title = std::regex_replace(title_el->normalized_text(), site_prefix, "");
  record.volume_number = volume_number_in(title_el->normalized_text());
  if (!record.volume_number) record.volume_number = own_volume(page.page);

  for (std::size_t i = 0; i < *edited; ++i) {
    LocTime lt = parse_loctime(lines[i].text);
    if (lt.start) {
      apply_loctime(record, lt);
      break;
    }
  }
  record.pub_year = published_year(lines);

  auto paper_anchor = [](const html::Line& line) -> const Node* {
    for (const Node* a : line.anchors) {
      if (is_paper_href(*a->attr("href"))) return a;
    }
    return nullptr;
  };

  std::size_t i = *edited + 1;
  for (; i < lines.size(); ++i) {
    if (paper_anchor(lines[i])) break;
    for (const Node* a : lines[i].anchors) {
      std::string name = a->normalized_text();
      if (name.empty()) continue;
      PersonRecord editor{name, PersonRole::Editor, std::nullopt};
      std::size_t at = lines[i].text.find(name);
      if (at != std::string::npos) {
        std::string_view rest = text::trim(
            std::string_view(lines[i].text).substr(at + name.size()));
        while (!rest.empty() && (rest.front() == ',' || rest.front() == '-')) {
          rest.remove_prefix(1);
          rest = text::trim(rest);
        }
        if (!rest.empty()) editor.affiliation_text = std::string(rest);
      }
      record.editors.push_back(std::move(editor));
    }
  }

  while (i < lines.size()) {
    const Node* anchor = paper_anchor(lines[i]);
    if (!anchor) {
      ++i;
      continue;
    }
    PaperRecord paper;
    paper.title = anchor->normalized_text();
    std::string title_text = paper.title;
    if (!title_text.empty() && title_text.back() == ')') {
      if (auto pages = take_pages(title_text)) {
        paper.page_start = pages->start;
        paper.page_end = pages->end;
        paper.title = std::string(text::trim(title_text));
      }
    }
    std::size_t at = lines[i].text.find(anchor->normalized_text());
    std::string title_rest =
        at == std::string::npos
            ? std::string()
            : lines[i].text.substr(at + anchor->normalized_text().size());
    if (auto pages = take_pages(title_rest); pages && !paper.page_start) {
      paper.page_start = pages->start;
      paper.page_end = pages->end;
    }
    paper.pdf_href = resolve_iri(page.page.source_iri, *anchor->attr("href"));
    std::string run;
    if (i + 1 < lines.size() && !paper_anchor(lines[i + 1])) {
      run = lines[i + 1].text;
      i += 2;
    } else {
      ++i;
    }
    if (auto pages = take_pages(run); pages && !paper.page_start) {
      paper.page_start = pages->start;
      paper.page_end = pages->end;
    }
    paper.authors = people(split_names(run), PersonRole::Author);
    paper.is_invited = invited(page.dom, *anchor) ||
                       std::regex_search(run, invited_re());
    if (!paper.authors.empty()) record.papers.push_back(std::move(paper));
  }
  return finish_volume(std::move(record), page);
}

// --- convenience overloads and registry -------------------------------------

MatchOutcome extract_volume_rdfa(const PageDocument& page) {
  return extract_volume_rdfa(ParsedPage(page));
}
MatchOutcome extract_volume_microformat(const PageDocument& page) {
  return extract_volume_microformat(ParsedPage(page));
}
MatchOutcome extract_volume_heuristic_a(const PageDocument& page) {
  return extract_volume_heuristic_a(ParsedPage(page));
}
MatchOutcome extract_volume_heuristic_b(const PageDocument& page) {
  return extract_volume_heuristic_b(ParsedPage(page));
}

TemplateRegistry default_registry() {
  TemplateRegistry registry;
  registry.add({kIndexTemplate, ContentKind::IndexPage, 0, match_index});
  registry.add({kRdfaTemplate, ContentKind::VolumePage, 0,
                [](const ParsedPage& p) { return extract_volume_rdfa(p); }});
  registry.add({kMicroformatTemplate, ContentKind::VolumePage, 1,
                [](const ParsedPage& p) { return extract_volume_microformat(p); }});
  registry.add({kHeuristicATemplate, ContentKind::VolumePage, 2,
                [](const ParsedPage& p) { return extract_volume_heuristic_a(p); }});
  registry.add({kHeuristicBTemplate, ContentKind::VolumePage, 3,
                [](const ParsedPage& p) { return extract_volume_heuristic_b(p); }});
  return registry;
}

}  // namespace volver
