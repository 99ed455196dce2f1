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

#include "volver/html.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <initializer_list>
#include <unordered_map>
#include <unordered_set>

#include "volver/text.hpp"

namespace volver::html {

namespace {

// Latin-1 supplement entity names for U+00A0..U+00FF, in code point order.
constexpr std::array<const char*, 96> kLatin1Entities = {
    "nbsp",   "iexcl",  "cent",   "pound",  "curren", "yen",    "brvbar",
    "sect",   "uml",    "copy",   "ordf",   "laquo",  "not",    "shy",
    "reg",    "macr",   "deg",    "plusmn", "sup2",   "sup3",   "acute",
    "micro",  "para",   "middot", "cedil",  "sup1",   "ordm",   "raquo",
    "frac14", "frac12", "frac34", "iquest", "Agrave", "Aacute", "Acirc",
    "Atilde", "Auml",   "Aring",  "AElig",  "Ccedil", "Egrave", "Eacute",
    "Ecirc",  "Euml",   "Igrave", "Iacute", "Icirc",  "Iuml",   "ETH",
    "Ntilde", "Ograve", "Oacute", "Ocirc",  "Otilde", "Ouml",   "times",
    "Oslash", "Ugrave", "Uacute", "Ucirc",  "Uuml",   "Yacute", "THORN",
    "szlig",  "agrave", "aacute", "acirc",  "atilde", "auml",   "aring",
    "aelig",  "ccedil", "egrave", "eacute", "ecirc",  "euml",   "igrave",
    "iacute", "icirc",  "iuml",   "eth",    "ntilde", "ograve", "oacute",
    "ocirc",  "otilde", "ouml",   "divide", "oslash", "ugrave", "uacute",
    "ucirc",  "uuml",   "yacute", "thorn",  "yuml"};

const std::unordered_map<std::string_view, char32_t>& entity_table() {
  static const auto* table = [] {
    auto* t = new std::unordered_map<std::string_view, char32_t>{
        {"amp", '&'},       {"lt", '<'},        {"gt", '>'},
        {"quot", '"'},      {"apos", '\''},     {"ndash", 0x2013},
        {"mdash", 0x2014},  {"lsquo", 0x2018},  {"rsquo", 0x2019},
        {"sbquo", 0x201A},  {"ldquo", 0x201C},  {"rdquo", 0x201D},
        {"bdquo", 0x201E},  {"hellip", 0x2026}, {"bull", 0x2022},
        {"euro", 0x20AC},   {"trade", 0x2122},  {"dagger", 0x2020},
        {"Dagger", 0x2021}, {"thinsp", 0x2009}, {"ensp", 0x2002},
        {"emsp", 0x2003},   {"zwnj", 0x200C},   {"zwj", 0x200D},
        {"OElig", 0x152},   {"oelig", 0x153},   {"Scaron", 0x160},
        {"scaron", 0x161},  {"Yuml", 0x178},    {"fnof", 0x192},
        {"circ", 0x2C6},    {"tilde", 0x2DC},   {"prime", 0x2032},
        {"Prime", 0x2033},  {"lsaquo", 0x2039}, {"rsaquo", 0x203A},
        {"alpha", 0x3B1},   {"beta", 0x3B2},    {"gamma", 0x3B3},
        {"delta", 0x3B4},   {"lambda", 0x3BB},  {"mu", 0x3BC},
        {"pi", 0x3C0},      {"sigma", 0x3C3},   {"omega", 0x3C9},
        {"rarr", 0x2192},   {"larr", 0x2190},   {"harr", 0x2194}};
    for (std::size_t i = 0; i < kLatin1Entities.size(); ++i) {
      t->emplace(kLatin1Entities[i], static_cast<char32_t>(0xA0 + i));
    }
    return t;
  }();
  return *table;
}

// Entities browsers accept without the terminating semicolon.
bool legacy_entity(std::string_view name) {
  return name == "amp" || name == "lt" || name == "gt" || name == "quot" ||
         name == "nbsp" || name == "copy" || name == "reg";
}

const std::unordered_set<std::string_view> kVoidElements{
    "area", "base",  "br",   "col",    "embed",  "hr",       "img",
    "input", "link", "meta", "param",  "source", "track",    "wbr",
    "basefont", "frame", "isindex", "keygen"};

const std::unordered_set<std::string_view> kClosesParagraph{
    "address", "article", "aside", "blockquote", "center", "dd",
    "div",     "dl",      "dt",    "fieldset",   "footer", "form",
    "h1",      "h2",      "h3",    "h4",         "h5",     "h6",
    "header",  "hr",      "li",    "menu",       "nav",    "ol",
    "p",       "pre",     "section", "table",    "ul"};

const std::unordered_set<std::string_view> kBlockElements{
    "address", "article", "aside",  "blockquote", "body",   "caption",
    "center",  "dd",      "div",    "dl",         "dt",     "fieldset",
    "footer",  "form",    "h1",     "h2",         "h3",     "h4",
    "h5",      "h6",      "head",   "header",     "hr",     "html",
    "li",      "menu",    "nav",    "ol",         "p",      "pre",
    "section", "table",   "tbody",  "td",         "tfoot",  "th",
    "thead",   "title",   "tr",     "ul",         "option", "noscript"};

bool is_heading(std::string_view tag) {
  return tag.size() == 2 && tag[0] == 'h' && tag[1] >= '1' && tag[1] <= '6';
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == ':' ||
         c == '_' || c == '.';
}

bool is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
}

class TreeBuilder {
 public:
  explicit TreeBuilder(std::string_view input) : in_(input) {
    root_ = std::make_unique<Node>();
    root_->type = NodeType::Document;
    stack_.push_back(root_.get());
  }

  std::unique_ptr<Node> build() {
    while (pos_ < in_.size()) {
      if (in_[pos_] == '<' && parse_markup()) continue;
      std::size_t next = in_.find('<', pos_ + 1);
      if (next == std::string_view::npos) next = in_.size();
      append_text(decode_entities(in_.substr(pos_, next - pos_)));
      pos_ = next;
    }
    return std::move(root_);
  }

 private:
  Node* current() { return stack_.back(); }

  void append_text(std::string data) {
    if (data.empty()) return;
    Node* parent = current();
    if (!parent->children.empty() &&
        parent->children.back()->type == NodeType::Text) {
      parent->children.back()->data += data;
      return;
    }
    auto node = std::make_unique<Node>();
    node->type = NodeType::Text;
    node->data = std::move(data);
    node->parent = parent;
    parent->children.push_back(std::move(node));
  }

  // Index in stack_ of the topmost element named `tag`, searching down until
  // an element in `boundaries` is met. -1 when absent.
  int find_open(std::string_view tag,
                std::initializer_list<std::string_view> boundaries) const {
    for (int i = static_cast<int>(stack_.size()) - 1; i > 0; --i) {
      const std::string& name = stack_[i]->name;
      if (name == tag) return i;
      if (std::find(boundaries.begin(), boundaries.end(), name) !=
          boundaries.end()) {
        return -1;
      }
    }
    return -1;
  }

  void pop_to(int index) {
    if (index > 0) stack_.resize(static_cast<std::size_t>(index));
  }

  void close_if_open(std::string_view tag,
                     std::initializer_list<std::string_view> boundaries) {
    pop_to(find_open(tag, boundaries));
  }

  void start_element(std::string name, std::vector<Attribute> attrs,
                     bool self_closing) {
    if (name == "html" || name == "head" || name == "body") {
      if (find_open(name, {}) > 0) return;
      if (name == "body") close_if_open("head", {});
    }
    if (kClosesParagraph.count(name)) {
      close_if_open("p", {"table", "td", "th", "caption", "button"});
    }
    if (name == "li") {
      close_if_open("li", {"ul", "ol", "table", "td", "th"});
    } else if (name == "dd" || name == "dt") {
      int dd = find_open("dd", {"dl", "table", "td", "th"});
      int dt = find_open("dt", {"dl", "table", "td", "th"});
      pop_to(std::max(dd, dt));
    } else if (is_heading(name) && is_heading(current()->name)) {
      stack_.pop_back();
    } else if (name == "a") {
      close_if_open("a", {"table", "td", "th"});
    } else if (name == "tr") {
      close_if_open("tr", {"table", "tbody", "thead", "tfoot"});
    } else if (name == "td" || name == "th") {
      int td = find_open("td", {"tr", "table"});
      int th = find_open("th", {"tr", "table"});
      pop_to(std::max(td, th));
    } else if (name == "tbody" || name == "thead" || name == "tfoot") {
      for (std::string_view t : {"tbody", "thead", "tfoot"}) {
        close_if_open(t, {"table"});
      }
    } else if (name == "option" && current()->name == "option") {
      stack_.pop_back();
    }

    auto node = std::make_unique<Node>();
    node->type = NodeType::Element;
    node->name = std::move(name);
    node->attributes = std::move(attrs);
    node->parent = current();
    Node* raw = node.get();
    current()->children.push_back(std::move(node));
    if (!self_closing && !kVoidElements.count(raw->name)) {
      stack_.push_back(raw);
    }
  }

  void end_element(const std::string& name) {
    if (name == "br") {
      start_element("br", {}, true);
      return;
    }
    if (name == "html" || name == "body") return;
    int index;
    if (name == "td" || name == "th" || name == "tr" || name == "tbody" ||
        name == "thead" || name == "tfoot" || name == "caption") {
      index = find_open(name, {"table"});
    } else if (name == "table") {
      index = find_open(name, {});
    } else {
      index = find_open(name, {"td", "th", "table", "caption"});
    }
    pop_to(index);
  }

  // Handles markup at pos_ ('<'). Returns false when the '<' is literal text.
  bool parse_markup() {
    std::string_view rest = in_.substr(pos_);
    if (rest.substr(0, 4) == "<!--") {
      std::size_t end = in_.find("-->", pos_ + 4);
      auto comment = std::make_unique<Node>();
      comment->type = NodeType::Comment;
      comment->parent = current();
      if (end == std::string_view::npos) {
        comment->data = std::string(in_.substr(pos_ + 4));
        pos_ = in_.size();
      } else {
        comment->data = std::string(in_.substr(pos_ + 4, end - pos_ - 4));
        pos_ = end + 3;
      }
      current()->children.push_back(std::move(comment));
      return true;
    }
    if (rest.size() >= 2 && (rest[1] == '!' || rest[1] == '?')) {
      std::size_t end = in_.find('>', pos_);
      pos_ = end == std::string_view::npos ? in_.size() : end + 1;
      return true;
    }
    bool closing = rest.size() >= 2 && rest[1] == '/';
    std::size_t i = pos_ + (closing ? 2 : 1);
    if (i >= in_.size() || !std::isalpha(static_cast<unsigned char>(in_[i]))) {
      if (closing) {
        // "</>" or "</ junk>" is dropped entirely.
        std::size_t end = in_.find('>', pos_);
        pos_ = end == std::string_view::npos ? in_.size() : end + 1;
        return true;
      }
      return false;
    }
    std::size_t name_start = i;
    while (i < in_.size() && is_name_char(in_[i])) ++i;
    std::string name = text::to_lower_ascii(in_.substr(name_start, i - name_start));

    std::vector<Attribute> attrs;
    bool self_closing = false;
    while (i < in_.size()) {
      while (i < in_.size() && (is_ws(in_[i]) || in_[i] == '/')) {
        if (in_[i] == '/' && i + 1 < in_.size() && in_[i + 1] == '>') {
          self_closing = true;
        }
        ++i;
      }
      if (i >= in_.size() || in_[i] == '>') break;
      if (in_[i] == '<') break;  // missing '>': next tag starts here
      std::size_t an = i;
      while (i < in_.size() && !is_ws(in_[i]) && in_[i] != '=' &&
             in_[i] != '>' && in_[i] != '/' && in_[i] != '<') {
        ++i;
      }
      std::string attr_name = text::to_lower_ascii(in_.substr(an, i - an));
      if (attr_name.empty()) {
        ++i;
        continue;
      }
      while (i < in_.size() && is_ws(in_[i])) ++i;
      std::string value;
      if (i < in_.size() && in_[i] == '=') {
        ++i;
        while (i < in_.size() && is_ws(in_[i])) ++i;
        if (i < in_.size() && (in_[i] == '"' || in_[i] == '\'')) {
          char quote = in_[i++];
          std::size_t end = in_.find(quote, i);
          if (end == std::string_view::npos) {
            end = in_.find('>', i);
            if (end == std::string_view::npos) end = in_.size();
            value = std::string(in_.substr(i, end - i));
            i = end;
          } else {
            value = std::string(in_.substr(i, end - i));
            i = end + 1;
          }
        } else {
          std::size_t vs = i;
          while (i < in_.size() && !is_ws(in_[i]) && in_[i] != '>') ++i;
          value = std::string(in_.substr(vs, i - vs));
        }
      }
      bool seen = std::any_of(attrs.begin(), attrs.end(),
                              [&](const Attribute& a) { return a.name == attr_name; });
      if (!seen) attrs.push_back(Attribute{attr_name, decode_entities(value)});
    }
    if (i < in_.size() && in_[i] == '>') ++i;
    pos_ = i;

    if (closing) {
      end_element(name);
      return true;
    }
    start_element(name, std::move(attrs), self_closing);
    if (!self_closing && (name == "script" || name == "style" ||
                          name == "title" || name == "textarea" ||
                          name == "xmp")) {
      consume_raw_text(name);
    }
    return true;
  }

  void consume_raw_text(const std::string& name) {
    std::string lowered = text::to_lower_ascii(in_.substr(pos_));
    std::size_t end = lowered.find("</" + name);
    std::string_view raw =
        in_.substr(pos_, end == std::string::npos ? std::string::npos : end);
    bool decode = name == "title" || name == "textarea";
    append_text(decode ? decode_entities(raw) : std::string(raw));
    if (end == std::string::npos) {
      pos_ = in_.size();
    } else {
      std::size_t close = in_.find('>', pos_ + end);
      pos_ = close == std::string_view::npos ? in_.size() : close + 1;
    }
    close_if_open(name, {});
  }

  std::string_view in_;
  std::size_t pos_ = 0;
  std::unique_ptr<Node> root_;
  std::vector<Node*> stack_;
};

void assign_order(Node& node, std::size_t& counter) {
  node.order = counter++;
  for (auto& child : node.children) assign_order(*child, counter);
}

void collect_text(const Node& node, std::string& out) {
  if (node.type == NodeType::Text) {
    out += node.data;
    return;
  }
  if (node.is_element("script") || node.is_element("style")) return;
  for (const auto& child : node.children) collect_text(*child, out);
}

}  // namespace

std::string decode_entities(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c != '&') {
      out.push_back(c);
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    if (j < s.size() && s[j] == '#') {
      ++j;
      bool hex = j < s.size() && (s[j] == 'x' || s[j] == 'X');
      if (hex) ++j;
      std::size_t digits_start = j;
      char32_t cp = 0;
      while (j < s.size() &&
             (hex ? std::isxdigit(static_cast<unsigned char>(s[j]))
                  : std::isdigit(static_cast<unsigned char>(s[j])))) {
        int d = std::isdigit(static_cast<unsigned char>(s[j]))
                    ? s[j] - '0'
                    : std::tolower(static_cast<unsigned char>(s[j])) - 'a' + 10;
        cp = cp * (hex ? 16 : 10) + static_cast<char32_t>(d);
        if (cp > 0x10FFFF) cp = 0x110000;
        ++j;
      }
      if (j == digits_start) {
        out.push_back('&');
        ++i;
        continue;
      }
      if (j < s.size() && s[j] == ';') ++j;
      if (cp == 0 || cp > 0x10FFFF) cp = 0xFFFD;
      text::append_utf8(out, cp);
      i = j;
      continue;
    }
    while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j])) &&
           j - i <= 10) {
      ++j;
    }
    std::string_view name = s.substr(i + 1, j - i - 1);
    bool terminated = j < s.size() && s[j] == ';';
    const auto& table = entity_table();
    auto it = table.find(name);
    if (it != table.end() && (terminated || legacy_entity(name))) {
      text::append_utf8(out, it->second);
      i = terminated ? j + 1 : j;
      continue;
    }
    out.push_back('&');
    ++i;
  }
  return out;
}

const std::string* Node::attr(std::string_view attr_name) const {
  for (const auto& a : attributes) {
    if (a.name == attr_name) return &a.value;
  }
  return nullptr;
}

bool Node::has_class(std::string_view cls) const {
  const std::string* value = attr("class");
  if (!value) return false;
  for (const std::string& token : text::split(text::collapse_whitespace(*value), ' ')) {
    if (token == cls) return true;
  }
  return false;
}

std::string Node::text_content() const {
  std::string out;
  collect_text(*this, out);
  return out;
}

std::string Node::normalized_text() const {
  return text::collapse_whitespace(text_content());
}

Document Document::parse(std::string_view utf8_html) {
  Document doc;
  doc.root_ = TreeBuilder(utf8_html).build();
  std::size_t counter = 0;
  assign_order(*doc.root_, counter);
  return doc;
}

Document Document::parse_bytes(std::string_view raw) {
  return parse(text::decode_html_bytes(raw));
}

const Node& Document::body() const {
  const Node* body = find_first(*root_, "body");
  return body ? *body : *root_;
}

std::string Document::title() const {
  const Node* title = find_first(*root_, "title");
  return title ? title->normalized_text() : std::string();
}

void for_each_element(const Node& node,
                      const std::function<void(const Node&)>& fn) {
  if (node.is_element()) fn(node);
  for (const auto& child : node.children) for_each_element(*child, fn);
}

std::vector<const Node*> find_all(const Node& node, std::string_view tag) {
  std::vector<const Node*> out;
  for_each_element(node, [&](const Node& n) {
    if (n.name == tag) out.push_back(&n);
  });
  return out;
}

const Node* find_first(const Node& node, std::string_view tag) {
  if (node.is_element(tag)) return &node;
  for (const auto& child : node.children) {
    if (const Node* found = find_first(*child, tag)) return found;
  }
  return nullptr;
}

const Node* closest(const Node& node, std::string_view tag) {
  for (const Node* n = &node; n; n = n->parent) {
    if (n->is_element(tag)) return n;
  }
  return nullptr;
}

bool is_block_element(std::string_view tag) {
  return kBlockElements.count(tag) > 0;
}

namespace {

class LineBuilder {
 public:
  std::vector<Line> finish() {
    flush();
    return std::move(lines_);
  }

  void walk(const Node& node) {
    if (node.type == NodeType::Text) {
      add_text(node.data);
      return;
    }
    if (node.type != NodeType::Element && node.type != NodeType::Document) {
      return;
    }
    if (node.is_element("script") || node.is_element("style")) return;
    if (node.is_element("br") || node.is_element("hr")) {
      flush();
      return;
    }
    bool block = node.is_element() && is_block_element(node.name);
    bool anchor = node.is_element("a") && node.attr("href") != nullptr;
    if (block) {
      flush();
      open_blocks_.push_back(&node);
    }
    if (anchor) anchors_.push_back(&node);
    for (const auto& child : node.children) walk(*child);
    if (anchor) anchors_.pop_back();
    if (block) {
      flush();
      open_blocks_.pop_back();
    }
  }

 private:
  void add_text(std::string_view data) {
    if (text::collapse_whitespace(data).empty()) {
      if (!pending_.empty()) pending_.push_back(' ');
      return;
    }
    if (pending_.empty()) {
      line_block_ = open_blocks_.empty() ? nullptr : open_blocks_.back();
      line_blocks_ = open_blocks_;
    }
    pending_ += data;
    for (const Node* a : anchors_) {
      if (std::find(line_anchors_.begin(), line_anchors_.end(), a) ==
          line_anchors_.end()) {
        line_anchors_.push_back(a);
      }
    }
  }

  void flush() {
    std::string collapsed = text::collapse_whitespace(pending_);
    if (!collapsed.empty()) {
      lines_.push_back(Line{std::move(collapsed), std::move(line_anchors_),
                            line_block_, std::move(line_blocks_)});
    }
    pending_.clear();
    line_anchors_.clear();
    line_blocks_.clear();
    line_block_ = nullptr;
  }

  std::vector<Line> lines_;
  std::vector<const Node*> open_blocks_;
  std::vector<const Node*> anchors_;
  std::string pending_;
  std::vector<const Node*> line_anchors_;
  std::vector<const Node*> line_blocks_;
  const Node* line_block_ = nullptr;
};

}  // namespace

std::vector<Line> text_lines(const Node& node) {
  LineBuilder builder;
  builder.walk(node);
  return builder.finish();
}

bool line_within(const Line& line, std::string_view tag) {
  return std::any_of(line.blocks.begin(), line.blocks.end(),
                     [&](const Node* b) { return b->name == tag; });
}

}  // namespace volver::html
