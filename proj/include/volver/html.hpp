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

#ifndef VOLVER_HTML_HPP_
#define VOLVER_HTML_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace volver::html {

enum class NodeType { Document, Element, Text, Comment };

struct Attribute {
  std::string name;  // lowercased
  std::string value;  // entities decoded
};

class Node {
 public:
  NodeType type = NodeType::Element;
  std::string name;  // lowercased tag name for elements
  std::string data;  // character data for text and comment nodes
  std::vector<Attribute> attributes;
  Node* parent = nullptr;
  std::vector<std::unique_ptr<Node>> children;
  std::size_t order = 0;  // position in document order

  bool is_element() const { return type == NodeType::Element; }
  bool is_element(std::string_view tag) const {
    return type == NodeType::Element && name == tag;
  }
  const std::string* attr(std::string_view attr_name) const;
  bool has_class(std::string_view cls) const;

  // Concatenated character data of all descendant text nodes.
  std::string text_content() const;
  // text_content() with whitespace collapsed.
  std::string normalized_text() const;
};

// Parsed document tree. Never fails: unknown constructs become text, unclosed
// elements are closed at end of input and stray end tags are dropped.
class Document {
 public:
  static Document parse(std::string_view utf8_html);
  // Decodes raw bytes with the charset ladder before parsing.
  static Document parse_bytes(std::string_view raw);

  const Node& root() const { return *root_; }
  // First <body> element, or the root when none exists.
  const Node& body() const;
  // Text of the first <title> element (collapsed), or empty.
  std::string title() const;

 private:
  std::unique_ptr<Node> root_;
};

// Pre-order traversal over elements below (and including) `node`.
void for_each_element(const Node& node,
                      const std::function<void(const Node&)>& fn);
std::vector<const Node*> find_all(const Node& node, std::string_view tag);
const Node* find_first(const Node& node, std::string_view tag);
const Node* closest(const Node& node, std::string_view tag);

bool is_block_element(std::string_view tag);

// One visual line of text as a browser would break it: block boundaries and
// <br> end a line.
struct Line {
  std::string text;  // whitespace-collapsed
  std::vector<const Node*> anchors;  // <a href> elements contributing text
  const Node* block = nullptr;  // innermost block open when the line began
  std::vector<const Node*> blocks;  // block elements open when the line began
};

std::vector<Line> text_lines(const Node& node);

// Returns true when the line began inside an element with tag `tag`.
bool line_within(const Line& line, std::string_view tag);

std::string decode_entities(std::string_view s);

}  // namespace volver::html

#endif  // VOLVER_HTML_HPP_
