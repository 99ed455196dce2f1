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

#ifndef VOLVER_XPATH_HPP_
#define VOLVER_XPATH_HPP_

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "volver/errors.hpp"
#include "volver/html.hpp"

namespace volver::html {

class XPathError : public Error {
 public:
  using Error::Error;
};

struct XPathExpr;

// A compiled XPath 1.0 subset over the tag-soup tree.
//
// Supported: absolute and relative location paths with '/' and '//', the
// abbreviated steps '.', '..', '@name' and '@*', node tests NAME, '*',
// text() and node(), any number of predicates, the operators or/and/=/!=,
// numeric positions, string literals and the functions contains,
// starts-with, not, normalize-space, string, concat, position, last and
// count.
class XPath {
 public:
  static XPath compile(std::string_view expression);

  // Element and text nodes selected from `context`, in document order.
  std::vector<const Node*> select(const Node& context) const;
  // String values of the selected items (attributes give their value),
  // whitespace-collapsed.
  std::vector<std::string> strings(const Node& context) const;
  const Node* first(const Node& context) const;

  const std::string& source() const { return source_; }

 private:
  std::shared_ptr<const XPathExpr> expr_;
  std::string source_;
};

std::vector<const Node*> select(const Node& context, std::string_view xpath);
std::vector<std::string> select_strings(const Node& context,
                                        std::string_view xpath);

}  // namespace volver::html

#endif  // VOLVER_XPATH_HPP_
