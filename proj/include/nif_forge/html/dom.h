// Copyright 2026 The NIF Forge Authors.
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

#ifndef NIF_FORGE_HTML_DOM_H_
#define NIF_FORGE_HTML_DOM_H_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nif_forge::html {

struct Attribute {
  std::string name;  // lower-case
  std::string value;

  bool operator==(const Attribute &) const = default;
};

enum class NodeKind { kDocument, kElement, kText, kComment };

// A node of the element tree. Children are owned; parent is a back pointer
// maintained by the mutation helpers below.
class Node {
 public:
  static std::unique_ptr<Node> MakeDocument();
  static std::unique_ptr<Node> MakeElement(std::string name);
  static std::unique_ptr<Node> MakeText(std::string text,
                                        bool verbatim = false);
  static std::unique_ptr<Node> MakeComment(std::string text);

  NodeKind kind() const { return kind_; }
  bool is_element() const { return kind_ == NodeKind::kElement; }
  bool is_text() const { return kind_ == NodeKind::kText; }

  // Tag name (lower-case) for elements.
  const std::string &name() const { return name_; }

  // Character data for text and comment nodes.
  const std::string &text() const { return text_; }
  void set_text(std::string text) { text_ = std::move(text); }

  // Text inserted by a replace rule. Whitespace in verbatim text is kept
  // as-is by the extractor instead of being collapsed.
  bool verbatim() const { return verbatim_; }

  const std::vector<Attribute> &attributes() const { return attributes_; }
  const std::string *GetAttribute(std::string_view name) const;
  bool HasAttribute(std::string_view name) const {
    return GetAttribute(name) != nullptr;
  }
  void SetAttribute(std::string_view name, std::string value);

  Node *parent() const { return parent_; }
  const std::vector<std::unique_ptr<Node>> &children() const {
    return children_;
  }

  Node *AppendChild(std::unique_ptr<Node> child);
  // Detaches and returns this node from its parent.
  std::unique_ptr<Node> Detach();
  // Replaces this node in its parent with |other|; returns the new node.
  Node *ReplaceWith(std::unique_ptr<Node> other);

  // Position among the parent's children, or 0 for the root.
  std::size_t IndexInParent() const;

  // Element siblings, skipping text and comments.
  const Node *PreviousElementSibling() const;
  const Node *NextElementSibling() const;

  std::unique_ptr<Node> Clone() const;

  // Concatenated character data of all descendant text nodes.
  std::string TextContent() const;

  // Pre-order traversal over this node and all descendants.
  void ForEach(const std::function<void(const Node &)> &fn) const;

 private:
  explicit Node(NodeKind kind) : kind_(kind) {}

  NodeKind kind_;
  std::string name_;
  std::string text_;
  bool verbatim_ = false;
  std::vector<Attribute> attributes_;
  Node *parent_ = nullptr;
  std::vector<std::unique_ptr<Node>> children_;
};

// Serializes a tree to HTML. Text and attribute values are escaped so that
// ParseHtml(SerializeHtml(n)) reproduces the same tree for documents
// produced by the parser.
std::string SerializeHtml(const Node &node);

// Void elements never have children or end tags.
bool IsVoidElement(std::string_view tag);

}  // namespace nif_forge::html

#endif  // NIF_FORGE_HTML_DOM_H_
