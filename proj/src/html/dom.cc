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

#include "nif_forge/html/dom.h"

#include <algorithm>
#include <array>

namespace nif_forge::html {

std::unique_ptr<Node> Node::MakeDocument() {
  return std::unique_ptr<Node>(new Node(NodeKind::kDocument));
}

std::unique_ptr<Node> Node::MakeElement(std::string name) {
  auto node = std::unique_ptr<Node>(new Node(NodeKind::kElement));
  node->name_ = std::move(name);
  return node;
}

std::unique_ptr<Node> Node::MakeText(std::string text, bool verbatim) {
  auto node = std::unique_ptr<Node>(new Node(NodeKind::kText));
  node->text_ = std::move(text);
  node->verbatim_ = verbatim;
  return node;
}

std::unique_ptr<Node> Node::MakeComment(std::string text) {
  auto node = std::unique_ptr<Node>(new Node(NodeKind::kComment));
  node->text_ = std::move(text);
  return node;
}

const std::string *Node::GetAttribute(std::string_view name) const {
  for (const Attribute &attr : attributes_) {
    if (attr.name == name) return &attr.value;
  }
  return nullptr;
}

void Node::SetAttribute(std::string_view name, std::string value) {
  for (Attribute &attr : attributes_) {
    if (attr.name == name) {
      attr.value = std::move(value);
      return;
    }
  }
  attributes_.push_back({std::string(name), std::move(value)});
}

Node *Node::AppendChild(std::unique_ptr<Node> child) {
  child->parent_ = this;
  children_.push_back(std::move(child));
  return children_.back().get();
}

std::size_t Node::IndexInParent() const {
  if (parent_ == nullptr) return 0;
  const auto &siblings = parent_->children_;
  for (std::size_t i = 0; i < siblings.size(); ++i) {
    if (siblings[i].get() == this) return i;
  }
  return 0;
}

std::unique_ptr<Node> Node::Detach() {
  if (parent_ == nullptr) return nullptr;
  auto &siblings = parent_->children_;
  auto it = siblings.begin() + static_cast<std::ptrdiff_t>(IndexInParent());
  std::unique_ptr<Node> self = std::move(*it);
  siblings.erase(it);
  parent_ = nullptr;
  return self;
}

Node *Node::ReplaceWith(std::unique_ptr<Node> other) {
  Node *parent = parent_;
  auto &slot = parent->children_[IndexInParent()];
  other->parent_ = parent;
  std::unique_ptr<Node> old = std::exchange(slot, std::move(other));
  old->parent_ = nullptr;
  return slot.get();
}

const Node *Node::PreviousElementSibling() const {
  if (parent_ == nullptr) return nullptr;
  const auto &siblings = parent_->children_;
  for (std::size_t i = IndexInParent(); i > 0; --i) {
    if (siblings[i - 1]->is_element()) return siblings[i - 1].get();
  }
  return nullptr;
}

const Node *Node::NextElementSibling() const {
  if (parent_ == nullptr) return nullptr;
  const auto &siblings = parent_->children_;
  for (std::size_t i = IndexInParent() + 1; i < siblings.size(); ++i) {
    if (siblings[i]->is_element()) return siblings[i].get();
  }
  return nullptr;
}

std::unique_ptr<Node> Node::Clone() const {
  auto copy = std::unique_ptr<Node>(new Node(kind_));
  copy->name_ = name_;
  copy->text_ = text_;
  copy->verbatim_ = verbatim_;
  copy->attributes_ = attributes_;
  for (const auto &child : children_) copy->AppendChild(child->Clone());
  return copy;
}

std::string Node::TextContent() const {
  std::string out;
  ForEach([&out](const Node &n) {
    if (n.is_text()) out += n.text();
  });
  return out;
}

void Node::ForEach(const std::function<void(const Node &)> &fn) const {
  fn(*this);
  for (const auto &child : children_) child->ForEach(fn);
}

bool IsVoidElement(std::string_view tag) {
  static constexpr std::array<std::string_view, 14> kVoid = {
      "area", "base", "br",   "col",  "embed",  "hr",    "img",
      "input", "link", "meta", "param", "source", "track", "wbr"};
  return std::find(kVoid.begin(), kVoid.end(), tag) != kVoid.end();
}

namespace {

bool IsRawTextElement(std::string_view tag) {
  return tag == "script" || tag == "style";
}

void Escape(std::string_view s, bool attribute, std::string *out) {
  for (char c : s) {
    switch (c) {
      case '&': *out += "&amp;"; break;
      case '<': *out += "&lt;"; break;
      case '>': *out += "&gt;"; break;
      case '"':
        if (attribute) {
          *out += "&quot;";
        } else {
          out->push_back(c);
        }
        break;
      default: out->push_back(c);
    }
  }
}

void Serialize(const Node &node, std::string *out) {
  switch (node.kind()) {
    case NodeKind::kDocument:
      for (const auto &child : node.children()) Serialize(*child, out);
      break;
    case NodeKind::kText: {
      const Node *parent = node.parent();
      if (parent != nullptr && IsRawTextElement(parent->name())) {
        *out += node.text();
      } else {
        Escape(node.text(), false, out);
      }
      break;
    }
    case NodeKind::kComment:
      *out += "<!--";
      *out += node.text();
      *out += "-->";
      break;
    case NodeKind::kElement:
      *out += '<';
      *out += node.name();
      for (const Attribute &attr : node.attributes()) {
        *out += ' ';
        *out += attr.name;
        *out += "=\"";
        Escape(attr.value, true, out);
        *out += '"';
      }
      *out += '>';
      if (IsVoidElement(node.name())) break;
      for (const auto &child : node.children()) Serialize(*child, out);
      *out += "</";
      *out += node.name();
      *out += '>';
      break;
  }
}

}  // namespace

std::string SerializeHtml(const Node &node) {
  std::string out;
  Serialize(node, &out);
  return out;
}

}  // namespace nif_forge::html
