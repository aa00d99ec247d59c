#include <cctype>
#include <charconv>
#include <variant>

#include "splaytrav/tree.hpp"

namespace splaytrav {

namespace {

Handle append_maximal(Tree& t, Height h) {
  if (h < 0) return kNone;
  Handle l = append_maximal(t, h - 1);
  Handle v = t.add_node(l, kNone);
  t.set_right(v, append_maximal(t, h - 1));
  return v;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Tree run() {
    struct Frame {
      Handle node;
      int filled;
      std::size_t open_pos;
    };
    std::vector<Frame> frames;
    bool have_root = false;

    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) {
        if (!frames.empty()) throw ParseError("unterminated '('", frames.back().open_pos);
        if (!have_root) throw ParseError("expected a tree", pos_);
        return std::move(tree_);
      }
      if (have_root) throw ParseError("unexpected trailing input", pos_);

      Handle value = kNone;
      const char c = text_[pos_];
      if (!frames.empty() && frames.back().filled == 2 && c != ')') throw ParseError("expected ')'", pos_);
      if (c == '(') {
        frames.push_back({tree_.add_node(), 0, pos_});
        ++pos_;
        continue;
      } else if (c == ')') {
        if (frames.empty()) throw ParseError("unmatched ')'", pos_);
        if (frames.back().filled != 2) throw ParseError("expected two subtrees before ')'", pos_);
        value = frames.back().node;
        frames.pop_back();
        ++pos_;
      } else if (c == '.') {
        ++pos_;
      } else if (c == 'M') {
        ++pos_;
        value = append_maximal(tree_, parse_height());
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
      }

      if (frames.empty()) {
        tree_.set_root(value);
        have_root = true;
      } else {
        Frame& top = frames.back();
        if (top.filled == 0)
          tree_.set_left(top.node, value);
        else
          tree_.set_right(top.node, value);
        ++top.filled;
      }
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  Tree tree_;

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Height parse_height() {
    skip_space();
    const std::size_t start = pos_;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{}) throw ParseError("expected a height after 'M'", start);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    if (value < -1) throw ParseError("height must be >= -1", start);
    if (value > kMaxExplicitHeight) throw ParseError("height too large", start);
    return value;
  }
};

// Height of every maximal subtree, -2 elsewhere; indexed by handle.
std::vector<Height> maximal_heights(const Tree& t, Handle v) {
  std::vector<Height> out(t.store_size(), -2);
  if (v == kNone) return out;
  std::vector<std::pair<Handle, bool>> stack{{v, false}};
  auto height_of = [&](Handle u) { return u == kNone ? -1 : out[u]; };
  while (!stack.empty()) {
    auto [u, expanded] = stack.back();
    stack.pop_back();
    if (!expanded) {
      stack.emplace_back(u, true);
      if (t.right(u) != kNone) stack.emplace_back(t.right(u), false);
      if (t.left(u) != kNone) stack.emplace_back(t.left(u), false);
    } else {
      Height l = height_of(t.left(u)), r = height_of(t.right(u));
      out[u] = (l == -2 || l != r) ? -2 : l + 1;
    }
  }
  return out;
}

}  // namespace

Tree parse_tree(std::string_view text) { return Parser(text).run(); }

std::string format_subtree(const Tree& t, Handle v) {
  const auto heights = maximal_heights(t, v);
  std::string out;
  std::vector<std::variant<Handle, const char*>> todo{v};
  while (!todo.empty()) {
    auto item = todo.back();
    todo.pop_back();
    if (auto* s = std::get_if<const char*>(&item)) {
      out += *s;
      continue;
    }
    Handle u = std::get<Handle>(item);
    if (u == kNone) {
      out += '.';
    } else if (heights[u] >= 0) {
      out += "M ";
      out += std::to_string(heights[u]);
    } else {
      out += '(';
      todo.emplace_back(")");
      todo.emplace_back(t.right(u));
      todo.emplace_back(" ");
      todo.emplace_back(t.left(u));
    }
  }
  return out;
}

std::string format_tree(const Tree& t) { return format_subtree(t, t.root()); }

}  // namespace splaytrav
