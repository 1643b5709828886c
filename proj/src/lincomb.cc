// Copyright 2026 The pirlab authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pirlab/lincomb.h"

#include <cctype>

#include "pirlab/errors.h"

namespace pirlab {

LinComb& LinComb::add(SymbolRef ref, Element coeff) {
  if (coeff == 0) return *this;
  terms_[ref] += coeff;
  return *this;
}

LinComb& LinComb::add(SymbolRef ref, Element coeff, const FieldSpec& field) {
  const Element c = field.add(terms_.count(ref) ? terms_[ref] : 0,
                              coeff % field.q());
  if (c == 0) {
    terms_.erase(ref);
  } else {
    terms_[ref] = c;
  }
  return *this;
}

LinComb operator+(LinComb lhs, const LinComb& rhs) {
  for (const auto& [ref, c] : rhs.terms()) lhs.add(ref, c);
  return lhs;
}

namespace {

std::string render(const LinComb& comb, bool alias) {
  std::string out;
  for (const auto& [ref, c] : comb.terms()) {
    if (!out.empty()) out += '+';
    if (c != 1) out += std::to_string(c) + "*";
    if (alias) {
      out += static_cast<char>('a' + ref.msg - 1);
      out += std::to_string(ref.sym);
    } else {
      out += "W" + std::to_string(ref.msg) + "[" + std::to_string(ref.sym) +
             "]";
    }
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  void expect(char c) {
    if (peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  // Unsigned decimal without leading zeros, fitting in 31 bits.
  long number() {
    const std::size_t start = pos_;
    long value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 0x7fffffffL) throw ParseError("number too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected digit", start);
    if (text_[start] == '0' && pos_ - start > 1) {
      throw ParseError("leading zero", start);
    }
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string LinComb::to_string() const { return render(*this, false); }

std::string LinComb::to_alias_string() const {
  for (const auto& [ref, c] : terms_) {
    if (ref.msg > 26) return to_string();
  }
  return render(*this, true);
}

LinComb parse_lincomb(std::string_view text) {
  Cursor cur(text);
  LinComb comb;
  if (cur.done()) throw ParseError("empty linear combination", 0);
  while (true) {
    const std::size_t term_start = cur.pos();
    long coeff = 1;
    if (cur.peek() != 'W') {
      coeff = cur.number();
      if (coeff == 0) throw ParseError("zero coefficient", term_start);
      cur.expect('*');
    }
    cur.expect('W');
    const long msg = cur.number();
    cur.expect('[');
    const long sym = cur.number();
    cur.expect(']');
    if (msg < 1 || sym < 1) throw ParseError("index must be >= 1", term_start);
    const SymbolRef ref{static_cast<int>(msg), static_cast<int>(sym)};
    if (comb.terms().count(ref)) {
      throw ParseError("repeated term", term_start);
    }
    comb.add(ref, static_cast<Element>(coeff));
    if (cur.done()) break;
    cur.expect('+');
  }
  return comb;
}

std::string query_to_string(const Query& query) {
  if (query.empty()) return "null";
  std::string out;
  for (const auto& comb : query) {
    if (!out.empty()) out += ';';
    out += comb.to_string();
  }
  return out;
}

}  // namespace pirlab
