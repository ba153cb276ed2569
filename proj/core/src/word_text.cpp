#include "obembed/word_text.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <vector>

#include "obembed/error.hpp"

namespace obembed {

namespace {

std::string join(std::span<const int> xs) {
  std::string out;
  for (auto x : xs) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  bool done() {
    skip();
    return pos_ >= s_.size();
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::int64_t integer() {
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::int64_t v = 0;
    const char* first = s_.data() + start;
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, s_.data() + pos_, v);
    if (ec != std::errc() || ptr != s_.data() + pos_ || start == pos_) fail("expected integer");
    return v;
  }
  std::vector<int> list() {
    std::vector<int> out;
    do {
      out.push_back(static_cast<int>(integer()));
    } while (accept(','));
    return out;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("word text, offset " + std::to_string(pos_) + ": " + what);
  }

 private:
  void skip() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_letter(const Letter& letter) {
  std::string out;
  if (const auto* t = std::get_if<DehnTwist>(&letter.generator)) {
    out = "T{" + join(t->curve.members()) + "}";
  } else {
    const auto& p = std::get<PlanarPush>(letter.generator);
    out = "P{" + std::to_string(p.boundary) + "|" + join(p.around.members()) + "}";
  }
  if (letter.exponent != 1) out += "^" + std::to_string(letter.exponent);
  return out;
}

std::string format_word(const TwistWord& word) {
  std::string out;
  for (const auto& l : word.letters()) {
    if (!out.empty()) out += ' ';
    out += format_letter(l);
  }
  return out;
}

TwistWord parse_word(std::string_view text, const PlanarPage& page) {
  Scanner sc(text);
  std::vector<Letter> letters;
  while (!sc.done()) {
    Letter letter{DehnTwist{CurveClass{1}}, 1};
    try {
      if (sc.accept('T')) {
        sc.expect('{');
        auto members = sc.list();
        sc.expect('}');
        letter.generator = DehnTwist{CurveClass(std::move(members))};
      } else if (sc.accept('P')) {
        sc.expect('{');
        int b = static_cast<int>(sc.integer());
        sc.expect('|');
        auto members = sc.list();
        sc.expect('}');
        letter.generator = PlanarPush{b, CurveClass(std::move(members))};
      } else {
        sc.fail("expected 'T' or 'P'");
      }
    } catch (const InvalidWord& e) {
      sc.fail(e.what());
    }
    if (sc.accept('^')) letter.exponent = sc.integer();
    letters.push_back(std::move(letter));
  }
  return TwistWord(page, std::move(letters));
}

}  // namespace obembed
