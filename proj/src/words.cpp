#include "vtwin/words.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace vtwin {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.img_.resize(n);
  std::iota(p.img_.begin(), p.img_.end(), 0);
  return p;
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("transposition index out of range");
  Permutation p = identity(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n, 0);
  Permutation p;
  p.img_.resize(n);
  for (int k = 0; k < n; ++k) {
    int v = images[k];
    if (v < 1 || v > n || seen[v - 1]) throw std::invalid_argument("image list is not a bijection");
    seen[v - 1] = 1;
    p.img_[k] = v - 1;
  }
  return p;
}

Permutation Permutation::compose(const Permutation& q) const {
  if (degree() != q.degree()) throw std::invalid_argument("permutation degree mismatch");
  Permutation r;
  r.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) r.img_[x] = img_[q.img_[x]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) r.img_[img_[x]] = static_cast<int>(x);
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != static_cast<int>(x)) return false;
  return true;
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<char> done(img_.size(), 0);
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (done[x] || img_[x] == static_cast<int>(x)) continue;
    out += '(';
    std::size_t y = x;
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(y + 1);
      done[y] = 1;
      y = img_[y];
      first = false;
    } while (y != x);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

std::string Permutation::images_line() const {
  std::string out = "[";
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (x) out += ' ';
    out += std::to_string(img_[x] + 1);
  }
  out += ']';
  return out;
}

Permutation Permutation::parse_cycles(const std::string& text, int n) {
  Permutation p = identity(n);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  bool any = false;
  while (pos < text.size()) {
    if (text[pos] != '(') throw parse_error("expected '(' in cycle notation", pos + 1);
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw parse_error("expected point in cycle notation", pos + 1);
      int v = std::stoi(text.substr(start, pos - start));
      if (v < 1 || v > n) throw parse_error("cycle point out of range: " + std::to_string(v), start + 1);
      cyc.push_back(v);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
    }
    if (pos == text.size()) throw parse_error("unterminated cycle", text.size());
    ++pos;  // ')'
    skip_ws();
    any = true;
    if (cyc.size() >= 2) {
      // (a,b,c) maps a->b, b->c, c->a; leftmost cycle is applied last,
      // matching theta_of_word
      std::vector<int> images(n);
      std::iota(images.begin(), images.end(), 1);
      for (std::size_t t = 0; t < cyc.size(); ++t) images[cyc[t] - 1] = cyc[(t + 1) % cyc.size()];
      p = p.compose(from_images(images));
    }
  }
  if (!any) throw parse_error("empty permutation text");
  return p;
}

std::vector<int> Permutation::transposition_word() const {
  std::vector<int> one_line(img_.begin(), img_.end());
  std::vector<int> swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < one_line.size(); ++k) {
      if (one_line[k] > one_line[k + 1]) {
        std::swap(one_line[k], one_line[k + 1]);
        swaps.push_back(static_cast<int>(k) + 1);
        changed = true;
      }
    }
  }
  // sorting multiplied p by tau's on the right, so p is their reverse product
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

namespace {

struct Token {
  std::string text;
  std::size_t pos;  // 1-based column
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[k]))) {
      ++k;
      continue;
    }
    std::size_t start = k;
    while (k < text.size() && !std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    out.push_back({text.substr(start, k - start), start + 1});
  }
  return out;
}

int parse_positive_int(const std::string& digits, const Token& tok) {
  if (digits.empty()) throw parse_error("syntax error at position " + std::to_string(tok.pos) + ": token '" + tok.text + "' has no index", tok.pos);
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw parse_error("syntax error at position " + std::to_string(tok.pos) + ": bad index in token '" + tok.text + "'", tok.pos);
  long v = std::stol(digits);
  if (v < 1 || v > 1'000'000) throw parse_error("syntax error at position " + std::to_string(tok.pos) + ": index out of representable range in '" + tok.text + "'", tok.pos);
  return static_cast<int>(v);
}

}  // namespace

VWord parse_vword(const std::string& text, int n) {
  if (n < 2) throw std::invalid_argument("strand count must be at least 2");
  VWord w;
  w.n = n;
  for (const Token& tok : tokenize(text)) {
    if (tok.text == "e") continue;  // explicit identity
    char head = tok.text[0];
    if (head != 's' && head != 'r')
      throw parse_error("syntax error at position " + std::to_string(tok.pos) + ": unexpected token '" + tok.text + "'", tok.pos);
    int idx = parse_positive_int(tok.text.substr(1), tok);
    if (idx > n - 1)
      throw parse_error("index out of range at position " + std::to_string(tok.pos) + ": token '" + tok.text + "' (n = " + std::to_string(n) + ")", tok.pos);
    w.letters.push_back({head == 's' ? LetterKind::S : LetterKind::Rho, idx});
  }
  return w;
}

KWord parse_kword(const std::string& text, int n) {
  if (n < 2) throw std::invalid_argument("strand count must be at least 2");
  KWord w;
  w.n = n;
  for (const Token& tok : tokenize(text)) {
    if (tok.text == "e") continue;
    if (tok.text[0] != 'a')
      throw parse_error("syntax error at position " + std::to_string(tok.pos) + ": unexpected token '" + tok.text + "'", tok.pos);
    std::size_t comma = tok.text.find(',');
    if (comma == std::string::npos)
      throw parse_error("syntax error at position " + std::to_string(tok.pos) + ": token '" + tok.text + "' needs two indices", tok.pos);
    int i = parse_positive_int(tok.text.substr(1, comma - 1), tok);
    int j = parse_positive_int(tok.text.substr(comma + 1), tok);
    if (i > n || j > n)
      throw parse_error("index out of range at position " + std::to_string(tok.pos) + ": token '" + tok.text + "' (n = " + std::to_string(n) + ")", tok.pos);
    if (i == j)
      throw parse_error("syntax error at position " + std::to_string(tok.pos) + ": equal indices in '" + tok.text + "'", tok.pos);
    w.letters.push_back({i, j});
  }
  return w;
}

std::string print_letter(const GeneratorLetter& g) {
  return (g.kind == LetterKind::S ? "s" : "r") + std::to_string(g.index);
}

std::string print_letter(const AlphaLetter& a) {
  return "a" + std::to_string(a.i) + "," + std::to_string(a.j);
}

std::string print_word(const VWord& w) {
  if (w.letters.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (k) out += ' ';
    out += print_letter(w.letters[k]);
  }
  return out;
}

std::string print_word(const KWord& w) {
  if (w.letters.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (k) out += ' ';
    out += print_letter(w.letters[k]);
  }
  return out;
}

Permutation theta_of_word(const VWord& w) {
  Permutation p = Permutation::identity(w.n);
  for (const GeneratorLetter& g : w.letters)
    if (g.kind == LetterKind::Rho) p = p.compose(Permutation::transposition(w.n, g.index));
  return p;
}

Permutation pi_of_word(const VWord& w) {
  Permutation p = Permutation::identity(w.n);
  for (const GeneratorLetter& g : w.letters) p = p.compose(Permutation::transposition(w.n, g.index));
  return p;
}

AlphaLetter alpha_conjugate(const Permutation& p, const AlphaLetter& a) {
  return {p(a.i), p(a.j)};
}

}  // namespace vtwin
