#include "thinlie/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace thinlie {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

Word Word::from_string(std::string_view s) {
  std::vector<Letter> letters;
  for (char c : s) {
    if (c == 'x')
      letters.push_back(Letter::X);
    else if (c == 'y')
      letters.push_back(Letter::Y);
    else
      throw PresentationError(std::string("invalid letter '") + c + "' in word");
  }
  return Word(std::move(letters));
}

Word& Word::append(Letter g, int times) {
  for (int i = 0; i < times; ++i) letters_.push_back(g);
  return *this;
}

Word& Word::append(const Word& w) {
  letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
  return *this;
}

std::string Word::str() const {
  std::string s;
  for (Letter g : letters_) s += to_char(g);
  return s;
}

std::string Word::bracket_str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < letters_.size();) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    if (i > 0) s += ',';
    s += to_char(letters_[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s + "]";
}

Relator::Relator(const PrimeField& field,
                 const std::vector<std::pair<std::int64_t, Word>>& terms) {
  for (const auto& [c, w] : terms) {
    if (w.empty()) throw PresentationError("relator contains an empty word");
    if (degree_ == 0) degree_ = w.degree();
    if (w.degree() != degree_)
      throw PresentationError("inhomogeneous relator: words of degree " +
                              std::to_string(degree_) + " and " + std::to_string(w.degree()));
    const Residue r = field.reduce(c);
    auto it = std::find_if(terms_.begin(), terms_.end(),
                           [&](const Term& t) { return t.word == w; });
    if (it == terms_.end())
      terms_.push_back({r, w});
    else
      it->coeff = field.add(it->coeff, r);
  }
  std::erase_if(terms_, [](const Term& t) { return t.coeff == 0; });
  if (terms_.empty()) throw PresentationError("relator is identically zero");
}

Relator::Relator(const PrimeField& field, Word word) : Relator(field, {{1, std::move(word)}}) {}

std::string Relator::str(const PrimeField& field) const {
  std::string s;
  const Residue minus_one = field.modulus() - 1;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& [c, w] = terms_[i];
    bool negative = c == minus_one;
    Residue shown = negative ? 1 : c;
    if (i == 0)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    if (shown != 1) s += std::to_string(shown) + "*";
    s += w.bracket_str();
  }
  return s;
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Theorem41: return "theorem41";
    case Provenance::Minus1Family: return "minus1";
    case Provenance::Custom: return "custom";
  }
  return "custom";
}

std::optional<std::uint64_t> Presentation::q() const {
  if (!params.n) return std::nullopt;
  return int_pow(field.modulus(), *params.n);
}

int Presentation::max_relator_degree() const {
  int m = 0;
  for (const auto& r : relators) m = std::max(m, r.degree());
  return m;
}

Word v_word(int k, std::uint64_t q) {
  if (k < 1) throw PresentationError("v_k requires k >= 1");
  if (q < 3) throw PresentationError("v_k requires q >= 3");
  const int qi = static_cast<int>(q);
  Word w({Letter::Y});
  if (k == 1) return w.append(Letter::X, qi - 2);
  w.append(Letter::X, 2 * qi - 3);
  for (int i = 2; i < k; ++i) w.append(Letter::X).append(Letter::Y).append(Letter::X, qi - 3);
  return w;
}

namespace {

void check_family(unsigned p, unsigned n) {
  PrimeField f(p);  // throws for invalid p
  (void)f;
  if (n < 1) throw PresentationError("n must be at least 1");
}

Word yxy(int i) { return Word({Letter::Y}).append(Letter::X, i).append(Letter::Y); }

Relator vk_xx(const PrimeField& f, int k, std::uint64_t q) {
  return Relator(f, v_word(k, q).append(Letter::X, 2));
}

/// [v_k y x] - lambda [v_k x x]
Relator vk_type(const PrimeField& f, int k, std::uint64_t q, std::int64_t lambda) {
  Word yx = v_word(k, q).append(Letter::Y).append(Letter::X);
  Word xx = v_word(k, q).append(Letter::X, 2);
  return Relator(f, {{1, yx}, {-lambda, xx}});
}

}  // namespace

std::vector<Relator> chain_relators(const PrimeField& field, unsigned n) {
  const std::uint64_t p = field.modulus();
  const auto q = static_cast<int>(int_pow(p, n));
  std::vector<int> exceptional;
  for (unsigned t = 1; t <= n; ++t)
    exceptional.push_back(2 * q - static_cast<int>(int_pow(p, t)) - 2);
  std::vector<Relator> out;
  for (int i = 1; i < 2 * q - 3; ++i)
    if (std::find(exceptional.begin(), exceptional.end(), i) == exceptional.end())
      out.emplace_back(field, yxy(i));
  for (int e : exceptional) out.emplace_back(field, yxy(e).append(Letter::X));
  if (q == 3 && p == 3) out.emplace_back(field, Word::from_string("yxyy"));
  return out;
}

Presentation build_theorem41(unsigned p, unsigned n, unsigned s) {
  check_family(p, n);
  if (s < 1) throw PresentationError("s must be at least 1");
  PrimeField f(p);
  const std::uint64_t q = int_pow(p, n);
  const auto ps = static_cast<int>(int_pow(p, s));
  Presentation pres{f, {n, s, std::nullopt, std::nullopt}, chain_relators(f, n),
                    Provenance::Theorem41};
  pres.relators.emplace_back(f, v_word(2, q).append(Letter::X, 3));
  pres.relators.emplace_back(f, v_word(2, q).append(Letter::X, 2).append(Letter::Y));
  for (int k = 3; k <= ps; ++k)
    if (k % 2 == 0) pres.relators.push_back(vk_xx(f, k, q));
  pres.relators.push_back(vk_type(f, ps + 1, q, 1));
  return pres;
}

Presentation build_minus1_untyped(unsigned p, unsigned n, unsigned a, bool include_odd_k) {
  check_family(p, n);
  if (a < 3) throw PresentationError("a must be at least 3");
  PrimeField f(p);
  const std::uint64_t q = int_pow(p, n);
  Presentation pres{f, {n, std::nullopt, a, std::nullopt}, chain_relators(f, n),
                    Provenance::Minus1Family};
  for (int k = 2; k < static_cast<int>(a); ++k)
    if (k % 2 == 0 || include_odd_k) pres.relators.push_back(vk_xx(f, k, q));
  return pres;
}

Presentation build_minus1(unsigned p, unsigned n, unsigned a, std::int64_t lambda,
                          bool include_odd_k) {
  Presentation pres = build_minus1_untyped(p, n, a, include_odd_k);
  if (pres.field.reduce(lambda) == 0) throw PresentationError("lambda must be nonzero mod p");
  pres.params.lambda = lambda;
  pres.relators.push_back(vk_type(pres.field, static_cast<int>(a), *pres.q(), lambda));
  return pres;
}

Presentation swap_generators(const Presentation& pres) {
  Presentation out = pres;
  out.relators.clear();
  for (const auto& r : pres.relators) {
    std::vector<std::pair<std::int64_t, Word>> terms;
    for (const auto& t : r.terms()) {
      std::vector<Letter> letters;
      for (Letter g : t.word.letters()) letters.push_back(g == Letter::X ? Letter::Y : Letter::X);
      terms.emplace_back(t.coeff, Word(std::move(letters)));
    }
    out.relators.emplace_back(pres.field, terms);
  }
  out.provenance = Provenance::Custom;
  return out;
}

// ---------------------------------------------------------------------------
// Relator DSL

ParseError::ParseError(const std::string& msg, int line, int column)
    : PresentationError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                        ": " + msg),
      line_(line),
      column_(column) {}

namespace {

enum class AtomKind { X, Y, V };

struct Atom {
  AtomKind kind;
  std::int64_t count;  // exponent for x/y, k for v(k)
  int column;
};

struct RawTerm {
  std::int64_t coeff;
  std::vector<Atom> atoms;
  int column;
};

class LineParser {
 public:
  LineParser(std::string_view text, int line) : s_(text), line_(line) {}

  std::vector<RawTerm> parse_relator() {
    std::vector<RawTerm> terms;
    skip_ws();
    std::int64_t sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = get() == '-' ? -1 : 1;
      skip_ws();
    }
    terms.push_back(parse_term(sign));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c == '+' || c == '-') {
        get();
        skip_ws();
        terms.push_back(parse_term(c == '-' ? -1 : 1));
      } else if (c == '=') {
        get();
        skip_ws();
        if (peek() != '0') fail("expected '0' after '='");
        get();
        skip_ws();
        if (!at_end()) fail("unexpected text after '= 0'");
        break;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
    }
    return terms;
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, column()); }
  [[noreturn]] void fail_at(const std::string& msg, int col) const {
    throw ParseError(msg, line_, col);
  }

 private:
  RawTerm parse_term(std::int64_t sign) {
    const int col = column();
    std::int64_t coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_int();
      skip_ws();
      if (peek() == '*') {
        get();
        skip_ws();
      }
    }
    if (peek() != '[') fail("expected '['");
    get();
    std::vector<Atom> atoms;
    for (;;) {
      skip_ws();
      if (peek() == ']') {
        get();
        break;
      }
      if (!atoms.empty() && peek() == ',') {
        get();
        skip_ws();
      }
      atoms.push_back(parse_atom());
    }
    std::int64_t len = 0;
    for (const auto& a : atoms)
      if (a.kind != AtomKind::V) len += a.count;
      else len += 1;
    if (len == 0) fail_at("empty word", col);
    return {sign * coeff, std::move(atoms), col};
  }

  Atom parse_atom() {
    const int col = column();
    const char c = peek();
    if (c == 'x' || c == 'y') {
      get();
      std::int64_t count = 1;
      skip_ws();
      if (peek() == '^') {
        get();
        skip_ws();
        count = parse_int();
      }
      return {c == 'x' ? AtomKind::X : AtomKind::Y, count, col};
    }
    if (c == 'v') {
      get();
      skip_ws();
      if (peek() != '(') fail("expected '(' after 'v'");
      get();
      skip_ws();
      const std::int64_t k = parse_int();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      get();
      if (k < 1) fail_at("v(k) requires k >= 1", col);
      return {AtomKind::V, k, col};
    }
    if (at_end()) fail("unterminated bracket");
    fail(std::string("unexpected character '") + c + "' in word");
  }

  std::int64_t parse_int() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      if (v > 1'000'000'000) fail("integer too large");
    }
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }
  int column() const { return static_cast<int>(pos_) + 1; }

  std::string_view s_;
  std::size_t pos_ = 0;
  int line_;
};

bool is_header_line(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  std::size_t j = i;
  while (j < line.size() && std::isalpha(static_cast<unsigned char>(line[j]))) ++j;
  if (j == i) return false;
  while (j < line.size() && std::isspace(static_cast<unsigned char>(line[j]))) ++j;
  return j < line.size() && line[j] == '=';
}

struct Header {
  std::optional<std::int64_t> p;
  PresentationParams params;
};

void parse_header(std::string_view line, int lineno, Header& h) {
  std::size_t i = 0;
  auto col = [&] { return static_cast<int>(i) + 1; };
  for (;;) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const int key_col = col();
    std::size_t j = i;
    while (j < line.size() && std::isalpha(static_cast<unsigned char>(line[j]))) ++j;
    const std::string key(line.substr(i, j - i));
    if (key.empty()) throw ParseError("expected a parameter name", lineno, key_col);
    i = j;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size() || line[i] != '=')
      throw ParseError("expected '=' after '" + key + "'", lineno, col());
    ++i;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    bool neg = false;
    if (i < line.size() && line[i] == '-') {
      neg = true;
      ++i;
    }
    if (i >= line.size() || !std::isdigit(static_cast<unsigned char>(line[i])))
      throw ParseError("expected an integer value for '" + key + "'", lineno, col());
    std::int64_t v = 0;
    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
      v = v * 10 + (line[i++] - '0');
      if (v > 1'000'000'000) throw ParseError("integer too large", lineno, col());
    }
    if (neg) v = -v;
    auto non_negative = [&](std::int64_t x) {
      if (x < 0) throw ParseError("'" + key + "' must be non-negative", lineno, key_col);
      return static_cast<unsigned>(x);
    };
    if (key == "p")
      h.p = v;
    else if (key == "n")
      h.params.n = non_negative(v);
    else if (key == "s")
      h.params.s = non_negative(v);
    else if (key == "a")
      h.params.a = non_negative(v);
    else if (key == "lambda")
      h.params.lambda = v;
    else
      throw ParseError("unknown parameter '" + key + "'", lineno, key_col);
  }
}

}  // namespace

Presentation parse_relators(std::string_view text) {
  Header header;
  struct PendingRelator {
    std::vector<RawTerm> terms;
    int line;
  };
  std::vector<PendingRelator> pending;

  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++lineno;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    if (is_header_line(line)) {
      if (!pending.empty())
        throw ParseError("header parameters must precede relators", lineno, 1);
      parse_header(line, lineno, header);
    } else {
      LineParser lp(line, lineno);
      pending.push_back({lp.parse_relator(), lineno});
    }
    if (end == text.size()) break;
  }

  if (!header.p) throw ParseError("missing header 'p=<prime>'", 1, 1);
  if (*header.p < 3 || *header.p >= PrimeField::kMaxModulus)
    throw ParseError("p must be an odd prime below 2^16", 1, 1);
  std::optional<PrimeField> field;
  try {
    field.emplace(static_cast<std::uint32_t>(*header.p));
  } catch (const FieldError& e) {
    throw ParseError(e.what(), 1, 1);
  }
  Presentation pres{*field, header.params, {}, Provenance::Custom};
  std::optional<std::uint64_t> q;
  if (header.params.n) q = int_pow(*header.p, *header.params.n);

  for (const auto& [terms, line] : pending) {
    std::vector<std::pair<std::int64_t, Word>> words;
    for (const auto& t : terms) {
      Word w;
      for (std::size_t i = 0; i < t.atoms.size(); ++i) {
        const Atom& a = t.atoms[i];
        if (a.kind == AtomKind::V) {
          if (i != 0) throw ParseError("v(k) may only start a word", line, a.column);
          if (!q) throw ParseError("v(k) requires 'n=' in the header", line, a.column);
          if (*q < 3) throw ParseError("v(k) requires q >= 3", line, a.column);
          w.append(v_word(static_cast<int>(a.count), *q));
        } else {
          w.append(a.kind == AtomKind::X ? Letter::X : Letter::Y, static_cast<int>(a.count));
        }
      }
      if (w.empty()) throw ParseError("empty word", line, t.column);
      words.emplace_back(t.coeff, std::move(w));
    }
    try {
      pres.relators.emplace_back(*field, words);
    } catch (const PresentationError& e) {
      throw ParseError(e.what(), line, 1);
    }
  }
  return pres;
}

std::string print_relators(const Presentation& pres) {
  std::ostringstream out;
  out << "p=" << pres.field.modulus();
  if (pres.params.n) out << " n=" << *pres.params.n;
  if (pres.params.s) out << " s=" << *pres.params.s;
  if (pres.params.a) out << " a=" << *pres.params.a;
  if (pres.params.lambda) out << " lambda=" << *pres.params.lambda;
  out << '\n';
  for (const auto& r : pres.relators) out << r.str(pres.field) << " = 0\n";
  return out.str();
}

}  // namespace thinlie
