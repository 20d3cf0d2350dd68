#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "thinlie/fp.hpp"

namespace thinlie {

enum class Letter : std::uint8_t { X = 0, Y = 1 };

inline int index_of(Letter g) { return static_cast<int>(g); }
inline char to_char(Letter g) { return g == Letter::X ? 'x' : 'y'; }

/// A left-normed bracket word [a1 a2 ... ak] = [[...[a1,a2],...],ak] in x, y.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  /// Parses a compact string such as "yxxy"; only 'x' and 'y' allowed.
  static Word from_string(std::string_view s);

  int degree() const { return static_cast<int>(letters_.size()); }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  /// Appends letters; returns *this for chaining.
  Word& append(Letter g, int times = 1);
  Word& append(const Word& w);

  /// "yxxy" form.
  std::string str() const;
  /// DSL form, runs compressed: "[y,x^2,y]".
  std::string bracket_str() const;

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

class PresentationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A homogeneous linear combination of words with nonzero F_p coefficients.
class Relator {
 public:
  struct Term {
    Residue coeff;
    Word word;
    friend bool operator==(const Term&, const Term&) = default;
  };

  /// Collects like words (first-occurrence order), drops zero coefficients,
  /// and checks homogeneity. Throws PresentationError on an empty word, an
  /// inhomogeneous combination or an identically zero combination.
  Relator(const PrimeField& field, const std::vector<std::pair<std::int64_t, Word>>& terms);
  /// Single word with coefficient 1.
  Relator(const PrimeField& field, Word word);

  int degree() const { return degree_; }
  const std::vector<Term>& terms() const { return terms_; }
  /// DSL form, e.g. "[y,x^3,y,x] - [y,x^4]".
  std::string str(const PrimeField& field) const;

  friend bool operator==(const Relator&, const Relator&) = default;

 private:
  std::vector<Term> terms_;
  int degree_ = 0;
};

enum class Provenance { Theorem41, Minus1Family, Custom };

std::string to_string(Provenance p);

struct PresentationParams {
  std::optional<unsigned> n;  ///< q = p^n
  std::optional<unsigned> s;
  std::optional<unsigned> a;
  std::optional<std::int64_t> lambda;
  friend bool operator==(const PresentationParams&, const PresentationParams&) = default;
};

struct Presentation {
  PrimeField field;
  PresentationParams params;
  std::vector<Relator> relators;
  Provenance provenance = Provenance::Custom;

  /// q = p^n, when n is known.
  std::optional<std::uint64_t> q() const;
  int max_relator_degree() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// The chain element v_k: v_1 = y x^(q-2), v_2 = y x^(2q-3),
/// v_k = v_(k-1) x y x^(q-3). Degree k(q-1).
Word v_word(int k, std::uint64_t q);

/// Central extension N whose central quotient is the thin algebra with
/// infinite-type diamonds at k(q-1)+1, 2 <= k <= p^s, and a type-one
/// diamond at (p^s+1)(q-1)+1.
Presentation build_theorem41(unsigned p, unsigned n, unsigned s);

/// Chain relators, [v_k x x] = 0 for 2 <= k < a (odd k only when
/// include_odd_k), then [v_a y x] - lambda [v_a x x] = 0.
Presentation build_minus1(unsigned p, unsigned n, unsigned a, std::int64_t lambda,
                          bool include_odd_k = false);

/// As build_minus1 but without the relator fixing the type at v_a.
Presentation build_minus1_untyped(unsigned p, unsigned n, unsigned a,
                                  bool include_odd_k = false);

/// The relators shared by every family: [y x^i y] = 0 for 0 < i < 2q-3,
/// i != 2q-p^t-2; [y x^(2q-p^t-2) y x] = 0; [y x y y] = 0 when q = p = 3.
std::vector<Relator> chain_relators(const PrimeField& field, unsigned n);

/// Exchanges x and y in every relator.
Presentation swap_generators(const Presentation& pres);

class ParseError : public PresentationError {
 public:
  ParseError(const std::string& msg, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses the relator DSL (see docs/relator-dsl.md).
Presentation parse_relators(std::string_view text);
/// Writes a presentation in the relator DSL; parse_relators reads it back.
std::string print_relators(const Presentation& pres);

}  // namespace thinlie
