#pragma once

/**
 * @file ring.hpp
 * @brief Exact arithmetic in a runtime-chosen commutative ring.
 *
 * Three ring kinds are supported: the integers Z, the residues Z/qZ (q >= 2)
 * and multivariate polynomials Z[x_1, ..., x_k]. Every element is kept in a
 * canonical form, so equality of elements is equality of representations:
 *
 *  - integers: an arbitrary-precision integer;
 *  - residues: an integer in [0, q);
 *  - polynomials: a list of (monomial, coefficient) terms, sorted in
 *    decreasing lexicographic order of the exponent vectors (taken in the
 *    declared variable order), with no zero coefficients.
 *
 * Text form: "-12", "3 mod 7", "3*x^2*y - x + 1".
 */

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "selflink/error.hpp"

namespace selflink {

using BigInt = boost::multiprecision::cpp_int;

enum class RingKind { Integers, Modular, Polynomial };

class RingElement;

namespace detail {

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

inline bool is_decimal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

inline BigInt parse_bigint(std::string_view s) {
  if (!is_decimal(s)) throw InputError("not a decimal integer: '" + std::string(s) + "'");
  return BigInt(std::string(s));
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Floor modulus: result in [0, q).
inline BigInt reduce_mod(const BigInt& value, const BigInt& q) {
  BigInt r = value % q;
  if (r < 0) r += q;
  return r;
}

}  // namespace detail

/// A monomial as an exponent vector over the ring's declared variables.
using Monomial = std::vector<std::uint32_t>;

struct Term {
  Monomial exponents;
  BigInt coefficient;

  bool operator==(const Term&) const = default;
};

/**
 * Handle to a commutative ring. Cheap to copy; two handles compare equal when
 * they describe the same ring (same kind, modulus, and variable list).
 */
class Ring {
 public:
  static Ring integers() { return Ring(RingKind::Integers, BigInt(0), {}); }

  static Ring modular(const BigInt& q) {
    if (q < 2) throw PreconditionError("modulus must be at least 2, got " + q.str());
    return Ring(RingKind::Modular, q, {});
  }

  static Ring polynomials(std::vector<std::string> variables) {
    if (variables.empty()) throw PreconditionError("polynomial ring needs at least one variable");
    for (std::size_t i = 0; i < variables.size(); ++i) {
      if (!detail::is_identifier(variables[i]))
        throw PreconditionError("invalid variable name '" + variables[i] + "'");
      for (std::size_t j = 0; j < i; ++j) {
        if (variables[i] == variables[j])
          throw PreconditionError("duplicate variable name '" + variables[i] + "'");
      }
    }
    return Ring(RingKind::Polynomial, BigInt(0), std::move(variables));
  }

  /// Parses the flag grammar `integers | mod:<q> | poly:<v1,v2,...>`.
  static Ring from_spec(std::string_view spec) {
    spec = detail::trim(spec);
    if (spec == "integers") return integers();
    if (spec.starts_with("mod:")) {
      auto q = spec.substr(4);
      if (!detail::is_decimal(q)) throw InputError("bad modulus in ring spec '" + std::string(spec) + "'");
      return modular(BigInt(std::string(q)));
    }
    if (spec.starts_with("poly:")) {
      std::vector<std::string> vars;
      std::string_view rest = spec.substr(5);
      while (true) {
        auto comma = rest.find(',');
        vars.emplace_back(detail::trim(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
      return polynomials(std::move(vars));
    }
    throw InputError("unknown ring spec '" + std::string(spec) + "'");
  }

  /// Inverse of from_spec.
  std::string spec() const {
    switch (kind()) {
      case RingKind::Integers: return "integers";
      case RingKind::Modular: return "mod:" + modulus().str();
      case RingKind::Polynomial: {
        std::string out = "poly:";
        for (std::size_t i = 0; i < variables().size(); ++i) {
          if (i) out += ',';
          out += variables()[i];
        }
        return out;
      }
    }
    return {};
  }

  RingKind kind() const { return data_->kind; }
  const BigInt& modulus() const { return data_->modulus; }
  const std::vector<std::string>& variables() const { return data_->variables; }
  std::size_t variable_count() const { return data_->variables.size(); }

  bool operator==(const Ring& other) const {
    if (data_ == other.data_) return true;
    return data_->kind == other.data_->kind && data_->modulus == other.data_->modulus &&
           data_->variables == other.data_->variables;
  }

  // Defined after RingElement.
  RingElement zero() const;
  RingElement one() const;
  RingElement from_integer(const BigInt& value) const;
  RingElement variable(std::string_view name) const;
  RingElement parse(std::string_view text) const;

 private:
  struct Data {
    RingKind kind;
    BigInt modulus;
    std::vector<std::string> variables;
  };

  Ring(RingKind kind, BigInt modulus, std::vector<std::string> variables)
      : data_(std::make_shared<const Data>(Data{kind, std::move(modulus), std::move(variables)})) {}

  std::shared_ptr<const Data> data_;
};

/**
 * An immutable element of a Ring in canonical form. Arithmetic between
 * elements of different rings throws PreconditionError.
 */
class RingElement {
 public:
  const Ring& ring() const { return ring_; }

  bool is_zero() const {
    return ring_.kind() == RingKind::Polynomial ? terms_.empty() : scalar_ == 0;
  }

  /// Integer value (Integers) or residue (Modular).
  const BigInt& scalar() const {
    if (ring_.kind() == RingKind::Polynomial) throw PreconditionError("polynomial has no scalar value");
    return scalar_;
  }

  /// Sorted terms (Polynomial only).
  const std::vector<Term>& terms() const {
    if (ring_.kind() != RingKind::Polynomial) throw PreconditionError("scalar has no polynomial terms");
    return terms_;
  }

  RingElement operator-() const {
    RingElement out = *this;
    switch (ring_.kind()) {
      case RingKind::Integers: out.scalar_ = -scalar_; break;
      case RingKind::Modular: out.scalar_ = detail::reduce_mod(-scalar_, ring_.modulus()); break;
      case RingKind::Polynomial:
        for (auto& t : out.terms_) t.coefficient = -t.coefficient;
        break;
    }
    return out;
  }

  friend RingElement operator+(const RingElement& x, const RingElement& y) {
    check_same_ring(x, y);
    switch (x.ring_.kind()) {
      case RingKind::Integers: return RingElement(x.ring_, x.scalar_ + y.scalar_);
      case RingKind::Modular:
        return RingElement(x.ring_, detail::reduce_mod(x.scalar_ + y.scalar_, x.ring_.modulus()));
      case RingKind::Polynomial: return RingElement(x.ring_, add_terms(x.terms_, y.terms_));
    }
    return x;
  }

  friend RingElement operator-(const RingElement& x, const RingElement& y) { return x + (-y); }

  friend RingElement operator*(const RingElement& x, const RingElement& y) {
    check_same_ring(x, y);
    switch (x.ring_.kind()) {
      case RingKind::Integers: return RingElement(x.ring_, BigInt(x.scalar_ * y.scalar_));
      case RingKind::Modular:
        return RingElement(x.ring_, detail::reduce_mod(x.scalar_ * y.scalar_, x.ring_.modulus()));
      case RingKind::Polynomial: return RingElement(x.ring_, multiply_terms(x.terms_, y.terms_));
    }
    return x;
  }

  RingElement& operator+=(const RingElement& y) { return *this = *this + y; }
  RingElement& operator-=(const RingElement& y) { return *this = *this - y; }
  RingElement& operator*=(const RingElement& y) { return *this = *this * y; }

  /// Elements of different rings are never equal.
  friend bool operator==(const RingElement& x, const RingElement& y) {
    return x.ring_ == y.ring_ && x.scalar_ == y.scalar_ && x.terms_ == y.terms_;
  }

  /**
   * Evaluates at an integer point (one value per declared variable) and
   * returns an integer. Integers evaluate to themselves; residues to their
   * representative in [0, q).
   */
  BigInt evaluate(std::span<const BigInt> point) const {
    if (ring_.kind() != RingKind::Polynomial) return scalar_;
    if (point.size() != ring_.variable_count())
      throw PreconditionError("evaluation point has wrong dimension");
    BigInt sum = 0;
    for (const auto& t : terms_) {
      BigInt prod = t.coefficient;
      for (std::size_t v = 0; v < point.size(); ++v) {
        for (std::uint32_t k = 0; k < t.exponents[v]; ++k) prod *= point[v];
      }
      sum += prod;
    }
    return sum;
  }

  std::string to_string() const {
    switch (ring_.kind()) {
      case RingKind::Integers: return scalar_.str();
      case RingKind::Modular: return scalar_.str() + " mod " + ring_.modulus().str();
      case RingKind::Polynomial: return format_terms();
    }
    return {};
  }

 private:
  friend class Ring;

  RingElement(Ring ring, BigInt scalar) : ring_(std::move(ring)), scalar_(std::move(scalar)) {}
  RingElement(Ring ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}

  static void check_same_ring(const RingElement& x, const RingElement& y) {
    if (!(x.ring_ == y.ring_))
      throw PreconditionError("ring mismatch: " + x.ring_.spec() + " vs " + y.ring_.spec());
  }

  // Descending lexicographic order on exponent vectors.
  static bool before(const Monomial& a, const Monomial& b) { return b < a; }

  static std::vector<Term> add_terms(const std::vector<Term>& a, const std::vector<Term>& b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && before(a[i].exponents, b[j].exponents))) {
        out.push_back(a[i++]);
      } else if (i == a.size() || before(b[j].exponents, a[i].exponents)) {
        out.push_back(b[j++]);
      } else {
        BigInt c = a[i].coefficient + b[j].coefficient;
        if (c != 0) out.push_back(Term{a[i].exponents, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  static std::vector<Term> normalize(std::vector<Term> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const Term& x, const Term& y) { return before(x.exponents, y.exponents); });
    std::vector<Term> out;
    out.reserve(raw.size());
    for (auto& t : raw) {
      if (!out.empty() && out.back().exponents == t.exponents) {
        out.back().coefficient += t.coefficient;
      } else {
        if (!out.empty() && out.back().coefficient == 0) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coefficient == 0) out.pop_back();
    return out;
  }

  static std::vector<Term> multiply_terms(const std::vector<Term>& a, const std::vector<Term>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Term> raw;
    raw.reserve(a.size() * b.size());
    for (const auto& x : a) {
      for (const auto& y : b) {
        Monomial m(x.exponents.size());
        for (std::size_t v = 0; v < m.size(); ++v) m[v] = x.exponents[v] + y.exponents[v];
        raw.push_back(Term{std::move(m), x.coefficient * y.coefficient});
      }
    }
    return normalize(std::move(raw));
  }

  std::string format_terms() const {
    if (terms_.empty()) return "0";
    std::string out;
    const auto& names = ring_.variables();
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      const Term& t = terms_[k];
      bool negative = t.coefficient < 0;
      BigInt magnitude = negative ? BigInt(-t.coefficient) : t.coefficient;
      if (k == 0) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      std::string factors;
      for (std::size_t v = 0; v < names.size(); ++v) {
        if (t.exponents[v] == 0) continue;
        if (!factors.empty()) factors += '*';
        factors += names[v];
        if (t.exponents[v] > 1) factors += '^' + std::to_string(t.exponents[v]);
      }
      if (factors.empty()) {
        out += magnitude.str();
      } else {
        if (magnitude != 1) out += magnitude.str() + '*';
        out += factors;
      }
    }
    return out;
  }

  std::vector<Term> parse_terms(std::string_view text) const;

  Ring ring_;
  BigInt scalar_;
  std::vector<Term> terms_;
};

inline RingElement Ring::zero() const { return from_integer(0); }
inline RingElement Ring::one() const { return from_integer(1); }

inline RingElement Ring::from_integer(const BigInt& value) const {
  switch (kind()) {
    case RingKind::Integers: return RingElement(*this, value);
    case RingKind::Modular: return RingElement(*this, detail::reduce_mod(value, modulus()));
    case RingKind::Polynomial:
      if (value == 0) return RingElement(*this, std::vector<Term>{});
      return RingElement(*this, std::vector<Term>{Term{Monomial(variable_count(), 0), value}});
  }
  return RingElement(*this, value);
}

inline RingElement Ring::variable(std::string_view name) const {
  if (kind() != RingKind::Polynomial) throw PreconditionError("ring has no variables");
  const auto& vars = variables();
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw PreconditionError("unknown variable '" + std::string(name) + "'");
  Monomial m(vars.size(), 0);
  m[static_cast<std::size_t>(it - vars.begin())] = 1;
  return RingElement(*this, std::vector<Term>{Term{std::move(m), BigInt(1)}});
}

// Grammar (whitespace-insensitive):
//   sum    := ['-'] product (('+' | '-') product)*
//   product:= factor ('*' factor)*
//   factor := digits | name ['^' digits]
inline std::vector<Term> RingElement::parse_terms(std::string_view text) const {
  const auto& names = ring_.variables();
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> InputError {
    return InputError("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_digits = [&]() -> std::string_view {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  };

  std::vector<Term> raw;
  skip_ws();
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  while (true) {
    Term term{Monomial(names.size(), 0), BigInt(negative ? -1 : 1)};
    while (true) {
      skip_ws();
      if (pos >= text.size()) throw fail("unexpected end");
      char c = text[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        term.coefficient *= BigInt(std::string(read_digits()));
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
          ++pos;
        auto name = text.substr(start, pos - start);
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw fail("unknown variable '" + std::string(name) + "'");
        std::uint32_t power = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip_ws();
          auto digits = read_digits();
          if (digits.empty() || digits.size() > 9) throw fail("bad exponent");
          power = static_cast<std::uint32_t>(std::stoul(std::string(digits)));
        }
        term.exponents[static_cast<std::size_t>(it - names.begin())] += power;
      } else {
        throw fail(std::string("unexpected character '") + c + "'");
      }
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    raw.push_back(std::move(term));
    if (pos >= text.size()) break;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      continue;
    }
    throw fail(std::string("unexpected character '") + text[pos] + "'");
  }
  return normalize(std::move(raw));
}

inline RingElement Ring::parse(std::string_view text) const {
  text = detail::trim(text);
  switch (kind()) {
    case RingKind::Integers: return from_integer(detail::parse_bigint(text));
    case RingKind::Modular: {
      auto at = text.find(" mod ");
      if (at == std::string_view::npos) return from_integer(detail::parse_bigint(text));
      BigInt q = detail::parse_bigint(detail::trim(text.substr(at + 5)));
      if (q != modulus())
        throw InputError("element '" + std::string(text) + "' is not in ring " + spec());
      return from_integer(detail::parse_bigint(detail::trim(text.substr(0, at))));
    }
    case RingKind::Polynomial: {
      RingElement out(*this, std::vector<Term>{});
      out.terms_ = out.parse_terms(text);
      return out;
    }
  }
  return zero();
}

}  // namespace selflink
