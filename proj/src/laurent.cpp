#include "knotconc/laurent.hpp"

#include <cctype>
#include <sstream>

namespace knotconc {

bool is_perfect_square(const Integer& a, Integer* root) {
  if (a < 0) return false;
  Integer r = boost::multiprecision::sqrt(a);
  if (r * r != a) return false;
  if (root) *root = r;
  return true;
}

Integer content(const IntLaurent& a) {
  Integer g = 0;
  for (const auto& c : a.coefficients()) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

IntLaurent associate_normal_form(const IntLaurent& a) {
  if (a.is_zero()) return a;
  IntLaurent r = a.shifted(-a.low());
  return r.leading() < 0 ? -r : r;
}

IntLaurent normal_form(const IntLaurent& a) {
  if (a.is_zero()) return a;
  const Integer g = content(a);
  std::vector<Integer> out(a.coefficients().begin(), a.coefficients().end());
  const bool negate = out.back() < 0;
  for (auto& c : out) {
    c /= g;
    if (negate) c = -c;
  }
  return IntLaurent::from_coefficients(0, std::move(out));
}

bool doteq(const IntLaurent& a, const IntLaurent& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return associate_normal_form(a) == associate_normal_form(b);
}

IntLaurent exact_div(const IntLaurent& a, const IntLaurent& b) {
  if (b.is_zero()) throw InternalError("exact_div: division by zero polynomial");
  if (a.is_zero()) return a;
  // Long division from the top; all remainders must be cleared exactly.
  std::vector<Integer> rem(a.coefficients().begin(), a.coefficients().end());
  const auto bc = b.coefficients();
  const std::size_t nb = bc.size();
  if (rem.size() < nb) throw InternalError("exact_div: divisor does not divide");
  std::vector<Integer> q(rem.size() - nb + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    const Integer& top = rem[i + nb - 1];
    if (top == 0) continue;
    if (top % bc.back() != 0) throw InternalError("exact_div: divisor does not divide");
    q[i] = top / bc.back();
    for (std::size_t j = 0; j < nb; ++j) rem[i + j] -= q[i] * bc[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw InternalError("exact_div: divisor does not divide");
  return IntLaurent::from_coefficients(a.low() - b.low(), std::move(q));
}

IntLaurent centered(const IntLaurent& a) {
  if (a.is_zero()) return a;
  if (a.span() % 2 != 0) throw InternalError("centered: odd exponent span");
  return a.shifted(-(a.low() + a.high()) / 2);
}

std::string format(const IntLaurent& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto c = a.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    const Integer& v = c[i];
    if (v == 0) continue;
    const auto e = a.low() + static_cast<std::int64_t>(i);
    const Integer mag = abs(v);
    if (first)
      os << (v < 0 ? "-" : "");
    else
      os << (v < 0 ? " - " : " + ");
    if (e == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "t^" << e;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntLaurent& a) { return os << format(a); }

namespace {

class LaurentParser {
 public:
  explicit LaurentParser(std::string_view s) : s_(s) {}

  IntLaurent parse() {
    IntLaurent acc;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sgn = 1;
      if (peek() == '+' || peek() == '-') {
        sgn = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      acc += parse_term(sgn);
      first = false;
      skip_ws();
    }
    return acc;
  }

 private:
  IntLaurent parse_term(int sgn) {
    Integer coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_uint();
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        get();
        skip_ws();
        if (peek() != 't') fail("expected 't' after '*'");
      }
    }
    std::int64_t e = 0;
    if (peek() == 't') {
      get();
      e = 1;
      skip_ws();
      if (peek() == '^') {
        get();
        skip_ws();
        int esgn = 1;
        if (peek() == '-' || peek() == '+') esgn = get() == '-' ? -1 : 1;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        e = esgn * static_cast<std::int64_t>(parse_uint());
      }
    } else if (!have_coeff) {
      fail("expected a term");
    }
    return IntLaurent::monomial(sgn < 0 ? Integer(-coeff) : coeff, e);
  }

  Integer parse_uint() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial '" + std::string(s_) + "' at column " + std::to_string(pos_ + 1) +
                     ": " + msg);
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

IntLaurent parse_laurent(std::string_view text) { return LaurentParser(text).parse(); }

}  // namespace knotconc
