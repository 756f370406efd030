#include "distkit/quadratic.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace distkit {

namespace {

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

bool is_perfect_square(const Integer& n, Integer* root) {
  if (n < 0) return false;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  if (root != nullptr) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
  return true;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  Integer num;
  Integer den;
  if (!is_perfect_square(r.get_num(), &num) || !is_perfect_square(r.get_den(), &den)) {
    return std::nullopt;
  }
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty number");
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Rational num = parse_rational(s.substr(0, slash));
    Rational den = parse_rational(s.substr(slash + 1));
    if (den == 0) throw ParseError("division by zero in '" + s + "'");
    Rational out = num / den;
    out.canonicalize();
    return out;
  }
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') {
    negative = s[pos] == '-';
    ++pos;
  }
  std::string digits;
  long exponent = 0;
  bool seen_digit = false;
  bool seen_dot = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) --exponent;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw ParseError("malformed number '" + s + "'");
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(s.substr(pos), &used);
    } catch (const std::exception&) {
      throw ParseError("malformed exponent in '" + s + "'");
    }
    pos += used;
    exponent += e;
  }
  if (pos != s.size()) throw ParseError("trailing characters in number '" + s + "'");
  Integer mant(digits, 10);
  Rational out;
  if (exponent >= 0) {
    out = Rational(mant * pow10(static_cast<unsigned long>(exponent)));
  } else {
    out = Rational(mant, pow10(static_cast<unsigned long>(-exponent)));
  }
  out.canonicalize();
  if (negative) out = -out;
  return out;
}

std::string format_rational(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str();
}

std::pair<Integer, Integer> squarefree_split(const Integer& n) {
  if (n <= 0) throw std::invalid_argument("squarefree_split needs a positive integer");
  Integer rest = n;
  Integer square = 1;
  Integer squarefree = 1;
  for (Integer p = 2; p * p <= rest; ++p) {
    if (p > Integer(10000000)) throw std::overflow_error("radicand too large to factor");
    while (rest % p == 0) {
      rest /= p;
      if (rest % p == 0) {
        rest /= p;
        square *= p;
      } else {
        squarefree *= p;
      }
    }
  }
  squarefree *= rest;
  return {square, squarefree};
}

Quad::Quad(Rational rational, Rational irrational, Integer radicand)
    : a_(std::move(rational)), b_(std::move(irrational)), m_(std::move(radicand)) {
  a_.canonicalize();
  b_.canonicalize();
  if (b_ != 0) {
    if (m_ <= 1) throw std::invalid_argument("radicand must be >= 2");
    auto [s, m] = squarefree_split(m_);
    b_ *= Rational(s);
    m_ = m;
    if (m_ == 1) {
      a_ += b_;
      b_ = 0;
    }
  }
  normalise();
}

Quad Quad::sqrt_of(const Rational& r) {
  if (r < 0) throw std::domain_error("sqrt of negative rational");
  if (auto exact = rational_sqrt(r)) return Quad(*exact);
  // sqrt(p/q) = sqrt(p*q)/q
  Integer pq = r.get_num() * r.get_den();
  return Quad(Rational(0), Rational(1, r.get_den()), pq);
}

void Quad::normalise() {
  if (b_ == 0) m_ = 0;
}

int Quad::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 against m*b^2
  Rational lhs = a_ * a_;
  Rational rhs = Rational(m_) * b_ * b_;
  if (lhs == rhs) return 0;  // unreachable for squarefree m
  return lhs > rhs ? sa : sb;
}

double Quad::to_double() const {
  if (b_ == 0) return a_.get_d();
  return a_.get_d() + b_.get_d() * std::sqrt(m_.get_d());
}

Quad Quad::operator-() const {
  Quad out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

Quad& Quad::operator+=(const Quad& rhs) {
  if (b_ != 0 && rhs.b_ != 0 && m_ != rhs.m_) {
    throw FieldMismatch("cannot mix sqrt(" + m_.get_str() + ") and sqrt(" + rhs.m_.get_str() + ")");
  }
  if (b_ == 0) m_ = rhs.m_;
  a_ += rhs.a_;
  b_ += rhs.b_;
  normalise();
  return *this;
}

Quad& Quad::operator-=(const Quad& rhs) { return *this += -rhs; }

Quad& Quad::operator*=(const Quad& rhs) {
  if (b_ != 0 && rhs.b_ != 0 && m_ != rhs.m_) {
    throw FieldMismatch("cannot mix sqrt(" + m_.get_str() + ") and sqrt(" + rhs.m_.get_str() + ")");
  }
  Integer m = b_ != 0 ? m_ : rhs.m_;
  Rational a = a_ * rhs.a_ + b_ * rhs.b_ * Rational(m);
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = a;
  b_ = b;
  m_ = m;
  normalise();
  return *this;
}

Quad Quad::conjugate() const {
  Quad out = *this;
  out.b_ = -out.b_;
  return out;
}

Rational Quad::norm() const { return a_ * a_ - Rational(m_) * b_ * b_; }

Quad& Quad::operator/=(const Quad& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  Rational n = rhs.norm();
  *this *= rhs.conjugate();
  a_ /= n;
  b_ /= n;
  normalise();
  return *this;
}

Integer Quad::floor() const {
  Integer guess(std::floor(to_double()));
  // correct a possibly off-by-one double estimate exactly
  while (Quad(Rational(guess)) > *this) guess -= 1;
  while (Quad(Rational(guess + 1)) <= *this) guess += 1;
  return guess;
}

std::optional<Quad> Quad::try_sqrt() const {
  if (sign() < 0) return std::nullopt;
  if (b_ == 0) return sqrt_of(a_);
  // (x + y sqrt(m))^2 = a + b sqrt(m): x^2 + m y^2 = a, 2xy = b
  auto disc = rational_sqrt(norm());
  if (!disc) return std::nullopt;
  const Rational cands[] = {Rational((a_ + *disc) / 2), Rational((a_ - *disc) / 2)};
  for (const Rational& x2 : cands) {
    auto x = rational_sqrt(x2);
    if (!x || *x == 0) continue;
    Rational y = b_ / (2 * *x);
    Quad root(*x, y, m_);
    if (root.sign() < 0) root = -root;
    if (root * root == *this) return root;
  }
  return std::nullopt;
}

std::string Quad::str(bool compact) const {
  const std::string plus = compact ? "+" : " + ";
  const std::string minus = compact ? "-" : " - ";
  std::string out;
  if (b_ == 0) return format_rational(a_);
  auto surd = [&](const Rational& coef) {
    std::string root = "sqrt(" + m_.get_str() + ")";
    if (coef == 1) return root;
    return format_rational(coef) + "*" + root;
  };
  if (a_ != 0) {
    out = format_rational(a_);
    out += b_ > 0 ? plus : minus;
    out += surd(abs(b_));
  } else {
    out = b_ > 0 ? surd(b_) : "-" + surd(abs(b_));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Quad& q) { return os << q.str(); }

namespace {

// expr := term (('+'|'-') term)*
// term := unary (('*'|'/') unary)*
// unary := ('+'|'-') unary | primary
// primary := number | 'sqrt' '(' expr ')' | '(' expr ')'
class QuadParser {
 public:
  explicit QuadParser(std::string_view text) : text_(text) {}

  Quad parse() {
    Quad v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Quad expr() {
    Quad v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Quad term() {
    Quad v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        Quad d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Quad unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  Quad primary() {
    skip_ws();
    if (accept('(')) {
      Quad v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      if (!accept('(')) fail("expected '(' after sqrt");
      Quad arg = expr();
      if (!accept(')')) fail("expected ')'");
      if (!arg.is_rational()) {
        auto r = arg.try_sqrt();
        if (!r) fail("nested radical is not in a quadratic field");
        return *r;
      }
      if (arg.rational_part() < 0) fail("sqrt of negative number");
      return Quad::sqrt_of(arg.rational_part());
    }
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      bool exp_sign = (c == '+' || c == '-') && pos_ > start &&
                      (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E');
      if (std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '.' || c == 'e' || c == 'E' ||
          exp_sign) {
        ++pos_;
      } else {
        break;
      }
    }
    if (start == pos_) fail("expected a number");
    return Quad(parse_rational(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Quad parse_quad(std::string_view text) { return QuadParser(text).parse(); }

}  // namespace distkit
