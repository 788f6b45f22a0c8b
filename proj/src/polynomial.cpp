#include "kptau/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <unordered_map>

#include "kptau/error.hpp"

namespace kptau {

std::string var_name(VarId v) {
  return (v.family == VarFamily::T ? "t" : "y") + std::to_string(v.index);
}

std::optional<VarId> parse_var_name(std::string_view s) {
  if (s.size() < 2) return std::nullopt;
  VarFamily fam;
  if (s[0] == 't')
    fam = VarFamily::T;
  else if (s[0] == 'y')
    fam = VarFamily::Y;
  else
    return std::nullopt;
  int idx = 0;
  auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), idx);
  if (ec != std::errc() || ptr != s.data() + s.size() || idx < 1) return std::nullopt;
  return VarId{fam, idx};
}

Monomial::Monomial(std::vector<VarPow> factors) : factors_(std::move(factors)) {}

Monomial Monomial::variable(VarId v, int exp) {
  Monomial m;
  if (exp != 0) m.factors_.push_back({v, exp});
  return m;
}

long Monomial::weight() const {
  long w = 0;
  for (const auto& f : factors_) w += static_cast<long>(f.var.weight()) * f.exp;
  return w;
}

int Monomial::exponent_of(VarId v) const {
  for (const auto& f : factors_)
    if (f.var == v) return f.exp;
  return 0;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin(), b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->var == b->var) {
      out.factors_.push_back({a->var, a->exp + b->exp});
      ++a, ++b;
    } else if (a->var < b->var) {
      out.factors_.push_back(*a++);
    } else {
      out.factors_.push_back(*b++);
    }
  }
  out.factors_.insert(out.factors_.end(), a, factors_.end());
  out.factors_.insert(out.factors_.end(), b, other.factors_.end());
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin(), b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->var == b->var) {
      out.factors_.push_back({a->var, std::min(a->exp, b->exp)});
      ++a, ++b;
    } else if (a->var < b->var) {
      ++a;
    } else {
      ++b;
    }
  }
  return out;
}

bool Monomial::divisible_by(const Monomial& other) const {
  auto a = factors_.begin();
  for (const auto& f : other.factors_) {
    while (a != factors_.end() && a->var < f.var) ++a;
    if (a == factors_.end() || a->var != f.var || a->exp < f.exp) return false;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& other) const {
  Monomial out;
  auto b = other.factors_.begin();
  for (const auto& f : factors_) {
    if (b != other.factors_.end() && b->var == f.var) {
      int e = f.exp - b->exp;
      if (e < 0) fail(Errc::internal, "monomial division underflow");
      if (e > 0) out.factors_.push_back({f.var, e});
      ++b;
    } else {
      out.factors_.push_back(f);
    }
  }
  if (b != other.factors_.end()) fail(Errc::internal, "monomial division underflow");
  return out;
}

std::strong_ordering Monomial::order(const Monomial& other) const {
  long wa = weight(), wb = other.weight();
  if (wa != wb) return wa <=> wb;
  // Graded lex with t1 > t2 > ... > y1 > y2 ...: on the first variable where the
  // exponents differ, the monomial with the higher exponent is the greater one.
  auto a = factors_.begin(), b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->var != b->var) return (a->var < b->var) ? std::strong_ordering::greater
                                                   : std::strong_ordering::less;
    if (a->exp != b->exp) return a->exp <=> b->exp;
    ++a, ++b;
  }
  if (a != factors_.end()) return std::strong_ordering::greater;
  if (b != other.factors_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

size_t Monomial::hash() const {
  size_t h = 1469598103934665603ull;
  auto mix = [&h](size_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  for (const auto& f : factors_) {
    mix(static_cast<size_t>(f.var.index) * 2 + (f.var.family == VarFamily::Y ? 1 : 0));
    mix(static_cast<size_t>(f.exp));
  }
  return h;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& f : factors_) {
    if (!s.empty()) s += "*";
    s += var_name(f.var);
    if (f.exp != 1) s += "^" + std::to_string(f.exp);
  }
  return s;
}

Polynomial::Polynomial(Rational constant) {
  if (constant != 0) terms_.push_back({Monomial{}, std::move(constant)});
}

Polynomial Polynomial::variable(VarId v, int exp) {
  Polynomial p;
  p.terms_.push_back({Monomial::variable(v, exp), Rational(1)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return b.mono < a.mono; });
  size_t out = 0;
  for (size_t i = 0; i < terms_.size();) {
    Monomial m = std::move(terms_[i].mono);
    Rational c = std::move(terms_[i].coeff);
    ++i;
    while (i < terms_.size() && terms_[i].mono == m) {
      c += terms_[i].coeff;
      ++i;
    }
    if (c != 0) terms_[out++] = {std::move(m), std::move(c)};
  }
  terms_.resize(out);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant());
}

long Polynomial::weighted_degree() const {
  if (terms_.empty()) return -1;
  return terms_.front().mono.weight();  // terms descending; the leading monomial is maximal
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& mm) { return mm < t.mono; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return Rational(0);
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) fail(Errc::internal, "leading term of zero polynomial");
  return terms_.front();
}

const Term& Polynomial::trailing_term() const {
  if (terms_.empty()) fail(Errc::internal, "trailing term of zero polynomial");
  return terms_.back();
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono, -t.coeff});
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out;
  out.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin(), b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    auto ord = a->mono.order(b->mono);
    if (ord == std::strong_ordering::equal) {
      Rational c = a->coeff + b->coeff;
      if (c != 0) out.terms_.push_back({a->mono, std::move(c)});
      ++a, ++b;
    } else if (ord > 0) {
      out.terms_.push_back(*a++);
    } else {
      out.terms_.push_back(*b++);
    }
  }
  out.terms_.insert(out.terms_.end(), a, terms_.end());
  out.terms_.insert(out.terms_.end(), b, other.terms_.end());
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  *this = *this + other;
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  *this = *this - other;
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (terms_.empty() || other.terms_.empty()) return {};
  if (other.terms_.size() == 1 && other.terms_[0].mono.is_constant())
    return *this * other.terms_[0].coeff;
  if (terms_.size() == 1 && terms_[0].mono.is_constant()) return other * terms_[0].coeff;
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(terms_.size() * other.terms_.size() / 2 + 4);
  for (const auto& ta : terms_)
    for (const auto& tb : other.terms_) {
      acc[ta.mono.times(tb.mono)] += ta.coeff * tb.coeff;
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, std::move(c)});
  return from_terms(std::move(out));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return {};
  Polynomial out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono, t.coeff * c});
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

Polynomial Polynomial::diff(int j, VarFamily family) const {
  VarId v{family, j};
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.mono.exponent_of(v);
    if (e == 0) continue;
    Monomial m = t.mono.divided_by(Monomial::variable(v));
    out.push_back({std::move(m), t.coeff * e});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::shift(const ShiftTable& c, VarFamily family) const {
  Polynomial result = *this;
  for (const auto& [idx, value] : c) {
    if (value == 0) continue;
    VarId v{family, idx};
    std::vector<Term> out;
    for (const auto& t : result.terms_) {
      int e = t.mono.exponent_of(v);
      if (e == 0) {
        out.push_back(t);
        continue;
      }
      Monomial rest = t.mono.divided_by(Monomial::variable(v, e));
      // (x + c)^e expanded binomially
      Rational binom(1), cpow(1);
      for (int j = 0; j <= e; ++j) {
        Monomial m = (j == e) ? rest : rest.times(Monomial::variable(v, e - j));
        out.push_back({std::move(m), t.coeff * binom * cpow});
        binom = binom * (e - j) / (j + 1);
        cpow *= value;
      }
    }
    result = from_terms(std::move(out));
  }
  return result;
}

Polynomial Polynomial::substitute(VarId v, const Polynomial& replacement) const {
  int max_exp = 0;
  for (const auto& t : terms_) max_exp = std::max(max_exp, t.mono.exponent_of(v));
  std::vector<Polynomial> powers(max_exp + 1);
  powers[0] = Polynomial(Rational(1));
  for (int e = 1; e <= max_exp; ++e) powers[e] = powers[e - 1] * replacement;

  // Group the coefficient polynomial of each power of v, then recombine.
  std::vector<Polynomial> by_exp(max_exp + 1);
  for (const auto& t : terms_) {
    int e = t.mono.exponent_of(v);
    Monomial rest = e == 0 ? t.mono : t.mono.divided_by(Monomial::variable(v, e));
    by_exp[e] += from_terms({{std::move(rest), t.coeff}});
  }
  Polynomial out;
  for (int e = 0; e <= max_exp; ++e)
    if (!by_exp[e].is_zero()) out += by_exp[e] * powers[e];
  return out;
}

Polynomial Polynomial::rename_family(VarFamily from, VarFamily to) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<VarPow> factors;
    factors.reserve(t.mono.factors().size());
    for (const auto& f : t.mono.factors()) {
      VarId v = f.var;
      if (v.family == from) v.family = to;
      factors.push_back({v, f.exp});
    }
    std::sort(factors.begin(), factors.end(),
              [](const VarPow& a, const VarPow& b) { return a.var < b.var; });
    // merge duplicates in case both families of one index were present
    std::vector<VarPow> merged;
    for (const auto& f : factors) {
      if (!merged.empty() && merged.back().var == f.var)
        merged.back().exp += f.exp;
      else
        merged.push_back(f);
    }
    out.push_back({Monomial(std::move(merged)), t.coeff});
  }
  return from_terms(std::move(out));
}

Rational Polynomial::evaluate(const ShiftTable& values, VarFamily family) const {
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational prod = t.coeff;
    bool dead = false;
    for (const auto& f : t.mono.factors()) {
      if (f.var.family != family)
        fail(Errc::invalid_input, "evaluate: unexpected variable " + var_name(f.var));
      auto it = values.find(f.var.index);
      if (it == values.end() || it->second == 0) {
        dead = true;
        break;
      }
      Rational base = it->second;
      for (int k = 0; k < f.exp; ++k) prod *= base;
    }
    if (!dead) sum += prod;
  }
  return sum;
}

Rational Polynomial::content() const {
  Integer num_gcd(0), den_lcm(1);
  for (const auto& t : terms_) {
    num_gcd = gcd(num_gcd, numerator(t.coeff));
    den_lcm = lcm(den_lcm, denominator(t.coeff));
  }
  if (num_gcd == 0) return Rational(0);
  return Rational(abs(num_gcd), den_lcm);
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.front().mono;
  for (const auto& t : terms_) {
    if (g.is_constant()) break;
    g = g.gcd(t.mono);
  }
  return g;
}

Polynomial Polynomial::divided_by_monomial(const Monomial& m) const {
  if (m.is_constant()) return *this;
  Polynomial out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono.divided_by(m), t.coeff});
  // dividing every term by the same monomial preserves the relative order
  return out;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) fail(Errc::division_by_zero, "polynomial division by zero");
  Polynomial q, r = num;
  const Term& lt_d = den.leading_term();
  while (!r.is_zero()) {
    const Term& lt_r = r.leading_term();
    if (!lt_r.mono.divisible_by(lt_d.mono)) return std::nullopt;
    Polynomial t = from_terms({{lt_r.mono.divided_by(lt_d.mono), lt_r.coeff / lt_d.coeff}});
    q += t;
    r -= t * den;
  }
  return q;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (s.empty()) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += (c < 0) ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (t.mono.is_constant()) {
      s += rational_to_string(c);
    } else {
      if (c != 1) s += rational_to_string(c) + "*";
      s += t.mono.to_string();
    }
  }
  return s;
}

static void check_square(const std::vector<std::vector<Polynomial>>& m) {
  if (m.empty()) fail(Errc::invalid_input, "determinant of empty matrix");
  for (const auto& row : m)
    if (row.size() != m.size()) fail(Errc::invalid_input, "determinant of non-square matrix");
}

Polynomial det_poly(const std::vector<std::vector<Polynomial>>& matrix) {
  check_square(matrix);
  size_t n = matrix.size();
  if (n == 1) return matrix[0][0];
  auto m = matrix;
  int sign = 1;
  Polynomial prev(Rational(1));
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Polynomial t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = Polynomial::divide_exact(t, prev);
        if (!q) fail(Errc::internal, "Bareiss division not exact");
        m[i][j] = std::move(*q);
      }
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  return sign == 1 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

Polynomial det_poly_cofactor(const std::vector<std::vector<Polynomial>>& matrix) {
  check_square(matrix);
  size_t n = matrix.size();
  if (n == 1) return matrix[0][0];
  Polynomial det;
  for (size_t j = 0; j < n; ++j) {
    if (matrix[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    minor.reserve(n - 1);
    for (size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      row.reserve(n - 1);
      for (size_t jj = 0; jj < n; ++jj)
        if (jj != j) row.push_back(matrix[i][jj]);
      minor.push_back(std::move(row));
    }
    Polynomial c = matrix[0][j] * det_poly_cofactor(minor);
    if (j % 2 == 0)
      det += c;
    else
      det -= c;
  }
  return det;
}

}  // namespace kptau
