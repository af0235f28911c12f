#include "ga/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ga {

std::string rat_str(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRational make_rat(const BigInt& num, const BigInt& den) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

VarListPtr make_vars(VarList names) {
  return std::make_shared<const VarList>(std::move(names));
}

bool GrlexDesc::operator()(const Exponent& a, const Exponent& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

LaurentPoly LaurentPoly::constant(VarListPtr vars, const BigInt& c) {
  LaurentPoly p(vars);
  p.add_term(Exponent(p.nvars(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(VarListPtr vars, std::size_t i) {
  Exponent e(vars->size(), 0);
  e.at(i) = 1;
  return monomial(std::move(vars), e);
}

LaurentPoly LaurentPoly::monomial(VarListPtr vars, Exponent e, const BigInt& c) {
  LaurentPoly p(std::move(vars));
  if (e.size() != p.nvars()) throw Error("monomial: exponent length mismatch");
  p.add_term(e, c);
  return p;
}

void LaurentPoly::add_term(const Exponent& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_same(const LaurentPoly& o) const {
  if (!vars_ || !o.vars_ || vars_ == o.vars_) return;
  if (*vars_ != *o.vars_) throw Error("Laurent polynomials over different variable lists");
}

bool LaurentPoly::is_polynomial() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x < 0) return false;
  return true;
}

Exponent LaurentPoly::min_exponents() const {
  Exponent m(nvars(), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    }
  }
  return m;
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift) const {
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += shift[i];
    r.terms_.emplace_hint(r.terms_.end(), std::move(f), c);
  }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same(o);
  if (!vars_) vars_ = o.vars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same(o);
  if (!vars_) vars_ = o.vars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same(b);
  LaurentPoly r(a.vars_ ? a.vars_ : b.vars_);
  Exponent f(r.nvars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < f.size(); ++i) f[i] = ea[i] + eb[i];
      r.add_term(f, ca * cb);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly r = constant(vars_, 1);
  LaurentPoly b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  check_same(o);
  return terms_ == o.terms_;
}

namespace {

std::string monomial_str(const VarList& vars, const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt a = abs(c);
    std::string mono = monomial_str(*vars_, e);
    std::string body;
    if (mono.empty())
      body = a.get_str();
    else if (a == 1)
      body = mono;
    else
      body = a.get_str() + "*" + mono;
    if (first)
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

std::string LaurentPoly::fraction_str() const {
  if (terms_.empty()) return "0";
  Exponent m = min_exponents();
  Exponent up(m.size()), down(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    up[i] = -std::min(m[i], 0);
    down[i] = std::max(-m[i], 0);
  }
  LaurentPoly num = shifted(up);
  std::string den = monomial_str(*vars_, down);
  std::string ns = num.str();
  if (den.empty()) return ns;
  if (num.terms_.size() > 1) ns = "(" + ns + ")";
  bool single = std::count_if(down.begin(), down.end(), [](int x) { return x != 0; }) == 1 &&
                *std::max_element(down.begin(), down.end()) == 1;
  return ns + "/" + (single ? den : "(" + den + ")");
}

bool LaurentPoly::coefficients_positive() const {
  for (const auto& [e, c] : terms_)
    if (c <= 0) return false;
  return true;
}

BigRational LaurentPoly::evaluate(const std::vector<BigRational>& point) const {
  BigRational sum = 0;
  for (const auto& [e, c] : terms_) {
    BigRational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      BigRational base = point.at(i);
      if (e[i] < 0) {
        if (base == 0) throw Error("evaluate: negative power of zero");
        base = 1 / base;
      }
      for (int k = 0; k < std::abs(e[i]); ++k) t *= base;
    }
    sum += t;
  }
  return sum;
}

LaurentPoly LaurentPoly::derivative(std::size_t var) const {
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    r.add_term(f, c * e[var]);
  }
  return r;
}

LaurentPoly laurent_arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op) {
  if (a.vars() && b.vars() && *a.vars() != *b.vars())
    throw Error("laurent_arith: mismatched variable lists");
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
  }
  return {};
}

LaurentPoly laurent_exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw Error("division by zero Laurent polynomial");
  if (num.vars() && den.vars() && *num.vars() != *den.vars())
    throw Error("laurent_exact_div: mismatched variable lists");
  VarListPtr vars = den.vars();
  if (num.is_zero()) return LaurentPoly(vars);
  Exponent mn = num.min_exponents(), md = den.min_exponents();
  Exponent negn(mn.size()), negd(md.size()), shift(mn.size());
  for (std::size_t i = 0; i < mn.size(); ++i) {
    negn[i] = -mn[i];
    negd[i] = -md[i];
    shift[i] = mn[i] - md[i];
  }
  LaurentPoly p = num.shifted(negn);
  LaurentPoly d = den.shifted(negd);
  const auto& [lte, ltc] = *d.terms().begin();
  LaurentPoly q(vars);
  Exponent t(lte.size());
  while (!p.is_zero()) {
    const auto& [pe, pc] = *p.terms().begin();
    bool ok = mpz_divisible_p(pc.get_mpz_t(), ltc.get_mpz_t()) != 0;
    for (std::size_t i = 0; ok && i < t.size(); ++i) {
      t[i] = pe[i] - lte[i];
      if (t[i] < 0) ok = false;
    }
    if (!ok) throw NonExactDivision("non-exact division: " + num.str() + " / " + den.str(), p);
    BigInt c = pc / ltc;
    LaurentPoly term = LaurentPoly::monomial(vars, t, c);
    q += term;
    p -= term * d;
  }
  return q.shifted(shift);
}

LaurentPoly substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& images) {
  if (images.size() != p.nvars()) throw Error("substitute: image count mismatch");
  VarListPtr target = images.empty() ? p.vars() : images[0].vars();
  Exponent m = p.min_exponents();
  Exponent up(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) up[i] = -std::min(m[i], 0);
  LaurentPoly num(target);
  LaurentPoly lifted = p.shifted(up);
  for (const auto& [e, c] : lifted.terms()) {
    LaurentPoly t = LaurentPoly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t = t * images[i].pow(static_cast<unsigned>(e[i]));
    num += t;
  }
  LaurentPoly den = LaurentPoly::constant(target, 1);
  for (std::size_t i = 0; i < up.size(); ++i)
    if (up[i] > 0) den = den * images[i].pow(static_cast<unsigned>(up[i]));
  return laurent_exact_div(num, den);
}

}  // namespace ga
