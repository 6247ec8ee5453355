#include "exactnum.hpp"

#include <sstream>

namespace exactnum {

Cyc8 Cyc8::zeta(int k) {
  k = ((k % 8) + 8) % 8;
  Cyc8 r;
  if (k < 4)
    r.a_[k] = 1;
  else
    r.a_[k - 4] = -1;
  return r;
}

bool Cyc8::is_zero() const {
  for (const auto& c : a_)
    if (c != 0) return false;
  return true;
}

Cyc8 Cyc8::operator-() const {
  Cyc8 r;
  for (int j = 0; j < 4; ++j) r.a_[j] = -a_[j];
  return r;
}

Cyc8 Cyc8::operator+(const Cyc8& o) const {
  Cyc8 r;
  for (int j = 0; j < 4; ++j) r.a_[j] = a_[j] + o.a_[j];
  return r;
}

Cyc8 Cyc8::operator-(const Cyc8& o) const {
  Cyc8 r;
  for (int j = 0; j < 4; ++j) r.a_[j] = a_[j] - o.a_[j];
  return r;
}

Cyc8 Cyc8::operator*(const Cyc8& o) const {
  Cyc8 r;
  for (int j = 0; j < 4; ++j) {
    if (a_[j] == 0) continue;
    for (int k = 0; k < 4; ++k) {
      if (o.a_[k] == 0) continue;
      int d = j + k;
      if (d < 4)
        r.a_[d] += a_[j] * o.a_[k];
      else
        r.a_[d - 4] -= a_[j] * o.a_[k];  // z^4 = -1
    }
  }
  return r;
}

bool Cyc8::operator<(const Cyc8& o) const {
  for (int j = 0; j < 4; ++j) {
    int c = cmp(a_[j], o.a_[j]);
    if (c != 0) return c < 0;
  }
  return false;
}

Cyc8 Cyc8::galois(int k) const {
  Cyc8 r;
  for (int j = 0; j < 4; ++j) {
    if (a_[j] == 0) continue;
    Cyc8 zk = zeta(j * k);
    for (int m = 0; m < 4; ++m) r.a_[m] += a_[j] * zk.a_[m];
  }
  return r;
}

Cyc8 Cyc8::inverse() const {
  if (is_zero()) throw std::domain_error("Cyc8: division by zero");
  Cyc8 t = galois(3) * galois(5) * galois(7);
  Cyc8 n = *this * t;  // the norm, a rational
  if (!n.is_rational() || n.rational_part() == 0)
    throw std::logic_error("Cyc8: norm computation failed");
  Rational inv_n = 1 / n.rational_part();
  Cyc8 r;
  for (int j = 0; j < 4; ++j) r.a_[j] = t.a_[j] * inv_n;
  return r;
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r.get_num();
  if (r.get_den() != 1) os << "/" << r.get_den();
  return os.str();
}

std::string Cyc8::str() const {
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < 4; ++j) {
    if (a_[j] == 0) continue;
    Rational c = a_[j];
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (j == 0) {
      os << rational_str(c);
    } else {
      if (c != 1) os << rational_str(c) << "*";
      os << "z";
      if (j > 1) os << "^" << j;
    }
  }
  if (first) return "0";
  return os.str();
}

bool ParamPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == std::pair<int, int>{0, 0});
}

Cyc8 ParamPoly::constant_part() const {
  auto it = terms_.find({0, 0});
  return it == terms_.end() ? Cyc8() : it->second;
}

void ParamPoly::set(int du, int dv, const Cyc8& c) {
  if (c.is_zero())
    terms_.erase({du, dv});
  else
    terms_[{du, dv}] = c;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r;
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
  ParamPoly r = *this;
  for (const auto& [k, c] : o.terms_) {
    auto it = r.terms_.find(k);
    if (it == r.terms_.end()) {
      r.terms_[k] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const { return *this + (-o); }

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
  ParamPoly r;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) {
      std::pair<int, int> k{k1.first + k2.first, k1.second + k2.second};
      auto it = r.terms_.find(k);
      if (it == r.terms_.end()) {
        Cyc8 p = c1 * c2;
        if (!p.is_zero()) r.terms_[k] = p;
      } else {
        it->second += c1 * c2;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  return r;
}

Cyc8 ParamPoly::eval(const Cyc8& u0, const Cyc8& v0) const {
  Cyc8 r;
  for (const auto& [k, c] : terms_) {
    Cyc8 t = c;
    for (int j = 0; j < k.first; ++j) t *= u0;
    for (int j = 0; j < k.second; ++j) t *= v0;
    r += t;
  }
  return r;
}

ParamPoly ParamPoly::substitute(const ParamPoly& u0, const ParamPoly& v0) const {
  ParamPoly r;
  for (const auto& [k, c] : terms_) {
    ParamPoly t{c};
    for (int j = 0; j < k.first; ++j) t *= u0;
    for (int j = 0; j < k.second; ++j) t *= v0;
    r += t;
  }
  return r;
}

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  if (is_constant()) return constant_part().str();
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (k.first > 0) {
      os << "*u";
      if (k.first > 1) os << "^" << k.first;
    }
    if (k.second > 0) {
      os << "*v";
      if (k.second > 1) os << "^" << k.second;
    }
  }
  return os.str();
}

}  // namespace exactnum
