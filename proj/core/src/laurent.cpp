#include "knotspan/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace knotspan {

namespace {

[[noreturn]] void throw_zero() {
  throw std::domain_error("degree query on the zero polynomial");
}

// Shared coefficient formatting: leading term keeps its sign inline, later
// terms are joined with " + " / " - ".
void append_term(std::ostringstream& out, bool first, const BigInt& c,
                 const std::string& mono) {
  BigInt abs = c < 0 ? BigInt(-c) : c;
  if (first) {
    if (c < 0) out << "-";
  } else {
    out << (c < 0 ? " - " : " + ");
  }
  if (abs != 1 || mono.empty()) {
    out << abs.str();
    if (!mono.empty()) out << " ";
  }
  out << mono;
}

std::string power(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

Laurent1::Laurent1(const BigInt& constant) {
  if (constant != 0) terms_[0] = constant;
}

Laurent1 Laurent1::monomial(int exp, BigInt coeff) {
  Laurent1 p;
  if (coeff != 0) p.terms_[exp] = std::move(coeff);
  return p;
}

int Laurent1::maxdeg() const {
  if (terms_.empty()) throw_zero();
  return terms_.rbegin()->first;
}

int Laurent1::mindeg() const {
  if (terms_.empty()) throw_zero();
  return terms_.begin()->first;
}

BigInt Laurent1::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void Laurent1::add_term(int exp, const BigInt& c) {
  if (c == 0) return;
  BigInt& slot = terms_[exp];
  slot += c;
  if (slot == 0) terms_.erase(exp);
}

Laurent1 Laurent1::operator+(const Laurent1& o) const {
  Laurent1 r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Laurent1 Laurent1::operator-(const Laurent1& o) const {
  Laurent1 r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Laurent1 Laurent1::operator*(const Laurent1& o) const {
  Laurent1 r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

Laurent1 Laurent1::operator-() const {
  Laurent1 r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Laurent1 Laurent1::pow(unsigned n) const {
  Laurent1 r(BigInt(1));
  Laurent1 base = *this;
  while (n) {
    if (n & 1u) r = r * base;
    base = base * base;
    n >>= 1u;
  }
  return r;
}

Laurent1 Laurent1::mirrored() const {
  Laurent1 r;
  for (const auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

Laurent1 Laurent1::shifted(int k) const {
  Laurent1 r;
  for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
  return r;
}

std::string Laurent1::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    append_term(out, first, it->second, power(var, it->first));
    first = false;
  }
  return out.str();
}

Laurent2::Laurent2(const BigInt& constant) {
  if (constant != 0) terms_[{0, 0}] = constant;
}

Laurent2 Laurent2::monomial(int ra, int sz, BigInt coeff) {
  Laurent2 p;
  if (coeff != 0) p.terms_[{ra, sz}] = std::move(coeff);
  return p;
}

int Laurent2::maxdeg_a() const {
  if (terms_.empty()) throw_zero();
  int m = terms_.begin()->first.first;
  for (const auto& [rs, c] : terms_) m = std::max(m, rs.first);
  return m;
}

int Laurent2::mindeg_a() const {
  if (terms_.empty()) throw_zero();
  return terms_.begin()->first.first;
}

int Laurent2::mindeg_z() const {
  if (terms_.empty()) throw_zero();
  int m = terms_.begin()->first.second;
  for (const auto& [rs, c] : terms_) m = std::min(m, rs.second);
  return m;
}

int Laurent2::maxdeg_z() const {
  if (terms_.empty()) throw_zero();
  int m = terms_.begin()->first.second;
  for (const auto& [rs, c] : terms_) m = std::max(m, rs.second);
  return m;
}

BigInt Laurent2::coeff(int ra, int sz) const {
  auto it = terms_.find({ra, sz});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void Laurent2::add_term(int ra, int sz, const BigInt& c) {
  if (c == 0) return;
  BigInt& slot = terms_[{ra, sz}];
  slot += c;
  if (slot == 0) terms_.erase({ra, sz});
}

Laurent2 Laurent2::operator+(const Laurent2& o) const {
  Laurent2 r = *this;
  for (const auto& [rs, c] : o.terms_) r.add_term(rs.first, rs.second, c);
  return r;
}

Laurent2 Laurent2::operator-(const Laurent2& o) const {
  Laurent2 r = *this;
  for (const auto& [rs, c] : o.terms_) r.add_term(rs.first, rs.second, -c);
  return r;
}

Laurent2 Laurent2::operator*(const Laurent2& o) const {
  Laurent2 r;
  for (const auto& [rs1, c1] : terms_)
    for (const auto& [rs2, c2] : o.terms_)
      r.add_term(rs1.first + rs2.first, rs1.second + rs2.second, c1 * c2);
  return r;
}

Laurent2 Laurent2::operator-() const {
  Laurent2 r;
  for (const auto& [rs, c] : terms_) r.terms_[rs] = -c;
  return r;
}

Laurent2 Laurent2::pow(unsigned n) const {
  Laurent2 r(BigInt(1));
  Laurent2 base = *this;
  while (n) {
    if (n & 1u) r = r * base;
    base = base * base;
    n >>= 1u;
  }
  return r;
}

Laurent2 Laurent2::mirrored_a() const {
  Laurent2 r;
  for (const auto& [rs, c] : terms_) r.terms_[{-rs.first, rs.second}] = c;
  return r;
}

namespace {

// Exact division by A + A^{-1}; throws when the quotient is not a Laurent
// polynomial.
Laurent1 divide_by_zsub(const Laurent1& n) {
  Laurent1 rem = n;
  Laurent1 quot;
  int floor = n.is_zero() ? 0 : n.mindeg();
  while (!rem.is_zero()) {
    int e = rem.maxdeg();
    if (e < floor)
      throw std::domain_error("substitute_bracket: inexact division");
    BigInt c = rem.coeff(e);
    quot.add_term(e - 1, c);
    rem.add_term(e, -c);
    rem.add_term(e - 2, -c);
  }
  return quot;
}

}  // namespace

Laurent1 Laurent2::substitute_bracket() const {
  // a^r z^s -> (-A^3)^r (A + A^{-1})^s. Negative s (possible for links, where
  // min deg_z >= 1-k) is resolved by clearing z-denominators and dividing the
  // combined image exactly.
  int shift = 0;
  if (!terms_.empty()) shift = std::max(0, -mindeg_z());
  Laurent1 result;
  Laurent1 zsub = Laurent1::monomial(1) + Laurent1::monomial(-1);
  for (const auto& [rs, c] : terms_) {
    auto [r, s] = rs;
    Laurent1 term = Laurent1::monomial(3 * r, (r % 2 == 0) ? c : -c);
    result = result + term * zsub.pow(static_cast<unsigned>(s + shift));
  }
  for (int i = 0; i < shift; ++i) result = divide_by_zsub(result);
  return result;
}

std::string Laurent2::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [rs, c] : terms_) {
    std::string mono = power("a", rs.first);
    std::string zp = power("z", rs.second);
    if (!mono.empty() && !zp.empty()) mono += " ";
    mono += zp;
    append_term(out, first, c, mono);
    first = false;
  }
  return out.str();
}

Laurent2 kauffman_delta() {
  Laurent2 d;
  d.add_term(1, -1, 1);
  d.add_term(-1, -1, 1);
  d.add_term(0, 0, -1);
  return d;
}

bool mod4_support_check(const Laurent1& p) {
  if (p.is_zero()) throw std::domain_error("mod4_support_check: zero polynomial");
  int r = ((p.mindeg() % 4) + 4) % 4;
  for (const auto& [e, c] : p.terms())
    if (((e % 4) + 4) % 4 != r) return false;
  return true;
}

int JonesPoly::span_t() const {
  int s = q.span();
  if (s % 4 != 0)
    throw std::domain_error("Jones q-span not divisible by 4");
  return s / 4;
}

}  // namespace knotspan
