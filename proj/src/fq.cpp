#include "bldg/fq.hpp"

#include <algorithm>

#include "bldg/errors.hpp"

namespace bldg {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense polynomials over F_p, coefficients ascending, no trailing zeros.
using Poly = std::vector<int>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return trim(r);
}

// a mod m, m monic.
Poly poly_mod(Poly a, const Poly& m, int p) {
  a = trim(a);
  while (a.size() >= m.size()) {
    int lead = a.back();
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    }
    a = trim(a);
  }
  return a;
}

bool divides(const Poly& d, const Poly& a, int p) { return poly_mod(a, d, p).empty(); }

// Trial division by all monic polynomials of degree 1..deg/2.
bool is_irreducible(const Poly& f, int p) {
  int deg = int(f.size()) - 1;
  if (deg < 1) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      long long c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = int(c % p);
        c /= p;
      }
      g[d] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

// First monic irreducible of degree e in little-endian index order.
Poly canonical_modulus(int p, int e) {
  long long count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  for (long long code = 0; code < count; ++code) {
    Poly f(e + 1, 0);
    long long c = code;
    for (int i = 0; i < e; ++i) {
      f[i] = int(c % p);
      c /= p;
    }
    f[e] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw CheckError("no irreducible modulus found");  // cannot happen
}

}  // namespace

FqField::FqField(int p, int e, int max_order) : p_(p), e_(e) {
  if (!is_prime(p)) throw PreconditionError("characteristic must be prime, got " + std::to_string(p));
  if (e < 1) throw PreconditionError("extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > max_order)
      throw PreconditionError("field order " + std::to_string(p) + "^" + std::to_string(e) +
                              " exceeds bound " + std::to_string(max_order));
  }
  q_ = int(q);
  modulus_ = canonical_modulus(p_, e_);

  auto decode = [&](fq a) {
    Poly c(e_, 0);
    int v = a;
    for (int i = 0; i < e_; ++i) {
      c[i] = v % p_;
      v /= p_;
    }
    return c;
  };
  auto encode = [&](const Poly& c) {
    int v = 0;
    for (int i = e_ - 1; i >= 0; --i) v = v * p_ + (i < int(c.size()) ? c[i] : 0);
    return fq(v);
  };

  add_.assign(size_t(q_) * q_, 0);
  mul_.assign(size_t(q_) * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    Poly ca = decode(fq(a));
    Poly na(e_, 0);
    for (int i = 0; i < e_; ++i) na[i] = (p_ - ca[i]) % p_;
    neg_[a] = encode(na);
    for (int b = 0; b < q_; ++b) {
      Poly cb = decode(fq(b));
      Poly s(e_, 0);
      for (int i = 0; i < e_; ++i) s[i] = (ca[i] + cb[i]) % p_;
      add_[idx(fq(a), fq(b))] = encode(s);
      mul_[idx(fq(a), fq(b))] = encode(poly_mod(poly_mul(trim(ca), trim(cb), p_), modulus_, p_));
    }
  }
  for (int a = 1; a < q_; ++a) {
    for (int b = 1; b < q_; ++b) {
      if (mul_[idx(fq(a), fq(b))] == 1) {
        inv_[a] = fq(b);
        break;
      }
    }
    if (inv_[a] == 0) throw CheckError("non-invertible nonzero element; modulus not irreducible?");
  }
}

fq FqField::inv(fq a) const {
  if (a == 0) throw PreconditionError("division by zero in " + header());
  return inv_[a];
}

fq FqField::pow(fq a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  fq r = one();
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

fq FqField::frobenius(fq a, int m) const {
  long long k = 1;
  for (int i = 0; i < (m % e_ + e_) % e_; ++i) k *= p_;
  return pow(a, k);
}

std::vector<int> FqField::coeffs(fq a) const {
  std::vector<int> c(e_, 0);
  int v = a;
  for (int i = 0; i < e_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

fq FqField::from_coeffs(const std::vector<int>& c) const {
  int v = 0;
  for (int i = e_ - 1; i >= 0; --i) {
    int ci = i < int(c.size()) ? ((c[i] % p_) + p_) % p_ : 0;
    v = v * p_ + ci;
  }
  return fq(v);
}

std::string FqField::element_text(fq a) const {
  auto c = coeffs(a);
  std::string s;
  for (int i = 0; i < e_; ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}

std::string FqField::header() const {
  std::string s = "GF(" + std::to_string(p_) + "^" + std::to_string(e_) + ";modulus=";
  for (size_t i = 0; i < modulus_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(modulus_[i]);
  }
  return s + ")";
}

std::vector<FieldHom> FqField::all_field_endomorphisms() const {
  std::vector<FieldHom> out;
  for (int m = 0; m < e_; ++m) {
    for (int a = 0; a < q_; ++a) {
      for (int b = 0; b < q_; ++b) {
        fq x = fq(a), y = fq(b);
        if (frobenius(add(x, y), m) != add(frobenius(x, m), frobenius(y, m)))
          throw CheckError("Frobenius power not additive");
        if (frobenius(mul(x, y), m) != mul(frobenius(x, m), frobenius(y, m)))
          throw CheckError("Frobenius power not multiplicative");
      }
    }
    out.push_back(FieldHom{m});
  }
  return out;
}

std::optional<FieldHom> FqField::classify_as_field_hom(const std::vector<fq>& table) const {
  if (int(table.size()) != q_) return std::nullopt;
  if (table[one()] != one()) return std::nullopt;  // not unital
  for (int a = 0; a < q_; ++a) {
    for (int b = 0; b < q_; ++b) {
      fq x = fq(a), y = fq(b);
      if (table[add(x, y)] != add(table[x], table[y])) return std::nullopt;
      if (table[mul(x, y)] != mul(table[x], table[y])) return std::nullopt;
    }
  }
  for (int m = 0; m < e_; ++m) {
    bool match = true;
    for (int a = 0; a < q_ && match; ++a) match = table[a] == frobenius(fq(a), m);
    if (match) return FieldHom{m};
  }
  return std::nullopt;
}

FqField make_field(int p, int e, int max_order) { return FqField(p, e, max_order); }

}  // namespace bldg
