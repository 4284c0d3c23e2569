#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bldg {

// Element of F_{p^e}, encoded as the little-endian base-p index of its reduced
// coefficient sequence: value c0 + c1*p + ... + c_{e-1}*p^{e-1}.
using fq = std::uint8_t;

// x -> x^{p^m}: the unital ring endomorphisms of F_{p^e} are exactly the
// Frobenius powers, 0 <= m < e.
struct FieldHom {
  int frobenius_exponent = 0;

  bool operator==(const FieldHom& other) const {
    return frobenius_exponent == other.frobenius_exponent;
  }
};

// Arithmetic in F_{p^e} with full operation tables. Immutable after
// construction; all queries are pure and safe for concurrent reads.
class FqField {
 public:
  static constexpr int kDefaultMaxOrder = 16;

  // Canonical field: modulus is the lexicographically least (little-endian
  // coefficient order) monic irreducible of degree e over F_p.
  FqField(int p, int e, int max_order = kDefaultMaxOrder);

  int characteristic() const { return p_; }
  int degree() const { return e_; }
  int order() const { return q_; }
  // Monic modulus, coefficients c0..c_e ascending, c_e = 1.
  const std::vector<int>& modulus() const { return modulus_; }

  fq zero() const { return 0; }
  fq one() const { return 1; }

  fq add(fq a, fq b) const { return add_[idx(a, b)]; }
  fq sub(fq a, fq b) const { return add(a, neg(b)); }
  fq neg(fq a) const { return neg_[a]; }
  fq mul(fq a, fq b) const { return mul_[idx(a, b)]; }
  fq inv(fq a) const;  // throws on 0
  fq div(fq a, fq b) const { return mul(a, inv(b)); }
  fq pow(fq a, long long k) const;
  // x -> x^{p^m}
  fq frobenius(fq a, int m) const;
  fq apply(const FieldHom& h, fq a) const { return frobenius(a, h.frobenius_exponent); }

  std::vector<int> coeffs(fq a) const;
  fq from_coeffs(const std::vector<int>& c) const;

  // Text form "c0,c1,...,c_{e-1}".
  std::string element_text(fq a) const;
  // "GF(p^e;modulus=c0,c1,...,1)" — header carried by all reports.
  std::string header() const;

  bool same_field(const FqField& other) const {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
  }

  // Exactly e maps, each verified additive and multiplicative on all pairs.
  std::vector<FieldHom> all_field_endomorphisms() const;

  // table[x] = image of x. Returns the unique matching Frobenius exponent, or
  // nullopt when the table is not additive, not multiplicative or not unital.
  std::optional<FieldHom> classify_as_field_hom(const std::vector<fq>& table) const;

 private:
  int idx(fq a, fq b) const { return int(a) * q_ + int(b); }

  int p_ = 0, e_ = 0, q_ = 0;
  std::vector<int> modulus_;
  std::vector<fq> add_, mul_, neg_, inv_;
};

FqField make_field(int p, int e, int max_order = FqField::kDefaultMaxOrder);

}  // namespace bldg
