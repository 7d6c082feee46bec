#pragma once

// The torus algebra A over Z2: the path algebra of the quiver with two
// idempotents i1, i2 and arrows r1, r2, r3, modulo the relations
// r2*r1 = r3*r2 = 0 (paths compose only when indices increase).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hfo/errors.hpp"

namespace hfo {

// Vertex decoration of structure graphs: I1 is drawn filled, I2 unfilled.
enum class Idem : std::uint8_t { I1 = 1, I2 = 2 };

inline Idem other_idem(Idem i) { return i == Idem::I1 ? Idem::I2 : Idem::I1; }

namespace basis {
inline constexpr int i1 = 0;
inline constexpr int i2 = 1;
inline constexpr int r1 = 2;
inline constexpr int r2 = 3;
inline constexpr int r3 = 4;
inline constexpr int r12 = 5;
inline constexpr int r23 = 6;
inline constexpr int r123 = 7;
inline constexpr int count = 8;
}  // namespace basis

struct BasisTraits {
  Idem left;
  Idem right;
  std::string_view word;  // increasing index word; empty for idempotents
};

inline constexpr std::array<BasisTraits, 8> kBasisTraits{{
    {Idem::I1, Idem::I1, ""},
    {Idem::I2, Idem::I2, ""},
    {Idem::I1, Idem::I2, "1"},
    {Idem::I2, Idem::I1, "2"},
    {Idem::I1, Idem::I2, "3"},
    {Idem::I1, Idem::I1, "12"},
    {Idem::I2, Idem::I2, "23"},
    {Idem::I1, Idem::I2, "123"},
}};

inline constexpr std::array<std::string_view, 8> kBasisNames{
    "i1", "i2", "r1", "r2", "r3", "r12", "r23", "r123"};

namespace detail {

// Index of the basis element a*b, or -1 when the product vanishes.
constexpr int basis_product_index(int a, int b) {
  if (kBasisTraits[a].right != kBasisTraits[b].left) return -1;
  const std::string_view wa = kBasisTraits[a].word;
  const std::string_view wb = kBasisTraits[b].word;
  if (wa.empty() && wb.empty()) return a;  // matching idempotents
  // Concatenated word must be strictly increasing.
  char last = 0;
  for (std::string_view w : {wa, wb}) {
    for (char c : w) {
      if (c <= last) return -1;
      last = c;
    }
  }
  const std::size_t len = wa.size() + wb.size();
  for (int k = 0; k < basis::count; ++k) {
    const std::string_view wk = kBasisTraits[k].word;
    if (wk.size() != len) continue;
    bool eq = true;
    for (std::size_t p = 0; p < len; ++p) {
      const char c = p < wa.size() ? wa[p] : wb[p - wa.size()];
      if (wk[p] != c) eq = false;
    }
    if (eq) return k;
  }
  return -1;
}

constexpr std::array<std::array<std::uint8_t, 8>, 8> make_product_table() {
  std::array<std::array<std::uint8_t, 8>, 8> t{};
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int p = basis_product_index(a, b);
      t[a][b] = p < 0 ? 0 : static_cast<std::uint8_t>(1u << p);
    }
  return t;
}

inline constexpr auto kProductTable = make_product_table();

}  // namespace detail

// A Z2-linear combination of the eight basis elements, stored as a bit per
// basis element. Addition is xor; multiplication extends the basis table
// bilinearly.
class AlgebraElement {
 public:
  constexpr AlgebraElement() = default;

  static constexpr AlgebraElement zero() { return AlgebraElement(); }
  static constexpr AlgebraElement basis(int i) {
    return AlgebraElement(static_cast<std::uint8_t>(1u << i));
  }
  static constexpr AlgebraElement idempotent(Idem i) {
    return basis(i == Idem::I1 ? basis::i1 : basis::i2);
  }
  static constexpr AlgebraElement unit() {
    return AlgebraElement(static_cast<std::uint8_t>(
        (1u << basis::i1) | (1u << basis::i2)));
  }

  constexpr bool is_zero() const { return bits_ == 0; }
  constexpr bool has(int i) const { return (bits_ >> i) & 1u; }
  constexpr std::uint8_t bits() const { return bits_; }

  // Index when the element is a single basis element, otherwise nullopt.
  constexpr std::optional<int> single_basis_index() const {
    if (bits_ == 0 || (bits_ & (bits_ - 1)) != 0) return std::nullopt;
    int i = 0;
    while (!((bits_ >> i) & 1u)) ++i;
    return i;
  }

  friend constexpr AlgebraElement operator+(AlgebraElement a, AlgebraElement b) {
    return AlgebraElement(static_cast<std::uint8_t>(a.bits_ ^ b.bits_));
  }
  friend constexpr AlgebraElement operator*(AlgebraElement a, AlgebraElement b) {
    std::uint8_t out = 0;
    for (int i = 0; i < basis::count; ++i) {
      if (!((a.bits_ >> i) & 1u)) continue;
      for (int j = 0; j < basis::count; ++j)
        if ((b.bits_ >> j) & 1u) out ^= detail::kProductTable[i][j];
    }
    return AlgebraElement(out);
  }
  friend constexpr bool operator==(AlgebraElement a, AlgebraElement b) {
    return a.bits_ == b.bits_;
  }
  friend constexpr bool operator!=(AlgebraElement a, AlgebraElement b) {
    return a.bits_ != b.bits_;
  }

  std::string to_string() const {
    if (bits_ == 0) return "0";
    std::string s;
    for (int i = 0; i < basis::count; ++i)
      if (has(i)) {
        if (!s.empty()) s += "+";
        s += kBasisNames[i];
      }
    return s;
  }

 private:
  constexpr explicit AlgebraElement(std::uint8_t bits) : bits_(bits) {}
  std::uint8_t bits_ = 0;
};

inline AlgebraElement multiply(AlgebraElement a, AlgebraElement b) { return a * b; }

// Left/right idempotent of a non-idempotent basis element; rejects
// idempotent or non-basis input.
inline Idem left_idempotent(AlgebraElement x) {
  const auto i = x.single_basis_index();
  if (!i || *i == basis::i1 || *i == basis::i2)
    throw InvariantError("left_idempotent: expected a non-idempotent basis element, got " +
                         x.to_string());
  return kBasisTraits[*i].left;
}

inline Idem right_idempotent(AlgebraElement x) {
  const auto i = x.single_basis_index();
  if (!i || *i == basis::i1 || *i == basis::i2)
    throw InvariantError("right_idempotent: expected a non-idempotent basis element, got " +
                         x.to_string());
  return kBasisTraits[*i].right;
}

// Edge labels of type D graphs: the six Reeb basis elements plus the
// identity label "1". The identity label is kept distinct from i1+i2 so
// reducedness checks stay syntactic.
enum class ReebLabel : std::uint8_t { One = 0, R1, R2, R3, R12, R23, R123 };

inline constexpr std::array<ReebLabel, 7> kAllLabels{
    ReebLabel::One,  ReebLabel::R1,  ReebLabel::R2, ReebLabel::R3,
    ReebLabel::R12, ReebLabel::R23, ReebLabel::R123};

inline constexpr std::array<ReebLabel, 6> kReebLabels{
    ReebLabel::R1,  ReebLabel::R2,  ReebLabel::R3,
    ReebLabel::R12, ReebLabel::R23, ReebLabel::R123};

inline constexpr int label_basis_index(ReebLabel l) {
  switch (l) {
    case ReebLabel::R1: return basis::r1;
    case ReebLabel::R2: return basis::r2;
    case ReebLabel::R3: return basis::r3;
    case ReebLabel::R12: return basis::r12;
    case ReebLabel::R23: return basis::r23;
    case ReebLabel::R123: return basis::r123;
    default: return -1;
  }
}

inline AlgebraElement label_algebra(ReebLabel l) {
  if (l == ReebLabel::One) return AlgebraElement::unit();
  return AlgebraElement::basis(label_basis_index(l));
}

inline std::optional<Idem> label_left_idem(ReebLabel l) {
  if (l == ReebLabel::One) return std::nullopt;
  return kBasisTraits[label_basis_index(l)].left;
}

inline std::optional<Idem> label_right_idem(ReebLabel l) {
  if (l == ReebLabel::One) return std::nullopt;
  return kBasisTraits[label_basis_index(l)].right;
}

inline std::string_view label_digits(ReebLabel l) {
  if (l == ReebLabel::One) return "";
  return kBasisTraits[label_basis_index(l)].word;
}

// Serialized form used in every file format.
inline std::string_view label_name(ReebLabel l) {
  switch (l) {
    case ReebLabel::One: return "1";
    case ReebLabel::R1: return "r1";
    case ReebLabel::R2: return "r2";
    case ReebLabel::R3: return "r3";
    case ReebLabel::R12: return "r12";
    case ReebLabel::R23: return "r23";
    case ReebLabel::R123: return "r123";
  }
  return "?";
}

inline std::optional<ReebLabel> parse_label(std::string_view s) {
  for (ReebLabel l : kAllLabels)
    if (label_name(l) == s) return l;
  return std::nullopt;
}

inline std::optional<ReebLabel> label_from_basis(int basis_index) {
  for (ReebLabel l : kReebLabels)
    if (label_basis_index(l) == basis_index) return l;
  return std::nullopt;
}

// Composition of edge labels for edge reduction; "1" acts as the unit.
// nullopt when the product vanishes in the algebra.
inline std::optional<ReebLabel> compose_labels(ReebLabel a, ReebLabel b) {
  if (a == ReebLabel::One) return b;
  if (b == ReebLabel::One) return a;
  const AlgebraElement p = label_algebra(a) * label_algebra(b);
  if (p.is_zero()) return std::nullopt;
  return label_from_basis(*p.single_basis_index());
}

}  // namespace hfo
