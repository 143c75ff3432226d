#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace ffalg {

// Exponent vector with a small fixed capacity. Entries may be negative.
class Monomial {
 public:
  static constexpr int kMaxVars = 16;

  Monomial() = default;
  explicit Monomial(int nvars);
  Monomial(std::initializer_list<int> exps);
  explicit Monomial(const std::vector<int>& exps);

  int size() const { return n_; }
  int operator[](int i) const { return e_[i]; }
  void set(int i, int value);

  int degree() const;
  bool is_constant() const;
  bool has_negative() const;
  std::vector<int> to_vector() const;

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  Monomial inverse() const;

  // Drops / inserts / appends coordinates.
  Monomial erase(int i) const;
  Monomial append(int value) const;
  Monomial extended(int nvars) const;

  bool operator==(const Monomial& o) const;
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  std::size_t hash() const;

 private:
  std::array<std::int16_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
};

// Graded lexicographic: total degree first, then lexicographic.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Pure lexicographic comparison.
bool lex_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace ffalg
