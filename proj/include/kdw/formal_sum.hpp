#pragma once

// Finite integer combinations of canonical terms. A term whose is_zero()
// holds is the zero element and renders as "o".

#include <cstdint>
#include <map>
#include <string>

namespace kdw {

template <class Term>
class FormalSum {
 public:
  FormalSum() = default;

  void add(const Term& term, std::int64_t coeff = 1) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(term, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  FormalSum& operator+=(const FormalSum& other) {
    for (const auto& [t, c] : other.terms_) add(t, c);
    return *this;
  }

  const std::map<Term, std::int64_t>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::int64_t total_mass() const {
    std::int64_t m = 0;
    for (const auto& [t, c] : terms_) m += c;
    return m;
  }

  std::int64_t coeff(const Term& term) const {
    auto it = terms_.find(term);
    return it == terms_.end() ? 0 : it->second;
  }

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

  /// "o + 2640*(...) + ...", terms in canonical order; "0" when empty.
  std::string text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [t, c] : terms_) {
      if (!out.empty()) out += " + ";
      if (c != 1) out += std::to_string(c) + "*";
      out += t.is_zero() ? std::string("o") : t.text();
    }
    return out;
  }

 private:
  std::map<Term, std::int64_t> terms_;
};

}  // namespace kdw
