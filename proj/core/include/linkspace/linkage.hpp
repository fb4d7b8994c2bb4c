#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linkspace/error.hpp"
#include "linkspace/rational.hpp"
#include "linkspace/subset.hpp"

namespace linkspace {

/// Raised by make_linkage when some subset of edges weighs exactly half the
/// perimeter. The witness always contains the last edge n.
class NonGenericError : public Error {
 public:
  NonGenericError(Subset witness, const std::string& what)
      : Error(ErrorCode::NonGeneric, what), witness_(witness) {}
  Subset witness() const noexcept { return witness_; }

 private:
  Subset witness_;
};

/// A closed chain of n rigid bars with exact rational lengths. Instances are
/// only produced by make_linkage, so every Linkage is positive, satisfies the
/// polygon inequality and is generic.
class Linkage {
 public:
  std::size_t size() const noexcept { return lengths_.size(); }
  int n() const noexcept { return static_cast<int>(lengths_.size()); }
  std::span<const Rational> lengths() const noexcept { return lengths_; }
  /// Length of edge `element`, 1-based.
  const Rational& length(int element) const { return lengths_.at(static_cast<std::size_t>(element - 1)); }
  const Rational& total() const noexcept { return total_; }
  Subset ground_set() const noexcept { return full_subset(n()); }

  Rational subset_sum(Subset s) const;

  /// sum(S) <= total - sum(S). Genericity rules out equality.
  bool is_admissible_part(Subset s) const;

  /// Every part admissible; the order of `parts` is irrelevant.
  bool is_admissible_partition(std::span<const Subset> parts) const;

  /// One flag per subset mask (index = mask). Determines the whole complex.
  const std::vector<bool>& admissible_subsets() const noexcept { return admissible_; }

  /// Comma-separated form accepted by parse_lengths, e.g. `1,1,1,1/100,2`.
  std::string to_string() const;

  friend bool operator==(const Linkage& a, const Linkage& b) { return a.lengths_ == b.lengths_; }

 private:
  friend Linkage make_linkage(std::vector<Rational> lengths);
  Linkage() = default;

  std::vector<Rational> lengths_;
  Rational total_;
  std::vector<bool> admissible_;
};

/// Validates and builds a linkage. Throws NonPositiveLength,
/// ViolatesPolygonInequality (some l_i strictly exceeds the rest) or
/// NonGenericError. Supports 3 <= n <= 16.
Linkage make_linkage(std::vector<Rational> lengths);

std::vector<Rational> parse_lengths(std::string_view text);
std::string format_lengths(std::span<const Rational> lengths);

/// Length list that may contain the symbolic token `eps`, e.g. `1,1,eps,eps,1`.
class LengthSpec {
 public:
  static LengthSpec parse(std::string_view text);

  bool has_epsilon() const noexcept;
  std::vector<Rational> instantiate(const Rational& epsilon) const;
  /// Display form with `ε` in place of the symbol, e.g. `(1,1,ε,ε,1)`.
  std::string display() const;
  std::string to_string() const;

 private:
  struct Term {
    Rational value;
    bool epsilon = false;
  };
  std::vector<Term> terms_;
};

inline const Rational kDefaultEpsilon{1, 100};

struct StabilityReport {
  bool stable = false;
  std::string detail;
};

/// Instantiates `spec` at `epsilon` and at `epsilon/10` and compares the
/// admissible-subset signatures. A construction failure at either value is
/// reported as unstable.
StabilityReport check_epsilon_stability(const LengthSpec& spec, const Rational& epsilon);

}  // namespace linkspace
