#include "linkspace/linkage.hpp"

#include <algorithm>

namespace linkspace {

namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) throw Error(ErrorCode::ParseError, "empty token in length list '" + std::string(text) + "'");
    out.push_back(token);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

Rational Linkage::subset_sum(Subset s) const {
  Rational sum;
  for (int e : elements(s & ground_set())) sum += length(e);
  return sum;
}

bool Linkage::is_admissible_part(Subset s) const {
  if (s == 0) throw Error(ErrorCode::EmptySubset, "admissibility of the empty set");
  if ((s & ~ground_set()) != 0) {
    throw Error(ErrorCode::GroundSetMismatch, subset_to_string(s) + " is not a subset of {1.." + std::to_string(n()) + "}");
  }
  return admissible_[s];
}

bool Linkage::is_admissible_partition(std::span<const Subset> parts) const {
  Subset seen = 0;
  for (Subset p : parts) {
    if (p == 0 || (p & seen) != 0 || (p & ~ground_set()) != 0) {
      throw Error(ErrorCode::NotAPartition, "parts overlap, are empty or leave the ground set");
    }
    seen |= p;
  }
  if (seen != ground_set()) throw Error(ErrorCode::NotAPartition, "parts do not cover the ground set");
  return std::all_of(parts.begin(), parts.end(), [this](Subset p) { return admissible_[p]; });
}

std::string Linkage::to_string() const { return format_lengths(lengths_); }

Linkage make_linkage(std::vector<Rational> lengths) {
  const auto n = lengths.size();
  if (n < 3 || n > static_cast<std::size_t>(kMaxGroundSize)) {
    throw Error(ErrorCode::UnsupportedArity, "linkage needs 3 to 16 edges, got " + std::to_string(n));
  }
  Rational total;
  for (std::size_t i = 0; i < n; ++i) {
    if (!lengths[i].is_positive()) {
      throw Error(ErrorCode::NonPositiveLength, "l_" + std::to_string(i + 1) + " = " + lengths[i].to_string());
    }
    total += lengths[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (lengths[i] > total - lengths[i]) {
      throw Error(ErrorCode::ViolatesPolygonInequality,
                  "l_" + std::to_string(i + 1) + " = " + lengths[i].to_string() + " exceeds the sum of the others");
    }
  }

  const Subset count = Subset{1} << n;
  std::vector<Rational> sums(count);
  std::vector<bool> admissible(count, false);
  const Subset last = element_bit(static_cast<int>(n));
  for (Subset s = 1; s < count; ++s) {
    const int low = std::countr_zero(s);
    sums[s] = sums[s & (s - 1)] + lengths[static_cast<std::size_t>(low)];
    const Rational doubled = sums[s] + sums[s];
    if (doubled == total && (s & last) != 0 && s != count - 1) {
      throw NonGenericError(s, "subset " + subset_to_string(s) + " has length exactly half the perimeter " +
                                   total.to_string());
    }
    admissible[s] = doubled <= total;
  }

  Linkage linkage;
  linkage.lengths_ = std::move(lengths);
  linkage.total_ = total;
  linkage.admissible_ = std::move(admissible);
  return linkage;
}

std::vector<Rational> parse_lengths(std::string_view text) {
  std::vector<Rational> out;
  for (auto token : split_commas(text)) out.push_back(Rational::parse(token));
  return out;
}

std::string format_lengths(std::span<const Rational> lengths) {
  std::string out;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (i != 0) out += ',';
    out += lengths[i].to_string();
  }
  return out;
}

LengthSpec LengthSpec::parse(std::string_view text) {
  LengthSpec spec;
  for (auto token : split_commas(text)) {
    if (token == "eps") {
      spec.terms_.push_back({Rational{}, true});
    } else {
      spec.terms_.push_back({Rational::parse(token), false});
    }
  }
  return spec;
}

bool LengthSpec::has_epsilon() const noexcept {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.epsilon; });
}

std::vector<Rational> LengthSpec::instantiate(const Rational& epsilon) const {
  std::vector<Rational> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.epsilon ? epsilon : t.value);
  return out;
}

std::string LengthSpec::display() const {
  std::string out = "(";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i != 0) out += ',';
    out += terms_[i].epsilon ? std::string("ε") : terms_[i].value.to_string();
  }
  return out + ")";
}

std::string LengthSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i != 0) out += ',';
    out += terms_[i].epsilon ? std::string("eps") : terms_[i].value.to_string();
  }
  return out;
}

StabilityReport check_epsilon_stability(const LengthSpec& spec, const Rational& epsilon) {
  if (!spec.has_epsilon()) return {true, "no epsilon terms"};
  const Rational smaller = epsilon / Rational(10);
  std::optional<Linkage> coarse;
  std::optional<Linkage> fine;
  try {
    coarse = make_linkage(spec.instantiate(epsilon));
  } catch (const Error& e) {
    return {false, "eps=" + epsilon.to_string() + ": " + e.what()};
  }
  try {
    fine = make_linkage(spec.instantiate(smaller));
  } catch (const Error& e) {
    return {false, "eps=" + smaller.to_string() + ": " + e.what()};
  }
  const auto& a = coarse->admissible_subsets();
  const auto& b = fine->admissible_subsets();
  for (Subset s = 1; s < a.size(); ++s) {
    if (a[s] != b[s]) {
      return {false, "admissibility of " + subset_to_string(s) + " changes between eps=" + epsilon.to_string() +
                         " and eps=" + smaller.to_string()};
    }
  }
  return {true, "admissibility unchanged at eps=" + smaller.to_string()};
}

}  // namespace linkspace
