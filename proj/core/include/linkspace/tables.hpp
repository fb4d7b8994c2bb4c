#pragma once

#include <string>
#include <vector>

#include "linkspace/linkage.hpp"

namespace linkspace {

/// One of the six generic pentagon types with the expected moduli space.
struct Representative {
  LengthSpec spec;
  std::string classification;
  std::size_t components;
  long euler_characteristic;
};

/// (1,1,1,1,3) sphere, (1,1,1,ε,2) torus, (2,2,1,1,3) genus 2,
/// (1,1,ε,ε,1) two tori, (2,1,1,1,2) genus 3, (1,1,1,1,1) genus 4.
const std::vector<Representative>& pentagon_representatives();

/// Both admissibility tables as aligned text with "v"/"-" cells.
std::string render_tables(const Rational& epsilon = kDefaultEpsilon);

struct VerifyLine {
  std::string linkage;
  bool passed = false;
  std::string message;
};

struct VerifyResult {
  std::vector<VerifyLine> lines;

  bool all_passed() const;
  std::string render() const;
};

/// Classifies every representative (concurrently, reported in input order)
/// and compares classification, component count and Euler characteristic.
/// Also fails a row whose combinatorics change between ε and ε/10.
VerifyResult verify_all(const std::vector<Representative>& expected, const Rational& epsilon = kDefaultEpsilon);

}  // namespace linkspace
