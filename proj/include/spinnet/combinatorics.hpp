#pragma once

#include "spinnet/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace spinnet {

/// True when a, b, c >= 0, a + b + c is even and each is at most the sum of
/// the other two.
bool is_admissible(long a, long b, long c) noexcept;

/// A triple of strand labels that is known to be admissible. The only way to
/// build one is through make() or try_make(), so holders never re-check.
class AdmissibleTriple {
public:
  static AdmissibleTriple make(int a, int b, int c);  // throws DomainError
  static std::optional<AdmissibleTriple> try_make(int a, int b, int c) noexcept;

  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  int c() const noexcept { return c_; }
  int operator[](int i) const { return i == 0 ? a_ : i == 1 ? b_ : c_; }

  int alpha() const noexcept { return (-a_ + b_ + c_) / 2; }
  int beta() const noexcept { return (a_ - b_ + c_) / 2; }
  int gamma() const noexcept { return (a_ + b_ - c_) / 2; }
  int delta() const noexcept { return (a_ + b_ + c_) / 2; }

  friend auto operator<=>(const AdmissibleTriple&, const AdmissibleTriple&) = default;

private:
  AdmissibleTriple(int a, int b, int c) : a_(a), b_(b), c_(c) {}
  int a_, b_, c_;
};

/// "abc" when every label is a single digit, "(a,b,c)" otherwise.
std::string label(const AdmissibleTriple& t);

struct StrandNumbers {
  int alpha, beta, gamma, delta;
};
StrandNumbers strand_numbers(const AdmissibleTriple& t) noexcept;

/// Admissible c for fixed (a, b), largest first: a+b, a+b-2, ..., |a-b|.
std::vector<int> cg_range(int a, int b);

/// Every admissible triple with a + b + c = 2*delta, sorted ascending.
std::vector<AdmissibleTriple> triples_with_delta(int delta);
/// Every admissible triple with delta at most max_delta.
std::vector<AdmissibleTriple> triples_up_to(int max_delta);

/// n!, memoized for n below the table size, computed directly above it.
Integer factorial(int n);
/// Size of the memo table (256 unless changed before first use).
int factorial_cache_size() noexcept;
void set_factorial_cache_size(int n);

/// C(n, k); zero outside 0 <= k <= n.
Integer binomial(int n, int k);

/// Theta(a,b,c) = alpha! beta! gamma! (delta+1)! / (a! b! c!).
Rational theta(const AdmissibleTriple& t);
Rational theta(int a, int b, int c);  // throws DomainError when inadmissible

/// Loop value of a c-strand symmetrizer: c + 1.
Rational delta_dim(int c);

}  // namespace spinnet
