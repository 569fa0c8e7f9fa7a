#pragma once

#include "toda/lie_data.hpp"
#include "toda/rational.hpp"

namespace toda {

// Algebra, rank and singular-source strengths, with everything derived from
// them. C_n and B_n are carried as the symmetric A_{k-1} system: gamma_tilde
// is the palindromic extension of gamma and alpha_tilde = A_{k-1}^{-1} gamma_tilde.
class TodaConfig {
 public:
  // Throws ConfigError unless gamma has rank entries, each > -1.
  TodaConfig(AlgebraType algebra, RationalVector gamma);

  const AlgebraType& algebra() const { return algebra_; }
  Family family() const { return algebra_.family; }
  int rank() const { return algebra_.rank; }
  int k() const { return k_; }

  const RationalVector& gamma() const { return gamma_; }
  // alpha = a^{-1} gamma with the algebra's own Cartan matrix.
  const RationalVector& alpha() const { return alpha_; }
  // Length k-1, indexed 0..k-2 for the A-side indices 1..k-1.
  const RationalVector& gamma_tilde() const { return gamma_tilde_; }
  const RationalVector& mu_tilde() const { return mu_tilde_; }
  const RationalVector& alpha_tilde() const { return alpha_tilde_; }

  // A_{k-1}, the system the configuration is realized in.
  AlgebraType a_side() const { return {Family::A, k_ - 1}; }

 private:
  AlgebraType algebra_;
  int k_;
  RationalVector gamma_;
  RationalVector alpha_;
  RationalVector gamma_tilde_;
  RationalVector mu_tilde_;
  RationalVector alpha_tilde_;
};

}  // namespace toda
