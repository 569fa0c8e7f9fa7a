#include "toda/config.hpp"

#include "toda/errors.hpp"

namespace toda {

TodaConfig::TodaConfig(AlgebraType algebra, RationalVector gamma)
    : algebra_(algebra), k_(algebra.k()), gamma_(std::move(gamma)) {
  algebra_.validate();
  if (static_cast<int>(gamma_.size()) != algebra_.rank)
    throw ConfigError(algebra_.name() + " needs " + std::to_string(algebra_.rank) + " gamma values, got " +
                      std::to_string(gamma_.size()));
  for (const auto& g : gamma_)
    if (g <= -1) throw ConfigError("gamma values must be > -1, got " + to_string(g));

  alpha_ = alpha_from_gamma(algebra_, gamma_);
  for (int m = 1; m < k_; ++m) gamma_tilde_.push_back(gamma_[fold_index(algebra_, m) - 1]);
  for (const auto& g : gamma_tilde_) mu_tilde_.push_back(g + 1);
  alpha_tilde_ = alpha_from_gamma(a_side(), gamma_tilde_);
}

}  // namespace toda
