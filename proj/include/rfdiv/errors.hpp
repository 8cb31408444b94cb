#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rfdiv {

using Int = mpz_class;
using Rational = mpq_class;

/// A violated precondition. `module()` names the library module that raised it.
class DomainError : public std::domain_error {
 public:
  DomainError(std::string module, const std::string& what)
      : std::domain_error(what), module_(std::move(module)) {}

  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

/// Factorization gave up before splitting `residual` into primes.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::string module, Int residual, const std::string& what)
      : std::runtime_error(what), module_(std::move(module)), residual_(std::move(residual)) {}

  const std::string& module() const noexcept { return module_; }
  const Int& residual() const noexcept { return residual_; }

 private:
  std::string module_;
  Int residual_;
};

}  // namespace rfdiv
