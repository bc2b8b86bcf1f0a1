/*
 * Copyright 2026 The obsalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef OBSALG_ERROR_HPP
#define OBSALG_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace obsalg {

/// A table failed one of the effect-algebra axioms.
///
/// `axiom` is one of "commutativity", "associativity", "complement",
/// "zero-one", "functional", "structure"; `witness` names the offending elements.
class AxiomViolation : public std::invalid_argument {
public:
  AxiomViolation(std::string axiom, std::vector<std::string> witness, const std::string& what)
      : std::invalid_argument(what), axiom_(std::move(axiom)), witness_(std::move(witness)) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

private:
  std::string axiom_;
  std::vector<std::string> witness_;
};

/// Element or observable used with an algebra it does not belong to.
class AlgebraMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Operation needs a structural property the algebra lacks (lattice, MV,
/// distributivity, sharpness).
class UnsupportedAlgebra : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Sum requested on an algebra without the countable distributive laws.
class DistributivityRequired : public UnsupportedAlgebra {
public:
  using UnsupportedAlgebra::UnsupportedAlgebra;
};

/// Invalid spectral resolution. `condition` is "monotonicity", "normalization"
/// or "shape".
class ResolutionError : public std::invalid_argument {
public:
  ResolutionError(std::string condition, const std::string& what)
      : std::invalid_argument(what), condition_(std::move(condition)) {}
  const std::string& condition() const noexcept { return condition_; }

private:
  std::string condition_;
};

/// Invalid discrete observable. `prefix` is the number of leading atoms whose
/// masses were summable before the failure.
class ObservableError : public std::invalid_argument {
public:
  ObservableError(std::size_t prefix, const std::string& what)
      : std::invalid_argument(what), prefix_(prefix) {}
  std::size_t prefix() const noexcept { return prefix_; }

private:
  std::size_t prefix_;
};

}  // namespace obsalg

#endif  // OBSALG_ERROR_HPP
