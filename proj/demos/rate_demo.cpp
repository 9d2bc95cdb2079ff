// Copyright 2026 The entrate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Walks through one mixing ensemble and one entangling state: rates, the
// optimal witness Hamiltonian, and the bounds it is compared against.

#include <cmath>
#include <iostream>

#include "entrate/entrate.hpp"

int main() {
  using namespace entrate;

  // X = 0.1 |+><+|, Y = diag(0.9, 0.1).
  const double s = 1.0 / std::sqrt(2.0);
  Vector plus(2);
  plus << s, s;
  const DensityOperator rho1 = DensityOperator::pure(plus);
  const HermitianOperator y = HermitianOperator::diagonal({0.9, 0.1});
  const DensityOperator rho2((1.0 / 0.9) * (y - 0.1 * rho1.op()));
  const Ensemble2 e(0.1, rho1, rho2);

  const ScalarFunction ln = ScalarFunction::log();
  const MaxMixingRate best = max_mixing_rate(e, ln);
  const double lambda = mixing_rate(e, best.h_opt, EntropySpec::von_neumann());
  const double fd = rate_finite_difference(e, best.h_opt, EntropySpec::von_neumann());
  const ClassicBounds cb = classic_bounds(e.p());
  std::cout << "mixing ensemble p = " << format_number(e.p()) << "\n"
            << "  ||[X, ln Y]||_1          = " << format_number(best.value) << "\n"
            << "  rate under H_opt         = " << format_number(lambda) << " (finite difference "
            << format_number(fd) << ")\n"
            << "  9 p ln(1/p)              = " << format_number(cb.sim9.value) << "\n"
            << "  4 sqrt(p(1-p))           = " << format_number(cb.lv.value) << "\n"
            << "  commutator bound (min)   = " << format_number(theorem_bound(e.p(), ln).min) << "\n";

  Rng rng(2026);
  const StateVector psi = sample_pure_state({2, 2, 2, 2}, rng);
  const HermitianOperator h = normalize_operator_norm(sample_hermitian(4, rng));
  const BravyiEmbedding emb = bravyi_embedding(psi);
  std::cout << "entangling state, layout 2x2x2x2, d_B = 2\n";
  for (const EntropySpec& spec : {EntropySpec::von_neumann(), EntropySpec::renyi(0.5), EntropySpec::tsallis(2.0)}) {
    std::cout << "  " << spec.name() << " rate = " << format_number(entangling_rate(psi, h, spec)) << "\n";
  }
  std::cout << "  embedded mixing rate / p = "
            << format_number(mixing_rate(emb.ensemble, embed(h, 2, 1), EntropySpec::von_neumann()) / emb.p) << "\n"
            << "  18 ln d_B                = " << format_number(18.0 * std::log(2.0)) << "\n"
            << "  Tsallis q=2 dim bound    = " << format_number(tsallis_dim_bound(2, 2.0).value) << "\n";
  return 0;
}
