/**
 * Copyright 2026 The cogrsf Authors
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

#pragma once

#include "cogrsf/radar_model.hpp"
#include "cogrsf/sparse_recovery.hpp"

namespace cogrsf {

/// Support-restricted dictionary. When `normalized` is set, A = Phi_Lambda / sqrt(N)
/// and every diagonal entry of A^H A is one.
struct SubDictionary {
  CMatrix A;
  bool normalized = true;

  std::size_t columns() const { return static_cast<std::size_t>(A.cols()); }
  CMatrix gram() const { return A.adjoint() * A; }
};

SubDictionary sub_dictionary(const CMatrix& dict, const SupportSet& support, bool normalized);

/// Builds A directly from codes without forming the whole dictionary.
SubDictionary sub_dictionary(std::span<const double> codes, const SupportSet& support,
                             const RangeDopplerGrid& grid, const RadarParams& params,
                             bool normalized);

/// tr((A^H A)^{-1}); +infinity when the Gram matrix is numerically singular
/// (smallest eigenvalue below 1e-12 * tr(A^H A)).
double crb_objective(const SubDictionary& sub);

/// tr(A^H A A^H A), the sum of squared Gram eigenvalues.
double ls_objective(const SubDictionary& sub);

/// sigma2 * tr((Phi_Lambda^H Phi_Lambda)^{-1}) for the unscaled columns, whichever
/// scaling `sub` carries.
double crb_mse_bound(const SubDictionary& sub, double sigma2);

}  // namespace cogrsf
