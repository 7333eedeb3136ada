/* Copyright 2026 The qmarkov Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <Eigen/QR>

#include "qmarkov/lindblad.hpp"

// Linear least-squares fits of the generator parameterization against
// derived representations. Internal to the library.
namespace qmarkov::detail {

struct LinearFit {
  RealMatrix design;
  Eigen::ColPivHouseholderQR<RealMatrix> qr;
};

struct FitResult {
  RealVector x;
  double residual;
};

const LinearFit& affine_fit(const OperatorBasis& basis);
const LinearFit& superoperator_fit(const OperatorBasis& basis);

RealVector flatten(const AffineRep& rep);
RealVector flatten(const ComplexMatrix& m);

FitResult solve(const LinearFit& fit, const RealVector& y);

}  // namespace qmarkov::detail
