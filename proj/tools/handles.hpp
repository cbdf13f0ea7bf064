/*
 * This source file is part of the skin project.
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

// Thin RAII layer over the C API for the command-line tool.

#ifndef SKIN_TOOLS_HANDLES_HPP
#define SKIN_TOOLS_HANDLES_HPP

#include <complex>
#include <memory>
#include <stdexcept>
#include <string>

#include "skin/skin.h"

namespace skin::cli {

using cplx = std::complex<double>;

class ApiFailure : public std::runtime_error {
 public:
  ApiFailure(skin_status status, const std::string& what)
      : std::runtime_error(what), status_(status) {}
  skin_status status() const noexcept { return status_; }

 private:
  skin_status status_;
};

inline void check(skin_status s) {
  if (s != SKIN_OK) throw ApiFailure(s, skin_last_error());
}

template <typename T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const noexcept { Destroy(p); }
};

using Params = std::unique_ptr<skin_params, Deleter<skin_params, skin_params_destroy>>;
using Spectrum =
    std::unique_ptr<skin_spectrum, Deleter<skin_spectrum, skin_spectrum_destroy>>;
using Boundary =
    std::unique_ptr<skin_boundary, Deleter<skin_boundary, skin_boundary_destroy>>;
using Solution =
    std::unique_ptr<skin_solution, Deleter<skin_solution, skin_solution_destroy>>;

inline cplx to_cplx(const double v[2]) { return {v[0], v[1]}; }

}  // namespace skin::cli

#endif  // SKIN_TOOLS_HANDLES_HPP
