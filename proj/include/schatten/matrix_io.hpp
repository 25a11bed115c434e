// SPDX-License-Identifier: Apache-2.0
#ifndef SCHATTEN_MATRIX_IO_HPP
#define SCHATTEN_MATRIX_IO_HPP

#include <string>

#include <json.hpp>

#include "schatten/complex_matrix.hpp"

namespace schatten {

// Shortest-faithful decimal for a double via "%.17g"; every number that
// lands in a CSV or JSON report goes through here so that re-runs are
// byte-identical.
std::string fmt_g17(double v);

// Square-matrix JSON fixture format: {"n": int, "re": [[...]], "im": [[...]]}.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

// Writer used for files on disk: emits every entry at full precision
// (17 significant digits).
std::string matrix_json_text(const ComplexMatrix& m);

// 64-bit FNV-1a over the canonical (sorted-key) dump of a JSON value;
// names report files so distinct parameter sets never collide.
std::string parameter_hash(const nlohmann::json& j);

} // namespace schatten

#endif
