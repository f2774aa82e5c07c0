#pragma once
/* JSON round-tripping for tensors. Schema:
     {"format": 1, "D": int, "degree": int,
      "terms": [{"indices": [..], "exponents": [..], "coeff": "p/q"}, ..]}
   Coefficients travel as exact rational strings in lowest terms with a
   positive denominator. Output is deterministic: terms in canonical order,
   fixed key order, two-space indentation. A missing "format" reads as 1. */

#include <string>

#include "ncomplex/tensor.hpp"

namespace ncx {

std::string tensor_to_json(const PolyTensor& T);

// strict validation; errors carry the offending path ("terms[3].coeff: ...")
PolyTensor tensor_from_json(const std::string& text);

PolyTensor load_tensor(const std::string& path);
void store_tensor(const std::string& path, const PolyTensor& T);

}  // namespace ncx
