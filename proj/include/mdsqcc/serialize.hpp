/*
   Copyright 2026 The mdsqcc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// JSON fragments for matrices and polynomial generators over F_{q^2}. Every
// field element is written as its coordinate vector over F_p, so a fragment
// can be read back with the tower's defining polynomials alone.

#ifndef MDSQCC_SERIALIZE_HPP
#define MDSQCC_SERIALIZE_HPP

#include "conv.hpp"
#include "gf.hpp"
#include "json.hpp"
#include "matrix.hpp"

namespace mdsqcc::serialize {

inline nlohmann::ordered_json tower_json(const gf::FieldTower& tower) {
  return {{"p", tower.p()}, {"e", tower.e()}, {"irreducibles", tower.defining_polynomials()}};
}

/// Rows of coordinate vectors.
inline nlohmann::ordered_json matrix_json(const gf::QuadField& f, const Matrix<gf::Fq2>& m) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(f.coords(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Entries row-major, each a coefficient list in increasing D-degree.
inline nlohmann::ordered_json generator_json(const gf::QuadField& f, const conv::PolyGenerator& g) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < g.rows; ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < g.cols; ++c) {
      auto entry = nlohmann::ordered_json::array();
      for (const auto& x : g.at(r, c).coeffs) entry.push_back(f.coords(x));
      row.push_back(std::move(entry));
    }
    rows.push_back(std::move(row));
  }
  return {{"rows", g.rows}, {"cols", g.cols}, {"row_degrees", g.row_degrees},
          {"memory", g.memory}, {"degree", g.degree}, {"entries", std::move(rows)}};
}

/// Inverse of QuadField::coords.
inline gf::Fq2 element_from_coords(const gf::QuadField& f, const std::vector<std::uint32_t>& v) {
  const auto& base = f.base();
  const std::size_t e = base.degree();
  if (v.size() != 2 * e) throw PreconditionError("coordinate vector has the wrong length");
  auto digits = [&](std::size_t off) {
    std::uint64_t idx = 0;
    for (std::size_t t = e; t-- > 0;) idx = idx * base.characteristic() + v[off + t];
    return base.from_index(idx);
  };
  return f.make(digits(0), digits(e));
}

}  // namespace mdsqcc::serialize

#endif  // MDSQCC_SERIALIZE_HPP
